#include "sgps/varieties.hpp"

#include <algorithm>
#include <numeric>

#include "census.hpp"

namespace sgps {

using detail::Mask;
using detail::member;

namespace {

IntList table_elements(const Mask& mask) {
    IntList out;
    for (std::size_t z = 0; z < mask.size(); ++z)
        if (mask[z]) out.push_back(static_cast<Int>(z));
    return out;
}

// Each test only needs elements below the end of the table: every sum that
// reaches past it is a member.
bool mask_is_med(const Mask& mask) {
    const Int m = detail::mask_multiplicity(mask);
    return static_cast<Int>(detail::mask_generators(mask).size()) == m;
}

bool mask_is_arf(const Mask& mask) {
    const IntList small = table_elements(mask);
    for (std::size_t i = 0; i < small.size(); ++i)
        for (std::size_t j = 0; j <= i; ++j)
            for (std::size_t k = 0; k <= j; ++k)
                if (!member(mask, small[i] + small[j] - small[k])) return false;
    return true;
}

bool mask_is_saturated(const Mask& mask) {
    Int d = 0;
    for (std::size_t z = 1; z < mask.size(); ++z) {
        if (!mask[z]) continue;
        d = std::gcd(d, static_cast<Int>(z));
        if (!member(mask, static_cast<Int>(z) + d)) return false;
    }
    return true;
}

bool mask_in(Variety v, const Mask& mask) {
    switch (v) {
    case Variety::MED: return mask_is_med(mask);
    case Variety::Arf: return mask_is_arf(mask);
    case Variety::Saturated: return mask_is_saturated(mask);
    }
    return false;
}

// Adjoins until nothing changes. Only elements below the table end are ever
// added, so the table never needs to grow; each pass adds at least one
// element or stops, which bounds the loop by the genus.
void close_mask(Variety v, Mask& mask, Int m) {
    const Int size = static_cast<Int>(mask.size());
    auto add = [&](Int z) {
        if (z < size && !mask[static_cast<std::size_t>(z)]) {
            mask[static_cast<std::size_t>(z)] = 1;
            return true;
        }
        return false;
    };
    for (bool changed = true; changed;) {
        changed = false;
        const IntList small = table_elements(mask);
        switch (v) {
        case Variety::MED:
            for (Int x : small)
                for (Int y : small)
                    if (x > 0 && y > 0) changed |= add(x + y - m);
            break;
        case Variety::Arf:
            for (Int x : small)
                for (Int y : small)
                    for (Int z : small)
                        if (z <= y && y <= x) changed |= add(x + y - z);
            break;
        case Variety::Saturated: {
            Int d = 0;
            for (Int x : small) {
                if (x == 0) continue;
                d = std::gcd(d, x);
                changed |= add(x + d);
            }
            break;
        }
        }
    }
}

} // namespace

std::string_view variety_name(Variety v) {
    switch (v) {
    case Variety::MED: return "med";
    case Variety::Arf: return "arf";
    case Variety::Saturated: return "saturated";
    }
    return "unknown";
}

bool in_variety(Variety v, const NumericalSemigroup& s) {
    if (v == Variety::MED) return s.embedding_dimension() == s.multiplicity();
    return mask_in(v, s.membership(s.conductor()));
}

NumericalSemigroup variety_closure(Variety v, const NumericalSemigroup& s) {
    Mask mask = s.membership(s.conductor());
    close_mask(v, mask, s.multiplicity());
    return NumericalSemigroup::from_membership(std::move(mask));
}

IntList variety_min_generators(Variety v, const NumericalSemigroup& s) {
    if (!in_variety(v, s)) fail(ErrorKind::NotInVariety, "semigroup is not in the variety");
    // x is needed exactly when S \ {x} stays in the variety: otherwise the
    // closure of the other generators already produces x.
    IntList out;
    for (Int x : s.minimal_generators()) {
        if (v == Variety::MED && x == s.multiplicity()) {
            out.push_back(x);
            continue;
        }
        Mask mask = s.membership(std::max(s.conductor(), x + 1));
        mask[static_cast<std::size_t>(x)] = 0;
        const bool keeps = v == Variety::MED ? mask_is_med(mask) && detail::mask_multiplicity(mask) == s.multiplicity()
                                             : mask_in(v, mask);
        if (keeps) out.push_back(x);
    }
    return out;
}

EnumerationResult variety_enumerate_frobenius(Variety v, Int f) {
    if (v == Variety::MED) fail(ErrorKind::InvalidArgument, "MED semigroups are not enumerated by Frobenius number");
    if (f == 0 || f < -1) fail(ErrorKind::InvalidFrobenius, "no numerical semigroup has this Frobenius number");
    if (f == -1) return {NumericalSemigroup()};
    require_window(f + 2, "Frobenius number");
    // Variety tree: the parent of S != N is S u {F(S)}, which stays in the
    // variety. Children remove a variety-minimal generator above F; only
    // removals up to f can lead to Frobenius number f.
    std::vector<Mask> found;
    Mask mask(static_cast<std::size_t>(f + 2), 1);
    auto walk = [&](auto&& self, Int frob) -> void {
        if (frob == f) {
            found.push_back(mask);
            return;
        }
        for (Int x : detail::mask_generators(mask)) {
            if (x <= frob || x > f) continue;
            mask[static_cast<std::size_t>(x)] = 0;
            if (mask_in(v, mask)) self(self, x);
            mask[static_cast<std::size_t>(x)] = 1;
        }
    };
    walk(walk, -1);
    return detail::materialize(std::move(found));
}

} // namespace sgps
