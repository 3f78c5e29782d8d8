#include "sgps/irreducible.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <set>

#include "census.hpp"
#include "sgps/presentations.hpp"

namespace sgps {

namespace {

Int gcd_of(std::span<const Int> values) {
    Int d = 0;
    for (Int v : values) d = std::gcd(d, v);
    return d;
}

IntList scaled(const IntList& gens, Int d) {
    IntList out;
    for (Int g : gens) out.push_back(checked_mul(g, d));
    return out;
}

void require_frobenius(Int f) {
    if (f == 0 || f < -1) fail(ErrorKind::InvalidFrobenius, "no numerical semigroup has this Frobenius number");
}

} // namespace

bool representable(Int n, std::span<const Int> gens) {
    if (n < 0) return false;
    require_window(n + 1, "representability table");
    std::vector<char> reach(static_cast<std::size_t>(n + 1), 0);
    reach[0] = 1;
    for (Int g : gens) {
        if (g <= 0) fail(ErrorKind::InvalidArgument, "generators must be positive");
        for (Int x = g; x <= n; ++x)
            if (reach[static_cast<std::size_t>(x - g)]) reach[static_cast<std::size_t>(x)] = 1;
    }
    return reach[static_cast<std::size_t>(n)];
}

IrreducibilityProfile irreducibility_profile(const NumericalSemigroup& s) {
    const Int f = s.frobenius();
    const Int twice_genus = 2 * s.genus();
    IrreducibilityProfile p{};
    p.symmetric = twice_genus == f + 1;
    p.pseudo_symmetric = twice_genus == f + 2;
    p.irreducible = p.symmetric || p.pseudo_symmetric;
    p.almost_symmetric = twice_genus == f + type(s);
    return p;
}

std::vector<NumericalSemigroup> decompose_irreducible(const NumericalSemigroup& s) {
    if (irreducibility_profile(s).irreducible) return {s};
    // For each special gap h, climb from S u (h, inf) by adjoining the largest
    // special gap other than h until h is the only one left; a semigroup is
    // irreducible exactly when it has at most one special gap.
    std::vector<NumericalSemigroup> parts;
    for (Int h : special_gaps(s)) {
        NumericalSemigroup t = NumericalSemigroup::from_membership(s.membership(h + 1));
        for (;;) {
            IntList sg = special_gaps(t);
            sg.erase(std::remove(sg.begin(), sg.end(), h), sg.end());
            if (sg.empty()) break;
            t = add_gap(t, sg.back());
        }
        if (std::find(parts.begin(), parts.end(), t) == parts.end()) parts.push_back(t);
    }
    census_sort(parts);
    for (std::size_t i = 0; i < parts.size() && parts.size() > 1;) {
        std::optional<NumericalSemigroup> rest;
        for (std::size_t j = 0; j < parts.size(); ++j)
            if (j != i) rest = rest ? intersection(*rest, parts[j]) : parts[j];
        if (*rest == s) parts.erase(parts.begin() + static_cast<std::ptrdiff_t>(i));
        else ++i;
    }
    return parts;
}

EnumerationResult enumerate_irreducible(Int f) {
    require_frobenius(f);
    if (f == -1) return {NumericalSemigroup()};
    require_window(f + 1, "Frobenius number");
    // An irreducible S with Frobenius f is fixed by L = S n [1, (f-1)/2]:
    // for f/2 < x < f, x is in S iff f - x is not (and f/2 is a gap when f is
    // even). L must be closed under sums that stay in range, which the
    // ascending choice below enforces; the full table is checked at the end.
    const Int half = (f - 1) / 2;
    detail::Mask mask(static_cast<std::size_t>(f + 1), 0);
    mask[0] = 1;
    std::vector<detail::Mask> found;
    auto complete_and_check = [&]() {
        for (Int x = half + 1; x < f; ++x)
            mask[static_cast<std::size_t>(x)] = 2 * x != f && !mask[static_cast<std::size_t>(f - x)];
        bool closed = true;
        for (Int x = 1; x < f && closed; ++x) {
            if (!mask[static_cast<std::size_t>(x)]) continue;
            for (Int y = x; x + y <= f && closed; ++y)
                if (mask[static_cast<std::size_t>(y)] && !mask[static_cast<std::size_t>(x + y)]) closed = false;
        }
        if (closed) found.push_back(mask);
        for (Int x = half + 1; x < f; ++x) mask[static_cast<std::size_t>(x)] = 0;
    };
    auto choose = [&](auto&& self, Int x) -> void {
        if (x > half) {
            complete_and_check();
            return;
        }
        bool forced = false;
        for (Int a = 1; 2 * a <= x && !forced; ++a)
            if (mask[static_cast<std::size_t>(a)] && mask[static_cast<std::size_t>(x - a)]) forced = true;
        mask[static_cast<std::size_t>(x)] = 1;
        self(self, x + 1);
        mask[static_cast<std::size_t>(x)] = 0;
        if (!forced) self(self, x + 1);
    };
    choose(choose, 1);
    return detail::materialize(std::move(found));
}

std::vector<GluingSplit> gluing_splits(const NumericalSemigroup& s) {
    const auto& gens = s.minimal_generators();
    const std::size_t e = gens.size();
    std::vector<GluingSplit> out;
    if (e < 2) return out;
    if (e > 24) fail(ErrorKind::ResourceLimit, "too many generators to split");
    // Bit 0 (the multiplicity) always goes to A1.
    for (std::uint32_t bits = 1; bits < (1u << e) - 1; bits += 2) {
        IntList a1, a2;
        for (std::size_t i = 0; i < e; ++i) ((bits >> i) & 1u ? a1 : a2).push_back(gens[i]);
        const Int d1 = gcd_of(a1), d2 = gcd_of(a2);
        if (d1 == 1 || d2 == 1) continue;
        const Int prod = checked_mul(d1, d2);
        if (representable(prod, a1) && representable(prod, a2)) out.emplace_back(std::move(a1), std::move(a2));
    }
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

// gens: pairwise distinct positive integers with gcd 1 forming a minimal
// system. Free means N, or a gluing d * <A / d> + n * N along some
// generator n with <A / d> free.
bool is_free(const IntList& gens) {
    if (gens.size() <= 1) return true;
    for (std::size_t i = 0; i < gens.size(); ++i) {
        IntList rest;
        for (std::size_t j = 0; j < gens.size(); ++j)
            if (j != i) rest.push_back(gens[j]);
        const Int d = gcd_of(rest);
        if (d == 1) continue;
        for (Int& r : rest) r /= d;
        if (representable(gens[i], rest) && is_free(rest)) return true;
    }
    return false;
}

bool is_telescopic(const IntList& gens) {
    Int previous = gens.front();
    for (std::size_t k = 1; k < gens.size(); ++k) {
        const Int d = std::gcd(previous, gens[k]);
        const Int target = checked_mul(gens[k], previous / d);
        if (!representable(target, std::span<const Int>(gens.data(), k))) return false;
        previous = d;
    }
    return true;
}

} // namespace

CompleteIntersectionProfile ci_profile(const NumericalSemigroup& s) {
    const auto& gens = s.minimal_generators();
    CompleteIntersectionProfile p{};
    p.complete_intersection =
        static_cast<Int>(minimal_presentation(s).size()) == s.embedding_dimension() - 1;
    p.telescopic = is_telescopic(gens);
    p.free = is_free(gens);
    return p;
}

namespace {

bool in_family(const NumericalSemigroup& s, Family family) {
    const auto p = ci_profile(s);
    switch (family) {
    case Family::CompleteIntersection: return p.complete_intersection;
    case Family::Free: return p.free;
    case Family::Telescopic: return p.telescopic;
    case Family::AlmostSymmetric: return irreducibility_profile(s).almost_symmetric;
    }
    return false;
}

bool is_nonminimal_element(const NumericalSemigroup& t, Int x) {
    const auto& gens = t.minimal_generators();
    return t.contains(x) && !std::binary_search(gens.begin(), gens.end(), x);
}

class GluingCensus {
public:
    explicit GluingCensus(Family family) : family_(family) {}

    const std::vector<NumericalSemigroup>& at(Int f) {
        if (auto it = memo_.find(f); it != memo_.end()) return it->second;
        std::set<IntList> seen;
        std::vector<NumericalSemigroup> out;
        auto keep = [&](const IntList& gens) {
            auto s = NumericalSemigroup::from_generators(gens);
            if (seen.insert(s.minimal_generators()).second) out.push_back(std::move(s));
        };
        if (f == -1) keep({1});
        else if (family_ == Family::CompleteIntersection) glue_two(f, keep);
        else glue_line(f, keep);
        census_sort(out);
        return memo_.emplace(f, std::move(out)).first->second;
    }

private:
    // S = d T + n N with F(S) = d F(T) + (d - 1) n, n in T \ msg(T) and
    // gcd(d, n) = 1. Telescopic chains additionally put n above d * max msg(T).
    template <class Keep>
    void glue_line(Int f, Keep& keep) {
        for (Int d = 2; d <= f + 2; ++d) {
            for (Int ft = -1; d * ft + 2 * (d - 1) <= f; ++ft) {
                if (ft == 0) continue;
                const Int rem = f - d * ft;
                if (rem % (d - 1) != 0) continue;
                const Int n = rem / (d - 1);
                if (n < 2 || std::gcd(n, d) != 1) continue;
                for (const auto& t : at(ft)) {
                    if (!is_nonminimal_element(t, n)) continue;
                    if (family_ == Family::Telescopic && n <= d * t.minimal_generators().back()) continue;
                    IntList gens = scaled(t.minimal_generators(), d);
                    gens.push_back(n);
                    keep(gens);
                }
            }
        }
    }

    // S = d1 S1 + d2 S2 with F(S) = d1 F1 + d2 F2 + d1 d2, d1 in S2 \ msg(S2),
    // d2 in S1 \ msg(S1) and gcd(d1, d2) = 1.
    template <class Keep>
    void glue_two(Int f, Keep& keep) {
        for (Int d1 = 2; (d1 - 1) <= f + 1; ++d1) {
            for (Int d2 = 2; (d1 - 1) * (d2 - 1) <= f + 1; ++d2) {
                if (std::gcd(d1, d2) != 1) continue;
                const Int rest = f - d1 * d2;
                for (Int f1 = -1; d1 * f1 - d2 <= rest; ++f1) {
                    if (f1 == 0) continue;
                    const Int r2 = rest - d1 * f1;
                    if (r2 % d2 != 0) continue;
                    const Int f2 = r2 / d2;
                    if (f2 < -1 || f2 == 0) continue;
                    for (const auto& s1 : at(f1)) {
                        if (!is_nonminimal_element(s1, d2)) continue;
                        for (const auto& s2 : at(f2)) {
                            if (!is_nonminimal_element(s2, d1)) continue;
                            IntList gens = scaled(s1.minimal_generators(), d1);
                            for (Int g : scaled(s2.minimal_generators(), d2)) gens.push_back(g);
                            keep(gens);
                        }
                    }
                }
            }
        }
    }

    Family family_;
    std::map<Int, std::vector<NumericalSemigroup>> memo_;
};

} // namespace

EnumerationResult enumerate_family(Int f, Family family, FamilyMethod method) {
    require_frobenius(f);
    if (f == -1) return {NumericalSemigroup()};
    if (family == Family::AlmostSymmetric) {
        require_window(f + 2, "Frobenius number");
        std::function<detail::CollectSink()> make = [f] {
            return detail::CollectSink{{}, [f](const detail::Mask& mask) {
                                           const Int t = static_cast<Int>(detail::mask_pseudo_frobenius(mask).size());
                                           return 2 * detail::mask_genus(mask) == f + t;
                                       }};
        };
        auto sinks = detail::frobenius_walk<detail::CollectSink>(
            f, [](const detail::Mask&, Int) { return true; }, make);
        std::vector<detail::Mask> all;
        for (auto& sink : sinks)
            for (auto& mask : sink.masks) all.push_back(std::move(mask));
        return detail::materialize(std::move(all));
    }
    if (method == FamilyMethod::Auto) method = f <= 40 ? FamilyMethod::Filter : FamilyMethod::Gluing;
    if (method == FamilyMethod::Gluing) return GluingCensus(family).at(f);
    // Every complete intersection is symmetric, so its Frobenius number is odd.
    EnumerationResult out;
    if (f % 2 == 0) return out;
    for (auto& s : enumerate_irreducible(f))
        if (in_family(s, family)) out.push_back(std::move(s));
    return out;
}

} // namespace sgps
