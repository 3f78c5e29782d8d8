#include "sgps/ideals.hpp"

#include <algorithm>

namespace sgps {

namespace {

IntList minimalize(IntList gens, const NumericalSemigroup& s) {
    std::sort(gens.begin(), gens.end());
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    // g - g' in S forces g' < g, and a redundant g' is itself above a kept
    // generator, so comparing against kept generators is enough.
    IntList kept;
    for (Int g : gens) {
        bool redundant = false;
        for (Int h : kept)
            if (s.contains(g - h)) {
                redundant = true;
                break;
            }
        if (!redundant) kept.push_back(g);
    }
    return kept;
}

void require_same_ambient(const RelativeIdeal& a, const RelativeIdeal& b) {
    if (!(a.ambient() == b.ambient())) fail(ErrorKind::AmbientMismatch, "ideals live in different semigroups");
}

// Generators of {z >= lo : keep(z)} when keep holds for every z >= full.
// Past full + m every element is m plus an element already in the window.
template <class Pred>
RelativeIdeal from_window(Int lo, Int full, const NumericalSemigroup& s, Pred keep) {
    const Int hi = checked_add(full, s.multiplicity());
    require_window(checked_sub(hi, lo) + 1, "ideal window");
    IntList gens;
    for (Int z = lo; z <= hi; ++z)
        if (keep(z)) gens.push_back(z);
    return RelativeIdeal(std::move(gens), s);
}

} // namespace

RelativeIdeal::RelativeIdeal(IntList gens, NumericalSemigroup ambient) : ambient_(std::move(ambient)) {
    if (gens.empty()) fail(ErrorKind::EmptyInput, "an ideal needs at least one generator");
    gens_ = minimalize(std::move(gens), ambient_);
}

bool RelativeIdeal::contains(Int z) const {
    for (Int g : gens_) {
        if (g > z) break;
        if (ambient_.contains(z - g)) return true;
    }
    return false;
}

Int RelativeIdeal::frobenius() const {
    Int z = checked_add(min(), ambient_.conductor()) - 1;
    while (contains(z)) --z;
    return z;
}

IntList RelativeIdeal::small_elements() const {
    IntList out;
    const Int top = frobenius() + 1;
    for (Int z = min(); z <= top; ++z)
        if (contains(z)) out.push_back(z);
    return out;
}

IntList RelativeIdeal::apery(Int n) const {
    if (n <= 0 || !ambient_.contains(n)) fail(ErrorKind::NotInSemigroup, "modulus is not a nonzero element");
    require_window(n, "Apery modulus");
    IntList least(static_cast<std::size_t>(n), 0);
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    Int found = 0;
    for (Int z = min(); found < n; ++z) {
        const auto r = static_cast<std::size_t>(pos_mod(z, n));
        if (seen[r] || !contains(z)) continue;
        seen[r] = 1;
        least[r] = z;
        ++found;
    }
    std::sort(least.begin(), least.end());
    return least;
}

RelativeIdeal ideal(const IntList& gens, const NumericalSemigroup& s) { return RelativeIdeal(gens, s); }

RelativeIdeal ideal_sum(const RelativeIdeal& a, const RelativeIdeal& b) {
    require_same_ambient(a, b);
    IntList gens;
    for (Int x : a.generators())
        for (Int y : b.generators()) gens.push_back(checked_add(x, y));
    return RelativeIdeal(std::move(gens), a.ambient());
}

RelativeIdeal ideal_translate(const RelativeIdeal& a, Int z) {
    IntList gens;
    for (Int g : a.generators()) gens.push_back(checked_add(g, z));
    return RelativeIdeal(std::move(gens), a.ambient());
}

RelativeIdeal ideal_scale_add(const RelativeIdeal& a, Int k) {
    if (k < 0) fail(ErrorKind::InvalidArgument, "multiplier must be nonnegative");
    RelativeIdeal out({0}, a.ambient());
    for (Int i = 0; i < k; ++i) out = ideal_sum(out, a);
    return out;
}

RelativeIdeal ideal_subtract(const RelativeIdeal& a, const RelativeIdeal& b) {
    require_same_ambient(a, b);
    // z + min(b) must reach min(a); once z + min(b) passes F(a) every
    // translate of b lands inside a.
    const Int lo = checked_sub(a.min(), b.min());
    const Int full = checked_sub(a.frobenius() + 1, b.min());
    return from_window(lo, full, a.ambient(), [&](Int z) {
        for (Int g : b.generators())
            if (!a.contains(z + g)) return false;
        return true;
    });
}

RelativeIdeal ideal_union(const RelativeIdeal& a, const RelativeIdeal& b) {
    require_same_ambient(a, b);
    IntList gens = a.generators();
    gens.insert(gens.end(), b.generators().begin(), b.generators().end());
    return RelativeIdeal(std::move(gens), a.ambient());
}

RelativeIdeal ideal_intersection(const RelativeIdeal& a, const RelativeIdeal& b) {
    require_same_ambient(a, b);
    const Int lo = std::max(a.min(), b.min());
    const Int full = std::max(a.frobenius(), b.frobenius()) + 1;
    return from_window(lo, full, a.ambient(), [&](Int z) { return a.contains(z) && b.contains(z); });
}

IntList ideal_difference(const RelativeIdeal& a, const RelativeIdeal& b) {
    require_same_ambient(a, b);
    IntList out;
    for (Int z = a.min(); z <= b.frobenius(); ++z)
        if (a.contains(z) && !b.contains(z)) out.push_back(z);
    return out;
}

Int reduction_number(const RelativeIdeal& a) {
    // The sequence terminates (Lipman); the cap only guards against a bug
    // turning into an endless loop.
    const Int cap = checked_add(a.ambient().conductor(), a.ambient().multiplicity()) + 2;
    RelativeIdeal power = a;
    for (Int n = 1; n <= cap; ++n) {
        RelativeIdeal next = ideal_sum(power, a);
        if (ideal_translate(power, a.min()) == next) return n;
        power = std::move(next);
    }
    fail(ErrorKind::ResourceLimit, "reduction number search did not terminate");
}

RelativeIdeal blow_up(const RelativeIdeal& a) {
    const RelativeIdeal power = ideal_scale_add(a, reduction_number(a));
    const RelativeIdeal b = ideal_subtract(power, power);
    std::vector<char> mask(static_cast<std::size_t>(b.frobenius() + 1));
    for (std::size_t z = 0; z < mask.size(); ++z) mask[z] = b.contains(static_cast<Int>(z));
    return RelativeIdeal({0}, NumericalSemigroup::from_membership(std::move(mask)));
}

RelativeIdeal canonical_ideal(const NumericalSemigroup& s) {
    if (s.is_whole()) fail(ErrorKind::NotApplicable, "N has no canonical ideal");
    const Int f = s.frobenius();
    return from_window(0, f + 1, s, [&](Int z) { return !s.contains(f - z); });
}

RelativeIdeal maximal_ideal(const NumericalSemigroup& s) { return RelativeIdeal(s.minimal_generators(), s); }

IntList hilbert_function(const RelativeIdeal& a, Int n) {
    if (n < 0) fail(ErrorKind::InvalidArgument, "n must be nonnegative");
    const RelativeIdeal power = ideal_scale_add(a, n);
    return ideal_difference(power, ideal_sum(power, a));
}

} // namespace sgps
