#include "sgps/constructions.hpp"

#include <algorithm>
#include <numeric>

#include "census.hpp"

namespace sgps {

namespace detail {

IntList mask_generators(const Mask& mask) {
    const Int m = mask_multiplicity(mask);
    const Int limit = mask_frobenius(mask) + m + 2;
    IntList gens;
    for (Int z = m; z < limit; ++z) {
        if (!member(mask, z)) continue;
        bool decomposes = false;
        for (Int h : gens)
            if (member(mask, z - h)) {
                decomposes = true;
                break;
            }
        if (!decomposes) gens.push_back(z);
    }
    return gens;
}

IntList mask_pseudo_frobenius(const Mask& mask) {
    const Int size = static_cast<Int>(mask.size());
    IntList out;
    for (Int z = 1; z < size; ++z) {
        if (member(mask, z)) continue;
        bool maximal = true;
        for (Int s = 1; s < size - z && maximal; ++s)
            if (member(mask, s) && !member(mask, z + s)) maximal = false;
        if (maximal) out.push_back(z);
    }
    if (out.empty()) out.push_back(-1);
    return out;
}

bool special_below_multiplicity(const Mask& mask, Int x, Int m) {
    if (!member(mask, 2 * x)) return false;
    const Int size = static_cast<Int>(mask.size());
    for (Int s = m; s < size - x; ++s)
        if (member(mask, s) && !member(mask, x + s)) return false;
    return true;
}

EnumerationResult materialize(std::vector<Mask> masks) {
    EnumerationResult out;
    out.reserve(masks.size());
    for (auto& mask : masks) out.push_back(NumericalSemigroup::from_membership(std::move(mask)));
    census_sort(out);
    return out;
}

} // namespace detail

using detail::Mask;
using detail::member;

namespace {

bool is_special_gap(const Mask& mask, Int y) {
    if (member(mask, y) || !member(mask, 2 * y)) return false;
    const Int size = static_cast<Int>(mask.size());
    for (Int s = 1; s < size - y; ++s)
        if (member(mask, s) && !member(mask, y + s)) return false;
    return true;
}

// Every minimal generator lies below F + m + 1, so a table of that size lets
// any of them be removed without growing it.
Mask table_of(const NumericalSemigroup& s, Int size) {
    return s.membership(std::max(size, s.conductor() + 1));
}

struct CountSink {
    std::uint64_t count = 0;
    std::function<bool(const Mask&)> keep;
    void operator()(const Mask& mask) {
        if (!keep || keep(mask)) ++count;
    }
};

void require_frobenius(Int f) {
    if (f == 0 || f < -1) fail(ErrorKind::InvalidFrobenius, "no numerical semigroup has this Frobenius number");
    require_window(checked_add(f, 2), "Frobenius number");
}

std::function<bool(const Mask&, Int)> allow_all() {
    return [](const Mask&, Int) { return true; };
}

} // namespace

NumericalSemigroup remove_generator(const NumericalSemigroup& s, Int g) {
    const auto& gens = s.minimal_generators();
    if (!std::binary_search(gens.begin(), gens.end(), g))
        fail(ErrorKind::NotMinimalGenerator, "not a minimal generator");
    Mask mask = table_of(s, checked_add(g, 1));
    mask[static_cast<std::size_t>(g)] = 0;
    return NumericalSemigroup::from_membership(std::move(mask));
}

NumericalSemigroup add_gap(const NumericalSemigroup& s, Int g) {
    const auto sg = special_gaps(s);
    if (!std::binary_search(sg.begin(), sg.end(), g)) fail(ErrorKind::NotSpecialGap, "not a special gap");
    Mask mask = table_of(s, 0);
    mask[static_cast<std::size_t>(g)] = 1;
    return NumericalSemigroup::from_membership(std::move(mask));
}

NumericalSemigroup intersection(const NumericalSemigroup& s, const NumericalSemigroup& t) {
    const Int size = std::max(s.conductor(), t.conductor()) + 1;
    Mask a = s.membership(size);
    const Mask b = t.membership(size);
    for (std::size_t i = 0; i < a.size(); ++i) a[i] = a[i] && b[i];
    return NumericalSemigroup::from_membership(std::move(a));
}

NumericalSemigroup quotient(const NumericalSemigroup& s, Int p) {
    if (p < 1) fail(ErrorKind::InvalidArgument, "quotient needs p >= 1");
    const Int size = s.conductor() / p + 1;
    Mask mask(static_cast<std::size_t>(size));
    for (Int x = 0; x < size; ++x) mask[static_cast<std::size_t>(x)] = s.contains(p * x);
    return NumericalSemigroup::from_membership(std::move(mask));
}

NumericalSemigroup multiple_with_tail(const NumericalSemigroup& s, Int a, Int b) {
    if (a < 2) fail(ErrorKind::InvalidArgument, "multiple needs a >= 2");
    if (b < 0) fail(ErrorKind::InvalidArgument, "tail start must be nonnegative");
    require_window(b, "tail start");
    Mask mask(static_cast<std::size_t>(b));
    for (Int x = 0; x < b; ++x) mask[static_cast<std::size_t>(x)] = x % a == 0 && s.contains(x / a);
    return NumericalSemigroup::from_membership(std::move(mask));
}

EnumerationResult oversemigroups(const NumericalSemigroup& s) {
    // T != S hangs below T \ {min(T \ S)}: that element is a minimal
    // generator of T because everything smaller in T already lies in S.
    Mask mask = s.membership(s.conductor() + 1);
    std::vector<Mask> found;
    const Int size = static_cast<Int>(mask.size());
    auto walk = [&](auto&& self, Int bound) -> void {
        found.push_back(mask);
        for (Int y = 1; y < bound; ++y) {
            if (!is_special_gap(mask, y)) continue;
            mask[static_cast<std::size_t>(y)] = 1;
            self(self, y);
            mask[static_cast<std::size_t>(y)] = 0;
        }
    };
    walk(walk, size);
    return detail::materialize(std::move(found));
}

EnumerationResult enumerate_frobenius(Int f) {
    require_frobenius(f);
    if (f == -1) return {NumericalSemigroup()};
    auto sinks = detail::frobenius_walk<detail::CollectSink>(f, allow_all(), [] { return detail::CollectSink{}; });
    std::vector<Mask> all;
    for (auto& sink : sinks)
        for (auto& mask : sink.masks) all.push_back(std::move(mask));
    return detail::materialize(std::move(all));
}

std::uint64_t count_frobenius(Int f) {
    require_frobenius(f);
    if (f == -1) return 1;
    auto sinks = detail::frobenius_walk<CountSink>(f, allow_all(), [] { return CountSink{}; });
    std::uint64_t total = 0;
    for (const auto& sink : sinks) total += sink.count;
    return total;
}

namespace {

// Genus tree: the children of T are T \ {g} for minimal generators g > F(T).
// With genus at most g_max every generator ever removed is at most
// F + m <= 3 g_max, so one table of that size serves the whole walk.
template <class Sink>
std::vector<Sink> genus_walk(Int g, const std::function<Sink()>& make) {
    if (g < 0) fail(ErrorKind::InvalidArgument, "genus must be nonnegative");
    const Int size = checked_add(checked_mul(3, g), 2);
    require_window(size, "genus");
    auto removable = [](const Mask& mask) {
        IntList out;
        const Int f = detail::mask_frobenius(mask);
        for (Int z : detail::mask_generators(mask))
            if (z > f) out.push_back(z);
        return out;
    };
    auto walk = [&](auto&& self, Mask& mask, Int depth, Sink& sink) -> void {
        if (depth == g) {
            sink(mask);
            return;
        }
        for (Int z : removable(mask)) {
            mask[static_cast<std::size_t>(z)] = 0;
            self(self, mask, depth + 1, sink);
            mask[static_cast<std::size_t>(z)] = 1;
        }
    };
    Mask root(static_cast<std::size_t>(size), 1);
    if (g == 0) {
        Sink sink = make();
        sink(root);
        return {std::move(sink)};
    }
    const IntList first = removable(root);
    return parallel_map<Sink>(first.size(), [&](std::size_t i) {
        Sink sink = make();
        Mask mask = root;
        mask[static_cast<std::size_t>(first[i])] = 0;
        walk(walk, mask, 1, sink);
        return sink;
    });
}

} // namespace

EnumerationResult enumerate_genus(Int g) {
    auto sinks = genus_walk<detail::CollectSink>(g, [] { return detail::CollectSink{}; });
    std::vector<Mask> all;
    for (auto& sink : sinks)
        for (auto& mask : sink.masks) all.push_back(std::move(mask));
    return detail::materialize(std::move(all));
}

std::uint64_t count_genus(Int g) {
    auto sinks = genus_walk<CountSink>(g, [] { return CountSink{}; });
    std::uint64_t total = 0;
    for (const auto& sink : sinks) total += sink.count;
    return total;
}

EnumerationResult enumerate_pseudo_frobenius(const IntList& input) {
    if (input.empty()) fail(ErrorKind::EmptyInput, "empty pseudo-Frobenius set");
    IntList pf = input;
    std::sort(pf.begin(), pf.end());
    pf.erase(std::unique(pf.begin(), pf.end()), pf.end());
    if (pf == IntList{-1}) return {NumericalSemigroup()};
    if (pf.front() < 1) fail(ErrorKind::InvalidArgument, "pseudo-Frobenius numbers must be positive");
    const Int f = pf.back();
    require_frobenius(f);
    // Elements are only ever added going down the tree, so once a node holds
    // an element of pf, or a difference p - q of two of them (which would put
    // p = q + (p - q) in S), nothing below it can qualify.
    IntList forbidden = pf;
    for (Int p : pf)
        for (Int q : pf)
            if (p > q) forbidden.push_back(p - q);
    std::sort(forbidden.begin(), forbidden.end());
    std::function<bool(const Mask&, Int)> allow = [&](const Mask&, Int x) {
        return !std::binary_search(forbidden.begin(), forbidden.end(), x);
    };
    std::function<detail::CollectSink()> make = [&] {
        return detail::CollectSink{{}, [&](const Mask& mask) { return detail::mask_pseudo_frobenius(mask) == pf; }};
    };
    auto sinks = detail::frobenius_walk<detail::CollectSink>(f, allow, make);
    std::vector<Mask> all;
    for (auto& sink : sinks)
        for (auto& mask : sink.masks) all.push_back(std::move(mask));
    return detail::materialize(std::move(all));
}

std::uint64_t SplitMix64::next() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

NumericalSemigroup random_semigroup(Int max_gens, Int bound, std::uint64_t seed) {
    if (max_gens < 1) fail(ErrorKind::InvalidArgument, "max_gens must be at least 1");
    if (bound < 2) fail(ErrorKind::InvalidArgument, "bound must be at least 2");
    SplitMix64 rng(seed);
    IntList gens;
    const auto span = static_cast<std::uint64_t>(bound - 1);
    for (Int i = 0; i < max_gens; ++i) gens.push_back(2 + static_cast<Int>(rng.next() % span));
    Int d = 0;
    for (Int x : gens) d = std::gcd(d, x);
    if (d != 1) {
        gens.push_back(bound + 1);
        d = std::gcd(d, bound + 1);
    }
    if (d != 1) gens.push_back(bound + 2);
    return NumericalSemigroup::from_generators(gens);
}

} // namespace sgps
