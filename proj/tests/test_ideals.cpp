#include <doctest.h>

#include "oracles.hpp"
#include "sgps/ideals.hpp"
#include "support.hpp"

using namespace sgps;
using test::error_kind;
using test::ns;

namespace {

// membership in I = gens + S read off the semigroup directly
bool naive_contains(const IntList& gens, const NumericalSemigroup& s, Int z) {
    for (Int g : gens)
        if (s.contains(z - g)) return true;
    return false;
}

// random ideal: a few generators in [-5, conductor + 5]
IntList random_gens(SplitMix64& rng, const NumericalSemigroup& s) {
    IntList g;
    const Int span = s.conductor() + 11;
    const int k = 1 + static_cast<int>(rng.next() % 3);
    for (int i = 0; i < k; ++i) g.push_back(static_cast<Int>(rng.next() % static_cast<std::uint64_t>(span)) - 5);
    return g;
}

} // namespace

TEST_SUITE("ideals") {

TEST_CASE("construction and minimal generators") {
    const auto s = ns({3, 4, 5});
    CHECK(ideal({-1, 2}, s).generators() == IntList{-1});
    CHECK(ideal({5}, s).generators() == IntList{5});
    CHECK(ideal({0}, s).small_elements() == s.small_elements());
    CHECK(error_kind([&] { ideal({}, s); }) == ErrorKind::EmptyInput);
}

TEST_CASE("descriptors") {
    const auto s = ns({3, 4, 5});
    const auto i = ideal({5}, s);
    CHECK(i.small_elements() == IntList{5, 8});
    auto ap = i.apery(3);
    std::sort(ap.begin(), ap.end());
    CHECK(ap == IntList{5, 9, 10});
    CHECK(ideal({0}, ns({5, 7, 9})).small_elements() == ns({5, 7, 9}).small_elements());
}

TEST_CASE("sums, translates and multiples") {
    const auto s = ns({2, 3});
    const auto m = maximal_ideal(s);
    CHECK(ideal_scale_add(m, 2) == ideal_sum(m, m));
    CHECK(ideal_scale_add(m, 2).small_elements() == IntList{4});
    CHECK(ideal_translate(ideal({0}, s), 3).generators() == IntList{3});
    CHECK(ideal_scale_add(m, 0).generators() == IntList{0});
    CHECK(error_kind([&] { ideal_scale_add(m, -1); }) == ErrorKind::InvalidArgument);
}

TEST_CASE("subtraction") {
    const auto s = ns({3, 4, 5});
    const auto m = maximal_ideal(s);
    const auto mm = ideal_subtract(m, m);
    CHECK(mm.contains(1));
    CHECK(mm.contains(0));
}

TEST_CASE("lattice operations") {
    const auto s = ns({3, 4, 5});
    const auto a = ideal({5}, s), b = ideal({4}, s);
    // {8,9,10,...}: 9 - 8 and 10 - 8 are gaps, so three generators
    CHECK(ideal_intersection(a, b).generators() == IntList{8, 9, 10});
    CHECK(ideal_union(a, b).generators() == IntList{4, 5});
    CHECK(ideal_difference(a, b) == IntList{5});
    CHECK(ideal_difference(b, a) == IntList{4, 7});
    CHECK(error_kind([&] { ideal_sum(a, ideal({0}, ns({2, 3}))); }) == ErrorKind::AmbientMismatch);
}

TEST_CASE("blow-ups") {
    const auto b = blow_up(maximal_ideal(ns({3, 4, 5})));
    CHECK(b.ambient().is_whole());
    CHECK(b.generators() == IntList{0});
    CHECK(blow_up(ideal({7}, ns({5, 7, 9}))) == ideal({0}, ns({5, 7, 9})));
    CHECK(blow_up(maximal_ideal(ns({2, 3}))).ambient().is_whole());
}

TEST_CASE("canonical and maximal ideals") {
    CHECK(canonical_ideal(ns({3, 4, 5})).generators() == IntList{0, 1});
    CHECK(canonical_ideal(ns({2, 3})).generators() == IntList{0});
    CHECK(maximal_ideal(ns({1})).generators() == IntList{1});
    CHECK(error_kind([] { canonical_ideal(ns({1})); }) == ErrorKind::NotApplicable);
}

TEST_CASE("Hilbert function and reduction number") {
    const auto m = maximal_ideal(ns({2, 3}));
    CHECK(hilbert_function(m, 1) == IntList{2, 3});
    CHECK(reduction_number(m) == 1);
    CHECK(reduction_number(ideal({4}, ns({5, 7, 9}))) == 1);
}

TEST_CASE("ideal properties on random instances") {
    SplitMix64 rng(2024);
    for (const auto& s : test::small_instances(50, 25, 40)) {
        const IntList ga = random_gens(rng, s), gb = random_gens(rng, s);
        const auto a = ideal(ga, s), b = ideal(gb, s);
        const Int lo = -20, hi = 3 * s.conductor() + 40;
        for (Int z = lo; z <= hi; ++z) {
            CHECK(a.contains(z) == naive_contains(ga, s, z));
            // I + S = I
            if (a.contains(z))
                for (Int x : s.minimal_generators()) CHECK(a.contains(z + x));
            CHECK(ideal_union(a, b).contains(z) == (a.contains(z) || b.contains(z)));
            CHECK(ideal_intersection(a, b).contains(z) == (a.contains(z) && b.contains(z)));
        }
        // minimal generators are pairwise incomparable
        const auto& g = a.generators();
        for (Int x : g)
            for (Int y : g)
                if (x != y) CHECK_FALSE(s.contains(y - x));
        // |Ap(I, n)| = n
        for (Int n : s.minimal_generators()) CHECK(static_cast<Int>(a.apery(n).size()) == n);
        // K - (K - I) = I
        if (!s.is_whole()) {
            const auto k = canonical_ideal(s);
            CHECK(ideal_subtract(k, ideal_subtract(k, a)) == a);
        }
        // blow-up is translation invariant
        CHECK(blow_up(a) == blow_up(ideal_translate(a, 7)));
        CHECK(blow_up(a) == blow_up(ideal_translate(a, -3)));
        // sum and subtraction against the definitions on a window
        const auto sum = ideal_sum(a, b), diff = ideal_subtract(a, b);
        for (Int z = lo; z <= hi; ++z) {
            bool in_sum = false;
            for (Int x = -10; x <= z + 10 && !in_sum; ++x) in_sum = a.contains(x) && b.contains(z - x);
            CHECK(sum.contains(z) == in_sum);
            // z + b in a for every b in B: enough to test generators of B
            bool in_diff = true;
            for (Int y : b.generators()) in_diff = in_diff && a.contains(z + y);
            CHECK(diff.contains(z) == in_diff);
        }
    }
}

} // TEST_SUITE
