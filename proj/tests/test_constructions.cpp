#include <doctest.h>

#include <map>
#include <numeric>
#include <set>

#include "oracles.hpp"
#include "sgps/constructions.hpp"
#include "support.hpp"

using namespace sgps;
using test::error_kind;
using test::ns;

namespace {

bool subset(const NumericalSemigroup& s, const NumericalSemigroup& t) {
    // every small element of s lies in t, and t's conductor is not larger
    for (Int x : s.small_elements())
        if (!t.contains(x)) return false;
    return t.conductor() <= s.conductor();
}

} // namespace

TEST_SUITE("constructions") {

TEST_CASE("removing a minimal generator") {
    CHECK(remove_generator(ns({2, 3}), 2) == ns({3, 4, 5}));
    CHECK(remove_generator(ns({1}), 1) == ns({2, 3}));
    CHECK(error_kind([] { remove_generator(ns({5, 7, 9}), 10); }) == ErrorKind::NotMinimalGenerator);
}

TEST_CASE("adjoining a special gap") {
    CHECK(add_gap(ns({3, 4, 5}), 2) == ns({2, 3}));
    CHECK(add_gap(ns({5, 7, 9}), 13).gaps() == IntList{1, 2, 3, 4, 6, 8, 11});
    CHECK(error_kind([] { add_gap(ns({5, 7, 9}), 6); }) == ErrorKind::NotSpecialGap);
    CHECK(error_kind([] { add_gap(ns({3, 4, 5}), 1); }) == ErrorKind::NotSpecialGap);
}

TEST_CASE("intersections") {
    CHECK(intersection(ns({5, 7, 8, 9}), ns({5, 7, 9, 11})) == ns({5, 7, 9}));
    CHECK(intersection(ns({5, 7, 9}), ns({1})) == ns({5, 7, 9}));
    CHECK(intersection(ns({2, 3}), ns({3, 4, 5})) == ns({3, 4, 5}));
}

TEST_CASE("quotients") {
    CHECK(quotient(ns({3, 4, 5}), 2) == ns({2, 3}));
    CHECK(quotient(ns({5, 7, 9}), 1) == ns({5, 7, 9}));
    CHECK(quotient(ns({2, 3}), 2).is_whole());
    CHECK(error_kind([] { quotient(ns({2, 3}), 0); }) == ErrorKind::InvalidArgument);
}

TEST_CASE("multiples with a tail") {
    CHECK(multiple_with_tail(ns({1}), 2, 4) == ns({2, 5}));
    CHECK(multiple_with_tail(ns({1}), 2, 0).is_whole());
    CHECK(multiple_with_tail(ns({2, 5}), 2, 9) == ns({4, 9, 10, 11}));
}

TEST_CASE("oversemigroups") {
    const auto over = oversemigroups(ns({5, 7, 9}));
    CHECK(over.size() == 15);
    CHECK(oversemigroups(ns({1})) == std::vector<NumericalSemigroup>{ns({1})});
    const auto two = oversemigroups(ns({2, 3}));
    CHECK(two.size() == 2);
    CHECK(std::find(two.begin(), two.end(), ns({1})) != two.end());
    CHECK(std::find(two.begin(), two.end(), ns({2, 3})) != two.end());
}

TEST_CASE("oversemigroups contain the semigroup and match a brute force") {
    for (const auto& s : test::small_instances(25, 16, 77)) {
        const auto over = oversemigroups(s);
        // brute force: every set T with S in T, closed, gaps inside gaps(S)
        const auto gaps = s.gaps();
        std::uint64_t expected = 0;
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << gaps.size()); ++mask) {
            oracle::Vec kept;
            for (std::size_t i = 0; i < gaps.size(); ++i)
                if (mask >> i & 1) kept.push_back(gaps[i]);
            expected += oracle::gap_set_closed(kept);
        }
        CHECK_MESSAGE(over.size() == expected, s.to_string());
        for (const auto& t : over) CHECK(subset(s, t));
        CHECK(std::find(over.begin(), over.end(), s) != over.end());
        CHECK(std::find(over.begin(), over.end(), ns({1})) != over.end());
    }
}

TEST_CASE("semigroups with a given Frobenius number") {
    CHECK(enumerate_frobenius(21).size() == 1828);
    CHECK(enumerate_frobenius(2) == std::vector<NumericalSemigroup>{ns({3, 4, 5})});
    CHECK(enumerate_frobenius(-1) == std::vector<NumericalSemigroup>{ns({1})});
    CHECK(error_kind([] { enumerate_frobenius(0); }) == ErrorKind::InvalidFrobenius);
    CHECK(error_kind([] { enumerate_frobenius(-5); }) == ErrorKind::InvalidFrobenius);
    for (Int f = 1; f <= 12; ++f) {
        const auto all = enumerate_frobenius(f);
        CHECK(all.size() == oracle::count_frobenius(f));
        CHECK(count_frobenius(f) == all.size());
        for (const auto& s : all) CHECK(s.frobenius() == f);
        CHECK(std::is_sorted(all.begin(), all.end(), census_less));
    }
}

TEST_CASE("semigroups with a given genus") {
    CHECK(enumerate_genus(0) == std::vector<NumericalSemigroup>{ns({1})});
    CHECK(enumerate_genus(1) == std::vector<NumericalSemigroup>{ns({2, 3})});
    CHECK(enumerate_genus(5).size() == 12);
    CHECK(error_kind([] { enumerate_genus(-1); }) == ErrorKind::InvalidArgument);
    for (Int g = 0; g <= 8; ++g) {
        const auto all = enumerate_genus(g);
        CHECK(all.size() == oracle::count_genus(g));
        CHECK(count_genus(g) == all.size());
        for (const auto& s : all) CHECK(s.genus() == g);
        CHECK(std::is_sorted(all.begin(), all.end(), census_less));
    }
}

TEST_CASE("semigroups with given pseudo-Frobenius numbers") {
    CHECK(enumerate_pseudo_frobenius(IntList{13, 24, 25}).empty());
    const auto three = enumerate_pseudo_frobenius(IntList{13, 19, 25});
    CHECK(three.size() == 3);
    for (const auto& t : three) CHECK(descriptors(t).pseudo_frobenius == IntList{13, 19, 25});
    CHECK(enumerate_pseudo_frobenius(IntList{1}) == std::vector<NumericalSemigroup>{ns({2, 3})});
    CHECK(error_kind([] { enumerate_pseudo_frobenius(IntList{}); }) == ErrorKind::EmptyInput);
}

TEST_CASE("pseudo-Frobenius census agrees with filtering the Frobenius census") {
    for (Int f = 3; f <= 12; ++f) {
        std::map<IntList, std::size_t> by_pf;
        for (const auto& s : enumerate_frobenius(f)) ++by_pf[pseudo_frobenius(s)];
        for (const auto& [pf, count] : by_pf) CHECK(enumerate_pseudo_frobenius(pf).size() == count);
    }
}

TEST_CASE("random semigroups") {
    CHECK(random_semigroup(5, 200, 42) == random_semigroup(5, 200, 42));
    const auto degenerate = random_semigroup(1, 2, 9);
    CHECK((degenerate.is_whole() || degenerate == ns({2, 3})));
    for (std::uint64_t seed = 0; seed < 300; ++seed) {
        const auto s = random_semigroup(5, 200, seed);
        CHECK(oracle::gcd_all(s.minimal_generators()) == 1);
        CHECK(s.embedding_dimension() <= 7);
        // the raw draws, recomputed from the generator stream
        SplitMix64 rng(seed);
        oracle::Vec draws;
        for (int i = 0; i < 5; ++i) draws.push_back(2 + static_cast<Int>(rng.next() % 199));
        const Int limit = oracle::gcd_all(draws) == 1 ? 200 : 202;
        CHECK(s.minimal_generators().back() <= limit);
        if (limit == 200) CHECK(s.embedding_dimension() <= 5);
    }
    CHECK(error_kind([] { random_semigroup(0, 10, 1); }) == ErrorKind::InvalidArgument);
    CHECK(error_kind([] { random_semigroup(3, 1, 1); }) == ErrorKind::InvalidArgument);
}

TEST_CASE("quotients compose") {
    for (const auto& s : test::random_instances(30, 4, 30, 900))
        for (Int p = 1; p <= 5; ++p)
            for (Int q = 1; q <= 5; ++q) CHECK(quotient(quotient(s, p), q) == quotient(s, p * q));
}

TEST_CASE("quotient membership matches its definition") {
    for (const auto& s : test::random_instances(30, 4, 30, 950))
        for (Int p = 2; p <= 4; ++p) {
            const auto t = quotient(s, p);
            for (Int x = 0; x <= s.conductor() + 2; ++x) CHECK(t.contains(x) == s.contains(p * x));
        }
}

} // TEST_SUITE
