#pragma once

/**
 * @file constructions.hpp
 * @brief New semigroups from old ones, and censuses.
 *
 * All census functions return their results in census order (genus, then
 * small elements lexicographically), independent of the number of worker
 * threads used to produce them.
 */

#include <cstdint>
#include <vector>

#include "sgps/semigroup.hpp"

namespace sgps {

using EnumerationResult = std::vector<NumericalSemigroup>;

NumericalSemigroup remove_generator(const NumericalSemigroup& s, Int g);
NumericalSemigroup add_gap(const NumericalSemigroup& s, Int g);
NumericalSemigroup intersection(const NumericalSemigroup& s, const NumericalSemigroup& t);
NumericalSemigroup quotient(const NumericalSemigroup& s, Int p);
/// a*S together with every integer >= b.
NumericalSemigroup multiple_with_tail(const NumericalSemigroup& s, Int a, Int b);

EnumerationResult oversemigroups(const NumericalSemigroup& s);

EnumerationResult enumerate_frobenius(Int f);
std::uint64_t count_frobenius(Int f);

EnumerationResult enumerate_genus(Int g);
std::uint64_t count_genus(Int g);

EnumerationResult enumerate_pseudo_frobenius(const IntList& pf);

/// Draws max_gens values uniformly from [2, bound] off a splitmix64 stream
/// seeded with `seed` (value = 2 + x mod (bound - 1)). When the draws are not
/// coprime, bound + 1 is adjoined, and bound + 2 as well if that is still not
/// enough.
NumericalSemigroup random_semigroup(Int max_gens, Int bound, std::uint64_t seed);

/// The splitmix64 generator behind random_semigroup.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}
    std::uint64_t next();

private:
    std::uint64_t state_;
};

} // namespace sgps
