#pragma once

/**
 * @file factorizations.hpp
 * @brief Nonunique factorization invariants.
 *
 * A factorization of n with respect to generators (g_1, ..., g_e) is an
 * exponent vector z with sum z_i g_i = n. Invariants of a single element
 * are computed from its full set of factorizations; invariants of a whole
 * semigroup are anchored at Betti elements (catenary degree, maximum of the
 * Delta set) or primitive elements (tame degree).
 */

#include <optional>
#include <span>
#include <vector>

#include "sgps/semigroup.hpp"

namespace sgps {

using Factorization = std::vector<Int>;

/// All factorizations of n, in lexicographically decreasing order.
std::vector<Factorization> factorizations(Int n, std::span<const Int> gens);

/// Factorizations of n over the minimal generators of s.
std::vector<Factorization> factorizations(Int n, const NumericalSemigroup& s);

Int length(const Factorization& z);

struct LengthStats {
    Int denumerant = 0;
    IntList lengths;
    IntList delta;
    Rational elasticity{1};
    Int max_denumerant = 0;
};

LengthStats length_stats(Int n, const NumericalSemigroup& s);
/// The same statistics for an explicit nonempty set of factorizations.
LengthStats length_stats_of_set(std::span<const Factorization> set);

/// max(|z - z^z'|, |z' - z^z'|) where z^z' is the componentwise minimum.
Int distance(const Factorization& a, const Factorization& b);

Int catenary_of_set(std::span<const Factorization> set);
Int tame_of_set(std::span<const Factorization> set);

struct FactorizationProfile {
    IntList delta_set;       ///< union of element Delta sets up to delta_bound
    Int delta_bound = 0;
    Int delta_max = 0;       ///< exact, from Betti elements
    Rational elasticity{1};  ///< largest minimal generator / multiplicity
    Int catenary_degree = 0;
    Int tame_degree = 0;
};

FactorizationProfile semigroup_factorization_profile(const NumericalSemigroup& s, Int delta_bound);

/// Delta set of every element of s up to bound, merged.
IntList delta_set_up_to(const NumericalSemigroup& s, Int bound);

/// omega(n) when n is given, otherwise the maximum over minimal generators.
Int omega_primality(const NumericalSemigroup& s, std::optional<Int> n = std::nullopt);

} // namespace sgps
