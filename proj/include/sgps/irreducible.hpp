#pragma once

/**
 * @file irreducible.hpp
 * @brief Symmetric, pseudo-symmetric and almost symmetric semigroups,
 * decomposition into irreducibles, gluings and complete intersections.
 *
 * The flags for N follow from the genus formulas: 2g = F + 1 holds for
 * g = 0, F = -1, so N counts as symmetric, irreducible and almost symmetric.
 */

#include <utility>
#include <vector>

#include "sgps/constructions.hpp"

namespace sgps {

struct IrreducibilityProfile {
    bool irreducible;
    bool symmetric;
    bool pseudo_symmetric;
    bool almost_symmetric;
};

IrreducibilityProfile irreducibility_profile(const NumericalSemigroup& s);

/// Irreducible oversemigroups whose intersection is s, none redundant, in
/// census order. The decomposition is not unique and not necessarily of
/// minimal size.
std::vector<NumericalSemigroup> decompose_irreducible(const NumericalSemigroup& s);

EnumerationResult enumerate_irreducible(Int f);

/// (A1, A2) with A1 holding the multiplicity.
using GluingSplit = std::pair<IntList, IntList>;

/// Partitions of the minimal generators into A1, A2 with gcd(A1) != 1,
/// gcd(A2) != 1 and gcd(A1) gcd(A2) in <A1> and in <A2>.
std::vector<GluingSplit> gluing_splits(const NumericalSemigroup& s);

struct CompleteIntersectionProfile {
    bool complete_intersection;
    bool free;
    bool telescopic;
};

CompleteIntersectionProfile ci_profile(const NumericalSemigroup& s);

enum class Family { CompleteIntersection, Free, Telescopic, AlmostSymmetric };

/// How enumerate_family builds the complete intersection, free and
/// telescopic censuses. Auto filters symmetric semigroups for f <= 40 and
/// glues smaller members of the family above that. Almost symmetric
/// semigroups are always found by filtering.
enum class FamilyMethod { Auto, Filter, Gluing };

EnumerationResult enumerate_family(Int f, Family family, FamilyMethod method = FamilyMethod::Auto);

/// True when n is a nonnegative integer combination of gens.
bool representable(Int n, std::span<const Int> gens);

} // namespace sgps
