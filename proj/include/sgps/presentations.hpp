#pragma once

/**
 * @file presentations.hpp
 * @brief Factorization graphs, Betti elements, minimal presentations and
 * primitive elements.
 */

#include <vector>

#include "sgps/factorizations.hpp"
#include "sgps/semigroup.hpp"

namespace sgps {

/// lhs is the lexicographically larger factorization.
struct Relation {
    Factorization lhs;
    Factorization rhs;
    friend bool operator==(const Relation&, const Relation&) = default;
};

struct ElementGraph {
    Int element = 0;
    IntList vertices;                         ///< generators n_i with n - n_i in S
    std::vector<std::pair<Int, Int>> edges;   ///< {n_i, n_j} with n - n_i - n_j in S
    std::vector<IntList> components;          ///< ordered by smallest generator

    bool connected() const { return components.size() <= 1; }
};

ElementGraph element_graph(const NumericalSemigroup& s, Int n);

IntList betti_elements(const NumericalSemigroup& s);

/// Relations sorted by (Betti element, lhs). For each Betti element the
/// factorizations are split into classes of the "shares a nonzero
/// coordinate" relation; every class is represented by its lexicographically
/// largest member, and each class other than the one with the largest
/// representative is tied to that one.
std::vector<Relation> minimal_presentation(const NumericalSemigroup& s);

/// Subsets A of the minimal generators with n - sum(A) in S, ordered by
/// size and then lexicographically.
std::vector<IntList> shaded_set(const NumericalSemigroup& s, Int n);

/// Images of the minimal nonzero elements of the kernel congruence,
/// including the diagonal pairs (e_i, e_i), which contribute the generators.
IntList primitive_elements(const NumericalSemigroup& s);

struct PresentationFlags {
    bool uniquely_presented;
    bool generic;
};

PresentationFlags presentation_flags(const NumericalSemigroup& s);

} // namespace sgps
