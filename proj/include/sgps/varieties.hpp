#pragma once

/**
 * @file varieties.hpp
 * @brief Maximal embedding dimension, Arf and saturated semigroups.
 *
 * MED semigroups are handled with the multiplicity held fixed: the MED
 * closure of S is the least MED semigroup of multiplicity m(S) containing S,
 * and the multiplicity always belongs to the MED-minimal generators.
 */

#include <string_view>

#include "sgps/constructions.hpp"

namespace sgps {

enum class Variety { MED, Arf, Saturated };

std::string_view variety_name(Variety v);

bool in_variety(Variety v, const NumericalSemigroup& s);

/// Least member of v containing s.
NumericalSemigroup variety_closure(Variety v, const NumericalSemigroup& s);

/// Least set G with variety_closure(v, <G>) = s; s must belong to v.
IntList variety_min_generators(Variety v, const NumericalSemigroup& s);

/// Members of v (Arf or Saturated) with Frobenius number f.
EnumerationResult variety_enumerate_frobenius(Variety v, Int f);

} // namespace sgps
