#pragma once

/**
 * @file ideals.hpp
 * @brief Relative ideals of a numerical semigroup.
 *
 * A relative ideal I of S is a set of integers with I + S in I and z + I in S
 * for some integer z. It is stored as its minimal generating system together
 * with S; z is in I iff z - g is in S for some generator g. Every ideal
 * contains all integers from min(I) + conductor(S) on, so each operation
 * below works on a finite window ending there.
 */

#include <vector>

#include "sgps/semigroup.hpp"

namespace sgps {

class RelativeIdeal {
public:
    /// Discards every generator g with g - g' in S for another generator g'.
    RelativeIdeal(IntList gens, NumericalSemigroup ambient);

    const IntList& generators() const { return gens_; }
    const NumericalSemigroup& ambient() const { return ambient_; }

    bool contains(Int z) const;
    Int min() const { return gens_.front(); }
    /// Largest integer not in the ideal (at least min() - 1).
    Int frobenius() const;
    /// Elements of the ideal from min() up to frobenius() + 1.
    IntList small_elements() const;
    /// {i in I : i - n not in I}, ascending; n must be a nonzero element of S.
    IntList apery(Int n) const;

    friend bool operator==(const RelativeIdeal& a, const RelativeIdeal& b) {
        return a.gens_ == b.gens_ && a.ambient_ == b.ambient_;
    }

private:
    IntList gens_;
    NumericalSemigroup ambient_;
};

RelativeIdeal ideal(const IntList& gens, const NumericalSemigroup& s);

RelativeIdeal ideal_sum(const RelativeIdeal& a, const RelativeIdeal& b);
RelativeIdeal ideal_translate(const RelativeIdeal& a, Int z);
/// k-fold sum a + ... + a; k = 0 gives the ambient semigroup.
RelativeIdeal ideal_scale_add(const RelativeIdeal& a, Int k);
/// {z : z + b in a}
RelativeIdeal ideal_subtract(const RelativeIdeal& a, const RelativeIdeal& b);
RelativeIdeal ideal_union(const RelativeIdeal& a, const RelativeIdeal& b);
RelativeIdeal ideal_intersection(const RelativeIdeal& a, const RelativeIdeal& b);
/// a \ b, which is always finite because both contain every large integer.
IntList ideal_difference(const RelativeIdeal& a, const RelativeIdeal& b);

/// The blow-up of a: the union of n a - n a, reached at the reduction number.
/// It is a numerical semigroup containing the ambient one, and is returned as
/// the ideal 0 + B over that semigroup B.
RelativeIdeal blow_up(const RelativeIdeal& a);

/// {z : F - z not in S}; NotApplicable for N.
RelativeIdeal canonical_ideal(const NumericalSemigroup& s);
/// S \ {0}.
RelativeIdeal maximal_ideal(const NumericalSemigroup& s);

/// n a \ (n + 1) a, with 0 a = S.
IntList hilbert_function(const RelativeIdeal& a, Int n);
/// Least n >= 1 with min(a) + n a = (n + 1) a.
Int reduction_number(const RelativeIdeal& a);

} // namespace sgps
