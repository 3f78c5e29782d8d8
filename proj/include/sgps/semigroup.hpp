#pragma once

/**
 * @file semigroup.hpp
 * @brief Numerical semigroups: constructors, membership and basic invariants.
 *
 * A NumericalSemigroup is an immutable value. It always stores its unique
 * minimal system of generators together with the Apéry set of its
 * multiplicity, which is computed once at construction. Small elements and
 * gaps are computed lazily on first use; the lazy cache is shared between
 * copies and published with std::call_once, so values may be handed between
 * threads freely.
 *
 * Conventions for N = <1>: Frobenius number -1, conductor 0, genus 0,
 * pseudo-Frobenius numbers {-1}, type 1.
 */

#include <compare>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "sgps/types.hpp"

namespace sgps {

/// {x in N : (alpha * x) mod beta <= gamma * x}
struct PMInequality {
    Int alpha = 1;
    Int beta = 1;
    Int gamma = 1;

    bool satisfied_by(Int x) const;
    friend bool operator==(const PMInequality&, const PMInequality&) = default;
};

/// Apéry set of `modulus`, indexed by residue: elements[i] is the least
/// element of the semigroup congruent to i modulo `modulus`.
struct AperyList {
    Int modulus = 1;
    IntList elements;

    /// The same elements in ascending order.
    IntList sorted() const;
};

/// w_i = coords[i-1] * multiplicity + i for i = 1..m-1.
struct KunzCoords {
    Int multiplicity = 1;
    IntList coords;
};

/// sum(coeffs[i] * x_{i+1}) >= bound
struct KunzInequality {
    IntList coeffs;
    Int bound = 0;
    friend bool operator==(const KunzInequality&, const KunzInequality&) = default;
};

struct BasicInvariants {
    Int multiplicity;
    Int embedding_dimension;
    Int frobenius;
    Int conductor;
    Int genus;
    Int type;
};

struct Descriptors {
    IntList minimal_generators;
    IntList small_elements;
    IntList gaps;
    IntList fundamental_gaps;
    IntList pseudo_frobenius;
    IntList special_gaps;
};

enum class GapDataKind { Gaps, FundamentalGaps, SmallElements };

class NumericalSemigroup {
public:
    /// The semigroup N.
    NumericalSemigroup();

    static NumericalSemigroup from_generators(std::span<const Int> gens);
    static NumericalSemigroup from_generators(std::initializer_list<Int> gens) {
        return from_generators(std::span<const Int>(gens.begin(), gens.size()));
    }
    static NumericalSemigroup from_gap_data(GapDataKind kind, std::span<const Int> data);
    /// The input is read as a set; its size is the modulus.
    static NumericalSemigroup from_apery(std::span<const Int> apery);
    static NumericalSemigroup from_inequality(Int alpha, Int beta, Int gamma);
    static NumericalSemigroup from_interval(Rational lo, Rational hi);
    /// values = f(1), ..., f(p-1), f(p) with f(p) = 0; p = values.size().
    static NumericalSemigroup from_subadditive(std::span<const Int> values);

    /// Builds the semigroup whose elements in [0, mask.size()) are the
    /// positions holding a nonzero byte; every integer >= mask.size() is an
    /// element. The caller guarantees closure under addition.
    static NumericalSemigroup from_membership(std::vector<char> mask);

    const IntList& minimal_generators() const { return gens_; }
    Int multiplicity() const { return gens_.front(); }
    Int embedding_dimension() const { return static_cast<Int>(gens_.size()); }
    bool is_whole() const { return gens_.front() == 1; }

    bool contains(Int z) const;

    /// Apéry set of the multiplicity (always cached).
    const AperyList& apery() const;
    const IntList& small_elements() const;
    const IntList& gaps() const;
    Int frobenius() const;
    Int conductor() const;
    Int genus() const;

    /// Present when the semigroup was built from an inequality or an interval.
    const std::optional<PMInequality>& inequality() const { return pm_; }

    /// Membership table for [0, size); size is at least conductor + 1.
    std::vector<char> membership(Int size) const;

    friend bool operator==(const NumericalSemigroup& a, const NumericalSemigroup& b) {
        return a.gens_ == b.gens_;
    }

    std::string to_string() const;

private:
    struct Cache;

    IntList gens_;
    std::optional<PMInequality> pm_;
    std::shared_ptr<Cache> cache_;

    NumericalSemigroup(IntList gens, IntList apery);
};

/// Enumeration order: genus first, then small elements lexicographically.
bool census_less(const NumericalSemigroup& a, const NumericalSemigroup& b);
void census_sort(std::vector<NumericalSemigroup>& list);

AperyList apery_set(const NumericalSemigroup& s, Int n);

/// Selmer's formulas: F = max(Ap) - n, g = sum(Ap)/n - (n-1)/2.
Int selmer_frobenius(const AperyList& ap);
Int selmer_genus(const AperyList& ap);

BasicInvariants basic_invariants(const NumericalSemigroup& s);
Descriptors descriptors(const NumericalSemigroup& s);

IntList fundamental_gaps(const NumericalSemigroup& s);
IntList pseudo_frobenius(const NumericalSemigroup& s);
IntList special_gaps(const NumericalSemigroup& s);
Int type(const NumericalSemigroup& s);

KunzCoords kunz_coordinates(const NumericalSemigroup& s);
std::vector<KunzInequality> kunz_polytope(Int m);

IntList first_elements(const NumericalSemigroup& s, Int n);

} // namespace sgps
