#pragma once

/**
 * @file polynomial.hpp
 * @brief Hilbert series, the semigroup polynomial and exact root-location
 * tests for integer polynomials.
 *
 * No floating point is used anywhere: the Kronecker test iterates the
 * Graeffe transform over arbitrary-size integers.
 */

#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "sgps/semigroup.hpp"

namespace sgps {

using BigInt = boost::multiprecision::cpp_int;

/// Dense integer polynomial, coefficients by ascending degree. Leading zeros
/// are trimmed; the zero polynomial has no coefficients.
class IntegerPolynomial {
public:
    IntegerPolynomial() = default;
    explicit IntegerPolynomial(std::vector<BigInt> coeffs);
    static IntegerPolynomial from_ints(const IntList& coeffs);

    const std::vector<BigInt>& coefficients() const { return c_; }
    bool is_zero() const { return c_.empty(); }
    /// -1 for the zero polynomial.
    Int degree() const { return static_cast<Int>(c_.size()) - 1; }
    const BigInt& leading() const { return c_.back(); }
    BigInt coefficient(Int i) const;

    std::string to_string() const;

    friend IntegerPolynomial operator*(const IntegerPolynomial& a, const IntegerPolynomial& b);
    friend IntegerPolynomial operator-(const IntegerPolynomial& a, const IntegerPolynomial& b);
    friend bool operator==(const IntegerPolynomial&, const IntegerPolynomial&) = default;

private:
    void trim();
    std::vector<BigInt> c_;
};

/// Quotient and remainder of a by a monic b; `exact` reports a zero remainder.
struct Division {
    IntegerPolynomial quotient;
    IntegerPolynomial remainder;
    bool exact;
};
Division divide_by_monic(const IntegerPolynomial& a, const IntegerPolynomial& b);

/// Coefficient i is 1 when i is in s, for i = 0..degree_cap.
IntList hilbert_series(const NumericalSemigroup& s, Int degree_cap);

/// 1 + (x - 1) * sum of x^g over the gaps g.
IntegerPolynomial semigroup_polynomial(const NumericalSemigroup& s);

/// G with G(x^2) = +-P(x) P(-x), multiplied by (-1)^deg P so that a monic P
/// gives a monic G.
IntegerPolynomial graeffe(const IntegerPolynomial& p);

/// The d-th cyclotomic polynomial.
IntegerPolynomial cyclotomic_polynomial(Int d);

struct PolynomialTests {
    bool self_reciprocal;
    bool cyclotomic;  ///< product of cyclotomic polynomials
    bool kronecker;   ///< monic, every root in the closed unit disk
};

/// Requires a nonzero monic polynomial.
PolynomialTests poly_tests(const IntegerPolynomial& p);

struct CyclotomyAndSymmetry {
    bool symmetric_via_polynomial;
    bool cyclotomic_semigroup;
};

CyclotomyAndSymmetry cyclotomy_and_symmetry(const NumericalSemigroup& s);

} // namespace sgps
