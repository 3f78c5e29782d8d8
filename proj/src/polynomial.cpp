#include "sgps/polynomial.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace sgps {

IntegerPolynomial::IntegerPolynomial(std::vector<BigInt> coeffs) : c_(std::move(coeffs)) { trim(); }

IntegerPolynomial IntegerPolynomial::from_ints(const IntList& coeffs) {
    std::vector<BigInt> c(coeffs.begin(), coeffs.end());
    return IntegerPolynomial(std::move(c));
}

void IntegerPolynomial::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

BigInt IntegerPolynomial::coefficient(Int i) const {
    if (i < 0 || i > degree()) return 0;
    return c_[static_cast<std::size_t>(i)];
}

std::string IntegerPolynomial::to_string() const {
    if (c_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (Int i = degree(); i >= 0; --i) {
        BigInt c = c_[static_cast<std::size_t>(i)];
        if (c == 0) continue;
        if (first) {
            if (c < 0) out << "-";
        } else {
            out << (c < 0 ? " - " : " + ");
        }
        if (c < 0) c = -c;
        if (c != 1 || i == 0) out << c;
        if (i > 0) out << "x";
        if (i > 1) out << "^" << i;
        first = false;
    }
    return out.str();
}

IntegerPolynomial operator*(const IntegerPolynomial& a, const IntegerPolynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<BigInt> c(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i)
        for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
    return IntegerPolynomial(std::move(c));
}

IntegerPolynomial operator-(const IntegerPolynomial& a, const IntegerPolynomial& b) {
    std::vector<BigInt> c(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) c[i] -= b.c_[i];
    return IntegerPolynomial(std::move(c));
}

Division divide_by_monic(const IntegerPolynomial& a, const IntegerPolynomial& b) {
    if (b.is_zero()) fail(ErrorKind::ZeroPolynomial, "division by the zero polynomial");
    if (b.leading() != 1) fail(ErrorKind::NotMonic, "divisor must be monic");
    std::vector<BigInt> rem = a.coefficients();
    const Int db = b.degree();
    const Int da = a.degree();
    std::vector<BigInt> quot(static_cast<std::size_t>(std::max<Int>(da - db + 1, 0)));
    for (Int i = da - db; i >= 0; --i) {
        const BigInt q = rem[static_cast<std::size_t>(i + db)];
        quot[static_cast<std::size_t>(i)] = q;
        if (q == 0) continue;
        for (Int j = 0; j <= db; ++j) rem[static_cast<std::size_t>(i + j)] -= q * b.coefficients()[static_cast<std::size_t>(j)];
    }
    Division d{IntegerPolynomial(std::move(quot)), IntegerPolynomial(std::move(rem)), false};
    d.exact = d.remainder.is_zero();
    return d;
}

IntList hilbert_series(const NumericalSemigroup& s, Int degree_cap) {
    if (degree_cap < 0) fail(ErrorKind::InvalidArgument, "degree cap must be nonnegative");
    require_window(degree_cap + 1, "Hilbert series");
    IntList out(static_cast<std::size_t>(degree_cap + 1));
    for (Int i = 0; i <= degree_cap; ++i) out[static_cast<std::size_t>(i)] = s.contains(i) ? 1 : 0;
    return out;
}

IntegerPolynomial semigroup_polynomial(const NumericalSemigroup& s) {
    std::vector<BigInt> c(static_cast<std::size_t>(s.conductor() + 1));
    c[0] = 1;
    for (Int g : s.gaps()) {
        c[static_cast<std::size_t>(g + 1)] += 1;
        c[static_cast<std::size_t>(g)] -= 1;
    }
    return IntegerPolynomial(std::move(c));
}

IntegerPolynomial graeffe(const IntegerPolynomial& p) {
    if (p.is_zero()) fail(ErrorKind::ZeroPolynomial, "Graeffe transform of the zero polynomial");
    // P(x) = E(x^2) + x O(x^2) gives P(x) P(-x) = E(x^2)^2 - x^2 O(x^2)^2.
    std::vector<BigInt> even, odd;
    for (Int i = 0; i <= p.degree(); ++i) (i % 2 == 0 ? even : odd).push_back(p.coefficient(i));
    const IntegerPolynomial e(even), o(odd);
    IntegerPolynomial g = e * e - IntegerPolynomial({0, 1}) * o * o;
    if (p.degree() % 2 != 0) g = IntegerPolynomial() - g;
    return g;
}

namespace {

Int moebius(Int n) {
    Int result = 1;
    for (Int p = 2; p * p <= n; ++p) {
        if (n % p != 0) continue;
        n /= p;
        if (n % p == 0) return 0;
        result = -result;
    }
    if (n > 1) result = -result;
    return result;
}

BigInt binomial(Int n, Int k) {
    BigInt r = 1;
    for (Int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

using Coeffs = std::vector<BigInt>;

// c *= x^k - 1
void times_binomial(Coeffs& c, Int k) {
    const std::size_t sk = static_cast<std::size_t>(k);
    c.resize(c.size() + sk);
    for (std::size_t i = c.size(); i-- > sk;) c[i] = c[i - sk] - c[i];
    for (std::size_t i = 0; i < sk; ++i) c[i] = -c[i];
}

// c /= x^k - 1 when the division is exact; false (c unspecified) otherwise.
bool over_binomial(Coeffs& c, Int k) {
    const std::size_t sk = static_cast<std::size_t>(k);
    while (!c.empty() && c.back() == 0) c.pop_back();
    if (c.empty()) return true;
    if (c.size() <= sk) return false;
    // (x^k - 1) q has coefficient q[j-k] - q[j] at j
    Coeffs q(c.size() - sk);
    for (std::size_t j = c.size(); j-- > sk;) {
        const std::size_t i = j - sk;
        q[i] = c[j] + (j < q.size() ? q[j] : BigInt(0));
    }
    for (std::size_t j = 0; j < sk; ++j)
        if (c[j] != -(j < q.size() ? q[j] : BigInt(0))) return false;
    c = std::move(q);
    return true;
}

// Phi_d = prod over k | d of (x^k - 1)^mu(d/k), so dividing by Phi_d is a
// run of sparse multiplications and exact sparse divisions.
bool over_cyclotomic(Coeffs& c, Int d) {
    std::vector<Int> up, down;
    for (Int k = 1; k <= d; ++k) {
        if (d % k != 0) continue;
        const Int mu = moebius(d / k);
        if (mu == -1) up.push_back(k);
        else if (mu == 1) down.push_back(k);
    }
    for (Int k : up) times_binomial(c, k);
    for (Int k : down)
        if (!over_binomial(c, k)) return false;
    return true;
}

// Largest d that can have phi(d) <= n. A d with r distinct prime factors is
// at least the product of the first r primes and has phi(d) >= d times the
// product of (p - 1) / p over those primes.
Int cyclotomic_index_bound(Int n, Int& max_prime_factors) {
    Int best = 2, primorial = 1, num = 1, den = 1;
    max_prime_factors = 1;
    for (Int p = 2, r = 1;; ++p) {
        bool prime = true;
        for (Int q = 2; q * q <= p && prime; ++q) prime = p % q != 0;
        if (!prime) continue;
        primorial = checked_mul(primorial, p);
        num = checked_mul(num, p);
        den = checked_mul(den, p - 1);
        const Int bound = checked_mul(n, num) / den;
        if (primorial > bound) break;
        best = std::max(best, bound);
        max_prime_factors = r++;
    }
    return best;
}

bool plus_or_minus_reciprocal(const Coeffs& c) {
    bool plus = true, minus = true;
    for (std::size_t i = 0, j = c.size() - 1; i < c.size(); ++i, --j) {
        plus = plus && c[i] == c[j];
        minus = minus && c[i] == -c[j];
    }
    return plus || minus;
}

// Exact test that a monic p with p(0) != 0 is a product of cyclotomic
// polynomials. Candidate multiplicities come from writing p / p(0) as a
// product of (1 - x^k)^b_k modulo x^(D+1); each candidate Phi_d is then
// divided out and the quotient must be 1.
bool cyclotomic_product(const IntegerPolynomial& p) {
    const Coeffs& pc = p.coefficients();
    const Int n = p.degree();
    if (n == 0) return true;
    if (pc[0] != 1 && pc[0] != -1) return false;
    if (!plus_or_minus_reciprocal(pc)) return false;
    Int max_factors = 1;
    const Int bound_d = cyclotomic_index_bound(n, max_factors);
    require_window(bound_d + 1, "cyclotomic index bound");
    // each Phi_d contributes at most 2^omega(d) binomials
    const Int budget = checked_mul(n, Int{1} << max_factors);

    Coeffs s(static_cast<std::size_t>(bound_d + 1));
    for (Int i = 0; i <= n && i <= bound_d; ++i) s[static_cast<std::size_t>(i)] = pc[static_cast<std::size_t>(i)] * pc[0];
    std::vector<Int> b(static_cast<std::size_t>(bound_d + 1));
    Int spent = 0;
    for (Int k = 1; k <= bound_d; ++k) {
        const std::size_t sk = static_cast<std::size_t>(k);
        const BigInt a = s[sk];
        if (a == 0) continue;
        if (a > budget - spent || -a > budget - spent) return false;
        const Int times = static_cast<Int>(a);
        spent += times < 0 ? -times : times;
        b[sk] = -times;
        for (Int t = 0; t < (times < 0 ? -times : times); ++t) {
            if (times > 0) {
                for (std::size_t i = s.size(); i-- > sk;) s[i] -= s[i - sk];
            } else {
                for (std::size_t i = sk; i < s.size(); ++i) s[i] += s[i - sk];
            }
        }
    }

    Coeffs rest = pc;
    for (Int d = 1; d <= bound_d; ++d) {
        Int m = 0;
        for (Int k = d; k <= bound_d; k += d) m += b[static_cast<std::size_t>(k)];
        if (m < 0) return false;
        for (Int i = 0; i < m; ++i)
            if (!over_cyclotomic(rest, d)) return false;
    }
    while (!rest.empty() && rest.back() == 0) rest.pop_back();
    return rest.size() == 1 && rest[0] == 1;
}

// All roots of a monic integer polynomial lie in the closed unit disk iff its
// Graeffe iterates stay within the coefficient bounds |c_i| <= C(n, i). Those
// bounds hold for every polynomial with roots in the disk and there are
// finitely many such integer polynomials, so the iteration either leaves the
// bounds or repeats; a repeat permutes the roots under squaring, which forces
// every root to be 0 or a root of unity.
bool graeffe_bounded(const IntegerPolynomial& p) {
    const Int n = p.degree();
    std::vector<BigInt> bound;
    for (Int i = 0; i <= n; ++i) bound.push_back(binomial(n, i));
    std::set<Coeffs> seen;
    IntegerPolynomial q = p;
    for (;;) {
        for (Int i = 0; i <= n; ++i) {
            const BigInt c = q.coefficient(i);
            if ((c < 0 ? BigInt(-c) : c) > bound[static_cast<std::size_t>(i)]) return false;
        }
        if (!seen.insert(q.coefficients()).second) return true;
        IntegerPolynomial next = graeffe(q);
        if (next == q) return true;
        q = std::move(next);
    }
}

// Roots at 0 are in the disk, so strip x^j first. For the rest, a nonzero
// constant term above 1 in size puts a root outside, and by Kronecker's
// theorem the remaining candidates are exactly the cyclotomic products,
// which must be self-reciprocal up to sign. What survives those exact
// checks without a cyclotomic certificate goes through the Graeffe iteration.
bool kronecker(const IntegerPolynomial& p) {
    const Coeffs& c = p.coefficients();
    std::size_t j = 0;
    while (c[j] == 0) ++j;
    const IntegerPolynomial g(Coeffs(c.begin() + static_cast<std::ptrdiff_t>(j), c.end()));
    if (g.degree() == 0) return true;
    if (g.coefficient(0) != 1 && g.coefficient(0) != -1) return false;
    if (!plus_or_minus_reciprocal(g.coefficients())) return false;
    if (cyclotomic_product(g)) return true;
    return graeffe_bounded(g);
}

} // namespace

IntegerPolynomial cyclotomic_polynomial(Int d) {
    if (d < 1) fail(ErrorKind::InvalidArgument, "cyclotomic index must be positive");
    require_window(d + 1, "cyclotomic index");
    Coeffs c{1};
    std::vector<Int> down;
    for (Int k = 1; k <= d; ++k) {
        if (d % k != 0) continue;
        const Int mu = moebius(d / k);
        if (mu == 1) times_binomial(c, k);
        else if (mu == -1) down.push_back(k);
    }
    // x^k - 1 divides the accumulated product, so each division is exact
    for (Int k : down) over_binomial(c, k);
    return IntegerPolynomial(std::move(c));
}

PolynomialTests poly_tests(const IntegerPolynomial& p) {
    if (p.is_zero()) fail(ErrorKind::ZeroPolynomial, "zero polynomial");
    if (p.leading() != 1) fail(ErrorKind::NotMonic, "polynomial must be monic");
    PolynomialTests t{};
    const auto& c = p.coefficients();
    t.self_reciprocal = std::equal(c.begin(), c.end(), c.rbegin());
    t.cyclotomic = c[0] != 0 && cyclotomic_product(p);
    t.kronecker = t.cyclotomic || kronecker(p);
    return t;
}

CyclotomyAndSymmetry cyclotomy_and_symmetry(const NumericalSemigroup& s) {
    const PolynomialTests t = poly_tests(semigroup_polynomial(s));
    return {t.self_reciprocal, t.cyclotomic};
}

} // namespace sgps
