#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <map>
#include <string>

#include "ribbonfusion/errors.hpp"

namespace ribbonfusion {

using BigInt = boost::multiprecision::cpp_int;

/// Exponent of q in units of 1/2. `twice` stores the doubled value, so
/// q^{3/2} has twice == 3 and q^2 has twice == 4. Ribbon spins are
/// half-integral, which is why the whole library counts in halves.
struct HalfInt {
    long long twice = 0;

    static HalfInt whole(long long e) { return {2 * e}; }
    static HalfInt halves(long long t) { return {t}; }

    bool is_whole() const { return twice % 2 == 0; }
    long long whole_value() const;  // throws if not a whole number

    HalfInt operator+(HalfInt o) const { return {twice + o.twice}; }
    HalfInt operator-(HalfInt o) const { return {twice - o.twice}; }
    HalfInt operator-() const { return {-twice}; }
    auto operator<=>(const HalfInt&) const = default;

    std::string str() const;  // "3", "9/2", "-9/2"
};

/// Sparse Laurent polynomial in q with half-integer exponents and
/// arbitrary-precision integer coefficients. All arithmetic is exact and
/// results are normalized: no zero coefficient is ever stored. Values are
/// immutable in spirit; every operation returns a fresh polynomial.
class LaurentPoly {
public:
    LaurentPoly() = default;

    static LaurentPoly zero() { return LaurentPoly(); }
    static LaurentPoly one() { return constant(1); }
    static LaurentPoly constant(BigInt c);
    static LaurentPoly q_power(HalfInt e) { return term(1, e); }
    static LaurentPoly term(BigInt c, HalfInt e);

    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }

    /// Terms keyed by doubled exponent, ascending.
    const std::map<long long, BigInt>& terms() const { return terms_; }

    BigInt coeff(HalfInt e) const;
    BigInt eval_one() const;  // specialization q = 1

    bool has_negative_coeff() const;
    bool exponents_whole() const;
    bool exponents_nonnegative() const;
    HalfInt min_exponent() const;  // throws on zero polynomial
    HalfInt max_exponent() const;

    LaurentPoly operator-() const;
    LaurentPoly& operator+=(const LaurentPoly& o);
    LaurentPoly& operator-=(const LaurentPoly& o);
    LaurentPoly& operator*=(const LaurentPoly& o);

    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) { return a.terms_ == b.terms_; }

    LaurentPoly scaled(const BigInt& c) const;
    LaurentPoly shifted(HalfInt d) const;              // multiply by q^d
    LaurentPoly truncated_below(HalfInt order) const;  // keep exponents < order

    /// Canonical text form, terms by ascending exponent: "1+2q+q^2",
    /// "q^(9/2)", "q^(-3)". The zero polynomial prints "0".
    std::string str() const;

    /// JSON object { "<doubled exponent>": "<coefficient>" }, keys ascending.
    std::string json_str() const;

private:
    void add_term(long long twice_exp, const BigInt& c);

    std::map<long long, BigInt> terms_;
};

/// q^d * p(1/q): reverses the coefficient list around d/2.
LaurentPoly bar_reverse(const LaurentPoly& p, HalfInt d);

/// Gaussian binomial coefficient [m k]_q; the zero polynomial when k < 0 or
/// k > m. Computed by the Pascal recurrence, exactly.
LaurentPoly qbinomial(long long m, long long k);

}  // namespace ribbonfusion
