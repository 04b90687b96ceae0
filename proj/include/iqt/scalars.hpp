#pragma once

#include <gmpxx.h>

#include <map>
#include <string>
#include <vector>

#include "iqt/error.hpp"

namespace iqt {

using Rat = mpq_class;

/// Laurent polynomial in u over the rationals, u^2 = v.  Exponents are
/// u-exponents throughout; even exponents are printed as powers of v.
class LaurentPoly {
public:
    LaurentPoly() = default;
    explicit LaurentPoly(const Rat& c) {
        if (c != 0) coeffs_[0] = c;
    }
    static LaurentPoly u_pow(long e, const Rat& c = 1) {
        LaurentPoly p;
        if (c != 0) p.coeffs_[e] = c;
        return p;
    }
    static LaurentPoly v_pow(long e, const Rat& c = 1) { return u_pow(2 * e, c); }

    bool is_zero() const { return coeffs_.empty(); }
    bool is_one() const;
    /// True when the polynomial is c*u^e for a single term.
    bool is_monomial() const { return coeffs_.size() == 1; }

    long min_exp() const;
    long max_exp() const;
    Rat coeff(long e) const;
    const std::map<long, Rat>& terms() const { return coeffs_; }

    /// All u-exponents even, i.e. the value lies in Q(v).
    bool even_only() const;

    LaurentPoly operator-() const;
    LaurentPoly operator+(const LaurentPoly& o) const;
    LaurentPoly operator-(const LaurentPoly& o) const;
    LaurentPoly operator*(const LaurentPoly& o) const;
    bool operator==(const LaurentPoly& o) const { return coeffs_ == o.coeffs_; }

    /// Multiply by c*u^e.
    LaurentPoly shifted(long e, const Rat& c = 1) const;

    std::string str() const;

private:
    void set(long e, const Rat& c) {
        if (c == 0)
            coeffs_.erase(e);
        else
            coeffs_[e] = c;
    }
    std::map<long, Rat> coeffs_; // exponent of u -> coefficient, no zeros stored
    friend LaurentPoly lp_gcd(LaurentPoly a, LaurentPoly b);
    friend std::pair<LaurentPoly, LaurentPoly> lp_divmod(const LaurentPoly& a, const LaurentPoly& b);
};

LaurentPoly lp_gcd(LaurentPoly a, LaurentPoly b);
std::pair<LaurentPoly, LaurentPoly> lp_divmod(const LaurentPoly& a, const LaurentPoly& b);

/// Element of Q(u): quotient of two Laurent polynomials, kept normalized so
/// that gcd(num, den) = 1 and den is monic with lowest u-exponent zero.
/// Equality of normalized forms is plain structural equality.
class FieldElem {
public:
    FieldElem() : num_(), den_(Rat(1)) {}
    FieldElem(const Rat& c) : num_(c), den_(Rat(1)) {}
    FieldElem(long c) : num_(Rat(c)), den_(Rat(1)) {}
    FieldElem(const LaurentPoly& n) : num_(n), den_(Rat(1)) {}
    FieldElem(LaurentPoly n, LaurentPoly d);

    static FieldElem u_pow(long e) { return FieldElem(LaurentPoly::u_pow(e)); }
    static FieldElem v_pow(long e) { return FieldElem(LaurentPoly::v_pow(e)); }
    static FieldElem u() { return u_pow(1); }
    static FieldElem v() { return v_pow(1); }

    const LaurentPoly& num() const { return num_; }
    const LaurentPoly& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_.is_one() && den_.is_one(); }

    FieldElem operator-() const;
    FieldElem operator+(const FieldElem& o) const;
    FieldElem operator-(const FieldElem& o) const;
    FieldElem operator*(const FieldElem& o) const;
    FieldElem operator/(const FieldElem& o) const { return *this * o.inv(); }
    FieldElem& operator+=(const FieldElem& o) { return *this = *this + o; }
    FieldElem& operator-=(const FieldElem& o) { return *this = *this - o; }
    FieldElem& operator*=(const FieldElem& o) { return *this = *this * o; }
    FieldElem inv() const;
    FieldElem pow(long k) const;
    bool operator==(const FieldElem& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const FieldElem& o) const { return !(*this == o); }

    std::string str() const;

private:
    void normalize();
    LaurentPoly num_, den_;
};

/// Parse the textual form produced by FieldElem::str / LaurentPoly::str,
/// e.g. "-v^-2", "u^3 + 1", "(v - v^-1)/(v^2 - 1)", "3/2*v".
FieldElem parse_field_elem(const std::string& text);

/// Element a + b*sqrt(q) of the quadratic ring used on the Hall side.
class QuadNum {
public:
    QuadNum() : a_(0), b_(0), q_(0) {}
    QuadNum(Rat a, Rat b, long q) : a_(std::move(a)), b_(std::move(b)), q_(q) {}
    static QuadNum integer(const Rat& a, long q) { return QuadNum(a, 0, q); }
    static QuadNum sqrtq(long q) { return QuadNum(0, 1, q); }

    const Rat& a() const { return a_; }
    const Rat& b() const { return b_; }
    long q() const { return q_; }
    bool is_zero() const { return a_ == 0 && b_ == 0; }

    QuadNum operator-() const { return QuadNum(-a_, -b_, q_); }
    QuadNum operator+(const QuadNum& o) const;
    QuadNum operator-(const QuadNum& o) const;
    QuadNum operator*(const QuadNum& o) const;
    QuadNum inv() const;
    QuadNum operator/(const QuadNum& o) const { return *this * o.inv(); }
    QuadNum& operator+=(const QuadNum& o) { return *this = *this + o; }
    QuadNum& operator*=(const QuadNum& o) { return *this = *this * o; }
    bool operator==(const QuadNum& o) const { return a_ == o.a_ && b_ == o.b_; }
    bool operator!=(const QuadNum& o) const { return !(*this == o); }

    /// sqrt(q)^e for e possibly negative.
    static QuadNum sqrtq_pow(long e, long q);

    std::string str() const;

private:
    void check_compat(const QuadNum& o) const;
    Rat a_, b_;
    long q_; // 0 acts as a wildcard for additive/multiplicative identities
};

/// Evaluate x at v = sqrt(q).  Requires x to lie in Q(v) (even u-powers only)
/// and the denominator not to vanish at the evaluation point.
QuadNum specialize(const FieldElem& x, long q);

/// Square root of eps*v^m with eps in {+1,-1}: defined only when eps = +1,
/// returning the root u^m with positive leading coefficient.
FieldElem sqrt_unit(const FieldElem& s);

/// Quantum integer [r] = (v^r - v^-r)/(v - v^-1) and friends.
FieldElem quantum_int(long r);
FieldElem quantum_factorial(long r);
FieldElem quantum_binomial(long m, long r);

} // namespace iqt
