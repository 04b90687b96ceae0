#include "iqt/scalars.hpp"

#include <cctype>
#include <sstream>

namespace iqt {

const char* err_name(Err e) {
    switch (e) {
    case Err::DivisionByZero: return "DivisionByZero";
    case Err::OddHalfPower: return "OddHalfPower";
    case Err::PoleAtSqrtQ: return "PoleAtSqrtQ";
    case Err::NotASquare: return "NotASquare";
    case Err::CapExceeded: return "CapExceeded";
    case Err::Unsolvable: return "Unsolvable";
    case Err::NotASink: return "NotASink";
    case Err::InvalidInvolution: return "InvalidInvolution";
    case Err::InvalidParameter: return "InvalidParameter";
    case Err::SizeCapExceeded: return "SizeCapExceeded";
    case Err::RankCapExceeded: return "RankCapExceeded";
    case Err::InsufficientSamples: return "InsufficientSamples";
    case Err::ParseError: return "ParseError";
    }
    return "Unknown";
}

bool LaurentPoly::is_one() const {
    return coeffs_.size() == 1 && coeffs_.begin()->first == 0 && coeffs_.begin()->second == 1;
}

long LaurentPoly::min_exp() const {
    if (coeffs_.empty()) fail(Err::DivisionByZero, "min_exp of zero polynomial");
    return coeffs_.begin()->first;
}

long LaurentPoly::max_exp() const {
    if (coeffs_.empty()) fail(Err::DivisionByZero, "max_exp of zero polynomial");
    return coeffs_.rbegin()->first;
}

Rat LaurentPoly::coeff(long e) const {
    auto it = coeffs_.find(e);
    return it == coeffs_.end() ? Rat(0) : it->second;
}

bool LaurentPoly::even_only() const {
    for (auto& [e, c] : coeffs_)
        if (e % 2 != 0) return false;
    return true;
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly r;
    for (auto& [e, c] : coeffs_) r.coeffs_[e] = -c;
    return r;
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
    LaurentPoly r = *this;
    for (auto& [e, c] : o.coeffs_) {
        Rat s = r.coeff(e) + c;
        r.set(e, s);
    }
    return r;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const { return *this + (-o); }

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
    LaurentPoly r;
    for (auto& [e1, c1] : coeffs_)
        for (auto& [e2, c2] : o.coeffs_) {
            Rat s = r.coeff(e1 + e2) + c1 * c2;
            r.set(e1 + e2, s);
        }
    return r;
}

LaurentPoly LaurentPoly::shifted(long e, const Rat& c) const {
    LaurentPoly r;
    if (c == 0) return r;
    for (auto& [e1, c1] : coeffs_) r.coeffs_[e1 + e] = c1 * c;
    return r;
}

// Division with remainder of ordinary polynomials after shifting both
// arguments to have lowest exponent zero.
std::pair<LaurentPoly, LaurentPoly> lp_divmod(const LaurentPoly& a, const LaurentPoly& b) {
    if (b.is_zero()) fail(Err::DivisionByZero, "polynomial division by zero");
    if (a.is_zero()) return {LaurentPoly(), LaurentPoly()};
    long sa = a.min_exp(), sb = b.min_exp();
    LaurentPoly rem = a.shifted(-sa);
    LaurentPoly den = b.shifted(-sb);
    LaurentPoly quo;
    long db = den.max_exp();
    Rat lead = den.coeff(db);
    while (!rem.is_zero() && rem.max_exp() >= db) {
        long e = rem.max_exp() - db;
        Rat c = rem.coeff(rem.max_exp()) / lead;
        quo = quo + LaurentPoly::u_pow(e, c);
        rem = rem - den.shifted(e, c);
    }
    // undo the shifts: a = q*b + r  with  q = quo * u^(sa-sb), r = rem * u^sa
    return {quo.shifted(sa - sb), rem.shifted(sa)};
}

LaurentPoly lp_gcd(LaurentPoly a, LaurentPoly b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    a = a.shifted(-a.min_exp());
    b = b.shifted(-b.min_exp());
    while (!b.is_zero()) {
        auto [q, r] = lp_divmod(a, b);
        (void)q;
        a = b;
        b = r.is_zero() ? r : r.shifted(-r.min_exp());
    }
    // monic normalization
    return a.shifted(0, Rat(1) / a.coeff(a.max_exp()));
}

FieldElem::FieldElem(LaurentPoly n, LaurentPoly d) : num_(std::move(n)), den_(std::move(d)) {
    if (den_.is_zero()) fail(Err::DivisionByZero, "zero denominator");
    normalize();
}

void FieldElem::normalize() {
    if (num_.is_zero()) {
        den_ = LaurentPoly(Rat(1));
        return;
    }
    if (den_.is_one()) return;
    // denominator: monic, lowest exponent zero
    long s = den_.min_exp();
    Rat lead = den_.coeff(den_.max_exp());
    if (s != 0 || lead != 1) {
        den_ = den_.shifted(-s, Rat(1) / lead);
        num_ = num_.shifted(-s, Rat(1) / lead);
    }
    if (den_.is_one()) return;
    // a monomial numerator shares no polynomial factor with a denominator
    // whose lowest exponent is zero
    if (num_.is_monomial()) return;
    LaurentPoly g = lp_gcd(num_, den_);
    if (!g.is_one()) {
        num_ = lp_divmod(num_, g).first;
        den_ = lp_divmod(den_, g).first;
        long s2 = den_.min_exp();
        Rat lead2 = den_.coeff(den_.max_exp());
        if (s2 != 0 || lead2 != 1) {
            den_ = den_.shifted(-s2, Rat(1) / lead2);
            num_ = num_.shifted(-s2, Rat(1) / lead2);
        }
    }
}

FieldElem FieldElem::operator-() const {
    FieldElem r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
}

FieldElem FieldElem::operator+(const FieldElem& o) const {
    if (den_ == o.den_) return FieldElem(num_ + o.num_, den_);
    return FieldElem(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

FieldElem FieldElem::operator-(const FieldElem& o) const {
    if (den_ == o.den_) return FieldElem(num_ - o.num_, den_);
    return FieldElem(num_ * o.den_ + (-o.num_) * den_, den_ * o.den_);
}

FieldElem FieldElem::operator*(const FieldElem& o) const {
    if (den_.is_one() && o.den_.is_one()) {
        FieldElem r;
        r.num_ = num_ * o.num_;
        return r;
    }
    return FieldElem(num_ * o.num_, den_ * o.den_);
}

FieldElem FieldElem::inv() const {
    if (is_zero()) fail(Err::DivisionByZero, "inverse of zero");
    return FieldElem(den_, num_);
}

FieldElem FieldElem::pow(long k) const {
    if (k < 0) return inv().pow(-k);
    FieldElem r(1);
    FieldElem b = *this;
    while (k > 0) {
        if (k & 1) r = r * b;
        b = b * b;
        k >>= 1;
    }
    return r;
}

namespace {

std::string rat_str(const Rat& c) {
    std::ostringstream os;
    os << c;
    return os.str();
}

// one monomial, e is the u-exponent
void print_term(std::ostream& os, bool first, const Rat& c, long e) {
    Rat ac = c < 0 ? Rat(-c) : c;
    if (!first)
        os << (c < 0 ? " - " : " + ");
    else if (c < 0)
        os << "-";
    if (e == 0) {
        os << rat_str(ac);
        return;
    }
    if (ac != 1) os << rat_str(ac) << "*";
    if (e % 2 == 0) {
        os << "v";
        if (e != 2) os << "^" << e / 2;
    } else {
        os << "u";
        if (e != 1) os << "^" << e;
    }
}

} // namespace

std::string LaurentPoly::str() const {
    if (coeffs_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        print_term(os, first, it->second, it->first);
        first = false;
    }
    return os.str();
}

std::string FieldElem::str() const {
    if (den_.is_one()) return num_.str();
    std::string n = num_.str();
    if (num_.terms().size() > 1) n = "(" + n + ")";
    std::string d = den_.str();
    if (den_.terms().size() > 1) d = "(" + d + ")";
    return n + "/" + d;
}

// ---------------------------------------------------------------------------
// parser for the same grammar

namespace {

struct Lexer {
    const std::string& s;
    size_t pos = 0;
    explicit Lexer(const std::string& t) : s(t) {}
    void skip() {
        while (pos < s.size() && std::isspace((unsigned char)s[pos])) pos++;
    }
    bool eat(char c) {
        skip();
        if (pos < s.size() && s[pos] == c) {
            pos++;
            return true;
        }
        return false;
    }
    char peek() {
        skip();
        return pos < s.size() ? s[pos] : '\0';
    }
};

long parse_int(Lexer& lx) {
    lx.skip();
    bool neg = lx.eat('-');
    if (!neg) lx.eat('+');
    lx.skip();
    if (lx.pos >= lx.s.size() || !std::isdigit((unsigned char)lx.s[lx.pos]))
        fail(Err::ParseError, "expected integer in '" + lx.s + "'");
    long n = 0;
    while (lx.pos < lx.s.size() && std::isdigit((unsigned char)lx.s[lx.pos]))
        n = n * 10 + (lx.s[lx.pos++] - '0');
    return neg ? -n : n;
}

FieldElem parse_sum(Lexer& lx);

FieldElem parse_atom(Lexer& lx) {
    if (lx.eat('(')) {
        FieldElem r = parse_sum(lx);
        if (!lx.eat(')')) fail(Err::ParseError, "missing ')' in '" + lx.s + "'");
        return r;
    }
    char c = lx.peek();
    if (c == 'u' || c == 'v') {
        lx.pos++;
        long e = 1;
        if (lx.eat('^')) e = parse_int(lx);
        return c == 'v' ? FieldElem::v_pow(e) : FieldElem::u_pow(e);
    }
    if (std::isdigit((unsigned char)c)) {
        long n = parse_int(lx);
        if (lx.eat('/')) {
            // rational literal only when followed by a digit, otherwise the
            // '/' is a field division handled by the caller
            size_t save = lx.pos;
            if (std::isdigit((unsigned char)lx.peek())) {
                long d = parse_int(lx);
                return FieldElem(Rat(n) / Rat(d));
            }
            lx.pos = save - 1; // give back the '/'
        }
        return FieldElem(Rat(n));
    }
    fail(Err::ParseError, "unexpected character in '" + lx.s + "'");
}

FieldElem parse_product(Lexer& lx) {
    FieldElem r = parse_atom(lx);
    for (;;) {
        if (lx.eat('*')) {
            r = r * parse_atom(lx);
        } else if (lx.eat('/')) {
            r = r / parse_atom(lx);
        } else {
            char c = lx.peek();
            // implicit product as in "3v^2"
            if (c == 'u' || c == 'v' || c == '(')
                r = r * parse_atom(lx);
            else
                break;
        }
    }
    return r;
}

FieldElem parse_sum(Lexer& lx) {
    FieldElem r(0);
    bool neg = lx.eat('-');
    r = parse_product(lx);
    if (neg) r = -r;
    for (;;) {
        if (lx.eat('+'))
            r += parse_product(lx);
        else if (lx.eat('-'))
            r -= parse_product(lx);
        else
            break;
    }
    return r;
}

} // namespace

FieldElem parse_field_elem(const std::string& text) {
    Lexer lx(text);
    FieldElem r = parse_sum(lx);
    lx.skip();
    if (lx.pos != text.size()) fail(Err::ParseError, "trailing input in '" + text + "'");
    return r;
}

// ---------------------------------------------------------------------------

void QuadNum::check_compat(const QuadNum& o) const {
    if (q_ != 0 && o.q_ != 0 && q_ != o.q_)
        fail(Err::InvalidParameter, "mixing sqrt(q) for different q");
}

QuadNum QuadNum::operator+(const QuadNum& o) const {
    check_compat(o);
    return QuadNum(a_ + o.a_, b_ + o.b_, q_ ? q_ : o.q_);
}

QuadNum QuadNum::operator-(const QuadNum& o) const { return *this + (-o); }

QuadNum QuadNum::operator*(const QuadNum& o) const {
    check_compat(o);
    long q = q_ ? q_ : o.q_;
    return QuadNum(a_ * o.a_ + Rat(q) * b_ * o.b_, a_ * o.b_ + b_ * o.a_, q);
}

QuadNum QuadNum::inv() const {
    Rat n = a_ * a_ - Rat(q_) * b_ * b_;
    if (is_zero() || n == 0) fail(Err::DivisionByZero, "inverse of zero quadratic number");
    return QuadNum(a_ / n, -b_ / n, q_);
}

QuadNum QuadNum::sqrtq_pow(long e, long q) {
    if (e >= 0) {
        Rat qe = 1;
        for (long i = 0; i + 1 < e; i += 2) qe *= q;
        return (e % 2 == 0) ? QuadNum(qe, 0, q) : QuadNum(0, qe, q);
    }
    return sqrtq_pow(-e, q).inv();
}

std::string QuadNum::str() const {
    std::ostringstream os;
    if (b_ == 0) {
        os << a_;
    } else {
        os << a_ << (b_ < 0 ? " - " : " + ");
        Rat ab = b_ < 0 ? Rat(-b_) : b_;
        if (ab != 1) os << ab << "*";
        os << "sqrt(" << q_ << ")";
    }
    return os.str();
}

namespace {

QuadNum eval_at_sqrtq(const LaurentPoly& p, long q) {
    QuadNum r(0, 0, q);
    for (auto& [e, c] : p.terms()) {
        if (e % 2 != 0) fail(Err::OddHalfPower, "odd power of u survives at " + p.str());
        r += QuadNum::sqrtq_pow(e / 2, q) * QuadNum(c, 0, q);
    }
    return r;
}

} // namespace

QuadNum specialize(const FieldElem& x, long q) {
    if (q < 2) fail(Err::InvalidParameter, "q must be at least 2");
    QuadNum den = eval_at_sqrtq(x.den(), q);
    if (den.is_zero()) fail(Err::PoleAtSqrtQ, "denominator vanishes at v = sqrt(" + std::to_string(q) + ")");
    QuadNum num = eval_at_sqrtq(x.num(), q);
    return num / den;
}

FieldElem sqrt_unit(const FieldElem& s) {
    if (!s.den().is_one() || !s.num().is_monomial())
        fail(Err::NotASquare, "radicand " + s.str() + " is not of the form eps*v^m");
    long e = s.num().min_exp();
    Rat c = s.num().coeff(e);
    if (c != 1 && c != -1)
        fail(Err::NotASquare, "radicand " + s.str() + " is not of the form eps*v^m");
    if (c == -1) fail(Err::NotASquare, "radicand " + s.str() + " is negative");
    if (e % 2 != 0) fail(Err::NotASquare, "radicand " + s.str() + " has odd u-power");
    return FieldElem::u_pow(e / 2);
}

FieldElem quantum_int(long r) {
    // [r] = v^(r-1) + v^(r-3) + ... + v^(1-r)
    LaurentPoly p;
    if (r < 0) return -quantum_int(-r);
    for (long k = r - 1; k >= 1 - r; k -= 2) p = p + LaurentPoly::v_pow(k);
    return FieldElem(p);
}

FieldElem quantum_factorial(long r) {
    FieldElem f(1);
    for (long i = 1; i <= r; i++) f *= quantum_int(i);
    return f;
}

FieldElem quantum_binomial(long m, long r) {
    if (r < 0) fail(Err::InvalidParameter, "negative binomial index");
    FieldElem f(1);
    for (long i = 0; i < r; i++) f *= quantum_int(m - i);
    return f / quantum_factorial(r);
}

} // namespace iqt
