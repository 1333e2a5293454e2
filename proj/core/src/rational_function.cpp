#include "painleq/rational_function.hpp"

#include <sstream>

namespace painleq {

RationalFunction::RationalFunction(Polynomial num, Polynomial den)
    : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw DivisionByZero("rational function with zero denominator");
    if (num_.is_zero()) {
        den_ = Polynomial::constant(den_.vars(), Rational(1));
        return;
    }
    Polynomial g = Polynomial::gcd(num_, den_);
    if (!g.is_one()) {
        num_ = num_.divide_exact(g);
        den_ = den_.divide_exact(g);
    }
    Rational unit = den_.signed_content();
    den_ = den_.scaled(Rational(1) / unit);
    num_ = num_.scaled(Rational(1) / unit);
}

RationalFunction RationalFunction::operator-() const {
    RationalFunction r(*this);
    r.num_ = -r.num_;
    return r;
}

RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    Polynomial g = Polynomial::gcd(a.den_, b.den_);
    Polynomial da = a.den_.divide_exact(g);
    Polynomial db = b.den_.divide_exact(g);
    return RationalFunction(a.num_ * db + b.num_ * da, da * b.den_);
}

RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) { return a + (-b); }

RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
    if (a.is_zero()) return a;
    if (b.is_zero()) return b;
    Polynomial g1 = Polynomial::gcd(a.num_, b.den_);
    Polynomial g2 = Polynomial::gcd(b.num_, a.den_);
    return RationalFunction(a.num_.divide_exact(g1) * b.num_.divide_exact(g2),
                            a.den_.divide_exact(g2) * b.den_.divide_exact(g1));
}

RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
    return a * b.inverse();
}

RationalFunction RationalFunction::inverse() const {
    if (is_zero()) throw DivisionByZero("inverse of zero");
    return RationalFunction(den_, num_);
}

RationalFunction RationalFunction::pow(long e) const {
    if (e == 0) return constant(vars(), Rational(1));
    RationalFunction base = e > 0 ? *this : inverse();
    unsigned long n = e > 0 ? (unsigned long)e : (unsigned long)(-e);
    // num and den are coprime, so powers stay canonical up to the unit
    return RationalFunction(base.num_.pow(unsigned(n)), base.den_.pow(unsigned(n)));
}

RationalFunction RationalFunction::derivative(std::size_t var) const {
    // (n/d)' = (n'd - nd')/d^2
    Polynomial n1 = num_.derivative(var) * den_ - num_ * den_.derivative(var);
    return RationalFunction(std::move(n1), den_ * den_);
}

RationalFunction RationalFunction::substituted(std::size_t var, const RationalFunction& value) const {
    // substitute into numerator and denominator separately
    auto subst_poly = [&](const Polynomial& p) {
        std::vector<Polynomial> coeffs = p.coefficients_in(var);
        RationalFunction acc(Polynomial(p.vars()));
        for (std::size_t i = coeffs.size(); i-- > 0;)
            acc = acc * value + RationalFunction(coeffs[i]);
        return acc;
    };
    RationalFunction nn = subst_poly(num_);
    RationalFunction dd = subst_poly(den_);
    if (dd.is_zero()) throw DivisionByZero("substitution produced zero denominator");
    return nn / dd;
}

namespace {

void write_rational_factor(std::ostringstream& os, const Rational& c, bool lead_factor) {
    if (c.get_den() == 1) {
        os << c.get_num().get_str();
    } else if (lead_factor) {
        os << c.get_num().get_str() << '/' << c.get_den().get_str();
    } else {
        os << c.get_num().get_str() << '/' << c.get_den().get_str();
    }
}

}  // namespace

std::string polynomial_str(const Polynomial& p) {
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& t : p.terms()) {
        Rational c = t.coeff;
        if (first) {
            if (sign(c) < 0) {
                os << '-';
                c = -c;
            }
        } else {
            os << (sign(c) < 0 ? " - " : " + ");
            if (sign(c) < 0) c = -c;
        }
        first = false;
        bool has_vars = false;
        std::ostringstream vs;
        for (std::size_t v = 0; v < t.mono.size(); ++v) {
            if (t.mono[v] == 0) continue;
            if (has_vars) vs << '*';
            vs << p.vars()->name(v);
            if (t.mono[v] != 1) vs << '^' << t.mono[v];
            has_vars = true;
        }
        if (!has_vars) {
            write_rational_factor(os, c, true);
        } else if (c == 1) {
            os << vs.str();
        } else {
            write_rational_factor(os, c, true);
            os << '*' << vs.str();
        }
    }
    return os.str();
}

std::string RationalFunction::str() const {
    if (den_.is_one()) {
        if (num_.terms().size() <= 1) return polynomial_str(num_);
        return polynomial_str(num_);
    }
    std::ostringstream os;
    bool num_paren = num_.terms().size() > 1;
    bool den_paren = den_.terms().size() > 1 ||
                     (den_.terms().size() == 1 &&
                      (den_.leading_term().coeff != 1 || den_.total_degree() > 1));
    // a single monomial denominator like y^4 needs no parentheses
    if (den_.terms().size() == 1) {
        const auto& lt = den_.leading_term();
        int nz = 0;
        for (auto e : lt.mono) nz += (e != 0);
        den_paren = (lt.coeff != 1 && nz > 0) || nz > 1;
        if (lt.coeff.get_den() != 1) den_paren = true;
    }
    if (num_paren) os << '(' << polynomial_str(num_) << ')';
    else os << polynomial_str(num_);
    os << '/';
    if (den_paren) os << '(' << polynomial_str(den_) << ')';
    else os << polynomial_str(den_);
    return os.str();
}

}  // namespace painleq
