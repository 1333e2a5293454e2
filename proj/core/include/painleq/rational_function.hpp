#pragma once

#include <string>

#include "painleq/polynomial.hpp"

namespace painleq {

// Quotient of two polynomials in canonical form: gcd(num, den) = 1 and the
// denominator is integer-primitive with positive leading coefficient. The
// representation is unique, so equality is structural and is_zero is exact.
class RationalFunction {
public:
    RationalFunction() = default;
    explicit RationalFunction(Polynomial num)
        : num_(std::move(num)), den_(Polynomial::constant(num_.vars(), Rational(1))) {}
    RationalFunction(Polynomial num, Polynomial den);  // normalizes

    static RationalFunction constant(const VarSetPtr& vars, const Rational& c) {
        return RationalFunction(Polynomial::constant(vars, c));
    }
    static RationalFunction variable(const VarSetPtr& vars, std::size_t index) {
        return RationalFunction(Polynomial::variable(vars, index));
    }

    const Polynomial& num() const { return num_; }
    const Polynomial& den() const { return den_; }
    const VarSetPtr& vars() const { return num_.vars(); }

    bool is_zero() const { return num_.is_zero(); }
    bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
    Rational constant_value() const { return num_.constant_value() / den_.constant_value(); }

    bool depends_on(std::size_t var) const { return num_.depends_on(var) || den_.depends_on(var); }

    RationalFunction operator-() const;
    friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b);
    friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b);
    friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b);
    friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b);
    RationalFunction& operator+=(const RationalFunction& o) { return *this = *this + o; }
    RationalFunction& operator-=(const RationalFunction& o) { return *this = *this - o; }
    RationalFunction& operator*=(const RationalFunction& o) { return *this = *this * o; }
    RationalFunction& operator/=(const RationalFunction& o) { return *this = *this / o; }

    RationalFunction inverse() const;
    RationalFunction pow(long e) const;
    RationalFunction derivative(std::size_t var) const;
    RationalFunction substituted(std::size_t var, const RationalFunction& value) const;

    bool operator==(const RationalFunction& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const RationalFunction& o) const { return !(*this == o); }

    std::string str() const;  // canonical text, parseable by the expression parser

private:
    Polynomial num_, den_;
};

std::string polynomial_str(const Polynomial& p);

}  // namespace painleq
