#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "painleq/rational.hpp"
#include "painleq/varset.hpp"

namespace painleq {

// Exponent vector; size always equals the variable set size.
using Exponents = std::vector<std::int32_t>;

// Graded lexicographic comparison. Returns <0, 0, >0.
int mono_cmp(const Exponents& a, const Exponents& b);

// Sparse multivariate polynomial with exact rational coefficients.
// Terms are kept sorted in strictly decreasing monomial order and never
// carry a zero coefficient, so representation is canonical and equality
// is structural.
class Polynomial {
public:
    struct Term {
        Exponents mono;
        Rational coeff;
    };

    Polynomial() = default;
    explicit Polynomial(VarSetPtr vars) : vars_(std::move(vars)) {}

    static Polynomial constant(VarSetPtr vars, Rational value);
    static Polynomial variable(VarSetPtr vars, std::size_t index);

    const VarSetPtr& vars() const { return vars_; }
    const std::vector<Term>& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && total_degree() == 0); }
    Rational constant_value() const;  // pre: is_constant()
    bool is_one() const { return is_constant() && !is_zero() && constant_value() == 1; }

    // -1 for the zero polynomial
    int degree(std::size_t var) const;
    int total_degree() const;
    bool depends_on(std::size_t var) const { return degree(var) > 0; }

    const Term& leading_term() const { return terms_.front(); }  // pre: !is_zero()

    Polynomial operator-() const;
    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);
    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }
    Polynomial scaled(const Rational& c) const;
    Polynomial pow(unsigned e) const;

    bool operator==(const Polynomial& o) const;
    bool operator!=(const Polynomial& o) const { return !(*this == o); }

    Polynomial derivative(std::size_t var) const;

    // Coefficients of *this viewed as a univariate polynomial in `var`;
    // result[i] is the coefficient of var^i (a polynomial not involving var).
    std::vector<Polynomial> coefficients_in(std::size_t var) const;
    static Polynomial from_coefficients_in(std::size_t var, const std::vector<Polynomial>& coeffs,
                                           const VarSetPtr& vars);

    // Signed rational content: c such that (*this)/c has coprime integer
    // coefficients and a positive leading coefficient. Zero polynomial -> 0.
    Rational signed_content() const;
    Polynomial primitive() const;  // (*this)/signed_content(); zero stays zero

    // Exact division; throws Error if `d` does not divide *this exactly.
    Polynomial divide_exact(const Polynomial& d) const;

    // GCD, normalized to be primitive with positive leading coefficient
    // (constant polynomials give 1).
    static Polynomial gcd(const Polynomial& a, const Polynomial& b);

    // Exact square root over Q, if one exists.
    std::optional<Polynomial> sqrt() const;

    // Substitute var -> value (a polynomial over the same vars).
    Polynomial substituted(std::size_t var, const Polynomial& value) const;

    // Build directly from unsorted (mono, coeff) pairs; merges duplicates.
    static Polynomial from_terms(VarSetPtr vars, std::vector<Term> terms);

private:
    void normalize_sorted();  // sorts, merges, strips zeros

    VarSetPtr vars_;
    std::vector<Term> terms_;
};

}  // namespace painleq
