#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "painleq/rational_function.hpp"

namespace painleq {

class RadicalTower;
using TowerPtr = std::shared_ptr<const RadicalTower>;

// Exponent vector over the tower generators; size equals generator count of
// the tower an element lives on.
using GenExp = std::vector<std::uint32_t>;

// Element of the quotient ring  Q(vars)[u_1,...,u_n] / (u_i^{d_i} - R_i),
// stored reduced: every generator exponent is < its degree, no zero
// coefficients. Representation is canonical, equality is structural.
class ExtensionElement {
public:
    ExtensionElement() = default;
    ExtensionElement(TowerPtr tower, RationalFunction scalar);

    static ExtensionElement generator(const TowerPtr& tower, std::size_t gen_index);

    const TowerPtr& tower() const { return tower_; }
    const std::map<GenExp, RationalFunction>& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    bool is_scalar() const;  // no generator appears
    RationalFunction scalar_value() const;  // pre: is_scalar()

    ExtensionElement operator-() const;
    friend ExtensionElement operator+(const ExtensionElement& a, const ExtensionElement& b);
    friend ExtensionElement operator-(const ExtensionElement& a, const ExtensionElement& b);
    friend ExtensionElement operator*(const ExtensionElement& a, const ExtensionElement& b);
    friend ExtensionElement operator/(const ExtensionElement& a, const ExtensionElement& b);
    ExtensionElement& operator+=(const ExtensionElement& o) { return *this = *this + o; }
    ExtensionElement& operator-=(const ExtensionElement& o) { return *this = *this - o; }
    ExtensionElement& operator*=(const ExtensionElement& o) { return *this = *this * o; }

    ExtensionElement scaled(const RationalFunction& c) const;
    ExtensionElement pow(unsigned e) const;

    // Throws DivisionByZero on the zero element, NonInvertible on a nonzero
    // zero divisor.
    ExtensionElement inverse() const;

    ExtensionElement derivative(std::size_t var) const;

    // True iff no coefficient depends on `var` and no generator reachable
    // from this element has a relation depending on `var`.
    bool depends_on_var(std::size_t var) const;

    bool operator==(const ExtensionElement& o) const;
    bool operator!=(const ExtensionElement& o) const { return !(*this == o); }

    std::string str() const;

    // internal: construct from raw terms (reduces)
    static ExtensionElement from_terms(TowerPtr tower, std::map<GenExp, RationalFunction> terms);

private:
    void reduce();

    TowerPtr tower_;
    std::map<GenExp, RationalFunction> terms_;
};

// Chain of radical extensions u_i^{d_i} = R_i, each R_i involving only the
// generators before it. Immutable; extending yields a new tower.
class RadicalTower : public std::enable_shared_from_this<RadicalTower> {
public:
    struct Generator {
        std::string name;
        unsigned degree;  // >= 2
        // relation terms over the *previous* generators (GenExp length = index)
        std::vector<std::pair<GenExp, RationalFunction>> relation;
        // eagerly computed d(u)/u for the jet variables, as terms over the
        // full tower up to and including this generator
        std::map<std::size_t, std::vector<std::pair<GenExp, RationalFunction>>> log_derivative;
    };

    static TowerPtr base(VarSetPtr vars);
    TowerPtr extended(const std::string& name, unsigned degree, const ExtensionElement& relation,
                      const std::vector<std::size_t>& diff_vars = {}) const;

    const VarSetPtr& vars() const { return vars_; }
    std::size_t size() const { return gens_.size(); }
    const Generator& gen(std::size_t i) const { return gens_[i]; }
    std::optional<std::size_t> gen_index(std::string_view name) const;

    unsigned long total_degree() const;  // product of generator degrees

    bool same_structure(const RadicalTower& o) const;

private:
    friend class ExtensionElement;
    RadicalTower() = default;

    VarSetPtr vars_;
    std::vector<Generator> gens_;
};

inline bool same_tower(const TowerPtr& a, const TowerPtr& b) {
    return a == b || (a && b && a->same_structure(*b));
}

// Substitute variables of a rational function by tower elements; unbound
// variables stay symbolic. Throws DivisionByZero if the denominator becomes
// the zero element.
ExtensionElement substitute(const RationalFunction& rf,
                            const std::map<std::size_t, ExtensionElement>& bindings,
                            const TowerPtr& tower);

}  // namespace painleq
