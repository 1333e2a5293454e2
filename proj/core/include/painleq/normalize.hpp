#pragma once

#include <optional>

#include "painleq/invariants.hpp"

namespace painleq {

enum class Target { P1, P2, P2A0 };

// One equation of a normalization scheme: word = rhs or word/den = rhs,
// solved for the designated frame unknown.
struct SchemeEquation {
    InvariantWord num;
    std::optional<InvariantWord> den;
    Rational rhs;
    std::string unknown;
};

struct NormalizationScheme {
    Target target = Target::P1;
    ProblemClass cls = ProblemClass::Fiber;
    std::vector<SchemeEquation> equations;
};

// The printed normalization for each (target, class) pair.
NormalizationScheme scheme_for(Target target, ProblemClass cls);

// Group-parameter substitution produced by solving a scheme. The tower is
// trivial unless the last unknown required a root extraction.
struct FrameSolution {
    TowerPtr tower;
    std::map<std::size_t, ExtensionElement> subs;
};

// Solve the scheme equations sequentially, each for its designated unknown.
// Throws DivisionByZero when an equation is unsatisfiable or forces a
// degenerate frame (this is the "no equivalence" verdict), NonTriangular
// when an equation cannot be solved for its unknown.
FrameSolution solve_frame(const Ode& ode, const NormalizationScheme& scheme,
                          const DerivationSet& derivs);

struct NormalizedInvariant {
    InvariantWord word;
    ExtensionElement value;  // free of frame variables
};

// Apply the word and substitute the frame solution. Throws
// ResidualFrameVariable if a frame variable survives.
NormalizedInvariant normalized(const InvariantWord& word, const Ode& ode,
                               const NormalizationScheme& scheme, const DerivationSet& derivs,
                               const FrameSolution& solution);

// Admissible parameter values forced by identical vanishing of an invariant.
struct ParameterConstraints {
    bool all_values = false;       // invariant vanishes identically: no constraint
    std::size_t param = 0;         // universe index of the constrained parameter
    std::vector<Rational> values;  // admissible values, sorted
};

// Collect the numerator coefficients of `inv` with respect to all
// non-parameter monomials and solve the resulting univariate system.
// Throws UnsupportedConstraintSystem for multivariate parameter sets or
// when non-rational roots remain.
ParameterConstraints parameter_constraints(const RationalFunction& inv, const Universe& u);

}  // namespace painleq
