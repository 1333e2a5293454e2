#pragma once

#include <map>
#include <string>
#include <vector>

#include "painleq/jet.hpp"

namespace painleq {

// Which equivalence problem a frame object belongs to.
enum class ProblemClass { Fiber, Point };

// A derivation on the frame manifold, given by one coefficient expression
// per coordinate. Coefficients may reference the jet coordinates, frame
// coordinates, parameters, and the symbols f, f_x, f_y, f_p, f_pp, ... that
// stand for the equation right-hand side and its partial derivatives.
struct DerivationSpec {
    std::string name;   // e.g. "X1"; trailing digits give the word index
    int index = 0;
    ProblemClass problem = ProblemClass::Fiber;
    std::vector<std::string> coordinates;                // declared coordinate order
    std::map<std::string, std::string> coefficients;     // coordinate -> expression

    // instantiated for a concrete equation: universe var -> coefficient
    std::map<std::size_t, RationalFunction> instantiate(const Ode& ode) const;
};

using DerivationSet = std::vector<DerivationSpec>;

// I_{b; i j k ...}: base invariant index and the derivation indices applied
// left-to-right as listed (first index acts first).
struct InvariantWord {
    int base = 1;
    std::vector<int> indices;

    std::string str() const;
};

struct FiberInvariants {
    RationalFunction i1, i2, i3;
};

struct PointInvariants {
    RationalFunction k1, k2;
};

// The three fundamental invariants of the fiber-preserving problem on the
// frame manifold with coordinates (x, y, p, a1, a2, a4).
FiberInvariants fundamental_fiber(const Ode& ode);

// The two nonzero fundamental invariants of the point problem on the frame
// manifold with coordinates (x, y, p, a1, a2, a4, a5, b).
PointInvariants fundamental_point(const Ode& ode);

// The built-in derivations X1, X3 of the fiber problem.
DerivationSet builtin_derivations_fiber();

// Apply an invariant word to a base frame function.
RationalFunction apply_word(const InvariantWord& word, const RationalFunction& base,
                            const DerivationSet& derivs, const Ode& ode);

// Resolve the word's base invariant (1 or 2) for the given problem class.
RationalFunction base_invariant(const InvariantWord& word, ProblemClass cls, const Ode& ode);

// Derivation-table file I/O (JSON; see README for the schema).
DerivationSet load_derivations(const std::string& path);
DerivationSet parse_derivations(const std::string& json_text);
std::string save_derivations(const DerivationSet& set);

}  // namespace painleq
