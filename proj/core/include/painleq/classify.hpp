#pragma once

#include "painleq/normalize.hpp"

namespace painleq {

// A candidate equivalence transformation: components live in a radical tower
// whose generators ("alphabar", "ybar") carry the defining relations. The
// map is (x, y) -> (xbar, ybar) with prolongation pbar; abar is present for
// the Painleve II target with nonzero parameter.
struct CandidateTransformation {
    TowerPtr tower;
    ExtensionElement xbar, ybar, pbar;
    std::optional<ExtensionElement> abar;
    unsigned long degree = 1;
};

struct VerifyResult {
    bool ok = false;
    std::string failed_check;  // empty on success
};

struct Verdict {
    enum class Reason { None, BranchViolation, DivisionByZero, VerificationFailed, MissingDerivations };

    bool equivalent = false;
    std::optional<CandidateTransformation> transformation;  // present iff equivalent
    Reason reason = Reason::None;
    std::string detail;
    unsigned long degree = 0;  // tower degree, present iff equivalent
};

std::string reason_str(Verdict::Reason r);

// Candidate construction from the classification theorems. All throw
// DivisionByZero when a printed denominator vanishes identically (meaning no
// equivalence transformation exists).
CandidateTransformation candidate_p1_fiber(const Ode& ode, const DerivationSet& derivs);
CandidateTransformation candidate_p2_fiber(const Ode& ode, const DerivationSet& derivs);
CandidateTransformation candidate_p2a0_fiber(const Ode& ode, const DerivationSet& derivs);
CandidateTransformation candidate_point(const Ode& ode, Target target, const DerivationSet& derivs);

struct VerifyOptions {
    bool numeric_prescreen = false;  // fail fast at random sample points first
    unsigned prescreen_points = 4;
    double prescreen_tolerance = 1e-9;
};

// Exact verification: the candidate must be a genuine prolonged point map
// (fiber-preserving for the fiber class), its alpha component must be
// constant for the P2 target, and the pullback of the target through it must
// reproduce the input equation exactly.
VerifyResult verify(const Ode& ode, Target target, ProblemClass cls,
                    const CandidateTransformation& cand, const VerifyOptions& opts = {});

// Full pipeline: branch check, normalization, candidate, verification.
Verdict classify(const Ode& ode, Target target, ProblemClass cls, const DerivationSet& derivs,
                 const VerifyOptions& opts = {});

// Branch membership: identical vanishing of the invariants the schemes
// presume (fiber: I2 = I3 = 0; point: f is at most cubic in y').
bool branch_ok(const Ode& ode, ProblemClass cls);

// The discrete symmetry maps of the three targets, as verification fixtures.
// The P2 fixture needs a parameter named "alpha" in the universe.
struct SymmetryFixture {
    Target target;
    PointMap map;
    std::optional<ExtensionElement> abar;
};
std::vector<SymmetryFixture> symmetry_fixtures(const Universe& u);

// Target right-hand side as an element of the candidate's tower.
ExtensionElement target_value(const Universe& u, Target target, const CandidateTransformation& cand);

}  // namespace painleq
