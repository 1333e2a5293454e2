#pragma once

#include "painleq/tower.hpp"

namespace painleq {

// Indices of the jet coordinates (x, y, p) and frame coordinates inside a
// variable universe. One Universe is shared by everything in a
// classification run.
struct Universe {
    VarSetPtr vars;
    std::size_t x, y, p;
    std::vector<std::size_t> params;          // user parameters
    std::vector<std::size_t> frame;           // a1, a2, a4 (fiber) or a1, a2, a4, a5, b (point)

    // Build a universe with the given parameter names. Frame variables for
    // both problems are always present so one universe serves either class.
    static Universe make(const std::vector<std::string>& param_names);

    std::size_t frame_var(const std::string& name) const;
    bool is_frame(std::size_t v) const;
};

// Right-hand side of y'' = f(x, y, p); no frame variables, no generators.
struct Ode {
    Universe uni;
    RationalFunction f;

    static Ode from_text(const Universe& u, const std::string& text);
    static Ode from_rational(const Universe& u, RationalFunction f);
};

// An algebraic point map (x, y) -> (xbar, ybar) carried in a radical tower.
struct PointMap {
    TowerPtr tower;
    ExtensionElement xbar, ybar;
};

struct ProlongedMap : PointMap {
    ExtensionElement pbar;
};

// Cartan vector field D = d/dx + p d/dy + f d/dp applied to g(x,y,p,...);
// frame variables are treated as constants.
RationalFunction cartan_Dx(const Ode& ode, const RationalFunction& g);
ExtensionElement cartan_Dx(const Ode& ode, const ExtensionElement& g);

// Total derivative d/dx + p d/dy for functions of (x, y) in the tower.
ExtensionElement total_d(const Universe& u, const ExtensionElement& g);

// First prolongation: pbar = D(ybar) / D(xbar).
// Throws DegenerateMap if D(xbar) is identically zero.
ProlongedMap prolong(const Universe& u, const PointMap& m);

// Pull the target equation ybar'' = target(xbar, ybar, pbar) back through m:
// returns g with y'' = g(x, y, p) equivalent to the target under m.
// `target_rhs` is evaluated by substituting the map into a rational f.
ExtensionElement pullback_ode(const Universe& u, const RationalFunction& target_rhs,
                              const PointMap& m);

// Same, but with an already-built target element (used when the target
// involves tower generators such as the alpha parameter of Painleve II).
ExtensionElement pullback_with_target(const Universe& u, const ExtensionElement& target_value,
                                      const ProlongedMap& pm);

bool is_fiber_preserving(const Universe& u, const PointMap& m);

// Compose point maps with trivial towers: first apply `inner`, then `outer`.
PointMap compose(const Universe& u, const PointMap& outer, const PointMap& inner);

}  // namespace painleq
