#include "painleq/jet.hpp"

#include <algorithm>

#include "painleq/ast.hpp"

namespace painleq {

Universe Universe::make(const std::vector<std::string>& param_names) {
    std::vector<std::string> names = {"x", "y", "p"};
    static const char* frame_names[] = {"a1", "a2", "a4", "a5", "b"};
    for (const auto& pn : param_names) {
        if (std::find(names.begin(), names.end(), pn) != names.end())
            throw Error("parameter name collides with a jet coordinate: " + pn);
        for (const char* fn : frame_names)
            if (pn == fn) throw Error("parameter name is reserved: " + pn);
        if (pn == "ybar" || pn == "alphabar") throw Error("parameter name is reserved: " + pn);
        names.push_back(pn);
    }
    Universe u;
    std::size_t nparams = param_names.size();
    for (const char* fn : frame_names) names.emplace_back(fn);
    u.vars = VarSet::make(names);
    u.x = 0;
    u.y = 1;
    u.p = 2;
    for (std::size_t i = 0; i < nparams; ++i) u.params.push_back(3 + i);
    for (std::size_t i = 0; i < 5; ++i) u.frame.push_back(3 + nparams + i);
    return u;
}

std::size_t Universe::frame_var(const std::string& name) const {
    auto idx = vars->index(name);
    if (!idx || !is_frame(*idx)) throw Error("unknown frame variable: " + name);
    return *idx;
}

bool Universe::is_frame(std::size_t v) const {
    return std::find(frame.begin(), frame.end(), v) != frame.end();
}

Ode Ode::from_text(const Universe& u, const std::string& text) {
    return from_rational(u, parse_rational(text, u.vars));
}

Ode Ode::from_rational(const Universe& u, RationalFunction f) {
    for (std::size_t v : u.frame)
        if (f.depends_on(v))
            throw Error("equation right-hand side must not use reserved frame variables");
    return Ode{u, std::move(f)};
}

RationalFunction cartan_Dx(const Ode& ode, const RationalFunction& g) {
    const Universe& u = ode.uni;
    return g.derivative(u.x) + RationalFunction::variable(u.vars, u.p) * g.derivative(u.y) +
           ode.f * g.derivative(u.p);
}

ExtensionElement cartan_Dx(const Ode& ode, const ExtensionElement& g) {
    const Universe& u = ode.uni;
    const TowerPtr& t = g.tower();
    ExtensionElement pvar(t, RationalFunction::variable(u.vars, u.p));
    ExtensionElement fel(t, ode.f);
    return g.derivative(u.x) + pvar * g.derivative(u.y) + fel * g.derivative(u.p);
}

ExtensionElement total_d(const Universe& u, const ExtensionElement& g) {
    ExtensionElement pvar(g.tower(), RationalFunction::variable(u.vars, u.p));
    return g.derivative(u.x) + pvar * g.derivative(u.y);
}

ProlongedMap prolong(const Universe& u, const PointMap& m) {
    ExtensionElement dx = total_d(u, m.xbar);
    if (dx.is_zero()) throw DegenerateMap("prolongation: total derivative of xbar vanishes");
    ProlongedMap pm;
    pm.tower = m.tower;
    pm.xbar = m.xbar;
    pm.ybar = m.ybar;
    ExtensionElement dy = total_d(u, m.ybar);
    try {
        pm.pbar = dy * dx.inverse();
    } catch (const NonInvertible&) {
        throw DegenerateMap("prolongation: total derivative of xbar is a zero divisor");
    }
    return pm;
}

ExtensionElement pullback_with_target(const Universe& u, const ExtensionElement& target_value,
                                      const ProlongedMap& pm) {
    // ybar'' = D2(pbar)/D2(xbar) with D2 = d/dx + p d/dy + y'' d/dp and the
    // equation ybar'' = target. D2(xbar) has no y'' term, D2(pbar) is linear
    // in y''; solve exactly.
    ExtensionElement dxbar = total_d(u, pm.xbar);
    ExtensionElement pbar_p = pm.pbar.derivative(u.p);
    if (pbar_p.is_zero())
        throw NonInvertible("pullback: coefficient of y'' vanishes identically");
    ExtensionElement rest = total_d(u, pm.pbar);  // pbar_x + p pbar_y
    ExtensionElement num = target_value * dxbar - rest;
    try {
        return num * pbar_p.inverse();
    } catch (const NonInvertible&) {
        throw NonInvertible("pullback: coefficient of y'' is a zero divisor");
    }
}

ExtensionElement pullback_ode(const Universe& u, const RationalFunction& target_rhs,
                              const PointMap& m) {
    ProlongedMap pm = prolong(u, m);
    std::map<std::size_t, ExtensionElement> bind = {
        {u.x, pm.xbar}, {u.y, pm.ybar}, {u.p, pm.pbar}};
    ExtensionElement target_value = substitute(target_rhs, bind, m.tower);
    return pullback_with_target(u, target_value, pm);
}

bool is_fiber_preserving(const Universe& u, const PointMap& m) {
    return m.xbar.derivative(u.y).is_zero();
}

PointMap compose(const Universe& u, const PointMap& outer, const PointMap& inner) {
    if (outer.tower->size() != 0 || inner.tower->size() != 0)
        throw Error("composition is only supported for trivial towers");
    std::map<std::size_t, ExtensionElement> bind = {{u.x, inner.xbar}, {u.y, inner.ybar}};
    PointMap r;
    r.tower = inner.tower;
    r.xbar = substitute(outer.xbar.scalar_value(), bind, inner.tower);
    r.ybar = substitute(outer.ybar.scalar_value(), bind, inner.tower);
    return r;
}

}  // namespace painleq
