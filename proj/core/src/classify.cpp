#include "painleq/classify.hpp"

#include <cmath>
#include <complex>
#include <random>

#include "painleq/ast.hpp"

namespace painleq {

std::string reason_str(Verdict::Reason r) {
    switch (r) {
        case Verdict::Reason::None: return "none";
        case Verdict::Reason::BranchViolation: return "branch-violation";
        case Verdict::Reason::DivisionByZero: return "division-by-zero";
        case Verdict::Reason::VerificationFailed: return "verification-failed";
        case Verdict::Reason::MissingDerivations: return "missing-derivations";
    }
    return "unknown";
}

bool branch_ok(const Ode& ode, ProblemClass cls) {
    const Universe& u = ode.uni;
    RationalFunction fp = ode.f.derivative(u.p);
    RationalFunction fpp = fp.derivative(u.p);
    RationalFunction fppp = fpp.derivative(u.p);
    if (cls == ProblemClass::Point) return fppp.derivative(u.p).is_zero();
    RationalFunction fyp = ode.f.derivative(u.y).derivative(u.p);
    return fppp.is_zero() && (fyp - cartan_Dx(ode, fpp)).is_zero();
}

namespace {

InvariantWord wd(int base, std::initializer_list<int> idx) {
    InvariantWord w;
    w.base = base;
    w.indices = idx;
    return w;
}

struct NormalizedWords {
    const Ode& ode;
    NormalizationScheme scheme;
    DerivationSet derivs;
    FrameSolution sol;

    NormalizedWords(const Ode& o, Target t, ProblemClass c, const DerivationSet& d)
        : ode(o), scheme(scheme_for(t, c)), derivs(d), sol(solve_frame(o, scheme, d)) {}

    ExtensionElement operator()(int base, std::initializer_list<int> idx) const {
        return normalized(wd(base, idx), ode, scheme, derivs, sol).value;
    }

    ExtensionElement scalar(const Rational& c) const {
        return ExtensionElement(sol.tower, RationalFunction::constant(ode.uni.vars->names().empty()
                                                                          ? ode.uni.vars
                                                                          : ode.uni.vars,
                                                                      c));
    }
};

ExtensionElement lift(const ExtensionElement& e, const TowerPtr& bigger) {
    std::map<GenExp, RationalFunction> terms;
    for (const auto& [m, c] : e.terms()) {
        GenExp mm(m);
        mm.resize(bigger->size(), 0);
        terms.emplace(std::move(mm), c);
    }
    return ExtensionElement::from_terms(bigger, std::move(terms));
}

void require_nonzero(const ExtensionElement& e, const char* what) {
    if (e.is_zero())
        throw DivisionByZero(std::string("candidate construction: ") + what +
                             " vanishes identically");
}

}  // namespace

CandidateTransformation candidate_p1_fiber(const Ode& ode, const DerivationSet& derivs) {
    const Universe& u = ode.uni;
    NormalizedWords n(ode, Target::P1, ProblemClass::Fiber, derivs);
    ExtensionElement n33 = n(1, {3, 3});
    ExtensionElement n3333 = n(1, {3, 3, 3, 3});
    ExtensionElement n33333 = n(1, {3, 3, 3, 3, 3});
    require_nonzero(n33, "I_{1;33}");
    auto cst = [&](long a, long b = 1) {
        return ExtensionElement(n33.tower(), RationalFunction::constant(u.vars, make_rational(a, b)));
    };
    ExtensionElement S = cst(5) * n33 * n33 + cst(4) * n33333;
    require_nonzero(S, "5 I_{1;33}^2 + 4 I_{1;33333}");

    ExtensionElement rel = cst(-1, 23328000) * n33.pow(5) * (S * S).inverse();
    TowerPtr tower = n.sol.tower->extended("ybar", 5, rel, {u.x, u.y, u.p});
    ExtensionElement ybar = ExtensionElement::generator(tower, tower->size() - 1);

    CandidateTransformation cand;
    cand.tower = tower;
    cand.ybar = ybar;
    cand.xbar = lift(cst(-6) * (cst(120) * n3333 + cst(43) * n33 * n33) * (n33 * n33).inverse(),
                     tower) *
                ybar * ybar;
    cand.pbar = lift(cst(129600) * S * n33.pow(3).inverse(), tower) * ybar.pow(4);
    cand.degree = tower->total_degree();
    return cand;
}

namespace {

struct P2FiberWords {
    ExtensionElement n33, n331, n3331, n33311;
};

P2FiberWords p2_fiber_words(const NormalizedWords& n) {
    return {n(1, {3, 3}), n(1, {3, 3, 1}), n(1, {3, 3, 3, 1}), n(1, {3, 3, 3, 1, 1})};
}

}  // namespace

CandidateTransformation candidate_p2_fiber(const Ode& ode, const DerivationSet& derivs) {
    const Universe& u = ode.uni;
    NormalizedWords n(ode, Target::P2, ProblemClass::Fiber, derivs);
    auto [n33, n331, n3331, n33311] = p2_fiber_words(n);
    auto cst = [&](long a, long b = 1) {
        return ExtensionElement(n33.tower(), RationalFunction::constant(u.vars, make_rational(a, b)));
    };
    require_nonzero(n33311, "I_{1;33311}");
    ExtensionElement G = n3331 - cst(4032);
    require_nonzero(G, "I_{1;3331} - 4032");
    ExtensionElement D = n33311 * n33 + cst(3096576) - cst(4032) * n331;
    require_nonzero(D, "denominator invariant of the Painleve II map");

    // abar^2 = -D^2 / (112 I_{1;33311} G^2)
    ExtensionElement arel = cst(-1, 112) * D * D * (n33311 * G * G).inverse();
    TowerPtr t1 = n.sol.tower->extended("alphabar", 2, arel, {u.x, u.y, u.p});
    ExtensionElement abar = ExtensionElement::generator(t1, t1->size() - 1);
    // ybar^3 = 48384 abar / D
    ExtensionElement yrel = lift(cst(48384) * D.inverse(), t1) * abar;
    TowerPtr t2 = t1->extended("ybar", 3, yrel, {u.x, u.y, u.p});
    ExtensionElement ybar = ExtensionElement::generator(t2, t2->size() - 1);
    ExtensionElement abar2 = lift(abar, t2);

    CandidateTransformation cand;
    cand.tower = t2;
    cand.ybar = ybar;
    cand.abar = abar2;
    cand.xbar = lift(cst(1, 72) * n331 - cst(16), t2) * ybar * ybar;
    cand.pbar = lift(cst(-1, 6) * n33311 * G * D.inverse(), t2) * ybar * ybar * abar2;
    cand.degree = t2->total_degree();
    return cand;
}

CandidateTransformation candidate_p2a0_fiber(const Ode& ode, const DerivationSet& derivs) {
    const Universe& u = ode.uni;
    NormalizedWords n(ode, Target::P2A0, ProblemClass::Fiber, derivs);
    auto [n33, n331, n3331, n33311] = p2_fiber_words(n);
    auto cst = [&](long a, long b = 1) {
        return ExtensionElement(n33.tower(), RationalFunction::constant(u.vars, make_rational(a, b)));
    };
    require_nonzero(n33311, "I_{1;33311}");
    ExtensionElement G = n3331 - cst(4032);
    require_nonzero(G, "I_{1;3331} - 4032");

    ExtensionElement rel = cst(-20901888) * (n33311 * G * G).inverse();
    TowerPtr tower = n.sol.tower->extended("ybar", 6, rel, {u.x, u.y, u.p});
    ExtensionElement ybar = ExtensionElement::generator(tower, tower->size() - 1);

    CandidateTransformation cand;
    cand.tower = tower;
    cand.ybar = ybar;
    cand.xbar = lift(cst(1, 72) * (n331 - cst(1152)), tower) * ybar * ybar;
    cand.pbar = lift(cst(-1, 290304) * n33311 * G, tower) * ybar.pow(5);
    cand.degree = tower->total_degree();
    return cand;
}

CandidateTransformation candidate_point(const Ode& ode, Target target, const DerivationSet& derivs) {
    const Universe& u = ode.uni;
    bool have_point = false;
    for (const auto& d : derivs) have_point = have_point || d.problem == ProblemClass::Point;
    if (derivs.empty() || !have_point)
        throw MissingDerivations("point classification requires a loaded derivation table");

    NormalizedWords n(ode, target, ProblemClass::Point, derivs);
    auto cst = [&](long a, long b = 1) {
        return ExtensionElement(n.sol.tower,
                                RationalFunction::constant(u.vars, make_rational(a, b)));
    };

    CandidateTransformation cand;
    if (target == Target::P1) {
        ExtensionElement m2 = n(1, {3, 3, 3, 1, 3});
        ExtensionElement m4 = n(1, {3, 3, 3, 3});
        ExtensionElement m5 = n(1, {3, 3, 3, 3, 3});
        require_nonzero(m2, "K_{1;33313}");
        ExtensionElement A = cst(1115136) * m5 + m2 * m2;
        require_nonzero(A, "1115136 K_{1;33333} + K_{1;33313}^2");
        ExtensionElement rel = cst(1, 49500) * m2.pow(5) * (A * A).inverse();
        TowerPtr tower = n.sol.tower->extended("ybar", 5, rel, {u.x, u.y, u.p});
        ExtensionElement ybar = ExtensionElement::generator(tower, tower->size() - 1);
        cand.tower = tower;
        cand.ybar = ybar;
        cand.xbar = lift(-(cst(1393920) * m4 + cst(258) * m2 * m2) * (m2 * m2).inverse(), tower) *
                    ybar * ybar;
        cand.pbar = lift(cst(-55) * A * m2.pow(3).inverse(), tower) * ybar.pow(4);
    } else {
        ExtensionElement q3 = n(2, {3});
        ExtensionElement q33 = n(1, {3, 3});
        ExtensionElement q331 = n(1, {3, 3, 1});
        ExtensionElement q333 = n(1, {3, 3, 3});
        require_nonzero(q3, "K_{2;3}");
        if (target == Target::P2) {
            ExtensionElement D1 = cst(-90) * q3 * q33 - cst(216000) - cst(24192) * q3 +
                                  cst(2700) * q331 + cst(300) * q3 * q333;
            ExtensionElement D2 =
                cst(-150) * q3 * q33 - cst(115200) - cst(10368) * q3 + cst(900) * q331;
            require_nonzero(D1, "first denominator invariant of the Painleve II point map");
            require_nonzero(D2, "second denominator invariant of the Painleve II point map");
            ExtensionElement arel = cst(18) * D2 * D2 * (q3 * D1 * D1).inverse();
            TowerPtr t1 = n.sol.tower->extended("alphabar", 2, arel, {u.x, u.y, u.p});
            ExtensionElement abar = ExtensionElement::generator(t1, t1->size() - 1);
            ExtensionElement yrel = lift(cst(-1800) * D2.inverse(), t1) * abar;
            TowerPtr t2 = t1->extended("ybar", 3, yrel, {u.x, u.y, u.p});
            ExtensionElement ybar = ExtensionElement::generator(t2, t2->size() - 1);
            cand.tower = t2;
            cand.ybar = ybar;
            cand.abar = lift(abar, t2);
            cand.xbar = lift(cst(1, 3600) * (cst(-150) * q3 * q33 - cst(2016) * q3 - cst(57600) +
                                             cst(300) * q331),
                             t2) *
                        ybar * ybar;
            cand.pbar =
                lift(cst(1, 3) * q3 * D1 * D2.inverse(), t2) * ybar * ybar * *cand.abar;
        } else {
            ExtensionElement E1 =
                cst(-3456) * q3 - cst(150) * q3 * q333 - cst(180) * q3 * q33 - cst(64800);
            require_nonzero(E1, "denominator invariant of the Painleve II point map (alpha = 0)");
            ExtensionElement rel = cst(14580000) * (q3 * E1 * E1).inverse();
            TowerPtr tower = n.sol.tower->extended("ybar", 6, rel, {u.x, u.y, u.p});
            ExtensionElement ybar = ExtensionElement::generator(tower, tower->size() - 1);
            cand.tower = tower;
            cand.ybar = ybar;
            cand.xbar = lift(cst(1, 1080) * (cst(-30) * q3 * q33 - cst(5760) + cst(432) * q3),
                             tower) *
                        ybar * ybar;
            cand.pbar = lift(cst(1, 2700) * q3 * E1, tower) * ybar.pow(5);
        }
    }
    cand.degree = cand.tower->total_degree();
    return cand;
}

ExtensionElement target_value(const Universe& u, Target target,
                              const CandidateTransformation& cand) {
    auto cst = [&](long a) {
        return ExtensionElement(cand.tower, RationalFunction::constant(u.vars, Rational(a)));
    };
    switch (target) {
        case Target::P1:
            return cst(6) * cand.ybar * cand.ybar + cand.xbar;
        case Target::P2: {
            if (!cand.abar) throw Error("Painleve II target requires an alpha component");
            return cst(2) * cand.ybar.pow(3) + cand.xbar * cand.ybar + *cand.abar;
        }
        case Target::P2A0:
            return cst(2) * cand.ybar.pow(3) + cand.xbar * cand.ybar;
    }
    throw Error("unknown target");
}

namespace {

std::optional<RationalFunction> rf_sqrt(const RationalFunction& r) {
    auto ns = r.num().sqrt();
    auto ds = r.den().sqrt();
    if (!ns || !ds) return std::nullopt;
    return RationalFunction(*ns, *ds);
}

// Sign refinements of a degree-2 "alphabar" generator whose relation has an
// exact rational square root. Returns candidate variants in a tower without
// that generator.
std::vector<CandidateTransformation> sign_refinements(const Universe& u,
                                                      const CandidateTransformation& cand) {
    std::vector<CandidateTransformation> out;
    if (!cand.abar || !cand.tower) return out;
    auto agen = cand.tower->gen_index("alphabar");
    if (!agen) return out;
    const auto& gen = cand.tower->gen(*agen);
    if (gen.degree != 2 || gen.relation.size() != 1) return out;
    const auto& [rm, rc] = gen.relation.front();
    for (auto e : rm)
        if (e != 0) return out;
    auto w = rf_sqrt(rc);
    if (!w) return out;

    for (int s : {1, -1}) {
        RationalFunction root = s > 0 ? *w : -*w;
        // rebuild the tower, substituting alphabar -> root
        TowerPtr nt = RadicalTower::base(u.vars);
        std::vector<std::optional<std::size_t>> remap(cand.tower->size());
        auto map_elem = [&](const ExtensionElement& e) {
            std::map<GenExp, RationalFunction> terms;
            for (const auto& [m, c] : e.terms()) {
                GenExp mm(nt->size(), 0);
                RationalFunction cc = c;
                for (std::size_t gi = 0; gi < m.size(); ++gi) {
                    if (m[gi] == 0) continue;
                    if (gi == *agen) {
                        for (std::uint32_t k = 0; k < m[gi]; ++k) cc = cc * root;
                    } else {
                        mm[remap[gi].value()] = m[gi];
                    }
                }
                auto it = terms.find(mm);
                if (it == terms.end())
                    terms.emplace(mm, cc);
                else
                    it->second += cc;
            }
            return ExtensionElement::from_terms(nt, terms);
        };
        bool ok = true;
        for (std::size_t gi = 0; gi < cand.tower->size(); ++gi) {
            if (gi == *agen) continue;
            const auto& g = cand.tower->gen(gi);
            std::map<GenExp, RationalFunction> rel_terms;
            for (const auto& [m, c] : g.relation) {
                GenExp mm(m);
                mm.resize(cand.tower->size(), 0);
                rel_terms.emplace(std::move(mm), c);
            }
            ExtensionElement rel = map_elem(
                ExtensionElement::from_terms(cand.tower, rel_terms));
            if (rel.is_zero()) {
                ok = false;
                break;
            }
            remap[gi] = nt->size();
            nt = nt->extended(g.name, g.degree, rel, {u.x, u.y, u.p});
        }
        if (!ok) continue;
        CandidateTransformation v;
        v.tower = nt;
        v.xbar = map_elem(cand.xbar);
        v.ybar = map_elem(cand.ybar);
        v.pbar = map_elem(cand.pbar);
        v.abar = map_elem(*cand.abar);
        v.degree = nt->total_degree();
        out.push_back(std::move(v));
    }
    return out;
}

// --- numeric prescreen ---------------------------------------------------

using C = std::complex<double>;

C eval_poly(const Polynomial& p, const std::vector<C>& pt) {
    C acc(0.0, 0.0);
    for (const auto& t : p.terms()) {
        C term(t.coeff.get_d(), 0.0);
        for (std::size_t v = 0; v < t.mono.size(); ++v)
            for (int k = 0; k < t.mono[v]; ++k) term *= pt[v];
        acc += term;
    }
    return acc;
}

std::optional<C> eval_rf(const RationalFunction& r, const std::vector<C>& pt) {
    C d = eval_poly(r.den(), pt);
    if (std::abs(d) < 1e-12) return std::nullopt;
    return eval_poly(r.num(), pt) / d;
}

// Evaluate an element for one choice of generator roots.
std::optional<C> eval_elem(const ExtensionElement& e, const std::vector<C>& pt,
                           const std::vector<C>& gen_values) {
    C acc(0.0, 0.0);
    for (const auto& [m, c] : e.terms()) {
        auto cv = eval_rf(c, pt);
        if (!cv) return std::nullopt;
        C term = *cv;
        for (std::size_t gi = 0; gi < m.size(); ++gi)
            for (std::uint32_t k = 0; k < m[gi]; ++k) term *= gen_values[gi];
        acc += term;
    }
    return acc;
}

// All root assignments of the tower generators at the sample point.
bool enumerate_gen_values(const TowerPtr& t, const std::vector<C>& pt, std::size_t gi,
                          std::vector<C>& cur, std::vector<std::vector<C>>& out) {
    if (gi == t->size()) {
        out.push_back(cur);
        return true;
    }
    const auto& gen = t->gen(gi);
    std::map<GenExp, RationalFunction> rel_terms;
    for (const auto& [m, c] : gen.relation) {
        GenExp mm(m);
        mm.resize(t->size(), 0);
        rel_terms.emplace(std::move(mm), c);
    }
    ExtensionElement rel = ExtensionElement::from_terms(t, rel_terms);
    auto rv = eval_elem(rel, pt, cur);
    if (!rv || std::abs(*rv) < 1e-14) return false;
    double mod = std::pow(std::abs(*rv), 1.0 / gen.degree);
    double arg = std::arg(*rv) / gen.degree;
    for (unsigned k = 0; k < gen.degree; ++k) {
        double a = arg + 2.0 * M_PI * k / gen.degree;
        cur[gi] = C(mod * std::cos(a), mod * std::sin(a));
        if (!enumerate_gen_values(t, pt, gi + 1, cur, out)) return false;
    }
    cur[gi] = C(0, 0);
    return true;
}

// Returns false only when the residual is provably far from zero for every
// root choice at some sample point.
bool prescreen_pass(const Ode& ode, Target target, const CandidateTransformation& cand,
                    const VerifyOptions& opts) {
    const Universe& u = ode.uni;
    std::mt19937_64 rng(0x9e3779b97f4a7c15ull);
    std::uniform_int_distribution<int> num(-40, 40), den(1, 11);
    for (unsigned trial = 0; trial < opts.prescreen_points; ++trial) {
        std::vector<C> pt(u.vars->size(), C(0, 0));
        for (std::size_t v = 0; v < u.vars->size(); ++v)
            pt[v] = C(double(num(rng)) / double(den(rng)), 0.0);
        std::vector<std::vector<C>> roots;
        std::vector<C> cur(cand.tower->size(), C(0, 0));
        if (!enumerate_gen_values(cand.tower, pt, 0, cur, roots)) continue;
        double best = 1e300;
        bool usable = true;
        for (const auto& gv : roots) {
            // residual = target(xbar,ybar,pbar) * D(xbar) - D2(pbar) with
            // y''-slot filled by f; here evaluate pullback residual directly
            ProlongedMap pm;
            pm.tower = cand.tower;
            pm.xbar = cand.xbar;
            pm.ybar = cand.ybar;
            pm.pbar = cand.pbar;
            try {
                ExtensionElement tv = target_value(u, target, cand);
                ExtensionElement res =
                    pullback_with_target(u, tv, pm) - ExtensionElement(cand.tower, ode.f);
                auto rv = eval_elem(res, pt, gv);
                if (!rv) {
                    usable = false;
                    break;
                }
                best = std::min(best, std::abs(*rv));
            } catch (const Error&) {
                usable = false;
                break;
            }
        }
        if (usable && best > opts.prescreen_tolerance) return false;
    }
    return true;
}

VerifyResult verify_one(const Ode& ode, Target target, ProblemClass cls,
                        const CandidateTransformation& cand) {
    const Universe& u = ode.uni;
    try {
        if (cand.xbar.derivative(u.p).is_zero() == false) return {false, "xbar depends on y'"};
        if (cand.ybar.derivative(u.p).is_zero() == false) return {false, "ybar depends on y'"};
        if (target == Target::P2) {
            if (!cand.abar) return {false, "alphabar component missing"};
            for (std::size_t v : {u.x, u.y, u.p})
                if (!cand.abar->derivative(v).is_zero())
                    return {false, "alphabar is not constant"};
        }
        if (cls == ProblemClass::Fiber && !cand.xbar.derivative(u.y).is_zero())
            return {false, "xbar depends on y (not fiber-preserving)"};

        // contact condition: pbar * D(xbar) = D(ybar)
        ExtensionElement dx = total_d(u, cand.xbar);
        if (dx.is_zero()) return {false, "degenerate map: D(xbar) = 0"};
        if (!(cand.pbar * dx - total_d(u, cand.ybar)).is_zero())
            return {false, "contact condition fails"};

        // local invertibility of (xbar, ybar)
        ExtensionElement jac = cand.xbar.derivative(u.x) * cand.ybar.derivative(u.y) -
                               cand.xbar.derivative(u.y) * cand.ybar.derivative(u.x);
        if (jac.is_zero()) return {false, "degenerate map: zero Jacobian"};

        ProlongedMap pm;
        pm.tower = cand.tower;
        pm.xbar = cand.xbar;
        pm.ybar = cand.ybar;
        pm.pbar = cand.pbar;
        ExtensionElement tv = target_value(u, target, cand);
        ExtensionElement res =
            pullback_with_target(u, tv, pm) - ExtensionElement(cand.tower, ode.f);
        if (!res.is_zero()) return {false, "pullback residual is nonzero"};
        return {true, ""};
    } catch (const DivisionByZero& e) {
        return {false, std::string("division by zero during verification: ") + e.what()};
    } catch (const NonInvertible& e) {
        return {false, std::string("non-invertible element during verification: ") + e.what()};
    } catch (const DegenerateMap& e) {
        return {false, e.what()};
    }
}

}  // namespace

VerifyResult verify(const Ode& ode, Target target, ProblemClass cls,
                    const CandidateTransformation& cand, const VerifyOptions& opts) {
    if (opts.numeric_prescreen && !prescreen_pass(ode, target, cand, opts))
        return {false, "numeric prescreen: residual far from zero"};
    VerifyResult main = verify_one(ode, target, cls, cand);
    if (main.ok) return main;
    // The alpha relation leaves a sign free; accept the candidate when some
    // consistent choice passes all checks.
    for (const auto& variant : sign_refinements(ode.uni, cand)) {
        VerifyResult r = verify_one(ode, target, cls, variant);
        if (r.ok) return r;
    }
    return main;
}

Verdict classify(const Ode& ode, Target target, ProblemClass cls, const DerivationSet& derivs,
                 const VerifyOptions& opts) {
    Verdict v;
    if (!branch_ok(ode, cls)) {
        v.reason = Verdict::Reason::BranchViolation;
        v.detail = cls == ProblemClass::Fiber
                       ? "the invariants I2, I3 do not vanish identically"
                       : "the equation is not cubic in y'";
        return v;
    }
    CandidateTransformation cand;
    try {
        if (cls == ProblemClass::Fiber) {
            switch (target) {
                case Target::P1: cand = candidate_p1_fiber(ode, derivs); break;
                case Target::P2: cand = candidate_p2_fiber(ode, derivs); break;
                case Target::P2A0: cand = candidate_p2a0_fiber(ode, derivs); break;
            }
        } else {
            cand = candidate_point(ode, target, derivs);
        }
    } catch (const MissingDerivations& e) {
        v.reason = Verdict::Reason::MissingDerivations;
        v.detail = e.what();
        return v;
    } catch (const DivisionByZero& e) {
        v.reason = Verdict::Reason::DivisionByZero;
        v.detail = e.what();
        return v;
    } catch (const NonInvertible& e) {
        v.reason = Verdict::Reason::DivisionByZero;
        v.detail = std::string("non-invertible element: ") + e.what();
        return v;
    } catch (const NonTriangular& e) {
        v.reason = Verdict::Reason::DivisionByZero;
        v.detail = std::string("normalization not triangular: ") + e.what();
        return v;
    }
    VerifyResult r = verify(ode, target, cls, cand, opts);
    if (!r.ok) {
        v.reason = Verdict::Reason::VerificationFailed;
        v.detail = r.failed_check;
        return v;
    }
    v.equivalent = true;
    v.transformation = std::move(cand);
    v.degree = v.transformation->degree;
    v.reason = Verdict::Reason::None;
    return v;
}

std::vector<SymmetryFixture> symmetry_fixtures(const Universe& u) {
    std::vector<SymmetryFixture> out;
    auto rf = [&](const std::string& text) { return parse_rational(text, u.vars); };
    TowerPtr base = RadicalTower::base(u.vars);

    {
        // ybar^5 = y^5, xbar = x ybar^2 / y^2
        TowerPtr t = base->extended("ybar", 5, ExtensionElement(base, rf("y^5")), {u.x, u.y, u.p});
        ExtensionElement ybar = ExtensionElement::generator(t, 0);
        SymmetryFixture f;
        f.target = Target::P1;
        f.map.tower = t;
        f.map.ybar = ybar;
        f.map.xbar = ExtensionElement(t, rf("x/y^2")) * ybar * ybar;
        out.push_back(std::move(f));
    }
    if (u.vars->index("alpha")) {
        // alphabar^2 = alpha^2, ybar^3 = (y^3/alpha) alphabar, xbar = x ybar^2/y^2
        TowerPtr t1 =
            base->extended("alphabar", 2, ExtensionElement(base, rf("alpha^2")), {u.x, u.y, u.p});
        ExtensionElement abar = ExtensionElement::generator(t1, 0);
        ExtensionElement yrel = ExtensionElement(t1, rf("y^3/alpha")) * abar;
        TowerPtr t2 = t1->extended("ybar", 3, yrel, {u.x, u.y, u.p});
        ExtensionElement ybar = ExtensionElement::generator(t2, 1);
        SymmetryFixture f;
        f.target = Target::P2;
        f.map.tower = t2;
        f.map.ybar = ybar;
        f.map.xbar = ExtensionElement(t2, rf("x/y^2")) * ybar * ybar;
        f.abar = ExtensionElement::generator(t2, 0);
        out.push_back(std::move(f));
    }
    {
        // ybar^6 = y^6, xbar = x ybar^2 / y^2
        TowerPtr t = base->extended("ybar", 6, ExtensionElement(base, rf("y^6")), {u.x, u.y, u.p});
        ExtensionElement ybar = ExtensionElement::generator(t, 0);
        SymmetryFixture f;
        f.target = Target::P2A0;
        f.map.tower = t;
        f.map.ybar = ybar;
        f.map.xbar = ExtensionElement(t, rf("x/y^2")) * ybar * ybar;
        out.push_back(std::move(f));
    }
    return out;
}

}  // namespace painleq
