#include "painleq/normalize.hpp"

#include <algorithm>

namespace painleq {

namespace {

InvariantWord w(int base, std::initializer_list<int> idx) {
    InvariantWord word;
    word.base = base;
    word.indices = idx;
    return word;
}

}  // namespace

NormalizationScheme scheme_for(Target target, ProblemClass cls) {
    NormalizationScheme s;
    s.target = target;
    s.cls = cls;
    if (cls == ProblemClass::Fiber) {
        if (target == Target::P1) {
            s.equations = {
                {w(1, {}), std::nullopt, Rational(-12), "a1"},
                {w(1, {3}), std::nullopt, Rational(0), "a2"},
                {w(1, {3, 3, 3}), w(1, {3, 3}), Rational(1), "a4"},
            };
        } else {
            s.equations = {
                {w(1, {}), std::nullopt, Rational(-12), "a1"},
                {w(1, {3}), std::nullopt, Rational(-12), "a2"},
                {w(1, {3, 1}), std::nullopt, Rational(0), "a4"},
            };
        }
    } else {
        SchemeEquation last;
        if (target == Target::P1) {
            last = {w(1, {3, 3}), w(1, {3, 3, 3}), Rational(720), "a5"};
        } else {
            last = {w(2, {3}), w(1, {3, 1}), make_rational(-5, 24), "a5"};
        }
        s.equations = {
            {w(1, {}), std::nullopt, Rational(-12), "a1"},
            {w(2, {}), std::nullopt, Rational(0), "a4"},
            {w(1, {1}), std::nullopt, Rational(0), "b"},
            {w(1, {3}), std::nullopt, Rational(0), "a2"},
            last,
        };
    }
    return s;
}

namespace {

// Diagonal group parameters must stay nonzero; off-diagonal ones may vanish.
bool must_be_nonzero(ProblemClass cls, const std::string& unknown) {
    if (unknown == "a1") return true;
    if (cls == ProblemClass::Fiber) return unknown == "a4";
    return unknown == "a5";
}

struct Solver {
    const Ode& ode;
    const NormalizationScheme& scheme;
    const DerivationSet& derivs;
    std::vector<std::pair<std::size_t, RationalFunction>> solved;  // in solve order
    std::map<InvariantWord*, RationalFunction> cache;

    RationalFunction word_value(const InvariantWord& word) {
        return apply_word(word, base_invariant(word, scheme.cls, ode), derivs, ode);
    }

    RationalFunction substituted(RationalFunction v) const {
        for (const auto& [var, val] : solved) v = v.substituted(var, val);
        return v;
    }
};

}  // namespace

FrameSolution solve_frame(const Ode& ode, const NormalizationScheme& scheme,
                          const DerivationSet& derivs) {
    const Universe& u = ode.uni;
    Solver sv{ode, scheme, derivs, {}, {}};

    std::vector<std::size_t> remaining;
    for (const auto& eq : scheme.equations) remaining.push_back(u.frame_var(eq.unknown));

    std::optional<std::pair<std::size_t, std::pair<unsigned, RationalFunction>>> radical;
    // radical: unknown var -> (degree, rhs) for the final unknown if needed

    for (std::size_t ei = 0; ei < scheme.equations.size(); ++ei) {
        const SchemeEquation& eq = scheme.equations[ei];
        std::size_t uvar = u.frame_var(eq.unknown);
        remaining.erase(std::find(remaining.begin(), remaining.end(), uvar));

        RationalFunction lhs = sv.substituted(sv.word_value(eq.num));
        if (eq.den) {
            RationalFunction den = sv.substituted(sv.word_value(*eq.den));
            if (den.is_zero())
                throw DivisionByZero("normalization: denominator invariant " + eq.den->str() +
                                     " vanishes identically");
            lhs = lhs - RationalFunction::constant(u.vars, eq.rhs) * den;
        } else {
            lhs = lhs - RationalFunction::constant(u.vars, eq.rhs);
        }

        Polynomial num = lhs.num();
        // the equation may involve only the designated unknown among the
        // not-yet-solved frame variables
        for (std::size_t v : remaining)
            if (num.depends_on(v))
                throw NonTriangular("equation for " + eq.unknown +
                                    " involves unsolved unknown " + u.vars->name(v));

        std::vector<Polynomial> coeffs = num.coefficients_in(uvar);
        // strip the u^k factor (u = 0 is never an admissible frame root here:
        // for diagonal unknowns it is degenerate, and for the rest a plain
        // zero root is picked up by the constant coefficient below)
        std::size_t low = 0;
        while (low < coeffs.size() && coeffs[low].is_zero()) ++low;
        if (low == coeffs.size())
            throw NonTriangular("equation for " + eq.unknown + " is identically satisfied");
        std::vector<Polynomial> red(coeffs.begin() + long(low), coeffs.end());
        int deg = int(red.size()) - 1;

        if (deg == 0) {
            if (low > 0 && !must_be_nonzero(scheme.cls, eq.unknown)) {
                // u^k * (nonzero) = 0 with an admissible zero root
                sv.solved.emplace_back(uvar, RationalFunction(Polynomial(u.vars)));
                continue;
            }
            throw DivisionByZero("normalization equation for " + eq.unknown +
                                 " is unsatisfiable (invariant degenerates)");
        }
        if (deg == 1) {
            RationalFunction val =
                RationalFunction(-red[0]) / RationalFunction(red[1]);
            if (val.is_zero() && must_be_nonzero(scheme.cls, eq.unknown))
                throw DivisionByZero("normalization forces " + eq.unknown + " = 0");
            sv.solved.emplace_back(uvar, std::move(val));
            continue;
        }
        // binomial u^d = R, allowed for the last equation only
        bool binomial = true;
        for (int k = 1; k < deg; ++k) binomial = binomial && red[std::size_t(k)].is_zero();
        if (!binomial || ei + 1 != scheme.equations.size())
            throw NonTriangular("equation for " + eq.unknown +
                                " is not linear or binomial in its unknown");
        RationalFunction rhs =
            RationalFunction(-red[0]) / RationalFunction(red[std::size_t(deg)]);
        if (rhs.is_zero())
            throw DivisionByZero("normalization forces " + eq.unknown + " = 0");
        radical = {uvar, {unsigned(deg), rhs}};
    }

    // assemble the final substitution, back-substituting later solutions
    FrameSolution out;
    TowerPtr base = RadicalTower::base(u.vars);
    std::map<std::size_t, ExtensionElement> values;
    if (radical) {
        auto [rvar, dr] = *radical;
        ExtensionElement rel(base, dr.second);
        out.tower = base->extended(u.vars->name(rvar) + "r", dr.first, rel, {u.x, u.y, u.p});
        values[rvar] = ExtensionElement::generator(out.tower, 0);
    } else {
        out.tower = base;
    }
    for (std::size_t i = sv.solved.size(); i-- > 0;) {
        auto [var, val] = sv.solved[i];
        values[var] = substitute(val, values, out.tower);
    }
    out.subs = std::move(values);
    return out;
}

NormalizedInvariant normalized(const InvariantWord& word, const Ode& ode,
                               const NormalizationScheme& scheme, const DerivationSet& derivs,
                               const FrameSolution& solution) {
    RationalFunction symbolic =
        apply_word(word, base_invariant(word, scheme.cls, ode), derivs, ode);
    ExtensionElement value = substitute(symbolic, solution.subs, solution.tower);
    for (std::size_t v : ode.uni.frame) {
        if (value.depends_on_var(v))
            throw ResidualFrameVariable("normalized invariant " + word.str() +
                                        " still contains " + ode.uni.vars->name(v));
    }
    return NormalizedInvariant{word, std::move(value)};
}

namespace {

// Complete factorization of |n| into primes; throws Unsupported if a
// composite cofactor survives trial division and primality testing.
std::vector<std::pair<Integer, unsigned>> factor_integer(Integer n) {
    std::vector<std::pair<Integer, unsigned>> fs;
    if (n < 0) n = -n;
    if (n <= 1) return fs;
    for (long d = 2; d < 1000000 && Integer(d) * d <= n; d = (d == 2 ? 3 : d + 2)) {
        if (n % d == 0) {
            unsigned e = 0;
            while (n % d == 0) {
                n /= d;
                ++e;
            }
            fs.emplace_back(Integer(d), e);
        }
    }
    if (n > 1) {
        if (mpz_probab_prime_p(n.get_mpz_t(), 40) == 0)
            throw UnsupportedConstraintSystem(
                "cannot enumerate rational roots: composite coefficient too large");
        fs.emplace_back(n, 1);
    }
    return fs;
}

void divisors_rec(const std::vector<std::pair<Integer, unsigned>>& fs, std::size_t i, Integer cur,
                  std::vector<Integer>& out) {
    if (i == fs.size()) {
        out.push_back(cur);
        return;
    }
    Integer p(1);
    for (unsigned e = 0; e <= fs[i].second; ++e) {
        divisors_rec(fs, i + 1, cur * p, out);
        p *= fs[i].first;
    }
}

std::vector<Integer> divisors(const Integer& n) {
    std::vector<Integer> out;
    divisors_rec(factor_integer(n), 0, Integer(1), out);
    return out;
}

}  // namespace

ParameterConstraints parameter_constraints(const RationalFunction& inv, const Universe& u) {
    ParameterConstraints out;
    if (inv.is_zero()) {
        out.all_values = true;
        if (!u.params.empty()) out.param = u.params.front();
        return out;
    }
    std::vector<std::size_t> appearing;
    for (std::size_t pv : u.params)
        if (inv.num().depends_on(pv)) appearing.push_back(pv);
    if (appearing.size() > 1)
        throw UnsupportedConstraintSystem("more than one parameter appears in the invariant");
    if (appearing.empty()) {
        // nonzero invariant with no parameter: nothing makes it vanish
        if (!u.params.empty()) out.param = u.params.front();
        return out;
    }
    std::size_t pv = appearing.front();
    out.param = pv;

    // group numerator terms by their non-parameter monomial
    std::map<Exponents, std::map<int, Rational>> groups;
    for (const auto& t : inv.num().terms()) {
        Exponents rest = t.mono;
        int pe = rest[pv];
        rest[pv] = 0;
        groups[rest][pe] += t.coeff;
    }

    // gcd of the univariate coefficient polynomials
    std::vector<std::string> pname = {u.vars->name(pv)};
    VarSetPtr pvars = VarSet::make(pname);
    auto to_upoly = [&](const std::map<int, Rational>& c) {
        std::vector<Polynomial::Term> ts;
        for (const auto& [e, coeff] : c)
            if (coeff != 0) ts.push_back({Exponents{e}, coeff});
        return Polynomial::from_terms(pvars, std::move(ts));
    };
    Polynomial g(pvars);
    for (const auto& [rest, cmap] : groups) {
        g = Polynomial::gcd(g, to_upoly(cmap));
        if (g.is_one()) break;
    }
    if (g.is_zero()) {
        out.all_values = true;
        return out;
    }
    if (g.is_constant()) return out;  // empty admissible set

    // rational roots of g
    Polynomial work = g.primitive();
    while (work.degree(0) > 0) {
        std::vector<Polynomial::Term> ts = work.terms();
        Rational lead = work.leading_term().coeff;
        Rational trail;
        int lowdeg = work.degree(0);
        for (const auto& t : work.terms()) lowdeg = std::min(lowdeg, int(t.mono[0]));
        if (lowdeg > 0) {
            // factor of param^k: param = 0 is a root
            std::vector<Polynomial::Term> shifted;
            for (const auto& t : work.terms())
                shifted.push_back({Exponents{t.mono[0] - lowdeg}, t.coeff});
            work = Polynomial::from_terms(pvars, std::move(shifted));
            out.values.push_back(Rational(0));
            continue;
        }
        for (const auto& t : work.terms())
            if (t.mono[0] == 0) trail = t.coeff;
        bool found = false;
        for (const Integer& pn : divisors(trail.get_num())) {
            for (const Integer& qd : divisors(lead.get_num())) {
                for (int s : {1, -1}) {
                    Rational cand(s * pn, qd);
                    cand.canonicalize();
                    Polynomial val = work.substituted(0, Polynomial::constant(pvars, cand));
                    if (val.is_zero()) {
                        out.values.push_back(cand);
                        // divide out (param - cand)
                        Polynomial lin = Polynomial::variable(pvars, 0) -
                                         Polynomial::constant(pvars, cand);
                        work = work.divide_exact(lin);
                        found = true;
                        break;
                    }
                }
                if (found) break;
            }
            if (found) break;
        }
        if (!found)
            throw UnsupportedConstraintSystem(
                "parameter constraint has non-rational roots: " + polynomial_str(g));
    }
    std::sort(out.values.begin(), out.values.end());
    out.values.erase(std::unique(out.values.begin(), out.values.end()), out.values.end());
    return out;
}

}  // namespace painleq
