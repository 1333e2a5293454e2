#include "painleq/invariants.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "painleq/ast.hpp"

namespace painleq {

namespace {

bool is_fsymbol(const std::string& name) {
    if (name == "f") return true;
    if (name.size() < 3 || name.rfind("f_", 0) != 0) return false;
    return std::all_of(name.begin() + 2, name.end(),
                       [](char c) { return c == 'x' || c == 'y' || c == 'p'; });
}

RationalFunction partial_for(const Ode& ode, const std::string& name) {
    RationalFunction g = ode.f;
    if (name == "f") return g;
    for (std::size_t i = 2; i < name.size(); ++i) {
        std::size_t v = name[i] == 'x' ? ode.uni.x : name[i] == 'y' ? ode.uni.y : ode.uni.p;
        g = g.derivative(v);
    }
    return g;
}

// Collect identifiers appearing in an expression string (cheap scan; the
// real parse happens afterwards against an extended variable set).
std::vector<std::string> scan_identifiers(const std::string& text) {
    std::vector<std::string> out;
    for (std::size_t i = 0; i < text.size();) {
        if (std::isalpha(static_cast<unsigned char>(text[i]))) {
            std::size_t j = i;
            while (j < text.size() &&
                   (std::isalnum(static_cast<unsigned char>(text[j])) || text[j] == '_'))
                ++j;
            out.push_back(text.substr(i, j - i));
            i = j;
        } else {
            ++i;
        }
    }
    return out;
}

}  // namespace

std::map<std::size_t, RationalFunction> DerivationSpec::instantiate(const Ode& ode) const {
    const Universe& u = ode.uni;
    std::map<std::size_t, RationalFunction> out;
    for (const auto& [coord, text] : coefficients) {
        auto cidx = u.vars->index(coord);
        if (!cidx) throw Error("derivation '" + name + "': unknown coordinate " + coord);

        // extended variable set: universe plus the f-symbols used here
        std::vector<std::string> fsyms;
        for (const auto& id : scan_identifiers(text))
            if (is_fsymbol(id) && std::find(fsyms.begin(), fsyms.end(), id) == fsyms.end())
                fsyms.push_back(id);
        std::vector<std::string> names = u.vars->names();
        names.insert(names.end(), fsyms.begin(), fsyms.end());
        VarSetPtr ext = VarSet::make(names);

        RationalFunction val = parse_rational(text, ext);
        // replace f-symbols by the actual partial derivatives, lifted to ext
        for (const auto& fs : fsyms) {
            RationalFunction part = partial_for(ode, fs);
            Polynomial num(ext), den(ext);
            auto lift = [&](const Polynomial& q) {
                std::vector<Polynomial::Term> ts;
                for (const auto& t : q.terms()) {
                    Exponents e = t.mono;
                    e.resize(ext->size(), 0);
                    ts.push_back({std::move(e), t.coeff});
                }
                return Polynomial::from_terms(ext, std::move(ts));
            };
            RationalFunction lifted(lift(part.num()), lift(part.den()));
            val = val.substituted(*ext->index(fs), lifted);
        }
        // project back onto the universe variables
        auto project = [&](const Polynomial& q) {
            std::vector<Polynomial::Term> ts;
            for (const auto& t : q.terms()) {
                for (std::size_t k = u.vars->size(); k < ext->size(); ++k)
                    if (t.mono[k] != 0)
                        throw Error("derivation '" + name + "': unresolved symbol in coefficient");
                Exponents e(t.mono.begin(), t.mono.begin() + long(u.vars->size()));
                ts.push_back({std::move(e), t.coeff});
            }
            return Polynomial::from_terms(u.vars, std::move(ts));
        };
        RationalFunction projected(project(val.num()), project(val.den()));
        if (!projected.is_zero()) out.emplace(*cidx, std::move(projected));
    }
    return out;
}

std::string InvariantWord::str() const {
    std::ostringstream os;
    os << base << ';';
    for (int i : indices) os << i;
    return os.str();
}

FiberInvariants fundamental_fiber(const Ode& ode) {
    const Universe& u = ode.uni;
    auto var = [&](std::size_t v) { return RationalFunction::variable(u.vars, v); };
    auto cst = [&](long n) { return RationalFunction::constant(u.vars, Rational(n)); };
    RationalFunction a1 = var(u.frame_var("a1")), a2 = var(u.frame_var("a2")),
                     a4 = var(u.frame_var("a4"));
    RationalFunction fy = ode.f.derivative(u.y);
    RationalFunction fp = ode.f.derivative(u.p);
    RationalFunction fpp = fp.derivative(u.p);
    RationalFunction fppp = fpp.derivative(u.p);
    RationalFunction fyp = fy.derivative(u.p);
    RationalFunction fyy = fy.derivative(u.y);

    FiberInvariants inv;
    inv.i3 = -fppp * a4 / (cst(2) * a1 * a1);
    inv.i2 = (fyp - cartan_Dx(ode, fpp)) / (cst(2) * a1 * a4);
    inv.i1 = ((cst(2) * fyy - cartan_Dx(ode, fyp) - fpp * fy + fyp * fp) * a1 +
              (cartan_Dx(ode, fpp) - fyp) * a4 * a2) /
             (cst(2) * a1 * a1 * a4 * a4);
    return inv;
}

PointInvariants fundamental_point(const Ode& ode) {
    const Universe& u = ode.uni;
    auto var = [&](std::size_t v) { return RationalFunction::variable(u.vars, v); };
    auto cst = [&](long n) { return RationalFunction::constant(u.vars, Rational(n)); };
    RationalFunction a1 = var(u.frame_var("a1")), a4 = var(u.frame_var("a4")),
                     a5 = var(u.frame_var("a5"));
    auto D = [&](const RationalFunction& g) { return cartan_Dx(ode, g); };
    RationalFunction fy = ode.f.derivative(u.y);
    RationalFunction fp = ode.f.derivative(u.p);
    RationalFunction fpp = fp.derivative(u.p);
    RationalFunction fppp = fpp.derivative(u.p);
    RationalFunction fyp = fy.derivative(u.p);
    RationalFunction fyy = fy.derivative(u.y);
    RationalFunction fyyp = fyy.derivative(u.p);
    RationalFunction fypp = fyp.derivative(u.p);

    PointInvariants inv;
    inv.k1 = (cst(6) * fyy - cst(4) * D(fyp) + D(D(fpp)) - cst(3) * fy * fpp + cst(4) * fyp * fp -
              D(fpp) * fp) /
             (a1 * a5 * a5);
    inv.k2 = (cst(2) * fy * fppp * a5 + cst(4) * fyp * fp * a4 - D(fpp) * fp * a4 -
              cst(3) * fy * fpp * a4 - a5 * fpp * fyp + a5 * fpp * D(fpp) + cst(6) * a4 * fyy +
              a4 * D(D(fpp)) - a5 * D(fppp) * fp - a5 * fppp * D(fp) - cst(4) * a4 * D(fyp) -
              cst(2) * fyyp * a5 + cst(2) * a5 * D(fypp) - a5 * D(D(fppp))) /
             (a5 * a5 * a1 * a1);
    return inv;
}

DerivationSet builtin_derivations_fiber() {
    DerivationSpec x1;
    x1.name = "X1";
    x1.index = 1;
    x1.problem = ProblemClass::Fiber;
    x1.coordinates = {"x", "y", "p", "a1", "a2", "a4"};
    x1.coefficients = {
        {"y", "1/a1"},
        {"p", "-a2*a4/a1^2"},
        {"a1", "-1/2*f_pp"},
        {"a2", "-1/2*f_py/a4"},
    };

    DerivationSpec x3;
    x3.name = "X3";
    x3.index = 3;
    x3.problem = ProblemClass::Fiber;
    x3.coordinates = {"x", "y", "p", "a1", "a2", "a4"};
    x3.coefficients = {
        {"x", "1/a4"},
        {"y", "p/a4"},
        {"p", "f/a4"},
        {"a1", "a2"},
        {"a2", "-f_y*a1/a4^2"},
        {"a4", "(2*a2*a4 + f_p*a1)/a1"},
    };
    return {x1, x3};
}

RationalFunction apply_word(const InvariantWord& word, const RationalFunction& base,
                            const DerivationSet& derivs, const Ode& ode) {
    // instantiate each derivation once
    std::map<int, std::map<std::size_t, RationalFunction>> inst;
    for (const auto& d : derivs) inst[d.index] = d.instantiate(ode);
    RationalFunction g = base;
    for (int idx : word.indices) {
        auto it = inst.find(idx);
        if (it == inst.end())
            throw Error("unknown derivation index " + std::to_string(idx) + " in word " + word.str());
        RationalFunction next(Polynomial(ode.uni.vars));
        for (const auto& [v, coeff] : it->second) next += coeff * g.derivative(v);
        g = std::move(next);
    }
    return g;
}

RationalFunction base_invariant(const InvariantWord& word, ProblemClass cls, const Ode& ode) {
    if (cls == ProblemClass::Fiber) {
        FiberInvariants inv = fundamental_fiber(ode);
        switch (word.base) {
            case 1: return inv.i1;
            case 2: return inv.i2;
            case 3: return inv.i3;
        }
    } else {
        PointInvariants inv = fundamental_point(ode);
        switch (word.base) {
            case 1: return inv.k1;
            case 2: return inv.k2;
        }
    }
    throw Error("unknown base invariant index " + std::to_string(word.base));
}

}  // namespace painleq
