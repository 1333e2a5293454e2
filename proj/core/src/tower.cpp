#include "painleq/tower.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>

namespace painleq {

// ---------------------------------------------------------------- tower ---

TowerPtr RadicalTower::base(VarSetPtr vars) {
    auto t = std::shared_ptr<RadicalTower>(new RadicalTower());
    t->vars_ = std::move(vars);
    return t;
}

std::optional<std::size_t> RadicalTower::gen_index(std::string_view name) const {
    for (std::size_t i = 0; i < gens_.size(); ++i)
        if (gens_[i].name == name) return i;
    return std::nullopt;
}

unsigned long RadicalTower::total_degree() const {
    unsigned long d = 1;
    for (const auto& g : gens_) d *= g.degree;
    return d;
}

bool RadicalTower::same_structure(const RadicalTower& o) const {
    if (!same_vars(vars_, o.vars_) || gens_.size() != o.gens_.size()) return false;
    for (std::size_t i = 0; i < gens_.size(); ++i) {
        if (gens_[i].name != o.gens_[i].name || gens_[i].degree != o.gens_[i].degree ||
            gens_[i].relation != o.gens_[i].relation)
            return false;
    }
    return true;
}

TowerPtr RadicalTower::extended(const std::string& name, unsigned degree,
                                const ExtensionElement& relation,
                                const std::vector<std::size_t>& diff_vars) const {
    if (degree < 2) throw Error("radical degree must be at least 2");
    if (relation.is_zero()) throw DivisionByZero("radical relation must be nonzero");
    if (gen_index(name)) throw Error("duplicate generator name: " + name);
    if (!same_tower(relation.tower(), shared_from_this()))
        throw Error("relation must live on the tower being extended");

    auto t = std::shared_ptr<RadicalTower>(new RadicalTower());
    t->vars_ = vars_;
    t->gens_ = gens_;
    Generator g;
    g.name = name;
    g.degree = degree;
    for (const auto& [mono, coeff] : relation.terms()) g.relation.emplace_back(mono, coeff);
    t->gens_.push_back(std::move(g));

    // d(u)/u = dR/(degree * R), an element of the extended tower
    TowerPtr tp = t;
    for (std::size_t v : diff_vars) {
        std::map<GenExp, RationalFunction> lift_terms;
        for (const auto& [mono, coeff] : relation.terms()) {
            GenExp e(mono);
            e.resize(t->gens_.size(), 0);
            lift_terms.emplace(std::move(e), coeff);
        }
        ExtensionElement rel_full = ExtensionElement::from_terms(tp, lift_terms);
        ExtensionElement drel = rel_full.derivative(v);
        if (drel.is_zero()) {
            t->gens_.back().log_derivative[v] = {};
            continue;
        }
        ExtensionElement logd =
            drel * rel_full.inverse().scaled(RationalFunction::constant(
                       vars_, Rational(1) / Rational(long(degree))));
        std::vector<std::pair<GenExp, RationalFunction>> stored;
        for (const auto& [mono, coeff] : logd.terms()) stored.emplace_back(mono, coeff);
        t->gens_.back().log_derivative[v] = std::move(stored);
    }
    return t;
}

// -------------------------------------------------------------- element ---

ExtensionElement::ExtensionElement(TowerPtr tower, RationalFunction scalar)
    : tower_(std::move(tower)) {
    if (!scalar.is_zero()) terms_.emplace(GenExp(tower_->size(), 0), std::move(scalar));
}

ExtensionElement ExtensionElement::generator(const TowerPtr& tower, std::size_t gen_index) {
    ExtensionElement e;
    e.tower_ = tower;
    GenExp m(tower->size(), 0);
    m.at(gen_index) = 1;
    e.terms_.emplace(std::move(m),
                     RationalFunction::constant(tower->vars(), Rational(1)));
    return e;
}

ExtensionElement ExtensionElement::from_terms(TowerPtr tower,
                                              std::map<GenExp, RationalFunction> terms) {
    ExtensionElement e;
    e.tower_ = std::move(tower);
    e.terms_ = std::move(terms);
    e.reduce();
    return e;
}

bool ExtensionElement::is_scalar() const {
    if (terms_.empty()) return true;
    if (terms_.size() != 1) return false;
    const GenExp& m = terms_.begin()->first;
    return std::all_of(m.begin(), m.end(), [](std::uint32_t e) { return e == 0; });
}

RationalFunction ExtensionElement::scalar_value() const {
    if (terms_.empty()) return RationalFunction(Polynomial(tower_->vars()));
    return terms_.begin()->second;
}

ExtensionElement ExtensionElement::operator-() const {
    ExtensionElement r(*this);
    for (auto& [m, c] : r.terms_) c = -c;
    return r;
}

ExtensionElement operator+(const ExtensionElement& a, const ExtensionElement& b) {
    assert(same_tower(a.tower_, b.tower_));
    ExtensionElement r(a);
    for (const auto& [m, c] : b.terms_) {
        auto it = r.terms_.find(m);
        if (it == r.terms_.end()) {
            r.terms_.emplace(m, c);
        } else {
            it->second += c;
            if (it->second.is_zero()) r.terms_.erase(it);
        }
    }
    return r;
}

ExtensionElement operator-(const ExtensionElement& a, const ExtensionElement& b) { return a + (-b); }

ExtensionElement operator*(const ExtensionElement& a, const ExtensionElement& b) {
    assert(same_tower(a.tower_, b.tower_));
    std::map<GenExp, RationalFunction> acc;
    const std::size_t n = a.tower_->size();
    GenExp m(n);
    for (const auto& [ma, ca] : a.terms_) {
        for (const auto& [mb, cb] : b.terms_) {
            for (std::size_t k = 0; k < n; ++k) m[k] = ma[k] + mb[k];
            RationalFunction prod = ca * cb;
            auto it = acc.find(m);
            if (it == acc.end()) {
                if (!prod.is_zero()) acc.emplace(m, std::move(prod));
            } else {
                it->second += prod;
                if (it->second.is_zero()) acc.erase(it);
            }
        }
    }
    return ExtensionElement::from_terms(a.tower_, std::move(acc));
}

ExtensionElement ExtensionElement::scaled(const RationalFunction& c) const {
    if (c.is_zero()) return ExtensionElement(tower_, c);
    ExtensionElement r(*this);
    for (auto& [m, coeff] : r.terms_) coeff *= c;
    return r;
}

ExtensionElement ExtensionElement::pow(unsigned e) const {
    ExtensionElement r(tower_, RationalFunction::constant(tower_->vars(), Rational(1)));
    ExtensionElement base(*this);
    while (e) {
        if (e & 1u) r = r * base;
        e >>= 1u;
        if (e) base = base * base;
    }
    return r;
}

void ExtensionElement::reduce() {
    if (!tower_) return;
    for (std::size_t gi = tower_->size(); gi-- > 0;) {
        const auto& gen = tower_->gen(gi);
        bool again = true;
        while (again) {
            again = false;
            std::map<GenExp, RationalFunction> extra;
            for (auto it = terms_.begin(); it != terms_.end();) {
                if (it->first[gi] < gen.degree) {
                    ++it;
                    continue;
                }
                GenExp m = it->first;
                RationalFunction c = it->second;
                it = terms_.erase(it);
                m[gi] -= gen.degree;
                for (const auto& [rm, rc] : gen.relation) {
                    GenExp nm = m;
                    for (std::size_t k = 0; k < rm.size(); ++k) nm[k] += rm[k];
                    RationalFunction nc = c * rc;
                    auto jt = extra.find(nm);
                    if (jt == extra.end()) {
                        if (!nc.is_zero()) extra.emplace(std::move(nm), std::move(nc));
                    } else {
                        jt->second += nc;
                        if (jt->second.is_zero()) extra.erase(jt);
                    }
                }
            }
            for (auto& [m, c] : extra) {
                auto jt = terms_.find(m);
                if (jt == terms_.end()) {
                    if (!c.is_zero()) terms_.emplace(m, std::move(c));
                } else {
                    jt->second += c;
                    if (jt->second.is_zero()) terms_.erase(jt);
                }
                if (m[gi] >= gen.degree) again = true;
            }
        }
    }
    for (auto it = terms_.begin(); it != terms_.end();)
        it = it->second.is_zero() ? terms_.erase(it) : std::next(it);
}

namespace {

// Basis of the quotient ring: all exponent vectors below the degree bounds,
// in lexicographic order.
std::vector<GenExp> quotient_basis(const RadicalTower& t) {
    std::vector<GenExp> basis;
    GenExp cur(t.size(), 0);
    while (true) {
        basis.push_back(cur);
        std::size_t i = 0;
        for (; i < t.size(); ++i) {
            if (cur[i] + 1 < t.gen(i).degree) {
                ++cur[i];
                std::fill(cur.begin(), cur.begin() + long(i), 0);
                break;
            }
        }
        if (i == t.size()) break;
        if (t.size() == 0) break;
    }
    return basis;
}

}  // namespace

ExtensionElement ExtensionElement::inverse() const {
    if (is_zero()) throw DivisionByZero("inverse of the zero element");
    if (is_scalar()) {
        return ExtensionElement(tower_, scalar_value().inverse());
    }
    std::vector<GenExp> basis = quotient_basis(*tower_);
    const std::size_t n = basis.size();
    std::map<GenExp, std::size_t> pos;
    for (std::size_t i = 0; i < n; ++i) pos[basis[i]] = i;

    RationalFunction zero(Polynomial(tower_->vars()));
    // columns: this * basis_j expressed over the basis; augmented with e_0
    std::vector<std::vector<RationalFunction>> M(n, std::vector<RationalFunction>(n + 1, zero));
    for (std::size_t j = 0; j < n; ++j) {
        ExtensionElement bj;
        bj.tower_ = tower_;
        bj.terms_.emplace(basis[j], RationalFunction::constant(tower_->vars(), Rational(1)));
        ExtensionElement prod = *this * bj;
        for (const auto& [m, c] : prod.terms_) M[pos.at(m)][j] = c;
    }
    M[0][n] = RationalFunction::constant(tower_->vars(), Rational(1));

    // Gaussian elimination over the rational function field
    for (std::size_t col = 0, row = 0; col < n && row < n; ++col, ++row) {
        std::size_t piv = row;
        while (piv < n && M[piv][col].is_zero()) ++piv;
        if (piv == n) throw NonInvertible("zero divisor in radical tower");
        std::swap(M[piv], M[row]);
        RationalFunction inv = M[row][col].inverse();
        for (std::size_t k = col; k <= n; ++k) M[row][k] = M[row][k] * inv;
        for (std::size_t r = 0; r < n; ++r) {
            if (r == row || M[r][col].is_zero()) continue;
            RationalFunction f = M[r][col];
            for (std::size_t k = col; k <= n; ++k) M[r][k] = M[r][k] - f * M[row][k];
        }
    }
    std::map<GenExp, RationalFunction> out;
    for (std::size_t j = 0; j < n; ++j)
        if (!M[j][n].is_zero()) out.emplace(basis[j], M[j][n]);
    ExtensionElement r;
    r.tower_ = tower_;
    r.terms_ = std::move(out);
    return r;
}

ExtensionElement operator/(const ExtensionElement& a, const ExtensionElement& b) {
    return a * b.inverse();
}

ExtensionElement ExtensionElement::derivative(std::size_t var) const {
    ExtensionElement result(tower_, RationalFunction(Polynomial(tower_->vars())));
    for (const auto& [m, c] : terms_) {
        // coefficient part
        RationalFunction dc = c.derivative(var);
        if (!dc.is_zero()) {
            ExtensionElement t;
            t.tower_ = tower_;
            t.terms_.emplace(m, std::move(dc));
            result += t;
        }
        // generator part: mono * sum_i k_i * dlog(u_i)
        for (std::size_t gi = 0; gi < tower_->size(); ++gi) {
            if (m[gi] == 0) continue;
            const auto& gen = tower_->gen(gi);
            auto it = gen.log_derivative.find(var);
            std::map<GenExp, RationalFunction> logd_terms;
            if (it != gen.log_derivative.end()) {
                for (const auto& [lm, lc] : it->second) {
                    GenExp e(lm);
                    e.resize(tower_->size(), 0);
                    logd_terms.emplace(std::move(e), lc);
                }
            } else {
                // not precomputed: derive on the fly
                std::map<GenExp, RationalFunction> rel_terms;
                for (const auto& [rm, rc] : gen.relation) {
                    GenExp e(rm);
                    e.resize(tower_->size(), 0);
                    rel_terms.emplace(std::move(e), rc);
                }
                ExtensionElement rel = from_terms(tower_, rel_terms);
                ExtensionElement drel = rel.derivative(var);
                if (drel.is_zero()) continue;
                ExtensionElement logd = drel * rel.inverse().scaled(RationalFunction::constant(
                                                   tower_->vars(), Rational(1) / Rational(long(gen.degree))));
                logd_terms = logd.terms_;
            }
            if (logd_terms.empty()) continue;
            ExtensionElement logd;
            logd.tower_ = tower_;
            logd.terms_ = std::move(logd_terms);
            ExtensionElement t;
            t.tower_ = tower_;
            t.terms_.emplace(m, c * RationalFunction::constant(tower_->vars(), Rational(long(m[gi]))));
            result += t * logd;
        }
    }
    return result;
}

bool ExtensionElement::depends_on_var(std::size_t var) const {
    for (const auto& [m, c] : terms_) {
        if (c.depends_on(var)) return true;
        for (std::size_t gi = 0; gi < tower_->size(); ++gi) {
            if (m[gi] == 0) continue;
            for (const auto& [rm, rc] : tower_->gen(gi).relation)
                if (rc.depends_on(var)) return true;
        }
    }
    return false;
}

bool ExtensionElement::operator==(const ExtensionElement& o) const {
    if (!same_tower(tower_, o.tower_)) return false;
    return terms_ == o.terms_;
}

std::string ExtensionElement::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        bool has_gens = std::any_of(m.begin(), m.end(), [](std::uint32_t e) { return e != 0; });
        std::string cs = c.str();
        bool paren = cs.find_first_of("+-") != std::string::npos && cs.find_first_of("+-") != 0;
        if (!has_gens) {
            os << cs;
            continue;
        }
        if (!(c.num().is_one() && c.den().is_one())) {
            if (paren)
                os << '(' << cs << ")*";
            else
                os << cs << '*';
        }
        bool firstg = true;
        for (std::size_t gi = 0; gi < m.size(); ++gi) {
            if (m[gi] == 0) continue;
            if (!firstg) os << '*';
            firstg = false;
            os << tower_->gen(gi).name;
            if (m[gi] != 1) os << '^' << m[gi];
        }
    }
    return os.str();
}

ExtensionElement substitute(const RationalFunction& rf,
                            const std::map<std::size_t, ExtensionElement>& bindings,
                            const TowerPtr& tower) {
    const VarSetPtr& vars = tower->vars();
    auto eval_poly = [&](const Polynomial& p) {
        ExtensionElement acc(tower, RationalFunction(Polynomial(vars)));
        for (const auto& t : p.terms()) {
            ExtensionElement term(tower, RationalFunction::constant(vars, t.coeff));
            for (std::size_t v = 0; v < t.mono.size(); ++v) {
                if (t.mono[v] == 0) continue;
                auto it = bindings.find(v);
                ExtensionElement base =
                    it != bindings.end()
                        ? it->second
                        : ExtensionElement(tower, RationalFunction::variable(vars, v));
                term = term * base.pow(unsigned(t.mono[v]));
            }
            acc += term;
        }
        return acc;
    };
    ExtensionElement num = eval_poly(rf.num());
    ExtensionElement den = eval_poly(rf.den());
    if (den.is_zero()) throw DivisionByZero("substitution produced an identically zero denominator");
    return num * den.inverse();
}

}  // namespace painleq
