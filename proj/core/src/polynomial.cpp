#include "painleq/polynomial.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <numeric>

namespace painleq {

int mono_cmp(const Exponents& a, const Exponents& b) {
    assert(a.size() == b.size());
    long da = std::accumulate(a.begin(), a.end(), 0L);
    long db = std::accumulate(b.begin(), b.end(), 0L);
    if (da != db) return da < db ? -1 : 1;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
    return 0;
}

namespace {
struct MonoLess {
    bool operator()(const Exponents& a, const Exponents& b) const { return mono_cmp(a, b) > 0; }
};
}  // namespace

Polynomial Polynomial::constant(VarSetPtr vars, Rational value) {
    Polynomial p(std::move(vars));
    if (value != 0) p.terms_.push_back({Exponents(p.vars_->size(), 0), std::move(value)});
    return p;
}

Polynomial Polynomial::variable(VarSetPtr vars, std::size_t index) {
    Polynomial p(std::move(vars));
    Exponents e(p.vars_->size(), 0);
    e.at(index) = 1;
    p.terms_.push_back({std::move(e), Rational(1)});
    return p;
}

Rational Polynomial::constant_value() const {
    if (terms_.empty()) return Rational(0);
    return terms_.front().coeff;
}

int Polynomial::degree(std::size_t var) const {
    int d = -1;
    for (const auto& t : terms_) d = std::max(d, int(t.mono[var]));
    return d;
}

int Polynomial::total_degree() const {
    if (terms_.empty()) return -1;
    const Exponents& m = terms_.front().mono;  // grlex leading term has max total degree
    return int(std::accumulate(m.begin(), m.end(), 0L));
}

Polynomial Polynomial::operator-() const {
    Polynomial r(*this);
    for (auto& t : r.terms_) t.coeff = -t.coeff;
    return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
    assert(same_vars(vars_, o.vars_) || is_zero() || o.is_zero());
    if (o.is_zero()) return *this;
    if (is_zero()) return *this = o;
    std::vector<Term> merged;
    merged.reserve(terms_.size() + o.terms_.size());
    std::size_t i = 0, j = 0;
    while (i < terms_.size() && j < o.terms_.size()) {
        int c = mono_cmp(terms_[i].mono, o.terms_[j].mono);
        if (c > 0) {
            merged.push_back(std::move(terms_[i++]));
        } else if (c < 0) {
            merged.push_back(o.terms_[j++]);
        } else {
            Rational s = terms_[i].coeff + o.terms_[j].coeff;
            if (s != 0) merged.push_back({terms_[i].mono, std::move(s)});
            ++i;
            ++j;
        }
    }
    for (; i < terms_.size(); ++i) merged.push_back(std::move(terms_[i]));
    for (; j < o.terms_.size(); ++j) merged.push_back(o.terms_[j]);
    terms_ = std::move(merged);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) { return *this += -o; }

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero()) return a;
    if (b.is_zero()) return b;
    assert(same_vars(a.vars_, b.vars_));
    std::map<Exponents, Rational, MonoLess> acc;
    const std::size_t n = a.vars_->size();
    Exponents m(n);
    for (const auto& ta : a.terms_) {
        for (const auto& tb : b.terms_) {
            for (std::size_t k = 0; k < n; ++k) m[k] = ta.mono[k] + tb.mono[k];
            auto [it, inserted] = acc.try_emplace(m, Rational(0));
            it->second += ta.coeff * tb.coeff;
        }
    }
    Polynomial r(a.vars_);
    r.terms_.reserve(acc.size());
    for (auto& [mono, coeff] : acc)
        if (coeff != 0) r.terms_.push_back({mono, std::move(coeff)});
    return r;
}

Polynomial Polynomial::scaled(const Rational& c) const {
    if (c == 0) return Polynomial(vars_);
    Polynomial r(*this);
    for (auto& t : r.terms_) t.coeff *= c;
    return r;
}

Polynomial Polynomial::pow(unsigned e) const {
    Polynomial r = constant(vars_, Rational(1));
    Polynomial base(*this);
    while (e) {
        if (e & 1u) r = r * base;
        e >>= 1u;
        if (e) base = base * base;
    }
    return r;
}

bool Polynomial::operator==(const Polynomial& o) const {
    if (terms_.size() != o.terms_.size()) return false;
    for (std::size_t i = 0; i < terms_.size(); ++i)
        if (terms_[i].mono != o.terms_[i].mono || terms_[i].coeff != o.terms_[i].coeff) return false;
    return true;
}

Polynomial Polynomial::derivative(std::size_t var) const {
    Polynomial r(vars_);
    for (const auto& t : terms_) {
        if (t.mono[var] == 0) continue;
        Term d{t.mono, t.coeff * t.mono[var]};
        d.mono[var] -= 1;
        r.terms_.push_back(std::move(d));
    }
    r.normalize_sorted();
    return r;
}

std::vector<Polynomial> Polynomial::coefficients_in(std::size_t var) const {
    int d = degree(var);
    std::vector<Polynomial> out(std::size_t(std::max(d, 0)) + 1, Polynomial(vars_));
    for (const auto& t : terms_) {
        Term c{t.mono, t.coeff};
        std::size_t k = std::size_t(c.mono[var]);
        c.mono[var] = 0;
        out[k].terms_.push_back(std::move(c));
    }
    for (auto& p : out) p.normalize_sorted();
    return out;
}

Polynomial Polynomial::from_coefficients_in(std::size_t var, const std::vector<Polynomial>& coeffs,
                                            const VarSetPtr& vars) {
    Polynomial r(vars);
    for (std::size_t k = 0; k < coeffs.size(); ++k) {
        for (const auto& t : coeffs[k].terms_) {
            Term lifted{t.mono, t.coeff};
            lifted.mono[var] += std::int32_t(k);
            r.terms_.push_back(std::move(lifted));
        }
    }
    r.normalize_sorted();
    return r;
}

Rational Polynomial::signed_content() const {
    if (terms_.empty()) return Rational(0);
    Integer num_gcd(0), den_lcm(1);
    for (const auto& t : terms_) {
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), t.coeff.get_num().get_mpz_t());
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), t.coeff.get_den().get_mpz_t());
    }
    Rational c(num_gcd, den_lcm);
    c.canonicalize();
    if (sign(terms_.front().coeff) < 0) c = -c;
    return c;
}

Polynomial Polynomial::primitive() const {
    if (is_zero()) return *this;
    Rational c = signed_content();
    Polynomial r(*this);
    for (auto& t : r.terms_) t.coeff /= c;
    return r;
}

Polynomial Polynomial::divide_exact(const Polynomial& d) const {
    if (d.is_zero()) throw DivisionByZero("polynomial division by zero");
    if (is_zero()) return *this;
    if (d.is_constant()) return scaled(Rational(1) / d.constant_value());
    Polynomial rem(*this);
    Polynomial quot(vars_);
    const Term& dl = d.leading_term();
    while (!rem.is_zero()) {
        const Term& rl = rem.leading_term();
        Term q{rl.mono, rl.coeff / dl.coeff};
        for (std::size_t k = 0; k < q.mono.size(); ++k) {
            q.mono[k] -= dl.mono[k];
            if (q.mono[k] < 0) throw Error("inexact polynomial division");
        }
        Polynomial qp(vars_);
        qp.terms_.push_back(q);
        quot += qp;
        rem -= qp * d;
    }
    return quot;
}

namespace {

// Pseudo-remainder of a by b, both viewed as univariate in `var` with
// polynomial coefficients: lc(b)^(da-db+1) * a mod b.
Polynomial pseudo_rem(const Polynomial& a, const Polynomial& b, std::size_t var,
                      const VarSetPtr& vars) {
    std::vector<Polynomial> ac = a.coefficients_in(var);
    std::vector<Polynomial> bc = b.coefficients_in(var);
    int da = int(ac.size()) - 1, db = int(bc.size()) - 1;
    assert(db >= 0 && !bc[db].is_zero());
    if (da < db) {
        Polynomial lead = bc[std::size_t(db)];
        Polynomial scaledA = a;
        for (int i = 0; i < da - db + 1; ++i) scaledA = scaledA * lead;  // not reached; da<db
        return a;
    }
    Polynomial lead = bc[std::size_t(db)];
    // working remainder coefficients
    std::vector<Polynomial> r = ac;
    int dr = da;
    auto trim = [&]() {
        while (dr >= 0 && r[std::size_t(dr)].is_zero()) --dr;
    };
    trim();
    int steps = da - db + 1;
    while (dr >= db && steps > 0) {
        Polynomial top = r[std::size_t(dr)];
        // r := lead * r - top * x^(dr-db) * b
        for (int i = 0; i <= dr; ++i) r[std::size_t(i)] = r[std::size_t(i)] * lead;
        for (int i = 0; i <= db; ++i)
            r[std::size_t(i + dr - db)] -= top * bc[std::size_t(i)];
        --steps;
        trim();
    }
    // account for unused multiplier steps so the result is the classical prem
    for (; steps > 0; --steps)
        for (int i = 0; i <= dr; ++i) r[std::size_t(i)] = r[std::size_t(i)] * lead;
    if (dr < 0) return Polynomial(vars);
    r.resize(std::size_t(dr) + 1, Polynomial(vars));
    return Polynomial::from_coefficients_in(var, r, vars);
}

// content of `p` with respect to `var`: gcd of its coefficients
Polynomial content_in(const Polynomial& p, std::size_t var) {
    Polynomial c(p.vars());
    for (const auto& coeff : p.coefficients_in(var)) {
        c = Polynomial::gcd(c, coeff);
        if (c.is_one()) break;
    }
    return c;
}

}  // namespace

Polynomial Polynomial::gcd(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero()) return b.is_zero() ? b : b.primitive();
    if (b.is_zero()) return a.primitive();
    const VarSetPtr& vars = a.vars_ ? a.vars_ : b.vars_;
    if (a.is_constant() || b.is_constant()) return constant(vars, Rational(1));

    // main variable: present in both if possible, minimizing the larger degree
    std::size_t best = 0;
    int best_score = -1;
    bool best_shared = false;
    for (std::size_t v = 0; v < vars->size(); ++v) {
        int da = a.degree(v), db = b.degree(v);
        if (da <= 0 && db <= 0) continue;
        bool shared = da > 0 && db > 0;
        int score = std::max(da, db);
        if (best_score < 0 || (shared && !best_shared) ||
            (shared == best_shared && score < best_score)) {
            best = v;
            best_score = score;
            best_shared = shared;
        }
    }
    std::size_t var = best;
    if (!best_shared) {
        // variable occurs in only one operand: gcd divides the coefficients
        const Polynomial& with = a.degree(var) > 0 ? a : b;
        const Polynomial& other = a.degree(var) > 0 ? b : a;
        return gcd(content_in(with, var), other);
    }

    Polynomial ca = content_in(a, var), cb = content_in(b, var);
    Polynomial c = gcd(ca, cb);
    Polynomial pa = a.divide_exact(ca);
    Polynomial pb = b.divide_exact(cb);
    if (pa.degree(var) < pb.degree(var)) std::swap(pa, pb);
    // primitive PRS
    while (true) {
        if (pb.is_zero()) break;
        if (pb.degree(var) == 0) {
            // primitive parts coprime in var
            return c;
        }
        Polynomial r = pseudo_rem(pa, pb, var, vars);
        pa = std::move(pb);
        if (r.is_zero()) {
            pb = Polynomial(vars);
        } else {
            pb = r.divide_exact(content_in(r, var)).primitive();
        }
    }
    Polynomial g = pa.divide_exact(content_in(pa, var)).primitive();
    return (c * g).primitive();
}

std::optional<Polynomial> Polynomial::sqrt() const {
    if (is_zero()) return *this;
    auto coeff_sqrt = [](const Rational& c) -> std::optional<Rational> {
        if (sign(c) < 0) return std::nullopt;
        if (!mpz_perfect_square_p(c.get_num().get_mpz_t()) ||
            !mpz_perfect_square_p(c.get_den().get_mpz_t()))
            return std::nullopt;
        Rational r;
        mpz_sqrt(r.get_num_mpz_t(), c.get_num().get_mpz_t());
        mpz_sqrt(r.get_den_mpz_t(), c.get_den().get_mpz_t());
        return r;
    };
    const Term& lt = leading_term();
    Term slt{lt.mono, Rational(0)};
    for (auto& e : slt.mono) {
        if (e % 2 != 0) return std::nullopt;
        e /= 2;
    }
    auto c0 = coeff_sqrt(lt.coeff);
    if (!c0) return std::nullopt;
    slt.coeff = *c0;
    Polynomial s(vars_);
    s.terms_.push_back(slt);
    Polynomial r = *this - s * s;
    Polynomial two_s0(vars_);
    two_s0.terms_.push_back({slt.mono, slt.coeff * 2});
    Exponents last = lt.mono;
    while (!r.is_zero()) {
        const Term& rl = r.leading_term();
        if (mono_cmp(rl.mono, last) >= 0 && last != lt.mono) return std::nullopt;
        last = rl.mono;
        Term q{rl.mono, rl.coeff / two_s0.terms_.front().coeff};
        for (std::size_t k = 0; k < q.mono.size(); ++k) {
            q.mono[k] -= slt.mono[k];
            if (q.mono[k] < 0) return std::nullopt;
        }
        Polynomial qp(vars_);
        qp.terms_.push_back(q);
        s += qp;
        r = *this - s * s;
    }
    return s;
}

Polynomial Polynomial::substituted(std::size_t var, const Polynomial& value) const {
    std::vector<Polynomial> coeffs = coefficients_in(var);
    Polynomial r(vars_);
    // Horner
    for (std::size_t i = coeffs.size(); i-- > 0;) r = r * value + coeffs[i];
    return r;
}

Polynomial Polynomial::from_terms(VarSetPtr vars, std::vector<Term> terms) {
    Polynomial p(std::move(vars));
    p.terms_ = std::move(terms);
    p.normalize_sorted();
    return p;
}

void Polynomial::normalize_sorted() {
    std::sort(terms_.begin(), terms_.end(),
              [](const Term& x, const Term& y) { return mono_cmp(x.mono, y.mono) > 0; });
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (auto& t : terms_) {
        if (!out.empty() && out.back().mono == t.mono) {
            out.back().coeff += t.coeff;
            if (out.back().coeff == 0) out.pop_back();
        } else if (t.coeff != 0) {
            out.push_back(std::move(t));
        }
    }
    terms_ = std::move(out);
}

}  // namespace painleq
