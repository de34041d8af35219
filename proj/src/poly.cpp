#include "hilb/poly.hpp"

#include <algorithm>
#include <numeric>

namespace hilb {

unsigned total_degree(const Mono& m) {
    return std::accumulate(m.begin(), m.end(), 0u);
}

bool mono_is_one(const Mono& m) {
    return std::all_of(m.begin(), m.end(), [](unsigned e) { return e == 0; });
}

bool mono_divides(const Mono& d, const Mono& m) {
    for (size_t i = 0; i < d.size(); ++i)
        if (d[i] > m[i]) return false;
    return true;
}

Mono mono_mul(const Mono& a, const Mono& b) {
    Mono r(a);
    for (size_t i = 0; i < r.size(); ++i) r[i] += b[i];
    return r;
}

Mono mono_div(const Mono& a, const Mono& b) {
    Mono r(a);
    for (size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
    return r;
}

Mono mono_lcm(const Mono& a, const Mono& b) {
    Mono r(a);
    for (size_t i = 0; i < r.size(); ++i) r[i] = std::max(a[i], b[i]);
    return r;
}

bool mono_coprime(const Mono& a, const Mono& b) {
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i] > 0 && b[i] > 0) return false;
    return true;
}

int grlex_cmp(const Mono& a, const Mono& b) {
    unsigned da = total_degree(a), db = total_degree(b);
    if (da != db) return da < db ? -1 : 1;
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
    return 0;
}

int MonomialOrder::cmp(const Mono& a, const Mono& b) const {
    auto lex_on = [&](size_t from, size_t to) -> int {
        for (size_t i = from; i < to; ++i) {
            VarId v = priority[i];
            if (a[v] != b[v]) return a[v] < b[v] ? -1 : 1;
        }
        return 0;
    };
    auto grevlex_on = [&](size_t from, size_t to) -> int {
        unsigned da = 0, db = 0;
        for (size_t i = from; i < to; ++i) {
            da += a[priority[i]];
            db += b[priority[i]];
        }
        if (da != db) return da < db ? -1 : 1;
        for (size_t i = to; i-- > from;) {
            VarId v = priority[i];
            if (a[v] != b[v]) return a[v] < b[v] ? 1 : -1;
        }
        return 0;
    };
    switch (kind) {
        case Kind::lex:
            return lex_on(0, priority.size());
        case Kind::grlex: {
            unsigned da = total_degree(a), db = total_degree(b);
            if (da != db) return da < db ? -1 : 1;
            return lex_on(0, priority.size());
        }
        case Kind::grevlex:
            return grevlex_on(0, priority.size());
        case Kind::elim_block: {
            int c = grevlex_on(0, block);
            if (c != 0) return c;
            return grevlex_on(block, priority.size());
        }
    }
    return 0;
}

static std::vector<VarId> identity_priority(const Context& ctx) {
    std::vector<VarId> p(ctx->size());
    std::iota(p.begin(), p.end(), 0u);
    return p;
}

MonomialOrder MonomialOrder::lex(const Context& ctx) {
    return {Kind::lex, identity_priority(ctx), 0};
}
MonomialOrder MonomialOrder::grlex(const Context& ctx) {
    return {Kind::grlex, identity_priority(ctx), 0};
}
MonomialOrder MonomialOrder::grevlex(const Context& ctx) {
    return {Kind::grevlex, identity_priority(ctx), 0};
}

MonomialOrder MonomialOrder::grevlex_low(const Context& ctx, const std::vector<std::string>& low) {
    std::vector<VarId> lows;
    for (const auto& n : low) lows.push_back(ctx->var(n));
    std::vector<VarId> p;
    for (VarId v = 0; v < ctx->size(); ++v)
        if (std::find(lows.begin(), lows.end(), v) == lows.end()) p.push_back(v);
    p.insert(p.end(), lows.begin(), lows.end());
    return {Kind::grevlex, p, 0};
}

MonomialOrder MonomialOrder::elim(const Context& ctx, const std::vector<std::string>& block_vars) {
    std::vector<VarId> blocks;
    for (const auto& n : block_vars) blocks.push_back(ctx->var(n));
    std::vector<VarId> p = blocks;
    for (VarId v = 0; v < ctx->size(); ++v)
        if (std::find(blocks.begin(), blocks.end(), v) == blocks.end()) p.push_back(v);
    return {Kind::elim_block, p, blocks.size()};
}

Poly Poly::zero(const Context& ctx) {
    Poly p;
    p.ctx_ = ctx;
    return p;
}

Poly Poly::constant(const Context& ctx, const Rat& c) {
    Poly p;
    p.ctx_ = ctx;
    if (c != 0) p.terms_.push_back({Mono(ctx->size(), 0), c});
    return p;
}

Poly Poly::variable(const Context& ctx, VarId v, unsigned e) {
    if (v >= ctx->size()) throw context_error("variable id out of range");
    Poly p;
    p.ctx_ = ctx;
    Mono m(ctx->size(), 0);
    m[v] = e;
    if (e == 0)
        return constant(ctx, 1);
    p.terms_.push_back({std::move(m), Rat(1)});
    return p;
}

Poly Poly::variable(const Context& ctx, const std::string& name, unsigned e) {
    return variable(ctx, ctx->var(name), e);
}

Poly Poly::monomial(const Context& ctx, Mono m, Rat c) {
    if (m.size() != ctx->size()) throw context_error("monomial width mismatch");
    Poly p;
    p.ctx_ = ctx;
    if (c != 0) p.terms_.push_back({std::move(m), std::move(c)});
    return p;
}

Poly Poly::from_terms(const Context& ctx, std::vector<Term> ts) {
    for (const auto& t : ts)
        if (t.mono.size() != ctx->size()) throw context_error("term width mismatch");
    std::sort(ts.begin(), ts.end(),
              [](const Term& a, const Term& b) { return grlex_cmp(a.mono, b.mono) > 0; });
    Poly p;
    p.ctx_ = ctx;
    for (auto& t : ts) {
        if (!p.terms_.empty() && p.terms_.back().mono == t.mono)
            p.terms_.back().coeff += t.coeff;
        else
            p.terms_.push_back(std::move(t));
        if (!p.terms_.empty() && p.terms_.back().coeff == 0) p.terms_.pop_back();
    }
    return p;
}

bool Poly::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && mono_is_one(terms_[0].mono));
}

unsigned Poly::degree() const {
    unsigned d = 0;
    for (const auto& t : terms_) d = std::max(d, total_degree(t.mono));
    return d;
}

unsigned Poly::degree_in(VarId v) const {
    unsigned d = 0;
    for (const auto& t : terms_) d = std::max(d, t.mono[v]);
    return d;
}

Rat Poly::coeff(const Mono& m) const {
    for (const auto& t : terms_)
        if (t.mono == m) return t.coeff;
    return Rat(0);
}

Rat Poly::constant_coeff() const {
    if (terms_.empty()) return Rat(0);
    const Term& last = terms_.back();
    return mono_is_one(last.mono) ? last.coeff : Rat(0);
}

Poly Poly::operator-() const {
    Poly p(*this);
    for (auto& t : p.terms_) t.coeff = -t.coeff;
    return p;
}

Poly Poly::operator+(const Poly& o) const {
    require_same_context(ctx_, o.ctx_);
    Poly r;
    r.ctx_ = ctx_;
    r.terms_.reserve(terms_.size() + o.terms_.size());
    size_t i = 0, j = 0;
    while (i < terms_.size() && j < o.terms_.size()) {
        int c = grlex_cmp(terms_[i].mono, o.terms_[j].mono);
        if (c > 0)
            r.terms_.push_back(terms_[i++]);
        else if (c < 0)
            r.terms_.push_back(o.terms_[j++]);
        else {
            Rat s = terms_[i].coeff + o.terms_[j].coeff;
            if (s != 0) r.terms_.push_back({terms_[i].mono, std::move(s)});
            ++i, ++j;
        }
    }
    for (; i < terms_.size(); ++i) r.terms_.push_back(terms_[i]);
    for (; j < o.terms_.size(); ++j) r.terms_.push_back(o.terms_[j]);
    return r;
}

Poly Poly::operator-(const Poly& o) const { return *this + (-o); }

Poly Poly::operator*(const Poly& o) const {
    require_same_context(ctx_, o.ctx_);
    auto greater = [](const Mono& a, const Mono& b) { return grlex_cmp(a, b) > 0; };
    std::map<Mono, Rat, decltype(greater)> acc(greater);
    for (const auto& s : terms_)
        for (const auto& t : o.terms_) acc[mono_mul(s.mono, t.mono)] += s.coeff * t.coeff;
    Poly r;
    r.ctx_ = ctx_;
    for (auto& [m, c] : acc)
        if (c != 0) r.terms_.push_back({m, std::move(c)});
    return r;
}

Poly Poly::operator*(const Rat& c) const {
    if (c == 0) return zero(ctx_);
    Poly p(*this);
    for (auto& t : p.terms_) t.coeff *= c;
    return p;
}

Poly Poly::pow(unsigned e) const {
    Poly r = constant(ctx_, 1);
    Poly b = *this;
    while (e) {
        if (e & 1) r = r * b;
        b = b * b;
        e >>= 1;
    }
    return r;
}

bool Poly::operator==(const Poly& o) const {
    if (!same_context(ctx_, o.ctx_)) return false;
    if (terms_.size() != o.terms_.size()) return false;
    for (size_t i = 0; i < terms_.size(); ++i)
        if (terms_[i].mono != o.terms_[i].mono || terms_[i].coeff != o.terms_[i].coeff)
            return false;
    return true;
}

const Term& Poly::leading_term(const MonomialOrder& ord) const {
    if (terms_.empty()) throw shape_error("leading term of zero polynomial");
    size_t best = 0;
    for (size_t i = 1; i < terms_.size(); ++i)
        if (ord.greater(terms_[i].mono, terms_[best].mono)) best = i;
    return terms_[best];
}

Poly Poly::derivative(VarId v) const {
    std::vector<Term> out;
    for (const auto& t : terms_) {
        if (t.mono[v] == 0) continue;
        Term d = t;
        d.coeff *= static_cast<long>(t.mono[v]);
        d.mono[v] -= 1;
        out.push_back(std::move(d));
    }
    return from_terms(ctx_, std::move(out));
}

Rat Poly::eval(const std::vector<Rat>& point) const {
    if (point.size() != ctx_->size()) throw context_error("evaluation point width mismatch");
    Rat acc(0);
    for (const auto& t : terms_) {
        Rat v = t.coeff;
        for (size_t i = 0; i < point.size(); ++i)
            for (unsigned e = 0; e < t.mono[i]; ++e) v *= point[i];
        acc += v;
    }
    return acc;
}

Poly Poly::specialize(const std::map<VarId, Rat>& values) const {
    std::vector<Term> out;
    for (const auto& t : terms_) {
        Term s = t;
        for (const auto& [v, val] : values) {
            for (unsigned e = 0; e < t.mono[v]; ++e) s.coeff *= val;
            s.mono[v] = 0;
        }
        if (s.coeff != 0) out.push_back(std::move(s));
    }
    return from_terms(ctx_, std::move(out));
}

Poly Poly::transport(const Context& target) const {
    std::vector<Term> out;
    for (const auto& t : terms_) {
        Mono m(target->size(), 0);
        for (size_t v = 0; v < t.mono.size(); ++v) {
            if (t.mono[v] == 0) continue;
            m[target->var(ctx_->name(static_cast<VarId>(v)))] = t.mono[v];
        }
        out.push_back({std::move(m), t.coeff});
    }
    return from_terms(target, std::move(out));
}

Poly poly_arith(const Poly& lhs, const Poly& rhs, PolyOp op) {
    switch (op) {
        case PolyOp::add: return lhs + rhs;
        case PolyOp::sub: return lhs - rhs;
        case PolyOp::mul: return lhs * rhs;
    }
    throw std::logic_error("unreachable");
}

Poly elementary_symmetric(const Context& ctx, const std::vector<VarId>& vars, unsigned k) {
    if (k > vars.size()) throw range_error("elementary_symmetric: k exceeds variable count");
    // e[j] after processing a prefix of vars: DP over variables
    std::vector<Poly> e(k + 1, Poly::zero(ctx));
    e[0] = Poly::constant(ctx, 1);
    for (VarId v : vars) {
        Poly xv = Poly::variable(ctx, v);
        for (unsigned j = k; j >= 1; --j) e[j] = e[j] + e[j - 1] * xv;
    }
    return e[k];
}

Poly substitute_var(const Poly& f, VarId v, const Poly& value) {
    require_same_context(f.ctx(), value.ctx());
    Poly acc = Poly::zero(f.ctx());
    std::vector<Poly> powers{Poly::constant(f.ctx(), 1)};
    for (const auto& t : f.terms()) {
        unsigned e = t.mono[v];
        while (powers.size() <= e) powers.push_back(powers.back() * value);
        Mono m = t.mono;
        m[v] = 0;
        acc = acc + Poly::monomial(f.ctx(), std::move(m), t.coeff) * powers[e];
    }
    return acc;
}

Poly rewrite_pairs_to(const Poly& f, const std::vector<std::pair<VarId, VarId>>& pairs,
                      VarId target) {
    std::vector<Term> out;
    for (const auto& t : f.terms()) {
        Term s = t;
        for (const auto& [x, y] : pairs) {
            unsigned e = std::min(s.mono[x], s.mono[y]);
            if (e == 0) continue;
            s.mono[x] -= e;
            s.mono[y] -= e;
            s.mono[target] += e;
        }
        out.push_back(std::move(s));
    }
    return Poly::from_terms(f.ctx(), std::move(out));
}

Poly divexact(const Poly& a, const Poly& b) {
    require_same_context(a.ctx(), b.ctx());
    if (b.is_zero()) throw shape_error("divexact: division by zero polynomial");
    if (a.is_zero()) return Poly::zero(a.ctx());
    MonomialOrder ord = MonomialOrder::grlex(a.ctx());
    Poly rem = a;
    Poly quot = Poly::zero(a.ctx());
    const Term& ltb = b.leading_term(ord);
    while (!rem.is_zero()) {
        const Term& ltr = rem.leading_term(ord);
        if (!mono_divides(ltb.mono, ltr.mono)) throw shape_error("divexact: not an exact division");
        Poly q = Poly::monomial(a.ctx(), mono_div(ltr.mono, ltb.mono), ltr.coeff / ltb.coeff);
        quot = quot + q;
        rem = rem - q * b;
    }
    return quot;
}

} // namespace hilb
