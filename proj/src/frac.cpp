#include "hilb/frac.hpp"

namespace hilb {

namespace {

// Largest monomial dividing every term.
Mono content_mono(const Poly& p) {
    Mono c;
    bool first = true;
    for (const auto& t : p.terms()) {
        if (first) {
            c = t.mono;
            first = false;
        } else {
            for (size_t i = 0; i < c.size(); ++i) c[i] = std::min(c[i], t.mono[i]);
        }
    }
    if (first) return Mono();
    return c;
}

Poly divide_by_mono(const Poly& p, const Mono& m) {
    if (mono_is_one(m)) return p;
    std::vector<Term> ts;
    for (const auto& t : p.terms()) ts.push_back({mono_div(t.mono, m), t.coeff});
    return Poly::from_terms(p.ctx(), std::move(ts));
}

} // namespace

Frac::Frac(const Poly& num) : num_(num), den_(Poly::constant(num.ctx(), 1)) {}

Frac::Frac(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
    require_same_context(num_.ctx(), den_.ctx());
    if (den_.is_zero()) throw invalid_binding("fraction with zero denominator");
    normalize();
}

void Frac::normalize() {
    if (num_.is_zero()) {
        den_ = Poly::constant(num_.ctx(), 1);
        return;
    }
    Mono cn = content_mono(num_), cd = content_mono(den_);
    Mono common(cn.size(), 0);
    bool nontrivial = false;
    for (size_t i = 0; i < cn.size(); ++i) {
        common[i] = std::min(cn[i], cd[i]);
        nontrivial |= common[i] > 0;
    }
    if (nontrivial) {
        num_ = divide_by_mono(num_, common);
        den_ = divide_by_mono(den_, common);
    }
    if (!den_.is_constant()) {
        try {
            Poly q = divexact(num_, den_);
            num_ = q;
            den_ = Poly::constant(num_.ctx(), 1);
        } catch (const shape_error&) {
            // keep the reduced representative
        }
    }
    MonomialOrder ord = MonomialOrder::grlex(num_.ctx());
    Rat lead = den_.leading_term(ord).coeff;
    if (lead != 1) {
        Rat inv = Rat(1) / lead;
        num_ = num_ * inv;
        den_ = den_ * inv;
    }
}

Frac Frac::operator-() const {
    Frac r(*this);
    r.num_ = -r.num_;
    return r;
}

Frac Frac::operator+(const Frac& o) const {
    return Frac(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

Frac Frac::operator-(const Frac& o) const {
    return Frac(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

Frac Frac::operator*(const Frac& o) const { return Frac(num_ * o.num_, den_ * o.den_); }

Frac Frac::operator/(const Frac& o) const {
    if (o.is_zero()) throw invalid_binding("division by zero fraction");
    return Frac(num_ * o.den_, den_ * o.num_);
}

Frac Frac::pow(unsigned e) const {
    Frac r = Frac::constant(ctx(), 1);
    Frac b = *this;
    while (e) {
        if (e & 1) r = r * b;
        b = b * b;
        e >>= 1;
    }
    return r;
}

bool Frac::operator==(const Frac& o) const { return num_ * o.den_ == o.num_ * den_; }

Frac substitute(const Poly& f, const std::map<VarId, Frac>& bindings) {
    const Context& ctx = f.ctx();
    for (const auto& [v, val] : bindings) {
        if (v >= ctx->size()) throw context_error("binding for out-of-context variable");
        require_same_context(ctx, val.ctx());
        if (val.den().is_zero()) throw invalid_binding("binding denominator is zero");
    }
    // memoized powers of each binding
    std::map<VarId, std::vector<Frac>> powers;
    auto power = [&](VarId v, unsigned e) -> const Frac& {
        auto& tbl = powers[v];
        if (tbl.empty()) tbl.push_back(Frac::constant(ctx, 1));
        while (tbl.size() <= e) tbl.push_back(tbl.back() * bindings.at(v));
        return tbl[e];
    };
    Frac acc = Frac::zero(ctx);
    for (const auto& t : f.terms()) {
        Mono residual(t.mono.size(), 0);
        Frac val = Frac::constant(ctx, t.coeff);
        for (size_t v = 0; v < t.mono.size(); ++v) {
            if (t.mono[v] == 0) continue;
            if (bindings.count(static_cast<VarId>(v)))
                val = val * power(static_cast<VarId>(v), t.mono[v]);
            else
                residual[v] = t.mono[v];
        }
        if (!mono_is_one(residual)) val = val * Frac(Poly::monomial(ctx, residual, Rat(1)));
        acc = acc + val;
    }
    return acc;
}

} // namespace hilb
