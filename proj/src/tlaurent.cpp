#include "hilb/tlaurent.hpp"

namespace hilb {

TLaurent TLaurent::from_frac(const Frac& f, VarId t_var) {
    TLaurent out;
    if (f.is_zero()) return out;
    Poly num = f.num();
    Poly den = f.den();
    // factor a pure t-power out of the denominator, then require t-freeness
    unsigned shift = 0;
    {
        unsigned minexp = den.terms().empty() ? 0u : den.terms()[0].mono[t_var];
        for (const auto& t : den.terms()) minexp = std::min(minexp, t.mono[t_var]);
        if (minexp > 0) {
            std::vector<Term> ts;
            for (const auto& t : den.terms()) {
                Mono m = t.mono;
                m[t_var] -= minexp;
                ts.push_back({std::move(m), t.coeff});
            }
            den = Poly::from_terms(den.ctx(), std::move(ts));
            shift = minexp;
        }
        if (den.depends_on(t_var))
            throw shape_error("TLaurent: denominator not of the form t^k * (t-free)");
    }
    std::map<long, std::vector<Term>> buckets;
    for (const auto& t : num.terms()) {
        long e = static_cast<long>(t.mono[t_var]) - static_cast<long>(shift);
        Mono m = t.mono;
        m[t_var] = 0;
        buckets[e].push_back({std::move(m), t.coeff});
    }
    for (auto& [e, ts] : buckets) {
        Poly p = Poly::from_terms(num.ctx(), std::move(ts));
        if (p.is_zero()) continue;
        Frac c(p, den);
        if (!c.is_zero()) out.coeffs_.emplace(e, std::move(c));
    }
    return out;
}

std::optional<long> TLaurent::t_order() const {
    if (coeffs_.empty()) return std::nullopt;
    return coeffs_.begin()->first;
}

const Frac& TLaurent::leading_coeff() const {
    if (coeffs_.empty()) throw shape_error("leading coefficient of zero TLaurent");
    return coeffs_.begin()->second;
}

} // namespace hilb
