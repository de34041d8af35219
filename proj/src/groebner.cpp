#include "hilb/groebner.hpp"

#include "hilb/matrix.hpp"

#include <algorithm>
#include <set>

namespace hilb {

IdealBasis IdealBasis::of(const Context& ctx, std::vector<Poly> gens) {
    std::vector<Poly> keep;
    for (auto& g : gens) {
        require_same_context(ctx, g.ctx());
        if (!g.is_zero()) keep.push_back(std::move(g));
    }
    if (keep.empty()) throw shape_error("ideal basis needs at least one nonzero generator");
    return IdealBasis{ctx, std::move(keep)};
}

namespace {

// polynomial as term vector sorted descending w.r.t. a fixed order
struct OPoly {
    std::vector<Term> t;
    bool zero() const { return t.empty(); }
    const Term& lt() const { return t.front(); }
};

OPoly to_opoly(const Poly& p, const MonomialOrder& ord) {
    OPoly o;
    o.t = p.terms();
    std::sort(o.t.begin(), o.t.end(),
              [&](const Term& a, const Term& b) { return ord.greater(a.mono, b.mono); });
    return o;
}

Poly from_opoly(const Context& ctx, OPoly o) { return Poly::from_terms(ctx, std::move(o.t)); }

OPoly osub(const OPoly& a, const OPoly& b, const MonomialOrder& ord) {
    OPoly r;
    r.t.reserve(a.t.size() + b.t.size());
    size_t i = 0, j = 0;
    while (i < a.t.size() && j < b.t.size()) {
        int c = ord.cmp(a.t[i].mono, b.t[j].mono);
        if (c > 0)
            r.t.push_back(a.t[i++]);
        else if (c < 0) {
            r.t.push_back(b.t[j]);
            r.t.back().coeff = -r.t.back().coeff;
            ++j;
        } else {
            Rat s = a.t[i].coeff - b.t[j].coeff;
            if (s != 0) r.t.push_back({a.t[i].mono, std::move(s)});
            ++i, ++j;
        }
    }
    for (; i < a.t.size(); ++i) r.t.push_back(a.t[i]);
    for (; j < b.t.size(); ++j) {
        r.t.push_back(b.t[j]);
        r.t.back().coeff = -r.t.back().coeff;
    }
    return r;
}

// r -= c * m * g, all kept sorted (monomial translation preserves order)
OPoly osub_mul(const OPoly& r, const Rat& c, const Mono& m, const OPoly& g,
               const MonomialOrder& ord) {
    OPoly scaled;
    scaled.t.reserve(g.t.size());
    for (const auto& t : g.t) scaled.t.push_back({mono_mul(t.mono, m), t.coeff * c});
    return osub(r, scaled, ord);
}

// Full tail reduction of f by basis G.
OPoly reduce_full(OPoly f, const std::vector<OPoly>& basis, const MonomialOrder& ord,
                  Budget& budget) {
    OPoly out;
    while (!f.zero()) {
        bool reduced = false;
        const Term& lt = f.lt();
        for (const auto& g : basis) {
            if (g.zero()) continue;
            if (!mono_divides(g.lt().mono, lt.mono)) continue;
            budget.charge();
            Rat c = lt.coeff / g.lt().coeff;
            Mono m = mono_div(lt.mono, g.lt().mono);
            f = osub_mul(f, c, m, g, ord);
            reduced = true;
            break;
        }
        if (!reduced) {
            out.t.push_back(f.t.front());
            f.t.erase(f.t.begin());
        }
    }
    return out;
}

struct Pair {
    size_t i, j;
    Mono lcm;
};

// Gebauer-Moeller pair update: applies the product (coprime) and chain
// criteria while keeping the pair queue correct.
void gm_update(std::vector<Pair>& pairs, std::vector<OPoly>& basis, const OPoly& h,
               const MonomialOrder& ord) {
    size_t hidx = basis.size();
    const Mono& lth = h.lt().mono;
    std::vector<Pair> cand;
    for (size_t i = 0; i < basis.size(); ++i) {
        if (basis[i].zero()) continue;
        cand.push_back({i, hidx, mono_lcm(basis[i].lt().mono, lth)});
    }
    // drop candidate (i,h) when another candidate (j,h) strictly divides it
    std::vector<bool> keep(cand.size(), true);
    for (size_t a = 0; a < cand.size(); ++a) {
        if (!keep[a]) continue;
        for (size_t b = 0; b < cand.size(); ++b) {
            if (a == b || !keep[b]) continue;
            if (cand[b].lcm != cand[a].lcm && mono_divides(cand[b].lcm, cand[a].lcm)) {
                keep[a] = false;
                break;
            }
        }
    }
    // among equal lcms keep one representative; prefer a coprime pair (which
    // is then discarded by the product criterion)
    for (size_t a = 0; a < cand.size(); ++a) {
        if (!keep[a]) continue;
        bool coprime_a =
            mono_coprime(basis[cand[a].i].lt().mono, lth);
        for (size_t b = a + 1; b < cand.size(); ++b) {
            if (!keep[b] || cand[b].lcm != cand[a].lcm) continue;
            bool coprime_b = mono_coprime(basis[cand[b].i].lt().mono, lth);
            if (coprime_b && !coprime_a) {
                keep[a] = false;
                break;
            }
            keep[b] = false;
        }
    }
    // product criterion
    std::vector<Pair> fresh;
    for (size_t a = 0; a < cand.size(); ++a) {
        if (!keep[a]) continue;
        if (mono_coprime(basis[cand[a].i].lt().mono, lth)) continue;
        fresh.push_back(cand[a]);
    }
    // chain criterion on old pairs: drop (i,j) if lt(h) divides lcm(i,j)
    // strictly (lcm with h differs on both sides)
    std::vector<Pair> kept_old;
    for (const auto& p : pairs) {
        if (mono_divides(lth, p.lcm) &&
            mono_lcm(basis[p.i].lt().mono, lth) != p.lcm &&
            mono_lcm(basis[p.j].lt().mono, lth) != p.lcm)
            continue;
        kept_old.push_back(p);
    }
    pairs = std::move(kept_old);
    pairs.insert(pairs.end(), fresh.begin(), fresh.end());
    basis.push_back(h);
    (void)ord;
}

OPoly s_poly(const OPoly& f, const OPoly& g, const MonomialOrder& ord) {
    Mono l = mono_lcm(f.lt().mono, g.lt().mono);
    OPoly a, b;
    a.t.reserve(f.t.size());
    Mono mf = mono_div(l, f.lt().mono);
    Rat cf = Rat(1) / f.lt().coeff;
    for (const auto& t : f.t) a.t.push_back({mono_mul(t.mono, mf), t.coeff * cf});
    Mono mg = mono_div(l, g.lt().mono);
    Rat cg = Rat(1) / g.lt().coeff;
    for (const auto& t : g.t) b.t.push_back({mono_mul(t.mono, mg), t.coeff * cg});
    return osub(a, b, ord);
}

void make_monic(OPoly& p) {
    if (p.zero()) return;
    Rat inv = Rat(1) / p.lt().coeff;
    if (inv != 1)
        for (auto& t : p.t) t.coeff *= inv;
}

} // namespace

GroebnerBasis buchberger(const IdealBasis& ideal, const MonomialOrder& order, Budget* budget) {
    Budget local;
    Budget& bud = budget ? *budget : local;
    const Context& ctx = ideal.ctx;

    std::vector<OPoly> basis;
    std::vector<Pair> pairs;
    // deterministic start: insert generators sorted by leading monomial
    std::vector<OPoly> gens;
    for (const auto& g : ideal.generators) gens.push_back(to_opoly(g, order));
    std::sort(gens.begin(), gens.end(), [&](const OPoly& a, const OPoly& b) {
        return order.less(a.lt().mono, b.lt().mono);
    });
    for (auto& g : gens) {
        OPoly r = reduce_full(std::move(g), basis, order, bud);
        if (r.zero()) continue;
        make_monic(r);
        gm_update(pairs, basis, r, order);
    }

    while (!pairs.empty()) {
        // normal selection: smallest lcm in the order; ties by indices
        size_t best = 0;
        for (size_t k = 1; k < pairs.size(); ++k) {
            int c = order.cmp(pairs[k].lcm, pairs[best].lcm);
            if (c < 0 || (c == 0 && std::make_pair(pairs[k].i, pairs[k].j) <
                                        std::make_pair(pairs[best].i, pairs[best].j)))
                best = k;
        }
        Pair p = pairs[best];
        pairs.erase(pairs.begin() + static_cast<long>(best));
        bud.charge();
        OPoly s = s_poly(basis[p.i], basis[p.j], order);
        OPoly r = reduce_full(std::move(s), basis, order, bud);
        if (r.zero()) continue;
        make_monic(r);
        gm_update(pairs, basis, r, order);
    }

    // minimalize: drop elements whose leading term is divisible by another's
    std::vector<OPoly> minimal;
    for (size_t i = 0; i < basis.size(); ++i) {
        bool redundant = false;
        for (size_t j = 0; j < basis.size() && !redundant; ++j) {
            if (i == j) continue;
            if (!mono_divides(basis[j].lt().mono, basis[i].lt().mono)) continue;
            // on equal leading monomials keep the earlier element
            if (basis[j].lt().mono == basis[i].lt().mono)
                redundant = j < i;
            else
                redundant = true;
        }
        if (!redundant) minimal.push_back(basis[i]);
    }
    // tail-reduce each element against the others
    std::vector<Poly> reduced;
    for (size_t i = 0; i < minimal.size(); ++i) {
        std::vector<OPoly> others;
        for (size_t j = 0; j < minimal.size(); ++j)
            if (j != i) others.push_back(minimal[j]);
        OPoly r = reduce_full(minimal[i], others, order, bud);
        make_monic(r);
        if (!r.zero()) reduced.push_back(from_opoly(ctx, std::move(r)));
    }
    std::sort(reduced.begin(), reduced.end(), [&](const Poly& a, const Poly& b) {
        return order.less(a.leading_term(order).mono, b.leading_term(order).mono);
    });
    return GroebnerBasis(ctx, order, std::move(reduced));
}

Poly normal_form(const Poly& f, const GroebnerBasis& gb, Budget* budget) {
    require_same_context(f.ctx(), gb.ctx());
    Budget local;
    Budget& bud = budget ? *budget : local;
    std::vector<OPoly> basis;
    for (const auto& g : gb.elements()) basis.push_back(to_opoly(g, gb.order()));
    OPoly r = reduce_full(to_opoly(f, gb.order()), basis, gb.order(), bud);
    return from_opoly(f.ctx(), std::move(r));
}

QuotientBasis quotient_basis(const GroebnerBasis& gb, Budget* budget) {
    Budget local;
    Budget& bud = budget ? *budget : local;
    const Context& ctx = gb.ctx();
    size_t n = ctx->size();
    std::vector<Mono> lts;
    for (const auto& g : gb.elements()) lts.push_back(g.leading_term(gb.order()).mono);
    // constant in the ideal: quotient is zero-dimensional as a vector space
    for (const auto& m : lts)
        if (mono_is_one(m)) return {{}, 0};
    // finite colength iff every variable has a pure power among leading terms
    for (size_t v = 0; v < n; ++v) {
        bool pure = false;
        for (const auto& m : lts) {
            bool only_v = m[v] > 0;
            for (size_t w = 0; w < n && only_v; ++w)
                if (w != v && m[w] > 0) only_v = false;
            if (only_v) {
                pure = true;
                break;
            }
        }
        if (!pure) return {{}, std::nullopt};
    }
    auto standard = [&](const Mono& m) {
        for (const auto& l : lts)
            if (mono_divides(l, m)) return false;
        return true;
    };
    std::set<Mono> seen;
    std::vector<Mono> queue{Mono(n, 0)};
    seen.insert(queue[0]);
    std::vector<Mono> out;
    while (!queue.empty()) {
        Mono m = queue.back();
        queue.pop_back();
        bud.charge();
        if (!standard(m)) continue;
        out.push_back(m);
        for (size_t v = 0; v < n; ++v) {
            Mono next = m;
            next[v] += 1;
            if (seen.insert(next).second) queue.push_back(std::move(next));
        }
    }
    std::sort(out.begin(), out.end(), [](const Mono& a, const Mono& b) {
        return grlex_cmp(a, b) < 0;
    });
    return {out, out.size()};
}

QuotientBasis quotient_basis(const IdealBasis& ideal, const MonomialOrder& order, Budget* budget) {
    return quotient_basis(buchberger(ideal, order, budget), budget);
}

IdealBasis saturate(const IdealBasis& ideal, const Poly& s, Budget* budget) {
    require_same_context(ideal.ctx, s.ctx());
    if (s.is_zero()) throw precondition_error("saturation by the zero polynomial");
    const Context& ctx = ideal.ctx;
    std::string wname = "w_sat";
    while (ctx->has(wname)) wname += "_";
    std::vector<std::string> names = ctx->names();
    names.push_back(wname);
    Context ext = make_context(std::move(names));

    std::vector<Poly> gens;
    for (const auto& g : ideal.generators) gens.push_back(g.transport(ext));
    Poly w = Poly::variable(ext, wname);
    gens.push_back(Poly::constant(ext, 1) - w * s.transport(ext));

    MonomialOrder ord = MonomialOrder::elim(ext, {wname});
    GroebnerBasis gb = buchberger(IdealBasis::of(ext, std::move(gens)), ord, budget);

    VarId wid = ext->var(wname);
    std::vector<Poly> kept;
    for (const auto& g : gb.elements())
        if (!g.depends_on(wid)) kept.push_back(g.transport(ctx));
    if (kept.empty())
        throw shape_error("saturation produced no eliminant; input ideal was trivial");
    return IdealBasis::of(ctx, std::move(kept));
}

unsigned jacobian_rank_at(const std::vector<Poly>& gens, const std::map<VarId, Rat>& point) {
    if (gens.empty()) return 0;
    const Context& ctx = gens[0].ctx();
    std::vector<Rat> pt(ctx->size(), Rat(0));
    for (const auto& [v, val] : point) {
        if (v >= ctx->size()) throw context_error("point coordinate out of context");
        pt[v] = val;
    }
    for (const auto& g : gens) {
        require_same_context(ctx, g.ctx());
        if (g.eval(pt) != 0)
            throw precondition_error("jacobian_rank_at: point is not on the zero set");
    }
    std::vector<std::vector<Rat>> jac;
    for (const auto& g : gens) {
        std::vector<Rat> row;
        for (VarId v = 0; v < ctx->size(); ++v) row.push_back(g.derivative(v).eval(pt));
        jac.push_back(std::move(row));
    }
    return rat_rank(std::move(jac));
}

bool same_ideal(const IdealBasis& a, const IdealBasis& b, Budget* budget) {
    require_same_context(a.ctx, b.ctx);
    MonomialOrder ord = MonomialOrder::grevlex(a.ctx);
    GroebnerBasis ga = buchberger(a, ord, budget);
    GroebnerBasis gb = buchberger(b, ord, budget);
    return ga.elements() == gb.elements();
}

} // namespace hilb
