#include "hilb/punctual.hpp"

#include <algorithm>

namespace hilb {
namespace punctual {

NodeRing NodeRing::make() {
    NodeRing r;
    r.ctx = make_context({"x", "y"});
    r.relation = Poly::variable(r.ctx, "x") * Poly::variable(r.ctx, "y");
    return r;
}

unsigned long colength(const NodeRing& ring, const IdealBasis& gens) {
    std::vector<Poly> all;
    for (const auto& g : gens.generators) all.push_back(g.transport(ring.ctx));
    all.push_back(ring.relation);
    QuotientBasis qb =
        quotient_basis(IdealBasis::of(ring.ctx, std::move(all)), MonomialOrder::grlex(ring.ctx));
    if (!qb.colength) throw model_error("punctual ideal has infinite colength");
    return *qb.colength;
}

unsigned long colength(const NodeRing& ring, const PunctualIdeal& ideal) {
    return colength(ring, ideal.generators);
}

PunctualIdeal boundary_ideal(const NodeRing& ring, unsigned m, unsigned i) {
    if (m < 1 || i < 1 || i > m) throw range_error("boundary_ideal: need 1 <= i <= m");
    Poly xs = Poly::variable(ring.ctx, "x", m + 1 - i);
    Poly ys = Poly::variable(ring.ctx, "y", i);
    return {IdealKind::boundary, m, i, Rat(0), IdealBasis::of(ring.ctx, {xs, ys})};
}

PunctualIdeal chain_ideal(const NodeRing& ring, unsigned m, unsigned i, const Rat& a) {
    if (m < 2 || i < 1 || i > m - 1) throw range_error("chain_ideal: need 1 <= i <= m-1");
    if (a == 0) throw range_error("chain_ideal: a = 0 is the boundary ideal, not a chart point");
    Poly gen = Poly::variable(ring.ctx, "x", m - i) * a + Poly::variable(ring.ctx, "y", i);
    return {IdealKind::chain_point, m, i, a, IdealBasis::of(ring.ctx, {gen})};
}

PunctualIdeal flat_limit(const NodeRing& ring, unsigned m, unsigned i, LimitDirection dir) {
    if (m < 2 || i < 1 || i > m - 1) throw range_error("flat_limit: need 1 <= i <= m-1");
    Context ctx = make_context({"s", "x", "y"});
    Poly x = Poly::variable(ctx, "x");
    Poly y = Poly::variable(ctx, "y");
    Poly s = Poly::variable(ctx, "s");
    // s is the chart parameter: a itself toward 0, b = 1/a toward infinity
    Poly gen = dir == LimitDirection::to_zero
                   ? s * x.pow(m - i) + y.pow(i)
                   : x.pow(m - i) + s * y.pow(i);
    IdealBasis family = IdealBasis::of(ctx, {gen, x * y});
    IdealBasis sat = saturate(family, s);
    std::vector<Poly> specialized;
    for (const auto& g : sat.generators) {
        Poly g0 = g.specialize({{ctx->var("s"), Rat(0)}});
        if (!g0.is_zero()) specialized.push_back(g0.transport(ring.ctx));
    }
    specialized.push_back(ring.relation);
    IdealBasis limit = IdealBasis::of(ring.ctx, std::move(specialized));

    unsigned expect_i = dir == LimitDirection::to_zero ? i : i + 1;
    PunctualIdeal expected = boundary_ideal(ring, m, expect_i);
    std::vector<Poly> expected_gens = expected.generators.generators;
    expected_gens.push_back(ring.relation);
    if (!same_ideal(limit, IdealBasis::of(ring.ctx, std::move(expected_gens))))
        throw model_error("flat limit does not match the boundary ideal");
    if (colength(ring, expected) != m)
        throw model_error("flat limit changed the colength");
    return expected;
}

ChainDescriptor punctual_chain(const NodeRing& ring, unsigned m,
                               const std::vector<Rat>& sample_params) {
    if (m < 1) throw range_error("punctual_chain: m >= 1");
    ChainDescriptor chain;
    chain.m = m;
    chain.point = boundary_ideal(ring, m, 1);
    if (m == 1) {
        if (colength(ring, chain.point) != 1) throw model_error("point ideal has wrong colength");
        return chain;
    }
    for (unsigned i = 1; i <= m - 1; ++i) {
        if (colength(ring, boundary_ideal(ring, m, i)) != m)
            throw model_error("boundary ideal colength != m");
        for (const Rat& a : sample_params)
            if (colength(ring, chain_ideal(ring, m, i, a)) != m)
                throw model_error("chain ideal colength != m");
        ChainComponent comp;
        comp.i = i;
        comp.left = flat_limit(ring, m, i, LimitDirection::to_zero);
        comp.right = flat_limit(ring, m, i, LimitDirection::to_infinity);
        chain.components.push_back(std::move(comp));
    }
    if (colength(ring, boundary_ideal(ring, m, m)) != m)
        throw model_error("boundary ideal colength != m");
    return chain;
}

namespace {

std::string a_name(unsigned k) { return "a_" + std::to_string(k); }
std::string d_name(unsigned k) { return "d_" + std::to_string(k); }

// Context and generator layout of the deformation at q^m_i.
struct Layout {
    unsigned m, i;
    Context ctx;
    std::vector<std::string> params; // a's, d's, u, v as applicable
};

Layout make_layout(unsigned m, unsigned i) {
    Layout L;
    L.m = m;
    L.i = i;
    std::vector<std::string> names{"x", "y", "t"};
    for (unsigned k = i - 1; k <= m - 1; ++k) L.params.push_back(a_name(k));
    if (i == m) {
        L.params.push_back(d_name(0));
        for (unsigned k = 1; k <= m - 1; ++k) L.params.push_back(d_name(k));
    } else {
        for (unsigned k = m - i + 1; k <= m - 1; ++k) L.params.push_back(d_name(k));
    }
    if (i < m) L.params.push_back("u");
    if (i > 1) L.params.push_back("v");
    // keep params sorted deterministically as declared above
    names.insert(names.end(), L.params.begin(), L.params.end());
    L.ctx = make_context(std::move(names));
    return L;
}

} // namespace

DeformationPair universal_deformation(unsigned m, unsigned i) {
    if (m < 1 || i < 1 || i > m) throw range_error("universal_deformation: need 1 <= i <= m");
    Layout L = make_layout(m, i);
    const Context& ctx = L.ctx;
    Poly x = Poly::variable(ctx, "x");
    Poly y = Poly::variable(ctx, "y");
    auto A = [&](unsigned k) { return Poly::variable(ctx, a_name(k)); };
    auto D = [&](unsigned k) { return Poly::variable(ctx, d_name(k)); };

    Poly f = Poly::zero(ctx), g = Poly::zero(ctx);
    if (i == 1) {
        f = x.pow(m);
        for (unsigned k = 0; k <= m - 1; ++k) f = f + A(k) * x.pow(k);
    } else {
        f = x.pow(m + 1 - i);
        for (unsigned k = i - 1; k <= m - 1; ++k) f = f + A(k) * x.pow(k - i + 1);
        Poly ypart = y.pow(i - 1);
        for (unsigned k = m - i + 2; k <= m - 1; ++k) ypart = ypart + D(k) * y.pow(k - m + i - 1);
        f = f + Poly::variable(ctx, "v") * ypart;
    }
    if (i == m) {
        g = y.pow(m);
        for (unsigned k = 0; k <= m - 1; ++k) g = g + D(k) * y.pow(k);
    } else {
        g = y.pow(i);
        for (unsigned k = m - i + 1; k <= m - 1; ++k) g = g + D(k) * y.pow(k - m + i);
        Poly xpart = x.pow(m - i);
        for (unsigned k = i; k <= m - 1; ++k) xpart = xpart + A(k) * x.pow(k - i);
        g = g + Poly::variable(ctx, "u") * xpart;
    }
    Poly v_mult = i == 1 ? A(0) : Poly::variable(ctx, "v");
    Poly u_mult = i == m ? D(0) : Poly::variable(ctx, "u");

    VarId xv = ctx->var("x"), yv = ctx->var("y"), tv = ctx->var("t");
    auto nf_xy = [&](const Poly& p) { return rewrite_pairs_to(p, {{xv, yv}}, tv); };
    Poly r1 = nf_xy(y * f - v_mult * g);
    Poly r2 = nf_xy(x * g - u_mult * f);

    // each residual splits into one equation per pure x- or y-monomial
    std::vector<Poly> equations;
    auto extract = [&](const Poly& r) {
        std::map<std::pair<unsigned, unsigned>, std::vector<Term>> buckets;
        for (const auto& t : r.terms()) {
            Mono key = t.mono;
            unsigned ex = key[xv], ey = key[yv];
            key[xv] = key[yv] = 0;
            buckets[{ex, ey}].push_back({std::move(key), t.coeff});
        }
        for (auto& [k, ts] : buckets) {
            (void)k;
            Poly c = Poly::from_terms(ctx, std::move(ts));
            if (!c.is_zero()) equations.push_back(std::move(c));
        }
    };
    extract(r1);
    extract(r2);

    // iteratively solve equations that are linear in a single a- or d-parameter
    std::vector<std::pair<std::string, Poly>> dets;
    auto try_solve = [&](const Poly& eq, std::string& pname, Poly& expr) -> bool {
        for (const auto& name : L.params) {
            if (name == "u" || name == "v") continue;
            VarId v = ctx->var(name);
            if (eq.degree_in(v) != 1) continue;
            // eq = alpha * v + rest with rational alpha
            Rat alpha(0);
            std::vector<Term> rest;
            bool linear = true;
            for (const auto& t : eq.terms()) {
                if (t.mono[v] == 1) {
                    Mono mm = t.mono;
                    mm[v] = 0;
                    if (!mono_is_one(mm)) {
                        linear = false;
                        break;
                    }
                    alpha = t.coeff;
                } else {
                    rest.push_back(t);
                }
            }
            if (!linear || alpha == 0) continue;
            pname = name;
            expr = Poly::from_terms(ctx, std::move(rest)) * (Rat(-1) / alpha);
            return true;
        }
        return false;
    };
    bool progress = true;
    while (progress) {
        progress = false;
        for (size_t k = 0; k < equations.size(); ++k) {
            std::string pname;
            Poly expr;
            if (!try_solve(equations[k], pname, expr)) continue;
            VarId pv = ctx->var(pname);
            for (auto& eq : equations) eq = substitute_var(eq, pv, expr);
            for (auto& [n, e] : dets) e = substitute_var(e, pv, expr);
            dets.emplace_back(pname, expr);
            progress = true;
            break;
        }
    }

    // normalize the surviving constraints and drop duplicates / zeroes
    std::vector<Poly> constraints;
    MonomialOrder ord = MonomialOrder::grlex(ctx);
    for (auto& eq : equations) {
        if (eq.is_zero()) continue;
        Poly n = eq * (Rat(1) / eq.leading_term(ord).coeff);
        if (std::find(constraints.begin(), constraints.end(), n) == constraints.end())
            constraints.push_back(n);
    }
    // they must generate the same ideal as { u_mult * v_mult - t }
    Poly uv_rel = u_mult * v_mult - Poly::variable(ctx, "t");
    if (constraints.empty() ||
        !same_ideal(IdealBasis::of(ctx, constraints), IdealBasis::of(ctx, {uv_rel})))
        throw model_error("deformation constraints are not generated by uv - t");
    // keep the canonical reduced form of the residual constraint ideal
    constraints =
        buchberger(IdealBasis::of(ctx, constraints), MonomialOrder::grevlex_low(ctx, {"t"}))
            .elements();

    DeformationPair out;
    out.m = m;
    out.i = i;
    out.ctx = ctx;
    out.f = f;
    out.g = g;
    out.v_mult = v_mult;
    out.u_mult = u_mult;
    out.determinations = dets;
    out.constraints = constraints;
    for (const auto& name : L.params) {
        bool determined = false;
        for (const auto& [n, e] : dets) determined |= (n == name);
        if (!determined) out.free_params.push_back(name);
    }
    if (out.free_params.size() != m + 1)
        throw model_error("free parameter count is not m + 1");
    return out;
}

bool deformation_residuals_vanish(const DeformationPair& d) {
    const Context& ctx = d.ctx;
    Poly x = Poly::variable(ctx, "x"), y = Poly::variable(ctx, "y");
    Poly r1 = y * d.f - d.v_mult * d.g;
    Poly r2 = x * d.g - d.u_mult * d.f;
    for (const auto& [name, expr] : d.determinations) {
        VarId v = ctx->var(name);
        r1 = substitute_var(r1, v, expr);
        r2 = substitute_var(r2, v, expr);
    }
    Poly xy_rel = x * y - Poly::variable(ctx, "t");
    Poly uv_rel = d.u_mult * d.v_mult - Poly::variable(ctx, "t");
    GroebnerBasis gb = buchberger(IdealBasis::of(ctx, {xy_rel, uv_rel}),
                                  MonomialOrder::grevlex_low(ctx, {"t"}));
    return normal_form(r1, gb).is_zero() && normal_form(r2, gb).is_zero();
}

unsigned long deformation_colength_at(const DeformationPair& d, SeededRng& rng,
                                      bool force_t_zero) {
    const Context& ctx = d.ctx;
    std::map<VarId, Rat> vals;
    for (const auto& name : d.free_params) vals[ctx->var(name)] = rng.nonzero_rational();
    if (force_t_zero) {
        // both multipliers are single variables; zero one of them
        const Poly& kill = rng.coin() ? d.u_mult : d.v_mult;
        const Mono& mono = kill.terms().at(0).mono;
        for (size_t v = 0; v < mono.size(); ++v)
            if (mono[v] > 0) vals[static_cast<VarId>(v)] = Rat(0);
    }
    // resolve determined parameters from the free ones
    for (auto it = d.determinations.rbegin(); it != d.determinations.rend(); ++it) {
        Poly e = it->second.specialize(vals);
        if (!e.is_constant()) throw model_error("unresolved determination");
        vals[ctx->var(it->first)] = e.constant_coeff();
    }
    Rat tval = d.u_mult.specialize(vals).constant_coeff() *
               d.v_mult.specialize(vals).constant_coeff();
    vals[ctx->var("t")] = tval;

    Poly f0 = d.f.specialize(vals);
    Poly g0 = d.g.specialize(vals);
    NodeRing ring = NodeRing::make();
    Poly fr = f0.transport(ring.ctx);
    Poly gr = g0.transport(ring.ctx);
    Poly rel = ring.relation - Poly::constant(ring.ctx, tval);
    QuotientBasis qb = quotient_basis(IdealBasis::of(ring.ctx, {fr, gr, rel}),
                                      MonomialOrder::grlex(ring.ctx));
    if (!qb.colength) throw model_error("specialized deformation has infinite colength");
    return *qb.colength;
}

} // namespace punctual
} // namespace hilb
