#include "hilb/charts.hpp"

#include "hilb/format.hpp"
#include "hilb/matrix.hpp"

#include <algorithm>

namespace hilb {
namespace charts {

Poly ChartModel::z_poly(unsigned i) const {
    return Poly::monomial(ctx, z_monomials.at(i - 1), Rat(1));
}

ChartModel build_chart_model(unsigned m) {
    if (m < 1) throw range_error("build_chart_model: m >= 1");
    ChartModel model;
    model.m = m;
    std::vector<std::string> names;
    for (unsigned k = 1; k + 1 <= m; ++k) names.push_back("u_" + std::to_string(k));
    for (unsigned k = 1; k + 1 <= m; ++k) names.push_back("v_" + std::to_string(k));
    for (unsigned k = 0; k <= m - 1; ++k) names.push_back("a_" + std::to_string(k));
    for (unsigned k = 0; k <= m - 1; ++k) names.push_back("d_" + std::to_string(k));
    names.push_back("t");
    names.push_back("x");
    names.push_back("y");
    model.ctx = make_context(std::move(names));
    const Context& ctx = model.ctx;
    Poly t = Poly::variable(ctx, "t");
    Poly x = Poly::variable(ctx, "x");
    Poly y = Poly::variable(ctx, "y");
    auto U = [&](unsigned k) { return Poly::variable(ctx, model.u_name(k)); };
    auto V = [&](unsigned k) { return Poly::variable(ctx, model.v_name(k)); };
    auto A = [&](unsigned k) { return Poly::variable(ctx, model.a_name(k)); };
    auto D = [&](unsigned k) { return Poly::variable(ctx, model.d_name(k)); };

    for (unsigned k = 1; k + 2 <= m; ++k)
        model.ctilde.push_back(V(k) * U(k + 1) - t * U(k) * V(k + 1));

    if (m == 1) {
        // the chain has no rational-curve factors; the model is the surface
        // itself and the two boundary equations collapse to a_0 d_0 = t
        model.htilde.push_back(A(0) * D(0) - t);
    } else {
        model.htilde.push_back(A(0) * U(1) - t * V(1));
        for (unsigned j = 1; j <= m - 1; ++j)
            model.htilde.push_back(A(j) * U(j) - D(m - j) * V(j));
        model.htilde.push_back(D(0) * V(m - 1) - t * U(m - 1));
    }

    for (unsigned i = 1; i <= m; ++i) {
        Mono z(ctx->size(), 0);
        for (unsigned k = 1; k < i; ++k) z[ctx->var(model.u_name(k))] = 1;
        for (unsigned k = i; k + 1 <= m; ++k) z[ctx->var(model.v_name(k))] = 1;
        model.z_monomials.push_back(std::move(z));
    }

    Poly f0 = x.pow(m);
    for (unsigned k = 0; k <= m - 1; ++k) f0 = f0 + A(k) * x.pow(k);
    model.f_generators.push_back(f0);
    for (unsigned i = 1; i + 1 <= m; ++i) {
        Poly xpart = x.pow(m - i);
        for (unsigned k = i; k <= m - 1; ++k) xpart = xpart + A(k) * x.pow(k - i);
        Poly ypart = y.pow(i);
        for (unsigned k = m - i + 1; k <= m - 1; ++k) ypart = ypart + D(k) * y.pow(k - (m - i));
        model.f_generators.push_back(U(i) * xpart + V(i) * ypart);
    }
    if (m >= 1) {
        Poly fm = y.pow(m);
        for (unsigned k = 0; k <= m - 1; ++k) fm = fm + D(k) * y.pow(k);
        model.f_generators.push_back(fm);
    }
    return model;
}

Poly chart_normalize(const ChartModel& model, unsigned i, const Poly& p) {
    if (i < 1 || i > model.m) throw range_error("chart index out of range");
    std::map<VarId, Rat> one;
    for (unsigned k = 1; k < i; ++k) one[model.ctx->var(model.u_name(k))] = Rat(1);
    for (unsigned k = i; k + 1 <= model.m; ++k) one[model.ctx->var(model.v_name(k))] = Rat(1);
    return p.specialize(one);
}

ZRelationReport verify_z_relations(const ChartModel& model, Budget* budget) {
    if (model.m < 3) throw range_error("verify_z_relations: m >= 3");
    const Context& ctx = model.ctx;
    GroebnerBasis gb = buchberger(IdealBasis::of(ctx, model.ctilde),
                                  MonomialOrder::grevlex_low(ctx, {"t"}), budget);
    Poly t = Poly::variable(ctx, "t");
    ZRelationReport report;
    report.m = model.m;
    for (unsigned i = 1; i <= model.m; ++i) {
        for (unsigned j = i + 2; j <= model.m; ++j) {
            Poly lhs = model.z_poly(i) * model.z_poly(j);
            Poly rhs = model.z_poly(i + 1) * model.z_poly(j - 1);
            unsigned found = 0;
            for (unsigned e = 1; e <= model.m; ++e) {
                if (normal_form(lhs - t.pow(e) * rhs, gb, budget).is_zero()) {
                    found = e;
                    break;
                }
            }
            if (found == 0)
                throw model_error("Z relation failed for (i,j) = (" + std::to_string(i) + "," +
                                  std::to_string(j) + ")");
            if (j == i + 2 && found != 1)
                throw model_error("adjacent Z relation exponent is not 1");
            if (found != j - i - 1)
                throw model_error("Z relation exponent differs from j - i - 1");
            report.entries.push_back({i, j, found});
        }
    }
    return report;
}

namespace {

std::vector<Poly> normalized_relations(const ChartModel& model, unsigned i) {
    std::vector<Poly> rels;
    for (const auto& r : model.ctilde) {
        Poly n = chart_normalize(model, i, r);
        if (!n.is_zero()) rels.push_back(n);
    }
    for (const auto& r : model.htilde) {
        Poly n = chart_normalize(model, i, r);
        if (!n.is_zero()) rels.push_back(n);
    }
    return rels;
}

} // namespace

ReductionReport verify_chart_reduction(const ChartModel& model, unsigned i, Budget* budget) {
    if (i < 1 || i > model.m) throw range_error("chart index out of range");
    const Context& ctx = model.ctx;
    const unsigned m = model.m;
    Poly xy_rel = Poly::variable(ctx, "x") * Poly::variable(ctx, "y") - Poly::variable(ctx, "t");
    std::vector<Poly> rels = normalized_relations(model, i);
    rels.push_back(xy_rel);
    GroebnerBasis gb = buchberger(IdealBasis::of(ctx, rels),
                                  MonomialOrder::grevlex_low(ctx, {"t"}), budget);

    ReductionReport report;
    report.m = m;
    report.i = i;
    report.all_generated = true;

    auto F = [&](unsigned j) { return chart_normalize(model, i, model.f_generators.at(j)); };
    Poly fleft = F(i - 1);
    Poly fright = F(i);

    for (unsigned j = 0; j <= m; ++j) {
        if (j == i - 1 || j == i) continue;
        // candidate factors: the expected pure power first, then a wider sweep
        std::vector<std::pair<unsigned, Poly>> candidates; // (target index, mu)
        auto add = [&](unsigned target, const Poly& mu) { candidates.emplace_back(target, mu); };
        Poly x = Poly::variable(ctx, "x"), y = Poly::variable(ctx, "y");
        if (j + 1 < i) add(i - 1, x.pow(i - j - 1));
        if (j > i) add(i, y.pow(j - i));
        for (unsigned e = 0; e <= m; ++e) {
            add(i - 1, x.pow(e));
            add(i, y.pow(e));
            add(i, x.pow(e));
            add(i - 1, y.pow(e));
        }
        bool done = false;
        for (const auto& [target, mu] : candidates) {
            const Poly& base = target == i - 1 ? fleft : fright;
            if (normal_form(F(j) - mu * base, gb, budget).is_zero()) {
                report.entries.push_back({j, target, to_string(mu)});
                done = true;
                break;
            }
        }
        if (!done) {
            // fall back to plain ideal membership in (F_{i-1}, F_i) + relations
            std::vector<Poly> wide = rels;
            wide.push_back(fleft);
            wide.push_back(fright);
            GroebnerBasis gbw = buchberger(IdealBasis::of(ctx, wide),
                                           MonomialOrder::grevlex_low(ctx, {"t"}), budget);
            if (normal_form(F(j), gbw, budget).is_zero()) {
                report.entries.push_back({j, i, "(membership)"});
            } else {
                throw model_error("F_" + std::to_string(j) +
                                  " is not generated by the chart pair on U_" + std::to_string(i));
            }
        }
    }
    return report;
}

ChartPoint sample_chart_point(const ChartModel& model, unsigned i, SeededRng& rng,
                              bool force_t_zero) {
    const unsigned m = model.m;
    if (i < 1 || i > m) throw range_error("chart index out of range");
    const Context& ctx = model.ctx;
    ChartPoint pt;
    pt.i = i;
    auto set = [&](const std::string& n, const Rat& val) { pt.values[ctx->var(n)] = val; };

    // free coordinates of U_i
    Rat uval = rng.nonzero_rational(); // u_i, or d_0 when i = m
    Rat vval = rng.nonzero_rational(); // v_{i-1}, or a_0 when i = 1
    if (force_t_zero) {
        if (rng.coin())
            uval = 0;
        else
            vval = 0;
    }
    Rat tval = uval * vval;

    std::vector<Rat> a(m, Rat(0)), d(m, Rat(0));
    std::map<unsigned, Rat> uvals, vvals; // chain coordinates (normalized ones included)
    for (unsigned k = 1; k < i; ++k) uvals[k] = Rat(1);
    for (unsigned k = i; k + 1 <= m; ++k) vvals[k] = Rat(1);

    for (unsigned k = i; k <= m - 1 && i < m; ++k) a[k] = rng.rational();
    for (unsigned k = m - i + 1; k <= m - 1 && k >= 1; ++k) d[k] = rng.rational();

    auto tpow = [&](unsigned e) {
        Rat r(1);
        for (unsigned q = 0; q < e; ++q) r *= tval;
        return r;
    };

    if (i == 1) {
        a[0] = vval; // a_0 carries the v role
        if (m > 1) uvals[1] = uval;
    } else {
        vvals[i - 1] = vval;
        a[0] = tpow(i - 1) * vval;
    }
    if (i == m) {
        d[0] = uval; // d_0 carries the u role
        if (m > 1) vvals[m - 1] = vval;
    } else {
        uvals[i] = uval;
        d[0] = tpow(m - i) * uval;
    }
    // remaining chain coordinates
    for (unsigned k = 1; k + 1 < i; ++k) vvals[k] = tpow(i - 1 - k) * vval;
    for (unsigned k = i + 1; k + 1 <= m; ++k) uvals[k] = tpow(k - i) * uval;
    // determined symmetric-function coordinates
    for (unsigned j = 1; j < i; ++j) a[j] = d[m - j] * tpow(i - 1 - j) * vval;
    for (unsigned k = 1; k <= m - i; ++k)
        if (k >= 1 && m - k >= i) d[k] = a[m - k] * tpow(m - k - i) * uval;

    for (unsigned k = 1; k + 1 <= m; ++k) {
        set(model.u_name(k), uvals.at(k));
        set(model.v_name(k), vvals.at(k));
    }
    for (unsigned k = 0; k <= m - 1; ++k) {
        set(model.a_name(k), a[k]);
        set(model.d_name(k), d[k]);
    }
    set("t", tval);
    set("x", Rat(0));
    set("y", Rat(0));

    // a sampled point must satisfy every model relation exactly
    std::vector<Rat> full(ctx->size(), Rat(0));
    for (const auto& [v, val] : pt.values) full[v] = val;
    for (const auto& rel : model.ctilde)
        if (rel.eval(full) != 0) throw model_error("sampled chart point violates a chain relation");
    for (const auto& rel : model.htilde)
        if (rel.eval(full) != 0) throw model_error("sampled chart point violates a model relation");
    return pt;
}

FlatnessReport verify_flatness_chart(const ChartModel& model, unsigned i, unsigned spec_count,
                                     uint64_t seed) {
    const unsigned m = model.m;
    if (i < 1 || i > m) throw range_error("chart index out of range");
    SeededRng rng(seed);
    FlatnessReport report;
    report.m = m;
    report.i = i;
    Context ring = make_context({"x", "y"});
    Poly xr = Poly::variable(ring, "x");
    Poly yr = Poly::variable(ring, "y");

    for (unsigned s = 0; s < spec_count; ++s) {
        bool force_zero = s % 3 == 0;
        ChartPoint pt = sample_chart_point(model, i, rng, force_zero);
        Rat tval = pt.values.at(model.ctx->var("t"));
        if (force_zero && tval != 0) throw model_error("forced t = 0 sample has t != 0");
        if (tval == 0) ++report.t_zero_points;

        std::map<VarId, Rat> vals = pt.values;
        vals.erase(model.ctx->var("x"));
        vals.erase(model.ctx->var("y"));
        Poly f0 = model.f_generators.at(i - 1).specialize(vals).transport(ring);
        Poly g0 = model.f_generators.at(i).specialize(vals).transport(ring);
        Poly rel = xr * yr - Poly::constant(ring, tval);
        GroebnerBasis gb = buchberger(IdealBasis::of(ring, {f0, g0, rel}),
                                      MonomialOrder::grlex(ring));
        QuotientBasis qb = quotient_basis(gb);
        if (!qb.colength || *qb.colength != m)
            throw model_error("flatness failed: colength != m on U_" + std::to_string(i));

        // the printed monomials 1, x, .., x^{m-i}, y, .., y^{i-1} must be a
        // basis: their normal forms span the staircase
        std::vector<Poly> printed{Poly::constant(ring, 1)};
        for (unsigned e = 1; e <= m - i; ++e) printed.push_back(xr.pow(e));
        for (unsigned e = 1; e + 1 <= i; ++e) printed.push_back(yr.pow(e));
        if (printed.size() != m) throw model_error("printed basis has wrong size");
        std::vector<std::vector<Rat>> coords;
        for (const auto& p : printed) {
            Poly nf = normal_form(p, gb);
            std::vector<Rat> row;
            for (const auto& sm : qb.standard_monomials) row.push_back(nf.coeff(sm));
            coords.push_back(std::move(row));
        }
        if (rat_rank(coords) != m)
            throw model_error("printed monomials are not a basis on U_" + std::to_string(i));
        ++report.points_checked;
    }
    report.ok = true;
    return report;
}

FiberClass classify_fiber(const ChartModel& model, const std::vector<Rat>& a,
                          const std::vector<Rat>& d, const Rat& t) {
    const unsigned m = model.m;
    if (a.size() != m || d.size() != m) throw range_error("classify_fiber: need m a's and m d's");
    if (m == 1) {
        if (a[0] * d[0] != t) throw model_error("values violate a_0 d_0 = t");
        return {true, 0};
    }
    const unsigned n = m - 1; // chain factors
    // pin state per factor: (u : v) as exact pair, or unknown
    struct Pin {
        bool set = false;
        Rat u, v;
    };
    std::vector<Pin> pin(n + 1);
    auto merge = [&](unsigned k, const Rat& p, const Rat& q) {
        // constraint p*u_k = q*v_k; a nonzero pair pins (u_k : v_k) = (q : p)
        if (p == 0 && q == 0) return;
        if (!pin[k].set) {
            pin[k] = {true, q, p};
            return;
        }
        if (pin[k].u * p != pin[k].v * q)
            throw model_error("inconsistent pin on chain factor " + std::to_string(k));
    };
    for (unsigned j = 1; j <= n; ++j) merge(j, a[j], d[m - j]);
    merge(1, a[0], t);
    merge(n, t, d[0]);

    // propagate the chain relations v_k u_{k+1} = t u_k v_{k+1}; merging never
    // alters an existing pin (it either agrees or throws), so this terminates
    bool changed = true;
    while (changed) {
        changed = false;
        for (unsigned k = 1; k + 1 <= n; ++k) {
            if (pin[k].set && !pin[k + 1].set) {
                merge(k + 1, pin[k].v, t * pin[k].u);
                changed |= pin[k + 1].set;
            }
            if (pin[k + 1].set && !pin[k].set) {
                merge(k, t * pin[k + 1].v, pin[k + 1].u);
                changed |= pin[k].set;
            }
        }
    }

    // verify relations between adjacent pinned factors
    for (unsigned k = 1; k + 1 <= n; ++k)
        if (pin[k].set && pin[k + 1].set &&
            pin[k].v * pin[k + 1].u != t * pin[k].u * pin[k + 1].v)
            throw model_error("pinned configuration violates a chain relation");

    std::vector<unsigned> free;
    for (unsigned k = 1; k <= n; ++k)
        if (!pin[k].set) free.push_back(k);
    if (free.empty()) return {true, 0};

    if (t != 0) throw model_error("free chain factor with t != 0");
    // closed-form criterion: factor k is free iff a_0..a_k = 0 and
    // d_0..d_{m-k} = 0; the set is an interval
    auto zero_prefix = [&](const std::vector<Rat>& w) {
        unsigned p = 0;
        while (p < w.size() && w[p] == 0) ++p;
        return p; // w[0..p-1] all zero
    };
    unsigned alpha = zero_prefix(a), delta = zero_prefix(d);
    std::vector<unsigned> expected;
    for (unsigned k = 1; k <= n; ++k)
        if (k + 1 <= alpha && m - k + 1 <= delta) expected.push_back(k);
    if (expected != free)
        throw model_error("free factors disagree with the vanishing-pattern criterion");
    for (size_t q = 1; q < free.size(); ++q)
        if (free[q] != free[q - 1] + 1) throw model_error("free factors are not consecutive");
    unsigned r = static_cast<unsigned>(free.size());
    if (r > m - 1) throw model_error("fiber chain longer than m - 1");
    return {false, r};
}

SmoothnessReport smoothness_check(const ChartModel& model, unsigned seeded_per_chart,
                                  uint64_t seed) {
    const unsigned m = model.m;
    const Context& ctx = model.ctx;
    SmoothnessReport report;
    report.m = m;
    report.expected_rank = 2 * m - 1;
    for (unsigned i = 1; i <= m; ++i) {
        std::vector<Poly> rels = normalized_relations(model, i);
        if (rels.size() != 2u * m - 1)
            throw model_error("normalized relation count is not 2m - 1");
        // boundary point: the chart origin (all free coordinates zero)
        std::map<VarId, Rat> origin;
        for (VarId v = 0; v < ctx->size(); ++v) origin[v] = Rat(0);
        for (unsigned k = 1; k < i; ++k) origin[ctx->var(model.u_name(k))] = Rat(1);
        for (unsigned k = i; k + 1 <= m; ++k) origin[ctx->var(model.v_name(k))] = Rat(1);
        if (jacobian_rank_at(rels, origin) != report.expected_rank)
            throw model_error("rank deficit at the boundary point of U_" + std::to_string(i));
        ++report.points_checked;
        SeededRng rng(seed + i);
        for (unsigned s = 0; s < seeded_per_chart; ++s) {
            ChartPoint pt = sample_chart_point(model, i, rng, s % 4 == 0);
            if (jacobian_rank_at(rels, pt.values) != report.expected_rank)
                throw model_error("rank deficit at a seeded point of U_" + std::to_string(i));
            ++report.points_checked;
        }
    }
    report.ok = true;
    return report;
}

std::vector<ZRestrictionRow> z_restriction_degrees(const ChartModel& model) {
    const unsigned m = model.m;
    if (m < 2) throw range_error("z_restriction_degrees: m >= 2");
    const Context& ctx = model.ctx;
    std::vector<ZRestrictionRow> rows;
    for (unsigned comp = 1; comp + 1 <= m; ++comp) {
        std::map<VarId, Rat> sub;
        for (unsigned k = 1; k + 1 <= m; ++k) {
            if (k < comp) {
                sub[ctx->var(model.u_name(k))] = Rat(1);
                sub[ctx->var(model.v_name(k))] = Rat(0);
            } else if (k > comp) {
                sub[ctx->var(model.u_name(k))] = Rat(0);
                sub[ctx->var(model.v_name(k))] = Rat(1);
            }
        }
        ZRestrictionRow row;
        row.component = comp;
        for (unsigned j = 1; j <= m; ++j) {
            Poly res = model.z_poly(j).specialize(sub);
            Poly expect = Poly::zero(ctx);
            if (j == comp)
                expect = Poly::variable(ctx, model.v_name(comp));
            else if (j == comp + 1)
                expect = Poly::variable(ctx, model.u_name(comp));
            if (res != expect)
                throw model_error("Z restriction pattern violated on curve " +
                                  std::to_string(comp));
            row.restricted.push_back(to_string(res));
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

} // namespace charts
} // namespace hilb
