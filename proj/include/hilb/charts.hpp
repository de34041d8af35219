#pragma once

#include "hilb/groebner.hpp"
#include "hilb/punctual.hpp"
#include "hilb/rng.hpp"

#include <string>
#include <vector>

namespace hilb {
namespace charts {

// Global model of the length-m relative Hilbert scheme near a node:
// chain coordinates (u_k : v_k), symmetric-function coordinates a_*, d_*,
// base coordinate t and fiber coordinates x, y.
struct ChartModel {
    unsigned m = 0;
    Context ctx;
    std::vector<Poly> ctilde;       // v_k u_{k+1} - t u_k v_{k+1}, k = 1..m-2
    std::vector<Poly> htilde;       // boundary + diagonal relations (m+1 for m >= 2)
    std::vector<Mono> z_monomials;  // Z_i = u_1..u_{i-1} v_i..v_{m-1}, i = 1..m
    std::vector<Poly> f_generators; // F_0..F_m

    std::string u_name(unsigned k) const { return "u_" + std::to_string(k); }
    std::string v_name(unsigned k) const { return "v_" + std::to_string(k); }
    std::string a_name(unsigned k) const { return "a_" + std::to_string(k); }
    std::string d_name(unsigned k) const { return "d_" + std::to_string(k); }
    Poly z_poly(unsigned i) const; // Z_i as a polynomial
};

ChartModel build_chart_model(unsigned m);

// On U_i set u_1..u_{i-1} = v_i..v_{m-1} = 1.
Poly chart_normalize(const ChartModel& model, unsigned i, const Poly& p);

struct ZRelationEntry {
    unsigned i, j;
    unsigned exponent; // least e >= 1 with Z_i Z_j = t^e Z_{i+1} Z_{j-1} mod ctilde
};
struct ZRelationReport {
    unsigned m;
    std::vector<ZRelationEntry> entries;
};
// Quadric relations among the Z monomials modulo the chain relations; the
// adjacent case j = i + 2 must have exponent 1, the general case j - i - 1.
ZRelationReport verify_z_relations(const ChartModel& model, Budget* budget = nullptr);

struct ReductionEntry {
    unsigned j;
    unsigned target;    // i-1 or i
    std::string factor; // monomial mu with F_j = mu * F_target modulo relations
};
struct ReductionReport {
    unsigned m = 0, i = 0;
    std::vector<ReductionEntry> entries;
    bool all_generated = false; // every F_j lies in (F_{i-1}, F_i) + relations
};
ReductionReport verify_chart_reduction(const ChartModel& model, unsigned i,
                                       Budget* budget = nullptr);

// Exact rational point of the model on U_i (normalized coordinates included
// with value 1); satisfies every relation by construction and is re-checked.
struct ChartPoint {
    unsigned i = 0;
    std::map<VarId, Rat> values;
};
ChartPoint sample_chart_point(const ChartModel& model, unsigned i, SeededRng& rng,
                              bool force_t_zero);

struct FlatnessReport {
    unsigned m = 0, i = 0;
    unsigned points_checked = 0;
    unsigned t_zero_points = 0;
    bool ok = false; // colength m and the printed monomials form a basis everywhere
};
// At seeded specializations of U_i (with forced t = 0 cases), the quotient by
// (F_{i-1}, F_i, xy - t) has colength m and 1, x, .., x^{m-i}, y, .., y^{i-1}
// is a basis of it.
FlatnessReport verify_flatness_chart(const ChartModel& model, unsigned i, unsigned spec_count,
                                     uint64_t seed);

struct FiberClass {
    bool is_point = true;
    unsigned r = 0; // number of rational curves when a chain
};
// Fiber of the model over given symmetric-function coordinates: a point or a
// chain of r <= m-1 rational curves, decided by exact pin propagation on the
// chain factors.
FiberClass classify_fiber(const ChartModel& model, const std::vector<Rat>& a,
                          const std::vector<Rat>& d, const Rat& t);

struct SmoothnessReport {
    unsigned m = 0;
    unsigned expected_rank = 0; // 2m - 1
    unsigned points_checked = 0;
    bool ok = false;
};
// Jacobian of the chart-normalized relations has rank 2m-1 at the m boundary
// points (chart origins) and at seeded points.
SmoothnessReport smoothness_check(const ChartModel& model, unsigned seeded_per_chart,
                                  uint64_t seed);

struct ZRestrictionRow {
    unsigned component;                  // curve index i of the special fibre
    std::vector<std::string> restricted; // Z_1..Z_m restricted to that curve
};
// Restriction pattern Z_i -> v_i, Z_{i+1} -> u_i, all other Z_j -> 0 on the
// i-th curve of the special fibre (each a degree-one coordinate).
std::vector<ZRestrictionRow> z_restriction_degrees(const ChartModel& model);

} // namespace charts
} // namespace hilb
