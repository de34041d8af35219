#pragma once

#include "hilb/groebner.hpp"
#include "hilb/rng.hpp"

#include <string>
#include <utility>
#include <vector>

namespace hilb {

struct model_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

namespace punctual {

// Polynomial model of the local ring at a node: Q[x,y]/(xy), plus optional
// deformation parameters. Every colength-m ideal handled here contains
// (x,y)^m, so staircases and colengths agree with the power-series ring.
struct NodeRing {
    Context ctx;      // variables x, y
    Poly relation;    // xy

    static NodeRing make();
    VarId x() const { return ctx->var("x"); }
    VarId y() const { return ctx->var("y"); }
};

enum class IdealKind { boundary, chain_point };

struct PunctualIdeal {
    IdealKind kind;
    unsigned m = 0, i = 0;
    Rat a;                    // chain-point parameter, unused for boundary
    IdealBasis generators;    // over NodeRing.ctx, without the ring relation
};

// colength of (gens + xy) in Q[x,y]
unsigned long colength(const NodeRing& ring, const IdealBasis& gens);
unsigned long colength(const NodeRing& ring, const PunctualIdeal& ideal);

// q^m_i = (x^{m+1-i}, y^i), 1 <= i <= m
PunctualIdeal boundary_ideal(const NodeRing& ring, unsigned m, unsigned i);

// I^m_i(a) = (a x^{m-i} + y^i), 1 <= i <= m-1, a != 0
PunctualIdeal chain_ideal(const NodeRing& ring, unsigned m, unsigned i, const Rat& a);

enum class LimitDirection { to_zero, to_infinity };

// Flat limit of I^m_i(a) as a -> 0 or a -> infinity, computed by saturating
// in the parameter and specializing it away. a->0 gives q^m_i, a->infinity
// gives q^m_{i+1}; colength m is re-verified as the meaning of flatness.
PunctualIdeal flat_limit(const NodeRing& ring, unsigned m, unsigned i, LimitDirection dir);

struct ChainComponent {
    unsigned i;               // component C^m_i
    PunctualIdeal left;       // q^m_i     (a -> 0)
    PunctualIdeal right;      // q^m_{i+1} (a -> infinity)
};

struct ChainDescriptor {
    unsigned m;
    std::vector<ChainComponent> components; // m-1 entries; empty for m = 1
    PunctualIdeal point;                    // (x, y) when m = 1
};

// Chain of m-1 rational curves with verified colengths and flat limits.
ChainDescriptor punctual_chain(const NodeRing& ring, unsigned m,
                               const std::vector<Rat>& sample_params = {});

struct DeformationPair {
    unsigned m = 0, i = 0;
    Context ctx;                       // x, y, t, a_*, d_*, u, v as applicable
    Poly f, g;                         // the two generators with symbolic coefficients
    Poly v_mult, u_mult;               // multipliers: y*f = v_mult*g, x*g = u_mult*f
    std::vector<std::string> free_params;
    // determined parameter -> its expression in the free parameters
    std::vector<std::pair<std::string, Poly>> determinations;
    std::vector<Poly> constraints;     // residual constraint set, e.g. {u*v - t}
};

// Universal flat deformation of q^m_i: builds f, g per the generator
// convention of the global model, closes the relations y f = v g and
// x g = u f modulo xy - t, and solves for the determined coefficients.
// Free-parameter count is always m + 1.
DeformationPair universal_deformation(unsigned m, unsigned i);

// Fully symbolic residual check: both relations reduce to zero modulo
// {xy - t, uv - t} after substituting the determinations.
bool deformation_residuals_vanish(const DeformationPair& d);

// Specialize the deformation at a rational point of the constraint locus and
// return the colength of (f, g, xy - t); equals m when flatness holds.
unsigned long deformation_colength_at(const DeformationPair& d, SeededRng& rng,
                                      bool force_t_zero);

} // namespace punctual
} // namespace hilb
