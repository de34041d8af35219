#pragma once

#include "hilb/poly.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

namespace hilb {

struct budget_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct precondition_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Step budget shared across one computation; a single-term rewrite costs one
// step. Gives deterministic, resource-capped failure instead of a hang.
struct Budget {
    uint64_t cap = 1'000'000;
    uint64_t used = 0;
    void charge(uint64_t n = 1) {
        used += n;
        if (used > cap) throw budget_error("step budget exceeded");
    }
};

struct IdealBasis {
    Context ctx;
    std::vector<Poly> generators; // nonzero

    static IdealBasis of(const Context& ctx, std::vector<Poly> gens);
};

class GroebnerBasis {
  public:
    GroebnerBasis(Context ctx, MonomialOrder order, std::vector<Poly> elements)
        : ctx_(std::move(ctx)), order_(std::move(order)), elements_(std::move(elements)) {}

    const Context& ctx() const { return ctx_; }
    const MonomialOrder& order() const { return order_; }
    // Reduced basis: monic, pairwise irreducible, sorted by leading monomial
    // ascending. Unique for the ideal and order.
    const std::vector<Poly>& elements() const { return elements_; }

  private:
    Context ctx_;
    MonomialOrder order_;
    std::vector<Poly> elements_;
};

GroebnerBasis buchberger(const IdealBasis& ideal, const MonomialOrder& order,
                         Budget* budget = nullptr);

// Full normal form: no term of the result is divisible by any leading term.
Poly normal_form(const Poly& f, const GroebnerBasis& gb, Budget* budget = nullptr);

struct QuotientBasis {
    std::vector<Mono> standard_monomials;        // empty when infinite
    std::optional<unsigned long> colength;       // nullopt encodes +infinity
};

QuotientBasis quotient_basis(const IdealBasis& ideal, const MonomialOrder& order,
                             Budget* budget = nullptr);
QuotientBasis quotient_basis(const GroebnerBasis& gb, Budget* budget = nullptr);

// I : s^infinity via the extra-variable trick (adjoin 1 - w*s, eliminate w).
IdealBasis saturate(const IdealBasis& ideal, const Poly& s, Budget* budget = nullptr);

// Rank over Q of the Jacobian of gens at a point of their zero set
// (membership checked exactly; throws precondition_error otherwise).
unsigned jacobian_rank_at(const std::vector<Poly>& gens, const std::map<VarId, Rat>& point);

// True iff the two ideals agree, decided via reduced Groebner bases.
bool same_ideal(const IdealBasis& a, const IdealBasis& b, Budget* budget = nullptr);

} // namespace hilb
