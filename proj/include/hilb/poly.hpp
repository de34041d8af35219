#pragma once

#include "hilb/context.hpp"
#include "hilb/rational.hpp"

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace hilb {

// Dense exponent vector over the context's variable sequence.
using Mono = std::vector<unsigned>;

unsigned total_degree(const Mono& m);
bool mono_is_one(const Mono& m);
bool mono_divides(const Mono& d, const Mono& m);
Mono mono_mul(const Mono& a, const Mono& b);
Mono mono_div(const Mono& a, const Mono& b); // precondition: b | a
Mono mono_lcm(const Mono& a, const Mono& b);
bool mono_coprime(const Mono& a, const Mono& b);

// Canonical storage order: graded lexicographic on the declared sequence.
int grlex_cmp(const Mono& a, const Mono& b); // <0, 0, >0

struct MonomialOrder {
    enum class Kind { lex, grlex, grevlex, elim_block };
    Kind kind = Kind::grevlex;
    // Permutation of all context variables, most significant first.
    std::vector<VarId> priority;
    // elim_block only: the first `block` entries of `priority` are eliminated first.
    size_t block = 0;

    int cmp(const Mono& a, const Mono& b) const;
    bool greater(const Mono& a, const Mono& b) const { return cmp(a, b) > 0; }
    bool less(const Mono& a, const Mono& b) const { return cmp(a, b) < 0; }

    static MonomialOrder lex(const Context& ctx);
    static MonomialOrder grlex(const Context& ctx);
    static MonomialOrder grevlex(const Context& ctx);
    // grevlex with the named variables demoted to the bottom (in given order).
    static MonomialOrder grevlex_low(const Context& ctx, const std::vector<std::string>& low);
    // elimination order: named variables form the leading block.
    static MonomialOrder elim(const Context& ctx, const std::vector<std::string>& block_vars);
};

struct Term {
    Mono mono;
    Rat coeff;
};

struct shape_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct range_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Sparse multivariate polynomial over Q. Terms are kept sorted in
// descending canonical (grlex) order with no zero coefficients, so equality
// is plain structural equality.
class Poly {
  public:
    Poly() = default;

    static Poly zero(const Context& ctx);
    static Poly constant(const Context& ctx, const Rat& c);
    static Poly variable(const Context& ctx, VarId v, unsigned e = 1);
    static Poly variable(const Context& ctx, const std::string& name, unsigned e = 1);
    static Poly monomial(const Context& ctx, Mono m, Rat c);
    static Poly from_terms(const Context& ctx, std::vector<Term> ts);

    const Context& ctx() const { return ctx_; }
    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    unsigned degree() const; // total degree; 0 for the zero polynomial
    unsigned degree_in(VarId v) const;
    bool depends_on(VarId v) const { return degree_in(v) > 0; }
    Rat coeff(const Mono& m) const;
    Rat constant_coeff() const;

    Poly operator-() const;
    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator*(const Poly& o) const;
    Poly operator*(const Rat& c) const;
    Poly pow(unsigned e) const;
    bool operator==(const Poly& o) const;
    bool operator!=(const Poly& o) const { return !(*this == o); }

    const Term& leading_term(const MonomialOrder& ord) const; // throws on zero

    Poly derivative(VarId v) const;
    Rat eval(const std::vector<Rat>& point) const;
    Poly specialize(const std::map<VarId, Rat>& values) const;

    // Transport by variable name into another context; throws context_error
    // if a variable actually used here is missing in the target.
    Poly transport(const Context& target) const;

  private:
    Context ctx_;
    std::vector<Term> terms_; // descending grlex, no zero coefficients
};

enum class PolyOp { add, sub, mul };
Poly poly_arith(const Poly& lhs, const Poly& rhs, PolyOp op);

// sigma_k of the listed variables; sigma_0 = 1.
Poly elementary_symmetric(const Context& ctx, const std::vector<VarId>& vars, unsigned k);

// Quotient of an exact division a = q*b; throws shape_error if not exact.
Poly divexact(const Poly& a, const Poly& b);

// Ring map substituting a polynomial for one variable.
Poly substitute_var(const Poly& f, VarId v, const Poly& value);

// Simultaneous confluent rewrite x*y -> target applied to every listed
// variable pair inside each monomial.
Poly rewrite_pairs_to(const Poly& f, const std::vector<std::pair<VarId, VarId>>& pairs,
                      VarId target);

} // namespace hilb
