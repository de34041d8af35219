#pragma once

#include "hilb/poly.hpp"

#include <map>

namespace hilb {

struct invalid_binding : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Rational function num/den. Normalization keeps the denominator monic
// (leading coefficient 1 in the canonical order), cancels common monomial
// content and collapses den to 1 when the division happens to be exact.
// Equality is decided by cross multiplication, which needs no gcd.
class Frac {
  public:
    Frac() = default;
    explicit Frac(const Poly& num);
    Frac(Poly num, Poly den);

    static Frac zero(const Context& ctx) { return Frac(Poly::zero(ctx)); }
    static Frac constant(const Context& ctx, const Rat& c) {
        return Frac(Poly::constant(ctx, c));
    }

    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }
    const Context& ctx() const { return num_.ctx(); }
    bool is_zero() const { return num_.is_zero(); }
    bool is_poly() const { return den_.is_constant(); }

    Frac operator-() const;
    Frac operator+(const Frac& o) const;
    Frac operator-(const Frac& o) const;
    Frac operator*(const Frac& o) const;
    Frac operator/(const Frac& o) const;
    Frac pow(unsigned e) const;

    bool operator==(const Frac& o) const; // cross multiplication, always exact
    bool operator!=(const Frac& o) const { return !(*this == o); }

  private:
    void normalize();
    Poly num_, den_;
};

// Image of f under the ring map sending each bound variable to its Frac
// value (unbound variables map to themselves). Ring homomorphism.
Frac substitute(const Poly& f, const std::map<VarId, Frac>& bindings);

} // namespace hilb
