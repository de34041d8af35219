#pragma once

#include "hilb/frac.hpp"

#include <map>
#include <optional>

namespace hilb {

// Laurent polynomial in one designated variable t, with coefficients that
// are rational functions of the remaining variables.
class TLaurent {
  public:
    TLaurent() = default;

    // Split a fraction whose denominator is free of t into t-coefficients.
    static TLaurent from_frac(const Frac& f, VarId t_var);

    const std::map<long, Frac>& coeffs() const { return coeffs_; }
    bool is_zero() const { return coeffs_.empty(); }

    // Minimal t-exponent with nonzero coefficient; nullopt for zero (+infinity).
    std::optional<long> t_order() const;
    const Frac& leading_coeff() const; // coefficient at t_order; throws on zero

  private:
    std::map<long, Frac> coeffs_;
};

inline std::optional<long> t_order(const TLaurent& f) { return f.t_order(); }

} // namespace hilb
