#pragma once

#include "hilb/rational.hpp"

#include <cstdint>
#include <random>

namespace hilb {

// Single named generator for all specialization-based checks. mt19937_64 is
// fully specified by the standard, so runs are reproducible across builds.
class SeededRng {
  public:
    explicit SeededRng(uint64_t seed) : eng_(seed) {}

    int64_t integer(int64_t lo, int64_t hi) {
        std::uniform_int_distribution<int64_t> d(lo, hi);
        return d(eng_);
    }

    // small rational with numerator in [-max_num, max_num], denominator in [1, max_den]
    Rat rational(int64_t max_num = 9, int64_t max_den = 4) {
        return rat(integer(-max_num, max_num), integer(1, max_den));
    }

    Rat nonzero_rational(int64_t max_num = 9, int64_t max_den = 4) {
        for (;;) {
            Rat q = rational(max_num, max_den);
            if (q != 0) return q;
        }
    }

    bool coin() { return integer(0, 1) == 1; }

  private:
    std::mt19937_64 eng_;
};

} // namespace hilb
