#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <vector>

#include "fatpoints/bounds.hpp"

namespace fatpoints {

struct Interval {
  std::int64_t lo = 0;
  std::int64_t hi = 0;

  bool is_point() const { return lo == hi; }
  bool contains(std::int64_t x) const { return lo <= x && x <= hi; }
  bool within(const Interval& outer) const { return outer.lo <= lo && hi <= outer.hi; }
  friend bool operator==(const Interval&, const Interval&) = default;
};

struct AlphaReg {
  std::int64_t alpha = 0;
  std::int64_t reg = 0;
};

/// alpha = least t with h(t) < binom(t+2, 2); reg = least t with h(t-1) = deg.
AlphaReg alpha_reg(const HilbertSequence& h, std::int64_t deg);

/// h_I(t) = binom(t+2, 2) - h(t).
std::int64_t ideal_value(const HilbertSequence& h, std::int64_t t);

/// Naive interval for nu_{t+1} from ideal Hilbert values h_I(t) and h_I(t+1).
/// Requires h_I(t) > 0.
Interval naive_nu_bounds(std::span<const std::int64_t> ideal_h, std::int64_t t);

/// Largest j in [0, n+1] with h_{I_{A_i}}(t - i) = h_{I_A}(t) for 1 <= i <= j,
/// where A_i has the truncated vector (d_{i+1}, ..., d_{n+1}).
/// Requires d GMS and alpha <= t < reg.
std::int64_t j_index(std::span<const std::int64_t> d, std::int64_t t);

/// Improved interval for nu_{t+1}; requires d GMS and alpha <= t < reg.
Interval improved_nu_bounds(std::span<const std::int64_t> d, std::int64_t t);

struct BettiBounds {
  std::int64_t alpha = 0;
  std::int64_t reg = 0;
  /// Keys run over every degree 0 .. reg + 1.
  std::map<std::int64_t, Interval> nu;
  std::map<std::int64_t, Interval> sigma;
  bool exact = false;
};

/// Graded Betti number bounds determined by a GMS reduction vector.
BettiBounds betti_table(std::span<const std::int64_t> d);

/// Whether d has one of the three shapes for which the nu bounds coincide at
/// every degree: strictly decreasing; (m, m, m-1, ..., 1); or a strictly
/// decreasing head ending at >= m + 2 followed by (m, m, m-1, ..., 1).
bool is_betti_determining(std::span<const std::int64_t> d);

/// Iterated difference operator with Δf(0) = f(0).
std::vector<std::int64_t> delta(std::span<const std::int64_t> seq, int order = 1);

} // namespace fatpoints
