#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "fatpoints/scheme.hpp"

namespace fatpoints {

/// Binomial coefficient with binom(n, k) = 0 whenever n < k, including n < 0.
std::int64_t binom(std::int64_t n, std::int64_t k);

/// A nondecreasing, eventually constant sequence of naturals.  The prefix
/// runs through the first index whose value equals the stable value.
class HilbertSequence {
public:
  HilbertSequence() = default;
  HilbertSequence(std::vector<std::int64_t> prefix, std::int64_t stable);

  std::int64_t operator()(std::int64_t t) const;
  const std::vector<std::int64_t>& prefix() const { return prefix_; }
  std::int64_t stable() const { return stable_; }

  friend bool operator==(const HilbertSequence&, const HilbertSequence&) = default;

private:
  std::vector<std::int64_t> prefix_{0};
  std::int64_t stable_ = 0;
};

/// f_v(t) = sum_i binom(min(t - i + 1, v_{i+1}), 1); zero for t < 0.
std::int64_t f_value(std::span<const std::int64_t> v, std::int64_t t);
/// F_v(t) = min_i binom(t+2,2) - binom(t-i+2,2) + sum_{j>i} v_j; zero for t < 0.
std::int64_t F_value(std::span<const std::int64_t> v, std::int64_t t);

/// Lower bound on the Hilbert function of any scheme with full reduction vector v.
HilbertSequence f_lower(std::span<const std::int64_t> v);
/// Upper bound on the Hilbert function of any scheme with full reduction vector v.
HilbertSequence F_upper(std::span<const std::int64_t> v);

std::int64_t f_recursive(std::span<const std::int64_t> v, std::int64_t t);
std::int64_t F_recursive(std::span<const std::int64_t> v, std::int64_t t);

/// Row j-1 holds the v_j leftmost lattice points (i, j-1), i >= 0.
struct StandardConfiguration {
  ReductionVector rows;
  std::vector<std::pair<std::int64_t, std::int64_t>> lattice;
};

StandardConfiguration standard_config(std::span<const std::int64_t> v);
/// Anti-diagonal counts of S_v, reported through index len(v) - 1 + max(v).
std::vector<std::int64_t> diag(std::span<const std::int64_t> v);
/// Running partial sums.
std::vector<std::int64_t> sum_op(std::span<const std::int64_t> v);

bool is_positive(std::span<const std::int64_t> v);
bool is_non_increasing(std::span<const std::int64_t> v);
bool is_strictly_decreasing(std::span<const std::int64_t> v);

/// v_i - v_j >= j - i - 1 for all i < j, evaluated literally on any input.
bool is_gms(std::span<const std::int64_t> v);
/// First violating pair (i, j), 1-based, of the pairwise GMS inequality.
std::optional<std::pair<std::size_t, std::size_t>> gms_violation(std::span<const std::int64_t> v);

/// GMS via zero entries of Δ(v_r, ..., v_1).  Requires v non-increasing.
bool gms_by_delta(std::span<const std::int64_t> v);
/// GMS via the forbidden consecutive patterns.  Requires v non-increasing.
bool gms_by_pattern(std::span<const std::int64_t> v);
/// Inclusive 0-based span [first, last] of the first forbidden pattern.
std::optional<std::pair<std::size_t, std::size_t>> gms_forbidden_pattern(
    std::span<const std::int64_t> v);

/// Lower bound max_i max(0, binom(t - i + N, N) - deg(A_i)) on h^0(I_{A_0}(t)),
/// given deg(A_0), ..., deg(A_{n+1}) with deg(A_{n+1}) = 0.
std::int64_t pn_lower_bound(int ambient_dim, std::span<const std::int64_t> residual_degrees,
                            std::int64_t t);

} // namespace fatpoints
