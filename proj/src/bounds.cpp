#include "fatpoints/bounds.hpp"

#include <algorithm>
#include <numeric>

namespace fatpoints {

std::int64_t binom(std::int64_t n, std::int64_t k) {
  if (k < 0 || n < k) return 0;
  k = std::min(k, n - k);
  std::int64_t r = 1;
  for (std::int64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

HilbertSequence::HilbertSequence(std::vector<std::int64_t> prefix, std::int64_t stable)
    : prefix_(std::move(prefix)), stable_(stable) {
  if (prefix_.empty() || prefix_.back() != stable_)
    throw PreconditionError("Hilbert sequence prefix must end at its stable value");
  if (!std::is_sorted(prefix_.begin(), prefix_.end()) || prefix_.front() < 0)
    throw PreconditionError("Hilbert sequence must be nondecreasing and non-negative");
}

std::int64_t HilbertSequence::operator()(std::int64_t t) const {
  if (t < 0) return 0;
  if (static_cast<std::size_t>(t) < prefix_.size()) return prefix_[static_cast<std::size_t>(t)];
  return stable_;
}

namespace {

std::int64_t total(std::span<const std::int64_t> v) {
  return std::accumulate(v.begin(), v.end(), std::int64_t{0});
}

template <typename Fn>
HilbertSequence tabulate(std::span<const std::int64_t> v, Fn value) {
  const auto stable = total(v);
  std::vector<std::int64_t> prefix;
  for (std::int64_t t = 0;; ++t) {
    prefix.push_back(value(v, t));
    if (prefix.back() == stable) break;
  }
  return HilbertSequence(std::move(prefix), stable);
}

} // namespace

std::int64_t f_value(std::span<const std::int64_t> v, std::int64_t t) {
  if (t < 0) return 0;
  std::int64_t sum = 0;
  for (std::size_t i = 0; i < v.size(); ++i)
    sum += binom(std::min(t - static_cast<std::int64_t>(i) + 1, v[i]), 1);
  return sum;
}

std::int64_t F_value(std::span<const std::int64_t> v, std::int64_t t) {
  if (t < 0) return 0;
  const auto n1 = static_cast<std::int64_t>(v.size()); // n + 1
  std::int64_t tail = total(v);
  std::int64_t best = tail; // i = 0
  for (std::int64_t i = 1; i <= n1; ++i) {
    tail -= v[static_cast<std::size_t>(i - 1)];
    best = std::min(best, binom(t + 2, 2) - binom(t - i + 2, 2) + tail);
  }
  return best;
}

HilbertSequence f_lower(std::span<const std::int64_t> v) { return tabulate(v, f_value); }
HilbertSequence F_upper(std::span<const std::int64_t> v) { return tabulate(v, F_value); }

std::int64_t f_recursive(std::span<const std::int64_t> v, std::int64_t t) {
  if (t < 0 || v.empty()) return 0;
  return f_recursive(v.subspan(1), t - 1) + std::min(t + 1, v[0]);
}

std::int64_t F_recursive(std::span<const std::int64_t> v, std::int64_t t) {
  if (t < 0 || v.empty()) return 0;
  return std::min(t + 1 + F_recursive(v.subspan(1), t - 1), total(v));
}

StandardConfiguration standard_config(std::span<const std::int64_t> v) {
  StandardConfiguration s;
  s.rows.assign(v.begin(), v.end());
  for (std::size_t j = 0; j < v.size(); ++j)
    for (std::int64_t i = 0; i < v[j]; ++i) s.lattice.emplace_back(i, static_cast<std::int64_t>(j));
  return s;
}

std::vector<std::int64_t> diag(std::span<const std::int64_t> v) {
  if (v.empty()) return {0};
  const auto top = *std::max_element(v.begin(), v.end());
  std::vector<std::int64_t> counts(static_cast<std::size_t>(std::max<std::int64_t>(
                                       static_cast<std::int64_t>(v.size()) + top, 1)),
                                   0);
  for (const auto& [x, y] : standard_config(v).lattice) ++counts[static_cast<std::size_t>(x + y)];
  return counts;
}

std::vector<std::int64_t> sum_op(std::span<const std::int64_t> v) {
  std::vector<std::int64_t> out(v.size());
  std::partial_sum(v.begin(), v.end(), out.begin());
  return out;
}

bool is_positive(std::span<const std::int64_t> v) {
  return std::all_of(v.begin(), v.end(), [](auto x) { return x > 0; });
}

bool is_non_increasing(std::span<const std::int64_t> v) {
  return std::adjacent_find(v.begin(), v.end(), std::less<>{}) == v.end();
}

bool is_strictly_decreasing(std::span<const std::int64_t> v) {
  return std::adjacent_find(v.begin(), v.end(), std::less_equal<>{}) == v.end();
}

std::optional<std::pair<std::size_t, std::size_t>> gms_violation(std::span<const std::int64_t> v) {
  for (std::size_t i = 0; i < v.size(); ++i)
    for (std::size_t j = i + 1; j < v.size(); ++j)
      if (v[i] - v[j] < static_cast<std::int64_t>(j - i) - 1) return std::pair{i + 1, j + 1};
  return std::nullopt;
}

bool is_gms(std::span<const std::int64_t> v) { return !gms_violation(v).has_value(); }

namespace {

void require_non_increasing(std::span<const std::int64_t> v) {
  if (!is_non_increasing(v))
    throw PreconditionError("criterion only applies to non-increasing vectors");
}

} // namespace

bool gms_by_delta(std::span<const std::int64_t> v) {
  require_non_increasing(v);
  std::vector<std::int64_t> reversed(v.rbegin(), v.rend());
  std::vector<std::int64_t> delta(reversed.size());
  std::adjacent_difference(reversed.begin(), reversed.end(), delta.begin());
  // delta[0] = v_r is the initial value, not a difference; a zero there would
  // come from a trailing zero entry and says nothing about repeated values.
  std::optional<std::size_t> last_zero;
  bool big_since = false;
  for (std::size_t k = 1; k < delta.size(); ++k) {
    if (delta[k] == 0) {
      if (last_zero && !big_since) return false;
      last_zero = k;
      big_since = false;
    } else if (delta[k] > 1) {
      big_since = true;
    }
  }
  return true;
}

std::optional<std::pair<std::size_t, std::size_t>> gms_forbidden_pattern(
    std::span<const std::int64_t> v) {
  require_non_increasing(v);
  const std::size_t r = v.size();
  for (std::size_t i = 0; i + 2 < r; ++i) {
    if (v[i] != v[i + 1]) continue;
    // (a, a, a) is the j = 1 instance; for j > 1 the run a_{i+1}..a_{i+j}
    // steps down by exactly one before the closing repeat.
    for (std::size_t j = 1; i + j + 1 < r; ++j) {
      if (j > 1 && v[i + j] != v[i + j - 1] - 1) break;
      if (v[i + j] == v[i + j + 1]) return std::pair{i, i + j + 1};
    }
  }
  return std::nullopt;
}

bool gms_by_pattern(std::span<const std::int64_t> v) { return !gms_forbidden_pattern(v); }

std::int64_t pn_lower_bound(int ambient_dim, std::span<const std::int64_t> residual_degrees,
                            std::int64_t t) {
  if (residual_degrees.empty() || residual_degrees.back() != 0)
    throw PreconditionError("the last residual must be empty (degree 0)");
  std::int64_t best = 0;
  for (std::size_t i = 0; i < residual_degrees.size(); ++i)
    best = std::max(best, binom(t - static_cast<std::int64_t>(i) + ambient_dim, ambient_dim) -
                              residual_degrees[i]);
  return best;
}

} // namespace fatpoints
