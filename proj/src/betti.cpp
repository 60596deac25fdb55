#include "fatpoints/betti.hpp"

#include <algorithm>
#include <numeric>

namespace fatpoints {

AlphaReg alpha_reg(const HilbertSequence& h, std::int64_t deg) {
  if (h.stable() != deg)
    throw PreconditionError("Hilbert sequence does not stabilize at the scheme degree");
  const auto limit = static_cast<std::int64_t>(h.prefix().size());
  AlphaReg out{-1, -1};
  for (std::int64_t t = 0; t <= limit; ++t)
    if (h(t) < binom(t + 2, 2)) {
      out.alpha = t;
      break;
    }
  if (out.alpha < 0) throw PreconditionError("degenerate Hilbert sequence: the ideal is empty");
  for (std::int64_t t = 0; t <= limit + 1; ++t)
    if (h(t - 1) == deg) {
      out.reg = t;
      break;
    }
  return out;
}

std::int64_t ideal_value(const HilbertSequence& h, std::int64_t t) {
  return binom(t + 2, 2) - h(t);
}

Interval naive_nu_bounds(std::span<const std::int64_t> ideal_h, std::int64_t t) {
  if (t < 0 || static_cast<std::size_t>(t) + 1 >= ideal_h.size())
    throw PreconditionError("ideal Hilbert values must cover degrees t and t + 1");
  const auto now = ideal_h[static_cast<std::size_t>(t)];
  const auto next = ideal_h[static_cast<std::size_t>(t) + 1];
  if (now <= 0) throw PreconditionError("naive bounds need a nonzero degree-t component");
  const Interval out{std::max<std::int64_t>(0, next - 3 * now), next - (2 + now)};
  if (out.hi < out.lo) throw PreconditionError("ideal Hilbert values are inconsistent");
  return out;
}

namespace {

std::int64_t ideal_of_truncation(std::span<const std::int64_t> d, std::size_t drop,
                                 std::int64_t u) {
  return binom(u + 2, 2) - f_value(d.subspan(drop), u);
}

void require_range(std::span<const std::int64_t> d, std::int64_t t) {
  if (!is_gms(d)) throw PreconditionError("reduction vector is not GMS");
  const auto ar = alpha_reg(f_lower(d), std::accumulate(d.begin(), d.end(), std::int64_t{0}));
  if (t < ar.alpha || t >= ar.reg)
    throw PreconditionError("degree " + std::to_string(t) + " outside [alpha, reg) = [" +
                            std::to_string(ar.alpha) + ", " + std::to_string(ar.reg) + ")");
}

std::int64_t j_index_unchecked(std::span<const std::int64_t> d, std::int64_t t) {
  const auto target = ideal_of_truncation(d, 0, t);
  std::size_t j = 0;
  while (j < d.size() &&
         ideal_of_truncation(d, j + 1, t - static_cast<std::int64_t>(j) - 1) == target)
    ++j;
  return static_cast<std::int64_t>(j);
}

Interval improved_unchecked(std::span<const std::int64_t> d, std::int64_t t) {
  const auto j = j_index_unchecked(d, t);
  const auto uj = static_cast<std::size_t>(j);
  const auto base = ideal_of_truncation(d, 0, t + 1) - ideal_of_truncation(d, uj, t - j + 1);
  const auto tail = d.subspan(uj);
  const auto e = f_value(tail, t - j) - f_value(tail, t - j - 1);
  return {base + std::max<std::int64_t>(2 * e - t + j, 0), base + e};
}

} // namespace

std::int64_t j_index(std::span<const std::int64_t> d, std::int64_t t) {
  require_range(d, t);
  return j_index_unchecked(d, t);
}

Interval improved_nu_bounds(std::span<const std::int64_t> d, std::int64_t t) {
  require_range(d, t);
  return improved_unchecked(d, t);
}

std::vector<std::int64_t> delta(std::span<const std::int64_t> seq, int order) {
  if (order < 1) throw PreconditionError("difference order must be at least 1");
  std::vector<std::int64_t> out(seq.begin(), seq.end());
  for (int k = 0; k < order; ++k)
    for (std::size_t t = out.size(); t-- > 1;) out[t] -= out[t - 1];
  return out;
}

BettiBounds betti_table(std::span<const std::int64_t> d) {
  if (!is_gms(d)) throw PreconditionError("reduction vector is not GMS");
  const auto h = f_lower(d);
  const auto deg = h.stable();
  const auto ar = alpha_reg(h, deg);

  BettiBounds out;
  out.alpha = ar.alpha;
  out.reg = ar.reg;
  const auto last = ar.reg + 1;
  for (std::int64_t t = 0; t <= last; ++t) out.nu[t] = {0, 0};
  const auto at_alpha = ideal_value(h, ar.alpha);
  out.nu[ar.alpha] = {at_alpha, at_alpha};
  for (std::int64_t t = ar.alpha; t < ar.reg; ++t) out.nu[t + 1] = improved_unchecked(d, t);

  std::vector<std::int64_t> ideal;
  for (std::int64_t t = 0; t <= last; ++t) ideal.push_back(ideal_value(h, t));
  const auto third = delta(ideal, 3);
  bool points = true;
  for (std::int64_t t = 0; t <= last; ++t) {
    const auto& nu = out.nu[t];
    const auto shift = third[static_cast<std::size_t>(t)];
    out.sigma[t] = {nu.lo - shift, nu.hi - shift};
    points = points && nu.is_point();
  }
  out.exact = is_betti_determining(d) || points;
  return out;
}

namespace {

// (m, m, m-1, ..., 2, 1) with m >= 1
bool is_doubled_staircase(std::span<const std::int64_t> d) {
  if (d.size() < 2) return false;
  const auto m = d[0];
  if (m < 1 || d[1] != m || static_cast<std::int64_t>(d.size()) != m + 1) return false;
  for (std::size_t i = 2; i < d.size(); ++i)
    if (d[i] != d[i - 1] - 1) return false;
  return true;
}

} // namespace

bool is_betti_determining(std::span<const std::int64_t> d) {
  if (!is_positive(d)) return false;
  if (is_strictly_decreasing(d)) return true;
  if (is_doubled_staircase(d)) return true;
  // split at the repeated value: head (d_1..d_k) strictly decreasing, d_k >= m + 2
  for (std::size_t k = 1; k + 1 < d.size(); ++k) {
    const auto head = d.first(k);
    const auto rest = d.subspan(k);
    if (is_strictly_decreasing(head) && is_doubled_staircase(rest) && head.back() >= rest[0] + 2)
      return true;
  }
  return false;
}

} // namespace fatpoints
