#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "fatpoints/configs.hpp"
#include "fatpoints/errors.hpp"
#include "fatpoints/scheme.hpp"

namespace fpt {

using namespace fatpoints;
using Vec = std::vector<std::int64_t>;

inline std::int64_t uniform(std::mt19937_64& rng, std::int64_t lo, std::int64_t hi) {
  return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng);
}

inline Vec random_vector(std::mt19937_64& rng, std::int64_t max_len, std::int64_t max_entry) {
  Vec v(static_cast<std::size_t>(uniform(rng, 0, max_len)));
  for (auto& x : v) x = uniform(rng, 0, max_entry);
  return v;
}

inline Vec random_non_increasing(std::mt19937_64& rng, std::int64_t max_len, std::int64_t max_entry) {
  auto v = random_vector(rng, max_len, max_entry);
  std::sort(v.begin(), v.end(), std::greater<>());
  return v;
}

// Calls fn on every non-increasing vector with entries in [lo, hi] and length <= max_len.
template <typename Fn>
void each_non_increasing(std::int64_t lo, std::int64_t hi, std::size_t max_len, Fn&& fn) {
  Vec v;
  auto rec = [&](auto&& self, std::int64_t cap) -> void {
    fn(static_cast<const Vec&>(v));
    if (v.size() == max_len) return;
    for (std::int64_t x = lo; x <= cap; ++x) {
      v.push_back(x);
      self(self, x);
      v.pop_back();
    }
  };
  rec(rec, hi);
}

// s distinct lines with small integer coefficients, as an arrangement over the field.
inline LineArrangement random_arrangement(std::mt19937_64& rng, std::size_t s, FieldSpec field) {
  for (;;) {
    std::vector<Coeffs> lines;
    for (std::size_t i = 0; i < s; ++i) {
      Coeffs c;
      do {
        for (auto& x : c) x = Rational(uniform(rng, -4, 4));
      } while (c[0] == 0 && c[1] == 0 && c[2] == 0);
      lines.push_back(c);
    }
    try {
      return arrangement_from_lines(lines, field);
    } catch (const StructuralError&) {
      // two lines coincide over this field; draw again
    }
  }
}

inline FatPointScheme star_scheme(std::int64_t s, std::int64_t m,
                                  std::optional<FieldSpec> field = FieldSpec::rationals()) {
  auto arr = star_arrangement(static_cast<std::size_t>(s), field);
  return intersections_scheme(arr, {}, IntersectionKind::Reduced, m);
}

inline FatPointScheme grid_scheme() {
  GeneratorSpec spec;
  spec.family = Family::Grid;
  return gen(spec).scheme;
}

} // namespace fpt
