#include <catch2/catch_amalgamated.hpp>

#include "fatpoints/betti.hpp"
#include "support.hpp"

using namespace fatpoints;
using fpt::Vec;

namespace {

const Vec kStar{12, 11, 10, 9, 8, 4, 3, 2, 1};

Vec ideal_values(const Vec& d, std::int64_t last) {
  const auto h = f_lower(d);
  Vec out;
  for (std::int64_t t = 0; t <= last; ++t) out.push_back(ideal_value(h, t));
  return out;
}

} // namespace

TEST_CASE("alpha and reg") {
  const auto star = alpha_reg(f_lower(kStar), 60);
  CHECK(star.alpha == 9);
  CHECK(star.reg == 12);

  const auto strict = Vec{7, 5, 4, 2};
  const auto ar = alpha_reg(f_lower(strict), 18);
  CHECK(ar.alpha == 4);
  CHECK(ar.reg == 7);

  const auto one = alpha_reg(HilbertSequence({1}, 1), 1);
  CHECK(one.alpha == 1);
  CHECK(one.reg == 1);
  CHECK_THROWS_AS(alpha_reg(HilbertSequence({1, 2}, 2), 3), PreconditionError);
}

TEST_CASE("naive bounds") {
  const auto hi = ideal_values(kStar, 13);
  CHECK(naive_nu_bounds(hi, 9) == Interval{0, 4});
  CHECK(naive_nu_bounds(hi, 11) == Interval{0, 11});
  CHECK(naive_nu_bounds(Vec{1, 3}, 0) == Interval{0, 0});
  CHECK_THROWS_AS(naive_nu_bounds(Vec{0, 0, 1}, 1), PreconditionError);
}

TEST_CASE("improved bounds on the star configuration") {
  CHECK(improved_nu_bounds(kStar, 9) == Interval{0, 0});
  CHECK(improved_nu_bounds(kStar, 10) == Interval{0, 0});
  CHECK(improved_nu_bounds(kStar, 11) == Interval{5, 5});
  for (std::int64_t t = 9; t < 12; ++t) {
    const auto j = j_index(kStar, t);
    CHECK(j >= 0);
    CHECK(j <= t);
  }
  CHECK(j_index(kStar, 9) >= 1);
  CHECK_THROWS_AS(improved_nu_bounds(kStar, 12), PreconditionError);
  CHECK_THROWS_AS(improved_nu_bounds(Vec{3, 3, 2, 2}, 3), PreconditionError);
  // (1): alpha = reg, nothing in range
  CHECK_THROWS_AS(j_index(Vec{1}, 1), PreconditionError);
  // (2,1): alpha = reg = 2
  CHECK_THROWS_AS(j_index(Vec{2, 1}, 2), PreconditionError);
}

TEST_CASE("betti tables") {
  const auto star = betti_table(kStar);
  CHECK(star.alpha == 9);
  CHECK(star.reg == 12);
  CHECK(star.nu.at(9) == Interval{5, 5});
  CHECK(star.nu.at(10) == Interval{0, 0});
  CHECK(star.nu.at(11) == Interval{0, 0});
  CHECK(star.nu.at(12) == Interval{5, 5});
  CHECK(star.exact);

  const auto third = delta(ideal_values(kStar, 13), 3);
  CHECK(star.sigma.at(12).lo - star.nu.at(12).lo == -third[12]);

  const auto one = betti_table(Vec{1});
  CHECK(one.nu.at(1) == Interval{2, 2});
  for (const auto& [t, iv] : one.nu)
    if (t != 1) CHECK(iv == Interval{0, 0});

  const auto three = betti_table(Vec{2, 1});
  CHECK(three.exact);
  CHECK(three.nu.at(2) == Interval{3, 3});

  const auto empty = betti_table(Vec{});
  CHECK(empty.nu.at(0) == Interval{1, 1});

  const auto dd = betti_table(Vec{2, 2});
  bool wide = false;
  for (const auto& [t, iv] : dd.nu) wide = wide || !iv.is_point();
  CHECK(wide);
  CHECK_FALSE(dd.exact);

  CHECK_THROWS_AS(betti_table(Vec{3, 3, 2, 2}), PreconditionError);
}

TEST_CASE("betti determining shapes") {
  CHECK(is_betti_determining(kStar));
  CHECK(is_betti_determining(Vec{3, 3, 2, 1}));
  CHECK(is_betti_determining(Vec{9, 6, 3, 3, 2, 1}));
  CHECK_FALSE(is_betti_determining(Vec{9, 4, 3, 3, 2, 1}));
  CHECK_FALSE(is_betti_determining(Vec{2, 2}));
  CHECK_FALSE(is_betti_determining(Vec{3, 3, 1}));
  CHECK(is_betti_determining(Vec{1, 1}));
}

TEST_CASE("difference operator") {
  CHECK(delta(Vec{1, 3, 6, 10}) == Vec{1, 2, 3, 4});
  CHECK(delta(Vec{4, 4, 4}) == Vec{4, 0, 0});
  CHECK(delta(Vec{1, 3, 6, 10}, 2) == Vec{1, 1, 1, 1});
  CHECK_THROWS_AS(delta(Vec{1}, 0), PreconditionError);
}

TEST_CASE("property: tables over GMS vectors") {
  std::mt19937_64 rng(41);
  int exact = 0;
  auto check = [&](const Vec& d) {
    if (!is_gms(d) || !is_positive(d)) return;
    const auto b = betti_table(d);
    std::int64_t euler_lo = 0;
    for (const auto& [t, iv] : b.nu) {
      CHECK(iv.lo <= iv.hi);
      CHECK(iv.lo >= 0);
      if (t < b.alpha || t > b.reg) CHECK(iv == Interval{0, 0});
      euler_lo += iv.lo - b.sigma.at(t).lo;
    }
    if (is_betti_determining(d)) {
      CHECK(b.exact);
      for (const auto& [t, iv] : b.nu) CHECK(iv.is_point());
    }
    if (b.exact) {
      ++exact;
      CHECK(euler_lo == 1);
    }
    // both intervals hold the true value, so they must meet
    const auto ih = ideal_values(d, b.reg + 1);
    for (std::int64_t t = b.alpha; t < b.reg; ++t) {
      const auto iv = improved_nu_bounds(d, t);
      const auto naive = naive_nu_bounds(ih, t);
      CHECK(iv.lo <= naive.hi);
      CHECK(naive.lo <= iv.hi);
    }
  };
  for (int i = 0; i < 800; ++i) check(fpt::random_non_increasing(rng, 8, 12));
  fpt::each_non_increasing(1, 6, 5, check);
  CHECK(exact > 100);
}
