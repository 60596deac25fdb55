// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any FAIL.
#include <chrono>
#include <iostream>
#include <sstream>

#include "fatpoints/betti.hpp"
#include "fatpoints/bounds.hpp"
#include "fatpoints/oracle.hpp"
#include "support.hpp"

using namespace fatpoints;
using fpt::uniform;
using fpt::Vec;

namespace {

class Criterion {
public:
  Criterion(int id, std::string title, double limit_s)
      : id_(id), title_(std::move(title)), limit_(limit_s), start_(std::chrono::steady_clock::now()) {}

  void expect(bool ok, const std::string& what) {
    ++checks_;
    if (!ok && first_failure_.empty()) first_failure_ = what;
    failed_ += ok ? 0 : 1;
  }

  bool report() const {
    const std::chrono::duration<double> took = std::chrono::steady_clock::now() - start_;
    const bool slow = took.count() > limit_;
    const bool pass = failed_ == 0 && !slow;
    std::cout << (pass ? "PASS" : "FAIL") << " criterion " << id_ << ": " << title_ << " (" << checks_
              << " checks, " << took.count() << " s, limit " << limit_ << " s)";
    if (failed_) std::cout << " " << failed_ << " failed, first: " << first_failure_;
    if (slow) std::cout << " over time limit";
    std::cout << "\n";
    return pass;
  }

private:
  int id_;
  std::string title_;
  double limit_;
  std::chrono::steady_clock::time_point start_;
  std::size_t checks_ = 0;
  std::size_t failed_ = 0;
  std::string first_failure_;
};

std::string show(const Vec& v) {
  std::ostringstream out;
  out << "(";
  for (std::size_t i = 0; i < v.size(); ++i) out << (i ? "," : "") << v[i];
  out << ")";
  return out.str();
}

Vec padded(Vec v, std::size_t n) {
  v.resize(std::max(v.size(), n), 0);
  return v;
}

Vec values(const HilbertSequence& h, std::int64_t last) {
  Vec out;
  for (std::int64_t t = 0; t <= last; ++t) out.push_back(h(t));
  return out;
}

ReductionTrace random_full_trace(std::mt19937_64& rng, const FatPointScheme& s) {
  TraceBuilder b(s);
  for (;;) {
    std::vector<std::size_t> live;
    for (std::size_t i = 0; i < s.lines.size(); ++i)
      if (b.degree_along(s.lines[i]) > 0) live.push_back(i);
    if (live.empty()) break;
    b.step(s.lines[live[static_cast<std::size_t>(uniform(rng, 0, live.size() - 1))]]);
  }
  return std::move(b).finish();
}

// f <= h <= F up to the point both bounds settle, with equality when d is GMS.
bool sandwiched(const FatPointScheme& s, const Vec& d) {
  const auto f = f_lower(d);
  const auto F = F_upper(d);
  const auto last = static_cast<std::int64_t>(f.prefix().size());
  const auto h = hilbert_oracle_values(s, last);
  for (std::int64_t t = 0; t <= last; ++t) {
    const auto ht = t < static_cast<std::int64_t>(h.size()) ? h[static_cast<std::size_t>(t)] : h.back();
    if (f(t) > ht || ht > F(t)) return false;
    if (is_gms(d) && ht != f(t)) return false;
  }
  return true;
}

bool criterion_examples() {
  Criterion c(1, "worked examples: f, F, diag, star operator", 1.0);
  c.expect(f_lower(Vec{6, 6, 6, 2, 1}) == HilbertSequence({1, 3, 6, 10, 15, 18, 20, 21}, 21), "f(6,6,6,2,1)");
  c.expect(F_upper(Vec{6, 6, 6, 2, 1}) == HilbertSequence({1, 3, 6, 10, 15, 18, 21}, 21), "F(6,6,6,2,1)");
  c.expect(f_lower(Vec{5, 4, 3, 3, 3, 2, 1}) == HilbertSequence({1, 3, 6, 10, 15, 18, 21}, 21), "f(5,4,3,3,3,2,1)");
  c.expect(F_upper(Vec{5, 4, 3, 3, 3, 2, 1}) == HilbertSequence({1, 3, 6, 10, 15, 21}, 21), "F(5,4,3,3,3,2,1)");
  c.expect(f_lower(Vec{3, 3, 2, 2}) == HilbertSequence({1, 3, 6, 9, 10}, 10), "f(3,3,2,2)");
  c.expect(F_upper(Vec{3, 3, 2, 2}) == HilbertSequence({1, 3, 6, 10}, 10), "F(3,3,2,2)");

  c.expect(padded(diag(Vec{8, 6, 5, 2}), 12) == padded({1, 2, 3, 4, 4, 3, 3, 1, 0}, 12), "diag(8,6,5,2)");
  c.expect(padded(diag(Vec{2, 2}), 8) == padded(diag(Vec{3, 1}), 8), "diag(2,2) = diag(3,1)");

  c.expect(star(Vec{2, 3}, Vec{2, 3}) == Vec{9, 6, 4, 3, 2}, "(2,3)*(2,3)");
  c.expect(star(Vec{3, 2}, Vec{2, 3}) == Vec{6, 6, 4, 3, 2}, "(3,2)*(2,3)");
  c.expect(star(Vec{3, 1}, Vec{2, 3}) == Vec{6, 4, 3, 2}, "(3,1)*(2,3)");
  c.expect(star(Vec{2, 2}, Vec{2, 3}) == Vec{6, 4, 3, 2}, "(2,2)*(2,3)");
  c.expect(star(Vec{1, 2}, Vec{2, 4}) == Vec{8, 4, 2}, "(1,2)*(2,4)");
  c.expect(star(Vec{1, 2}, Vec{8, 2}) == Vec{8, 4, 2}, "(1,2)*(8,2)");
  return c.report();
}

bool criterion_star() {
  Criterion c(2, "star configuration s=5, m=3 end to end", 5.0);
  GeneratorSpec spec;
  spec.family = Family::StarConfig;
  spec.s = 5;
  spec.scale = 3;
  const auto g = gen(spec);
  const Vec d{12, 11, 10, 9, 8, 4, 3, 2, 1};
  const auto trace = reduce(g.scheme, g.schedule);
  c.expect(trace.full && trace.vector == d, "reduction vector " + show(trace.vector));

  const HilbertSequence want({1, 3, 6, 10, 15, 21, 28, 36, 45, 50, 55, 60}, 60);
  c.expect(f_lower(d) == want && F_upper(d) == want, "h from f = F");
  const auto oracle = hilbert_oracle_values(g.scheme, 14);
  c.expect(oracle == want.prefix(), "h from the oracle " + show(oracle));

  const auto ar = alpha_reg(want, degree(g.scheme));
  c.expect(ar.alpha == 9 && ar.reg == 12, "alpha, reg");
  const auto table = betti_table(d);
  const std::map<std::int64_t, std::int64_t> nu{{9, 5}, {10, 0}, {11, 0}, {12, 5}};
  for (const auto& [t, v] : nu) {
    c.expect(table.nu.at(t) == Interval{v, v}, "table nu_" + std::to_string(t));
    c.expect(nu_oracle(g.scheme, t - 1) == v, "oracle nu_" + std::to_string(t));
  }
  Vec ih;
  for (std::int64_t t = 0; t <= 13; ++t) ih.push_back(ideal_value(want, t));
  c.expect(naive_nu_bounds(ih, 9) == Interval{0, 4}, "naive t=9");
  c.expect(naive_nu_bounds(ih, 11) == Interval{0, 11}, "naive t=11");
  return c.report();
}

bool criterion_grid() {
  Criterion c(3, "grid: two schedules pin h", 1.0);
  const auto grid = fpt::grid_scheme();
  const std::vector<std::string> greedy{"H1", "H2", "H3", "V1", "V2"};
  const std::vector<std::string> other{"V1", "V2", "V3", "V4", "V5", "V1", "V2"};
  const auto a = reduce(grid, greedy);
  const auto b = reduce(grid, other);
  c.expect(a.full && a.vector == Vec{6, 6, 6, 2, 1}, "first schedule " + show(a.vector));
  c.expect(b.full && b.vector == Vec{5, 4, 3, 3, 3, 2, 1}, "second schedule " + show(b.vector));
  const HilbertSequence h({1, 3, 6, 10, 15, 18, 21}, 21);
  c.expect(F_upper(a.vector) == f_lower(b.vector), "F of first = f of second");
  c.expect(F_upper(a.vector) == h, "h_A");
  c.expect(hilbert_oracle_values(grid, 10) == values(h, 6), "oracle values");
  for (std::int64_t t = 0; t <= 10; ++t) c.expect(hilbert_oracle(grid, t) == h(t), "oracle at " + std::to_string(t));
  return c.report();
}

bool criterion_properties() {
  Criterion c(4, "property suites", 60.0);
  std::mt19937_64 rng(401);
  for (int i = 0; i < 2000; ++i) {
    const auto v = fpt::random_vector(rng, 8, 12);
    for (std::int64_t t = 0; t <= 20; ++t) c.expect(f_value(v, t) <= F_value(v, t), "f <= F on " + show(v));
    const auto dg = diag(v);
    std::int64_t running = 0;
    for (std::int64_t t = 0; t <= 20; ++t) {
      running += t < static_cast<std::int64_t>(dg.size()) ? dg[static_cast<std::size_t>(t)] : 0;
      c.expect(f_value(v, t) == running, "f = sum diag on " + show(v));
      c.expect(f_recursive(v, t) == f_value(v, t), "f recursive on " + show(v));
      c.expect(F_recursive(v, t) == F_value(v, t), "F recursive on " + show(v));
    }
  }
  for (int i = 0; i < 2000; ++i) {
    const auto v = fpt::random_non_increasing(rng, 8, 12);
    const bool a = is_gms(v);
    c.expect(a == gms_by_delta(v) && a == gms_by_pattern(v), "GMS criteria on " + show(v));
    if (a) c.expect(f_lower(v) == F_upper(v), "GMS => f = F on " + show(v));
  }
  fpt::each_non_increasing(0, 8, 6, [&](const Vec& v) {
    const bool a = is_gms(v);
    c.expect(a == gms_by_delta(v) && a == gms_by_pattern(v), "GMS criteria on " + show(v));
    if (a)
      c.expect(f_lower(v) == F_upper(v), "GMS => f = F on " + show(v));
    else if (is_positive(v))
      c.expect(f_lower(v) != F_upper(v), "non-GMS => f != F on " + show(v));
  });

  const std::vector<FieldSpec> fields{FieldSpec::rationals(), FieldSpec::prime(2), FieldSpec::prime(3),
                                      FieldSpec::prime(5),    FieldSpec::prime(7), FieldSpec::prime(101)};
  for (int iter = 0; iter < 600; ++iter) {
    const auto field = fields[static_cast<std::size_t>(iter) % fields.size()];
    const auto lines = static_cast<std::size_t>(uniform(rng, 2, field == FieldSpec::prime(2) ? 4 : 5));
    const auto arr = fpt::random_arrangement(rng, lines, field);
    Vec e(lines);
    for (auto& x : e) x = uniform(rng, 1, 2);
    const auto s = uniform(rng, 0, 3) == 0 ? intersections_scheme(arr, {}, IntersectionKind::Reduced, uniform(rng, 1, 2))
                                            : intersections_scheme(arr, e, IntersectionKind::Full, 1);
    const auto trace = random_full_trace(rng, s);
    c.expect(validate(s).empty() && trace.full && sandwiched(s, trace.vector), "sandwich on " + show(trace.vector));
  }

  int cases = 0;
  for (int iter = 0; iter < 4000 && cases < 500; ++iter) {
    const auto n = uniform(rng, 1, 3);
    Vec a(n), m(n);
    for (auto& x : a) x = uniform(rng, 1, 3);
    for (auto& x : m) x = uniform(rng, 1, 5);
    const auto d = star(a, m);
    if (!is_betti_determining(d)) continue;
    const auto lc = line_count_scheme(a, m, cases % 2 ? FieldSpec::prime(101) : FieldSpec::rationals());
    c.expect(reduce(lc.scheme, lc.schedule).vector == d, "line count vector " + show(d));
    const auto table = betti_table(d);
    for (std::int64_t t = 0; t <= table.reg; ++t)
      c.expect(table.nu.at(t + 1).contains(nu_oracle(lc.scheme, t)), "nu in interval for " + show(d));
    ++cases;
  }
  c.expect(cases >= 500, "enough line count cases");
  return c.report();
}

bool criterion_greedy() {
  Criterion c(5, "greedy is strictly decreasing on mZ(D)", 30.0);
  std::mt19937_64 rng(501);
  auto run = [&](const LineArrangement& arr, const std::string& label) {
    Vec e(arr.line_count);
    for (auto& x : e) x = uniform(rng, 1, 2);
    const auto m = uniform(rng, 1, 2);
    const auto s = intersections_scheme(arr, e, IntersectionKind::Full, m);
    const auto g = greedy_reduce(s, arrangement_budget(s, e, m));
    c.expect(g.full && is_strictly_decreasing(g.vector), label + " e=" + show(e) + " m=" + std::to_string(m) +
                                                             " gives " + show(g.vector));
  };
  for (int i = 0; i < 1000; ++i) {
    const auto lines = static_cast<std::size_t>(uniform(rng, 1, 6));
    if (lines == 1) {
      run(arrangement_from_lines({Coeffs{Rational(1), Rational(0), Rational(0)}}, FieldSpec::rationals()), "one line");
      continue;
    }
    run(fpt::random_arrangement(rng, lines, FieldSpec::rationals()), std::to_string(lines) + " lines");
  }
  for (std::int64_t q : {2, 3})
    for (int i = 0; i < 50; ++i) run(projective_plane_arrangement(q), "plane q=" + std::to_string(q));
  return c.report();
}

bool criterion_characteristic() {
  Criterion c(6, "P2(F_3) with multiplicity 4", 30.0);
  auto s = intersections_scheme(projective_plane_arrangement(3), {});
  for (auto& p : s.points) p.multiplicity = 4;
  c.expect(s.points.size() == 13 && s.field == FieldSpec::prime(3), "13 points over F_3");
  const auto g = greedy_reduce(s, default_budget(s));
  c.expect(g.full && is_strictly_decreasing(g.vector), "greedy vector " + show(g.vector));
  const auto f = f_lower(g.vector);
  const auto F = F_upper(g.vector);
  c.expect(f == F, "f = F");
  const auto last = static_cast<std::int64_t>(f.prefix().size()) + 1;
  const auto h = hilbert_oracle_values(s, last);
  for (std::int64_t t = 0; t <= last; ++t) {
    const auto ht = t < static_cast<std::int64_t>(h.size()) ? h[static_cast<std::size_t>(t)] : h.back();
    c.expect(ht == f(t) && ht == F(t), "oracle at " + std::to_string(t));
  }
  return c.report();
}

} // namespace

int main() {
  bool ok = true;
  ok = criterion_examples() && ok;
  ok = criterion_star() && ok;
  ok = criterion_grid() && ok;
  ok = criterion_properties() && ok;
  ok = criterion_greedy() && ok;
  ok = criterion_characteristic() && ok;
  return ok ? 0 : 1;
}
