#include "fatpoints/configs.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace fatpoints {

// ---------------------------------------------------------------------------
// pi, circ, star

ReductionVector pi(std::span<const std::int64_t> v) {
  ReductionVector out(v.begin(), v.end());
  std::stable_sort(out.begin(), out.end(), std::greater<>());
  return out;
}

ReductionVector circ(std::span<const std::int64_t> a, std::span<const std::int64_t> m) {
  if (a.size() != m.size()) throw StructuralError("circ: a and m differ in length");
  ReductionVector out;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] < 0 || m[i] < 0) throw StructuralError("circ: negative entry");
    for (std::int64_t k = a[i]; k >= 1; --k) out.push_back(k * m[i]);
  }
  return out;
}

ReductionVector star(std::span<const std::int64_t> a, std::span<const std::int64_t> m) {
  const auto c = circ(a, m);
  return pi(c);
}

// ---------------------------------------------------------------------------
// helpers

namespace {

std::string line_name(std::size_t i) { return "L" + std::to_string(i + 1); }

std::vector<Rational> to_vec(const Coeffs& c) { return {c[0], c[1], c[2]}; }

Coeffs int_coeffs(std::int64_t a, std::int64_t b, std::int64_t c) {
  return {Rational(a), Rational(b), Rational(c)};
}

// Scales a rational triple to coprime integers with first nonzero entry positive.
Coeffs primitive(Coeffs c) {
  BigInt den = 1;
  for (const auto& x : c) den = boost::multiprecision::lcm(den, denominator(x));
  BigInt g = 0;
  for (auto& x : c) {
    x *= den;
    g = boost::multiprecision::gcd(g, numerator(x));
  }
  if (g == 0) return c;
  for (auto& x : c) x /= Rational(g);
  for (const auto& x : c) {
    if (x == 0) continue;
    if (x < 0)
      for (auto& y : c) y = -y;
    break;
  }
  return c;
}

template <typename Field>
std::array<typename Field::Scalar, 3> cross(const Field& F, const std::array<typename Field::Scalar, 3>& a,
                                            const std::array<typename Field::Scalar, 3>& b) {
  return {F.sub(F.mul(a[1], b[2]), F.mul(a[2], b[1])),
          F.sub(F.mul(a[2], b[0]), F.mul(a[0], b[2])),
          F.sub(F.mul(a[0], b[1]), F.mul(a[1], b[0]))};
}

template <typename Field>
std::array<typename Field::Scalar, 3> normalize(const Field& F, std::array<typename Field::Scalar, 3> v) {
  for (const auto& x : v) {
    if (F.is_zero(x)) continue;
    const auto inv = F.inv(x);
    for (auto& y : v) y = F.mul(y, inv);
    break;
  }
  return v;
}

template <typename Field>
Rational to_rational(const typename Field::Scalar& x) {
  return Rational(x);
}

template <typename Field>
LineArrangement arrangement_over(const Field& F, const std::vector<Coeffs>& lines) {
  using S = typename Field::Scalar;
  using Key = std::array<S, 3>;
  std::vector<Key> L;
  for (const auto& c : lines) L.push_back({F.from(c[0]), F.from(c[1]), F.from(c[2])});

  std::map<Key, std::size_t> index;
  std::vector<std::set<std::size_t>> through;
  std::vector<Key> where;
  for (std::size_t i = 0; i < L.size(); ++i) {
    for (std::size_t j = i + 1; j < L.size(); ++j) {
      auto p = cross(F, L[i], L[j]);
      if (std::all_of(p.begin(), p.end(), [&](const S& x) { return F.is_zero(x); }))
        throw StructuralError("lines " + line_name(i) + " and " + line_name(j) + " coincide");
      p = normalize(F, p);
      auto [it, inserted] = index.emplace(p, where.size());
      if (inserted) {
        where.push_back(p);
        through.emplace_back();
      }
      through[it->second].insert(i);
      through[it->second].insert(j);
    }
  }

  LineArrangement out;
  out.line_count = lines.size();
  out.field = F.spec();
  out.line_coeffs = lines;
  std::vector<Coeffs> coords;
  for (std::size_t k = 0; k < where.size(); ++k) {
    out.points.emplace_back(through[k].begin(), through[k].end());
    Coeffs c{to_rational<Field>(where[k][0]), to_rational<Field>(where[k][1]),
             to_rational<Field>(where[k][2])};
    if constexpr (std::is_same_v<Field, RationalField>) c = primitive(c);
    coords.push_back(c);
  }
  out.point_coords = std::move(coords);
  return out;
}

} // namespace

// ---------------------------------------------------------------------------
// line count configurations

ScheduledScheme line_count_scheme(std::span<const std::int64_t> a, std::span<const std::int64_t> m,
                                  FieldSpec field) {
  if (a.size() != m.size()) throw StructuralError("line count config: a and m differ in length");
  if (!field.valid()) throw StructuralError("invalid field");
  const std::size_t s = a.size();
  for (std::size_t i = 0; i < s; ++i)
    if (a[i] < 0 || m[i] < 0) throw StructuralError("line count config: negative entry");

  ScheduledScheme out;
  auto& scheme = out.scheme;
  scheme.field = field;

  // lines y = kx + k^2 meet at x = -(k + k'); points sit at x = 1, 2, ...
  bool realizable = true;
  if (field.kind == FieldKind::PrimeField) {
    const std::int64_t p = field.characteristic;
    if (static_cast<std::int64_t>(s) > p) realizable = false;
    for (std::size_t i = 0; i < s && realizable; ++i) {
      std::set<std::int64_t> crossings;
      for (std::size_t j = 0; j < s; ++j)
        if (j != i) crossings.insert(((-(std::int64_t)(i + j)) % p + p) % p);
      std::set<std::int64_t> used;
      for (std::int64_t x = 1; x <= m[i]; ++x) {
        const auto r = x % p;
        if (crossings.contains(r) || !used.insert(r).second) {
          realizable = false;
          break;
        }
      }
    }
    if (!realizable)
      out.warnings.push_back("F_" + std::to_string(p) +
                             " too small for coordinates; scheme is incidence only");
  }

  for (std::size_t i = 0; i < s; ++i) {
    NamedLine line;
    line.name = line_name(i);
    const auto k = static_cast<std::int64_t>(i);
    if (realizable) line.coefficients = to_vec(int_coeffs(k, -1, k * k));
    for (std::int64_t x = 1; x <= m[i]; ++x) {
      Point p;
      p.name = line.name + "p" + std::to_string(x);
      p.multiplicity = a[i];
      if (realizable) p.coords = std::vector<Rational>{Rational(x), Rational(k * x + k * k), Rational(1)};
      line.incidence.push_back(PointId{scheme.points.size()});
      scheme.points.push_back(std::move(p));
    }
    scheme.lines.push_back(std::move(line));
  }

  // Star schedule: each line's block of degrees, merged in descending order.
  std::vector<std::pair<std::int64_t, std::size_t>> slots;
  for (std::size_t i = 0; i < s; ++i)
    for (std::int64_t k = a[i]; k >= 1; --k) slots.emplace_back(k * m[i], i);
  std::stable_sort(slots.begin(), slots.end(),
                   [](const auto& x, const auto& y) { return x.first > y.first; });
  for (const auto& [value, i] : slots) out.schedule.push_back(line_name(i));
  return out;
}

// ---------------------------------------------------------------------------
// arrangements

LineArrangement arrangement_from_incidence(std::size_t line_count,
                                           std::vector<std::vector<std::size_t>> points) {
  std::set<std::pair<std::size_t, std::size_t>> seen;
  for (auto& p : points) {
    std::sort(p.begin(), p.end());
    if (std::adjacent_find(p.begin(), p.end()) != p.end())
      throw StructuralError("point lists a line twice");
    if (p.size() < 2) throw StructuralError("intersection point on fewer than two lines");
    if (p.back() >= line_count) throw StructuralError("line index out of range");
    for (std::size_t i = 0; i < p.size(); ++i)
      for (std::size_t j = i + 1; j < p.size(); ++j)
        if (!seen.emplace(p[i], p[j]).second)
          throw StructuralError("lines " + line_name(p[i]) + " and " + line_name(p[j]) +
                                " share two points");
  }
  for (std::size_t i = 0; i < line_count; ++i)
    for (std::size_t j = i + 1; j < line_count; ++j)
      if (!seen.contains({i, j})) points.push_back({i, j});

  LineArrangement out;
  out.line_count = line_count;
  out.points = std::move(points);
  return out;
}

LineArrangement arrangement_from_lines(const std::vector<Coeffs>& lines, FieldSpec field) {
  if (!field.valid()) throw StructuralError("invalid field");
  return visit_field(field, [&](const auto& F) { return arrangement_over(F, lines); });
}

FatPointScheme intersections_scheme(const LineArrangement& arr, std::span<const std::int64_t> e,
                                    IntersectionKind kind, std::int64_t scale) {
  std::vector<std::int64_t> weights(arr.line_count, 1);
  if (!e.empty()) {
    if (e.size() != arr.line_count) throw StructuralError("one e_i per line required");
    weights.assign(e.begin(), e.end());
  }
  for (auto w : weights)
    if (w < 0) throw StructuralError("negative line multiplicity");
  if (scale < 0) throw StructuralError("negative scale");
  if (kind == IntersectionKind::Reduced &&
      std::any_of(weights.begin(), weights.end(), [](auto w) { return w != 1; }))
    throw PreconditionError("Z'(D) needs a reduced divisor (all e_i = 1)");

  FatPointScheme scheme;
  scheme.field = arr.field;
  for (std::size_t i = 0; i < arr.line_count; ++i) {
    NamedLine line;
    line.name = line_name(i);
    if (arr.line_coeffs) line.coefficients = to_vec((*arr.line_coeffs)[i]);
    scheme.lines.push_back(std::move(line));
  }
  for (std::size_t k = 0; k < arr.points.size(); ++k) {
    const auto& through = arr.points[k];
    Point p;
    p.name = "p" + std::to_string(k + 1);
    std::int64_t m = 0;
    if (kind == IntersectionKind::Full)
      for (auto i : through) m += weights[i];
    else
      m = static_cast<std::int64_t>(through.size()) - 1;
    p.multiplicity = scale * m;
    if (arr.point_coords) p.coords = to_vec((*arr.point_coords)[k]);
    for (auto i : through) scheme.lines[i].incidence.push_back(PointId{k});
    scheme.points.push_back(std::move(p));
  }
  return scheme;
}

LineArrangement star_arrangement(std::size_t s, std::optional<FieldSpec> coordinates) {
  if (!coordinates) {
    std::vector<std::vector<std::size_t>> none;
    return arrangement_from_incidence(s, none);
  }
  if (coordinates->kind == FieldKind::PrimeField && coordinates->characteristic < static_cast<std::int64_t>(s))
    throw PreconditionError("F_p needs at least s elements for s lines y = kx + k^2");
  std::vector<Coeffs> lines;
  for (std::size_t k = 0; k < s; ++k) {
    const auto kk = static_cast<std::int64_t>(k);
    lines.push_back(int_coeffs(kk, -1, kk * kk));
  }
  auto arr = arrangement_from_lines(lines, *coordinates);
  for (const auto& p : arr.points)
    if (p.size() != 2) throw PreconditionError("lines y = kx + k^2 are concurrent over this field");
  return arr;
}

namespace {

// GF(p^k) with elements encoded as base-p digit strings of polynomials.
class GaloisField {
public:
  explicit GaloisField(std::int64_t q) : q_(q) {
    for (std::int64_t p = 2; p <= q; ++p) {
      if (q % p != 0) continue;
      p_ = p;
      break;
    }
    std::int64_t r = q;
    while (r % p_ == 0) {
      r /= p_;
      ++k_;
    }
    if (r != 1 || !is_prime(p_)) throw StructuralError("q must be a prime power");
    modulus_ = find_irreducible();
  }

  std::int64_t size() const { return q_; }
  std::int64_t characteristic() const { return p_; }
  bool prime() const { return k_ == 1; }

  std::int64_t add(std::int64_t a, std::int64_t b) const {
    auto x = digits(a), y = digits(b);
    for (int i = 0; i < k_; ++i) x[i] = (x[i] + y[i]) % p_;
    return encode(x);
  }
  std::int64_t neg(std::int64_t a) const {
    auto x = digits(a);
    for (auto& d : x) d = (p_ - d) % p_;
    return encode(x);
  }
  std::int64_t mul(std::int64_t a, std::int64_t b) const {
    return encode(reduce(poly_mul(digits(a), digits(b)), modulus_));
  }

private:
  using Poly = std::vector<std::int64_t>;

  Poly digits(std::int64_t a) const {
    Poly d(k_, 0);
    for (int i = 0; i < k_; ++i, a /= p_) d[i] = a % p_;
    return d;
  }
  std::int64_t encode(const Poly& d) const {
    std::int64_t a = 0;
    for (int i = k_ - 1; i >= 0; --i) a = a * p_ + d[i];
    return a;
  }
  Poly poly_mul(const Poly& a, const Poly& b) const {
    Poly c(a.size() + b.size(), 0);
    for (std::size_t i = 0; i < a.size(); ++i)
      for (std::size_t j = 0; j < b.size(); ++j) c[i + j] = (c[i + j] + a[i] * b[j]) % p_;
    return c;
  }
  // remainder mod a monic polynomial of degree k_, truncated to k_ digits
  Poly reduce(Poly a, const Poly& monic) const {
    const int deg = static_cast<int>(monic.size()) - 1;
    for (int i = static_cast<int>(a.size()) - 1; i >= deg; --i) {
      const auto c = a[i];
      if (c == 0) continue;
      for (int j = 0; j <= deg; ++j) a[i - deg + j] = ((a[i - deg + j] - c * monic[j]) % p_ + p_) % p_;
    }
    a.resize(deg, 0);
    return a;
  }
  // Monic degree k_ polynomial with no factor of degree 1..k_/2.
  Poly find_irreducible() const {
    if (k_ == 1) return {0, 1};
    std::int64_t lower = 1;
    for (int i = 0; i < k_; ++i) lower *= p_;
    for (std::int64_t code = 0; code < lower; ++code) {
      Poly f(k_ + 1, 0);
      std::int64_t c = code;
      for (int i = 0; i < k_; ++i, c /= p_) f[i] = c % p_;
      f[k_] = 1;
      if (f[0] == 0) continue;
      bool irreducible = true;
      for (int d = 1; d <= k_ / 2 && irreducible; ++d) {
        std::int64_t count = 1;
        for (int i = 0; i < d; ++i) count *= p_;
        for (std::int64_t gcode = 0; gcode < count && irreducible; ++gcode) {
          Poly g(d + 1, 0);
          std::int64_t x = gcode;
          for (int i = 0; i < d; ++i, x /= p_) g[i] = x % p_;
          g[d] = 1;
          auto r = reduce(f, g);
          if (std::all_of(r.begin(), r.end(), [](auto v) { return v == 0; })) irreducible = false;
        }
      }
      if (irreducible) return f;
    }
    throw StructuralError("no irreducible polynomial found");
  }

  std::int64_t q_ = 0;
  std::int64_t p_ = 0;
  int k_ = 0;
  Poly modulus_;
};

} // namespace

LineArrangement projective_plane_arrangement(std::int64_t q) {
  if (q < 2) throw StructuralError("q must be a prime power >= 2");
  GaloisField F(q);

  std::vector<std::array<std::int64_t, 3>> elems;
  for (std::int64_t b = 0; b < q; ++b)
    for (std::int64_t c = 0; c < q; ++c) elems.push_back({1, b, c});
  for (std::int64_t c = 0; c < q; ++c) elems.push_back({0, 1, c});
  elems.push_back({0, 0, 1});

  auto dot = [&](const auto& u, const auto& v) {
    return F.add(F.add(F.mul(u[0], v[0]), F.mul(u[1], v[1])), F.mul(u[2], v[2]));
  };

  LineArrangement out;
  out.line_count = elems.size();
  out.field = FieldSpec::prime(F.characteristic());
  for (const auto& p : elems) {
    std::vector<std::size_t> through;
    for (std::size_t l = 0; l < elems.size(); ++l)
      if (dot(p, elems[l]) == 0) through.push_back(l);
    out.points.push_back(std::move(through));
  }
  if (F.prime()) {
    std::vector<Coeffs> coords;
    for (const auto& e : elems) coords.push_back(int_coeffs(e[0], e[1], e[2]));
    out.line_coeffs = coords;
    out.point_coords = coords;
  }
  return out;
}

LineArrangement dual_hesse_arrangement(std::optional<FieldSpec> coordinates) {
  if (!coordinates) {
    // Lines A_c: x = w^c y, B_c: y = w^c z, C_c: z = w^c x, indices 0..2, 3..5, 6..8.
    std::vector<std::vector<std::size_t>> pts;
    pts.push_back({3, 4, 5});
    pts.push_back({6, 7, 8});
    pts.push_back({0, 1, 2});
    for (std::size_t a = 0; a < 3; ++a)
      for (std::size_t b = 0; b < 3; ++b)
        pts.push_back({(3 - a) % 3, 3 + (a + 3 - b) % 3, 6 + b});
    return arrangement_from_incidence(9, pts);
  }
  const auto& f = *coordinates;
  if (f.kind != FieldKind::PrimeField || (f.characteristic - 1) % 3 != 0)
    throw PreconditionError("dual Hesse coordinates need F_p with p = 1 mod 3");
  const std::int64_t p = f.characteristic;
  PrimeField F(p);
  auto power = [&](std::int64_t b, std::int64_t e) {
    std::int64_t r = 1;
    for (b %= p; e > 0; e >>= 1, b = F.mul(b, b))
      if (e & 1) r = F.mul(r, b);
    return r;
  };
  std::int64_t w = 1;
  for (std::int64_t x = 2; x < p && w == 1; ++x) w = power(x, (p - 1) / 3);
  const std::int64_t eps[3] = {1, w, F.mul(w, w)};
  std::vector<Coeffs> lines;
  for (auto e : eps) lines.push_back(int_coeffs(1, F.sub(0, e), 0));
  for (auto e : eps) lines.push_back(int_coeffs(0, 1, F.sub(0, e)));
  for (auto e : eps) lines.push_back(int_coeffs(F.sub(0, e), 0, 1));
  return arrangement_from_lines(lines, f);
}

// ---------------------------------------------------------------------------
// greedy

ReductionTrace greedy_reduce(const FatPointScheme& scheme, const LineBudget& budget) {
  for (const auto& [name, k] : budget) {
    if (scheme.find_line(name) == nullptr) throw StructuralError("budget names unknown line " + name);
    if (k < 0) throw StructuralError("negative budget for " + name);
  }
  std::vector<std::int64_t> left;
  for (const auto& l : scheme.lines) {
    auto it = budget.find(l.name);
    left.push_back(it == budget.end() ? 0 : it->second);
  }
  TraceBuilder builder(scheme);
  for (;;) {
    const auto& cur = builder.current();
    if (std::all_of(cur.begin(), cur.end(), [](auto m) { return m == 0; })) break;
    std::int64_t best = 0;
    std::size_t pick = 0;
    for (std::size_t i = 0; i < scheme.lines.size(); ++i) {
      if (left[i] == 0) continue;
      const auto d = builder.degree_along(scheme.lines[i]);
      if (d > best) {
        best = d;
        pick = i;
      }
    }
    if (best == 0) break;
    builder.step(scheme.lines[pick]);
    --left[pick];
  }
  return std::move(builder).finish();
}

LineBudget default_budget(const FatPointScheme& scheme) {
  LineBudget out;
  for (const auto& l : scheme.lines) {
    std::int64_t m = 0;
    for (auto id : l.incidence) m = std::max(m, scheme.points.at(id.value).multiplicity);
    out[l.name] = m;
  }
  return out;
}

LineBudget arrangement_budget(const FatPointScheme& scheme, std::span<const std::int64_t> e,
                              std::int64_t scale) {
  if (!e.empty() && e.size() != scheme.lines.size())
    throw StructuralError("one e_i per line required");
  LineBudget out;
  for (std::size_t i = 0; i < scheme.lines.size(); ++i)
    out[scheme.lines[i].name] = scale * (e.empty() ? 1 : e[i]);
  return out;
}

// ---------------------------------------------------------------------------
// stars

ReductionVector star_multiplicity_vectors(std::int64_t s, std::int64_t m) {
  if (s < 2 || m < 0) throw StructuralError("star configuration needs s >= 2 and m >= 0");
  auto even = [&](std::int64_t mm, std::int64_t shift) {
    ReductionVector out;
    for (std::int64_t k = mm; k >= 2; k -= 2)
      for (std::int64_t i = 0; i < s; ++i) out.push_back(k * (s - 1) - i + shift);
    return out;
  };
  if (m % 2 == 0) return even(m, 0);
  auto out = even(m - 1, s - 1);
  for (std::int64_t i = s - 1; i >= 1; --i) out.push_back(i);
  return out;
}

std::vector<std::string> star_schedule(std::int64_t s, std::int64_t m) {
  if (s < 2 || m < 0) throw StructuralError("star configuration needs s >= 2 and m >= 0");
  std::vector<std::string> out;
  for (std::int64_t r = 0; r < m / 2; ++r)
    for (std::int64_t i = 0; i < s; ++i) out.push_back(line_name(i));
  if (m % 2 == 1)
    for (std::int64_t i = 0; i + 1 < s; ++i) out.push_back(line_name(i));
  return out;
}

namespace {

struct Search {
  const FatPointScheme& scheme;
  std::size_t limit;
  std::size_t nodes = 0;
  std::set<std::vector<std::int64_t>> dead;
  std::vector<std::string> path;

  // armed: an equal pair has occurred and every later step was by 1
  bool run(std::vector<std::int64_t>& mults, std::int64_t last, bool armed) {
    if (std::all_of(mults.begin(), mults.end(), [](auto v) { return v == 0; })) return true;
    if (++nodes > limit) return false;
    auto key = mults;
    key.push_back(last);
    key.push_back(armed ? 1 : 0);
    if (dead.contains(key)) return false;

    std::vector<std::pair<std::int64_t, std::size_t>> options;
    for (std::size_t i = 0; i < scheme.lines.size(); ++i) {
      const auto d = intersection_degree(mults, scheme.lines[i], scheme.ambient_dim);
      if (d == 0 || d > last) continue;
      if (d == last && armed) continue;
      options.emplace_back(d, i);
    }
    std::stable_sort(options.begin(), options.end(),
                     [](const auto& x, const auto& y) { return x.first > y.first; });
    std::set<std::vector<std::int64_t>> tried;
    for (const auto& [d, i] : options) {
      auto next = mults;
      apply_residual(next, scheme.lines[i]);
      if (!tried.insert(next).second) continue;
      const bool arm = d == last || (armed && last - d <= 1);
      path.push_back(scheme.lines[i].name);
      if (run(next, d, arm)) return true;
      path.pop_back();
      if (nodes > limit) return false;
    }
    dead.insert(std::move(key));
    return false;
  }
};

} // namespace

std::optional<ReductionTrace> search_gms_schedule(const FatPointScheme& scheme, std::size_t node_limit) {
  Search search{scheme, node_limit, 0, {}, {}};
  auto mults = scheme.multiplicities();
  if (!search.run(mults, std::numeric_limits<std::int64_t>::max(), false)) return std::nullopt;
  return reduce(scheme, search.path);
}

// ---------------------------------------------------------------------------
// generator

namespace {

constexpr std::pair<Family, std::string_view> kFamilies[] = {
    {Family::Grid, "grid"},
    {Family::LinearConfig, "linear-config"},
    {Family::LineCountConfig, "line-count-config"},
    {Family::StarConfig, "star-config"},
    {Family::Intersections, "intersections"},
    {Family::ProjectivePlane, "projective-plane-fq"},
    {Family::DualHesse, "dual-hesse"},
    {Family::ZachExample, "zach-example"},
};

Generated grid(const GeneratorSpec& spec) {
  if (spec.rows < 1 || spec.cols < 1) throw StructuralError("grid needs rows, cols >= 1");
  Generated out;
  auto& scheme = out.scheme;
  scheme.field = spec.field;
  bool coords = spec.coordinates;
  if (coords && spec.field.kind == FieldKind::PrimeField &&
      spec.field.characteristic < std::max(spec.rows, spec.cols)) {
    coords = false;
    out.warnings.push_back("F_" + std::to_string(spec.field.characteristic) +
                           " too small for the grid; scheme is incidence only");
  }
  for (const auto& [v, h] : spec.doubles)
    if (v < 1 || v > spec.cols || h < 1 || h > spec.rows)
      throw StructuralError("double point outside the grid");

  for (std::int64_t j = 1; j <= spec.rows; ++j) {
    NamedLine l;
    l.name = "H" + std::to_string(j);
    if (coords) l.coefficients = to_vec(int_coeffs(0, 1, -(spec.rows - j)));
    scheme.lines.push_back(std::move(l));
  }
  for (std::int64_t i = 1; i <= spec.cols; ++i) {
    NamedLine l;
    l.name = "V" + std::to_string(i);
    if (coords) l.coefficients = to_vec(int_coeffs(1, 0, -(i - 1)));
    scheme.lines.push_back(std::move(l));
  }
  for (std::int64_t i = 1; i <= spec.cols; ++i) {
    for (std::int64_t j = 1; j <= spec.rows; ++j) {
      Point p;
      p.name = "V" + std::to_string(i) + "H" + std::to_string(j);
      const bool dbl = std::find(spec.doubles.begin(), spec.doubles.end(), std::pair{i, j}) !=
                       spec.doubles.end();
      p.multiplicity = dbl ? 2 : 1;
      if (coords) p.coords = std::vector<Rational>{Rational(i - 1), Rational(spec.rows - j), Rational(1)};
      const PointId id{scheme.points.size()};
      scheme.lines[j - 1].incidence.push_back(id);
      scheme.lines[spec.rows + i - 1].incidence.push_back(id);
      scheme.points.push_back(std::move(p));
    }
  }
  return out;
}

Generated zach() {
  Generated out;
  auto& scheme = out.scheme;
  const std::int64_t mults[] = {2, 1, 1, 2, 1, 1};
  for (std::size_t i = 0; i < 6; ++i)
    scheme.points.push_back({"p" + std::to_string(i + 1), mults[i], std::nullopt});
  const std::size_t inc[4][2] = {{0, 1}, {0, 2}, {3, 4}, {3, 5}};
  for (std::size_t l = 0; l < 4; ++l)
    scheme.lines.push_back({"l" + std::to_string(l + 1), {PointId{inc[l][0]}, PointId{inc[l][1]}}, std::nullopt});
  return out;
}

Generated from_arrangement(const LineArrangement& arr, const GeneratorSpec& spec, IntersectionKind kind) {
  Generated out;
  out.scheme = intersections_scheme(arr, spec.e, kind, spec.scale);
  if (spec.uniform_multiplicity) {
    if (*spec.uniform_multiplicity < 0) throw StructuralError("negative multiplicity");
    for (auto& p : out.scheme.points) p.multiplicity = *spec.uniform_multiplicity;
  }
  return out;
}

IntersectionKind kind_of(const GeneratorSpec& spec) {
  return spec.primed ? IntersectionKind::Reduced : IntersectionKind::Full;
}

} // namespace

std::optional<Family> parse_family(std::string_view name) {
  for (const auto& [f, n] : kFamilies)
    if (n == name) return f;
  return std::nullopt;
}

std::string_view family_name(Family f) {
  for (const auto& [g, n] : kFamilies)
    if (g == f) return n;
  return "?";
}

Generated gen(const GeneratorSpec& spec) {
  if (!spec.field.valid()) throw StructuralError("invalid field");
  const std::optional<FieldSpec> coords =
      spec.coordinates ? std::optional<FieldSpec>(spec.field) : std::nullopt;

  switch (spec.family) {
  case Family::Grid: return grid(spec);
  case Family::ZachExample: return zach();

  case Family::LinearConfig:
  case Family::LineCountConfig: {
    std::vector<std::int64_t> a = spec.a;
    if (spec.family == Family::LinearConfig) {
      std::set<std::int64_t> distinct(spec.m.begin(), spec.m.end());
      if (distinct.size() != spec.m.size())
        throw StructuralError("linear configuration needs distinct line counts");
      a.assign(spec.m.size(), spec.uniform_multiplicity.value_or(1));
    }
    auto s = line_count_scheme(a, spec.m, spec.field);
    if (!spec.coordinates) {
      for (auto& p : s.scheme.points) p.coords.reset();
      for (auto& l : s.scheme.lines) l.coefficients.reset();
    }
    return {std::move(s.scheme), std::move(s.schedule), std::move(s.warnings)};
  }

  case Family::StarConfig: {
    if (spec.s < 2) throw StructuralError("star configuration needs s >= 2");
    Generated out;
    LineArrangement arr;
    try {
      arr = star_arrangement(static_cast<std::size_t>(spec.s), coords);
    } catch (const PreconditionError& e) {
      arr = star_arrangement(static_cast<std::size_t>(spec.s), std::nullopt);
      arr.field = spec.field;
      out.warnings.push_back(std::string(e.what()) + "; scheme is incidence only");
    }
    GeneratorSpec s = spec;
    s.e.clear();
    auto g = from_arrangement(arr, s, IntersectionKind::Reduced);
    out.scheme = std::move(g.scheme);
    if (!spec.uniform_multiplicity) out.schedule = star_schedule(spec.s, spec.scale);
    return out;
  }

  case Family::Intersections: {
    if (spec.lines.size() < 2) throw StructuralError("intersections need at least two lines");
    return from_arrangement(arrangement_from_lines(spec.lines, spec.field), spec, kind_of(spec));
  }

  case Family::ProjectivePlane: {
    auto arr = projective_plane_arrangement(spec.q);
    std::vector<std::string> warnings;
    if (!spec.coordinates) {
      arr.line_coeffs.reset();
      arr.point_coords.reset();
    } else if (!arr.point_coords) {
      warnings.push_back("no coordinates for non-prime q = " + std::to_string(spec.q) +
                         "; scheme is incidence only");
    }
    if (spec.field != FieldSpec::rationals() && spec.field != arr.field)
      warnings.push_back("projective plane lives over characteristic " +
                         std::to_string(arr.field.characteristic) + "; field request ignored");
    auto out = from_arrangement(arr, spec, kind_of(spec));
    out.warnings = std::move(warnings);
    return out;
  }

  case Family::DualHesse: {
    std::vector<std::string> warnings;
    LineArrangement arr;
    try {
      arr = dual_hesse_arrangement(coords);
    } catch (const PreconditionError& e) {
      arr = dual_hesse_arrangement(std::nullopt);
      arr.field = spec.field;
      warnings.push_back(std::string(e.what()) + "; scheme is incidence only");
    }
    auto out = from_arrangement(arr, spec, kind_of(spec));
    out.warnings = std::move(warnings);
    return out;
  }
  }
  throw StructuralError("unknown family");
}

} // namespace fatpoints
