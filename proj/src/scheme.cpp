#include "fatpoints/scheme.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "fatpoints/bounds.hpp"

namespace fatpoints {

bool NamedLine::contains(PointId id) const {
  return std::find(incidence.begin(), incidence.end(), id) != incidence.end();
}

std::vector<std::int64_t> FatPointScheme::multiplicities() const {
  std::vector<std::int64_t> out;
  out.reserve(points.size());
  for (const auto& p : points) out.push_back(p.multiplicity);
  return out;
}

FatPointScheme FatPointScheme::with_multiplicities(std::span<const std::int64_t> mults) const {
  if (mults.size() != points.size())
    throw StructuralError("multiplicity vector has wrong length");
  FatPointScheme out = *this;
  for (std::size_t i = 0; i < mults.size(); ++i) out.points[i].multiplicity = mults[i];
  return out;
}

const NamedLine* FatPointScheme::find_line(std::string_view name) const {
  for (const auto& l : lines)
    if (l.name == name) return &l;
  return nullptr;
}

std::optional<PointId> FatPointScheme::find_point(std::string_view name) const {
  for (std::size_t i = 0; i < points.size(); ++i)
    if (points[i].name == name) return PointId{i};
  return std::nullopt;
}

bool FatPointScheme::has_all_coords() const {
  return std::all_of(points.begin(), points.end(),
                     [](const Point& p) { return p.multiplicity == 0 || p.coords.has_value(); });
}

std::int64_t point_degree(std::int64_t multiplicity, int ambient_dim) {
  return binom(multiplicity + ambient_dim - 1, ambient_dim);
}

std::int64_t degree(std::span<const std::int64_t> mults, int ambient_dim) {
  std::int64_t total = 0;
  for (auto m : mults) total += point_degree(m, ambient_dim);
  return total;
}

std::int64_t degree(const FatPointScheme& scheme) {
  return degree(scheme.multiplicities(), scheme.ambient_dim);
}

namespace {

void check_incidence(std::size_t npoints, const NamedLine& line) {
  for (auto id : line.incidence)
    if (id.value >= npoints)
      throw StructuralError("line " + line.name + " refers to unknown point index " +
                            std::to_string(id.value));
}

} // namespace

std::int64_t intersection_degree(std::span<const std::int64_t> mults, const NamedLine& line,
                                 int ambient_dim) {
  check_incidence(mults.size(), line);
  std::int64_t d = 0;
  for (auto id : line.incidence) d += binom(mults[id.value] + ambient_dim - 2, ambient_dim - 1);
  return d;
}

void apply_residual(std::vector<std::int64_t>& mults, const NamedLine& line) {
  check_incidence(mults.size(), line);
  for (auto id : line.incidence) mults[id.value] = std::max<std::int64_t>(mults[id.value] - 1, 0);
}

Residual residual(const FatPointScheme& scheme, const NamedLine& line) {
  auto mults = scheme.multiplicities();
  const auto d = intersection_degree(mults, line, scheme.ambient_dim);
  apply_residual(mults, line);
  return {scheme.with_multiplicities(mults), d};
}

std::vector<std::int64_t> ReductionTrace::residual_degrees() const {
  std::vector<std::int64_t> out{initial_degree};
  for (auto d : vector) out.push_back(out.back() - d);
  return out;
}

TraceBuilder::TraceBuilder(const FatPointScheme& scheme)
    : ambient_dim_(scheme.ambient_dim), mults_(scheme.multiplicities()) {
  trace_.initial_degree = degree(mults_, ambient_dim_);
}

std::int64_t TraceBuilder::degree_along(const NamedLine& line) const {
  return intersection_degree(mults_, line, ambient_dim_);
}

void TraceBuilder::step(const NamedLine& line) {
  const auto d = degree_along(line);
  apply_residual(mults_, line);
  if (d == 0)
    trace_.warnings.push_back("step " + std::to_string(trace_.steps.size() + 1) + " (" +
                              line.name + ") is a null step: the line misses the residual");
  trace_.steps.push_back({line.name, d, mults_});
  trace_.vector.push_back(d);
}

ReductionTrace TraceBuilder::finish() && {
  trace_.full = std::all_of(mults_.begin(), mults_.end(), [](auto m) { return m == 0; });
  return std::move(trace_);
}

ReductionTrace reduce(const FatPointScheme& scheme, std::span<const std::string> line_names) {
  TraceBuilder builder(scheme);
  for (const auto& name : line_names) {
    const NamedLine* line = scheme.find_line(name);
    if (line == nullptr) throw StructuralError("unknown line name: " + name);
    builder.step(*line);
  }
  return std::move(builder).finish();
}

std::string_view to_string(Violation::Kind kind) {
  using K = Violation::Kind;
  switch (kind) {
  case K::AmbientDimension: return "ambient-dimension";
  case K::InvalidField: return "invalid-field";
  case K::NegativeMultiplicity: return "negative-multiplicity";
  case K::DuplicatePointName: return "duplicate-point-id";
  case K::DuplicateLineName: return "duplicate-line-name";
  case K::UnknownPoint: return "unknown-point";
  case K::DuplicateIncidence: return "duplicate-incidence";
  case K::LinesShareTwoPoints: return "lines-share-two-points";
  case K::CoordinateLength: return "coordinate-length";
  case K::ZeroCoordinates: return "zero-coordinates";
  case K::CoordinateOutsideField: return "coordinate-outside-field";
  case K::DuplicatePointCoordinates: return "duplicate-point-coordinates";
  case K::CoefficientLength: return "coefficient-length";
  case K::ZeroCoefficients: return "zero-coefficients";
  case K::LineMaximality: return "line-maximality";
  case K::NonCollinear: return "non-collinear";
  }
  return "unknown";
}

namespace {

using Kind = Violation::Kind;

template <typename Field>
class GeometryCheck {
public:
  using Scalar = typename Field::Scalar;

  GeometryCheck(const FatPointScheme& s, Field f, std::vector<Violation>& out)
      : scheme_(s), field_(f), out_(out) {}

  void run() {
    const std::size_t width = static_cast<std::size_t>(scheme_.ambient_dim) + 1;
    std::vector<std::optional<std::vector<Scalar>>> coords(scheme_.points.size());
    for (std::size_t i = 0; i < scheme_.points.size(); ++i) {
      const auto& p = scheme_.points[i];
      if (!p.coords) continue;
      if (p.coords->size() != width) {
        out_.push_back({Kind::CoordinateLength,
                        "point " + p.name + " needs " + std::to_string(width) + " coordinates",
                        {p.name}});
        continue;
      }
      auto v = convert(*p.coords, p.name);
      if (!v) continue;
      if (all_zero(*v)) {
        out_.push_back({Kind::ZeroCoordinates, "point " + p.name + " has all-zero coordinates",
                        {p.name}});
        continue;
      }
      coords[i] = std::move(v);
    }

    for (std::size_t i = 0; i < coords.size(); ++i)
      for (std::size_t j = i + 1; j < coords.size(); ++j)
        if (coords[i] && coords[j] && proportional(*coords[i], *coords[j]))
          out_.push_back({Kind::DuplicatePointCoordinates,
                          "points " + scheme_.points[i].name + " and " + scheme_.points[j].name +
                              " have proportional coordinates",
                          {scheme_.points[i].name, scheme_.points[j].name}});

    for (const auto& line : scheme_.lines) {
      if (std::any_of(line.incidence.begin(), line.incidence.end(),
                      [&](PointId id) { return id.value >= scheme_.points.size(); }))
        continue; // reported structurally
      if (line.coefficients) check_coefficients(line, coords, width);
      if (scheme_.ambient_dim == 2) {
        check_collinear(line, coords);
        if (!line.coefficients) check_spanned(line, coords);
      }
    }
  }

private:
  std::optional<std::vector<Scalar>> convert(const std::vector<Rational>& xs,
                                             const std::string& owner) {
    std::vector<Scalar> v;
    v.reserve(xs.size());
    try {
      for (const auto& x : xs) v.push_back(field_.from(x));
    } catch (const StructuralError& e) {
      out_.push_back({Kind::CoordinateOutsideField, owner + ": " + e.what(), {owner}});
      return std::nullopt;
    }
    return v;
  }

  bool all_zero(const std::vector<Scalar>& v) const {
    return std::all_of(v.begin(), v.end(), [](const Scalar& x) { return Field::is_zero(x); });
  }

  bool proportional(const std::vector<Scalar>& a, const std::vector<Scalar>& b) const {
    for (std::size_t i = 0; i < a.size(); ++i)
      for (std::size_t j = i + 1; j < a.size(); ++j)
        if (!Field::is_zero(field_.sub(field_.mul(a[i], b[j]), field_.mul(a[j], b[i]))))
          return false;
    return true;
  }

  Scalar dot(const std::vector<Scalar>& a, const std::vector<Scalar>& b) const {
    Scalar s = Field::zero();
    for (std::size_t i = 0; i < a.size(); ++i) s = field_.add(s, field_.mul(a[i], b[i]));
    return s;
  }

  void check_coefficients(const NamedLine& line,
                          const std::vector<std::optional<std::vector<Scalar>>>& coords,
                          std::size_t width) {
    if (line.coefficients->size() != width) {
      out_.push_back({Kind::CoefficientLength,
                      "line " + line.name + " needs " + std::to_string(width) + " coefficients",
                      {line.name}});
      return;
    }
    auto c = convert(*line.coefficients, line.name);
    if (!c) return;
    if (all_zero(*c)) {
      out_.push_back(
          {Kind::ZeroCoefficients, "line " + line.name + " has all-zero coefficients", {line.name}});
      return;
    }
    for (std::size_t i = 0; i < coords.size(); ++i) {
      if (!coords[i]) continue;
      const bool on_line = Field::is_zero(dot(*c, *coords[i]));
      const bool listed = line.contains(PointId{i});
      if (on_line != listed)
        out_.push_back({Kind::LineMaximality,
                        "point " + scheme_.points[i].name +
                            (on_line ? " lies on line " + line.name + " but is not listed"
                                     : " is listed on line " + line.name + " but does not lie on it"),
                        {line.name, scheme_.points[i].name}});
    }
  }

  void check_collinear(const NamedLine& line,
                       const std::vector<std::optional<std::vector<Scalar>>>& coords) {
    std::vector<std::size_t> located;
    for (auto id : line.incidence)
      if (coords[id.value]) located.push_back(id.value);
    for (std::size_t a = 0; a < located.size(); ++a)
      for (std::size_t b = a + 1; b < located.size(); ++b)
        for (std::size_t c = b + 1; c < located.size(); ++c) {
          const auto& p = *coords[located[a]];
          const auto& q = *coords[located[b]];
          const auto& r = *coords[located[c]];
          if (!Field::is_zero(det3(p, q, r)))
            out_.push_back({Kind::NonCollinear,
                            "points on line " + line.name + " are not collinear",
                            {line.name, scheme_.points[located[a]].name,
                             scheme_.points[located[b]].name, scheme_.points[located[c]].name}});
        }
  }

  // Without coefficients, the line is spanned by its first two located points.
  void check_spanned(const NamedLine& line,
                     const std::vector<std::optional<std::vector<Scalar>>>& coords) {
    std::vector<std::size_t> located;
    for (auto id : line.incidence)
      if (coords[id.value]) located.push_back(id.value);
    if (located.size() < 2) return;
    const auto& p = *coords[located[0]];
    const auto& q = *coords[located[1]];
    for (std::size_t i = 0; i < coords.size(); ++i) {
      if (!coords[i] || line.contains(PointId{i})) continue;
      if (Field::is_zero(det3(p, q, *coords[i])))
        out_.push_back({Kind::LineMaximality,
                        "point " + scheme_.points[i].name + " lies on line " + line.name +
                            " but is not listed",
                        {line.name, scheme_.points[i].name}});
    }
  }

  Scalar det3(const std::vector<Scalar>& p, const std::vector<Scalar>& q,
              const std::vector<Scalar>& r) const {
    auto minor = [&](int i, int j) {
      return field_.sub(field_.mul(q[i], r[j]), field_.mul(q[j], r[i]));
    };
    Scalar s = field_.mul(p[0], minor(1, 2));
    s = field_.sub(s, field_.mul(p[1], minor(0, 2)));
    return field_.add(s, field_.mul(p[2], minor(0, 1)));
  }

  const FatPointScheme& scheme_;
  Field field_;
  std::vector<Violation>& out_;
};

} // namespace

std::vector<Violation> validate(const FatPointScheme& scheme) {
  std::vector<Violation> out;
  if (scheme.ambient_dim < 2)
    out.push_back({Kind::AmbientDimension, "ambient dimension must be at least 2", {}});
  const bool field_ok = scheme.field.valid();
  if (!field_ok)
    out.push_back({Kind::InvalidField,
                   "characteristic " + std::to_string(scheme.field.characteristic) +
                       " is neither 0 (for Q) nor a prime",
                   {}});

  std::set<std::string> seen;
  for (const auto& p : scheme.points) {
    if (!seen.insert(p.name).second)
      out.push_back({Kind::DuplicatePointName, "duplicate point id " + p.name, {p.name}});
    if (p.multiplicity < 0)
      out.push_back({Kind::NegativeMultiplicity, "point " + p.name + " has negative multiplicity",
                     {p.name}});
  }

  std::set<std::string> line_names;
  for (const auto& l : scheme.lines) {
    if (!line_names.insert(l.name).second)
      out.push_back({Kind::DuplicateLineName, "duplicate line name " + l.name, {l.name}});
    std::set<std::size_t> members;
    for (auto id : l.incidence) {
      if (id.value >= scheme.points.size()) {
        out.push_back({Kind::UnknownPoint,
                       "line " + l.name + " refers to unknown point index " +
                           std::to_string(id.value),
                       {l.name}});
      } else if (!members.insert(id.value).second) {
        out.push_back({Kind::DuplicateIncidence,
                       "line " + l.name + " lists point " + scheme.points[id.value].name + " twice",
                       {l.name, scheme.points[id.value].name}});
      }
    }
  }

  if (scheme.ambient_dim == 2) {
    for (std::size_t a = 0; a < scheme.lines.size(); ++a)
      for (std::size_t b = a + 1; b < scheme.lines.size(); ++b) {
        std::vector<std::string> shared;
        for (auto id : scheme.lines[a].incidence)
          if (id.value < scheme.points.size() && scheme.lines[b].contains(id))
            shared.push_back(scheme.points[id.value].name);
        if (shared.size() > 1) {
          std::vector<std::string> ids{scheme.lines[a].name, scheme.lines[b].name};
          ids.insert(ids.end(), shared.begin(), shared.end());
          out.push_back({Kind::LinesShareTwoPoints,
                         "lines " + scheme.lines[a].name + " and " + scheme.lines[b].name +
                             " share " + std::to_string(shared.size()) + " points",
                         std::move(ids)});
        }
      }
  }

  if (field_ok && scheme.ambient_dim >= 2)
    visit_field(scheme.field, [&](auto field) {
      GeometryCheck<decltype(field)>(scheme, field, out).run();
    });
  return out;
}

} // namespace fatpoints
