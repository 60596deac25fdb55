#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "fatpoints/field.hpp"

namespace fatpoints {

/// Position of a point inside its scheme's point list.
struct PointId {
  std::size_t value = 0;
  friend auto operator<=>(const PointId&, const PointId&) = default;
};

struct Point {
  std::string name;
  std::int64_t multiplicity = 0;
  /// Homogeneous coordinates, ambient_dim + 1 entries.
  std::optional<std::vector<Rational>> coords;
};

/// A line (a hyperplane when ambient_dim > 2) given by the scheme points it
/// contains, optionally with the coefficients of its defining linear form.
struct NamedLine {
  std::string name;
  std::vector<PointId> incidence;
  std::optional<std::vector<Rational>> coefficients;

  bool contains(PointId id) const;
};

using ReductionVector = std::vector<std::int64_t>;

struct FatPointScheme {
  int ambient_dim = 2;
  FieldSpec field = FieldSpec::rationals();
  std::vector<Point> points;
  std::vector<NamedLine> lines;

  std::vector<std::int64_t> multiplicities() const;
  /// Copy with the multiplicities replaced (same points, lines and coordinates).
  FatPointScheme with_multiplicities(std::span<const std::int64_t> mults) const;

  const NamedLine* find_line(std::string_view name) const;
  std::optional<PointId> find_point(std::string_view name) const;
  bool has_all_coords() const;
};

/// deg of a fat point of multiplicity m in P^N: binom(m + N - 1, N).
std::int64_t point_degree(std::int64_t multiplicity, int ambient_dim);

std::int64_t degree(const FatPointScheme& scheme);
std::int64_t degree(std::span<const std::int64_t> mults, int ambient_dim);

/// deg(L ∩ A) for the multiplicity vector of A.  For N = 2 this is the sum of
/// the multiplicities on the line; in general each point contributes
/// binom(a + N - 2, N - 1).
std::int64_t intersection_degree(std::span<const std::int64_t> mults, const NamedLine& line,
                                 int ambient_dim);

/// Lowers every positive multiplicity on the line by one, in place.
void apply_residual(std::vector<std::int64_t>& mults, const NamedLine& line);

struct Residual {
  FatPointScheme scheme;
  std::int64_t degree = 0;
};

/// A:L together with deg(L ∩ A).  Throws StructuralError if the line refers to
/// points outside the scheme.
Residual residual(const FatPointScheme& scheme, const NamedLine& line);

struct ReductionStep {
  std::string line;
  std::int64_t degree = 0;
  /// Multiplicities of the residual after this step.
  std::vector<std::int64_t> multiplicities;
};

struct ReductionTrace {
  std::int64_t initial_degree = 0;
  std::vector<ReductionStep> steps;
  ReductionVector vector;
  bool full = false;
  /// One entry per zero-degree (null) step.
  std::vector<std::string> warnings;

  /// deg(A_0), ..., deg(A_{n+1}).
  std::vector<std::int64_t> residual_degrees() const;
};

/// Iterated residuals along the named lines.
ReductionTrace reduce(const FatPointScheme& scheme, std::span<const std::string> line_names);

/// Builds a trace step by step; shared by reduce() and the greedy reducer.
class TraceBuilder {
public:
  explicit TraceBuilder(const FatPointScheme& scheme);

  const std::vector<std::int64_t>& current() const { return mults_; }
  std::int64_t degree_along(const NamedLine& line) const;
  void step(const NamedLine& line);
  ReductionTrace finish() &&;

private:
  int ambient_dim_;
  std::vector<std::int64_t> mults_;
  ReductionTrace trace_;
};

struct Violation {
  enum class Kind {
    AmbientDimension,
    InvalidField,
    NegativeMultiplicity,
    DuplicatePointName,
    DuplicateLineName,
    UnknownPoint,
    DuplicateIncidence,
    LinesShareTwoPoints,
    CoordinateLength,
    ZeroCoordinates,
    CoordinateOutsideField,
    DuplicatePointCoordinates,
    CoefficientLength,
    ZeroCoefficients,
    LineMaximality,
    NonCollinear,
  };
  Kind kind;
  std::string message;
  std::vector<std::string> ids;
};

std::string_view to_string(Violation::Kind kind);

/// Every violated scheme invariant; empty means valid.
std::vector<Violation> validate(const FatPointScheme& scheme);

} // namespace fatpoints
