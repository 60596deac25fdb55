#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "fatpoints/bounds.hpp"
#include "fatpoints/scheme.hpp"

namespace fatpoints {

// ---------------------------------------------------------------------------
// Star operator algebra

/// Entries sorted non-increasingly.
ReductionVector pi(std::span<const std::int64_t> v);
/// Blocks (a_i m_i, (a_i - 1) m_i, ..., m_i) concatenated in order.
ReductionVector circ(std::span<const std::int64_t> a, std::span<const std::int64_t> m);
/// pi(circ(a, m)).
ReductionVector star(std::span<const std::int64_t> a, std::span<const std::int64_t> m);

// ---------------------------------------------------------------------------
// Line count configurations

struct ScheduledScheme {
  FatPointScheme scheme;
  /// Line names whose reduction realizes the intended vector.
  std::vector<std::string> schedule;
  std::vector<std::string> warnings;
};

/// a_1 Z_1 + ... + a_s Z_s with m_i points on line L_i, none at a crossing.
/// The schedule reduces the scheme with vector star(a, m).  Coordinates are
/// attached over Q, or over F_p when p is large enough to keep the points
/// off the other lines.
ScheduledScheme line_count_scheme(std::span<const std::int64_t> a,
                                  std::span<const std::int64_t> m,
                                  FieldSpec field = FieldSpec::rationals());

// ---------------------------------------------------------------------------
// Intersections of lines

using Coeffs = std::array<Rational, 3>;

/// Lines L_0..L_{s-1} and the points lying on two or more of them.
struct LineArrangement {
  std::size_t line_count = 0;
  /// For each point, the sorted indices of the lines through it (>= 2).
  std::vector<std::vector<std::size_t>> points;
  FieldSpec field = FieldSpec::rationals();
  std::optional<std::vector<Coeffs>> line_coeffs;
  std::optional<std::vector<Coeffs>> point_coords;
};

/// Arrangement from explicit incidences.  Pairs of lines not listed together
/// at any point are completed with an ordinary double point.  Throws
/// StructuralError if two lines share more than one listed point.
LineArrangement arrangement_from_incidence(std::size_t line_count,
                                           std::vector<std::vector<std::size_t>> points);

/// Arrangement cut out by explicit distinct lines over the given field.
LineArrangement arrangement_from_lines(const std::vector<Coeffs>& lines, FieldSpec field);

enum class IntersectionKind {
  Full,    ///< Z(D): m_p = sum of e_i over lines through p
  Reduced, ///< Z'(D): m_p - 1, only for reduced D
};

/// scale * Z(D) or scale * Z'(D) for D = sum e_i L_i.
FatPointScheme intersections_scheme(const LineArrangement& arrangement,
                                    std::span<const std::int64_t> e,
                                    IntersectionKind kind = IntersectionKind::Full,
                                    std::int64_t scale = 1);

/// Star configuration of s lines (no three concurrent), optionally with the
/// lines y = kx + k^2, k = 0..s-1, as coordinates over the field.
LineArrangement star_arrangement(std::size_t s, std::optional<FieldSpec> coordinates);

/// All lines of P^2(F_q), q a prime power.  Coordinates only for prime q.
LineArrangement projective_plane_arrangement(std::int64_t q);

/// Nine lines (x^3 - y^3)(y^3 - z^3)(z^3 - x^3) = 0 through twelve points;
/// coordinates when the field has a primitive cube root of unity.
LineArrangement dual_hesse_arrangement(std::optional<FieldSpec> coordinates);

// ---------------------------------------------------------------------------
// Greedy reduction

using LineBudget = std::map<std::string, std::int64_t>;

/// At each step pick the line of largest intersection degree among those with
/// budget left (lowest index on ties).  Stops when the residual is empty or no
/// line with budget meets it; the trace is then not full.
ReductionTrace greedy_reduce(const FatPointScheme& scheme, const LineBudget& budget);

/// Budget max multiplicity on the line, enough to reduce any scheme fully.
LineBudget default_budget(const FatPointScheme& scheme);
/// Budget scale * e_i for the lines of an arrangement scheme.
LineBudget arrangement_budget(const FatPointScheme& scheme, std::span<const std::int64_t> e,
                              std::int64_t scale);

// ---------------------------------------------------------------------------
// Star configurations

/// Strictly decreasing full reduction vector of m Z' for s general lines.
ReductionVector star_multiplicity_vectors(std::int64_t s, std::int64_t m);
/// The explicit line schedule behind star_multiplicity_vectors: L1..Ls
/// repeated floor(m/2) times, then L1..L(s-1) when m is odd.
std::vector<std::string> star_schedule(std::int64_t s, std::int64_t m);

/// Depth-first search for a line sequence with a non-increasing GMS full
/// reduction vector.  Gives up after node_limit expansions.
std::optional<ReductionTrace> search_gms_schedule(const FatPointScheme& scheme,
                                                  std::size_t node_limit = 2'000'000);

// ---------------------------------------------------------------------------
// Generator front end

enum class Family {
  Grid,
  LinearConfig,
  LineCountConfig,
  StarConfig,
  Intersections,
  ProjectivePlane,
  DualHesse,
  ZachExample,
};

std::optional<Family> parse_family(std::string_view name);
std::string_view family_name(Family f);

struct GeneratorSpec {
  Family family = Family::Grid;
  FieldSpec field = FieldSpec::rationals();
  bool coordinates = true;

  // grid
  std::int64_t rows = 3;
  std::int64_t cols = 5;
  /// (vertical index, horizontal index), 1-based; points of multiplicity 2.
  std::vector<std::pair<std::int64_t, std::int64_t>> doubles{{1, 1}, {1, 2}, {2, 3}};

  // line-count / linear configurations
  std::vector<std::int64_t> a;
  std::vector<std::int64_t> m;

  // arrangement families
  std::int64_t s = 5;
  std::int64_t q = 3;
  std::int64_t scale = 1;
  bool primed = false;
  std::vector<std::int64_t> e;
  std::vector<Coeffs> lines;
  /// Overrides every multiplicity of an arrangement scheme.
  std::optional<std::int64_t> uniform_multiplicity;
};

struct Generated {
  FatPointScheme scheme;
  std::vector<std::string> schedule;
  std::vector<std::string> warnings;
};

Generated gen(const GeneratorSpec& spec);

} // namespace fatpoints
