// fatpoints: command line front end.
//
//   fatpoints gen --family star-config --s 5 --m 3 > star.json
//   fatpoints reduce --scheme star.json --greedy
//   fatpoints bounds --vector 6,6,6,2,1
//   fatpoints gms --vector 3,3,2,2
//   fatpoints betti --vector 12,11,10,9,8,4,3,2,1
//   fatpoints hilbert --scheme star.json --max-degree 12
//   fatpoints check --scheme star.json --greedy

#include <CLI11.hpp>

#include <algorithm>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "fatpoints/betti.hpp"
#include "fatpoints/bounds.hpp"
#include "fatpoints/configs.hpp"
#include "fatpoints/io.hpp"
#include "fatpoints/oracle.hpp"
#include "fatpoints/scheme.hpp"

using namespace fatpoints;

namespace {

enum Exit { Ok = 0, BadInput = 2, Precondition = 3, SandwichFail = 4 };

struct Options {
  // shared
  std::string scheme_path;
  std::string lines;
  bool greedy = false;
  std::string budget;
  std::string vector;
  bool json = false;
  std::optional<std::int64_t> max_degree;

  // gen
  std::string family;
  std::string field = "Q";
  std::int64_t p = 0;
  bool no_coords = false;
  std::optional<std::int64_t> rows, cols, s, q, mult;
  std::string doubles, a, m, e, line_coeffs;
  bool primed = false;
};

FatPointScheme load_valid(const std::string& path) {
  auto scheme = read_scheme(path);
  const auto violations = validate(scheme);
  if (!violations.empty()) {
    std::string msg = "invalid scheme";
    for (const auto& v : violations) msg += "\n  " + std::string(to_string(v.kind)) + ": " + v.message;
    throw StructuralError(msg);
  }
  return scheme;
}

LineBudget parse_budget(const std::string& text) {
  LineBudget out;
  for (const auto& item : parse_names(text)) {
    const auto eq = item.find('=');
    if (eq == std::string::npos) throw InputError("budget entries look like L1=2: " + item);
    const auto k = parse_naturals(item.substr(eq + 1));
    if (k.size() != 1) throw InputError("budget entries look like L1=2: " + item);
    out[item.substr(0, eq)] = k[0];
  }
  return out;
}

ReductionTrace trace_from(const FatPointScheme& scheme, const Options& o) {
  if (o.greedy == !o.lines.empty()) throw InputError("give exactly one of --lines and --greedy");
  if (o.greedy) return greedy_reduce(scheme, o.budget.empty() ? default_budget(scheme) : parse_budget(o.budget));
  const auto names = parse_names(o.lines);
  return reduce(scheme, names);
}

void warn(const std::vector<std::string>& warnings) {
  for (const auto& w : warnings) std::cerr << "warning: " << w << '\n';
}

ReductionVector full_vector(const FatPointScheme& scheme, const Options& o) {
  auto trace = trace_from(scheme, o);
  warn(trace.warnings);
  if (!trace.full) throw PreconditionError("the line sequence does not reduce the scheme fully");
  return trace.vector;
}

FieldSpec field_of(const Options& o) {
  if (o.field == "Q") return FieldSpec::rationals();
  if (o.field == "Fp") {
    const auto f = FieldSpec::prime(o.p);
    if (!f.valid()) throw InputError("--p must be a prime below 2^31");
    return f;
  }
  throw InputError("--field must be Q or Fp");
}

std::vector<Coeffs> parse_lines(const std::string& text) {
  std::vector<Coeffs> out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto end = text.find(';', pos);
    if (end == std::string::npos) end = text.size();
    std::vector<Rational> c;
    std::size_t q = pos;
    while (q <= end) {
      auto comma = text.find(',', q);
      if (comma == std::string::npos || comma > end) comma = end;
      try {
        c.push_back(parse_rational(text.substr(q, comma - q)));
      } catch (const std::exception& e) {
        throw InputError(std::string("--line-coeffs: ") + e.what());
      }
      q = comma + 1;
    }
    if (c.size() != 3) throw InputError("--line-coeffs: each line needs three coefficients");
    out.push_back({c[0], c[1], c[2]});
    pos = end + 1;
  }
  return out;
}

int run_gen(const Options& o) {
  const auto family = parse_family(o.family);
  if (!family) throw InputError("unknown family: " + o.family);
  GeneratorSpec spec;
  spec.family = *family;
  spec.field = field_of(o);
  spec.coordinates = !o.no_coords;
  if (o.rows) spec.rows = *o.rows;
  if (o.cols) spec.cols = *o.cols;
  if (!o.doubles.empty()) {
    spec.doubles.clear();
    for (const auto& item : parse_names(o.doubles)) {
      const auto colon = item.find(':');
      if (colon == std::string::npos) throw InputError("--doubles entries look like V:H, e.g. 1:2");
      const auto v = parse_naturals(item.substr(0, colon));
      const auto h = parse_naturals(item.substr(colon + 1));
      if (v.size() != 1 || h.size() != 1) throw InputError("--doubles entries look like V:H");
      spec.doubles.emplace_back(v[0], h[0]);
    }
  }
  if (o.s) spec.s = *o.s;
  if (o.q) spec.q = *o.q;
  spec.a = parse_naturals(o.a);
  const auto m = parse_naturals(o.m);
  if (spec.family == Family::LinearConfig || spec.family == Family::LineCountConfig) {
    spec.m = m;
  } else if (!m.empty()) {
    if (m.size() != 1) throw InputError("--m takes a single scale for this family");
    spec.scale = m[0];
  }
  spec.e = parse_naturals(o.e);
  spec.primed = o.primed || spec.family == Family::StarConfig;
  if (!o.line_coeffs.empty()) spec.lines = parse_lines(o.line_coeffs);
  spec.uniform_multiplicity = o.mult;

  auto g = gen(spec);
  warn(g.warnings);
  if (!g.schedule.empty()) {
    std::string sched;
    for (const auto& n : g.schedule) sched += (sched.empty() ? "" : ",") + n;
    std::cerr << "schedule: " << sched << '\n';
  }
  std::cout << dump_scheme(g.scheme);
  return Ok;
}

int run_reduce(const Options& o) {
  const auto scheme = load_valid(o.scheme_path);
  const auto trace = trace_from(scheme, o);
  warn(trace.warnings);
  if (o.json) {
    std::cout << to_json(trace).dump(2) << '\n';
    return Ok;
  }
  std::cout << "step\tline\tdegree\tresidual_degree\n";
  const auto degs = trace.residual_degrees();
  for (std::size_t i = 0; i < trace.steps.size(); ++i)
    std::cout << i + 1 << '\t' << trace.steps[i].line << '\t' << trace.steps[i].degree << '\t'
              << degs[i + 1] << '\n';
  std::cout << "vector: " << join(trace.vector) << '\n';
  std::cout << "full: " << (trace.full ? "true" : "false") << '\n';
  return Ok;
}

ReductionVector vector_or_scheme(const Options& o) {
  if (!o.vector.empty()) {
    if (!o.scheme_path.empty()) throw InputError("give either --vector or --scheme");
    return parse_naturals(o.vector);
  }
  if (o.scheme_path.empty()) throw InputError("give --vector or --scheme");
  return full_vector(load_valid(o.scheme_path), o);
}

int run_bounds(const Options& o) {
  const auto v = vector_or_scheme(o);
  const auto f = f_lower(v);
  const auto F = F_upper(v);
  if (o.json) {
    std::cout << Json{{"vector", v}, {"f", to_json(f)}, {"F", to_json(F)}}.dump(2) << '\n';
    return Ok;
  }
  std::cout << "f: " << format_sequence(f) << '\n';
  std::cout << "F: " << format_sequence(F) << '\n';
  return Ok;
}

int run_gms(const Options& o) {
  const auto v = parse_naturals(o.vector);
  const bool ok = is_gms(v);
  Json out{{"gms", ok}};
  std::string text = ok ? "true" : "false";
  if (!ok) {
    if (is_non_increasing(v)) {
      const auto span = *gms_forbidden_pattern(v);
      std::vector<std::int64_t> pattern(v.begin() + span.first, v.begin() + span.second + 1);
      text += ": pattern (" + join(pattern) + ") at positions " + std::to_string(span.first + 1) + ".." +
              std::to_string(span.second + 1);
      out["pattern"] = {span.first + 1, span.second + 1};
    } else {
      const auto pair = *gms_violation(v);
      text += ": pair (" + std::to_string(pair.first) + "," + std::to_string(pair.second) + ")";
      out["pair"] = {pair.first, pair.second};
    }
  }
  if (o.json)
    std::cout << out.dump(2) << '\n';
  else
    std::cout << text << '\n';
  return Ok;
}

int run_betti(const Options& o) {
  const auto v = parse_naturals(o.vector);
  const auto table = betti_table(v);
  if (o.json)
    std::cout << to_json(table).dump(2) << '\n';
  else
    std::cout << betti_tsv(table);
  return Ok;
}

int run_hilbert(const Options& o) {
  const auto scheme = load_valid(o.scheme_path);
  const auto cap = o.max_degree.value_or(std::min<std::int64_t>(degree(scheme), 64));
  const auto values = hilbert_oracle_values(scheme, cap);
  if (o.json) {
    std::cout << Json{{"degree", degree(scheme)}, {"h", values}}.dump(2) << '\n';
    return Ok;
  }
  std::cout << "t\th\th_I\n";
  for (std::size_t t = 0; t < values.size(); ++t)
    std::cout << t << '\t' << values[t] << '\t' << binom(t + 2, 2) - values[t] << '\n';
  if (!values.empty() && values.back() == degree(scheme))
    std::cout << "stable: " << values.back() << '\n';
  return Ok;
}

int run_check(const Options& o) {
  const auto scheme = load_valid(o.scheme_path);
  const auto v = full_vector(scheme, o);
  const auto f = f_lower(v);
  const auto F = F_upper(v);
  auto last = static_cast<std::int64_t>(f.prefix().size()) - 1;
  if (o.max_degree) last = *o.max_degree;
  bool pass = true;
  Json rows = Json::array();
  if (!o.json) std::cout << "t\tf\th\tF\tverdict\n";
  for (std::int64_t t = 0; t <= last; ++t) {
    const auto h = hilbert_oracle(scheme, t);
    const bool ok = f(t) <= h && h <= F(t);
    pass = pass && ok;
    if (o.json)
      rows.push_back(Json{{"t", t}, {"f", f(t)}, {"h", h}, {"F", F(t)}, {"pass", ok}});
    else
      std::cout << t << '\t' << f(t) << '\t' << h << '\t' << F(t) << '\t' << (ok ? "PASS" : "FAIL") << '\n';
  }
  if (o.json)
    std::cout << Json{{"vector", v}, {"rows", rows}, {"pass", pass}}.dump(2) << '\n';
  else
    std::cout << "vector: " << join(v) << "\nsandwich: " << (pass ? "PASS" : "FAIL") << '\n';
  return pass ? Ok : SandwichFail;
}

void scheme_reduction_flags(CLI::App* cmd, Options& o) {
  cmd->add_option("--lines", o.lines, "comma-separated line names");
  cmd->add_flag("--greedy", o.greedy, "greedy reduction");
  cmd->add_option("--budget", o.budget, "greedy budget, e.g. L1=2,L2=1");
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hilbert function bounds for fat points in the plane"};
  app.require_subcommand(1);
  Options o;

  auto* gen_cmd = app.add_subcommand("gen", "write a generated scheme as JSON");
  gen_cmd->add_option("--family", o.family,
                      "grid, linear-config, line-count-config, star-config, intersections, "
                      "projective-plane-fq, dual-hesse, zach-example")
      ->required();
  gen_cmd->add_option("--field", o.field, "Q or Fp");
  gen_cmd->add_option("--p", o.p, "characteristic for --field Fp");
  gen_cmd->add_flag("--no-coords", o.no_coords, "incidence data only");
  gen_cmd->add_option("--rows", o.rows);
  gen_cmd->add_option("--cols", o.cols);
  gen_cmd->add_option("--doubles", o.doubles, "double points V:H, e.g. 1:1,1:2,2:3");
  gen_cmd->add_option("--a", o.a, "multiplicities per line");
  gen_cmd->add_option("--m", o.m, "points per line, or the scale m");
  gen_cmd->add_option("--s", o.s, "number of lines");
  gen_cmd->add_option("--q", o.q, "order of the finite plane");
  gen_cmd->add_option("--e", o.e, "line multiplicities e_i");
  gen_cmd->add_flag("--primed", o.primed, "Z'(D) instead of Z(D)");
  gen_cmd->add_option("--line-coeffs", o.line_coeffs, "a,b,c;a,b,c;...");
  gen_cmd->add_option("--mult", o.mult, "uniform point multiplicity");

  auto* reduce_cmd = app.add_subcommand("reduce", "reduce a scheme along lines");
  reduce_cmd->add_option("--scheme", o.scheme_path)->required();
  scheme_reduction_flags(reduce_cmd, o);
  reduce_cmd->add_flag("--json", o.json);

  auto* bounds_cmd = app.add_subcommand("bounds", "lower and upper Hilbert function bounds");
  bounds_cmd->add_option("--vector", o.vector);
  bounds_cmd->add_option("--scheme", o.scheme_path);
  scheme_reduction_flags(bounds_cmd, o);
  bounds_cmd->add_flag("--json", o.json);

  auto* gms_cmd = app.add_subcommand("gms", "GMS test");
  gms_cmd->add_option("--vector", o.vector)->required();
  gms_cmd->add_flag("--json", o.json);

  auto* betti_cmd = app.add_subcommand("betti", "graded Betti number bounds");
  betti_cmd->add_option("--vector", o.vector)->required();
  betti_cmd->add_flag("--json", o.json);

  auto* hilbert_cmd = app.add_subcommand("hilbert", "exact Hilbert function");
  hilbert_cmd->add_option("--scheme", o.scheme_path)->required();
  hilbert_cmd->add_option("--max-degree", o.max_degree);
  hilbert_cmd->add_flag("--json", o.json);

  auto* check_cmd = app.add_subcommand("check", "compare bounds against the exact Hilbert function");
  check_cmd->add_option("--scheme", o.scheme_path)->required();
  scheme_reduction_flags(check_cmd, o);
  check_cmd->add_option("--max-degree", o.max_degree);
  check_cmd->add_flag("--json", o.json);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? Ok : BadInput;
  }

  try {
    if (*gen_cmd) return run_gen(o);
    if (*reduce_cmd) return run_reduce(o);
    if (*bounds_cmd) return run_bounds(o);
    if (*gms_cmd) return run_gms(o);
    if (*betti_cmd) return run_betti(o);
    if (*hilbert_cmd) return run_hilbert(o);
    if (*check_cmd) return run_check(o);
  } catch (const PreconditionError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return Precondition;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return BadInput;
  }
  return BadInput;
}
