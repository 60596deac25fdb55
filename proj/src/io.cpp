#include "fatpoints/io.hpp"

#include <charconv>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

namespace fatpoints {

namespace {

void only_fields(const Json& obj, std::initializer_list<std::string_view> allowed, std::string_view where) {
  if (!obj.is_object()) throw InputError(std::string(where) + ": expected an object");
  for (const auto& [key, value] : obj.items()) {
    bool ok = false;
    for (auto a : allowed) ok = ok || key == a;
    if (!ok) throw InputError(std::string(where) + ": unknown field \"" + key + "\"");
  }
}

const Json& required(const Json& obj, const char* key, std::string_view where) {
  auto it = obj.find(key);
  if (it == obj.end()) throw InputError(std::string(where) + ": missing field \"" + key + "\"");
  return *it;
}

std::int64_t integer(const Json& v, std::string_view what) {
  if (!v.is_number_integer()) throw InputError(std::string(what) + " must be an integer");
  return v.get<std::int64_t>();
}

std::string string_of(const Json& v, std::string_view what) {
  if (!v.is_string()) throw InputError(std::string(what) + " must be a string");
  return v.get<std::string>();
}

std::vector<Rational> rationals(const Json& v, std::string_view what) {
  if (!v.is_array()) throw InputError(std::string(what) + " must be an array");
  std::vector<Rational> out;
  for (const auto& x : v) {
    if (x.is_number_integer())
      out.emplace_back(x.get<std::int64_t>());
    else if (x.is_string())
      try {
        out.push_back(parse_rational(x.get<std::string>()));
      } catch (const std::exception& e) {
        throw InputError(std::string(what) + ": " + e.what());
      }
    else
      throw InputError(std::string(what) + " entries must be strings");
  }
  return out;
}

Json rational_strings(const std::vector<Rational>& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(to_string(x));
  return out;
}

} // namespace

FatPointScheme scheme_from_json(const Json& doc) {
  only_fields(doc, {"ambient_dim", "field", "points", "lines"}, "scheme");
  FatPointScheme s;
  s.ambient_dim = static_cast<int>(integer(required(doc, "ambient_dim", "scheme"), "ambient_dim"));

  const auto& field = required(doc, "field", "scheme");
  only_fields(field, {"kind", "p"}, "field");
  const auto kind = string_of(required(field, "kind", "field"), "field.kind");
  if (kind == "Q") {
    if (field.contains("p")) throw InputError("field: \"p\" only allowed for Fp");
    s.field = FieldSpec::rationals();
  } else if (kind == "Fp") {
    s.field = FieldSpec::prime(integer(required(field, "p", "field"), "field.p"));
  } else {
    throw InputError("field.kind must be \"Q\" or \"Fp\"");
  }

  const auto& points = required(doc, "points", "scheme");
  if (!points.is_array()) throw InputError("points must be an array");
  std::map<std::string, std::size_t> ids;
  for (const auto& p : points) {
    only_fields(p, {"id", "mult", "coords"}, "point");
    Point pt;
    pt.name = string_of(required(p, "id", "point"), "point.id");
    pt.multiplicity = integer(required(p, "mult", "point " + pt.name), "point.mult");
    if (p.contains("coords")) pt.coords = rationals(p["coords"], "point " + pt.name + " coords");
    if (!ids.emplace(pt.name, s.points.size()).second)
      throw StructuralError("duplicate point id " + pt.name);
    s.points.push_back(std::move(pt));
  }

  const auto& lines = required(doc, "lines", "scheme");
  if (!lines.is_array()) throw InputError("lines must be an array");
  for (const auto& l : lines) {
    only_fields(l, {"name", "points", "coeffs"}, "line");
    NamedLine line;
    line.name = string_of(required(l, "name", "line"), "line.name");
    const auto& inc = required(l, "points", "line " + line.name);
    if (!inc.is_array()) throw InputError("line " + line.name + ": points must be an array");
    for (const auto& id : inc) {
      const auto name = string_of(id, "line point id");
      auto it = ids.find(name);
      if (it == ids.end())
        throw StructuralError("line " + line.name + " refers to unknown point " + name);
      line.incidence.push_back(PointId{it->second});
    }
    if (l.contains("coeffs")) line.coefficients = rationals(l["coeffs"], "line " + line.name + " coeffs");
    s.lines.push_back(std::move(line));
  }
  return s;
}

Json to_json(const FatPointScheme& s) {
  Json doc;
  doc["ambient_dim"] = s.ambient_dim;
  if (s.field.kind == FieldKind::Rationals)
    doc["field"] = Json{{"kind", "Q"}};
  else
    doc["field"] = Json{{"kind", "Fp"}, {"p", s.field.characteristic}};
  doc["points"] = Json::array();
  for (const auto& p : s.points) {
    Json jp{{"id", p.name}, {"mult", p.multiplicity}};
    if (p.coords) jp["coords"] = rational_strings(*p.coords);
    doc["points"].push_back(std::move(jp));
  }
  doc["lines"] = Json::array();
  for (const auto& l : s.lines) {
    Json jl{{"name", l.name}, {"points", Json::array()}};
    for (auto id : l.incidence) jl["points"].push_back(s.points.at(id.value).name);
    if (l.coefficients) jl["coeffs"] = rational_strings(*l.coefficients);
    doc["lines"].push_back(std::move(jl));
  }
  return doc;
}

FatPointScheme read_scheme(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  Json doc;
  try {
    doc = Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw InputError(path + ": " + e.what());
  }
  return scheme_from_json(doc);
}

std::string dump_scheme(const FatPointScheme& scheme) { return to_json(scheme).dump(2) + "\n"; }

std::string join(const std::vector<std::int64_t>& v, std::string_view sep) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += sep;
    out += std::to_string(v[i]);
  }
  return out;
}

std::string format_sequence(const HilbertSequence& h) { return join(h.prefix()) + ",…"; }

Json to_json(const HilbertSequence& h) { return Json{{"prefix", h.prefix()}, {"stable", h.stable()}}; }

std::vector<std::int64_t> parse_naturals(std::string_view text) {
  std::vector<std::int64_t> out;
  if (text.empty()) return out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto end = text.find(',', pos);
    if (end == std::string_view::npos) end = text.size();
    const auto item = text.substr(pos, end - pos);
    std::int64_t v = 0;
    auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), v);
    if (item.empty() || ec != std::errc{} || ptr != item.data() + item.size() || v < 0)
      throw InputError("not a list of naturals: " + std::string(text));
    out.push_back(v);
    pos = end + 1;
  }
  return out;
}

std::vector<std::string> parse_names(std::string_view text) {
  std::vector<std::string> out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto end = text.find(',', pos);
    if (end == std::string_view::npos) end = text.size();
    if (end == pos) throw InputError("empty name in list: " + std::string(text));
    out.emplace_back(text.substr(pos, end - pos));
    pos = end + 1;
  }
  return out;
}

std::string betti_tsv(const BettiBounds& b) {
  std::ostringstream out;
  out << "t\tnu_lo\tnu_hi\tsigma_lo\tsigma_hi\n";
  for (const auto& [t, nu] : b.nu) {
    const auto& sg = b.sigma.at(t);
    out << t << '\t' << nu.lo << '\t' << nu.hi << '\t' << sg.lo << '\t' << sg.hi << '\n';
  }
  return out.str();
}

Json to_json(const BettiBounds& b) {
  Json rows = Json::array();
  for (const auto& [t, nu] : b.nu) {
    const auto& sg = b.sigma.at(t);
    rows.push_back(Json{{"t", t}, {"nu_lo", nu.lo}, {"nu_hi", nu.hi}, {"sigma_lo", sg.lo}, {"sigma_hi", sg.hi}});
  }
  return Json{{"alpha", b.alpha}, {"reg", b.reg}, {"exact", b.exact}, {"rows", rows}};
}

Json to_json(const ReductionTrace& trace) {
  Json steps = Json::array();
  for (const auto& s : trace.steps)
    steps.push_back(Json{{"line", s.line}, {"degree", s.degree}, {"multiplicities", s.multiplicities}});
  return Json{{"initial_degree", trace.initial_degree},
              {"steps", steps},
              {"vector", trace.vector},
              {"full", trace.full},
              {"warnings", trace.warnings}};
}

} // namespace fatpoints
