#include "bmsa/io.hpp"

#include <algorithm>

#include <json.hpp>

namespace bmsa {

using nlohmann::json;

namespace {

json parse_json(const std::string& text) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded()) throw Error(Errc::ParseError, "malformed JSON");
  return j;
}

Point point_from(const json& j) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number_integer() || !j[1].is_number_integer())
    throw Error(Errc::ParseError, "expected an integer pair");
  return {j[0].get<int>(), j[1].get<int>()};
}

json point_to(Point p) { return json::array({p.x, p.y}); }

std::string poly_set(const Field& F, const std::vector<BivariatePoly>& polys) {
  std::string out = "{";
  for (std::size_t i = 0; i < polys.size(); ++i) {
    if (i) out += ", ";
    out += format_poly(F, polys[i]);
  }
  return out + "}";
}

std::string delta_set_str(const DeltaSet& delta) {
  std::string out = "{";
  std::vector<Point> members = delta.members();
  for (std::size_t i = 0; i < members.size(); ++i) {
    if (i) out += ", ";
    out += "(" + std::to_string(members[i].x) + "," + std::to_string(members[i].y) + ")";
  }
  return out + "}";
}

}  // namespace

Field field_from_json(const std::string& text) {
  json j = parse_json(text);
  if (!j.contains("p") || !j.contains("m") || !j.contains("poly"))
    throw Error(Errc::ParseError, "field config needs p, m, poly");
  std::vector<int> poly;
  for (const json& c : j["poly"]) poly.push_back(c.get<int>());
  return Field::create(j["p"].get<int>(), j["m"].get<int>(), poly);
}

std::string field_to_json(const Field& F) {
  json j;
  j["p"] = F.p();
  j["m"] = F.m();
  j["poly"] = F.primitive_poly();
  return j.dump();
}

SyndromeFile syndromes_from_json(const Field& F, const std::string& text) {
  json j = parse_json(text);
  if (!j.contains("tau") || !j.contains("entries"))
    throw Error(Errc::ParseError, "syndrome file needs tau and entries");
  SyndromeFile out;
  out.tau = point_from(j["tau"]);
  for (const json& entry : j["entries"]) {
    Point n = point_from(entry.at("n"));
    if (out.entries.count(n)) throw Error(Errc::ParseError, "duplicate syndrome index");
    out.entries[n] = F.parse(entry.at("v").get<std::string>());
  }
  return out;
}

std::string syndromes_to_json(const Field& F, const SyndromeFile& file) {
  json j;
  j["tau"] = point_to(file.tau);
  j["entries"] = json::array();
  for (const auto& [n, v] : file.entries)
    j["entries"].push_back(json{{"n", point_to(n)}, {"v", F.format(v)}});
  return j.dump(2);
}

CodeFile code_from_json(const std::string& text) {
  json j = parse_json(text);
  for (const char* key : {"r1", "r2", "q", "field", "orbits"})
    if (!j.contains(key)) throw Error(Errc::ParseError, std::string("code config needs ") + key);
  CodeFile out{field_from_json(j["field"].dump()), {}};
  std::vector<Point> reps;
  for (const json& rep : j["orbits"]) reps.push_back(point_from(rep));
  out.code = code_create(j["r1"].get<int>(), j["r2"].get<int>(), j["q"].get<std::int64_t>(), reps);
  return out;
}

std::string code_to_json(const Field& F, const AbelianCode& code) {
  json j;
  j["r1"] = code.r1;
  j["r2"] = code.r2;
  j["q"] = code.q;
  j["field"] = json::parse(field_to_json(F));
  j["orbits"] = json::array();
  // one representative per orbit: the row-major least member
  std::set<Point, PointLess> seen;
  for (Point p : code.defining_set) {
    if (seen.count(p)) continue;
    std::vector<Point> orbit = q_orbit(p, code.q, code.r1, code.r2);
    Point rep = *std::min_element(orbit.begin(), orbit.end(), PointLess{});
    for (Point o : orbit) seen.insert(o);
    j["orbits"].push_back(point_to(rep));
  }
  return j.dump(2);
}

Word word_from_json(const Field& F, const std::string& text) {
  json j = parse_json(text);
  if (!j.contains("grid") || !j["grid"].is_array() || j["grid"].empty())
    throw Error(Errc::ParseError, "word file needs a nonempty grid");
  int r1 = static_cast<int>(j["grid"].size());
  int r2 = static_cast<int>(j["grid"][0].size());
  Word w = Word::zero(r1, r2);
  for (int x = 0; x < r1; ++x) {
    const json& row = j["grid"][static_cast<std::size_t>(x)];
    if (static_cast<int>(row.size()) != r2) throw Error(Errc::ParseError, "ragged word grid");
    for (int y = 0; y < r2; ++y) w.set({x, y}, F.parse(row[static_cast<std::size_t>(y)].get<std::string>()));
  }
  return w;
}

std::string word_to_json(const Field& F, const Word& w) {
  json grid = json::array();
  for (int x = 0; x < w.r1; ++x) {
    json row = json::array();
    for (int y = 0; y < w.r2; ++y) row.push_back(F.format(w.at({x, y})));
    grid.push_back(row);
  }
  return json{{"grid", grid}}.dump(2);
}

std::string emit_trace(const Field& F, const std::vector<TraceRecord>& trace, TraceFormat format) {
  if (format == TraceFormat::Structured) {
    json rows = json::array();
    for (const TraceRecord& rec : trace) {
      json row;
      row["l"] = point_to(rec.l);
      row["F"] = json::array();
      for (const BivariatePoly& f : rec.F) row["F"].push_back(format_poly(F, f));
      row["G"] = json::array();
      for (const BivariatePoly& g : rec.G) row["G"].push_back(format_poly(F, g));
      row["delta"] = json::array();
      for (Point p : rec.delta.members()) row["delta"].push_back(point_to(p));
      rows.push_back(std::move(row));
    }
    return rows.dump(2);
  }

  std::string out = "l | F | G | delta\n";
  out += "init | {1} | {} | {}\n";
  std::size_t i = 0;
  while (i < trace.size()) {
    if (!trace[i].changed) {
      std::string label;
      while (i < trace.size() && !trace[i].changed) {
        if (!label.empty()) label += ",";
        label += "(" + std::to_string(trace[i].l.x) + "," + std::to_string(trace[i].l.y) + ")";
        ++i;
      }
      out += label + " | Same | Same | Same\n";
      continue;
    }
    const TraceRecord& rec = trace[i];
    out += "(" + std::to_string(rec.l.x) + "," + std::to_string(rec.l.y) + ") | " +
           poly_set(F, rec.F) + " | " + poly_set(F, rec.G) + " | " + delta_set_str(rec.delta) + "\n";
    ++i;
  }
  return out;
}

std::vector<TraceRecord> parse_trace(const Field& F, const std::string& text) {
  json rows = parse_json(text);
  if (!rows.is_array()) throw Error(Errc::ParseError, "trace must be a JSON array");
  std::vector<TraceRecord> out;
  for (const json& row : rows) {
    TraceRecord rec;
    rec.l = point_from(row.at("l"));
    for (const json& f : row.at("F")) rec.F.push_back(parse_poly(F, f.get<std::string>()));
    for (const json& g : row.at("G")) rec.G.push_back(parse_poly(F, g.get<std::string>()));
    std::vector<Point> members;
    for (const json& p : row.at("delta")) members.push_back(point_from(p));
    rec.delta = DeltaSet::down_closure(members);
    if (out.empty()) {
      // compare with the initial state F = {1}, G = {}, delta = {}
      rec.changed = !(rec.F == std::vector<BivariatePoly>{BivariatePoly::one()} &&
                      rec.G.empty() && rec.delta.empty());
    } else {
      rec.changed = !(rec.F == out.back().F && rec.G == out.back().G &&
                      rec.delta == out.back().delta);
    }
    out.push_back(std::move(rec));
  }
  return out;
}

std::string basis_to_json(const Field& F, const RunResult& res) {
  json j;
  j["basis"] = json::array();
  for (const BivariatePoly& f : res.basis) j["basis"].push_back(format_poly(F, f));
  j["raw_basis"] = json::array();
  for (const BivariatePoly& f : res.raw_basis) j["raw_basis"].push_back(format_poly(F, f));
  j["delta"] = json::array();
  for (Point p : res.delta.members()) j["delta"].push_back(point_to(p));
  j["condition_ok"] = res.condition_ok;
  return j.dump(2);
}

}  // namespace bmsa
