#pragma once

#include <fstream>
#include <string>

#include <json.hpp>

#include "symdisc/domains.hpp"
#include "symdisc/fuzz.hpp"
#include "symdisc/schwarz.hpp"

namespace symdisc {

using json = nlohmann::ordered_json;

inline constexpr const char* kSchemaVersion = "1.0";

inline json to_json(Cplx z) { return json::array({z.real(), z.imag()}); }

inline Cplx cplx_from_json(const json& j, const char* ctx) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
    throw error(errc::parse_error, std::string(ctx) + ": complex values are [re, im] arrays");
  return Cplx(j[0].get<double>(), j[1].get<double>());
}

/// On-disk point: {"kind": "tilde"|"sym", "n": int, "components": [[re,im] x n]}
/// with the last component q (tilde) or p (sym). Unknown fields are rejected.
struct PointFile {
  std::string kind;
  int n = 0;
  std::vector<Cplx> components;
};

inline json to_json(const PointFile& p) {
  json comps = json::array();
  for (const Cplx& c : p.components) comps.push_back(to_json(c));
  return json{{"kind", p.kind}, {"n", p.n}, {"components", std::move(comps)}};
}

inline PointFile point_file_from_json(const json& j) {
  if (!j.is_object()) throw error(errc::parse_error, "point file: expected an object");
  for (const auto& [key, value] : j.items()) {
    (void)value;
    if (key != "kind" && key != "n" && key != "components")
      throw error(errc::parse_error, "point file: unknown field '" + key + "'");
  }
  if (!j.contains("kind") || !j.contains("n") || !j.contains("components"))
    throw error(errc::parse_error, "point file: kind, n and components are required");
  PointFile p;
  if (!j["kind"].is_string()) throw error(errc::parse_error, "point file: kind must be a string");
  p.kind = j["kind"].get<std::string>();
  if (p.kind != "tilde" && p.kind != "sym")
    throw error(errc::parse_error, "point file: kind must be 'tilde' or 'sym'");
  if (!j["n"].is_number_integer()) throw error(errc::parse_error, "point file: n must be an integer");
  p.n = j["n"].get<int>();
  if (!j["components"].is_array() || j["components"].size() != static_cast<std::size_t>(p.n))
    throw error(errc::parse_error, "point file: components must hold exactly n entries");
  for (const auto& c : j["components"]) p.components.push_back(cplx_from_json(c, "point file"));
  return p;
}

inline PointFile load_point_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw error(errc::parse_error, "cannot open point file '" + path + "'");
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw error(errc::parse_error, std::string("point file: ") + e.what());
  }
  return point_file_from_json(j);
}

inline TildePoint as_tilde(const PointFile& p) {
  if (p.kind != "tilde") throw error(errc::parse_error, "expected a tilde point");
  if (p.n < 2) throw error(errc::parse_error, "tilde point needs n >= 2");
  TildePoint y{p.n, std::vector<Cplx>(p.components.begin(), p.components.end() - 1),
               p.components.back()};
  validate(y);
  return y;
}

inline SymPoint as_sym(const PointFile& p) {
  if (p.kind != "sym") throw error(errc::parse_error, "expected a sym point");
  if (p.n < 1) throw error(errc::parse_error, "sym point needs n >= 1");
  SymPoint s{p.n, std::vector<Cplx>(p.components.begin(), p.components.end() - 1),
             p.components.back()};
  validate(s);
  return s;
}

inline PointFile make_point_file(const TildePoint& y) {
  PointFile p{"tilde", y.n, y.y};
  p.components.push_back(y.q);
  return p;
}

inline PointFile make_point_file(const SymPoint& s) {
  PointFile p{"sym", s.n, s.s};
  p.components.push_back(s.p);
  return p;
}

/// Versioned command report; serialization round-trips bit-exactly.
struct ReportFile {
  std::string schema_version = kSchemaVersion;
  std::string command;
  json inputs = json::object();
  json results = json::object();
  std::uint64_t seed = 0;
};

inline json to_json(const ReportFile& r) {
  return json{{"schema_version", r.schema_version},
              {"command", r.command},
              {"inputs", r.inputs},
              {"results", r.results},
              {"seed", r.seed}};
}

inline ReportFile report_file_from_json(const json& j) {
  if (!j.is_object()) throw error(errc::parse_error, "report: expected an object");
  for (const auto& [key, value] : j.items()) {
    (void)value;
    if (key != "schema_version" && key != "command" && key != "inputs" && key != "results" &&
        key != "seed")
      throw error(errc::parse_error, "report: unknown field '" + key + "'");
  }
  ReportFile r;
  r.schema_version = j.at("schema_version").get<std::string>();
  if (r.schema_version != kSchemaVersion)
    throw error(errc::parse_error, "report: unsupported schema version " + r.schema_version);
  r.command = j.at("command").get<std::string>();
  r.inputs = j.at("inputs");
  r.results = j.at("results");
  r.seed = j.at("seed").get<std::uint64_t>();
  return r;
}

inline json to_json(const ConditionEval& c) {
  return json{{"holds", c.holds}, {"margin", c.margin}};
}

inline json to_json(const MembershipVerdict& v) {
  json conds = json::object();
  for (const auto& [key, ce] : v.condition_values) conds[key] = to_json(ce);
  json out{{"member_open", v.member_open},
           {"member_closed", v.member_closed},
           {"conditions", std::move(conds)}};
  if (v.beta_witness) {
    json b = json::array();
    for (const Cplx& c : v.beta_witness->beta) b.push_back(to_json(c));
    out["beta_witness"] = std::move(b);
  }
  if (!v.matrix_witness.empty()) {
    json ms = json::array();
    for (const Mat2& m : v.matrix_witness)
      ms.push_back(json::array(
          {to_json(m.a11), to_json(m.a12), to_json(m.a21), to_json(m.a22)}));
    out["matrix_witness"] = std::move(ms);
  }
  return out;
}

inline json to_json(const SchwarzReport& r) {
  json conds = json::object();
  for (const auto& [id, ce] : r.cond) conds[std::to_string(id)] = to_json(ce);
  json branches = json::array();
  for (bool b : r.branch_primary) branches.push_back(b);
  json out{{"n", r.n},
           {"lambda0", to_json(r.lambda0)},
           {"conditions", std::move(conds)},
           {"branch_primary", std::move(branches)},
           {"consistent", r.consistent},
           {"jn_member", r.jn_member}};
  if (r.beta) {
    json b = json::array();
    for (const Cplx& c : r.beta->beta) b.push_back(to_json(c));
    out["beta"] = std::move(b);
  }
  return out;
}

inline json to_json(const FuzzReport& r) {
  return json{{"suite", r.suite},     {"n", r.n},
              {"count", r.count},     {"seed", r.seed},
              {"checked", r.checked}, {"hard_failures", r.hard_failures},
              {"soft_flags", r.soft_flags}, {"events", r.events},
              {"pass", r.pass()}};
}

}  // namespace symdisc
