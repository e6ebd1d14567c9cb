#pragma once

#include <fstream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "polytwo/apf.hpp"
#include "polytwo/catalog.hpp"
#include "polytwo/classifier.hpp"
#include "polytwo/error.hpp"
#include "polytwo/reconstruct.hpp"
#include "polytwo/suites.hpp"

namespace polytwo {

using Json = nlohmann::ordered_json;

/// file path, catalog:<name>, or torus:<b>,<c>
inline RankedPoset resolve_source(const std::string& src) {
  if (src.rfind("catalog:", 0) == 0) {
    const auto* e = find_entry(src.substr(8));
    if (!e) throw PolytopeError(ErrorCode::UnknownSource, "no catalog entry '" + src.substr(8) + "'");
    return e->builder();
  }
  if (src.rfind("torus:", 0) == 0) {
    const std::string args = src.substr(6);
    const auto comma = args.find(',');
    int b = 0, c = 0;
    if (comma == std::string::npos || !detail::parse_int(args.substr(0, comma), b) || !detail::parse_int(args.substr(comma + 1), c))
      throw PolytopeError(ErrorCode::UnknownSource, "expected torus:<b>,<c>, got '" + src + "'");
    return torus_44(b, c);
  }
  std::ifstream in(src);
  if (!in) throw PolytopeError(ErrorCode::UnknownSource, "cannot read '" + src + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_apf(buf.str());
}

namespace detail {

inline Json to_json(RankSet s) {
  Json a = Json::array();
  for (int r : s.to_vector()) a.push_back(r);
  return a;
}

inline Json to_json(const Check& c) {
  return Json{{"name", c.name},
              {"verdict", std::string(to_string(c.verdict))},
              {"instances", c.instances},
              {"failures", c.failures},
              {"detail", c.detail}};
}

inline Json to_json(const SuiteReport& s) {
  Json checks = Json::array();
  for (const auto& c : s.checks) checks.push_back(to_json(c));
  return Json{{"suite", s.suite}, {"verdict", s.pass() ? "PASS" : "FAIL"}, {"failures", s.failures()}, {"checks", checks}};
}

inline Json to_json(const RelationReport& r) {
  Json a = Json::array();
  for (const auto& e : r.entries)
    a.push_back(Json{{"family", e.family},
                     {"relation", e.relation},
                     {"ranks", e.ranks},
                     {"row", e.row},
                     {"expected", e.expected},
                     {"observed", e.observed},
                     {"verdict", e.pass ? "PASS" : "FAIL"}});
  return a;
}

inline Json profile_json(const std::string& src, const Analysis& an) {
  const auto& cp = an.profile;
  Json j;
  j["source"] = src;
  j["rank"] = cp.rank;
  j["face_counts"] = an.poset().face_counts();
  j["flags"] = cp.flag_count;
  j["group_order"] = cp.group_order;
  j["orbits"] = cp.orbit_count;
  j["class"] = cp.class_name();
  j["class_type_set"] = cp.class_type_set ? to_json(*cp.class_type_set) : Json(nullptr);
  j["reflection_deficiency"] = cp.reflection_deficiency ? Json(*cp.reflection_deficiency) : Json(nullptr);
  j["chiral"] = cp.chiral;
  if (cp.symbol) {
    j["symbol"] = Json{{"top", cp.symbol->top}, {"bottom", cp.symbol->bottom}, {"normalized", cp.symbol->normalized().to_string()}};
  } else {
    j["symbol"] = nullptr;
  }
  return j;
}

inline int exit_code_for(ErrorCode c) {
  switch (c) {
    case ErrorCode::MalformedInput:
    case ErrorCode::SyntaxError:
    case ErrorCode::UnknownFaceId:
    case ErrorCode::RankMismatch:
    case ErrorCode::UnknownSource:
    case ErrorCode::BadParameter:
    case ErrorCode::DegenerateQuotient:
    case ErrorCode::TooManyOrbits:
    case ErrorCode::NotTwoOrbit:
    case ErrorCode::GroupCapExceeded:
    case ErrorCode::BadRank:
      return 2;
    default:
      return 1;
  }
}

}  // namespace detail

/// Runs one command; args exclude the program name. Returns the exit code.
inline int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Two-orbit polytope toolkit", "polytwo"};
  app.require_subcommand(1);

  std::string src;
  std::string suite = "all";

  auto* analyze_cmd = app.add_subcommand("analyze", "classify a polytope");
  analyze_cmd->add_option("source", src, "file, catalog:<name> or torus:<b>,<c>")->required();

  auto* verify_cmd = app.add_subcommand("verify", "run verification suites");
  verify_cmd->add_option("--suite", suite, "suite to run")
      ->check(CLI::IsMember({"relations", "stabilizers", "intersections", "sections", "deficiency", "order", "all"}));
  verify_cmd->add_option("source", src, "file, catalog:<name> or torus:<b>,<c>")->required();

  auto* rebuild_cmd = app.add_subcommand("rebuild", "rebuild the face order from cosets");
  rebuild_cmd->add_option("source", src, "file, catalog:<name> or torus:<b>,<c>")->required();

  auto* catalog_cmd = app.add_subcommand("catalog", "catalog operations");
  auto* list_cmd = catalog_cmd->add_subcommand("list", "list catalog entries");
  catalog_cmd->require_subcommand(1);

  auto* export_cmd = app.add_subcommand("export-flags", "print the flag graph");
  export_cmd->add_option("source", src, "file, catalog:<name> or torus:<b>,<c>")->required();

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (*analyze_cmd) {
      auto an = analyze(resolve_source(src));
      out << detail::profile_json(src, an).dump(2) << "\n";
      return 0;
    }
    if (*verify_cmd) {
      auto an = analyze(resolve_source(src));
      auto reports = run_suites(an, suite);
      bool pass = true;
      Json suites = Json::array();
      for (const auto& r : reports) {
        pass = pass && r.pass();
        suites.push_back(detail::to_json(r));
      }
      Json j;
      j["source"] = src;
      j["class"] = an.profile.class_name();
      j["suite"] = suite;
      j["verdict"] = pass ? "PASS" : "FAIL";
      j["suites"] = suites;
      if (suite == "relations" || suite == "all")
        j["relations"] = detail::to_json(verify_relations(distinguished_generators(an), *an.profile.symbol, an.group));
      out << j.dump(2) << "\n";
      return pass ? 0 : 1;
    }
    if (*rebuild_cmd) {
      auto an = analyze(resolve_source(src));
      auto rec = rebuild_order(an);
      const bool ok = is_isomorphic(an.poset(), rec.poset);
      out << serialize_apf(rec.poset) << "roundtrip: " << (ok ? "ok" : "FAIL") << "\n";
      return ok ? 0 : 1;
    }
    if (*list_cmd) {
      Json a = Json::array();
      for (const auto& e : catalog()) {
        auto p = e.builder();
        Json j;
        j["name"] = e.name;
        j["rank"] = p.rank();
        j["face_counts"] = p.face_counts();
        j["class"] = e.expected.class_name ? Json(*e.expected.class_name) : Json(nullptr);
        a.push_back(j);
      }
      out << a.dump(2) << "\n";
      return 0;
    }
    if (*export_cmd) {
      FlagGraph g(resolve_source(src));
      for (std::size_t f = 0; f < g.size(); ++f) {
        out << f << " :";
        for (int i = 0; i < g.rank(); ++i) out << " " << g.adjacent(static_cast<FlagIndex>(f), i);
        out << "\n";
      }
      return 0;
    }
  } catch (const PolytopeError& e) {
    err << "error: " << e.what() << "\n";
    return detail::exit_code_for(e.code());
  }
  return 2;
}

}  // namespace polytwo
