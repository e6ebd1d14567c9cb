#pragma once

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "polytwo/error.hpp"
#include "polytwo/poset.hpp"

namespace polytwo {

namespace detail {

inline bool valid_id(std::string_view id) {
  return !id.empty() && std::all_of(id.begin(), id.end(), [](unsigned char c) { return std::isalnum(c) || c == '_'; });
}

inline std::vector<std::string> tokens(std::string_view line) {
  std::vector<std::string> out;
  std::istringstream in{std::string(line)};
  for (std::string t; in >> t;) out.push_back(t);
  return out;
}

inline bool parse_int(const std::string& s, int& out) {
  if (s.empty()) return false;
  std::size_t pos = 0;
  try {
    out = std::stoi(s, &pos);
  } catch (const std::exception&) {
    return false;
  }
  return pos == s.size();
}

}  // namespace detail

/// Reads the `APF 1` text format: a version line, a `rank <n>` line, then one
/// line per proper face `<rank> <id> : <covered ids>`. `#` starts a comment.
inline RankedPoset parse_apf(std::string_view text) {
  struct Line {
    int number;
    std::vector<std::string> tok;
  };
  std::vector<Line> lines;
  int number = 0;
  std::size_t at = 0;
  while (at <= text.size()) {
    std::size_t end = text.find('\n', at);
    if (end == std::string_view::npos) end = text.size();
    std::string_view raw = text.substr(at, end - at);
    ++number;
    if (auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
    // split "a:b" so the colon is its own token
    std::string spaced;
    for (char c : raw) {
      if (c == ':') spaced += " : ";
      else spaced += c;
    }
    auto tok = detail::tokens(spaced);
    if (!tok.empty()) lines.push_back({number, std::move(tok)});
    at = end + 1;
  }

  auto syntax = [](int line, const std::string& msg) { return PolytopeError(ErrorCode::SyntaxError, msg, line); };
  if (lines.empty() || lines[0].tok != std::vector<std::string>{"APF", "1"})
    throw syntax(lines.empty() ? 1 : lines[0].number, "expected header 'APF 1'");
  int n = 0;
  const int rank_line = lines.size() > 1 ? lines[1].number : lines[0].number + 1;
  if (lines.size() < 2 || lines[1].tok.size() != 2 || lines[1].tok[0] != "rank" || !detail::parse_int(lines[1].tok[1], n) || n < -1)
    throw syntax(rank_line, "expected 'rank <n>'");

  struct Decl {
    int line;
    int rank;
    std::string id;
    std::vector<std::string> covers;
  };
  std::vector<Decl> decls;
  std::map<std::string, std::size_t> where;
  for (std::size_t k = 2; k < lines.size(); ++k) {
    const auto& [ln, tok] = lines[k];
    int r = 0;
    if (tok.size() < 3 || tok[2] != ":" || !detail::parse_int(tok[0], r)) throw syntax(ln, "expected '<rank> <id> : <ids>'");
    if (r < 0 || r >= n) throw PolytopeError(ErrorCode::RankMismatch, "rank " + tok[0] + " is not a proper rank", ln);
    if (!detail::valid_id(tok[1])) throw syntax(ln, "bad face id '" + tok[1] + "'");
    if (is_reserved_id(tok[1])) throw syntax(ln, "face id '" + tok[1] + "' is reserved");
    if (where.count(tok[1])) throw syntax(ln, "face id '" + tok[1] + "' declared twice");
    Decl d{ln, r, tok[1], {}};
    for (std::size_t t = 3; t < tok.size(); ++t) {
      if (!detail::valid_id(tok[t])) throw syntax(ln, "bad face id '" + tok[t] + "'");
      d.covers.push_back(tok[t]);
    }
    if (r == 0 && !d.covers.empty()) throw PolytopeError(ErrorCode::RankMismatch, "vertices cover nothing", ln);
    where.emplace(d.id, decls.size());
    decls.push_back(std::move(d));
  }
  std::vector<ProperFace> proper;
  for (const auto& d : decls) {
    for (const auto& c : d.covers) {
      auto it = where.find(c);
      if (it == where.end()) throw PolytopeError(ErrorCode::UnknownFaceId, "face '" + c + "' is not declared", d.line);
      if (decls[it->second].rank != d.rank - 1)
        throw PolytopeError(ErrorCode::RankMismatch, "'" + d.id + "' covers '" + c + "' of rank " + std::to_string(decls[it->second].rank), d.line);
    }
    proper.push_back({d.id, d.rank, d.covers});
  }
  return make_polytope(n, proper);
}

/// Canonical form: faces by (rank, id), covered ids sorted.
inline std::string serialize_apf(const RankedPoset& p) {
  std::string out = "APF 1\nrank " + std::to_string(p.rank()) + "\n";
  for (const auto& f : proper_faces(p)) {
    auto covers = f.covers;
    std::sort(covers.begin(), covers.end());
    out += std::to_string(f.rank) + " " + f.id + " :";
    for (const auto& c : covers) out += " " + c;
    out += "\n";
  }
  return out;
}

}  // namespace polytwo
