#pragma once

/* Text formats accepted on the command line: the line-oriented quiver
   file, comma-separated dimension vectors and parabolic subsets, and
   Weyl words as space-separated reflection indices.  Every error names
   the offending token (and the line for files), since these messages
   are the CLI's exit-2 surface. */

#include <cerrno>
#include <cstdlib>
#include <fstream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "errors.hpp"
#include "quiver.hpp"
#include "root_system.hpp"
#include "weyl.hpp"

namespace flagrank {

namespace detail {

inline std::string trim(const std::string& s) {
  size_t a = s.find_first_not_of(" \t\r\n");
  if (a == std::string::npos) return "";
  size_t b = s.find_last_not_of(" \t\r\n");
  return s.substr(a, b - a + 1);
}

inline std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

inline long parse_long(const std::string& tok, const std::string& what) {
  std::string t = trim(tok);
  if (t.empty()) throw input_error(what + " has an empty entry");
  char* end = nullptr;
  errno = 0;
  long v = std::strtol(t.c_str(), &end, 10);
  if (errno != 0 || end == t.c_str() || *end != '\0')
    throw input_error(what + " has a malformed integer '" + t + "'");
  return v;
}

}  // namespace detail

/* quiver text format, one declaration per line:
     vertex <name>
     arrow <name> <src> <dst>
   '#' starts a comment, blank lines are skipped, declaration order of
   the vertices fixes dimension-vector coordinates */
inline Quiver parse_quiver_text(const std::string& text, const std::string& where) {
  std::vector<std::string> vertices;
  std::vector<Arrow> arrows;
  std::set<std::string> vnames, anames;
  auto vertex_index = [&](const std::string& name) {
    for (size_t i = 0; i < vertices.size(); ++i)
      if (vertices[i] == name) return static_cast<int>(i);
    return -1;
  };
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  auto fail = [&](const std::string& m) {
    return input_error(where + ":" + std::to_string(lineno) + ": " + m);
  };
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string kind;
    if (!(ls >> kind)) continue;
    std::string extra;
    if (kind == "vertex") {
      std::string name;
      if (!(ls >> name)) throw fail("vertex needs a name");
      if (ls >> extra) throw fail("unexpected token '" + extra + "' after the vertex name");
      if (!vnames.insert(name).second) throw fail("duplicate vertex '" + name + "'");
      vertices.push_back(name);
    } else if (kind == "arrow") {
      std::string name, src, dst;
      if (!(ls >> name >> src >> dst)) throw fail("arrow needs a name, a source and a target");
      if (ls >> extra) throw fail("unexpected token '" + extra + "' after the arrow target");
      if (!anames.insert(name).second) throw fail("duplicate arrow '" + name + "'");
      int is = vertex_index(src);
      if (is < 0) throw fail("arrow '" + name + "' uses undeclared vertex '" + src + "'");
      int id = vertex_index(dst);
      if (id < 0) throw fail("arrow '" + name + "' uses undeclared vertex '" + dst + "'");
      arrows.push_back({name, is, id});
    } else {
      throw fail("expected 'vertex' or 'arrow', got '" + kind + "'");
    }
  }
  return make_quiver(std::move(vertices), std::move(arrows));
}

inline Quiver parse_quiver_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw input_error("cannot read quiver file '" + path + "'");
  std::ostringstream buf;
  buf << f.rdbuf();
  return parse_quiver_text(buf.str(), path);
}

// "2,1,0" in vertex declaration order
inline DimVector parse_dim_vector(const Quiver& q, const std::string& s, const char* what) {
  DimVector a;
  if (!detail::trim(s).empty())
    for (const auto& tok : detail::split(s, ','))
      a.push_back(static_cast<int>(detail::parse_long(tok, what)));
  check_dim_vector(q, a, what);
  return a;
}

// parts separated by '|': "1,1|1,1|1,1"
inline Decomposition parse_decomposition(const Quiver& q, const std::string& s) {
  Decomposition d;
  for (const auto& part : detail::split(s, '|'))
    d.push_back(parse_dim_vector(q, part, "decomposition part"));
  check_decomposition(q, d);
  return d;
}

// "1,3" as 1-based simple root indices; blank means the Borel
inline Parabolic parse_parabolic_spec(const RootSystem& rs, const std::string& s) {
  std::vector<int> idx;
  if (!detail::trim(s).empty())
    for (const auto& tok : detail::split(s, ','))
      idx.push_back(static_cast<int>(detail::parse_long(tok, "parabolic subset")));
  return parse_parabolic(rs, std::move(idx));
}

struct ParsedWords {
  std::vector<WeylElement> elements;
  std::vector<std::string> warnings;  // non-reduced inputs, already reduced
};

/* "1 2 1, 1 2, e": words comma-separated, letters space-separated,
   'e' is the identity.  Non-reduced words are reduced with a warning. */
inline ParsedWords parse_words(const RootSystem& rs, const std::string& s) {
  ParsedWords out;
  for (const auto& raw : detail::split(s, ',')) {
    std::string t = detail::trim(raw);
    if (t.empty()) throw input_error("empty Weyl word (expected letters or 'e')");
    std::vector<int> word;
    if (t != "e") {
      std::istringstream ls(t);
      std::string tok;
      while (ls >> tok) {
        if (tok == "e") throw input_error("'e' cannot appear inside the word '" + t + "'");
        long v = detail::parse_long(tok, "Weyl word");
        if (v < 1 || v > rs.rank)
          throw input_error("reflection index " + std::to_string(v) + " out of range 1.." +
                            std::to_string(rs.rank));
        word.push_back(static_cast<int>(v));
      }
    }
    WeylElement w = weyl_from_word(rs, word);
    if (w.length() != static_cast<int>(word.size()))
      out.warnings.push_back("word '" + t + "' is not reduced, using '" + word_to_string(w) +
                             "'");
    out.elements.push_back(std::move(w));
  }
  return out;
}

}  // namespace flagrank
