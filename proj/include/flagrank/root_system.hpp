#pragma once

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <string>
#include <vector>

#include "errors.hpp"
#include "rational.hpp"

namespace flagrank {

/* Root-system conventions, fixed here and used by everything downstream.

   Roots are integer coordinate vectors in the simple-root basis.
   cartan[i][j] = <alpha_j, alpha_i^vee>, so the simple reflection acts by
   s_i(v) = v - <v, alpha_i^vee> alpha_i, i.e. only coordinate i changes.
   The root list stores all positive roots first, sorted by height and then
   lexicographically, and roots[n_pos + k] = -roots[k].  sym[i] holds the
   symmetrizer d_i with (alpha_i, alpha_i) = 2 d_i, normalized per connected
   component so that the short roots get d = 1. */
struct RootSystem {
  std::string label;
  int rank = 0;
  std::vector<std::vector<int>> cartan;
  std::vector<int> sym;
  std::vector<std::vector<int>> roots;
  int n_pos = 0;
  std::map<std::vector<int>, int> index;
  std::vector<int> simple_pos;                 // index of alpha_i among the positives
  std::vector<std::vector<int>> simple_perm;   // action of s_i on root indices

  bool positive(int r) const { return r < n_pos; }
  int neg(int r) const { return r < n_pos ? r + n_pos : r - n_pos; }
  int height(int r) const {
    int h = 0;
    for (int c : roots[r]) h += c;
    return h;
  }
  int root_index(const std::vector<int>& v) const {
    auto it = index.find(v);
    return it == index.end() ? -1 : it->second;
  }
  // <v, alpha_i^vee> for v in simple-root coordinates, i zero-based
  long long pair_coroot(const std::vector<int>& v, int i) const {
    long long s = 0;
    for (int j = 0; j < rank; ++j) s += static_cast<long long>(cartan[i][j]) * v[j];
    return s;
  }
  // symmetric bilinear form with (alpha_i, alpha_i) = 2 sym[i]
  long long bilinear(const std::vector<int>& x, const std::vector<int>& y) const {
    long long s = 0;
    for (int i = 0; i < rank; ++i)
      for (int j = 0; j < rank; ++j)
        s += static_cast<long long>(x[i]) * y[j] * sym[i] * cartan[i][j];
    return s;
  }
  long long len2(int r) const { return bilinear(roots[r], roots[r]); }

  std::vector<int> reflect_simple(int i, std::vector<int> v) const {
    long long c = pair_coroot(v, i);
    v[i] -= static_cast<int>(c);
    return v;
  }
};

namespace detail {

inline std::vector<std::vector<int>> series_cartan(char series, int rank) {
  auto bad = [&](const std::string& why) {
    throw input_error(std::string("invalid type ") + series + std::to_string(rank) + ": " + why);
  };
  if (rank < 1 || rank > 6) bad("rank must be between 1 and 6");
  std::vector<std::vector<int>> c(rank, std::vector<int>(rank, 0));
  for (int i = 0; i < rank; ++i) c[i][i] = 2;
  auto edge = [&](int i, int j) { c[i][j] = c[j][i] = -1; };
  switch (series) {
    case 'A':
      for (int i = 0; i + 1 < rank; ++i) edge(i, i + 1);
      break;
    case 'B':
      if (rank < 2) bad("B needs rank >= 2");
      for (int i = 0; i + 2 < rank; ++i) edge(i, i + 1);
      c[rank - 2][rank - 1] = -1;
      c[rank - 1][rank - 2] = -2;
      break;
    case 'C':
      if (rank < 2) bad("C needs rank >= 2");
      for (int i = 0; i + 2 < rank; ++i) edge(i, i + 1);
      c[rank - 2][rank - 1] = -2;
      c[rank - 1][rank - 2] = -1;
      break;
    case 'D':
      if (rank < 3) bad("D needs rank >= 3");
      for (int i = 0; i + 2 < rank; ++i) edge(i, i + 1);
      edge(rank - 3, rank - 1);
      break;
    case 'E':
      if (rank != 6) bad("E needs rank 6 here");
      edge(0, 2);
      edge(2, 3);
      edge(3, 4);
      edge(4, 5);
      edge(1, 3);
      break;
    case 'F':
      if (rank != 4) bad("F needs rank 4");
      edge(0, 1);
      edge(2, 3);
      c[1][2] = -1;
      c[2][1] = -2;
      break;
    case 'G':
      if (rank != 2) bad("G needs rank 2");
      c[0][1] = -3;
      c[1][0] = -1;
      break;
    default:
      bad("unknown series");
  }
  return c;
}

inline std::vector<int> symmetrizer(const std::vector<std::vector<int>>& c) {
  int n = static_cast<int>(c.size());
  std::vector<Rational> f(n, Rational(0));
  std::vector<int> comp(n, -1);
  int ncomp = 0;
  for (int s = 0; s < n; ++s) {
    if (comp[s] >= 0) continue;
    comp[s] = ncomp;
    f[s] = 1;
    std::vector<int> stack{s};
    while (!stack.empty()) {
      int i = stack.back();
      stack.pop_back();
      for (int j = 0; j < n; ++j) {
        if (j == i || c[i][j] == 0) continue;
        Rational fj = f[i] * c[i][j] / c[j][i];
        if (comp[j] < 0) {
          comp[j] = ncomp;
          f[j] = fj;
          stack.push_back(j);
        } else if (f[j] != fj) {
          throw input_error("Cartan matrix is not symmetrizable");
        }
      }
    }
    // scale this component to coprime positive integers
    Int l = 1;
    for (int j = 0; j < n; ++j)
      if (comp[j] == ncomp) l = boost::multiprecision::lcm(l, rat_den(f[j]));
    Int g = 0;
    for (int j = 0; j < n; ++j)
      if (comp[j] == ncomp) g = boost::multiprecision::gcd(g, Int(rat_num(f[j]) * l / rat_den(f[j])));
    for (int j = 0; j < n; ++j)
      if (comp[j] == ncomp) f[j] = f[j] * Rational(l, g);
    ++ncomp;
  }
  std::vector<int> d(n);
  for (int i = 0; i < n; ++i) {
    if (!is_integer(f[i]) || f[i] <= 0) throw std::logic_error("bad symmetrizer");
    d[i] = static_cast<int>(to_int64(f[i]));
  }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (static_cast<long long>(d[i]) * c[i][j] != static_cast<long long>(d[j]) * c[j][i])
        throw std::logic_error("symmetrizer check failed");
  return d;
}

}  // namespace detail

// build from explicit Cartan data (also used for Levi subsystems)
inline RootSystem build_root_system_from_cartan(const std::string& label,
                                                std::vector<std::vector<int>> cartan) {
  RootSystem rs;
  rs.label = label;
  rs.rank = static_cast<int>(cartan.size());
  rs.cartan = std::move(cartan);
  rs.sym = detail::symmetrizer(rs.cartan);

  // reflection closure of the simple roots; finite type keeps this small
  std::set<std::vector<int>> seen;
  std::vector<std::vector<int>> work;
  for (int i = 0; i < rs.rank; ++i) {
    std::vector<int> e(rs.rank, 0);
    e[i] = 1;
    seen.insert(e);
    work.push_back(e);
  }
  const size_t root_cap = 4096;
  while (!work.empty()) {
    auto v = work.back();
    work.pop_back();
    for (int i = 0; i < rs.rank; ++i) {
      auto w = rs.reflect_simple(i, v);
      if (seen.insert(w).second) {
        work.push_back(w);
        if (seen.size() > root_cap) throw input_error("root closure does not terminate (not finite type?)");
      }
    }
  }

  std::vector<std::vector<int>> pos;
  for (const auto& v : seen) {
    bool nonneg = true, nonpos = true;
    for (int x : v) {
      nonneg = nonneg && x >= 0;
      nonpos = nonpos && x <= 0;
    }
    if (!nonneg && !nonpos) throw std::logic_error("root with mixed signs");
    if (nonneg) pos.push_back(v);
  }
  auto ht = [](const std::vector<int>& v) {
    int h = 0;
    for (int x : v) h += x;
    return h;
  };
  std::sort(pos.begin(), pos.end(), [&](const auto& a, const auto& b) {
    int ha = ht(a), hb = ht(b);
    if (ha != hb) return ha < hb;
    return a < b;
  });
  rs.n_pos = static_cast<int>(pos.size());
  rs.roots = pos;
  for (const auto& v : pos) {
    auto m = v;
    for (int& x : m) x = -x;
    rs.roots.push_back(m);
  }
  for (int r = 0; r < static_cast<int>(rs.roots.size()); ++r) rs.index[rs.roots[r]] = r;

  rs.simple_pos.assign(rs.rank, -1);
  for (int i = 0; i < rs.rank; ++i) {
    std::vector<int> e(rs.rank, 0);
    e[i] = 1;
    rs.simple_pos[i] = rs.index.at(e);
  }

  rs.simple_perm.assign(rs.rank, std::vector<int>(rs.roots.size()));
  for (int i = 0; i < rs.rank; ++i)
    for (int r = 0; r < static_cast<int>(rs.roots.size()); ++r)
      rs.simple_perm[i][r] = rs.index.at(rs.reflect_simple(i, rs.roots[r]));
  return rs;
}

// "A2", "C3", ... rank 1..6
inline RootSystem build_root_system(const std::string& type) {
  if (type.size() < 2) throw input_error("type must look like A2, C3, ...: " + type);
  char series = type[0];
  int rank = 0;
  for (size_t k = 1; k < type.size(); ++k) {
    if (type[k] < '0' || type[k] > '9') throw input_error("bad rank in type: " + type);
    rank = rank * 10 + (type[k] - '0');
  }
  return build_root_system_from_cartan(type, detail::series_cartan(series, rank));
}

// parabolic subsets are sorted 1-based simple indices
using Parabolic = std::vector<int>;

inline Parabolic parse_parabolic(const RootSystem& rs, std::vector<int> delta) {
  std::sort(delta.begin(), delta.end());
  delta.erase(std::unique(delta.begin(), delta.end()), delta.end());
  for (int i : delta)
    if (i < 1 || i > rs.rank)
      throw input_error("parabolic index out of range: " + std::to_string(i));
  return delta;
}

inline bool in_levi(const RootSystem& rs, const Parabolic& delta, int root) {
  const auto& v = rs.roots[root];
  for (int j = 0; j < rs.rank; ++j) {
    if (v[j] == 0) continue;
    if (!std::binary_search(delta.begin(), delta.end(), j + 1)) return false;
  }
  return true;
}

// positive roots of the Levi, as ambient root indices
inline std::vector<int> levi_positive_roots(const RootSystem& rs, const Parabolic& delta) {
  std::vector<int> out;
  for (int r = 0; r < rs.n_pos; ++r)
    if (in_levi(rs, delta, r)) out.push_back(r);
  return out;
}

struct LeviSubsystem {
  RootSystem sub;
  std::vector<int> simple_to_ambient;  // zero-based simple index map
  std::vector<int> root_to_ambient;    // sub root index -> ambient root index
};

inline LeviSubsystem levi_subsystem(const RootSystem& rs, const Parabolic& delta) {
  LeviSubsystem ls;
  int m = static_cast<int>(delta.size());
  ls.simple_to_ambient.resize(m);
  for (int a = 0; a < m; ++a) ls.simple_to_ambient[a] = delta[a] - 1;
  std::vector<std::vector<int>> sub_cartan(m, std::vector<int>(m));
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b)
      sub_cartan[a][b] = rs.cartan[ls.simple_to_ambient[a]][ls.simple_to_ambient[b]];
  std::string label = rs.label + "|levi";
  for (int i : delta) label += std::to_string(i);
  ls.sub = build_root_system_from_cartan(label, sub_cartan);

  ls.root_to_ambient.resize(ls.sub.roots.size());
  for (int r = 0; r < static_cast<int>(ls.sub.roots.size()); ++r) {
    std::vector<int> amb(rs.rank, 0);
    for (int a = 0; a < m; ++a) amb[ls.simple_to_ambient[a]] = ls.sub.roots[r][a];
    int idx = rs.root_index(amb);
    if (idx < 0) throw std::logic_error("Levi root missing from ambient system");
    ls.root_to_ambient[r] = idx;
  }
  if (static_cast<int>(levi_positive_roots(rs, delta).size()) != ls.sub.n_pos)
    throw std::logic_error("Levi subsystem root count mismatch");
  return ls;
}

}  // namespace flagrank
