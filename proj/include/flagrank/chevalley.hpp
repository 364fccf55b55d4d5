#pragma once

#include <utility>
#include <vector>

#include "rational.hpp"
#include "root_system.hpp"
#include "weyl.hpp"

namespace flagrank {

/* Chevalley basis of the simple Lie algebra attached to a root system:
   one e_beta per root plus the simple coroots h_i.  Structure constants
   are integers, fixed by the extraspecial-pair convention: for each root
   gamma of height >= 2 the pair (xi, gamma - xi) with xi of smallest index
   gets N = +(p+1), everything else follows from antisymmetry, the rotation
   rule for triples summing to zero, and the Jacobi identity.  Construction
   verifies |N| = p+1 for every pair and the Jacobi identity on the whole
   basis; a failure of either throws. */

using IntMat = std::vector<std::vector<Int>>;
using SparseVec = std::vector<std::pair<int, Int>>;  // (basis index, coefficient)

struct ChevalleyAlgebra {
  RootSystem rs;
  int dim = 0;                        // 2 n_pos + rank
  std::vector<std::vector<Int>> nmat; // N(x, y) over root indices; 0 if x+y is not a root
  std::vector<std::vector<Int>> coroot;  // h_beta in the h_i basis, per root

  int n_roots() const { return static_cast<int>(rs.roots.size()); }
  int e_index(int root) const { return root; }
  int h_index(int i) const { return n_roots() + i; }
  bool is_root_index(int b) const { return b < n_roots(); }
};

namespace detail {

// largest k with y - k x still a root (the chain bound p in |N| = p+1)
inline int chain_down(const RootSystem& rs, int x, int y) {
  int k = 0;
  std::vector<int> v = rs.roots[y];
  for (;;) {
    for (int j = 0; j < rs.rank; ++j) v[j] -= rs.roots[x][j];
    if (rs.root_index(v) < 0) return k;
    ++k;
    if (k > 8) throw std::logic_error("root chain does not terminate");
  }
}

inline Rational n_query(const ChevalleyAlgebra& alg, int x, int y);

// positive-pair constants, Carter's recursion by height of the sum
inline void fill_positive_pairs(ChevalleyAlgebra& alg) {
  const RootSystem& rs = alg.rs;
  for (int g = 0; g < rs.n_pos; ++g) {
    if (rs.height(g) < 2) continue;
    // extraspecial pair: minimal xi with gamma - xi a positive root
    int xi = -1, eta = -1;
    std::vector<int> diff(rs.rank);
    for (int c = 0; c < rs.n_pos; ++c) {
      for (int j = 0; j < rs.rank; ++j) diff[j] = rs.roots[g][j] - rs.roots[c][j];
      int d = rs.root_index(diff);
      if (d >= 0 && d < rs.n_pos) {
        xi = c;
        eta = d;
        break;
      }
    }
    if (xi < 0) throw std::logic_error("no decomposition of a non-simple root");
    Int n_xi_eta = chain_down(rs, xi, eta) + 1;
    alg.nmat[xi][eta] = n_xi_eta;
    alg.nmat[eta][xi] = -n_xi_eta;

    // remaining special pairs for the same gamma, via Jacobi against e_{-xi}
    for (int a = xi + 1; a < rs.n_pos; ++a) {
      for (int j = 0; j < rs.rank; ++j) diff[j] = rs.roots[g][j] - rs.roots[a][j];
      int b = rs.root_index(diff);
      if (b < 0 || b >= rs.n_pos || a >= b) continue;
      // [[e_-xi, e_a], e_b] + [[e_a, e_b], e_-xi] + [[e_b, e_-xi], e_a] = 0 on e_eta
      Rational t1(0), t3(0);
      std::vector<int> am(rs.rank), bm(rs.rank);
      for (int j = 0; j < rs.rank; ++j) am[j] = rs.roots[a][j] - rs.roots[xi][j];
      int a_minus = rs.root_index(am);
      if (a_minus >= 0)
        t1 = n_query(alg, rs.neg(xi), a) * Rational(alg.nmat[a_minus][b]);
      for (int j = 0; j < rs.rank; ++j) bm[j] = rs.roots[b][j] - rs.roots[xi][j];
      int b_minus = rs.root_index(bm);
      if (b_minus >= 0)
        t3 = n_query(alg, b, rs.neg(xi)) * Rational(alg.nmat[b_minus][a]);
      Rational val = (t1 + t3) * Rational(rs.len2(g)) /
                     (Rational(rs.len2(eta)) * Rational(n_xi_eta));
      if (!is_integer(val)) throw std::logic_error("non-integer structure constant");
      alg.nmat[a][b] = rat_num(val);
      alg.nmat[b][a] = -alg.nmat[a][b];
    }
  }
}

// N(x, y) for arbitrary signs, reduced to positive pairs already filled
inline Rational n_query(const ChevalleyAlgebra& alg, int x, int y) {
  const RootSystem& rs = alg.rs;
  std::vector<int> sum(rs.rank);
  for (int j = 0; j < rs.rank; ++j) sum[j] = rs.roots[x][j] + rs.roots[y][j];
  int z = rs.root_index(sum);
  if (z < 0) return Rational(0);
  bool px = rs.positive(x), py = rs.positive(y);
  if (px && py) return Rational(alg.nmat[x][y]);
  if (!px && !py) return -n_query(alg, rs.neg(x), rs.neg(y));
  if (!px) return -n_query(alg, y, x);
  // x positive, y negative
  if (rs.positive(z))  // rotate (x, y, -z); -y = x + (-z)... -y and z positive, -y + z = x
    return -Rational(rs.len2(z)) / Rational(rs.len2(x)) * Rational(alg.nmat[rs.neg(y)][z]);
  // z negative: x + (-z) = -y with all three positive
  return -Rational(rs.len2(z)) / Rational(rs.len2(y)) * Rational(alg.nmat[x][rs.neg(z)]);
}

}  // namespace detail

// [basis_i, basis_j] as a sparse vector
inline SparseVec bracket_basis(const ChevalleyAlgebra& alg, int i, int j) {
  const RootSystem& rs = alg.rs;
  const int nr = alg.n_roots();
  if (i >= nr && j >= nr) return {};  // Cartan is abelian
  if (i >= nr || j >= nr) {
    // [h_k, e_b] = <beta, alpha_k^vee> e_b
    bool h_first = i >= nr;
    int k = (h_first ? i : j) - nr;
    int b = h_first ? j : i;
    Int c = rs.pair_coroot(rs.roots[b], k);
    if (!h_first) c = -c;
    if (c == 0) return {};
    return {{b, c}};
  }
  if (rs.neg(i) == j) {  // [e_b, e_-b] = h_b
    SparseVec out;
    for (int k = 0; k < rs.rank; ++k)
      if (alg.coroot[i][k] != 0) out.emplace_back(alg.h_index(k), alg.coroot[i][k]);
    return out;
  }
  if (alg.nmat[i][j] != 0) {
    std::vector<int> sum(rs.rank);
    for (int k = 0; k < rs.rank; ++k) sum[k] = rs.roots[i][k] + rs.roots[j][k];
    return {{rs.root_index(sum), alg.nmat[i][j]}};
  }
  return {};
}

inline std::vector<Int> bracket_with_basis(const ChevalleyAlgebra& alg,
                                           const std::vector<Int>& x, int j) {
  std::vector<Int> out(alg.dim, Int(0));
  for (int i = 0; i < alg.dim; ++i) {
    if (x[i] == 0) continue;
    for (const auto& [b, c] : bracket_basis(alg, i, j)) out[b] += x[i] * c;
  }
  return out;
}

inline ChevalleyAlgebra build_chevalley(const RootSystem& rs) {
  ChevalleyAlgebra alg;
  alg.rs = rs;
  alg.dim = static_cast<int>(rs.roots.size()) + rs.rank;
  const int nr = alg.n_roots();
  alg.nmat.assign(nr, std::vector<Int>(nr, Int(0)));

  alg.coroot.resize(nr);
  for (int r = 0; r < nr; ++r) {
    alg.coroot[r].resize(rs.rank);
    for (int k = 0; k < rs.rank; ++k) {
      // beta^vee = sum_k b_k d_k / d_beta alpha_k^vee
      Rational c = Rational(rs.roots[r][k]) * Rational(2 * rs.sym[k]) / Rational(rs.len2(r));
      if (!is_integer(c)) throw std::logic_error("coroot is not an integer combination");
      alg.coroot[r][k] = rat_num(c);
    }
  }

  detail::fill_positive_pairs(alg);

  // extend to all sign combinations
  for (int x = 0; x < nr; ++x)
    for (int y = 0; y < nr; ++y) {
      if (rs.positive(x) && rs.positive(y)) continue;
      Rational v = detail::n_query(alg, x, y);
      if (!is_integer(v)) throw std::logic_error("non-integer mixed structure constant");
      alg.nmat[x][y] = rat_num(v);
    }

  // gate: antisymmetry, the chain-length law, and the full Jacobi identity
  for (int x = 0; x < nr; ++x)
    for (int y = 0; y < nr; ++y) {
      if (alg.nmat[x][y] != -alg.nmat[y][x]) throw std::logic_error("antisymmetry violated");
      std::vector<int> sum(rs.rank);
      for (int k = 0; k < rs.rank; ++k) sum[k] = rs.roots[x][k] + rs.roots[y][k];
      int z = rs.root_index(sum);
      if (z < 0) {
        if (alg.nmat[x][y] != 0) throw std::logic_error("constant stored off the root lattice");
        continue;
      }
      Int expect = detail::chain_down(rs, x, y) + 1;
      if (alg.nmat[x][y] != expect && alg.nmat[x][y] != -expect)
        throw std::logic_error("structure constant magnitude violates the chain law");
    }
  std::vector<Int> acc(alg.dim, Int(0));
  for (int i = 0; i < alg.dim; ++i)
    for (int j = i + 1; j < alg.dim; ++j)
      for (int k = j + 1; k < alg.dim; ++k) {
        acc.assign(alg.dim, Int(0));
        auto add_term = [&](int a, int b, int c) {
          for (const auto& [m, cm] : bracket_basis(alg, a, b))
            for (const auto& [q, cq] : bracket_basis(alg, m, c)) acc[q] += cm * cq;
        };
        add_term(i, j, k);
        add_term(j, k, i);
        add_term(k, i, j);
        for (int q = 0; q < alg.dim; ++q)
          if (acc[q] != 0) throw std::logic_error("Jacobi identity failed");
      }
  return alg;
}

inline IntMat intmat_identity(int n) {
  IntMat m(n, std::vector<Int>(n, Int(0)));
  for (int i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

inline IntMat intmat_mul(const IntMat& a, const IntMat& b) {
  int n = static_cast<int>(a.size());
  IntMat c(n, std::vector<Int>(n, Int(0)));
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) {
      if (a[i][k] == 0) continue;
      for (int j = 0; j < n; ++j)
        if (b[k][j] != 0) c[i][j] += a[i][k] * b[k][j];
    }
  return c;
}

// ad(e_root) as a matrix acting on coordinate columns
inline IntMat ad_matrix(const ChevalleyAlgebra& alg, int root) {
  IntMat m(alg.dim, std::vector<Int>(alg.dim, Int(0)));
  for (int j = 0; j < alg.dim; ++j)
    for (const auto& [b, c] : bracket_basis(alg, alg.e_index(root), j)) m[b][j] = c;
  return m;
}

/* divided powers ad^k / k! of a root vector; nilpotence makes the list
   finite and Chevalley integrality makes each entry an integer */
inline std::vector<IntMat> ad_divided_powers(const ChevalleyAlgebra& alg, int root) {
  std::vector<IntMat> out;
  out.push_back(intmat_identity(alg.dim));
  IntMat ad = ad_matrix(alg, root);
  for (int k = 1;; ++k) {
    IntMat next = intmat_mul(out.back(), ad);
    bool zero = true;
    for (auto& row : next)
      for (auto& v : row) {
        if (v % k != 0) throw std::logic_error("divided power is not integral");
        v /= k;
        if (v != 0) zero = false;
      }
    if (zero) break;
    out.push_back(std::move(next));
    if (k > 8) throw std::logic_error("ad is not nilpotent enough");
  }
  return out;
}

// exp(t ad e_root) with an exact integer parameter
inline IntMat exp_ad(const ChevalleyAlgebra& alg, int root, const Int& t) {
  auto pows = ad_divided_powers(alg, root);
  IntMat m = pows[0];
  Int tk = 1;
  for (size_t k = 1; k < pows.size(); ++k) {
    tk *= t;
    for (int i = 0; i < alg.dim; ++i)
      for (int j = 0; j < alg.dim; ++j) m[i][j] += tk * pows[k][i][j];
  }
  return m;
}

// the standard representative n_i = exp(e_i) exp(-f_i) exp(e_i)
inline IntMat weyl_lift_simple(const ChevalleyAlgebra& alg, int i) {
  int pos = alg.rs.simple_pos[i - 1];
  IntMat e = exp_ad(alg, pos, Int(1));
  IntMat f = exp_ad(alg, alg.rs.neg(pos), Int(-1));
  return intmat_mul(intmat_mul(e, f), e);
}

// lift of a reduced word; matrices multiply in word order so the rightmost
// letter acts first, matching the Weyl convention
inline IntMat weyl_lift(const ChevalleyAlgebra& alg, const std::vector<int>& word) {
  IntMat m = intmat_identity(alg.dim);
  for (int i : word) m = intmat_mul(m, weyl_lift_simple(alg, i));
  return m;
}

}  // namespace flagrank
