#pragma once

/* Levi movability and the deformed cup product.

   A tuple (w_1 .. w_s) of minimal representatives with codimensions
   summing to (s-1) dim G/P cuts out an expected-dimension-zero
   intersection of translated Schubert varieties.  The tuple is Levi
   movable when translates by the Levi part L of P alone already meet
   transversally at the base point.  The deformed coefficient keeps the
   cup value on movable tuples and is zero otherwise.

   Three movability routes:
     - full flag, exact: every positive root lies in exactly s-1 of the
       inversion sets (equivalent to the tangent criterion below because
       the torus preserves every sum of root spaces);
     - any parabolic, randomized: sample Levi elements over F_p and test
       the tangent-space map for invertibility; one-sided, a success
       certifies movability and failures only bound it;
     - any parabolic, character: nonzero cup value plus a weight identity
       on the center of the Levi; cheap, cross-checked against the other
       two routes by the test suite.
*/

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "chevalley.hpp"
#include "linalg.hpp"
#include "schubert.hpp"

namespace flagrank {

namespace detail {

inline long long movability_degree_sum(const SchubertTable& t, const Parabolic& delta,
                                       const std::vector<int>& labels) {
  if (labels.empty()) throw input_error("movability needs a nonempty tuple");
  long long sum = 0;
  for (int iu : labels) {
    if (iu < 0 || iu >= t.size()) throw input_error("movability label out of range");
    if (!is_minimal_rep(t.rs, t.element(iu), delta))
      throw input_error("movability label is not a minimal coset representative: " +
                        word_to_string(t.element(iu)));
    sum += t.element(iu).length();
  }
  long long want = static_cast<long long>(labels.size() - 1) * flag_dim(t.rs, delta);
  if (sum != want)
    throw input_error("movability needs codimensions summing to " + std::to_string(want) +
                      ", got " + std::to_string(sum));
  return sum;
}

}  // namespace detail

// full flag only: every positive root in exactly s-1 of the inversion sets
inline bool is_levi_movable_exact_fullflag(const SchubertTable& t,
                                           const std::vector<int>& labels) {
  detail::movability_degree_sum(t, Parabolic{}, labels);
  const int s = static_cast<int>(labels.size());
  std::vector<int> cnt(t.rs.n_pos, 0);
  for (int iu : labels)
    for (int r : inversion_set(t.rs, t.element(iu))) ++cnt[r];
  for (int c : cnt)
    if (c != s - 1) return false;
  return true;
}

// sum of the inversion roots lying outside the Levi, in simple root coordinates
inline std::vector<Int> chi_character(const RootSystem& rs, const Parabolic& delta,
                                      const WeylElement& w) {
  std::vector<Int> chi(rs.rank, Int(0));
  for (int r : inversion_set(rs, w)) {
    if (in_levi(rs, delta, r)) continue;
    for (int j = 0; j < rs.rank; ++j) chi[j] += rs.roots[r][j];
  }
  return chi;
}

/* character route: the cup value must be nonzero and the characters must
   add up to s-1 copies of the determinant of the tangent space, at least
   in the coordinates fixed by the center of the Levi (those outside
   delta).  Cross-checked exhaustively against the exact and randomized
   routes on small systems. */
inline bool is_levi_movable_character(const SchubertTable& t, const Parabolic& delta,
                                      const std::vector<int>& labels) {
  detail::movability_degree_sum(t, delta, labels);
  const int s = static_cast<int>(labels.size());
  std::vector<int> duals;
  duals.reserve(labels.size());
  for (int iu : labels) duals.push_back(dual_index(t, delta, iu));
  if (multi_point_coefficient(t, delta, duals) == 0) return false;

  const RootSystem& rs = t.rs;
  std::vector<Int> lhs(rs.rank, Int(0));
  for (int iu : labels) {
    auto chi = chi_character(rs, delta, t.element(iu));
    for (int j = 0; j < rs.rank; ++j) lhs[j] += chi[j];
  }
  std::vector<Int> rhs(rs.rank, Int(0));
  for (int r = 0; r < rs.n_pos; ++r) {
    if (in_levi(rs, delta, r)) continue;
    for (int j = 0; j < rs.rank; ++j) rhs[j] += rs.roots[r][j];
  }
  for (int j = 1; j <= rs.rank; ++j) {
    bool fixed = true;
    for (int i : delta)
      if (i == j) fixed = false;
    if (!fixed) continue;
    if (lhs[j - 1] != rhs[j - 1] * (s - 1)) return false;
  }
  return true;
}

struct BKRandomized {
  uint64_t seed = 0;
  uint64_t prime = 65537;
  int trials = 20;
};

namespace detail {

// divided powers of ad e_r reduced mod p, for the Levi root directions
inline std::vector<Mat<FpField>> fp_divided_powers(const FpField& k, const ChevalleyAlgebra& alg,
                                                   int root) {
  auto pows = ad_divided_powers(alg, root);
  std::vector<Mat<FpField>> out;
  out.reserve(pows.size());
  Int p(static_cast<long long>(k.p));
  for (const auto& m : pows) {
    Mat<FpField> f(k, alg.dim, alg.dim);
    for (int i = 0; i < alg.dim; ++i)
      for (int j = 0; j < alg.dim; ++j) {
        Int v = m[i][j] % p;
        if (v < 0) v += p;
        f.at(i, j) = v.convert_to<uint64_t>();
      }
    out.push_back(std::move(f));
  }
  return out;
}

inline Mat<FpField> fp_exp(const FpField& k, const std::vector<Mat<FpField>>& pows, uint64_t t) {
  Mat<FpField> m = pows[0];
  uint64_t tk = 1;
  for (size_t e = 1; e < pows.size(); ++e) {
    tk = k.mul(tk, t);
    if (tk == 0) break;
    for (size_t idx = 0; idx < m.a.size(); ++idx)
      m.a[idx] = k.add(m.a[idx], k.mul(tk, pows[e].a[idx]));
  }
  return m;
}

// adjoint matrix of a random Levi element: root group factors for each
// Levi root pair, then a torus factor scaling e_beta by prod z_j^beta_j
inline Mat<FpField> random_levi_adjoint(const FpField& k, const ChevalleyAlgebra& alg,
                                        const std::vector<int>& levi_pos,
                                        const std::map<int, std::vector<Mat<FpField>>>& pows,
                                        std::mt19937_64& rng) {
  std::uniform_int_distribution<uint64_t> any(0, k.p - 1);
  std::uniform_int_distribution<uint64_t> unit(1, k.p - 1);
  Mat<FpField> m = Mat<FpField>::eye(k, alg.dim);
  for (int r : levi_pos) {
    m = mat_mul(k, m, fp_exp(k, pows.at(r), any(rng)));
    m = mat_mul(k, m, fp_exp(k, pows.at(alg.rs.neg(r)), any(rng)));
  }
  std::vector<uint64_t> z(alg.rs.rank);
  for (auto& v : z) v = unit(rng);
  Mat<FpField> d(k, alg.dim, alg.dim);
  for (int c = 0; c < alg.dim; ++c) {
    if (!alg.is_root_index(c)) {
      d.at(c, c) = 1;
      continue;
    }
    uint64_t scale = 1;
    for (int j = 0; j < alg.rs.rank; ++j)
      scale = k.mul(scale, k.pow_int(z[j], alg.rs.roots[c][j]));
    d.at(c, c) = scale;
  }
  return mat_mul(k, m, d);
}

}  // namespace detail

/* tangent criterion over F_p: with V_i the span of the parabolic algebra
   and the translated tangent space of the i-th shifted Schubert cell,
   the tuple moves iff g/p -> sum_i g/V_i is an isomorphism for some
   choice of Levi translates.  A successful sample certifies movability;
   what makes the converse reliable is that for an unmovable tuple the
   map is singular at every sample. */
inline bool is_levi_movable_randomized(const SchubertTable& t, const ChevalleyAlgebra& alg,
                                       const Parabolic& delta, const std::vector<int>& labels,
                                       const BKRandomized& rp) {
  const RootSystem& rs = t.rs;
  if (alg.rs.cartan != rs.cartan)
    throw std::logic_error("algebra and table are over different root systems");
  detail::movability_degree_sum(t, delta, labels);
  const int s = static_cast<int>(labels.size());
  const int d = flag_dim(rs, delta);

  int maxh = rs.height(rs.n_pos - 1);
  if (rp.prime <= 2ull * static_cast<uint64_t>(maxh) + 1)
    throw input_error("modulus too small for the root heights, need p > " +
                      std::to_string(2 * maxh + 1));
  if (rp.trials <= 0) throw input_error("trial count must be positive");
  FpField k(rp.prime);
  if (d == 0) return true;

  auto levi_pos = levi_positive_roots(rs, delta);
  std::map<int, std::vector<Mat<FpField>>> pows;
  for (int r : levi_pos) {
    pows.emplace(r, detail::fp_divided_powers(k, alg, r));
    pows.emplace(rs.neg(r), detail::fp_divided_powers(k, alg, rs.neg(r)));
  }

  // column indices of the parabolic algebra and of the quotient basis
  std::vector<int> pcols, qcols;
  for (int r = 0; r < rs.n_pos; ++r) {
    pcols.push_back(alg.e_index(r));
    if (in_levi(rs, delta, r))
      pcols.push_back(alg.e_index(rs.neg(r)));
    else
      qcols.push_back(alg.e_index(rs.neg(r)));
  }
  for (int j = 0; j < rs.rank; ++j) pcols.push_back(alg.h_index(j));

  // basis of Ad(w_i^-1) b: root vectors indexed by w_i^-1 R^+, plus h
  std::vector<std::vector<int>> wcols(s);
  for (int i = 0; i < s; ++i) {
    auto winv = weyl_inverse(rs, t.element(labels[i]));
    for (int r = 0; r < rs.n_pos; ++r) wcols[i].push_back(winv.perm[r]);
    for (int j = 0; j < rs.rank; ++j) wcols[i].push_back(alg.h_index(j));
  }

  std::mt19937_64 rng(rp.seed);
  for (int trial = 0; trial < rp.trials; ++trial) {
    Mat<FpField> big(k, d, d);
    int off = 0;
    for (int i = 0; i < s; ++i) {
      auto adl = detail::random_levi_adjoint(k, alg, levi_pos, pows, rng);
      Mat<FpField> v(k, static_cast<int>(pcols.size() + wcols[i].size()), alg.dim);
      int row = 0;
      for (int c : pcols) v.at(row++, c) = 1;
      for (int c : wcols[i]) {
        for (int b = 0; b < alg.dim; ++b) v.at(row, b) = adl.at(b, c);
        ++row;
      }
      std::vector<int> piv;
      int rank = rref(k, v, &piv);
      int qi = alg.dim - rank;
      if (qi != d - t.element(labels[i]).length())
        throw std::logic_error("shifted tangent space has the wrong dimension");
      std::vector<int> pivot_row(alg.dim, -1), np_pos(alg.dim, -1);
      for (int r2 = 0; r2 < rank; ++r2) pivot_row[piv[r2]] = r2;
      {
        int pos = 0;
        for (int c = 0; c < alg.dim; ++c)
          if (pivot_row[c] < 0) np_pos[c] = pos++;
      }
      for (int j = 0; j < d; ++j) {
        int c = qcols[j];
        if (pivot_row[c] < 0) {
          big.at(j, off + np_pos[c]) = 1;
        } else {
          int r2 = pivot_row[c];
          for (int b = 0; b < alg.dim; ++b)
            if (np_pos[b] >= 0 && !k.is_zero(v.at(r2, b)))
              big.at(j, off + np_pos[b]) = k.neg(v.at(r2, b));
        }
      }
      off += qi;
    }
    if (off != d) throw std::logic_error("quotient dimensions do not add up");
    if (rank_of(k, big) == d) return true;
  }
  return false;
}

struct BKReport {
  Int cup{0};
  bool movable = false;
  Int bk{0};
  std::string method;
  int trials = 0;
  uint64_t prime = 0;
};

/* the deformed multi-point coefficient: cup value on the dual labels,
   kept iff the tuple is Levi movable.  Full flags use the exact route;
   proper parabolics need the randomized parameters. */
inline BKReport bk_multi_constant(const SchubertTable& t, const Parabolic& delta,
                                  const std::vector<int>& labels,
                                  const ChevalleyAlgebra* alg = nullptr,
                                  const BKRandomized* rp = nullptr) {
  BKReport rep;
  if (delta.empty()) {
    rep.movable = is_levi_movable_exact_fullflag(t, labels);
    rep.method = "exact-fullflag";
  } else {
    if (!alg || !rp)
      throw input_error("a proper parabolic needs the randomized movability parameters");
    rep.movable = is_levi_movable_randomized(t, *alg, delta, labels, *rp);
    rep.method = "randomized";
    rep.trials = rp->trials;
    rep.prime = rp->prime;
  }
  std::vector<int> duals;
  duals.reserve(labels.size());
  for (int iu : labels) duals.push_back(dual_index(t, delta, iu));
  rep.cup = multi_point_coefficient(t, delta, duals);
  rep.bk = rep.movable ? rep.cup : Int(0);
  return rep;
}

// coefficient of sigma_w in sigma_u (.)_0 sigma_v, codimension-graded labels
inline Int bk_binary_constant(const SchubertTable& t, const Parabolic& delta, int iu, int iv,
                              int iw, const ChevalleyAlgebra* alg = nullptr,
                              const BKRandomized* rp = nullptr) {
  for (int idx : {iu, iv, iw})
    if (!is_minimal_rep(t.rs, t.element(idx), delta))
      throw input_error("deformed product labels must be minimal coset representatives");
  if (t.element(iu).length() + t.element(iv).length() != t.element(iw).length()) return Int(0);
  std::vector<int> tuple{dual_index(t, delta, iu), dual_index(t, delta, iv), iw};
  return bk_multi_constant(t, delta, tuple, alg, rp).bk;
}

struct Theorem4Report {
  bool movable_input = false;
  bool movable_ambient = false;  // minimal factors on G/P
  bool movable_levi = false;     // parabolic factors on the Levi flag variety
  long long codim_ambient_sum = 0, codim_ambient_expected = 0;
  long long codim_levi_sum = 0, codim_levi_expected = 0;
  bool codims_ok = false;
  Int c_input{0}, c_ambient{0}, c_levi{0};
  bool product_ok = false;
  bool pass = false;
};

/* factorization of the deformed coefficient through a larger parabolic:
   a movable tuple on G/Q with Q inside P factors as w_i = u_i v_i with
   u_i minimal for P and v_i in the Levi of P, and the multi-point
   coefficient factors as the G/P value times the Levi value.  The two
   codimension identities and the movability of both factors are part of
   the claim and are checked, not assumed. */
inline Theorem4Report theorem4_check(const SchubertTable& t, const ChevalleyAlgebra& alg,
                                     const Parabolic& deltaQ, const Parabolic& deltaP,
                                     const std::vector<int>& labels, const BKRandomized& rp) {
  const RootSystem& rs = t.rs;
  for (int i : deltaQ) {
    bool found = false;
    for (int j : deltaP) found = found || (i == j);
    if (!found) throw input_error("theorem4 needs the small parabolic inside the large one");
  }
  Theorem4Report rep;

  // movability of the input tuple on G/Q is the hypothesis
  rep.movable_input = deltaQ.empty()
                          ? is_levi_movable_exact_fullflag(t, labels)
                          : is_levi_movable_randomized(t, alg, deltaQ, labels, rp);
  if (!rep.movable_input)
    throw hypothesis_error("tuple is not Levi movable on the small flag variety");

  const int s = static_cast<int>(labels.size());
  std::vector<int> ambient;  // u_i as table indices
  std::vector<WeylElement> parab;
  for (int iu : labels) {
    auto f = coset_factorize(rs, t.element(iu), deltaP);
    int idx = t.group.find(f.minimal);
    if (idx < 0) throw std::logic_error("minimal factor missing from the group table");
    ambient.push_back(idx);
    parab.push_back(f.parabolic);
    rep.codim_ambient_sum += f.minimal.length();
    rep.codim_levi_sum += f.parabolic.length();
  }
  rep.codim_ambient_expected = static_cast<long long>(s - 1) * flag_dim(rs, deltaP);
  rep.codim_levi_expected =
      static_cast<long long>(s - 1) * (levi_dim(rs, deltaP) - levi_dim(rs, deltaQ));
  rep.codims_ok = rep.codim_ambient_sum == rep.codim_ambient_expected &&
                  rep.codim_levi_sum == rep.codim_levi_expected;

  {
    std::vector<int> duals;
    for (int iu : labels) duals.push_back(dual_index(t, deltaQ, iu));
    rep.c_input = multi_point_coefficient(t, deltaQ, duals);
  }
  if (!rep.codims_ok) return rep;  // the identity cannot even be stated

  rep.movable_ambient = deltaP.empty()
                            ? is_levi_movable_exact_fullflag(t, ambient)
                            : is_levi_movable_randomized(t, alg, deltaP, ambient, rp);
  {
    std::vector<int> duals;
    for (int iu : ambient) duals.push_back(dual_index(t, deltaP, iu));
    rep.c_ambient = multi_point_coefficient(t, deltaP, duals);
  }

  if (deltaP.empty()) {
    // Q = P = Borel: the Levi flag variety is a point
    rep.movable_levi = true;
    rep.c_levi = Int(1);
  } else {
    auto ls = levi_subsystem(rs, deltaP);
    SchubertTable sub = build_schubert_table(ls.sub);
    ChevalleyAlgebra sub_alg = build_chevalley(ls.sub);
    Parabolic sub_deltaQ;
    for (int i : deltaQ) {
      int si = -1;
      for (size_t a = 0; a < ls.simple_to_ambient.size(); ++a)
        if (ls.simple_to_ambient[a] == i - 1) si = static_cast<int>(a) + 1;
      if (si < 0) throw std::logic_error("small parabolic does not map into the Levi");
      sub_deltaQ.push_back(si);
    }
    std::vector<int> levi_labels;
    for (int i = 0; i < s; ++i) {
      auto wbar = levi_representative(rs, ls, t.element(labels[i]), deltaP);
      int idx = sub.group.find(wbar);
      if (idx < 0) throw std::logic_error("Levi factor missing from the subgroup table");
      levi_labels.push_back(idx);
    }
    rep.movable_levi =
        sub_deltaQ.empty()
            ? is_levi_movable_exact_fullflag(sub, levi_labels)
            : is_levi_movable_randomized(sub, sub_alg, sub_deltaQ, levi_labels, rp);
    std::vector<int> duals;
    for (int iu : levi_labels) duals.push_back(dual_index(sub, sub_deltaQ, iu));
    rep.c_levi = multi_point_coefficient(sub, sub_deltaQ, duals);
  }

  rep.product_ok = rep.c_input == rep.c_ambient * rep.c_levi;
  rep.pass = rep.codims_ok && rep.product_ok && rep.movable_ambient && rep.movable_levi;
  return rep;
}

struct Corollary2Report {
  int rank = 0;
  long long triples_checked = 0;  // ordered triples with the right codimension sum
  long long movable = 0;
  std::vector<Int> nonzero_values;  // distinct nonzero deformed values
  bool all_one = false;
};

/* exhaustive scan of the full symplectic flag variety: every nonzero
   deformed coefficient of a triple should be exactly 1 */
inline Corollary2Report corollary2_scan(int n, long long cap = 50000) {
  if (n < 2) throw input_error("symplectic scan needs rank at least 2");
  RootSystem rs = build_root_system("C" + std::to_string(n));
  SchubertTable t = build_schubert_table(rs, cap);
  const int N = t.size();
  const int np = rs.n_pos;
  if (np > 62) throw resource_error("symplectic scan bitmask limited to 62 positive roots");
  const uint64_t full = (1ull << np) - 1;

  std::vector<uint64_t> mask(N, 0);
  std::vector<int> len(N);
  for (int i = 0; i < N; ++i) {
    len[i] = t.element(i).length();
    for (int r : inversion_set(rs, t.element(i))) mask[i] |= 1ull << r;
  }

  Corollary2Report rep;
  rep.rank = n;
  std::map<std::array<int, 3>, Int> memo;
  std::set<Int> values;
  Parabolic borel;
  for (int a = 0; a < N; ++a)
    for (int b = 0; b < N; ++b) {
      int lab = len[a] + len[b];
      if (lab > 2 * np) continue;
      for (int c = 0; c < N; ++c) {
        if (lab + len[c] != 2 * np) continue;
        ++rep.triples_checked;
        uint64_t m1 = mask[a], m2 = mask[b], m3 = mask[c];
        uint64_t twice = ((m1 & m2) | (m1 & m3) | (m2 & m3)) & ~(m1 & m2 & m3);
        if (twice != full) continue;
        ++rep.movable;
        std::array<int, 3> key{a, b, c};
        std::sort(key.begin(), key.end());
        auto it = memo.find(key);
        Int cup;
        if (it != memo.end()) {
          cup = it->second;
        } else {
          std::vector<int> duals{dual_index(t, borel, a), dual_index(t, borel, b),
                                 dual_index(t, borel, c)};
          cup = multi_point_coefficient(t, borel, duals);
          memo.emplace(key, cup);
        }
        if (cup != 0) values.insert(cup);
      }
    }
  rep.nonzero_values.assign(values.begin(), values.end());
  rep.all_one = values.size() == 1 && *values.begin() == 1;
  return rep;
}

}  // namespace flagrank
