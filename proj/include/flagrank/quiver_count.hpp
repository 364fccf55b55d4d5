#pragma once

/* Exhaustive subrepresentation and filtration counts over a prime field,
   plus the sampling layer that turns per-sample counts into a generic
   count.

   The enumerator propagates arrow constraints: once part of a candidate
   subrepresentation is fixed, images force lower bounds and preimages
   force upper bounds at the other vertices, so only subspaces between the
   bounds are ever generated.  Work is metered in generated candidates and
   refused against a budget instead of grinding. */

#include <cstdlib>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "fp.hpp"
#include "linalg.hpp"
#include "quiver.hpp"
#include "rational.hpp"

namespace flagrank {

// number of r-dimensional subspaces of F_p^n
inline Int gauss_binomial(int n, int r, uint64_t p) {
  if (r < 0 || r > n) return 0;
  Int num = 1, den = 1;
  Int pi = p;
  for (int i = 1; i <= r; ++i) {
    Int top = 1, bot = 1;
    for (int e = 0; e < n - r + i; ++e) top *= pi;
    for (int e = 0; e < i; ++e) bot *= pi;
    num *= top - 1;
    den *= bot - 1;
  }
  return num / den;
}

inline long long enumeration_cap() {
  if (const char* s = std::getenv("FLAGRANK_CAP")) {
    char* end = nullptr;
    long long v = std::strtoll(s, &end, 10);
    if (end == s || *end != '\0' || v <= 0)
      throw input_error("FLAGRANK_CAP must be a positive integer, got '" + std::string(s) + "'");
    return v;
  }
  return 10000000;
}

inline Int subrep_candidates(const DimVector& dims, const DimVector& a, uint64_t p) {
  Int c = 1;
  for (size_t s = 0; s < dims.size(); ++s) c *= gauss_binomial(dims[s], a[s], p);
  return c;
}

inline Int filtration_candidates(const DimVector& dims, const Decomposition& d, uint64_t p) {
  Int c = 1;
  DimVector rest = dims;
  for (const auto& step : d) {
    c *= subrep_candidates(rest, step, p);
    rest = sub_dim(rest, step);
  }
  return c;
}

[[noreturn]] inline void over_cap(const std::string& what, const Int& projected, long long cap) {
  throw resource_error(what + " needs " + projected.str() +
                       " subspace candidates, the cap is " + std::to_string(cap) +
                       " (override with FLAGRANK_CAP)");
}

/* all r-dimensional subspaces of F_p^n, visited once each as a reduced
   row echelon basis; fn(basis, pivot_cols) */
template <class Fn>
void enumerate_subspaces(const FpField& k, int n, int r, Fn&& fn) {
  if (r < 0 || r > n) return;
  if (r == 0) {
    Mat<FpField> m(k, 0, n);
    std::vector<int> piv;
    fn(m, piv);
    return;
  }
  std::vector<int> comb(r);
  for (int i = 0; i < r; ++i) comb[i] = i;
  for (;;) {
    std::vector<char> is_piv(n, 0);
    for (int c : comb) is_piv[c] = 1;
    std::vector<std::pair<int, int>> free_pos;
    for (int i = 0; i < r; ++i)
      for (int j = comb[i] + 1; j < n; ++j)
        if (!is_piv[j]) free_pos.emplace_back(i, j);
    Mat<FpField> m(k, r, n);
    for (int i = 0; i < r; ++i) m.at(i, comb[i]) = 1;
    std::vector<uint64_t> vals(free_pos.size(), 0);
    for (;;) {
      fn(m, comb);
      size_t t = 0;
      while (t < vals.size()) {
        if (++vals[t] < k.p) {
          m.at(free_pos[t].first, free_pos[t].second) = vals[t];
          break;
        }
        vals[t] = 0;
        m.at(free_pos[t].first, free_pos[t].second) = 0;
        ++t;
      }
      if (t == vals.size()) break;
    }
    int i = r - 1;
    while (i >= 0 && comb[i] == n - r + i) --i;
    if (i < 0) break;
    ++comb[i];
    for (int j = i + 1; j < r; ++j) comb[j] = comb[j - 1] + 1;
  }
}

namespace detail {

// subspace as an echelon row basis
struct Space {
  Mat<FpField> basis;
  std::vector<int> piv;

  int dim() const { return basis.rows; }
};

inline Space zero_space(const FpField& k, int n) { return {Mat<FpField>(k, 0, n), {}}; }

inline Space full_space(const FpField& k, int n) {
  Space s{Mat<FpField>::eye(k, n), std::vector<int>(n)};
  for (int i = 0; i < n; ++i) s.piv[i] = i;
  return s;
}

inline Space echelon(const FpField& k, Mat<FpField> rows) {
  Space s;
  s.basis = row_space(k, std::move(rows), &s.piv);
  return s;
}

inline bool space_contains(const FpField& k, const Space& a, const Space& b) {
  for (int i = 0; i < b.basis.rows; ++i) {
    std::vector<uint64_t> v(b.basis.cols);
    for (int j = 0; j < b.basis.cols; ++j) v[j] = b.basis.at(i, j);
    if (!all_zero(k, reduce_by(k, a.basis, a.piv, std::move(v)))) return false;
  }
  return true;
}

inline Space space_sum(const FpField& k, const Space& a, const Space& b) {
  if (a.dim() == 0) return b;
  if (b.dim() == 0) return a;
  return echelon(k, stack_rows(k, a.basis, b.basis));
}

// u applied to every basis row of s
inline Space image_space(const FpField& k, const Mat<FpField>& u, const Space& s) {
  Mat<FpField> rows(k, s.basis.rows, u.rows);
  for (int i = 0; i < s.basis.rows; ++i)
    for (int r = 0; r < u.rows; ++r) {
      uint64_t acc = 0;
      for (int c = 0; c < u.cols; ++c) acc = k.add(acc, k.mul(u.at(r, c), s.basis.at(i, c)));
      rows.at(i, r) = acc;
    }
  return echelon(k, std::move(rows));
}

// row basis of the kernel read off the echelon form
inline Space kernel_space(const FpField& k, Mat<FpField> m) {
  const int n = m.cols;
  std::vector<int> piv;
  int rank = rref(k, m, &piv);
  std::vector<char> is_piv(n, 0);
  for (int c : piv) is_piv[c] = 1;
  Mat<FpField> rows(k, n - rank, n);
  int out = 0;
  for (int j = 0; j < n; ++j) {
    if (is_piv[j]) continue;
    rows.at(out, j) = 1;
    for (int i = 0; i < rank; ++i) rows.at(out, piv[i]) = k.neg(m.at(i, j));
    ++out;
  }
  return echelon(k, std::move(rows));
}

inline Space preimage_space(const FpField& k, const Mat<FpField>& u, const Space& w) {
  // x such that u x dies in the quotient by w
  std::vector<char> is_piv(u.rows, 0);
  for (int c : w.piv) is_piv[c] = 1;
  std::vector<int> np;
  for (int j = 0; j < u.rows; ++j)
    if (!is_piv[j]) np.push_back(j);
  Mat<FpField> m(k, static_cast<int>(np.size()), u.cols);
  for (int c = 0; c < u.cols; ++c) {
    std::vector<uint64_t> y(u.rows);
    for (int r = 0; r < u.rows; ++r) y[r] = u.at(r, c);
    y = reduce_by(k, w.basis, w.piv, std::move(y));
    for (size_t r = 0; r < np.size(); ++r) m.at(static_cast<int>(r), c) = y[np[r]];
  }
  return kernel_space(k, std::move(m));
}

inline Space intersect_spaces(const FpField& k, const Space& a, const Space& b) {
  // combinations of a's rows that die in the quotient by b
  std::vector<char> is_piv(a.basis.cols, 0);
  for (int c : b.piv) is_piv[c] = 1;
  std::vector<int> np;
  for (int j = 0; j < a.basis.cols; ++j)
    if (!is_piv[j]) np.push_back(j);
  Mat<FpField> m(k, static_cast<int>(np.size()), a.basis.rows);
  for (int i = 0; i < a.basis.rows; ++i) {
    std::vector<uint64_t> v(a.basis.cols);
    for (int j = 0; j < a.basis.cols; ++j) v[j] = a.basis.at(i, j);
    v = reduce_by(k, b.basis, b.piv, std::move(v));
    for (size_t r = 0; r < np.size(); ++r) m.at(static_cast<int>(r), i) = v[np[r]];
  }
  Space coeff = kernel_space(k, std::move(m));
  Mat<FpField> rows(k, coeff.dim(), a.basis.cols);
  for (int i = 0; i < coeff.dim(); ++i)
    for (int j = 0; j < a.basis.cols; ++j) {
      uint64_t acc = 0;
      for (int t = 0; t < a.basis.rows; ++t)
        acc = k.add(acc, k.mul(coeff.basis.at(i, t), a.basis.at(t, j)));
      rows.at(i, j) = acc;
    }
  return echelon(k, std::move(rows));
}

struct Budget {
  long long left = 0;
  std::string what;

  void charge(long long n) {
    left -= n;
    if (left < 0)
      throw resource_error(what + " exceeded the candidate budget of " +
                           std::to_string(enumeration_cap()) + " (override with FLAGRANK_CAP)");
  }
};

struct VertexBounds {
  Space lo, hi;
  bool fixed = false;
};

/* propagate arrow constraints to a fixpoint; false means the bounds
   became contradictory and the branch is dead */
inline bool close_bounds(const FpField& k, const Quiver& q, const QuiverRep<FpField>& rep,
                         const DimVector& a, std::vector<VertexBounds>& b) {
  for (bool changed = true; changed;) {
    changed = false;
    for (int ar = 0; ar < q.n_arrows(); ++ar) {
      const int s = q.arrows[ar].src, t = q.arrows[ar].dst;
      Space img = image_space(k, rep.mats[ar], b[s].lo);
      if (!space_contains(k, b[t].lo, img)) {
        b[t].lo = space_sum(k, b[t].lo, img);
        changed = true;
      }
      // tightening the upper bound only pays off where a choice is still
      // open; a fixed source clashes through the lo/hi containment check
      if (b[s].fixed) continue;
      Space pre = preimage_space(k, rep.mats[ar], b[t].hi);
      if (!space_contains(k, pre, b[s].hi)) {
        b[s].hi = intersect_spaces(k, b[s].hi, pre);
        changed = true;
      }
    }
  }
  for (int s = 0; s < q.n_vertices(); ++s) {
    if (b[s].lo.dim() > a[s] || b[s].hi.dim() < a[s]) return false;
    if (!space_contains(k, b[s].hi, b[s].lo)) return false;
  }
  return true;
}

// incremental echelon absorber for the allocation-free kill test
struct Scratch {
  std::vector<std::vector<uint64_t>> rows;
  std::vector<int> pivs;

  void reset() {
    rows.clear();
    pivs.clear();
  }

  // eliminate v against the stored rows; independent residuals are kept
  bool absorb(const FpField& k, std::vector<uint64_t>& v) {
    for (size_t i = 0; i < rows.size(); ++i) {
      uint64_t f = v[pivs[i]];
      if (f == 0) continue;
      for (size_t j = 0; j < v.size(); ++j) v[j] = k.sub(v[j], k.mul(f, rows[i][j]));
    }
    int lead = -1;
    for (size_t j = 0; j < v.size(); ++j)
      if (v[j] != 0) {
        lead = static_cast<int>(j);
        break;
      }
    if (lead < 0) return false;
    uint64_t inv = k.inv(v[lead]);
    for (size_t j = 0; j < v.size(); ++j) v[j] = k.mul(v[j], inv);
    rows.push_back(v);
    pivs.push_back(lead);
    return true;
  }
};

/* rows spanning a complement of lo inside the m-dimensional candidates
   between lo and hi, one candidate per call to fn; the candidate subspace
   itself is lo + rowspace(xrows) */
template <class Fn>
void enumerate_complement_rows(const FpField& k, const Space& lo, const Space& hi, int m,
                               Budget& budget, Fn&& fn) {
  const int n = lo.basis.cols;
  Mat<FpField> comp_rows(k, hi.dim(), n);
  int d = 0;
  for (int i = 0; i < hi.dim(); ++i) {
    std::vector<uint64_t> v(n);
    for (int j = 0; j < n; ++j) v[j] = hi.basis.at(i, j);
    v = reduce_by(k, lo.basis, lo.piv, std::move(v));
    if (all_zero(k, v)) continue;
    for (int j = 0; j < n; ++j) comp_rows.at(d, j) = v[j];
    ++d;
  }
  comp_rows.a.resize(static_cast<size_t>(d) * n);
  comp_rows.rows = d;
  Space comp = echelon(k, std::move(comp_rows));
  if (comp.dim() != hi.dim() - lo.dim()) throw std::logic_error("complement has the wrong size");
  Mat<FpField> xrows(k, m - lo.dim(), n);
  enumerate_subspaces(k, comp.dim(), m - lo.dim(), [&](const Mat<FpField>& coords,
                                                       const std::vector<int>&) {
    budget.charge(1);
    for (int i = 0; i < coords.rows; ++i)
      for (int j = 0; j < n; ++j) {
        uint64_t acc = 0;
        for (int t = 0; t < comp.dim(); ++t)
          acc = k.add(acc, k.mul(coords.at(i, t), comp.basis.at(t, j)));
        xrows.at(i, j) = acc;
      }
    fn(xrows);
  });
}

template <class Fn>
void subrep_search(const FpField& k, const Quiver& q, const QuiverRep<FpField>& rep,
                   const DimVector& a, std::vector<VertexBounds>& b, Budget& budget, Fn&& fn) {
  int pick = -1;
  Int pick_count = 0;
  for (int s = 0; s < q.n_vertices(); ++s) {
    if (b[s].fixed) continue;
    Int c = gauss_binomial(b[s].hi.dim() - b[s].lo.dim(), a[s] - b[s].lo.dim(), k.p);
    if (pick < 0 || c < pick_count) {
      pick = s;
      pick_count = c;
    }
  }
  if (pick < 0) {
    std::vector<Mat<FpField>> bases(q.n_vertices());
    std::vector<std::vector<int>> pivs(q.n_vertices());
    for (int s = 0; s < q.n_vertices(); ++s) {
      bases[s] = b[s].lo.basis;
      pivs[s] = b[s].lo.piv;
    }
    fn(bases, pivs);
    return;
  }

  /* Kill contexts, one per vertex reachable by an arrow out of pick.  The
     closure already forces u(lo_pick) into lo_t, so a candidate survives
     exactly when its new rows' images fit in the remaining slack over
     lo_t.  Arrows into pick from elsewhere are vacuous here for the same
     reason, and get re-checked in the closure for survivors. */
  const int m_new = a[pick] - b[pick].lo.dim();
  struct KillCtx {
    int t;
    int slack;
    std::vector<const Mat<FpField>*> mats;
    Scratch scratch;
  };
  std::vector<KillCtx> kills;
  for (int ar = 0; ar < q.n_arrows(); ++ar) {
    if (q.arrows[ar].src != pick) continue;
    const int t = q.arrows[ar].dst;
    KillCtx* ctx = nullptr;
    for (auto& c : kills)
      if (c.t == t) ctx = &c;
    if (!ctx) {
      kills.push_back({t, a[t] - b[t].lo.dim() - (t == pick ? m_new : 0), {}, {}});
      ctx = &kills.back();
    }
    ctx->mats.push_back(&rep.mats[ar]);
  }
  std::vector<uint64_t> y;
  enumerate_complement_rows(k, b[pick].lo, b[pick].hi, a[pick], budget,
                            [&](const Mat<FpField>& xrows) {
    for (auto& ctx : kills) {
      ctx.scratch.reset();
      int indep = 0;
      if (ctx.t == pick)  // loop arrows measure images against S itself
        for (int i = 0; i < xrows.rows; ++i) {
          y.assign(xrows.a.begin() + static_cast<size_t>(i) * xrows.cols,
                   xrows.a.begin() + static_cast<size_t>(i + 1) * xrows.cols);
          y = reduce_by(k, b[pick].lo.basis, b[pick].lo.piv, std::move(y));
          ctx.scratch.absorb(k, y);
        }
      for (const Mat<FpField>* u : ctx.mats)
        for (int i = 0; i < xrows.rows; ++i) {
          y.assign(u->rows, 0);
          for (int r = 0; r < u->rows; ++r) {
            uint64_t acc = 0;
            for (int c = 0; c < u->cols; ++c)
              acc = k.add(acc, k.mul(u->at(r, c), xrows.at(i, c)));
            y[r] = acc;
          }
          y = reduce_by(k, b[ctx.t].lo.basis, b[ctx.t].lo.piv, std::move(y));
          if (ctx.scratch.absorb(k, y) && ++indep > ctx.slack) return;
        }
    }
    Space s = echelon(k, stack_rows(k, b[pick].lo.basis, xrows));
    if (s.dim() != a[pick]) throw std::logic_error("between-bounds candidate has the wrong size");
    std::vector<VertexBounds> next = b;
    next[pick] = {s, s, true};
    if (!close_bounds(k, q, rep, a, next)) return;
    subrep_search(k, q, rep, a, next, budget, fn);
  });
}

}  // namespace detail

/* every subrepresentation of rep with dimension vector a, visited once as
   one echelon basis per vertex; fn(bases, pivot_cols); work is metered
   against the budget */
template <class Fn>
void enumerate_subreps(const FpField& k, const Quiver& q, const QuiverRep<FpField>& rep,
                       const DimVector& a, detail::Budget& budget, Fn&& fn) {
  check_dim_vector(q, a, "subrepresentation dimension");
  for (int s = 0; s < q.n_vertices(); ++s)
    if (a[s] > rep.dims[s])
      throw input_error("subrepresentation dimension exceeds the ambient dimension at vertex " +
                        q.vertices[s]);
  std::vector<detail::VertexBounds> b(q.n_vertices());
  for (int s = 0; s < q.n_vertices(); ++s)
    b[s] = {detail::zero_space(k, rep.dims[s]), detail::full_space(k, rep.dims[s]), false};
  if (!detail::close_bounds(k, q, rep, a, b)) return;
  detail::subrep_search(k, q, rep, a, b, budget, fn);
}

inline long long count_subreps(const FpField& k, const Quiver& q, const QuiverRep<FpField>& rep,
                               const DimVector& a, long long cap) {
  check_dim_vector(q, a, "subrepresentation dimension");
  for (int s = 0; s < q.n_vertices(); ++s)
    if (a[s] > rep.dims[s])
      throw input_error("subrepresentation dimension exceeds the ambient dimension at vertex " +
                        q.vertices[s]);
  Int projected = subrep_candidates(rep.dims, a, k.p);
  if (projected > cap) over_cap("subrepresentation count", projected, cap);
  long long count = 0;
  detail::Budget budget{cap, "subrepresentation count"};
  enumerate_subreps(k, q, rep, a, budget, [&](const auto&, const auto&) { ++count; });
  return count;
}

// rep modulo a subrepresentation; basis of the quotient = classes of the
// unit vectors at the non-pivot coordinates
inline QuiverRep<FpField> quotient_rep(const FpField& k, const Quiver& q,
                                       const QuiverRep<FpField>& rep,
                                       const std::vector<Mat<FpField>>& bases,
                                       const std::vector<std::vector<int>>& pivs) {
  std::vector<std::vector<int>> np(q.n_vertices());
  DimVector qdims(q.n_vertices());
  for (int s = 0; s < q.n_vertices(); ++s) {
    std::vector<char> is_piv(rep.dims[s], 0);
    for (int c : pivs[s]) is_piv[c] = 1;
    for (int j = 0; j < rep.dims[s]; ++j)
      if (!is_piv[j]) np[s].push_back(j);
    qdims[s] = static_cast<int>(np[s].size());
  }
  std::vector<Mat<FpField>> mats;
  mats.reserve(q.arrows.size());
  for (int ar = 0; ar < q.n_arrows(); ++ar) {
    const int ia = q.arrows[ar].src, ta = q.arrows[ar].dst;
    Mat<FpField> m(k, qdims[ta], qdims[ia]);
    for (int c = 0; c < qdims[ia]; ++c) {
      std::vector<uint64_t> y(rep.dims[ta]);
      for (int r = 0; r < rep.dims[ta]; ++r) y[r] = rep.mats[ar].at(r, np[ia][c]);
      y = reduce_by(k, bases[ta], pivs[ta], std::move(y));
      for (int r = 0; r < qdims[ta]; ++r) m.at(r, c) = y[np[ta][r]];
    }
    mats.push_back(std::move(m));
  }
  return {qdims, std::move(mats)};
}

namespace detail {

inline long long filtration_rec(const FpField& k, const Quiver& q, const QuiverRep<FpField>& rep,
                                const Decomposition& d, size_t idx, Budget& budget) {
  if (idx + 1 == d.size()) {
    if (d[idx] != rep.dims) throw std::logic_error("filtration steps do not exhaust the rep");
    return 1;
  }
  long long total = 0;
  enumerate_subreps(k, q, rep, d[idx], budget,
                    [&](const std::vector<Mat<FpField>>& bases,
                        const std::vector<std::vector<int>>& pivs) {
                      total += filtration_rec(k, q, quotient_rep(k, q, rep, bases, pivs), d,
                                              idx + 1, budget);
                    });
  return total;
}

}  // namespace detail

/* chains 0 = R_0 < R_1 < ... < R_s = rep with dim(R_i/R_{i-1}) = d[i-1];
   counted as: pick R_1, recurse on rep / R_1 */
inline long long count_filtrations(const FpField& k, const Quiver& q,
                                   const QuiverRep<FpField>& rep, const Decomposition& d,
                                   long long cap) {
  check_decomposition(q, d);
  if (decomposition_total(q, d) != rep.dims)
    throw input_error("filtration steps must sum to the representation's dimension");
  Int projected = filtration_candidates(rep.dims, d, k.p);
  if (projected > cap) over_cap("filtration count", projected, cap);
  detail::Budget budget{cap, "filtration count"};
  return detail::filtration_rec(k, q, rep, d, 0, budget);
}

/* Generic counts by sampling.  A query runs 96 samples at p = 101 and at
   p = 103 and keeps per-sample counts below 3p/4; larger counts witness a
   positive-dimensional fiber (the incidence variety is smooth and the
   counting map is flat wherever fibers are finite, so any finite fiber has
   at most the generic number of rational points, while positive-dimensional
   fibers carry on the order of p).  The reported value is the largest count
   confirmed by at least three samples at both primes.  Undercounts (not all
   generic points are rational over the sample field) recur at every prime
   and lose to the maximum; stray finite overcounts cannot repeat that often
   at two primes.  No qualifying value means the query is unstable. */
struct StabilizedCount {
  long long value = 0;
  std::vector<uint64_t> primes;
  int samples = 0;
};

namespace detail {

constexpr uint64_t kStabilizePrimes[2] = {101, 103};
constexpr int kStabilizeSamples = 96;
constexpr int kStabilizeSupport = 3;

template <class SampleFn>
StabilizedCount stabilize(const std::string& what, uint64_t seed, SampleFn&& sample) {
  std::vector<uint64_t> primes(std::begin(kStabilizePrimes), std::end(kStabilizePrimes));
  Budget budget{enumeration_cap(), what};
  std::map<long long, std::map<uint64_t, int>> support;
  std::map<uint64_t, int> unbounded;
  for (uint64_t p : primes) {
    FpField k(p);
    std::mt19937_64 rng(seed * 0x9e3779b97f4a7c15ull + p);
    for (int t = 0; t < kStabilizeSamples; ++t) {
      long long n = sample(k, rng, budget);
      if (n >= static_cast<long long>(3 * p / 4))
        ++unbounded[p];  // positive-dimensional fiber, not a generic count
      else
        support[n][p]++;
    }
  }
  long long best = -1;
  for (const auto& [value, per_prime] : support) {
    size_t confirmed = 0;
    for (const auto& [p, n] : per_prime)
      if (n >= kStabilizeSupport) ++confirmed;
    if (confirmed == primes.size() && value > best) best = value;
  }
  if (best < 0) {
    std::ostringstream os;
    os << what << " did not stabilize:";
    for (uint64_t p : primes) {
      os << " p=" << p << " {";
      bool first = true;
      for (const auto& [value, per_prime] : support) {
        auto it = per_prime.find(p);
        if (it == per_prime.end()) continue;
        if (!first) os << ", ";
        first = false;
        os << value << "x" << it->second;
      }
      if (auto it = unbounded.find(p); it != unbounded.end()) {
        if (!first) os << ", ";
        os << "unbounded x" << it->second;
      }
      os << "}";
    }
    throw instability_error(os.str());
  }
  return {best, primes, kStabilizeSamples};
}

}  // namespace detail

struct CircReport {
  long long value = 0;
  long long form = 0;  // <a, b>
  std::vector<uint64_t> primes;
  int samples = 0;
  std::string route;  // "form-nonzero" or "stabilized"
};

/* number of subrepresentations of dimension a in a generic representation
   of dimension a + b.  When <a, b> != 0 the incidence variety and the
   representation space have different dimensions, so the generic fiber is
   empty or positive dimensional; both mean 0 here.  When <a, b> = 0 the
   count is finite generically and is read off the sampling consensus. */
inline CircReport circ(const Quiver& q, const DimVector& a, const DimVector& b, uint64_t seed) {
  check_dim_vector(q, a, "first dimension vector");
  check_dim_vector(q, b, "second dimension vector");
  CircReport rep;
  rep.form = ringel_form(q, a, b);
  if (rep.form != 0) {
    rep.route = "form-nonzero";
    return rep;
  }
  DimVector total = add_dim(a, b);
  auto st = detail::stabilize(
      "subrepresentation count", seed,
      [&](const FpField& k, std::mt19937_64& rng, detail::Budget& budget) {
        auto r = random_rep(k, q, total, rng);
        long long n = 0;
        enumerate_subreps(k, q, r, a, budget, [&](const auto&, const auto&) { ++n; });
        return n;
      });
  rep.value = st.value;
  rep.primes = std::move(st.primes);
  rep.samples = st.samples;
  rep.route = "stabilized";
  return rep;
}

// generic number of filtrations with the given steps, same consensus rule
inline StabilizedCount stabilized_filtration_count(const Quiver& q, const Decomposition& d,
                                                   uint64_t seed) {
  check_decomposition(q, d);
  DimVector total = decomposition_total(q, d);
  return detail::stabilize(
      "filtration count", seed,
      [&](const FpField& k, std::mt19937_64& rng, detail::Budget& budget) {
        auto r = random_rep(k, q, total, rng);
        return detail::filtration_rec(k, q, r, d, 0, budget);
      });
}

}  // namespace flagrank
