#pragma once

/* Quiver representations: the Euler form, Hom and Ext via the standard
   two-term complex, and dimension vector bookkeeping.  Loops and parallel
   arrows are allowed; vertex order of declaration fixes the coordinate
   order of every dimension vector. */

#include <random>
#include <string>
#include <vector>

#include "errors.hpp"
#include "fp.hpp"
#include "linalg.hpp"

namespace flagrank {

struct Arrow {
  std::string name;
  int src = 0;
  int dst = 0;
};

struct Quiver {
  std::vector<std::string> vertices;
  std::vector<Arrow> arrows;

  int n_vertices() const { return static_cast<int>(vertices.size()); }
  int n_arrows() const { return static_cast<int>(arrows.size()); }
};

inline Quiver make_quiver(std::vector<std::string> vertices, std::vector<Arrow> arrows) {
  Quiver q{std::move(vertices), std::move(arrows)};
  for (size_t i = 0; i < q.vertices.size(); ++i)
    for (size_t j = i + 1; j < q.vertices.size(); ++j)
      if (q.vertices[i] == q.vertices[j])
        throw input_error("duplicate vertex name: " + q.vertices[i]);
  for (size_t i = 0; i < q.arrows.size(); ++i) {
    const auto& a = q.arrows[i];
    if (a.src < 0 || a.src >= q.n_vertices() || a.dst < 0 || a.dst >= q.n_vertices())
      throw input_error("arrow " + a.name + " has an undeclared endpoint");
    for (size_t j = i + 1; j < q.arrows.size(); ++j)
      if (q.arrows[j].name == a.name) throw input_error("duplicate arrow name: " + a.name);
  }
  return q;
}

using DimVector = std::vector<int>;
using Decomposition = std::vector<DimVector>;

inline void check_dim_vector(const Quiver& q, const DimVector& a, const char* what) {
  if (static_cast<int>(a.size()) != q.n_vertices())
    throw input_error(std::string(what) + " is indexed by " + std::to_string(a.size()) +
                      " vertices, the quiver has " + std::to_string(q.n_vertices()));
  for (int v : a)
    if (v < 0) throw input_error(std::string(what) + " has a negative entry");
}

inline DimVector add_dim(const DimVector& a, const DimVector& b) {
  if (a.size() != b.size()) throw input_error("dimension vector size mismatch");
  DimVector c(a.size());
  for (size_t i = 0; i < a.size(); ++i) c[i] = a[i] + b[i];
  return c;
}

inline DimVector sub_dim(const DimVector& a, const DimVector& b) {
  if (a.size() != b.size()) throw input_error("dimension vector size mismatch");
  DimVector c(a.size());
  for (size_t i = 0; i < a.size(); ++i) {
    c[i] = a[i] - b[i];
    if (c[i] < 0) throw input_error("dimension vector subtraction went negative");
  }
  return c;
}

inline bool is_zero_dim(const DimVector& a) {
  for (int v : a)
    if (v != 0) return false;
  return true;
}

// every beta_i nonzero, at least one part, all sized to the quiver
inline void check_decomposition(const Quiver& q, const Decomposition& d) {
  if (d.empty()) throw input_error("decomposition needs at least one part");
  for (const auto& b : d) {
    check_dim_vector(q, b, "decomposition part");
    if (is_zero_dim(b)) throw input_error("decomposition part is zero");
  }
}

inline DimVector decomposition_total(const Quiver& q, const Decomposition& d) {
  DimVector t(q.n_vertices(), 0);
  for (const auto& b : d) t = add_dim(t, b);
  return t;
}

inline bool is_acyclic(const Quiver& q) {
  std::vector<int> indeg(q.n_vertices(), 0);
  for (const auto& a : q.arrows) ++indeg[a.dst];
  std::vector<int> ready;
  for (int s = 0; s < q.n_vertices(); ++s)
    if (indeg[s] == 0) ready.push_back(s);
  int seen = 0;
  while (!ready.empty()) {
    int s = ready.back();
    ready.pop_back();
    ++seen;
    for (const auto& a : q.arrows)
      if (a.src == s && --indeg[a.dst] == 0) ready.push_back(a.dst);
  }
  return seen == q.n_vertices();
}

// <a, b> = sum_s a(s) b(s) - sum_arrows a(ia) b(ta)
inline long long ringel_form(const Quiver& q, const DimVector& a, const DimVector& b) {
  if (static_cast<int>(a.size()) != q.n_vertices() ||
      static_cast<int>(b.size()) != q.n_vertices())
    throw input_error("Euler form arguments are not indexed by the quiver's vertices");
  long long f = 0;
  for (int s = 0; s < q.n_vertices(); ++s) f += static_cast<long long>(a[s]) * b[s];
  for (const auto& ar : q.arrows) f -= static_cast<long long>(a[ar.src]) * b[ar.dst];
  return f;
}

/* codimension defect of an ordered decomposition; computed from the two
   displayed sums and cross-checked against bilinearity of the Euler form */
inline long long delta_of_decomposition(const Quiver& q, const Decomposition& d) {
  for (const auto& b : d) check_dim_vector(q, b, "decomposition part");
  long long arrows = 0, verts = 0, forms = 0;
  for (size_t i = 0; i < d.size(); ++i)
    for (size_t j = i + 1; j < d.size(); ++j) {
      for (const auto& ar : q.arrows)
        arrows += static_cast<long long>(d[i][ar.src]) * d[j][ar.dst];
      for (int s = 0; s < q.n_vertices(); ++s)
        verts += static_cast<long long>(d[i][s]) * d[j][s];
      forms += ringel_form(q, d[i], d[j]);
    }
  long long delta = arrows - verts;
  if (delta != -forms) throw std::logic_error("decomposition defect routes disagree");
  return delta;
}

template <class K>
struct QuiverRep {
  DimVector dims;
  std::vector<Mat<K>> mats;  // per arrow, (dim dst) x (dim src)
};

template <class K>
QuiverRep<K> make_rep(const K&, const Quiver& q, DimVector dims, std::vector<Mat<K>> mats) {
  check_dim_vector(q, dims, "representation dimension");
  if (static_cast<int>(mats.size()) != q.n_arrows())
    throw input_error("representation needs one matrix per arrow");
  for (int a = 0; a < q.n_arrows(); ++a)
    if (mats[a].rows != dims[q.arrows[a].dst] || mats[a].cols != dims[q.arrows[a].src])
      throw input_error("matrix shape mismatch on arrow " + q.arrows[a].name);
  return {std::move(dims), std::move(mats)};
}

inline QuiverRep<FpField> random_rep(const FpField& k, const Quiver& q, const DimVector& dims,
                                     std::mt19937_64& rng) {
  check_dim_vector(q, dims, "representation dimension");
  std::vector<Mat<FpField>> mats;
  mats.reserve(q.arrows.size());
  for (const auto& a : q.arrows) {
    Mat<FpField> m(k, dims[a.dst], dims[a.src]);
    // plain modulo draw: the bias at 64 bits is immaterial and the stream
    // stays identical across standard libraries
    for (auto& x : m.a) x = rng() % k.p;
    mats.push_back(std::move(m));
  }
  return {dims, std::move(mats)};
}

struct HomExtReport {
  long long hom = 0;
  long long ext = 0;
};

/* hom and ext from the map phi -> (v(a) phi(ia) - phi(ta) u(a)) on
   sum_s Hom(U_s, V_s); hom is the nullity, ext the corank, and the
   difference is the Euler form by rank-nullity */
template <class K>
HomExtReport hom_ext(const K& k, const Quiver& q, const QuiverRep<K>& u, const QuiverRep<K>& v) {
  check_dim_vector(q, u.dims, "first representation");
  check_dim_vector(q, v.dims, "second representation");
  std::vector<int> dom_off(q.n_vertices() + 1, 0);
  for (int s = 0; s < q.n_vertices(); ++s) dom_off[s + 1] = dom_off[s] + v.dims[s] * u.dims[s];
  std::vector<int> cod_off(q.n_arrows() + 1, 0);
  for (int a = 0; a < q.n_arrows(); ++a)
    cod_off[a + 1] = cod_off[a] + v.dims[q.arrows[a].dst] * u.dims[q.arrows[a].src];
  const int dom = dom_off.back(), cod = cod_off.back();

  Mat<K> m(k, cod, dom);
  for (int a = 0; a < q.n_arrows(); ++a) {
    const int ia = q.arrows[a].src, ta = q.arrows[a].dst;
    const auto& va = v.mats[a];
    const auto& ua = u.mats[a];
    // v(a) phi(ia): codomain entry (r', c) picks up v(a)[r', r] from phi(ia)[r, c]
    for (int r = 0; r < v.dims[ia]; ++r)
      for (int c = 0; c < u.dims[ia]; ++c) {
        int col = dom_off[ia] + r * u.dims[ia] + c;
        for (int r2 = 0; r2 < v.dims[ta]; ++r2) {
          int row = cod_off[a] + r2 * u.dims[ia] + c;
          m.at(row, col) = k.add(m.at(row, col), va.at(r2, r));
        }
      }
    // phi(ta) u(a): codomain entry (r, c') picks up u(a)[c, c'] from phi(ta)[r, c]
    for (int r = 0; r < v.dims[ta]; ++r)
      for (int c = 0; c < u.dims[ta]; ++c) {
        int col = dom_off[ta] + r * u.dims[ta] + c;
        for (int c2 = 0; c2 < u.dims[ia]; ++c2) {
          int row = cod_off[a] + r * u.dims[ia] + c2;
          m.at(row, col) = k.sub(m.at(row, col), ua.at(c, c2));
        }
      }
  }
  int rank = rref(k, m);
  HomExtReport rep{dom - rank, cod - rank};
  if (rep.hom - rep.ext != ringel_form(q, u.dims, v.dims))
    throw std::logic_error("hom - ext disagrees with the Euler form");
  return rep;
}

// minimum over random samples; semicontinuity makes the minimum generic
inline HomExtReport generic_hom_ext(const Quiver& q, const DimVector& a, const DimVector& b,
                                    uint64_t seed, int trials) {
  if (trials < 1) throw input_error("generic hom/ext needs at least one trial");
  check_dim_vector(q, a, "first dimension vector");
  check_dim_vector(q, b, "second dimension vector");
  FpField k(65537);
  std::mt19937_64 rng(seed);
  HomExtReport best;
  for (int t = 0; t < trials; ++t) {
    auto u = random_rep(k, q, a, rng);
    auto v = random_rep(k, q, b, rng);
    auto r = hom_ext(k, q, u, v);
    if (t == 0 || r.hom < best.hom) best = r;
  }
  return best;
}

}  // namespace flagrank
