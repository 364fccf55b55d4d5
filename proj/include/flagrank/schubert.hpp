#pragma once

#include <map>
#include <string>
#include <vector>

#include "polynomial.hpp"
#include "root_system.hpp"
#include "weyl.hpp"

namespace flagrank {

/* Schubert calculus on polynomial representatives.  sigma_u is graded by
   codimension (degree l(u)); the top class is normalized so that
   S_{w0} = prod of positive roots / |W|, and the rest follow by divided
   differences: del_i S_u = S_{u s_i} when that shortens u, else 0.
   The coefficient of sigma_w in a product is eps(del_w(product)); this is
   well defined because del is linear over invariants and eps kills the
   invariants of positive degree. */
struct SchubertTable {
  RootSystem rs;
  WeylGroup group;
  std::vector<Polynomial> poly;  // indexed like group.elements

  const WeylElement& element(int idx) const { return group.elements[idx]; }
  int size() const { return static_cast<int>(group.elements.size()); }
};

inline SchubertTable build_schubert_table(const RootSystem& rs, long long cap = 50000) {
  SchubertTable t;
  t.rs = rs;
  t.group = enumerate_weyl(rs, cap);
  const auto& els = t.group.elements;
  const int n = static_cast<int>(els.size());
  t.poly.assign(n, Polynomial(rs.rank));

  Polynomial top = poly_const(rs.rank, Rational(1));
  for (int r = 0; r < rs.n_pos; ++r) top = poly_mul(top, poly_linear(rs.roots[r]));
  top = poly_scale(top, Rational(Int(1), Int(n)));
  t.poly[n - 1] = std::move(top);

  for (int k = n - 2; k >= 0; --k) {
    const auto& w = els[k];
    int letter = -1, longer = -1;
    for (int i = 1; i <= rs.rank; ++i) {
      if (!rs.positive(w.perm[rs.simple_pos[i - 1]])) continue;  // need l(w s_i) > l(w)
      auto ws = perm_mul(w.perm, rs.simple_perm[i - 1]);
      longer = t.group.index_of.at(ws);
      letter = i;
      break;
    }
    if (letter < 0) throw std::logic_error("non-longest element without ascent");
    t.poly[k] = poly_divided_difference(rs, letter - 1, t.poly[longer]);
    if (poly_degree(t.poly[k]) != els[k].length() || !poly_homogeneous(t.poly[k]))
      throw std::logic_error("Schubert representative has wrong degree");
  }
  if (t.poly[0] != poly_const(rs.rank, Rational(1)))
    throw std::logic_error("identity class did not normalize to 1");
  return t;
}

// coefficient extraction eps(del_w f)
inline Rational schubert_extract(const SchubertTable& t, const WeylElement& w, const Polynomial& f) {
  return poly_eps(poly_apply_dd(t.rs, w.word, f));
}

inline Int checked_constant(const Rational& c, const char* what) {
  if (!is_integer(c) || c < 0)
    throw std::logic_error(std::string(what) + " is not a non-negative integer");
  return rat_num(c);
}

// full expansion of sigma_u sigma_v in the sigma basis of the ambient G/B
inline std::map<int, Int> cup_expand(const SchubertTable& t, int iu, int iv) {
  Polynomial p = poly_mul(t.poly[iu], t.poly[iv]);
  int target = t.element(iu).length() + t.element(iv).length();
  std::map<int, Int> out;
  for (int k = 0; k < t.size(); ++k) {
    if (t.element(k).length() != target) continue;
    Rational c = schubert_extract(t, t.element(k), p);
    if (c == 0) continue;
    Int ci = checked_constant(c, "cup structure constant");
    out.emplace(k, std::move(ci));
  }
  return out;
}

inline int levi_dim(const RootSystem& rs, const Parabolic& delta) {
  return static_cast<int>(levi_positive_roots(rs, delta).size());
}

inline int flag_dim(const RootSystem& rs, const Parabolic& delta) {
  return rs.n_pos - levi_dim(rs, delta);
}

// sigma_u sigma_v restricted to W^P labels; equals the G/P product
inline std::map<int, Int> cup_constants(const SchubertTable& t, const Parabolic& delta, int iu,
                                        int iv) {
  if (!is_minimal_rep(t.rs, t.element(iu), delta) || !is_minimal_rep(t.rs, t.element(iv), delta))
    throw input_error("cup_constants labels must be minimal coset representatives");
  auto full = cup_expand(t, iu, iv);
  std::map<int, Int> out;
  for (const auto& [k, c] : full)
    if (is_minimal_rep(t.rs, t.element(k), delta)) out.emplace(k, c);
  return out;
}

// index of the point class of G/P, the longest minimal representative
inline int point_label(const SchubertTable& t, const Parabolic& delta) {
  auto w0 = longest_element(t.rs, full_parabolic(t.rs));
  auto w0p = longest_element(t.rs, delta);
  int idx = t.group.find(weyl_mul(t.rs, w0, w0p));
  if (idx < 0) throw std::logic_error("point label missing from group table");
  return idx;
}

// coefficient of the point class in sigma_{u_1} ... sigma_{u_s}
inline Int multi_point_coefficient(const SchubertTable& t, const Parabolic& delta,
                                   const std::vector<int>& labels) {
  int sum = 0;
  for (int iu : labels) {
    if (!is_minimal_rep(t.rs, t.element(iu), delta))
      throw input_error("multi-point label is not a minimal coset representative: " +
                        word_to_string(t.element(iu)));
    sum += t.element(iu).length();
  }
  int dim = flag_dim(t.rs, delta);
  if (sum != dim)
    throw input_error("degree mismatch: codimensions sum to " + std::to_string(sum) +
                      " but the flag variety has dimension " + std::to_string(dim));
  Polynomial p = poly_const(t.rs.rank, Rational(1));
  for (int iu : labels) p = poly_mul(p, t.poly[iu]);
  Rational c = schubert_extract(t, t.element(point_label(t, delta)), p);
  return checked_constant(c, "multi-point coefficient");
}

// dual label as a table index
inline int dual_index(const SchubertTable& t, const Parabolic& delta, int iu) {
  auto w0 = longest_element(t.rs, full_parabolic(t.rs));
  auto w0p = longest_element(t.rs, delta);
  int idx = t.group.find(dual_label(t.rs, w0, w0p, t.element(iu), delta));
  if (idx < 0) throw std::logic_error("dual label missing from group table");
  return idx;
}

}  // namespace flagrank
