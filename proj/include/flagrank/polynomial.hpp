#pragma once

#include <map>
#include <vector>

#include "rational.hpp"
#include "root_system.hpp"

namespace flagrank {

/* Exact multivariate polynomials over Q.  Variable j stands for the simple
   root alpha_j (zero-based), so Weyl reflections act by the substitution
   a_j -> a_j - cartan[i][j] a_i.  Terms live in an ordered map keyed by the
   exponent tuple, zero coefficients are never stored, and nothing here ever
   touches floating point. */
using Monomial = std::vector<int>;

struct Polynomial {
  int nvars = 0;
  std::map<Monomial, Rational> terms;

  explicit Polynomial(int n = 0) : nvars(n) {}
  bool is_zero() const { return terms.empty(); }
  bool operator==(const Polynomial& o) const { return nvars == o.nvars && terms == o.terms; }
  bool operator!=(const Polynomial& o) const { return !(*this == o); }
};

inline void poly_add_term(Polynomial& f, const Monomial& m, const Rational& c) {
  if (c == 0) return;
  auto [it, fresh] = f.terms.emplace(m, c);
  if (!fresh) {
    it->second += c;
    if (it->second == 0) f.terms.erase(it);
  }
}

inline Polynomial poly_const(int nvars, const Rational& c) {
  Polynomial f(nvars);
  poly_add_term(f, Monomial(nvars, 0), c);
  return f;
}

inline Polynomial poly_var(int nvars, int i) {
  Polynomial f(nvars);
  Monomial m(nvars, 0);
  m[i] = 1;
  poly_add_term(f, m, Rational(1));
  return f;
}

// linear form sum_j coeffs[j] a_j
inline Polynomial poly_linear(const std::vector<int>& coeffs) {
  Polynomial f(static_cast<int>(coeffs.size()));
  for (size_t j = 0; j < coeffs.size(); ++j) {
    Monomial m(coeffs.size(), 0);
    m[j] = 1;
    poly_add_term(f, m, Rational(coeffs[j]));
  }
  return f;
}

inline Polynomial poly_add(const Polynomial& f, const Polynomial& g) {
  if (f.nvars != g.nvars) throw std::logic_error("polynomial arity mismatch");
  Polynomial h = f;
  for (const auto& [m, c] : g.terms) poly_add_term(h, m, c);
  return h;
}

inline Polynomial poly_sub(const Polynomial& f, const Polynomial& g) {
  if (f.nvars != g.nvars) throw std::logic_error("polynomial arity mismatch");
  Polynomial h = f;
  for (const auto& [m, c] : g.terms) poly_add_term(h, m, -c);
  return h;
}

inline Polynomial poly_scale(const Polynomial& f, const Rational& c) {
  Polynomial h(f.nvars);
  if (c == 0) return h;
  for (const auto& [m, co] : f.terms) h.terms.emplace(m, co * c);
  return h;
}

inline Polynomial poly_mul(const Polynomial& f, const Polynomial& g) {
  if (f.nvars != g.nvars) throw std::logic_error("polynomial arity mismatch");
  Polynomial h(f.nvars);
  Monomial m(f.nvars);
  for (const auto& [mf, cf] : f.terms)
    for (const auto& [mg, cg] : g.terms) {
      for (int j = 0; j < f.nvars; ++j) m[j] = mf[j] + mg[j];
      poly_add_term(h, m, cf * cg);
    }
  return h;
}

inline int poly_degree(const Polynomial& f) {
  int d = -1;  // zero polynomial
  for (const auto& [m, c] : f.terms) {
    int s = 0;
    for (int e : m) s += e;
    d = std::max(d, s);
  }
  return d;
}

inline bool poly_homogeneous(const Polynomial& f) {
  int d = -1;
  for (const auto& [m, c] : f.terms) {
    int s = 0;
    for (int e : m) s += e;
    if (d < 0) d = s;
    if (s != d) return false;
  }
  return true;
}

// constant term, the evaluation at 0
inline Rational poly_eps(const Polynomial& f) {
  auto it = f.terms.find(Monomial(f.nvars, 0));
  return it == f.terms.end() ? Rational(0) : it->second;
}

// the substitution action of s_i (i zero-based): a_j -> a_j - cartan[i][j] a_i
inline Polynomial poly_reflect(const RootSystem& rs, int i, const Polynomial& f) {
  if (f.nvars != rs.rank) throw std::logic_error("polynomial arity does not match root system");
  Polynomial out(f.nvars);
  std::vector<std::pair<Monomial, Rational>> acc, next;
  for (const auto& [m, c] : f.terms) {
    acc.clear();
    Monomial base(f.nvars, 0);
    base[i] = m[i];
    acc.emplace_back(base, (m[i] % 2) ? -c : c);  // (-a_i)^{m_i}
    for (int j = 0; j < f.nvars; ++j) {
      if (j == i || m[j] == 0) continue;
      int cij = rs.cartan[i][j];
      if (cij == 0) {
        for (auto& [mm, cc] : acc) mm[j] += m[j];
        continue;
      }
      // (a_j - cij a_i)^{m_j}, expanded binomially
      next.clear();
      Int binom = 1, power = 1;
      std::vector<std::pair<int, Int>> split;  // (t, C(m_j, t) (-cij)^t)
      for (int t = 0; t <= m[j]; ++t) {
        split.emplace_back(t, binom * power);
        binom = binom * (m[j] - t) / (t + 1);
        power *= -cij;
      }
      for (const auto& [mm, cc] : acc)
        for (const auto& [t, w] : split) {
          Monomial m2 = mm;
          m2[j] += m[j] - t;
          m2[i] += t;
          next.emplace_back(std::move(m2), cc * Rational(w));
        }
      acc.swap(next);
    }
    for (auto& [mm, cc] : acc) poly_add_term(out, mm, cc);
  }
  return out;
}

// (f - s_i f) / a_i; divisibility is a theorem, so a remainder is a bug
inline Polynomial poly_divided_difference(const RootSystem& rs, int i, const Polynomial& f) {
  Polynomial g = poly_sub(f, poly_reflect(rs, i, f));
  Polynomial out(f.nvars);
  for (const auto& [m, c] : g.terms) {
    if (m[i] < 1) throw std::logic_error("inexact division in divided difference");
    Monomial m2 = m;
    --m2[i];
    out.terms.emplace(std::move(m2), c);
  }
  return out;
}

// del_w for a reduced word (1-based letters, rightmost letter acts first)
inline Polynomial poly_apply_dd(const RootSystem& rs, const std::vector<int>& word, Polynomial f) {
  for (auto it = word.rbegin(); it != word.rend(); ++it) {
    if (f.is_zero()) break;
    f = poly_divided_difference(rs, *it - 1, f);
  }
  return f;
}

// action of a group element through its word (rightmost letter first)
inline Polynomial poly_act(const RootSystem& rs, const std::vector<int>& word, Polynomial f) {
  for (auto it = word.rbegin(); it != word.rend(); ++it) f = poly_reflect(rs, *it - 1, f);
  return f;
}

}  // namespace flagrank
