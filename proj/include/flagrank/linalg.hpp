#pragma once

#include <utility>
#include <vector>

#include "fp.hpp"
#include "rational.hpp"

namespace flagrank {

// exact-rational field policy, same interface as FpField
struct RatField {
  using T = Rational;
  T zero() const { return Rational(0); }
  T one() const { return Rational(1); }
  bool is_zero(const T& a) const { return a == 0; }
  T add(const T& a, const T& b) const { return a + b; }
  T sub(const T& a, const T& b) const { return a - b; }
  T neg(const T& a) const { return -a; }
  T mul(const T& a, const T& b) const { return a * b; }
  T inv(const T& a) const {
    if (a == 0) throw std::logic_error("division by zero");
    return Rational(1) / a;
  }
  T from_ll(long long v) const { return Rational(v); }
};

// dense row-major matrix over a field policy K
template <class K>
struct Mat {
  using T = typename K::T;
  int rows = 0, cols = 0;
  std::vector<T> a;

  Mat() = default;
  Mat(const K& k, int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c, k.zero()) {}

  T& at(int i, int j) { return a[static_cast<size_t>(i) * cols + j]; }
  const T& at(int i, int j) const { return a[static_cast<size_t>(i) * cols + j]; }

  static Mat eye(const K& k, int n) {
    Mat m(k, n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = k.one();
    return m;
  }
};

template <class K>
Mat<K> mat_mul(const K& k, const Mat<K>& x, const Mat<K>& y) {
  if (x.cols != y.rows) throw std::logic_error("matrix shape mismatch in mat_mul");
  Mat<K> z(k, x.rows, y.cols);
  for (int i = 0; i < x.rows; ++i)
    for (int l = 0; l < x.cols; ++l) {
      const auto& xv = x.at(i, l);
      if (k.is_zero(xv)) continue;
      for (int j = 0; j < y.cols; ++j)
        z.at(i, j) = k.add(z.at(i, j), k.mul(xv, y.at(l, j)));
    }
  return z;
}

template <class K>
std::vector<typename K::T> mat_apply(const K& k, const Mat<K>& m,
                                     const std::vector<typename K::T>& v) {
  if (static_cast<int>(v.size()) != m.cols) throw std::logic_error("shape mismatch in mat_apply");
  std::vector<typename K::T> r(m.rows, k.zero());
  for (int i = 0; i < m.rows; ++i)
    for (int j = 0; j < m.cols; ++j)
      if (!k.is_zero(m.at(i, j))) r[i] = k.add(r[i], k.mul(m.at(i, j), v[j]));
  return r;
}

// reduced row echelon form in place; returns rank and appends pivot columns
template <class K>
int rref(const K& k, Mat<K>& m, std::vector<int>* piv = nullptr) {
  int r = 0;
  for (int c = 0; c < m.cols && r < m.rows; ++c) {
    int sel = -1;
    for (int i = r; i < m.rows; ++i)
      if (!k.is_zero(m.at(i, c))) {
        sel = i;
        break;
      }
    if (sel < 0) continue;
    if (sel != r)
      for (int j = 0; j < m.cols; ++j) std::swap(m.at(sel, j), m.at(r, j));
    typename K::T s = k.inv(m.at(r, c));
    for (int j = c; j < m.cols; ++j) m.at(r, j) = k.mul(m.at(r, j), s);
    for (int i = 0; i < m.rows; ++i) {
      if (i == r || k.is_zero(m.at(i, c))) continue;
      typename K::T f = m.at(i, c);
      for (int j = c; j < m.cols; ++j)
        m.at(i, j) = k.sub(m.at(i, j), k.mul(f, m.at(r, j)));
    }
    if (piv) piv->push_back(c);
    ++r;
  }
  return r;
}

template <class K>
int rank_of(const K& k, Mat<K> m) {
  return rref(k, m);
}

template <class K>
bool invertible(const K& k, const Mat<K>& m) {
  return m.rows == m.cols && rank_of(k, m) == m.rows;
}

template <class K>
Mat<K> mat_inverse(const K& k, const Mat<K>& m) {
  if (m.rows != m.cols) throw std::logic_error("inverse of non-square matrix");
  int n = m.rows;
  Mat<K> aug(k, n, 2 * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) aug.at(i, j) = m.at(i, j);
    aug.at(i, n + i) = k.one();
  }
  if (rref(k, aug) != n) throw std::logic_error("matrix not invertible");
  Mat<K> inv(k, n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) inv.at(i, j) = aug.at(i, n + j);
  return inv;
}

// rref basis of the row space, zero rows dropped; pivot columns appended
template <class K>
Mat<K> row_space(const K& k, Mat<K> m, std::vector<int>* piv = nullptr) {
  int r = rref(k, m, piv);
  m.a.resize(static_cast<size_t>(r) * m.cols);
  m.rows = r;
  return m;
}

template <class K>
Mat<K> stack_rows(const K& k, const Mat<K>& x, const Mat<K>& y) {
  if (x.rows == 0) return y;
  if (y.rows == 0) return x;
  if (x.cols != y.cols) throw std::logic_error("shape mismatch in stack_rows");
  Mat<K> z(k, x.rows + y.rows, x.cols);
  z.a = x.a;
  z.a.insert(z.a.end(), y.a.begin(), y.a.end());
  return z;
}

// eliminate pivot coordinates of v against an rref basis; the residual is
// supported on the non-pivot columns
template <class K>
std::vector<typename K::T> reduce_by(const K& k, const Mat<K>& basis, const std::vector<int>& piv,
                                     std::vector<typename K::T> v) {
  for (int i = 0; i < basis.rows; ++i) {
    const typename K::T& f = v[piv[i]];
    if (k.is_zero(f)) continue;
    typename K::T c = f;
    for (int j = 0; j < basis.cols; ++j)
      v[j] = k.sub(v[j], k.mul(c, basis.at(i, j)));
  }
  return v;
}

template <class K>
bool all_zero(const K& k, const std::vector<typename K::T>& v) {
  for (const auto& x : v)
    if (!k.is_zero(x)) return false;
  return true;
}

}  // namespace flagrank
