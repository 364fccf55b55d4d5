#pragma once

#include <algorithm>
#include <map>
#include <string>
#include <vector>

#include "rational.hpp"
#include "root_system.hpp"

namespace flagrank {

/* Weyl group elements carry a canonical reduced word (lexicographically
   smallest) plus their action on the root list as an index permutation.
   Words are 1-based simple reflection indices and act right to left:
   word [i1..ik] applies s_{ik} first.  Equality goes through the
   permutation, never the word. */
struct WeylElement {
  std::vector<int> word;
  std::vector<int> perm;

  int length() const { return static_cast<int>(word.size()); }
  bool operator==(const WeylElement& o) const { return perm == o.perm; }
  bool operator!=(const WeylElement& o) const { return perm != o.perm; }
};

inline std::vector<int> perm_identity_vec(const RootSystem& rs) {
  std::vector<int> p(rs.roots.size());
  for (int r = 0; r < static_cast<int>(p.size()); ++r) p[r] = r;
  return p;
}

// apply b then a
inline std::vector<int> perm_mul(const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<int> c(a.size());
  for (size_t r = 0; r < a.size(); ++r) c[r] = a[b[r]];
  return c;
}

inline std::vector<int> perm_inverse(const std::vector<int>& a) {
  std::vector<int> c(a.size());
  for (size_t r = 0; r < a.size(); ++r) c[a[r]] = static_cast<int>(r);
  return c;
}

inline bool perm_is_identity(const std::vector<int>& a) {
  for (size_t r = 0; r < a.size(); ++r)
    if (a[r] != static_cast<int>(r)) return false;
  return true;
}

// lexicographically smallest reduced word: repeatedly strip the smallest
// left descent (l(s_i w) < l(w) iff w^{-1}(alpha_i) < 0)
inline std::vector<int> canonical_word(const RootSystem& rs, std::vector<int> perm) {
  std::vector<int> word;
  std::vector<int> inv = perm_inverse(perm);
  while (!perm_is_identity(perm)) {
    int pick = -1;
    for (int i = 0; i < rs.rank; ++i) {
      if (!rs.positive(inv[rs.simple_pos[i]])) {
        pick = i;
        break;
      }
    }
    if (pick < 0) throw std::logic_error("non-identity element with no left descent");
    word.push_back(pick + 1);
    // perm <- s_pick o perm
    for (size_t r = 0; r < perm.size(); ++r) perm[r] = rs.simple_perm[pick][perm[r]];
    inv = perm_inverse(perm);
    if (word.size() > rs.roots.size()) throw std::logic_error("descent stripping did not terminate");
  }
  return word;
}

inline WeylElement weyl_from_perm(const RootSystem& rs, std::vector<int> perm) {
  WeylElement w;
  w.word = canonical_word(rs, perm);
  w.perm = std::move(perm);
  return w;
}

inline WeylElement weyl_identity(const RootSystem& rs) {
  return WeylElement{{}, perm_identity_vec(rs)};
}

inline WeylElement weyl_simple(const RootSystem& rs, int i) {
  if (i < 1 || i > rs.rank) throw input_error("reflection index out of range: " + std::to_string(i));
  return WeylElement{{i}, rs.simple_perm[i - 1]};
}

// fold a word (right factor applied first); non-reduced input is fine, the
// canonical word of the resulting element is stored
inline WeylElement weyl_from_word(const RootSystem& rs, const std::vector<int>& word) {
  auto perm = perm_identity_vec(rs);
  for (int i : word) {
    if (i < 1 || i > rs.rank)
      throw input_error("reflection index out of range: " + std::to_string(i));
    perm = perm_mul(perm, rs.simple_perm[i - 1]);
  }
  return weyl_from_perm(rs, std::move(perm));
}

inline WeylElement weyl_mul(const RootSystem& rs, const WeylElement& a, const WeylElement& b) {
  return weyl_from_perm(rs, perm_mul(a.perm, b.perm));
}

inline WeylElement weyl_inverse(const RootSystem& rs, const WeylElement& a) {
  return weyl_from_perm(rs, perm_inverse(a.perm));
}

inline int act_root(const WeylElement& w, int r) { return w.perm[r]; }

// action on a weight in simple-root coordinates
inline std::vector<Rational> act_weight(const RootSystem& rs, const WeylElement& w,
                                        std::vector<Rational> v) {
  for (auto it = w.word.rbegin(); it != w.word.rend(); ++it) {
    int i = *it - 1;
    Rational c(0);
    for (int j = 0; j < rs.rank; ++j) c += Rational(rs.cartan[i][j]) * v[j];
    v[i] -= c;
  }
  return v;
}

// positive roots sent negative
inline std::vector<int> inversion_set(const RootSystem& rs, const WeylElement& w) {
  std::vector<int> inv;
  for (int r = 0; r < rs.n_pos; ++r)
    if (!rs.positive(w.perm[r])) inv.push_back(r);
  return inv;
}

struct WeylGroup {
  std::vector<WeylElement> elements;               // sorted by (length, word)
  std::map<std::vector<int>, int> index_of;        // perm -> position

  const WeylElement& w0() const { return elements.back(); }
  long long order() const { return static_cast<long long>(elements.size()); }
  int find(const WeylElement& w) const {
    auto it = index_of.find(w.perm);
    return it == index_of.end() ? -1 : it->second;
  }
};

// BFS by length; letters restricted to delta when given (enumerates W_P as
// elements of the ambient group). Aborts via resource_error past the cap.
inline WeylGroup enumerate_weyl(const RootSystem& rs, long long cap = 50000,
                                const Parabolic* delta = nullptr) {
  std::vector<int> letters;
  if (delta) {
    for (int i : *delta) letters.push_back(i);
  } else {
    for (int i = 1; i <= rs.rank; ++i) letters.push_back(i);
  }
  WeylGroup g;
  g.elements.push_back(weyl_identity(rs));
  g.index_of[g.elements[0].perm] = 0;
  std::vector<int> level{0};
  while (!level.empty()) {
    std::vector<int> next;
    for (int idx : level) {
      // copy: g.elements may reallocate while we append
      const WeylElement cur = g.elements[idx];
      for (int i : letters) {
        auto child = perm_mul(cur.perm, rs.simple_perm[i - 1]);
        if (g.index_of.count(child)) continue;
        if (static_cast<long long>(g.elements.size()) >= cap)
          throw resource_error("Weyl group order exceeds cap " + std::to_string(cap));
        WeylElement w;
        w.word = cur.word;
        w.word.push_back(i);
        w.perm = std::move(child);
        g.index_of[w.perm] = static_cast<int>(g.elements.size());
        g.elements.push_back(std::move(w));
        next.push_back(static_cast<int>(g.elements.size()) - 1);
      }
    }
    level = std::move(next);
  }
  return g;
}

inline bool is_minimal_rep(const RootSystem& rs, const WeylElement& w, const Parabolic& delta) {
  for (int i : delta)
    if (!rs.positive(w.perm[rs.simple_pos[i - 1]])) return false;
  return true;
}

inline std::vector<WeylElement> minimal_coset_reps(const RootSystem& rs, const WeylGroup& g,
                                                   const Parabolic& delta) {
  std::vector<WeylElement> out;
  for (const auto& w : g.elements)
    if (is_minimal_rep(rs, w, delta)) out.push_back(w);
  return out;
}

// longest element of W_delta (of W when delta covers all of 1..rank),
// by greedy right multiplication; no enumeration needed
inline WeylElement longest_element(const RootSystem& rs, const Parabolic& delta) {
  WeylElement w = weyl_identity(rs);
  for (;;) {
    int pick = -1;
    for (int i : delta) {
      if (rs.positive(w.perm[rs.simple_pos[i - 1]])) {
        pick = i;
        break;
      }
    }
    if (pick < 0) break;
    w = weyl_mul(rs, w, weyl_simple(rs, pick));
  }
  return w;
}

inline Parabolic full_parabolic(const RootSystem& rs) {
  Parabolic d(rs.rank);
  for (int i = 0; i < rs.rank; ++i) d[i] = i + 1;
  return d;
}

struct CosetFactor {
  WeylElement minimal;    // in W^P
  WeylElement parabolic;  // in W_P
};

// w = minimal * parabolic with lengths adding; the inversion identity
// Inv(parabolic) = { b in R_L^+ : w(b) < 0 } is asserted, it is what makes
// the parabolic part the right label on the Levi flag variety
inline CosetFactor coset_factorize(const RootSystem& rs, const WeylElement& w,
                                   const Parabolic& delta) {
  WeylElement wmin = w;
  WeylElement wpar = weyl_identity(rs);
  for (;;) {
    int pick = -1;
    for (int i : delta) {
      if (!rs.positive(wmin.perm[rs.simple_pos[i - 1]])) {
        pick = i;
        break;
      }
    }
    if (pick < 0) break;
    auto s = weyl_simple(rs, pick);
    wmin = weyl_mul(rs, wmin, s);
    wpar = weyl_mul(rs, s, wpar);
  }
  if (!is_minimal_rep(rs, wmin, delta)) throw std::logic_error("coset factor not minimal");
  if (wmin.length() + wpar.length() != w.length())
    throw std::logic_error("coset factorization lengths do not add");
  if (weyl_mul(rs, wmin, wpar) != w) throw std::logic_error("coset factorization does not multiply back");
  for (int i : wpar.word)
    if (!std::binary_search(delta.begin(), delta.end(), i))
      throw std::logic_error("parabolic factor uses a letter outside delta");
  // inversion identity
  for (int r : levi_positive_roots(rs, delta)) {
    bool w_negates = !rs.positive(w.perm[r]);
    bool par_negates = !rs.positive(wpar.perm[r]);
    if (w_negates != par_negates)
      throw std::logic_error("parabolic factor inversion set mismatch");
  }
  return {wmin, wpar};
}

// dual label w0 * w * w0_P; an involution on W^P pairing classes of
// complementary dimension
inline WeylElement dual_label(const RootSystem& rs, const WeylElement& w0,
                              const WeylElement& w0p, const WeylElement& w,
                              const Parabolic& delta) {
  if (!is_minimal_rep(rs, w, delta)) throw input_error("dual_label needs a minimal representative");
  WeylElement d = weyl_mul(rs, weyl_mul(rs, w0, w), w0p);
  if (!is_minimal_rep(rs, d, delta)) throw std::logic_error("dual label is not minimal");
  return d;
}

// the parabolic coset factor of w, rewritten in the Levi subsystem
inline WeylElement levi_representative(const RootSystem& rs, const LeviSubsystem& ls,
                                       const WeylElement& w, const Parabolic& delta) {
  auto f = coset_factorize(rs, w, delta);
  std::vector<int> sub_word;
  for (int i : f.parabolic.word) {
    int sub_i = -1;
    for (size_t a = 0; a < ls.simple_to_ambient.size(); ++a)
      if (ls.simple_to_ambient[a] == i - 1) sub_i = static_cast<int>(a) + 1;
    if (sub_i < 0) throw std::logic_error("parabolic word letter missing from Levi");
    sub_word.push_back(sub_i);
  }
  WeylElement wbar = weyl_from_word(ls.sub, sub_word);
  if (wbar.length() != f.parabolic.length())
    throw std::logic_error("Levi representative changed length");
  // the inversion set of wbar, pushed to the ambient system, must be the
  // set of Levi-positive roots that w sends negative
  for (int r = 0; r < ls.sub.n_pos; ++r) {
    bool bar_negates = !ls.sub.positive(wbar.perm[r]);
    bool w_negates = !rs.positive(w.perm[ls.root_to_ambient[r]]);
    if (bar_negates != w_negates) throw std::logic_error("Levi representative inversion mismatch");
  }
  return wbar;
}

inline std::string word_to_string(const WeylElement& w) {
  if (w.word.empty()) return "e";
  std::string s;
  for (size_t k = 0; k < w.word.size(); ++k) {
    if (k) s += ' ';
    s += std::to_string(w.word[k]);
  }
  return s;
}

}  // namespace flagrank
