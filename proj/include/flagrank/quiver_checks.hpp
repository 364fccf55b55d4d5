#pragma once

/* Mechanical checks of the multiplicative identities for generic quiver
   subrepresentation counts.  Hypothesis violations throw; a checked
   identity that fails comes back as pass = false with both sides in the
   report. */

#include <sstream>
#include <string>
#include <vector>

#include "errors.hpp"
#include "quiver.hpp"
#include "quiver_count.hpp"

namespace flagrank {

namespace detail {

inline uint64_t subseed(uint64_t seed, uint64_t tag) {
  return seed ^ (0x517cc1b727220a95ull * (tag + 1));
}

inline void require_orthogonal(const Quiver& q, const Decomposition& d) {
  std::ostringstream bad;
  for (size_t i = 0; i < d.size(); ++i)
    for (size_t j = i + 1; j < d.size(); ++j) {
      long long f = ringel_form(q, d[i], d[j]);
      if (f != 0) bad << " <b" << i + 1 << ", b" << j + 1 << "> = " << f << ";";
    }
  std::string s = bad.str();
  if (!s.empty()) throw hypothesis_error("orthogonality hypothesis fails:" + s);
}

}  // namespace detail

struct Theorem5Report {
  long long delta = 0;
  long long filtrations = 0;  // sampled generic filtration count
  long long forward = 1;      // prod_i  b_i o (b_{i+1} + ... + b_s)
  long long backward = 1;     // prod_i (b_1 + ... + b_{i-1}) o b_i
  bool pass = false;
};

/* for pairwise orthogonal parts, the filtration count factors as the
   forward product and as the backward product */
inline Theorem5Report theorem5_check(const Quiver& q, const Decomposition& d, uint64_t seed) {
  check_decomposition(q, d);
  detail::require_orthogonal(q, d);
  Theorem5Report rep;
  rep.delta = delta_of_decomposition(q, d);
  rep.filtrations = stabilized_filtration_count(q, d, seed).value;
  const size_t s = d.size();
  for (size_t i = 0; i + 1 < s; ++i) {
    DimVector tail(q.n_vertices(), 0);
    for (size_t j = i + 1; j < s; ++j) tail = add_dim(tail, d[j]);
    rep.forward *= circ(q, d[i], tail, detail::subseed(seed, i)).value;
  }
  for (size_t i = s; i-- > 1;) {
    DimVector head(q.n_vertices(), 0);
    for (size_t j = 0; j < i; ++j) head = add_dim(head, d[j]);
    rep.backward *= circ(q, head, d[i], detail::subseed(seed, 100 + i)).value;
  }
  rep.pass = rep.delta == 0 && rep.filtrations == rep.forward && rep.filtrations == rep.backward;
  return rep;
}

struct TheoremBReport {
  long long ab = 0;        // a o b
  long long bc = 0;        // b o c
  long long left = 0;      // (a + b) o c
  long long right = 0;     // a o (b + c)
  long long lhs = 0;       // left * ab
  long long rhs = 0;       // right * bc
  bool pass = false;
};

// ((a+b) o c) (a o b) = (a o (b+c)) (b o c) under pairwise orthogonality
inline TheoremBReport theoremB_check(const Quiver& q, const DimVector& a, const DimVector& b,
                                     const DimVector& c, uint64_t seed) {
  detail::require_orthogonal(q, {a, b, c});
  TheoremBReport rep;
  rep.ab = circ(q, a, b, detail::subseed(seed, 0)).value;
  rep.bc = circ(q, b, c, detail::subseed(seed, 1)).value;
  rep.left = circ(q, add_dim(a, b), c, detail::subseed(seed, 2)).value;
  rep.right = circ(q, a, add_dim(b, c), detail::subseed(seed, 3)).value;
  rep.lhs = rep.left * rep.ab;
  rep.rhs = rep.right * rep.bc;
  rep.pass = rep.lhs == rep.rhs;
  return rep;
}

struct Corollary3Report {
  long long bc = 0;       // b o c, must be 1
  long long bc_form = 0;  // <b, c>, recorded but not constrained
  long long whole = 0;    // a o (b + c)
  long long ab = 0;
  long long ac = 0;
  bool pass = false;
};

/* on an acyclic quiver with <a,b> = <a,c> = 0 and b o c = 1, the combined
   count splits: a o (b+c) = (a o b)(a o c) */
inline Corollary3Report corollary3_check(const Quiver& q, const DimVector& a, const DimVector& b,
                                         const DimVector& c, uint64_t seed) {
  if (!is_acyclic(q)) throw hypothesis_error("quiver has an oriented cycle");
  std::ostringstream bad;
  if (long long f = ringel_form(q, a, b); f != 0) bad << " <a, b> = " << f << ";";
  if (long long f = ringel_form(q, a, c); f != 0) bad << " <a, c> = " << f << ";";
  if (!bad.str().empty()) throw hypothesis_error("orthogonality hypothesis fails:" + bad.str());
  Corollary3Report rep;
  rep.bc_form = ringel_form(q, b, c);
  rep.bc = circ(q, b, c, detail::subseed(seed, 0)).value;
  if (rep.bc != 1)
    throw hypothesis_error("b o c must be 1, got " + std::to_string(rep.bc));
  rep.whole = circ(q, a, add_dim(b, c), detail::subseed(seed, 1)).value;
  rep.ab = circ(q, a, b, detail::subseed(seed, 2)).value;
  rep.ac = circ(q, a, c, detail::subseed(seed, 3)).value;
  rep.pass = rep.whole == rep.ab * rep.ac;
  return rep;
}

}  // namespace flagrank
