/* A short tour of the library API: root systems, cup products, Levi
   movability both ways, and generic quiver counts.  Prints what it
   computes; exits nonzero if anything comes out unexpected. */

#include <iostream>

#include "flagrank/bk.hpp"
#include "flagrank/quiver_checks.hpp"
#include "flagrank/schubert.hpp"

using namespace flagrank;

int main() {
  // the rank 2 symplectic group: 4 positive roots, dihedral Weyl group
  RootSystem rs = build_root_system("C2");
  std::cout << "C2 has " << rs.n_pos << " positive roots, Weyl order "
            << enumerate_weyl(rs).elements.size() << "\n";

  // cup product on a maximal parabolic quotient of C2: delta lists the
  // simple roots kept in the Levi
  SchubertTable t = build_schubert_table(rs);
  Parabolic p{1};
  auto reps = minimal_coset_reps(rs, t.group, p);
  int iu = t.group.find(reps[1]);  // the degree 1 class
  std::cout << "sigma_" << word_to_string(reps[1]) << " squared expands as:\n";
  for (const auto& [iw, c] : cup_constants(t, p, iu, iu))
    std::cout << "  " << c << " * sigma_" << word_to_string(t.element(iw)) << "\n";

  // movability of a full-flag triple, exact and randomized routes
  std::vector<int> labels;
  for (const char* w : {"1 2 1 2", "1 2", "2 1"}) {
    std::vector<int> word;
    for (const char* c = w; *c; ++c)
      if (*c != ' ') word.push_back(*c - '0');
    labels.push_back(t.group.find(weyl_from_word(rs, word)));
  }
  bool exact = is_levi_movable_exact_fullflag(t, labels);
  ChevalleyAlgebra alg = build_chevalley(rs);
  BKRandomized rp;
  rp.seed = 1;
  bool randomized = is_levi_movable_randomized(t, alg, Parabolic{}, labels, rp);
  std::cout << "triple (1 2 1 2, 1 2, 2 1) movable: exact " << exact << ", randomized "
            << randomized << "\n";
  auto bk = bk_multi_constant(t, Parabolic{}, labels);
  std::cout << "cup " << bk.cup << ", deformed " << bk.bk << "\n";

  // generic quiver counts: the Kronecker quiver, two parallel arrows
  Quiver kron = make_quiver({"1", "2"}, {{"a", 0, 1}, {"b", 0, 1}});
  auto c = circ(kron, {1, 1}, {1, 1}, 42);
  std::cout << "kronecker (1,1) o (1,1) = " << c.value << " (form " << c.form << ")\n";

  auto t5 = theorem5_check(kron, {{1, 1}, {1, 1}, {1, 1}}, 42);
  std::cout << "filtrations " << t5.filtrations << " = forward " << t5.forward << " = backward "
            << t5.backward << "\n";

  bool ok = exact && randomized && bk.bk == 1 && c.value == 2 && t5.pass;
  return ok ? 0 : 1;
}
