/* flagrank: exact Schubert structure constants, the Belkale-Kumar deformed
   cup product, and generic quiver subrepresentation counts.

   Reports go to standard output as JSON (default), CSV or flat text, and
   every JSON report carries a `conventions` block so archived runs stay
   self-describing.  Exit codes: 0 success / identity holds, 1 a checked
   identity failed or a hypothesis/instability was reported, 2 input error,
   3 resource cap. */

#include <cstdint>
#include <iostream>
#include <limits>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "flagrank/bk.hpp"
#include "flagrank/chevalley.hpp"
#include "flagrank/errors.hpp"
#include "flagrank/parse.hpp"
#include "flagrank/quiver.hpp"
#include "flagrank/quiver_checks.hpp"
#include "flagrank/quiver_count.hpp"
#include "flagrank/root_system.hpp"
#include "flagrank/schubert.hpp"
#include "flagrank/weyl.hpp"

using json = nlohmann::ordered_json;
using namespace flagrank;

namespace {

json jnum(const Int& v) {
  if (v <= std::numeric_limits<long long>::max() && v >= std::numeric_limits<long long>::min())
    return v.convert_to<long long>();
  return v.str();  // lossless fallback, out of 64-bit range
}

json flag_conventions() {
  return json{
      {"word_order", "a word i1 i2 ... ik is the product s_i1 s_i2 ... s_ik acting right to left"},
      {"cartan", "cartan[i][j] = <alpha_j, alpha_i_vee>"},
      {"grading", "labels are codimension graded, sigma_w has degree l(w)"},
      {"inversions", "Inv(w) = positive roots sent negative by w"},
      {"duality", "the dual label of w is w0 w w0_P"},
      {"chi", "chi_w = sum of the roots of Inv(w) outside the Levi"},
  };
}

json quiver_conventions() {
  return json{
      {"ringel_form", "<a,b> = sum_s a(s) b(s) - sum_arrows a(ia) b(ta)"},
      {"circ",
       "a o b counts the a-dimensional subrepresentations of a generic representation of "
       "dimension a + b, and is 0 when the generic count is infinite"},
      {"decompositions", "parts are successive subquotient dimensions, first part deepest"},
      {"coordinates", "dimension vectors follow vertex declaration order"},
  };
}

void flatten(const json& j, const std::string& prefix,
             std::vector<std::pair<std::string, std::string>>& out) {
  if (j.is_object()) {
    for (const auto& [k, v] : j.items()) flatten(v, prefix.empty() ? k : prefix + "." + k, out);
  } else if (j.is_array()) {
    int i = 0;
    for (const auto& v : j) flatten(v, prefix + "." + std::to_string(i++), out);
  } else {
    out.emplace_back(prefix, j.dump());
  }
}

void emit(const json& rep, const std::string& format) {
  if (format == "json") {
    std::cout << rep.dump(2) << "\n";
    return;
  }
  std::vector<std::pair<std::string, std::string>> rows;
  flatten(rep, "", rows);
  for (const auto& [k, v] : rows)
    std::cout << k << (format == "csv" ? "," : " = ") << v << "\n";
}

int fail(const std::string& format, const std::string& kind, const std::string& msg, int code) {
  std::cerr << "flagrank: " << kind << " error: " << msg << "\n";
  emit(json{{"error", kind}, {"message", msg}}, format);
  return code;
}

void attach_warnings(json& rep, const ParsedWords& pw) {
  for (const auto& w : pw.warnings) std::cerr << "flagrank: warning: " << w << "\n";
  if (!pw.warnings.empty()) rep["warnings"] = pw.warnings;
}

std::vector<int> table_labels(const SchubertTable& t, const ParsedWords& pw) {
  std::vector<int> labels;
  for (const auto& w : pw.elements) {
    int idx = t.group.find(w);
    if (idx < 0) throw std::logic_error("Weyl element missing from the enumerated table");
    labels.push_back(idx);
  }
  return labels;
}

json word_list(const ParsedWords& pw) {
  json a = json::array();
  for (const auto& w : pw.elements) a.push_back(word_to_string(w));
  return a;
}

// ---- subcommand bodies; each returns the report, exit code via out-param ----

json cmd_roots(const std::string& type) {
  RootSystem rs = build_root_system(type);
  json rep;
  rep["command"] = "roots";
  rep["type"] = rs.label;
  rep["rank"] = rs.rank;
  rep["n_positive"] = rs.n_pos;
  rep["cartan"] = rs.cartan;
  rep["symmetrizer"] = rs.sym;
  json pos = json::array();
  for (int r = 0; r < rs.n_pos; ++r)
    pos.push_back(json{{"coords", rs.roots[r]}, {"height", rs.height(r)}});
  rep["positive_roots"] = std::move(pos);
  rep["conventions"] = flag_conventions();
  return rep;
}

json cmd_weyl(const std::string& type, const std::string& pspec, long long cap) {
  RootSystem rs = build_root_system(type);
  Parabolic delta = parse_parabolic_spec(rs, pspec);
  WeylGroup g = enumerate_weyl(rs, cap);
  json rep;
  rep["command"] = "weyl";
  rep["type"] = rs.label;
  rep["parabolic"] = delta;
  rep["order"] = g.order();
  rep["longest"] = word_to_string(g.w0());
  auto listing = [](const std::vector<WeylElement>& els) {
    json a = json::array();
    for (const auto& w : els) a.push_back(json{{"word", word_to_string(w)}, {"length", w.length()}});
    return a;
  };
  if (delta.empty())
    rep["elements"] = listing(g.elements);
  else
    rep["minimal_representatives"] = listing(minimal_coset_reps(rs, g, delta));
  rep["conventions"] = flag_conventions();
  return rep;
}

json cmd_cup(const std::string& type, const std::string& pspec, const std::string& words,
             long long cap) {
  RootSystem rs = build_root_system(type);
  Parabolic delta = parse_parabolic_spec(rs, pspec);
  SchubertTable t = build_schubert_table(rs, cap);
  ParsedWords pw = parse_words(rs, words);
  std::vector<int> labels = table_labels(t, pw);
  json rep;
  rep["command"] = "cup";
  rep["type"] = rs.label;
  rep["parabolic"] = delta;
  rep["words"] = word_list(pw);
  attach_warnings(rep, pw);
  if (labels.size() == 2) {
    // full basis expansion of sigma_u . sigma_v
    json terms = json::array();
    for (const auto& [iw, c] : cup_constants(t, delta, labels[0], labels[1]))
      terms.push_back(json{{"word", word_to_string(t.element(iw))}, {"coefficient", jnum(c)}});
    rep["expansion"] = std::move(terms);
  } else {
    rep["coefficient"] = jnum(multi_point_coefficient(t, delta, labels));
  }
  rep["conventions"] = flag_conventions();
  return rep;
}

json cmd_bk(const std::string& type, const std::string& pspec, const std::string& words,
            uint64_t seed, bool have_seed, uint64_t prime, int trials, long long cap,
            bool crosscheck) {
  RootSystem rs = build_root_system(type);
  Parabolic delta = parse_parabolic_spec(rs, pspec);
  SchubertTable t = build_schubert_table(rs, cap);
  ParsedWords pw = parse_words(rs, words);
  std::vector<int> labels = table_labels(t, pw);
  json rep;
  rep["command"] = "bk";
  rep["type"] = rs.label;
  rep["parabolic"] = delta;
  rep["words"] = word_list(pw);
  attach_warnings(rep, pw);
  BKReport r;
  if (delta.empty()) {
    r = bk_multi_constant(t, delta, labels);
  } else {
    if (!have_seed) throw input_error("--seed is required for a proper parabolic");
    ChevalleyAlgebra alg = build_chevalley(rs);
    BKRandomized rp{seed, prime, trials};
    r = bk_multi_constant(t, delta, labels, &alg, &rp);
    rep["seed"] = seed;
  }
  rep["cup"] = jnum(r.cup);
  rep["levi_movable"] = r.movable;
  rep["bk"] = jnum(r.bk);
  rep["method"] = r.method;
  if (r.method == "randomized") {
    rep["prime"] = r.prime;
    rep["trials"] = r.trials;
  }
  // advisory second opinion; calibrated against the other routes at rank <= 3
  if (crosscheck) rep["character_movable"] = is_levi_movable_character(t, delta, labels);
  rep["conventions"] = flag_conventions();
  return rep;
}

json cmd_theorem4(const std::string& type, const std::string& qspec, const std::string& pspec,
                  const std::string& words, uint64_t seed, uint64_t prime, int trials,
                  long long cap, int& code) {
  RootSystem rs = build_root_system(type);
  Parabolic deltaQ = parse_parabolic_spec(rs, qspec);
  Parabolic deltaP = parse_parabolic_spec(rs, pspec);
  SchubertTable t = build_schubert_table(rs, cap);
  ChevalleyAlgebra alg = build_chevalley(rs);
  ParsedWords pw = parse_words(rs, words);
  BKRandomized rp{seed, prime, trials};
  Theorem4Report r = theorem4_check(t, alg, deltaQ, deltaP, table_labels(t, pw), rp);
  json rep;
  rep["command"] = "theorem4";
  rep["type"] = rs.label;
  rep["q"] = deltaQ;
  rep["p"] = deltaP;
  rep["words"] = word_list(pw);
  attach_warnings(rep, pw);
  rep["seed"] = seed;
  rep["prime"] = prime;
  rep["trials"] = trials;
  rep["movable_input"] = r.movable_input;
  rep["movable_ambient"] = r.movable_ambient;
  rep["movable_levi"] = r.movable_levi;
  rep["codim_ambient"] = json{{"sum", r.codim_ambient_sum}, {"expected", r.codim_ambient_expected}};
  rep["codim_levi"] = json{{"sum", r.codim_levi_sum}, {"expected", r.codim_levi_expected}};
  rep["codims_ok"] = r.codims_ok;
  rep["c_input"] = jnum(r.c_input);
  rep["c_ambient"] = jnum(r.c_ambient);
  rep["c_levi"] = jnum(r.c_levi);
  rep["product_ok"] = r.product_ok;
  rep["pass"] = r.pass;
  rep["conventions"] = flag_conventions();
  code = r.pass ? 0 : 1;
  return rep;
}

json cmd_corollary2(int rank, long long cap, int& code) {
  Corollary2Report r = corollary2_scan(rank, cap);
  json rep;
  rep["command"] = "corollary2";
  rep["rank"] = r.rank;
  rep["triples_checked"] = r.triples_checked;
  rep["movable"] = r.movable;
  json vals = json::array();
  for (const auto& v : r.nonzero_values) vals.push_back(jnum(v));
  rep["nonzero_bk_values"] = std::move(vals);
  rep["all_one"] = r.all_one;
  rep["conventions"] = flag_conventions();
  code = r.all_one ? 0 : 1;
  return rep;
}

json quiver_header(const char* sub, const std::string& file, const Quiver& q) {
  json rep;
  rep["command"] = std::string("quiver ") + sub;
  rep["file"] = file;
  rep["vertices"] = q.vertices;
  return rep;
}

json cmd_circ(const std::string& file, const std::string& astr, const std::string& bstr,
              uint64_t seed) {
  Quiver q = parse_quiver_file(file);
  DimVector a = parse_dim_vector(q, astr, "a");
  DimVector b = parse_dim_vector(q, bstr, "b");
  CircReport r = circ(q, a, b, seed);
  json rep = quiver_header("circ", file, q);
  rep["a"] = a;
  rep["b"] = b;
  rep["seed"] = seed;
  rep["value"] = r.value;
  rep["form"] = r.form;
  rep["route"] = r.route;
  if (r.route == "stabilized") {
    rep["primes"] = r.primes;
    rep["samples_per_prime"] = r.samples;
  }
  rep["conventions"] = quiver_conventions();
  return rep;
}

json cmd_homext(const std::string& file, const std::string& astr, const std::string& bstr,
                uint64_t seed, int trials) {
  Quiver q = parse_quiver_file(file);
  DimVector a = parse_dim_vector(q, astr, "a");
  DimVector b = parse_dim_vector(q, bstr, "b");
  HomExtReport r = generic_hom_ext(q, a, b, seed, trials);
  json rep = quiver_header("homext", file, q);
  rep["a"] = a;
  rep["b"] = b;
  rep["seed"] = seed;
  rep["trials"] = trials;
  rep["hom"] = r.hom;
  rep["ext"] = r.ext;
  rep["form"] = ringel_form(q, a, b);
  rep["conventions"] = quiver_conventions();
  return rep;
}

json cmd_theorem5(const std::string& file, const std::string& dstr, uint64_t seed, int& code) {
  Quiver q = parse_quiver_file(file);
  Decomposition d = parse_decomposition(q, dstr);
  Theorem5Report r = theorem5_check(q, d, seed);
  json rep = quiver_header("theorem5", file, q);
  rep["decomp"] = d;
  rep["seed"] = seed;
  rep["delta"] = r.delta;
  rep["filtrations"] = r.filtrations;
  rep["forward"] = r.forward;
  rep["backward"] = r.backward;
  rep["pass"] = r.pass;
  rep["conventions"] = quiver_conventions();
  code = r.pass ? 0 : 1;
  return rep;
}

json cmd_theoremB(const std::string& file, const std::string& astr, const std::string& bstr,
                  const std::string& cstr, uint64_t seed, int& code) {
  Quiver q = parse_quiver_file(file);
  DimVector a = parse_dim_vector(q, astr, "a");
  DimVector b = parse_dim_vector(q, bstr, "b");
  DimVector c = parse_dim_vector(q, cstr, "c");
  TheoremBReport r = theoremB_check(q, a, b, c, seed);
  json rep = quiver_header("theoremB", file, q);
  rep["a"] = a;
  rep["b"] = b;
  rep["c"] = c;
  rep["seed"] = seed;
  rep["ab"] = r.ab;
  rep["bc"] = r.bc;
  rep["left"] = r.left;
  rep["right"] = r.right;
  rep["lhs"] = r.lhs;
  rep["rhs"] = r.rhs;
  rep["pass"] = r.pass;
  rep["conventions"] = quiver_conventions();
  code = r.pass ? 0 : 1;
  return rep;
}

json cmd_corollary3(const std::string& file, const std::string& astr, const std::string& bstr,
                    const std::string& cstr, uint64_t seed, int& code) {
  Quiver q = parse_quiver_file(file);
  DimVector a = parse_dim_vector(q, astr, "a");
  DimVector b = parse_dim_vector(q, bstr, "b");
  DimVector c = parse_dim_vector(q, cstr, "c");
  Corollary3Report r = corollary3_check(q, a, b, c, seed);
  json rep = quiver_header("corollary3", file, q);
  rep["a"] = a;
  rep["b"] = b;
  rep["c"] = c;
  rep["seed"] = seed;
  rep["bc"] = r.bc;
  rep["bc_form"] = r.bc_form;
  rep["whole"] = r.whole;
  rep["ab"] = r.ab;
  rep["ac"] = r.ac;
  rep["pass"] = r.pass;
  rep["conventions"] = quiver_conventions();
  code = r.pass ? 0 : 1;
  return rep;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact Schubert calculus, the deformed cup product, and generic quiver counts"};
  app.require_subcommand(1);

  std::string format = "json";
  app.add_option("--format", format, "output format: json, csv or text")
      ->check(CLI::IsMember({"json", "csv", "text"}));

  std::string type, pspec, qspec, words, file, astr, bstr, cstr, dstr;
  uint64_t seed = 0, prime = 65537;
  int trials = 20, rank = 0;
  long long cap = 50000;
  bool crosscheck = false;

  auto* roots = app.add_subcommand("roots", "root system data for a type tag");
  roots->add_option("--type", type, "root system tag, e.g. A2, C3")->required();

  auto* weyl = app.add_subcommand("weyl", "Weyl group elements or minimal coset representatives");
  weyl->add_option("--type", type)->required();
  weyl->add_option("--p", pspec, "parabolic simple-root indices, blank for the Borel");
  weyl->add_option("--cap", cap, "Weyl enumeration cap");

  auto* cup = app.add_subcommand(
      "cup", "cup product: basis expansion for two words, point coefficient for more");
  cup->add_option("--type", type)->required();
  cup->add_option("--p", pspec);
  cup->add_option("--words", words, "comma-separated Weyl words, e.g. \"1 2 1, 1 2, 1\"")
      ->required();
  cup->add_option("--cap", cap);

  auto* bk = app.add_subcommand("bk", "deformed multi-point coefficient with movability");
  bk->add_option("--type", type)->required();
  bk->add_option("--p", pspec);
  bk->add_option("--words", words)->required();
  auto* bk_seed = bk->add_option("--seed", seed, "required for a proper parabolic");
  bk->add_option("--prime", prime);
  bk->add_option("--trials", trials);
  bk->add_option("--cap", cap);
  bk->add_flag("--crosscheck", crosscheck, "also report the advisory character criterion");

  auto* th4 = app.add_subcommand("theorem4", "factorization through a larger parabolic");
  th4->add_option("--type", type)->required();
  th4->add_option("--q", qspec, "small parabolic, blank for the Borel");
  th4->add_option("--p", pspec, "large parabolic containing the small one")->required();
  th4->add_option("--words", words, "tuple on the small flag variety")->required();
  th4->add_option("--seed", seed)->required();
  th4->add_option("--prime", prime);
  th4->add_option("--trials", trials);
  th4->add_option("--cap", cap);

  auto* cor2 = app.add_subcommand("corollary2", "exhaustive symplectic full-flag scan");
  cor2->add_option("--rank", rank, "symplectic rank n for Sp_2n")->required();
  cor2->add_option("--cap", cap);

  auto* quiver = app.add_subcommand("quiver", "generic quiver counting");
  quiver->require_subcommand(1);
  quiver->fallthrough();

  auto* circ_cmd = quiver->add_subcommand("circ", "generic subrepresentation count a o b");
  circ_cmd->add_option("--file", file, "quiver file")->required();
  circ_cmd->add_option("--a", astr, "subrepresentation dimensions")->required();
  circ_cmd->add_option("--b", bstr, "quotient dimensions")->required();
  circ_cmd->add_option("--seed", seed)->required();

  auto* he = quiver->add_subcommand("homext", "generic hom and ext dimensions");
  he->add_option("--file", file)->required();
  he->add_option("--a", astr)->required();
  he->add_option("--b", bstr)->required();
  he->add_option("--seed", seed)->required();
  he->add_option("--trials", trials);

  auto* th5 = quiver->add_subcommand("theorem5", "filtration count vs both ordered products");
  th5->add_option("--file", file)->required();
  th5->add_option("--decomp", dstr, "decomposition, parts separated by '|': \"1,1|1,1\"")
      ->required();
  th5->add_option("--seed", seed)->required();

  auto* thB = quiver->add_subcommand("theoremB", "two-route associativity of circ");
  thB->add_option("--file", file)->required();
  thB->add_option("--a", astr)->required();
  thB->add_option("--b", bstr)->required();
  thB->add_option("--c", cstr)->required();
  thB->add_option("--seed", seed)->required();

  auto* cor3 = quiver->add_subcommand("corollary3", "multiplicative splitting when b o c = 1");
  cor3->add_option("--file", file)->required();
  cor3->add_option("--a", astr)->required();
  cor3->add_option("--b", bstr)->required();
  cor3->add_option("--c", cstr)->required();
  cor3->add_option("--seed", seed)->required();

  // --format sits on the root app; let it match from any subcommand position
  for (auto* s : {roots, weyl, cup, bk, th4, cor2, quiver, circ_cmd, he, th5, thB, cor3})
    s->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  int code = 0;
  json rep;
  try {
    if (roots->parsed()) {
      rep = cmd_roots(type);
    } else if (weyl->parsed()) {
      rep = cmd_weyl(type, pspec, cap);
    } else if (cup->parsed()) {
      rep = cmd_cup(type, pspec, words, cap);
    } else if (bk->parsed()) {
      rep = cmd_bk(type, pspec, words, seed, bk_seed->count() > 0, prime, trials, cap, crosscheck);
    } else if (th4->parsed()) {
      rep = cmd_theorem4(type, qspec, pspec, words, seed, prime, trials, cap, code);
    } else if (cor2->parsed()) {
      rep = cmd_corollary2(rank, cap, code);
    } else if (circ_cmd->parsed()) {
      rep = cmd_circ(file, astr, bstr, seed);
    } else if (he->parsed()) {
      rep = cmd_homext(file, astr, bstr, seed, trials);
    } else if (th5->parsed()) {
      rep = cmd_theorem5(file, dstr, seed, code);
    } else if (thB->parsed()) {
      rep = cmd_theoremB(file, astr, bstr, cstr, seed, code);
    } else if (cor3->parsed()) {
      rep = cmd_corollary3(file, astr, bstr, cstr, seed, code);
    } else {
      return fail(format, "input", "no subcommand", 2);
    }
  } catch (const input_error& e) {
    return fail(format, "input", e.what(), 2);
  } catch (const resource_error& e) {
    return fail(format, "resource", e.what(), 3);
  } catch (const hypothesis_error& e) {
    return fail(format, "hypothesis", e.what(), 1);
  } catch (const instability_error& e) {
    return fail(format, "instability", e.what(), 1);
  } catch (const std::logic_error& e) {
    return fail(format, "internal", e.what(), 1);
  }
  emit(rep, format);
  return code;
}
