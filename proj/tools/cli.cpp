#include "cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <json.hpp>

#include "schubert/structconst.hpp"
#include "schubert/verify.hpp"

namespace schubert::cli {

namespace {

using nlohmann::json;

struct JobSpec {
  std::string type;         // builtin family string, e.g. "A4"
  std::string cartan_file;  // custom GCM as JSON
  std::string bott_file;
  std::string w_arg, u_arg, v_arg, mask_arg, suite;
  bool as_json = false;
  int bound = 0;
};

CartanMatrix load_cartan(const JobSpec& job) {
  if (!job.cartan_file.empty()) {
    std::ifstream in(job.cartan_file);
    if (!in) throw error("cannot open Cartan file '" + job.cartan_file + "'");
    json j = json::parse(in);
    CartanMatrix cm;
    cm.rank = j.at("rank").get<int>();
    cm.a = j.at("matrix").get<std::vector<std::vector<long>>>();
    cm.validate();
    return cm;
  }
  if (job.type.empty()) throw error("a Cartan type is required (-t or -C)");
  return cartan_from_string(job.type);
}

BottTowerSpec load_bott(const JobSpec& job) {
  if (job.bott_file.empty()) throw error("a Bott list is required (--bott-file)");
  std::ifstream in(job.bott_file);
  if (!in) throw error("cannot open Bott file '" + job.bott_file + "'");
  json j = json::parse(in);
  BottTowerSpec spec;
  spec.size = j.at("N").get<int>();
  if (spec.size < 1 || spec.size > 25) throw error("Bott list size out of range");
  for (auto& t : j.at("c")) {
    if (!t.is_array() || t.size() != 3) throw error("Bott list entries must be [i, j, value]");
    spec.set(t[0].get<int>(), t[1].get<int>(), t[2].get<long>());
  }
  return spec;
}

Word checked_word(const CartanMatrix& cm, const std::string& text, const char* flag) {
  Word w = parse_word(text);
  for (int i : w)
    if (i < 1 || i > cm.rank)
      throw error(std::string(flag) + ": letter out of range for the chosen type");
  return w;
}

std::string render_root(const CartanMatrix& cm, const Coords& c) {
  return to_string(Poly::linear(alpha_space(cm.rank), c));
}

std::string render_coroot(const CartanMatrix& cm, const Coords& c) {
  return to_string(Poly::linear(VarSpace{'h', cm.rank}, c));
}

std::string word_key(const WeylElement& w) { return format_word(w.reduced_word()); }

int cmd_roots(const JobSpec& job, std::ostream& out) {
  CartanMatrix cm = load_cartan(job);
  auto roots = positive_roots(cm);
  if (job.as_json) {
    json arr = json::array();
    for (auto& p : roots)
      arr.push_back({{"root", render_root(cm, p.root.coords)},
                     {"coroot", render_coroot(cm, p.coroot.coords)}});
    out << json({{"roots", arr}}).dump() << "\n";
  } else {
    for (auto& p : roots)
      out << render_root(cm, p.root.coords) << "\t" << render_coroot(cm, p.coroot.coords)
          << "\n";
  }
  return 0;
}

int cmd_weyl(const JobSpec& job, std::ostream& out) {
  CartanMatrix cm = load_cartan(job);
  if (job.v_arg.empty()) throw error("weyl needs a word (-v)");
  WeylElement w = WeylElement::from_word(cm, checked_word(cm, job.v_arg, "-v"));
  std::vector<std::string> inv;
  for (auto& r : inversion_set(w)) inv.push_back(render_root(cm, r.coords));
  if (job.as_json) {
    out << json({{"length", w.length()},
                 {"reduced", word_key(w)},
                 {"inversions", inv}})
               .dump()
        << "\n";
  } else {
    out << "length: " << w.length() << "\n";
    out << "reduced: " << word_key(w) << "\n";
    out << "inversions: ";
    for (size_t k = 0; k < inv.size(); ++k) out << (k ? "; " : "") << inv[k];
    out << "\n";
  }
  return 0;
}

int cmd_billey(const JobSpec& job, std::ostream& out) {
  CartanMatrix cm = load_cartan(job);
  if (job.w_arg.empty() || job.v_arg.empty()) throw error("billey needs -w and -v");
  WeylElement w = WeylElement::from_word(cm, checked_word(cm, job.w_arg, "-w"));
  Poly value = billey(cm, w, checked_word(cm, job.v_arg, "-v"));
  if (job.as_json)
    out << json({{"w", word_key(w)}, {"v", job.v_arg}, {"xi", to_string(value)}}).dump()
        << "\n";
  else
    out << to_string(value) << "\n";
  return 0;
}

int cmd_psi(const JobSpec& job, std::ostream& out) {
  CartanMatrix cm = load_cartan(job);
  if (job.w_arg.empty() || job.v_arg.empty()) throw error("psi needs -w and -v");
  WeylElement w = WeylElement::from_word(cm, checked_word(cm, job.w_arg, "-w"));
  Char value = psi(cm, w, checked_word(cm, job.v_arg, "-v"));
  if (job.as_json)
    out << json({{"w", word_key(w)}, {"v", job.v_arg}, {"psi", to_string(value)}}).dump()
        << "\n";
  else
    out << to_string(value) << "\n";
  return 0;
}

int cmd_pq(const JobSpec& job, std::ostream& out) {
  CartanMatrix cm = load_cartan(job);
  if (job.u_arg.empty() || job.v_arg.empty() || job.w_arg.empty())
    throw error("pq needs -u, -v and -w");
  WeylElement u = WeylElement::from_word(cm, checked_word(cm, job.u_arg, "-u"));
  WeylElement v = WeylElement::from_word(cm, checked_word(cm, job.v_arg, "-v"));
  Word w_word = checked_word(cm, job.w_arg, "-w");
  Poly p = struct_const(cm, u, v, w_word);
  if (job.as_json)
    out << json({{"w", format_word(w_word)}, {"p", to_string(p)}}).dump() << "\n";
  else
    out << to_string(p) << "\n";
  return 0;
}

int cmd_product(const JobSpec& job, std::ostream& out) {
  CartanMatrix cm = load_cartan(job);
  if (job.u_arg.empty() || job.v_arg.empty()) throw error("product needs -u and -v");
  WeylElement u = WeylElement::from_word(cm, checked_word(cm, job.u_arg, "-u"));
  WeylElement v = WeylElement::from_word(cm, checked_word(cm, job.v_arg, "-v"));
  std::map<WeylElement, Poly> result =
      job.w_arg.empty() ? product_in_basis(cm, u, v)
                        : product_in_basis(cm, u, v, checked_word(cm, job.w_arg, "-w"));
  if (job.as_json) {
    json arr = json::array();
    for (auto& [w, p] : result) arr.push_back({{"w", word_key(w)}, {"p", to_string(p)}});
    out << arr.dump() << "\n";
  } else {
    for (auto& [w, p] : result) out << word_key(w) << ": " << to_string(p) << "\n";
  }
  return 0;
}

int cmd_bott(const JobSpec& job, std::ostream& out, bool ktheory) {
  BottTowerSpec spec = load_bott(job);
  std::vector<Mask> rows;
  if (!job.mask_arg.empty()) {
    Mask m = Mask::parse(job.mask_arg);
    if (m.n != spec.size) throw error("-e: mask size does not match the Bott list");
    rows.push_back(m);
  } else {
    rows = all_masks(spec.size);
  }
  json arr = json::array();
  for (const Mask& e : rows)
    for (const Mask& ep : all_masks(spec.size)) {
      std::string v = ktheory ? to_string(mu_D(spec, e, ep)) : to_string(sigma_D(spec, e, ep));
      if (job.as_json)
        arr.push_back({{"e", e.to_string()}, {"ep", ep.to_string()}, {"v", v}});
      else
        out << e.to_string() << " " << ep.to_string() << "\t" << v << "\n";
    }
  if (job.as_json) out << arr.dump() << "\n";
  return 0;
}

int cmd_basechange(const JobSpec& job, std::ostream& out) {
  CartanMatrix cm = load_cartan(job);
  if (!job.v_arg.empty()) {
    Char b = base_change_b(cm, checked_word(cm, job.v_arg, "-v"));
    if (job.as_json)
      out << json({{"v", job.v_arg}, {"b", to_string(b)}}).dump() << "\n";
    else
      out << to_string(b) << "\n";
    return 0;
  }
  if (job.w_arg.empty()) throw error("basechange needs -v (coefficient) or -w (expansion)");
  WeylElement w = WeylElement::from_word(cm, checked_word(cm, job.w_arg, "-w"));
  auto expansion = change_of_basis(cm, w);
  if (job.as_json) {
    json arr = json::array();
    for (auto& [v, c] : expansion) arr.push_back({{"v", word_key(v)}, {"c", to_string(c)}});
    out << arr.dump() << "\n";
  } else {
    for (auto& [v, c] : expansion) out << word_key(v) << ": " << to_string(c) << "\n";
  }
  return 0;
}

int report_suites(const std::vector<SuiteResult>& suites, bool as_json, std::ostream& out) {
  bool ok = true;
  json arr = json::array();
  for (const SuiteResult& s : suites) {
    ok &= s.ok();
    if (as_json) {
      arr.push_back({{"suite", s.name},
                     {"checked", s.checked},
                     {"failures", s.failures}});
    } else if (s.ok()) {
      out << "ok " << s.name << " (" << s.checked << " checks)\n";
    } else {
      out << "FAIL " << s.name << " (" << s.failures.size() << " of " << s.checked
          << " checks failed)\n";
      for (auto& f : s.failures) out << "  " << f << "\n";
    }
  }
  if (as_json) out << arr.dump() << "\n";
  return ok ? 0 : 2;
}

int cmd_verify(const JobSpec& job, std::ostream& out) {
  std::vector<CartanMatrix> types;
  if (!job.type.empty() || !job.cartan_file.empty()) {
    types.push_back(load_cartan(job));
  } else {
    types.push_back(cartan_from_string("A2"));
    types.push_back(cartan_from_string("B2"));
  }
  const std::string& suite = job.suite;
  std::vector<SuiteResult> results;
  auto want = [&](const char* name) { return suite == name || suite == "all"; };
  if (want("localization-delta"))
    results.push_back(verify_localization_delta(job.bound > 0 ? job.bound : 4, 10, 20240901));
  if (want("euler-delta"))
    results.push_back(verify_euler_delta(job.bound > 0 ? job.bound : 4, 10, 20240902));
  if (want("tau"))
    for (auto& cm : types) results.push_back(verify_tau(cm, job.bound > 0 ? job.bound : 5));
  if (want("word-independence"))
    for (auto& cm : types) results.push_back(verify_word_independence(cm));
  if (want("psi-axioms"))
    for (auto& cm : types) results.push_back(verify_psi_axioms(cm));
  if (want("kk-vs-t"))
    for (auto& cm : types)
      results.push_back(verify_kk_vs_t(cm, job.bound > 0 ? job.bound : -1));
  if (want("yang-baxter"))
    for (auto& cm : types) results.push_back(verify_yang_baxter_suite(cm));
  if (want("duan-at-zero"))
    for (auto& cm : types)
      results.push_back(verify_duan_at_zero(cm, job.bound > 0 ? job.bound : -1));
  if (results.empty()) throw error("unknown verify suite '" + suite + "'");
  return report_suites(results, job.as_json, out);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact equivariant Schubert calculus on Bott towers, Bott-Samelson "
               "varieties and flag varieties"};
  app.fallthrough();
  JobSpec job;
  app.add_option("-t,--type", job.type, "Builtin Cartan type, e.g. A4, B2, G2, F4, D4");
  app.add_option("-C,--cartan-file", job.cartan_file,
                 "Custom generalized Cartan matrix (JSON {\"rank\", \"matrix\"})");
  app.add_flag("--json", job.as_json, "Machine-readable output");
  app.add_option("--bound", job.bound, "Bound for enumerations (suite-specific)");
  app.require_subcommand(1);

  auto add_common = [&](CLI::App* sub, bool w, bool u, bool v, bool e, bool bott) {
    if (w) sub->add_option("-w", job.w_arg, "Word for w (comma-separated 1-based indices)");
    if (u) sub->add_option("-u", job.u_arg, "Word for u");
    if (v) sub->add_option("-v", job.v_arg, "Word for v");
    if (e) sub->add_option("-e", job.mask_arg, "Cell mask as a bit string, e.g. 101");
    if (bott)
      sub->add_option("--bott-file", job.bott_file,
                      "Bott tower list (JSON {\"N\", \"c\": [[i,j,value],...]})");
  };

  CLI::App* roots = app.add_subcommand("roots", "Positive roots and coroots");
  CLI::App* weyl = app.add_subcommand("weyl", "Length, normal form and inversions of a word");
  add_common(weyl, false, false, true, false, false);
  CLI::App* billey_cmd =
      app.add_subcommand("billey", "Fixed-point restriction xi^w(v) of a Schubert class");
  add_common(billey_cmd, true, false, true, false, false);
  CLI::App* psi_cmd =
      app.add_subcommand("psi", "Fixed-point restriction psi^w(v) in K-theory");
  add_common(psi_cmd, true, false, true, false, false);
  CLI::App* pq =
      app.add_subcommand("pq", "Structure constant p_{u,v}^w for the given word of w");
  add_common(pq, true, true, true, false, false);
  CLI::App* product = app.add_subcommand(
      "product", "Full expansion of xi^u * xi^v in the Schubert basis (finite type)");
  add_common(product, true, true, true, false, false);
  CLI::App* bott_restrict = app.add_subcommand(
      "bott-restrict", "Cohomology restriction table of a Bott tower");
  add_common(bott_restrict, false, false, false, true, true);
  CLI::App* bott_k =
      app.add_subcommand("bott-k", "K-theory restriction table of a Bott tower");
  add_common(bott_k, false, false, false, true, true);
  CLI::App* basechange = app.add_subcommand(
      "basechange", "Base-change coefficient b^v or structure-sheaf expansion");
  add_common(basechange, true, false, true, false, false);
  CLI::App* verify = app.add_subcommand("verify", "Run a verification suite");
  verify->add_option("suite", job.suite,
                     "One of: localization-delta, euler-delta, tau, word-independence, "
                     "psi-axioms, kk-vs-t, yang-baxter, duan-at-zero, all")
      ->required();

  std::vector<std::string> argv = args;
  try {
    std::vector<const char*> cargs;
    cargs.push_back("schubert");
    for (auto& a : argv) cargs.push_back(a.c_str());
    app.parse((int)cargs.size(), cargs.data());
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 1;
  }

  try {
    if (roots->parsed()) return cmd_roots(job, out);
    if (weyl->parsed()) return cmd_weyl(job, out);
    if (billey_cmd->parsed()) return cmd_billey(job, out);
    if (psi_cmd->parsed()) return cmd_psi(job, out);
    if (pq->parsed()) return cmd_pq(job, out);
    if (product->parsed()) return cmd_product(job, out);
    if (bott_restrict->parsed()) return cmd_bott(job, out, false);
    if (bott_k->parsed()) return cmd_bott(job, out, true);
    if (basechange->parsed()) return cmd_basechange(job, out);
    if (verify->parsed()) return cmd_verify(job, out);
  } catch (const error& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}

}  // namespace schubert::cli
