#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "hallmark/arith.hpp"
#include "hallmark/catalog.hpp"
#include "hallmark/classifier.hpp"
#include "hallmark/group_file.hpp"
#include "hallmark/oracle.hpp"
#include "hallmark/subgroups.hpp"

namespace {

using hallmark::DomainError;
using hallmark::EnumerationLimits;
using hallmark::FormatError;
using hallmark::PermGroup;
using hallmark::ResourceError;
using hallmark::ScopeError;
using hallmark::arith::Int;
using hallmark::arith::PrimeSet;
using json = nlohmann::json;

// Exit codes: 0 success, 1 crosscheck disagreement, 2 usage/parse,
// 3 resource, 4 scope.
constexpr int kExitOk = 0;
constexpr int kExitDisagreement = 1;
constexpr int kExitUsage = 2;
constexpr int kExitResource = 3;
constexpr int kExitScope = 4;

EnumerationLimits limits_from_env() {
  EnumerationLimits limits;
  if (const char* cap = std::getenv("HALLMARK_MAX_ELEMENTS")) {
    try {
      limits.element_cap = std::stoll(cap);
    } catch (const std::exception&) {
      throw FormatError("HALLMARK_MAX_ELEMENTS is not a number: " + std::string(cap));
    }
  }
  return limits;
}

json verdict_json(hallmark::classifier::GroupClass c,
                  const hallmark::classifier::Verdict& v) {
  json citations = json::array();
  for (const auto& j : v.because) {
    json entry{{"rule", j.rule}, {"detail", j.detail}};
    if (j.factor) entry["factor"] = j.factor->to_string();
    citations.push_back(entry);
  }
  return json{{"class", hallmark::classifier::class_name(c)},
              {"verdict", hallmark::classifier::to_string(v.value)},
              {"citations", citations},
              {"flags", v.flags}};
}

int cmd_classify(const std::string& factors_arg, const std::string& pi_arg,
                 const std::string& format) {
  auto factors = hallmark::classifier::FactorList::of(
      hallmark::io::parse_factor_list(factors_arg));
  PrimeSet pi = hallmark::io::parse_prime_set(pi_arg);
  auto report = hallmark::classifier::full_report(factors, pi);

  if (format == "json") {
    json out;
    out["factors"] = json::array();
    for (const auto& f : report.factors.factors) out["factors"].push_back(f.to_string());
    out["pi"] = json::array();
    for (Int p : report.pi.primes()) out["pi"].push_back(p);
    out["joint_spectrum"] = json::array();
    for (Int p : report.joint_spectrum.primes()) out["joint_spectrum"].push_back(p);
    out["pi_separable"] = report.pi_separable;
    out["pi_soluble"] = report.pi_soluble;
    out["pi_selected"] = report.pi_selected;
    out["classes"] = json::array();
    for (const auto& [c, v] : report.verdicts) out["classes"].push_back(verdict_json(c, v));
    out["corollaries"] = json::array();
    for (const auto& [tag, text] : report.corollaries)
      out["corollaries"].push_back({{"tag", tag}, {"conclusion", text}});
    std::cout << out.dump(2) << '\n';
    return kExitOk;
  }

  std::cout << "factors:";
  for (const auto& f : report.factors.factors) std::cout << ' ' << f.to_string();
  std::cout << "\npi: " << report.pi.to_string()
            << "   joint spectrum: " << report.joint_spectrum.to_string() << '\n';
  std::cout << "pi-separable: " << (report.pi_separable ? "yes" : "no")
            << "   pi-soluble: " << (report.pi_soluble ? "yes" : "no")
            << "   pi-selected: " << (report.pi_selected ? "yes" : "no") << "\n\n";
  for (const auto& [c, v] : report.verdicts) {
    std::cout << hallmark::classifier::class_name(c) << ": "
              << hallmark::classifier::to_string(v.value) << '\n';
    for (const auto& j : v.because)
      std::cout << "    [" << j.rule << "] " << j.detail << '\n';
    for (const auto& f : v.flags) std::cout << "    (flag) " << f << '\n';
  }
  if (!report.corollaries.empty()) {
    std::cout << "\ncorollaries in force:\n";
    for (const auto& [tag, text] : report.corollaries)
      std::cout << "  [" << tag << "] " << text << '\n';
  }
  return kExitOk;
}

PermGroup load_group(const std::string& group_file, const std::string& builtin) {
  if (!builtin.empty()) {
    const auto* entry = hallmark::oracle::find_corpus_entry(builtin);
    if (!entry) throw FormatError("unknown builtin group: " + builtin);
    return entry->construct();
  }
  std::ifstream in(group_file);
  if (!in) throw FormatError("cannot open group file: " + group_file);
  auto data = hallmark::io::parse_group_file(in);
  return PermGroup(data.degree, data.generators);
}

void print_witness(const hallmark::HallWitness& w) {
  std::cout << "Hall subgroup of order " << w.subgroup.order << ":\n";
  if (w.subgroup.generators.empty()) std::cout << "  witness gen ()\n";
  for (const auto& g : w.subgroup.generators)
    std::cout << "  witness gen " << g.to_cycles() << '\n';
}

int cmd_oracle(const std::string& group_file, const std::string& builtin,
               const std::string& pi_arg, const std::string& check) {
  EnumerationLimits limits = limits_from_env();
  PermGroup group = load_group(group_file, builtin);
  PrimeSet pi = hallmark::io::parse_prime_set(pi_arg);
  std::string label = builtin.empty() ? "group" : builtin;
  std::cout << label << ": degree " << group.degree() << ", order " << group.order()
            << ", pi = " << pi.to_string() << '\n';

  if (check == "E") {
    auto witness = hallmark::find_hall_subgroup(group, pi, limits);
    PrimeSet relevant = pi.intersect(hallmark::arith::prime_spectrum(group.order()));
    if (witness) {
      std::cout << "E: yes\n";
      print_witness(*witness);
    } else if (relevant.size() <= 2) {
      std::cout << "E: no  (exhaustive: no subgroup of order "
                << hallmark::arith::pi_part(group.order(), pi) << ")\n";
    } else {
      throw ScopeError("soluble search found no witness and |pi cap pi(G)| > 2 leaves "
                       "existence undecided");
    }
    return kExitOk;
  }

  auto res = hallmark::check_E_C_D(group, pi, limits);
  std::cout << "E: " << (res.E ? "yes" : "no");
  if (res.witness && res.witness->conjugacy_class_count)
    std::cout << "  (" << *res.witness->conjugacy_class_count
              << " conjugacy class(es) of Hall subgroups)";
  std::cout << '\n';
  if (check == "all" || check == "C")
    std::cout << "C: " << (res.C ? (*res.C ? "yes" : "no") : "undecided") << '\n';
  if (check == "all" || check == "D")
    std::cout << "D: " << (res.D ? (*res.D ? "yes" : "no") : "undecided") << '\n';
  if (res.E && res.witness) print_witness(*res.witness);
  return kExitOk;
}

int cmd_crosscheck(int max_pi, bool require_stretch, const std::string& out_path,
                   const std::string& golden_path) {
  EnumerationLimits limits = limits_from_env();
  auto report = hallmark::oracle::full_sweep(max_pi, require_stretch, limits);
  std::ostringstream header;
  header << "hallmark crosscheck corpus=" << (require_stretch ? "core+stretch" : "core")
         << " max_pi=" << max_pi;
  std::string text = report.file_text(header.str());

  if (!out_path.empty()) {
    std::ofstream out(out_path);
    if (!out) throw FormatError("cannot write report file: " + out_path);
    out << text;
  }
  std::cout << report.console_text();
  std::cout << "rows: " << report.rows.size()
            << ", disagreements: " << report.disagreements()
            << ", skipped: " << report.skipped() << '\n';

  if (!golden_path.empty()) {
    std::ifstream in(golden_path);
    if (!in) throw FormatError("cannot open golden file: " + golden_path);
    std::stringstream buf;
    buf << in.rdbuf();
    if (buf.str() != text) {
      std::cout << "golden mismatch against " << golden_path << '\n';
      return kExitDisagreement;
    }
    std::cout << "golden match: " << golden_path << '\n';
  }
  if (report.disagreements() > 0) {
    for (const auto& r : report.rows) {
      if (r.agreement == "no")
        std::cout << "disagreement: " << r.group << ' ' << r.pi << ' ' << r.property
                  << " oracle=" << r.oracle << " expected=" << r.expected << '\n';
    }
    return kExitDisagreement;
  }
  return kExitOk;
}

int cmd_arith_order(Int q, Int r) {
  std::cout << hallmark::arith::mult_order(q, r) << '\n';
  return kExitOk;
}

int cmd_arith_lemma21(const std::string& sign, Int bound) {
  auto s = sign == "plus" ? hallmark::arith::Sign::Plus : hallmark::arith::Sign::Minus;
  auto sols = hallmark::arith::solve_lemma21(s, bound);
  bool conforms = true;
  for (const auto& sol : sols) {
    std::cout << "p=" << sol.p << " k=" << sol.k << " n=" << sol.n << '\n';
    bool allowed = sol.k == 1 || (sign == "minus" && sol.p == 3 && sol.k == 2 && sol.n == 3);
    if (!allowed) conforms = false;
  }
  std::cout << (conforms ? "conforms to the p^k -+ 1 = 2^n classification"
                         : "UNEXPECTED solution outside the classification")
            << '\n';
  return kExitOk;
}

int cmd_arith_lemma22(const std::string& sign, Int bound) {
  auto s = sign == "plus" ? hallmark::arith::Sign::Plus : hallmark::arith::Sign::Minus;
  for (const auto& sol : hallmark::arith::solve_lemma22(s, bound))
    std::cout << "k=" << sol.k << " n=" << sol.n << '\n';
  return kExitOk;
}

int cmd_arith_mersenne(Int p) {
  auto f = hallmark::arith::mersenne_exponent(p);
  if (f)
    std::cout << "f=" << *f << '\n';
  else
    std::cout << "not a Mersenne prime" << '\n';
  return kExitOk;
}

int cmd_simple(const std::string& group_token, const std::string& pi_arg) {
  auto id = hallmark::catalog::SimpleGroupId::parse(group_token);
  PrimeSet pi = hallmark::io::parse_prime_set(pi_arg);
  auto v = hallmark::classifier::simple_Ustar_iff(id, pi);
  std::cout << hallmark::classifier::to_string(v.value) << '\n';
  for (const auto& j : v.because) std::cout << "  [" << j.rule << "] " << j.detail << '\n';
  return kExitOk;
}

int cmd_export(const std::string& builtin, const std::string& out_path) {
  const auto* entry = hallmark::oracle::find_corpus_entry(builtin);
  if (!entry) throw FormatError("unknown builtin group: " + builtin);
  PermGroup group = entry->construct();
  std::string text = hallmark::io::export_group_file(group.degree(), group.generators());
  if (out_path.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(out_path);
    if (!out) throw FormatError("cannot write group file: " + out_path);
    out << text;
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"hallmark: Hall-subgroup existence classes, brute-force verified"};
  app.require_subcommand(1);

  std::string factors_arg, pi_arg, format = "text";
  auto* classify = app.add_subcommand("classify", "classify a composition-factor list");
  classify->add_option("--factors", factors_arg, "factor list, e.g. C2,PSL(2,7)")->required();
  classify->add_option("--pi", pi_arg, "prime set, e.g. 2,3")->required();
  classify->add_option("--format", format, "text or json")
      ->check(CLI::IsMember({"text", "json"}));

  std::string group_file, builtin, check = "all";
  auto* orc = app.add_subcommand("oracle", "brute-force Hall checks on a group");
  orc->add_option("--group-file", group_file, "group file path");
  orc->add_option("--builtin", builtin, "builtin corpus group, e.g. PSL(2,7)");
  orc->add_option("--pi", pi_arg, "prime set")->required();
  orc->add_option("--check", check, "E, C, D or all")
      ->check(CLI::IsMember({"E", "C", "D", "all"}));

  int max_pi = 2;
  bool require_stretch = false;
  std::string out_path, golden_path;
  auto* cross = app.add_subcommand("crosscheck", "sweep the corpus against facts and theory");
  cross->add_option("--max-pi", max_pi, "largest |pi| to sweep (default 2)");
  cross->add_flag("--require-stretch", require_stretch, "include the stretch tier");
  cross->add_option("--out", out_path, "write the deterministic report here");
  cross->add_option("--golden", golden_path, "compare the report against this golden file");

  auto* ar = app.add_subcommand("arith", "exact arithmetic utilities");
  ar->require_subcommand(1);
  Int q_opt = 0, r_opt = 0, bound = 0, p_opt = 0;
  std::string sign = "plus";
  auto* ord = ar->add_subcommand("order", "multiplicative order e(q, r)");
  ord->add_option("--q", q_opt)->required();
  ord->add_option("--r", r_opt)->required();
  auto* l21 = ar->add_subcommand("lemma21", "solutions of p^k -+ 1 = 2^n");
  l21->add_option("--sign", sign)->check(CLI::IsMember({"plus", "minus"}));
  l21->add_option("--bound", bound)->required();
  auto* l22 = ar->add_subcommand("lemma22", "solutions of k^2 -+ k + 1 = 3^n");
  l22->add_option("--sign", sign)->check(CLI::IsMember({"plus", "minus"}));
  l22->add_option("--bound", bound)->required();
  auto* mer = ar->add_subcommand("mersenne", "Mersenne exponent of a prime");
  mer->add_option("--p", p_opt)->required();

  std::string group_token;
  auto* simple = app.add_subcommand("simple", "U* characterization for one simple group");
  simple->add_option("--group", group_token, "simple group, e.g. PSU(3,4)")->required();
  simple->add_option("--pi", pi_arg, "prime set, proper subset of pi(S)-{2}")->required();

  std::string export_out;
  auto* exp = app.add_subcommand("export", "write a builtin group in group-file format");
  exp->add_option("--builtin", builtin, "builtin corpus group")->required();
  exp->add_option("--out", export_out, "output path (stdout when omitted)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help and friends
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (classify->parsed()) return cmd_classify(factors_arg, pi_arg, format);
    if (orc->parsed()) {
      if (group_file.empty() == builtin.empty())
        throw FormatError("oracle: give exactly one of --group-file / --builtin");
      return cmd_oracle(group_file, builtin, pi_arg, check);
    }
    if (cross->parsed())
      return cmd_crosscheck(max_pi, require_stretch, out_path, golden_path);
    if (ar->parsed()) {
      if (ord->parsed()) return cmd_arith_order(q_opt, r_opt);
      if (l21->parsed()) return cmd_arith_lemma21(sign, bound);
      if (l22->parsed()) return cmd_arith_lemma22(sign, bound);
      if (mer->parsed()) return cmd_arith_mersenne(p_opt);
    }
    if (simple->parsed()) return cmd_simple(group_token, pi_arg);
    if (exp->parsed()) return cmd_export(builtin, export_out);
  } catch (const ScopeError& e) {
    std::cerr << "scope error: " << e.what() << '\n';
    return kExitScope;
  } catch (const ResourceError& e) {
    std::cerr << "resource error: " << e.what() << '\n';
    return kExitResource;
  } catch (const FormatError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
