#include <cstdint>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "wmac/factored.hpp"
#include "wmac/fock.hpp"
#include "wmac/macdonald.hpp"
#include "wmac/partition.hpp"
#include "wmac/shuffle.hpp"
#include "wmac/symfunc.hpp"
#include "wmac/verify.hpp"

using namespace wmac;
using nlohmann::json;

namespace {

struct Globals {
  std::uint64_t seed = 1;
  bool no_cache = false;
  std::string out = "json";
};

// Thrown for input that parses but makes no sense; maps to exit code 2.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

CacheOptions cache_of(const Globals& g) { return g.no_cache ? CacheOptions{} : CacheOptions::from_env(); }

std::vector<int> parse_ints(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    try {
      out.push_back(std::stoi(item));
    } catch (const std::exception&) {
      throw UsageError("not an integer list: " + text);
    }
  }
  return out;
}

Partition partition_arg(const std::string& text) {
  Partition lam = parse_ints(text);
  if (!is_partition(lam)) throw UsageError("not a partition: " + text);
  return lam;
}

ShuffleElement element_arg(const std::string& op, int p, int n, int ell) {
  if (op == "F") return F_pn(p, n, ell);
  if (op == "E") return E_pn(p, n, ell);
  if (op == "H") return H_pn(p, n, ell);
  throw UsageError("unknown element " + op);
}

std::string latex_row(const std::string& key, const std::string& value) { return key + " & " + value + " \\\\\n"; }

int emit_report(const VerifyReport& r, const Globals& g) {
  std::cout << (g.out == "latex" ? r.to_latex() : r.to_json() + "\n");
  return r.ok() ? 0 : 1;
}

int run_core_quotient(int ell, const std::string& part, const Globals& g) {
  Partition lam = partition_arg(part);
  CoreQuotient cq = core_quotient(lam, ell);
  if (g.out == "latex") {
    std::cout << "\\begin{tabular}{ll}\n"
              << latex_row("$\\lambda$", "$" + to_string(lam) + "$") << latex_row("core", "$" + to_string(cq.core) + "$")
              << latex_row("quotient", "$" + to_string(cq.quot) + "$") << "\\end{tabular}\n";
    return 0;
  }
  json j{{"ell", ell}, {"partition", to_string(lam)}, {"core", to_string(cq.core)}, {"charges", cq.charges},
         {"quotient", to_string(cq.quot)}};
  std::cout << j.dump(2) << "\n";
  return 0;
}

int run_hlambda(int ell, const std::string& part, const std::string& basis, const Globals& g) {
  Partition lam = partition_arg(part);
  Basis b;
  try {
    b = parse_basis(basis);
  } catch (const std::exception&) {
    throw UsageError("unknown basis " + basis);
  }
  SymFunc h = convert(wreath_macdonald(lam, ell, cache_of(g)), b);
  std::cout << (g.out == "latex" ? h.latex() + "\n" : to_json(h) + "\n");
  return 0;
}

int run_table(int ell, const std::string& core, int n, const Globals& g) {
  CoreVector c = parse_ints(core);
  if (c.empty()) c.assign(ell, 0);
  MacdonaldTable t = macdonald_table(enumerate_cell(c, n, ell), cache_of(g));
  if (g.out == "latex") {
    std::cout << "\\begin{tabular}{ll}\n";
    for (const auto& [lam, h] : t.polynomials) std::cout << latex_row("$" + to_string(lam) + "$", "$" + h.latex() + "$");
    std::cout << "\\end{tabular}\n";
  } else {
    std::cout << table_to_json(t) << "\n";
  }
  return 0;
}

int run_fock_act(int ell, const std::string& op, int p, int n, const std::string& state, int hw, const Globals& g) {
  ShuffleElement f = element_arg(op, p, n, ell);
  FockVector v = shuffle_action(f, basis_vector(partition_arg(state), ell, hw));
  if (g.out == "latex") {
    std::cout << "\\begin{tabular}{ll}\n";
    for (const auto& [lam, c] : v.terms) std::cout << latex_row("$" + to_string(lam) + "$", "$" + c.latex() + "$");
    std::cout << "\\end{tabular}\n";
  } else {
    std::cout << v.to_json() << "\n";
  }
  return 0;
}

int run_shuffle(int ell, const std::string& op, int p, int n, const Globals& g) {
  ShuffleElement f = element_arg(op, p, n, ell);
  CheckResult wheel = wheel_check(f), pole = pole_check(f);
  CheckResult diag = limit_conditions(f, LimitCheck::diagonal);
  json pairings = json::array();
  for (int pp = 0; pp < ell; ++pp)
    pairings.push_back({{"p", pp}, {"R", pairing_R(f, pp, n).str()}, {"Rstar", pairing_Rstar(f, pp, n).str()}});
  const bool ok = wheel.ok && pole.ok && diag.ok;
  if (g.out == "latex") {
    std::cout << "\\begin{tabular}{ll}\n"
              << latex_row("wheel", wheel.ok ? "pass" : "fail") << latex_row("pole", pole.ok ? "pass" : "fail")
              << latex_row("diagonal limits", diag.ok ? "pass" : "fail") << "\\end{tabular}\n";
  } else {
    json j{{"element", json::parse(to_json(f))},
           {"wheel", {{"ok", wheel.ok}, {"witness", wheel.witness}}},
           {"pole", {{"ok", pole.ok}, {"witness", pole.witness}}},
           {"diagonal_limits", {{"ok", diag.ok}, {"witness", diag.witness}}},
           {"pairings", pairings}};
    std::cout << j.dump(2) << "\n";
  }
  return ok ? 0 : 1;
}

int run_verify(const std::string& suite, int ell, int max_size, const std::string& core, int corrupt,
               const Globals& g) {
  if (suite == "combinatorics") return emit_report(verify_combinatorics(ell, max_size), g);
  if (suite == "shuffle") return emit_report(verify_shuffle(ell, max_size), g);
  if (suite == "fock") return emit_report(verify_fock(ell, max_size), g);
  if (suite == "main") {
    CoreVector c = parse_ints(core);
    if (c.empty()) c.assign(ell, 0);
    MainTheoremOptions o;
    o.cache = cache_of(g);
    o.corrupt_color = corrupt;
    return emit_report(verify_main_theorem(ell, c, max_size, o), g);
  }
  throw UsageError("unknown suite " + suite);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Wreath Macdonald polynomials, shuffle algebra and Fock space checks"};
  app.require_subcommand(1);
  Globals g;
  app.add_option("--seed", g.seed, "Seed for randomized specializations");
  app.add_flag("--no-cache", g.no_cache, "Do not read or write the table cache");
  app.add_option("--out", g.out, "Output format")->check(CLI::IsMember({"json", "latex"}));

  int ell = 3, p = 0, n = 1, hw = 0, max_size = 9, corrupt = -1;
  std::string part, basis = "s", core, op = "F", state, suite = "combinatorics";

  auto* cq = app.add_subcommand("core-quotient", "Core, charges and quotient of a partition");
  cq->add_option("--ell", ell)->check(CLI::PositiveNumber);
  cq->add_option("--partition", part)->required();

  auto* hl = app.add_subcommand("hlambda", "Wreath Macdonald polynomial H_lambda");
  hl->add_option("--ell", ell)->check(CLI::PositiveNumber);
  hl->add_option("--partition", part)->required();
  hl->add_option("--basis", basis, "p, h, e, s, hhat or ehat");

  auto* tb = app.add_subcommand("table", "All H_lambda of one cell");
  tb->add_option("--ell", ell)->check(CLI::PositiveNumber);
  tb->add_option("--core", core, "Charge vector, comma separated");
  tb->add_option("--n", n, "Quotient size")->check(CLI::NonNegativeNumber);

  auto* fa = app.add_subcommand("fock-act", "Act by a shuffle element on a dual basis vector");
  fa->add_option("--ell", ell)->check(CLI::Range(3, 64));
  fa->add_option("--op", op)->check(CLI::IsMember({"F", "E", "H"}));
  fa->add_option("--p", p)->check(CLI::NonNegativeNumber);
  fa->add_option("--n", n)->check(CLI::NonNegativeNumber);
  fa->add_option("--state", state)->required();
  fa->add_option("--highest-weight", hw)->check(CLI::NonNegativeNumber);

  auto* sh = app.add_subcommand("shuffle", "Build a shuffle element and run its checks");
  sh->add_option("--ell", ell)->check(CLI::Range(3, 64));
  sh->add_option("--op", op)->check(CLI::IsMember({"F", "E", "H"}));
  sh->add_option("--p", p)->check(CLI::NonNegativeNumber);
  sh->add_option("--n", n)->check(CLI::PositiveNumber);

  auto* vf = app.add_subcommand("verify", "Run a verification suite");
  vf->add_option("--suite", suite)->check(CLI::IsMember({"combinatorics", "shuffle", "fock", "main"}));
  vf->add_option("--ell", ell)->check(CLI::PositiveNumber);
  vf->add_option("--max-size", max_size)->check(CLI::NonNegativeNumber);
  vf->add_option("--core", core, "Charge vector for the main suite");
  vf->add_option("--corrupt-color", corrupt, "Scale c_{p,1} by 2 for this color");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  seed_engine(g.seed);
  try {
    if (*cq) return run_core_quotient(ell, part, g);
    if (*hl) return run_hlambda(ell, part, basis, g);
    if (*tb) return run_table(ell, core, n, g);
    if (*fa) return run_fock_act(ell, op, p, n, state, hw, g);
    if (*sh) return run_shuffle(ell, op, p, n, g);
    if (*vf) return run_verify(suite, ell, max_size, core, corrupt, g);
  } catch (const UsageError& e) {
    std::cerr << "usage: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
