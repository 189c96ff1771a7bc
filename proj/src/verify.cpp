#include "wmac/verify.hpp"

#include <chrono>
#include <future>
#include <map>
#include <random>
#include <sstream>
#include <stdexcept>

#include "json.hpp"
#include "wmac/fock.hpp"
#include "wmac/partition.hpp"
#include "wmac/shuffle.hpp"

namespace wmac {

using nlohmann::json;

namespace {

int mod(int a, int m) { return ((a % m) + m) % m; }

std::string latex_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '_' || c == '&' || c == '%' || c == '#' || c == '$' || c == '{' || c == '}') out += '\\';
    out += c;
  }
  return out;
}

class Timer {
 public:
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

void add(VerifyReport& report, const std::string& id, bool ok, const json& witness = json()) {
  report.checks.push_back({id, ok, ok ? std::string() : witness.dump()});
}

// Runs a check, turning an exception into a failure with its message.
template <class F>
void guarded(VerifyReport& report, const std::string& id, F&& body) {
  try {
    body();
  } catch (const std::exception& e) {
    add(report, id, false, json{{"exception", e.what()}});
  }
}

std::vector<Partition> partitions_up_to(int n) {
  std::vector<Partition> out;
  for (int k = 0; k <= n; ++k)
    for (const Partition& lam : partitions_of(k)) out.push_back(lam);
  return out;
}

json matrix_entries(const SparseMatrix& m) {
  json out = json::array();
  for (const auto& [lam, col] : m)
    for (const auto& [mu, c] : col) out.push_back({to_string(lam), to_string(mu), c.str()});
  return out;
}

// -------- main theorem --------

struct Operator {
  Basis kind;
  int p;
  int n;
  int source;  // quotient size of the source cell
  std::string id() const {
    std::ostringstream os;
    os << (kind == Basis::ehat ? "ehat" : "hhat") << "_" << n << "(" << p << "):" << source << "->" << source + n;
    return os.str();
  }
};

struct Constraint {
  Partition from;
  Partition to;
  Scalar ratio;  // r_to / r_from
  std::string op;
};

struct OperatorOutcome {
  bool support_ok = true;
  json witness;
  std::vector<Constraint> constraints;
};

OperatorOutcome compare_operator(const Operator& op, int ell, const MacdonaldTable& src, const MacdonaldTable& tgt,
                                 const MainTheoremOptions& options) {
  OperatorOutcome out;
  const auto& sm = src.cell.members;
  const auto& tm = tgt.cell.members;
  ScalarMatrix a = bosonic_multiplication_matrix(op.kind, op.n, op.p, src, tgt);
  ShuffleConstants k = constants(op.p, op.n, ell);
  Scalar c = op.kind == Basis::ehat ? k.c : k.c_star;
  if (op.kind == Basis::ehat && op.n == 1 && op.p == options.corrupt_color) c *= options.corrupt_factor;
  ShuffleElement g = op.kind == Basis::ehat ? E_pn(op.p, op.n, ell) : H_pn(op.p, op.n, ell);
  SparseMatrix b = operator_columns(g, sm, 0);

  json bad = json::array();
  for (const auto& [lam, col] : b)
    for (const auto& [mu, v] : col)
      if (tgt.cell.index_of(mu) < 0) bad.push_back({to_string(lam), to_string(mu), v.str(), "outside target cell"});
  for (std::size_t j = 0; j < sm.size(); ++j) {
    const auto& col = b[sm[j]];
    for (std::size_t i = 0; i < tm.size(); ++i) {
      auto it = col.find(tm[i]);
      const bool bz = it == col.end() || it->second.is_zero();
      const bool az = a[i][j].is_zero();
      if (az != bz) {
        bad.push_back({to_string(sm[j]), to_string(tm[i]), a[i][j].str(), bz ? "0" : it->second.str()});
        continue;
      }
      if (!az) out.constraints.push_back({sm[j], tm[i], c * it->second / a[i][j], op.id()});
    }
  }
  if (!bad.empty()) {
    out.support_ok = false;
    out.witness = {{"operator", op.id()}, {"constant", c.str()}, {"entries", bad},
                   {"columns", "source, target, bosonic, fermionic"}};
  }
  return out;
}

}  // namespace

bool VerifyReport::ok() const {
  for (const CheckRecord& c : checks)
    if (!c.ok) return false;
  return true;
}

std::string VerifyReport::to_json() const {
  json j;
  j["schema_version"] = 1;
  j["suite"] = suite;
  j["ell"] = ell;
  j["bound"] = bound;
  j["ok"] = ok();
  j["seconds"] = seconds;
  json arr = json::array();
  for (const CheckRecord& c : checks) {
    json e{{"id", c.id}, {"ok", c.ok}};
    if (!c.ok) e["witness"] = json::parse(c.witness);
    arr.push_back(e);
  }
  j["checks"] = arr;
  return j.dump(2);
}

std::string VerifyReport::to_latex() const {
  std::ostringstream os;
  os << "\\begin{tabular}{ll}\n\\hline\n";
  os << "\\multicolumn{2}{l}{" << latex_escape(suite) << ", $\\ell=" << ell << "$, bound " << bound << "} \\\\\n\\hline\n";
  for (const CheckRecord& c : checks) os << "\\texttt{" << latex_escape(c.id) << "} & " << (c.ok ? "pass" : "fail") << " \\\\\n";
  os << "\\hline\n\\end{tabular}\n";
  return os.str();
}

VerifyReport verify_main_theorem(int ell, const CoreVector& core, int max_n, const MainTheoremOptions& options) {
  Timer timer;
  VerifyReport report;
  report.suite = "main-theorem";
  report.ell = ell;
  report.bound = max_n;
  if (ell < 3) throw std::invalid_argument("main theorem check needs ell >= 3");

  std::vector<MacdonaldTable> tables;
  for (int n = 0; n <= max_n; ++n) tables.push_back(macdonald_table(enumerate_cell(core, n, ell), options.cache));

  std::vector<Operator> ops;
  for (int src = 0; src < max_n; ++src)
    for (int n = 1; src + n <= max_n; ++n)
      for (Basis kind : {Basis::ehat, Basis::hhat})
        for (int p = 0; p < ell; ++p) ops.push_back({kind, p, n, src});

  std::vector<std::future<OperatorOutcome>> jobs;
  for (const Operator& op : ops)
    jobs.push_back(std::async(std::launch::async, [&, op] {
      return compare_operator(op, ell, tables[op.source], tables[op.source + op.n], options);
    }));

  std::vector<Constraint> constraints;
  for (std::size_t k = 0; k < ops.size(); ++k) {
    OperatorOutcome o;
    try {
      o = jobs[k].get();
    } catch (const std::exception& e) {
      add(report, "support:" + ops[k].id(), false, json{{"operator", ops[k].id()}, {"exception", e.what()}});
      continue;
    }
    add(report, "support:" + ops[k].id(), o.support_ok, o.witness);
    for (Constraint& c : o.constraints) constraints.push_back(std::move(c));
  }

  // Constraints only go from smaller to larger cells, so one pass in source order suffices.
  std::stable_sort(constraints.begin(), constraints.end(),
                   [&](const Constraint& x, const Constraint& y) { return size(x.from) < size(y.from); });
  const Partition core_partition = core_from_charges(core);
  std::map<Partition, Scalar> r{{core_partition, Scalar(1)}};
  std::map<Partition, std::string> origin{{core_partition, "core"}};
  json conflicts = json::array();
  for (const Constraint& c : constraints) {
    auto from = r.find(c.from);
    if (from == r.end()) continue;
    Scalar value = from->second * c.ratio;
    auto [it, fresh] = r.emplace(c.to, value);
    if (fresh) {
      origin[c.to] = c.op;
    } else if (it->second != value) {
      conflicts.push_back({{"target", to_string(c.to)}, {"source", to_string(c.from)}, {"operator", c.op},
                           {"implied", value.str()}, {"assigned", it->second.str()}, {"assigned_by", origin[c.to]}});
    }
  }
  add(report, "cocycle", conflicts.empty(),
      json{{"ell", ell}, {"core", core}, {"max_n", max_n}, {"conflicts", conflicts}});

  json missing = json::array();
  for (const MacdonaldTable& t : tables)
    for (const Partition& lam : t.cell.members) {
      auto it = r.find(lam);
      if (it == r.end() || it->second.is_zero()) missing.push_back(to_string(lam));
    }
  add(report, "coverage", missing.empty(), json{{"ell", ell}, {"core", core}, {"max_n", max_n}, {"unreached", missing}});
  report.seconds = timer.seconds();
  return report;
}

VerifyReport verify_combinatorics(int ell, int max_size) {
  Timer timer;
  VerifyReport report;
  report.suite = "combinatorics";
  report.ell = ell;
  report.bound = max_size;
  json maya_bad = json::array(), cq_bad = json::array();
  for (const Partition& lam : partitions_up_to(max_size)) {
    if (from_maya(to_maya(lam)) != lam) maya_bad.push_back(to_string(lam));
    CoreQuotient cq = core_quotient(lam, ell);
    if (combine(cq.core, cq.quot, ell) != lam || !is_core(cq.core, ell) || core_from_charges(cq.charges) != cq.core ||
        size(cq.core) + ell * size(cq.quot) != size(lam))
      cq_bad.push_back({{"partition", to_string(lam)}, {"ell", ell}});
  }
  add(report, "maya-round-trip", maya_bad.empty(), json{{"partitions", maya_bad}});
  add(report, "core-quotient-round-trip", cq_bad.empty(), json{{"cases", cq_bad}});
  if (ell == 3) {
    CoreQuotient a = core_quotient({4, 4, 2}, 3);
    add(report, "anchor:(4,4,2)", a.core == Partition{3, 1}, json{{"core", to_string(a.core)}});
    CoreQuotient b = core_quotient({4, 4, 2, 2, 2, 2}, 3);
    add(report, "anchor:(4,4,2,2,2,2)",
        b.core == Partition{3, 1} && b.quot == MultiPartition{{}, {1}, {2, 1}},
        json{{"core", to_string(b.core)}, {"quot", to_string(b.quot)}});
  }
  report.seconds = timer.seconds();
  return report;
}

VerifyReport verify_shuffle(int ell, int max_n) {
  Timer timer;
  VerifyReport report;
  report.suite = "shuffle";
  report.ell = ell;
  report.bound = max_n;
  for (int n = 1; n <= max_n; ++n)
    for (int p = 0; p < ell; ++p) {
      const std::string tag = "(" + std::to_string(p) + "," + std::to_string(n) + ")";
      std::vector<std::pair<std::string, ShuffleElement>> elems{
          {"F" + tag, F_pn(p, n, ell)}, {"E" + tag, E_pn(p, n, ell)}, {"H" + tag, H_pn(p, n, ell)}};
      for (const auto& [name, f] : elems) {
        guarded(report, "wheel:" + name, [&] {
          CheckResult w = wheel_check(f);
          add(report, "wheel:" + name, w.ok, json{{"element", name}, {"detail", w.witness}});
        });
        guarded(report, "pole:" + name, [&] {
          CheckResult w = pole_check(f);
          add(report, "pole:" + name, w.ok, json{{"element", name}, {"detail", w.witness}});
        });
        guarded(report, "limits-diagonal:" + name, [&] {
          CheckResult w = limit_conditions(f, LimitCheck::diagonal);
          add(report, "limits-diagonal:" + name, w.ok, json{{"element", name}, {"detail", w.witness}});
        });
        guarded(report, "limits-s0:" + name, [&] {
          CheckResult w = limit_conditions(f, LimitCheck::s0);
          add(report, "limits-s0:" + name, w.ok, json{{"element", name}, {"detail", w.witness}});
        });
      }
    }

  std::mt19937_64 rng(engine_rng()());
  auto random_element = [&] {
    std::uniform_int_distribution<int> color(0, ell - 1), power(-1, 1), coef(1, 5);
    DegreeVector k(ell, 0);
    k[color(rng)] = 1;
    FactoredSum f = FactoredSum::variable(0, power(rng)).scaled(Scalar(coef(rng)));
    if (power(rng) == 0) f += FactoredSum(Scalar(coef(rng)));
    return ShuffleElement{ell, k, f, false};
  };
  json assoc_bad = json::array();
  for (int trial = 0; trial < 20; ++trial) {
    ShuffleElement a = random_element(), b = random_element(), c = random_element();
    ShuffleElement left = shuffle_product(shuffle_product(a, b), c);
    ShuffleElement right = shuffle_product(a, shuffle_product(b, c));
    if (!is_zero(left.expanded() - right.expanded()))
      assoc_bad.push_back({{"a", json::parse(to_json(a))}, {"b", json::parse(to_json(b))}, {"c", json::parse(to_json(c))}});
  }
  add(report, "associativity", assoc_bad.empty(), json{{"triples", assoc_bad}});

  for (int n = 1; n <= max_n; ++n)
    for (int p = 0; p < ell; ++p)
      for (int pp = 0; pp < ell; ++pp) {
        const std::string tag = "(" + std::to_string(p) + "," + std::to_string(pp) + "," + std::to_string(n) + ")";
        guarded(report, "pairing:" + tag, [&] {
          ShuffleElement f = F_pn(pp, n, ell);
          Scalar got = pairing_R(f, p, n), want = dual_currents_closed_form(p, pp, n, ell);
          Scalar got_star = pairing_Rstar(f, p, n), want_star = dual_currents_closed_form_star(p, pp, n, ell);
          add(report, "pairing:" + tag, got == want && got_star == want_star,
              json{{"p", p}, {"pp", pp}, {"n", n}, {"R", got.str()}, {"closed_form", want.str()},
                   {"Rstar", got_star.str()}, {"closed_form_star", want_star.str()}});
        });
      }
  if (max_n >= 2)
    for (int p = 0; p < ell; ++p)
      for (int a = 0; a < ell; ++a)
        for (int b = 0; b < ell; ++b) {
          const std::string tag = "(" + std::to_string(p) + "," + std::to_string(a) + "," + std::to_string(b) + ")";
          guarded(report, "group-like:" + tag, [&] {
            ShuffleElement f1 = F_pn(a, 1, ell), f2 = F_pn(b, 1, ell);
            ShuffleElement prod = shuffle_product(f1, f2);
            Scalar lhs = pairing_R(prod, p, 2), rhs = pairing_R(f1, p, 1) * pairing_R(f2, p, 1);
            Scalar lhs_star = pairing_Rstar(prod, p, 2), rhs_star = pairing_Rstar(f1, p, 1) * pairing_Rstar(f2, p, 1);
            add(report, "group-like:" + tag, lhs == rhs && lhs_star == rhs_star,
                json{{"p", p}, {"a", a}, {"b", b}, {"product", lhs.str()}, {"factors", rhs.str()},
                     {"product_star", lhs_star.str()}, {"factors_star", rhs_star.str()}});
          });
        }
  report.seconds = timer.seconds();
  return report;
}

namespace {

bool has_adjacent_pair(const std::vector<Node>& added, int p, int ell, bool horizontal) {
  return horizontal ? has_horizontal_pair(added, p, ell) : has_vertical_pair(added, p, ell);
}

// Independent scan: a (p+1)-node immediately left of, or directly above, a p-node.
bool scan_adjacent_pair(const std::vector<Node>& added, int p, int ell, bool horizontal) {
  for (const Node& x : added) {
    if (mod(x.content(), ell) != mod(p, ell)) continue;
    for (const Node& y : added) {
      if (mod(y.content(), ell) != mod(p + 1, ell)) continue;
      if (horizontal && y.b == x.b && y.a + 1 == x.a) return true;
      if (!horizontal && y.a == x.a && y.b == x.b + 1) return true;
    }
  }
  return false;
}

}  // namespace

VerifyReport verify_fock(int ell, int max_size) {
  Timer timer;
  VerifyReport report;
  report.suite = "fock";
  report.ell = ell;
  report.bound = max_size;

  // Order independence is asserted inside every evaluation; a mismatch throws.
  guarded(report, "order-independence", [&] {
    DegreeVector all(ell, 1);
    for (const Partition& lam : partitions_up_to(std::max(0, max_size - ell)))
      shuffle_action(constant_element(ell, all, Scalar(1)), basis_vector(lam, ell));
    add(report, "order-independence", true);
  });

  for (int n = 1; n <= 2; ++n)
    for (int p = 0; p < ell; ++p)
      for (bool horizontal : {true, false}) {
        const std::string id = std::string(horizontal ? "adjacency:E(" : "adjacency:H(") + std::to_string(p) + "," +
                               std::to_string(n) + ")";
        guarded(report, id, [&] {
          ShuffleElement g = horizontal ? E_pn(p, n, ell) : H_pn(p, n, ell);
          const int room = std::max(0, max_size - n * ell);
          SparseMatrix m = operator_columns(g, partitions_up_to(room));
          json bad = json::array();
          int nonzero = 0;
          for (const auto& [lam, col] : m)
            for (const auto& [mu, c] : col) {
              ++nonzero;
              std::vector<Node> added = skew_nodes(mu, lam);
              if (scan_adjacent_pair(added, p, ell, horizontal) || has_adjacent_pair(added, p, ell, horizontal))
                bad.push_back({to_string(lam), to_string(mu), c.str()});
            }
          add(report, id, bad.empty() && nonzero > 0, json{{"p", p}, {"n", n}, {"entries", bad}, {"nonzero", nonzero}});
        });
      }

  guarded(report, "commutativity", [&] {
    std::vector<std::pair<std::string, ShuffleElement>> fs;
    for (int p = 0; p < ell; ++p) fs.push_back({"F(" + std::to_string(p) + ",1)", F_pn(p, 1, ell)});
    if (max_size >= 3 * ell) fs.push_back({"F(0,2)", F_pn(0, 2, ell)});
    json bad = json::array();
    std::vector<std::future<SparseMatrix>> mats;
    for (const auto& [name, f] : fs)
      mats.push_back(std::async(std::launch::async, [&, f = f] { return operator_matrix(f, max_size); }));
    std::vector<SparseMatrix> full;
    for (auto& m : mats) full.push_back(m.get());
    for (std::size_t a = 0; a < fs.size(); ++a)
      for (std::size_t b = a + 1; b < fs.size(); ++b) {
        const int room = max_size - fs[a].second.num_vars() - fs[b].second.num_vars();
        if (room < 0) continue;
        std::vector<Partition> sources = partitions_up_to(room);
        SparseMatrix ab = compose(full[a], operator_columns(fs[b].second, sources));
        SparseMatrix ba = compose(full[b], operator_columns(fs[a].second, sources));
        if (!matrices_equal(ab, ba))
          bad.push_back({{"pair", fs[a].first + "," + fs[b].first}, {"ab", matrix_entries(ab)}, {"ba", matrix_entries(ba)}});
      }
    add(report, "commutativity", bad.empty(), json{{"max_size", max_size}, {"pairs", bad}});
  });
  report.seconds = timer.seconds();
  return report;
}

}  // namespace wmac
