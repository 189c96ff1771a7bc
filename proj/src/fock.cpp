#include "wmac/fock.hpp"

#include <algorithm>
#include <mutex>
#include <set>
#include <stdexcept>
#include <thread>

#include "json.hpp"

namespace wmac {

namespace {

int mod(int a, int m) { return ((a % m) + m) % m; }

void require_ell(int ell) {
  if (ell < 3) throw std::invalid_argument("Fock formulas require ell >= 3");
}

using Order = std::vector<Node>;

Order sorted_order(std::vector<Node> nodes, bool by_column) {
  std::sort(nodes.begin(), nodes.end(), [&](const Node& x, const Node& y) {
    return by_column ? std::make_pair(x.a, x.b) < std::make_pair(y.a, y.b)
                     : std::make_pair(x.b, x.a) < std::make_pair(y.b, y.a);
  });
  return nodes;
}

Order random_order(const Partition& lam, std::vector<Node> nodes) {
  auto& rng = engine_rng();
  Order out;
  Partition cur = lam;
  while (!nodes.empty()) {
    std::vector<std::size_t> ok;
    for (std::size_t k = 0; k < nodes.size(); ++k) {
      const Node& n = nodes[k];
      bool left = n.a == 1 || contains(cur, Node{n.a - 1, n.b});
      bool up = n.b == 1 || contains(cur, Node{n.a, n.b - 1});
      if (left && up) ok.push_back(k);
    }
    std::uniform_int_distribution<std::size_t> pick(0, ok.size() - 1);
    std::size_t k = ok[pick(rng)];
    out.push_back(nodes[k]);
    cur = add_node(cur, nodes[k]);
    nodes.erase(nodes.begin() + static_cast<long>(k));
  }
  return out;
}

// Corner product of e_i at an addable node; also the step factor of the dual action.
Scalar raising_factor(const Corners& cr, const Node& box) {
  const Scalar chi = box.character();
  const int c = box.content();
  Scalar num(1), den(1);
  for (const Node& o : cr.removable) {
    if (o.content() < c) num *= qq_pow(1) - qq_pow(-1) * o.character() / chi;
    else if (o.content() > c) num *= Scalar(1) - qq_pow(2) * chi / o.character();
  }
  for (const Node& in : cr.addable) {
    if (in.content() < c) den *= qq_pow(1) - qq_pow(1) * in.character() / chi;
    else if (in.content() > c) den *= Scalar(1) - chi / in.character();
  }
  return num / den;
}

Scalar step_factor(const Partition& nu, const Node& box, int ell) {
  return raising_factor(corners(nu, ell, box.color(ell)), box);
}

struct Evaluation {
  Scalar value;
  int u_degree = 0;
};

Evaluation evaluate_order(const ShuffleElement& f, const FactoredSum& expanded, const Partition& lam, const Order& order,
                          int p, bool symbolic) {
  const int ell = f.ell;
  const int n = f.num_vars();
  std::vector<int> used(ell, 0), vars, colors;
  Scalar corner(1);
  Partition nu = lam;
  for (const Node& box : order) {
    const int i = mod(box.content() + p, ell);
    if (used[i] >= f.degree[i]) throw std::invalid_argument("node colors do not match degree");
    vars.push_back(f.var(i, used[i]++));
    colors.push_back(i);
    corner *= step_factor(nu, box, ell);
    nu = add_node(nu, box);
  }
  FactoredSum mix(Scalar(1));
  for (std::size_t s = 0; s < order.size(); ++s)
    for (std::size_t s2 = s + 1; s2 < order.size(); ++s2)
      mix *= omega(colors[s2], colors[s], ell, LinForm::variable(vars[s2]), LinForm::variable(vars[s]));
  FactoredSum g = expanded * mix.pow(-1);
  for (std::size_t s = 0; s < order.size(); ++s) {
    const Scalar chi = order[s].character();
    LinForm value = symbolic ? LinForm::variable(n, chi) : LinForm::constant(chi);
    try {
      g = substitute(g, vars[s], value);
    } catch (const PoleSurvived&) {
      throw PoleSurvived("pole survived substitution");
    }
  }
  Evaluation out;
  if (!symbolic) {
    out.value = g.is_empty() ? Scalar(0) : corner * g.constant_value();
    return out;
  }
  std::map<int, Scalar> by_power;
  const LinForm u = LinForm::variable(n);
  for (const auto& [fac, c] : g.terms()) {
    int m = 0;
    for (const auto& [l, e] : fac) {
      if (!(l == u)) throw std::logic_error("symbolic evaluation left a non-monomial factor");
      m += e;
    }
    by_power[m] += c;
  }
  for (auto it = by_power.begin(); it != by_power.end();)
    it = it->second.is_zero() ? by_power.erase(it) : std::next(it);
  if (by_power.size() > 1) throw std::logic_error("matrix coefficient is not homogeneous in u");
  if (!by_power.empty()) {
    out.u_degree = by_power.begin()->first;
    out.value = corner * by_power.begin()->second;
  }
  return out;
}

Scalar coefficient_with(const ShuffleElement& f, const FactoredSum& expanded, const Partition& lam,
                        const Partition& mu, int p, bool symbolic, int* u_degree) {
  std::vector<Node> added = skew_nodes(mu, lam);
  if (static_cast<int>(added.size()) != f.num_vars()) throw std::invalid_argument("size mismatch");
  Evaluation first = evaluate_order(f, expanded, lam, sorted_order(added, true), p, symbolic);
  std::vector<Order> checks{sorted_order(added, false)};
  if (added.size() > 2) checks.push_back(random_order(lam, added));
  for (const Order& o : checks) {
    Evaluation other = evaluate_order(f, expanded, lam, o, p, symbolic);
    if (other.value != first.value || (symbolic && !first.value.is_zero() && other.u_degree != first.u_degree))
      throw std::logic_error("shuffle action depends on node order: " + to_string(lam) + " -> " + to_string(mu));
  }
  if (u_degree) *u_degree = first.u_degree;
  return first.value;
}

}  // namespace

void FockVector::add(const Partition& lam, const Scalar& c) {
  if (c.is_zero()) return;
  auto [it, fresh] = terms.emplace(lam, c);
  if (fresh) return;
  it->second += c;
  if (it->second.is_zero()) terms.erase(it);
}

std::string FockVector::to_json() const {
  nlohmann::json j;
  j["ell"] = ell;
  j["p"] = p;
  if (symbolic_u) j["u_degree"] = u_degree;
  nlohmann::json t = nlohmann::json::array();
  for (const auto& [lam, c] : terms) t.push_back({{"partition", to_string(lam)}, {"coefficient", c.str()}});
  j["terms"] = t;
  return j.dump(2);
}

FockVector basis_vector(const Partition& lam, int ell, int p) {
  require_ell(ell);
  FockVector v;
  v.ell = ell;
  v.p = mod(p, ell);
  v.terms.emplace(lam, Scalar(1));
  return v;
}

Scalar n_norm(const Partition& lam, int ell) {
  Scalar out(1);
  for (const Node& n : nodes(lam)) {
    if (hook(lam, n) % ell != 0) continue;
    const int a = arm(lam, n), l = leg(lam, n);
    out *= (Scalar(1) - Scalar::qt(a, -l - 1)) * (Scalar(1) - Scalar::qt(a + 1, -l));
  }
  return out;
}

CurrentAction e_action(const Partition& lam, int i, int ell, int p) {
  require_ell(ell);
  Corners cr = corners(lam, ell, mod(i - p, ell));
  CurrentAction out;
  for (const Node& box : cr.addable) out.push_back({box, box.character(), raising_factor(cr, box)});
  return out;
}

CurrentAction f_action(const Partition& mu, int i, int ell, int p) {
  require_ell(ell);
  const int col = mod(i - p, ell);
  CurrentAction out;
  for (const Node& box : corners(mu, ell, col).removable) {
    Partition lam = remove_node(mu, box);
    Corners cr = corners(lam, ell, col);
    const Scalar chi = box.character();
    const int c = box.content();
    Scalar num(1), den(1);
    for (const Node& in : cr.addable) {
      if (in.content() < c) num *= Scalar(1) - qq_pow(2) * in.character() / chi;
      else if (in.content() > c) num *= qq_pow(1) - qq_pow(-1) * chi / in.character();
    }
    for (const Node& o : cr.removable) {
      if (o.content() < c) den *= Scalar(1) - o.character() / chi;
      else if (o.content() > c) den *= qq_pow(1) - qq_pow(1) * chi / o.character();
    }
    out.push_back({box, chi, num / den});
  }
  return out;
}

std::vector<PsiFactor> psi_eigenvalue(const Partition& lam, int i, int ell, int p) {
  require_ell(ell);
  Corners cr = corners(lam, ell, mod(i - p, ell));
  std::vector<PsiFactor> out;
  for (const Node& in : cr.addable) out.push_back({qq_pow(-1), qq_pow(1) * in.character(), in.character()});
  for (const Node& o : cr.removable) out.push_back({qq_pow(1), qq_pow(-1) * o.character(), o.character()});
  return out;
}

Scalar psi_at(const std::vector<PsiFactor>& psi, const Scalar& z) {
  Scalar v(1);
  for (const PsiFactor& f : psi) v *= (f.num0 - f.num1 / z) / (Scalar(1) - f.den1 / z);
  return v;
}

Scalar psi_at_infinity(const std::vector<PsiFactor>& psi) {
  Scalar v(1);
  for (const PsiFactor& f : psi) v *= f.num0;
  return v;
}

Scalar psi_at_zero(const std::vector<PsiFactor>& psi) {
  Scalar v(1);
  for (const PsiFactor& f : psi) v *= f.num1 / f.den1;
  return v;
}

std::vector<Partition> colored_extensions(const Partition& lam, const DegreeVector& k, int ell, int p) {
  std::set<std::pair<Partition, DegreeVector>> level{{lam, k}};
  for (int step = 0; step < total(k); ++step) {
    std::set<std::pair<Partition, DegreeVector>> next;
    for (const auto& [nu, rest] : level)
      for (const Node& n : addable_nodes(nu)) {
        const int i = mod(n.content() + p, ell);
        if (rest[i] == 0) continue;
        DegreeVector r = rest;
        --r[i];
        next.emplace(add_node(nu, n), r);
      }
    level = std::move(next);
  }
  std::vector<Partition> out;
  for (const auto& [nu, rest] : level) out.push_back(nu);
  return out;
}

Scalar shuffle_coefficient(const ShuffleElement& f, const Partition& lam, const Partition& mu, int p, int* u_degree) {
  require_ell(f.ell);
  if (!contains(mu, lam)) return Scalar(0);
  return coefficient_with(f, f.expanded(), lam, mu, mod(p, f.ell), u_degree != nullptr, u_degree);
}

FockVector shuffle_action(const ShuffleElement& f, const FockVector& v) {
  require_ell(f.ell);
  if (f.ell != v.ell) throw std::invalid_argument("color count mismatch");
  FockVector out;
  out.ell = v.ell;
  out.p = v.p;
  out.symbolic_u = v.symbolic_u;
  out.u_degree = v.u_degree;
  const FactoredSum expanded = f.expanded();
  bool have_degree = false;
  for (const auto& [lam, c] : v.terms)
    for (const Partition& mu : colored_extensions(lam, f.degree, f.ell, v.p)) {
      int d = 0;
      Scalar x = coefficient_with(f, expanded, lam, mu, v.p, v.symbolic_u, &d);
      if (x.is_zero()) continue;
      if (v.symbolic_u) {
        if (have_degree && v.u_degree + d != out.u_degree) throw std::logic_error("mixed powers of u");
        out.u_degree = v.u_degree + d;
        have_degree = true;
      }
      out.add(mu, c * x);
    }
  return out;
}

SparseMatrix operator_columns(const ShuffleElement& f, const std::vector<Partition>& sources, int p) {
  require_ell(f.ell);
  p = mod(p, f.ell);
  const FactoredSum expanded = f.expanded();
  SparseMatrix out;
  for (const Partition& lam : sources) out[lam];
  std::mutex m;
  std::size_t next = 0;
  std::exception_ptr error;
  auto work = [&] {
    for (;;) {
      Partition lam;
      {
        std::lock_guard<std::mutex> lock(m);
        if (next >= sources.size() || error) return;
        lam = sources[next++];
      }
      try {
        std::map<Partition, Scalar> col;
        for (const Partition& mu : colored_extensions(lam, f.degree, f.ell, p)) {
          Scalar x = coefficient_with(f, expanded, lam, mu, p, false, nullptr);
          if (!x.is_zero()) col.emplace(mu, x);
        }
        std::lock_guard<std::mutex> lock(m);
        out[lam] = std::move(col);
      } catch (...) {
        std::lock_guard<std::mutex> lock(m);
        if (!error) error = std::current_exception();
      }
    }
  };
  const unsigned threads = std::max(1u, std::min<unsigned>(std::thread::hardware_concurrency(), 16));
  std::vector<std::thread> pool;
  for (unsigned k = 1; k < threads; ++k) pool.emplace_back(work);
  work();
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);
  return out;
}

SparseMatrix operator_matrix(const ShuffleElement& f, int max_size, int p) {
  const int k = f.num_vars();
  if (max_size < k) throw std::invalid_argument("truncation too small");
  std::vector<Partition> sources;
  for (int n = 0; n + k <= max_size; ++n)
    for (const Partition& lam : partitions_of(n)) sources.push_back(lam);
  return operator_columns(f, sources, p);
}

SparseMatrix compose(const SparseMatrix& a, const SparseMatrix& b) {
  SparseMatrix out;
  for (const auto& [lam, col] : b) {
    auto& dst = out[lam];
    for (const auto& [mid, x] : col) {
      auto it = a.find(mid);
      if (it == a.end()) throw std::out_of_range("composition leaves the truncation");
      for (const auto& [mu, y] : it->second) {
        Scalar& z = dst[mu];
        z += y * x;
      }
    }
    for (auto it = dst.begin(); it != dst.end();) it = it->second.is_zero() ? dst.erase(it) : std::next(it);
  }
  return out;
}

bool matrices_equal(const SparseMatrix& a, const SparseMatrix& b) {
  auto strip = [](const SparseMatrix& m) {
    SparseMatrix s;
    for (const auto& [lam, col] : m)
      if (!col.empty()) s.emplace(lam, col);
    return s;
  };
  return strip(a) == strip(b);
}

}  // namespace wmac
