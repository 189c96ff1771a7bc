#include "wmac/shuffle.hpp"

#include <algorithm>
#include <atomic>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace wmac {

namespace {

std::atomic<int> g_guard{8};

int mod(int a, int m) { return ((a % m) + m) % m; }

void require_ell(int ell) {
  if (ell < 3) throw std::invalid_argument("shuffle formulas require ell >= 3");
}

Scalar qq_diff() { return qq_pow(1) - qq_pow(-1); }

// Numerator of omega_{i,j}(a/b), or nothing when omega is 1.
bool omega_numerator(int i, int j, int ell, const LinForm& a, const LinForm& b, LinForm* num) {
  const int d = mod(j - i, ell);
  if (d == 0) {
    *num = a - b.scaled(qq_pow(-2));
  } else if (d == 1) {
    *num = a.scaled(dd_pow(-1)) - b.scaled(qq_pow(1));
  } else if (d == ell - 1) {
    *num = a - b.scaled(qq_pow(1) * dd_pow(-1));
  } else {
    return false;
  }
  return true;
}

struct TermBuilder {
  int ell;
  Scalar c{1};
  std::vector<std::pair<LinForm, int>> factors;

  void add(const LinForm& f, int m) { factors.emplace_back(f, m); }
  // omega_{i,j}(a/b)^e
  void omega(int i, int j, const LinForm& a, const LinForm& b, int e = 1) {
    LinForm num;
    if (!omega_numerator(i, j, ell, a, b, &num)) return;
    add(num, e);
    add(a - b, -e);
  }
  FactoredSum done() const {
    FactoredSum f;
    f.add_term(c, factors);
    return f;
  }
};

void check_guard(int n) {
  if (n > shuffle_guard()) throw std::length_error("degree guard exceeded");
}

Rational factorial(int n) {
  Rational r = 1;
  for (int k = 2; k <= n; ++k) r *= k;
  return r;
}

// All color-preserving permutations as variable maps.
std::vector<std::vector<int>> color_permutations(const ShuffleElement& f) {
  std::vector<std::vector<int>> out{std::vector<int>(f.num_vars())};
  std::iota(out[0].begin(), out[0].end(), 0);
  for (int i = 0; i < f.ell; ++i) {
    const int k = f.degree[i];
    if (k < 2) continue;
    std::vector<int> perm(k);
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<std::vector<int>> next;
    do {
      for (const auto& m : out) {
        std::vector<int> n = m;
        for (int r = 0; r < k; ++r) n[f.var(i, r)] = m[f.var(i, perm[r])];
        next.push_back(std::move(n));
      }
    } while (std::next_permutation(perm.begin(), perm.end()));
    out = std::move(next);
  }
  return out;
}

bool is_diagonal(const DegreeVector& k) {
  return std::all_of(k.begin(), k.end(), [&](int x) { return x == k[0]; });
}

bool leq(const DegreeVector& a, const DegreeVector& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

FactoredSum pole_checked_substitute(const FactoredSum& f, int v, const LinForm& value) {
  try {
    return substitute(f, v, value);
  } catch (const PoleSurvived&) {
    throw PoleSurvived("specialization hits surviving pole");
  }
}

// Variable of color c mod ell for each point of (a;b], in order.
std::vector<std::vector<int>> part_variables(const ShuffleElement& f, const IntervalPartition& l) {
  if (l.degree(f.ell) != f.degree) throw std::invalid_argument("interval partition does not match degree");
  std::vector<int> used(f.ell, 0);
  std::vector<std::vector<int>> out;
  for (const Interval& part : l.parts) {
    std::vector<int> vars;
    for (int c = part.a + 1; c <= part.b; ++c) {
      const int i = mod(c, f.ell);
      vars.push_back(f.var(i, used[i]++));
    }
    out.push_back(std::move(vars));
  }
  return out;
}

FactoredSum phi_impl(const ShuffleElement& f, const IntervalPartition& l, bool dual) {
  auto vars = part_variables(f, l);
  const int n = f.num_vars();
  FactoredSum g = f.expanded();
  for (std::size_t u = 0; u < l.parts.size(); ++u) {
    const Interval& part = l.parts[u];
    for (int c = part.a + 1; c <= part.b; ++c) {
      Scalar coef = dual ? t_pow(c) : q_pow(-c);
      g = pole_checked_substitute(g, vars[u][c - part.a - 1], LinForm::variable(n + static_cast<int>(u), coef));
    }
  }
  return g;
}

void require_even(const IntervalPartition& l, int ell) {
  if (!l.even(ell)) throw std::invalid_argument("interval partition is not even");
}

// Mixing product of long evaluations along one part, x_c -> z^c.
Scalar long_omega_product(int a, int b, int ell, bool dual) {
  Scalar prod(1);
  for (int c = a + 1; c <= b; ++c)
    for (int d = c + 1; d <= b; ++d)
      prod *= dual ? omega_value(mod(d, ell), mod(c, ell), ell, t_pow(d - c))
                   : omega_value(mod(c, ell), mod(d, ell), ell, q_pow(d - c));
  return prod;
}

}  // namespace

int total(const DegreeVector& k) { return std::accumulate(k.begin(), k.end(), 0); }

DegreeVector interval_degree(int a, int b, int ell) {
  DegreeVector k(ell, 0);
  for (int c = a + 1; c <= b; ++c) ++k[mod(c, ell)];
  return k;
}

DegreeVector diagonal_degree(int k, int ell) { return DegreeVector(ell, k); }

int shuffle_guard() { return g_guard.load(); }
void set_shuffle_guard(int n) { g_guard = n; }

int ShuffleElement::var(int color, int r) const {
  int off = 0;
  for (int i = 0; i < color; ++i) off += degree[i];
  return off + r;
}

int ShuffleElement::color_of(int v) const {
  for (int i = 0; i < ell; ++i) {
    if (v < degree[i]) return i;
    v -= degree[i];
  }
  throw std::out_of_range("variable index");
}

FactoredSum ShuffleElement::expanded() const {
  if (!symmetrize) return base;
  check_guard(num_vars());
  FactoredSum out;
  for (const auto& m : color_permutations(*this)) out += base.renamed(m);
  return out;
}

ShuffleElement constant_element(int ell, const DegreeVector& degree, const Scalar& c) {
  require_ell(ell);
  if (static_cast<int>(degree.size()) != ell) throw std::invalid_argument("degree vector length");
  return ShuffleElement{ell, degree, FactoredSum(c), false};
}

FactoredSum omega(int i, int j, int ell, const LinForm& a, const LinForm& b) {
  require_ell(ell);
  TermBuilder t{ell};
  t.omega(i, j, a, b);
  return t.done();
}

Scalar omega_value(int i, int j, int ell, const Scalar& z) {
  require_ell(ell);
  LinForm num;
  const LinForm a = LinForm::constant(z), b = LinForm::constant(Scalar(1));
  if (!omega_numerator(i, j, ell, a, b, &num)) return Scalar(1);
  return num.constant_term() / (z - Scalar(1));
}

ShuffleElement shuffle_product(const ShuffleElement& f, const ShuffleElement& g) {
  if (f.ell != g.ell) throw std::invalid_argument("color count mismatch");
  const int ell = f.ell;
  DegreeVector k(ell);
  for (int i = 0; i < ell; ++i) k[i] = f.degree[i] + g.degree[i];
  check_guard(total(k));
  ShuffleElement out{ell, k, FactoredSum(), true};
  std::vector<int> mf(f.num_vars()), mg(g.num_vars());
  for (int i = 0; i < ell; ++i) {
    for (int r = 0; r < f.degree[i]; ++r) mf[f.var(i, r)] = out.var(i, r);
    for (int s = 0; s < g.degree[i]; ++s) mg[g.var(i, s)] = out.var(i, f.degree[i] + s);
  }
  TermBuilder t{ell};
  for (int i = 0; i < ell; ++i)
    for (int j = 0; j < ell; ++j)
      for (int r = 0; r < f.degree[i]; ++r)
        for (int s = 0; s < g.degree[j]; ++s)
          t.omega(i, j, LinForm::variable(out.var(i, r)), LinForm::variable(out.var(j, f.degree[j] + s)));
  Rational norm = 1;
  for (int i = 0; i < ell; ++i) {
    if (!f.symmetrize) norm /= factorial(f.degree[i]);
    if (!g.symmetrize) norm /= factorial(g.degree[i]);
  }
  out.base = (f.base.renamed(mf) * g.base.renamed(mg) * t.done()).scaled(Scalar(norm));
  return out;
}

Scalar F_pn_prefactor(int n, int ell) {
  Scalar c = qq_pow(ell * n * n - n) * qq_diff().pow(ell * n) * dd_pow(-ell * n * (n + 1) / 2);
  return n % 2 == 0 ? c : -c;
}

ShuffleElement F_prime_pn(int p, int n, int ell) {
  require_ell(ell);
  p = mod(p, ell);
  ShuffleElement f{ell, diagonal_degree(n, ell), FactoredSum(), false};
  TermBuilder t{ell};
  auto x = [&](int i, int r) { return LinForm::variable(f.var(mod(i, ell), r)); };
  for (int r = 0; r < n; ++r) {
    t.add(x(0, r), 1);
    t.add(x(p, r), -1);
  }
  for (int i = 0; i < ell; ++i) {
    for (int r = 0; r < n; ++r) {
      t.add(x(i, r), 1);
      for (int rr = 0; rr < n; ++rr) {
        if (rr != r) t.add(x(i, r) - x(i, rr).scaled(qq_pow(-2)), 1);
        t.add(x(i, r) - x(i + 1, rr), -1);
      }
    }
  }
  f.base = t.done();
  return f;
}

ShuffleElement F_pn(int p, int n, int ell) {
  ShuffleElement f = F_prime_pn(p, n, ell);
  f.base = f.base.scaled(F_pn_prefactor(n, ell));
  return f;
}

namespace {

// E when dual is false, H otherwise.
ShuffleElement bottom_element(int p, int n, int ell, bool dual) {
  require_ell(ell);
  p = mod(p, ell);
  const int p1 = mod(p + 1, ell);
  ShuffleElement f{ell, diagonal_degree(n, ell), FactoredSum(), n > 0};
  if (n > 0) check_guard(f.num_vars());
  auto x = [&](int i, int r) { return LinForm::variable(f.var(mod(i, ell), r)); };
  TermBuilder t{ell};
  t.c = qq_diff().pow(n * (ell - 1)) * Scalar(Rational(1) / factorial(n));
  for (int i = 0; i < ell; ++i)
    for (int j = 0; j < ell; ++j)
      for (int r = 0; r < n; ++r)
        for (int s = r + 1; s < n; ++s) t.omega(i, j, x(i, s), x(j, r));
  for (int r = 0; r < n; ++r)
    for (int s = r; s < n; ++s) {
      if (!dual) t.omega(p1, p, x(p1, r), x(p, s));
      else t.omega(p, p1, x(p, r), x(p1, s));
      if (s == r) continue;
      if (!dual) {
        t.omega(p, p1, x(p, s), x(p1, r), -1);
        t.omega(p1, p1, x(p1, s), x(p1, r), -1);
      } else {
        t.omega(p1, p, x(p1, s), x(p, r), -1);
        t.omega(p, p, x(p, s), x(p, r), -1);
      }
    }
  for (int r = 0; r < n; ++r) {
    t.add(x(0, r), 1);
    t.add(x(p1, r), -1);
    for (int i = 0; i < ell; ++i) {
      if (i == p) continue;
      t.add(x(i, r), 1);
      t.add(x(i, r) - x(i + 1, r), -1);
    }
  }
  f.base = t.done();
  return f;
}

}  // namespace

ShuffleElement E_pn(int p, int n, int ell) { return bottom_element(p, n, ell, false); }
ShuffleElement H_pn(int p, int n, int ell) { return bottom_element(p, n, ell, true); }

CheckResult wheel_check(const ShuffleElement& f) {
  const int ell = f.ell;
  FactoredSum g = f.expanded();
  auto& rng = engine_rng();
  for (int eps : {1, -1})
    for (int i = 0; i < ell; ++i) {
      const int j = mod(i + eps, ell);
      for (int r1 = 0; r1 < f.degree[i]; ++r1)
        for (int r2 = 0; r2 < f.degree[i]; ++r2) {
          if (r1 == r2) continue;
          for (int s = 0; s < f.degree[j]; ++s) {
            const int a = f.var(i, r1), b = f.var(i, r2), c = f.var(j, s);
            std::ostringstream w;
            w << "x" << a << "=qd^" << eps << "*x" << c << ", x" << c << "=qd^" << -eps << "*x" << b;
            try {
              FactoredSum h = substitute(g, a, LinForm::variable(c, qq_pow(1) * dd_pow(eps)));
              h = substitute(h, c, LinForm::variable(b, qq_pow(1) * dd_pow(-eps)));
              for (int v : h.variables()) h = substitute(h, v, LinForm::constant(Scalar(random_rational(rng))));
              if (!h.is_empty() && !h.constant_value().is_zero()) return {false, w.str()};
            } catch (const PoleSurvived&) {
              return {false, w.str() + " (pole)"};
            }
          }
        }
    }
  return {};
}

CheckResult pole_check(const ShuffleElement& f) {
  FactoredSum g = f.expanded();
  std::set<LinForm> dens;
  for (const auto& [fac, c] : g.terms())
    for (const auto& [l, m] : fac)
      if (m < 0) dens.insert(l);
  for (const LinForm& l : dens) {
    const auto& co = l.coeffs();
    if (co.size() == 1 && l.constant_term().is_zero()) continue;
    int allowed = 0;
    if (co.size() == 2 && l.constant_term().is_zero() && co[1].second == Scalar(-1)) {
      const int d = mod(f.color_of(co[0].first) - f.color_of(co[1].first), f.ell);
      if (d == 1 || d == f.ell - 1) allowed = 1;
    }
    // Solve l = 0 for its first variable.
    const int v = co[0].first;
    LinForm rest = LinForm::variable(v) - l;
    Expansion e = expand_at(g, v, rest);
    for (auto it = e.singular.rbegin(); it != e.singular.rend(); ++it) {
      if (it->first <= allowed) break;
      if (!is_zero(it->second)) return {false, "pole of order " + std::to_string(it->first) + " along " + l.str()};
    }
  }
  return {};
}

namespace {

struct LimitPoint {
  std::vector<Rational> values;
};

LimitResult limit_at(const ShuffleElement& f, const DegreeVector& m, LimitSide side, const LimitPoint& pt) {
  const int n = f.num_vars();
  FactoredSum g = f.expanded();
  for (int i = 0; i < f.ell; ++i)
    for (int r = 0; r < f.degree[i]; ++r) {
      const int v = f.var(i, r);
      const Scalar val(pt.values[v]);
      g = substitute(g, v, r < m[i] ? LinForm::variable(n, val) : LinForm::constant(val));
    }
  if (side == LimitSide::infinity && !g.variables().empty()) g = invert_variable(g, n);
  Expansion e = g.variables().empty() ? Expansion{g, {}} : expand_at(g, n, LinForm::constant(Scalar(0)));
  for (const auto& [k, part] : e.singular)
    if (!is_zero(part)) return {LimitKind::divergent, Scalar()};
  Scalar val = e.regular.is_empty() ? Scalar(0) : e.regular.constant_value();
  return {val.is_zero() ? LimitKind::zero : LimitKind::finite, val};
}

LimitPoint random_point(int n) {
  LimitPoint pt;
  auto& rng = engine_rng();
  for (int v = 0; v < n; ++v) pt.values.push_back(random_rational(rng));
  return pt;
}

DegreeVector checked_interval(const ShuffleElement& f, int a, int b) {
  if (a < 0 || a >= f.ell || b <= a) throw std::invalid_argument("interval must satisfy 0 <= a < ell, a < b");
  DegreeVector m = interval_degree(a, b, f.ell);
  if (!leq(m, f.degree)) throw std::invalid_argument("interval exceeds degree");
  return m;
}

}  // namespace

LimitResult limit_profile(const ShuffleElement& f, int a, int b, LimitSide side) {
  DegreeVector m = checked_interval(f, a, b);
  check_guard(f.num_vars());
  return limit_at(f, m, side, random_point(f.num_vars()));
}

CheckResult limit_conditions(const ShuffleElement& f, LimitCheck scope) {
  check_guard(f.num_vars());
  LimitPoint pt = random_point(f.num_vars());
  for (int a = 0; a < f.ell; ++a)
    for (int b = a + 1; leq(interval_degree(a, b, f.ell), f.degree); ++b) {
      DegreeVector m = interval_degree(a, b, f.ell);
      if (scope == LimitCheck::diagonal && !is_diagonal(m)) continue;
      LimitResult zero = limit_at(f, m, LimitSide::zero, pt);
      const std::string where = "(" + std::to_string(a) + ";" + std::to_string(b) + "]";
      if (is_diagonal(m)) {
        LimitResult inf = limit_at(f, m, LimitSide::infinity, pt);
        if (zero.kind == LimitKind::divergent || inf.kind == LimitKind::divergent)
          return {false, where + " diverges"};
        if (zero.value != inf.value) return {false, where + " limits differ"};
      } else if (scope != LimitCheck::diagonal) {
        if (zero.kind != LimitKind::zero) return {false, where + " nonzero at 0"};
        if (scope == LimitCheck::strict && limit_at(f, m, LimitSide::infinity, pt).kind != LimitKind::zero)
          return {false, where + " nonzero at infinity"};
      }
    }
  return {};
}

bool IntervalPartition::even(int ell) const {
  return std::all_of(parts.begin(), parts.end(), [&](const Interval& p) { return p.length() % ell == 0; });
}

DegreeVector IntervalPartition::degree(int ell) const {
  DegreeVector k(ell, 0);
  for (const Interval& p : parts) {
    DegreeVector d = interval_degree(p.a, p.b, ell);
    for (int i = 0; i < ell; ++i) k[i] += d[i];
  }
  return k;
}

std::string IntervalPartition::str() const {
  std::string s = "{";
  for (std::size_t u = 0; u < parts.size(); ++u) {
    if (u) s += ",";
    s += "(" + std::to_string(parts[u].a) + ";" + std::to_string(parts[u].b) + "]";
  }
  return s + "}";
}

IntervalPartition make_interval_partition(std::vector<Interval> parts) {
  std::sort(parts.begin(), parts.end(), [](const Interval& x, const Interval& y) {
    return x.length() != y.length() ? x.length() > y.length() : x.a > y.a;
  });
  return IntervalPartition{std::move(parts)};
}

bool dominates(const IntervalPartition& l, const IntervalPartition& m) {
  const std::size_t n = std::min(l.parts.size(), m.parts.size());
  for (std::size_t u = 0; u < n; ++u)
    if (l.parts[u].length() != m.parts[u].length()) return l.parts[u].length() > m.parts[u].length();
  return false;
}

namespace {

void even_rec(int remaining, int max_len, int max_a, int ell, std::vector<Interval>& cur,
              std::vector<IntervalPartition>& out) {
  if (remaining == 0) {
    out.push_back(make_interval_partition(cur));
    return;
  }
  for (int len = std::min(remaining, max_len); len >= 1; --len)
    for (int a = (len == max_len ? max_a : ell - 1); a >= 0; --a) {
      cur.push_back({a, a + len * ell});
      even_rec(remaining - len, len, a, ell, cur, out);
      cur.pop_back();
    }
}

void all_rec(DegreeVector remaining, int ell, std::vector<Interval>& cur, std::vector<IntervalPartition>& out,
             const Interval* last) {
  if (total(remaining) == 0) {
    out.push_back(make_interval_partition(cur));
    return;
  }
  for (int a = 0; a < ell; ++a)
    for (int b = a + 1; leq(interval_degree(a, b, ell), remaining); ++b) {
      Interval iv{a, b};
      // Nonincreasing in (length, a) to list each multiset once.
      if (last && (iv.length() > last->length() || (iv.length() == last->length() && iv.a > last->a))) continue;
      DegreeVector r = remaining;
      DegreeVector d = interval_degree(a, b, ell);
      for (int i = 0; i < ell; ++i) r[i] -= d[i];
      cur.push_back(iv);
      all_rec(r, ell, cur, out, &cur.back());
      cur.pop_back();
    }
}

}  // namespace

std::vector<IntervalPartition> even_partitions(int n, int ell) {
  std::vector<IntervalPartition> out;
  std::vector<Interval> cur;
  even_rec(n, n, ell - 1, ell, cur, out);
  return out;
}

std::vector<IntervalPartition> interval_partitions(const DegreeVector& k, int ell) {
  std::vector<IntervalPartition> out;
  std::vector<Interval> cur;
  all_rec(k, ell, cur, out, nullptr);
  return out;
}

IntervalPartition short_partition(int p, int n, int ell) {
  return IntervalPartition{std::vector<Interval>(n, Interval{mod(p, ell), mod(p, ell) + ell})};
}

IntervalPartition long_partition(int p, int n, int ell) {
  if (n == 0) return {};
  return IntervalPartition{{Interval{mod(p, ell), mod(p, ell) + n * ell}}};
}

FactoredSum phi_L(const ShuffleElement& f, const IntervalPartition& l) { return phi_impl(f, l, false); }
FactoredSum phi_L_star(const ShuffleElement& f, const IntervalPartition& l) { return phi_impl(f, l, true); }

Scalar rho_L(const ShuffleElement& f, const IntervalPartition& l) {
  require_even(l, f.ell);
  FactoredSum g = phi_L(f, l);
  const int n = f.num_vars(), k = static_cast<int>(l.parts.size());
  if (k == 0) return g.is_empty() ? Scalar(0) : g.constant_value();
  for (int u = 0; u + 1 < k; ++u)
    g = pole_checked_substitute(g, n + u, LinForm::variable(n + u + 1, q_pow(l.parts[u].length()) * t_pow(-1)));
  g = pole_checked_substitute(g, n + k - 1, LinForm::constant(q_pow(l.parts[k - 1].length())));
  return g.is_empty() ? Scalar(0) : g.constant_value();
}

Scalar rho_L_star(const ShuffleElement& f, const IntervalPartition& l) {
  require_even(l, f.ell);
  FactoredSum g = phi_L_star(f, l);
  const int n = f.num_vars(), k = static_cast<int>(l.parts.size());
  if (k == 0) return g.is_empty() ? Scalar(0) : g.constant_value();
  for (int u = 0; u + 1 < k; ++u)
    g = pole_checked_substitute(g, n + u, LinForm::variable(n + u + 1, q_pow(-1) * t_pow(l.parts[u + 1].length())));
  g = pole_checked_substitute(g, n + k - 1, LinForm::constant(Scalar(1)));
  return g.is_empty() ? Scalar(0) : g.constant_value();
}

namespace {

Scalar long_pairing(const ShuffleElement& f, int p, int n, bool dual) {
  if (f.degree != diagonal_degree(n, f.ell)) throw std::invalid_argument("pairing needs degree n*delta");
  p = mod(p, f.ell);
  const int ell = f.ell;
  FactoredSum g = dual ? phi_L_star(f, long_partition(p, n, ell)) : phi_L(f, long_partition(p, n, ell));
  if (n > 0) g = pole_checked_substitute(g, f.num_vars(), LinForm::constant(Scalar(1)));
  Scalar val = g.is_empty() ? Scalar(0) : g.constant_value();
  Scalar front = dual ? qq_pow(-n * ell) : Scalar((n * ell) % 2 == 0 ? 1 : -1);
  return front * val / long_omega_product(p, p + n * ell, ell, dual);
}

Scalar product_pairing(const ShuffleElement& f, const IntervalPartition& l, bool dual) {
  const int ell = f.ell;
  require_even(l, ell);
  FactoredSum g = dual ? phi_L_star(f, l) : phi_L(f, l);
  const int nv = f.num_vars(), k = static_cast<int>(l.parts.size());
  int n = 0, cross = 0;
  for (int u = 0; u < k; ++u) {
    const int nu = l.parts[u].length() / ell;
    cross += n * nu;
    n += nu;
  }
  for (int step = 0; step < k; ++step) {
    const int u = dual ? k - 1 - step : step;
    g = pole_checked_substitute(g, nv + u, LinForm::constant(Scalar(0)));
  }
  Scalar val = g.is_empty() ? Scalar(0) : g.constant_value();
  Scalar front = (dual ? qq_pow(-n * ell) : Scalar((n * ell) % 2 == 0 ? 1 : -1)) * dd_pow(ell * cross);
  Scalar omegas(1);
  for (const Interval& part : l.parts) omegas *= long_omega_product(part.a, part.b, ell, dual);
  return front * val / omegas;
}

}  // namespace

Scalar pairing_R(const ShuffleElement& f, int p, int n) { return long_pairing(f, p, n, false); }
Scalar pairing_Rstar(const ShuffleElement& f, int p, int n) { return long_pairing(f, p, n, true); }

Scalar dual_product_pairing(const ShuffleElement& f, const IntervalPartition& l) {
  return product_pairing(f, l, false);
}
Scalar dual_product_pairing_star(const ShuffleElement& f, const IntervalPartition& l) {
  return product_pairing(f, l, true);
}

int f_shift(int p, int pp, int ell) {
  p = mod(p, ell);
  pp = mod(pp, ell);
  return pp > p ? pp - ell : pp;
}

Scalar dual_currents_closed_form(int p, int pp, int n, int ell) {
  Scalar v = q_pow(n * f_shift(p, pp, ell));
  for (int r = 1; r <= n; ++r) v *= (Scalar(1) - qq_pow(-2) * q_pow((r - 1) * ell)) / (Scalar(1) - q_pow(r * ell));
  return v;
}

Scalar dual_currents_closed_form_star(int p, int pp, int n, int ell) {
  Scalar v = t_pow(-n * f_shift(p, pp, ell));
  for (int r = 1; r <= n; ++r) v *= (qq_pow(-2) - t_pow(-(r - 1) * ell)) / (Scalar(1) - t_pow(-r * ell));
  return v;
}

ShuffleConstants constants(int p, int n, int ell) {
  (void)p;
  Scalar common = q_pow(-n * (ell - 1)) * t_pow(n);
  return {qq_pow(-n * (n - 1) / 2) * common, qq_pow(-n * (n - 1) / 2 + n) * common};
}

std::string to_json(const ShuffleElement& f) {
  nlohmann::json j;
  j["ell"] = f.ell;
  j["degree"] = f.degree;
  j["symmetrized"] = f.symmetrize;
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [fac, c] : f.base.terms()) {
    nlohmann::json t;
    t["coefficient"] = c.str();
    nlohmann::json factors = nlohmann::json::array();
    for (const auto& [l, m] : fac) factors.push_back({{"form", l.str()}, {"power", m}});
    t["factors"] = factors;
    terms.push_back(t);
  }
  j["terms"] = terms;
  return j.dump(2);
}

}  // namespace wmac
