#include "wmac/factored.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <sstream>

namespace wmac {

namespace {

std::atomic<std::uint64_t> g_seed{20240611u};
std::atomic<std::uint64_t> g_generation{0};

Rational pow_rational(const Rational& x, int m) {
  if (m < 0) {
    if (x == 0) throw DegenerateSpecialization("zero factor in denominator");
    return pow_rational(1 / x, -m);
  }
  Rational r = 1;
  for (int i = 0; i < m; ++i) r *= x;
  return r;
}

}  // namespace

LinForm LinForm::variable(int v, const Scalar& c) {
  LinForm f;
  if (!c.is_zero()) f.coeffs_.emplace_back(v, c);
  return f;
}

LinForm LinForm::constant(const Scalar& c) {
  LinForm f;
  f.constant_ = c;
  return f;
}

Scalar LinForm::coeff(int v) const {
  for (const auto& [var, c] : coeffs_)
    if (var == v) return c;
  return Scalar(0);
}

bool LinForm::has(int v) const {
  for (const auto& [var, c] : coeffs_)
    if (var == v) return true;
  return false;
}

LinForm LinForm::operator+(const LinForm& o) const {
  LinForm r;
  r.constant_ = constant_ + o.constant_;
  std::size_t i = 0, j = 0;
  while (i < coeffs_.size() || j < o.coeffs_.size()) {
    if (j == o.coeffs_.size() || (i < coeffs_.size() && coeffs_[i].first < o.coeffs_[j].first)) {
      r.coeffs_.push_back(coeffs_[i++]);
    } else if (i == coeffs_.size() || o.coeffs_[j].first < coeffs_[i].first) {
      r.coeffs_.push_back(o.coeffs_[j++]);
    } else {
      Scalar c = coeffs_[i].second + o.coeffs_[j].second;
      if (!c.is_zero()) r.coeffs_.emplace_back(coeffs_[i].first, c);
      ++i;
      ++j;
    }
  }
  return r;
}

LinForm LinForm::scaled(const Scalar& c) const {
  if (c.is_zero()) return LinForm();
  LinForm r;
  r.constant_ = constant_ * c;
  for (const auto& [v, x] : coeffs_) r.coeffs_.emplace_back(v, x * c);
  return r;
}

LinForm LinForm::operator-(const LinForm& o) const { return *this + o.scaled(Scalar(-1)); }

LinForm LinForm::substituted(int v, const LinForm& value) const {
  Scalar c = coeff(v);
  if (c.is_zero()) return *this;
  LinForm rest;
  rest.constant_ = constant_;
  for (const auto& [var, x] : coeffs_)
    if (var != v) rest.coeffs_.emplace_back(var, x);
  return rest + value.scaled(c);
}

LinForm LinForm::renamed(const std::vector<int>& map) const {
  LinForm r = LinForm::constant(constant_);
  for (const auto& [v, c] : coeffs_) r = r + LinForm::variable(map.at(v), c);
  return r;
}

Scalar LinForm::normalize() {
  Scalar lead = coeffs_.empty() ? constant_ : coeffs_.front().second;
  if (lead.is_zero()) throw std::domain_error("normalizing the zero form");
  if (lead.is_one()) return lead;
  Scalar inv = lead.inverse();
  constant_ *= inv;
  for (auto& [v, c] : coeffs_) c *= inv;
  return lead;
}

Rational LinForm::eval(const Rational& s, const Rational& w, const std::vector<Rational>& x) const {
  Rational r = constant_.is_zero() ? Rational(0) : constant_.specialize(s, w);
  for (const auto& [v, c] : coeffs_) r += c.specialize(s, w) * x.at(v);
  return r;
}

bool operator<(const LinForm& a, const LinForm& b) {
  if (a.coeffs_ != b.coeffs_) return a.coeffs_ < b.coeffs_;
  return a.constant_ < b.constant_;
}

std::string LinForm::str() const {
  std::ostringstream os;
  bool first = true;
  for (const auto& [v, c] : coeffs_) {
    if (!first) os << " + ";
    first = false;
    if (!c.is_one()) os << "(" << c.str() << ")*";
    os << "x" << v;
  }
  if (!constant_.is_zero() || first) os << (first ? "" : " + ") << "(" << constant_.str() << ")";
  return os.str();
}

FactoredSum::FactoredSum(const Scalar& c) {
  if (!c.is_zero()) terms_.emplace(FactorMap{}, c);
}

FactoredSum FactoredSum::factor(const LinForm& f, int m) {
  FactoredSum r;
  r.add_term(Scalar(1), {{f, m}});
  return r;
}

std::set<int> FactoredSum::variables() const {
  std::set<int> out;
  for (const auto& [f, c] : terms_)
    for (const auto& [l, m] : f)
      for (const auto& [v, x] : l.coeffs()) out.insert(v);
  return out;
}

Scalar FactoredSum::constant_value() const {
  Scalar total;
  for (const auto& [f, c] : terms_) {
    if (!f.empty()) throw std::logic_error("sum still depends on variables");
    total += c;
  }
  return total;
}

void FactoredSum::add_normalized(const Scalar& c, FactorMap&& f) {
  if (c.is_zero()) return;
  auto it = terms_.find(f);
  if (it == terms_.end()) {
    terms_.emplace(std::move(f), c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

void FactoredSum::add_term(Scalar c, const std::vector<std::pair<LinForm, int>>& factors) {
  if (c.is_zero()) return;
  FactorMap fm;
  for (const auto& [l, m] : factors) {
    if (m == 0) continue;
    if (l.is_constant()) {
      if (l.constant_term().is_zero()) {
        if (m > 0) return;
        throw std::domain_error("division by a vanishing factor");
      }
      c *= l.constant_term().pow(m);
      continue;
    }
    LinForm n = l;
    Scalar lead = n.normalize();
    if (!lead.is_one()) c *= lead.pow(m);
    int& e = fm[n];
    e += m;
    if (e == 0) fm.erase(n);
  }
  add_normalized(c, std::move(fm));
}

FactoredSum& FactoredSum::operator+=(const FactoredSum& o) {
  for (const auto& [f, c] : o.terms_) {
    FactorMap copy = f;
    add_normalized(c, std::move(copy));
  }
  return *this;
}

FactoredSum& FactoredSum::operator-=(const FactoredSum& o) {
  for (const auto& [f, c] : o.terms_) {
    FactorMap copy = f;
    add_normalized(-c, std::move(copy));
  }
  return *this;
}

FactoredSum operator*(const FactoredSum& a, const FactoredSum& b) {
  FactoredSum r;
  for (const auto& [fa, ca] : a.terms_)
    for (const auto& [fb, cb] : b.terms_) {
      FactorMap f = fa;
      for (const auto& [l, m] : fb) {
        int& e = f[l];
        e += m;
        if (e == 0) f.erase(l);
      }
      r.add_normalized(ca * cb, std::move(f));
    }
  return r;
}

FactoredSum& FactoredSum::operator*=(const FactoredSum& o) { return *this = *this * o; }

FactoredSum FactoredSum::scaled(const Scalar& c) const {
  if (c.is_zero()) return FactoredSum();
  FactoredSum r = *this;
  for (auto& [f, x] : r.terms_) x *= c;
  return r;
}

FactoredSum FactoredSum::pow(int e) const {
  if (e < 0) {
    if (terms_.size() != 1) throw std::domain_error("negative power of a sum");
    const auto& [f, c] = *terms_.begin();
    FactorMap inv;
    for (const auto& [l, m] : f) inv.emplace(l, m * e);
    FactoredSum r;
    r.add_normalized(c.pow(e), std::move(inv));
    return r;
  }
  FactoredSum r(Scalar(1));
  for (int i = 0; i < e; ++i) r *= *this;
  return r;
}

FactoredSum FactoredSum::renamed(const std::vector<int>& map) const {
  FactoredSum r;
  for (const auto& [f, c] : terms_) {
    std::vector<std::pair<LinForm, int>> fs;
    for (const auto& [l, m] : f) fs.emplace_back(l.renamed(map), m);
    r.add_term(c, fs);
  }
  return r;
}

Rational FactoredSum::eval(const Rational& s, const Rational& w, const std::vector<Rational>& x) const {
  Rational total = 0;
  for (const auto& [f, c] : terms_) {
    Rational v = c.specialize(s, w);
    for (const auto& [l, m] : f) v *= pow_rational(l.eval(s, w, x), m);
    total += v;
  }
  return total;
}

std::string FactoredSum::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [f, c] : terms_) {
    os << (first ? "" : " + ") << "(" << c.str() << ")";
    first = false;
    for (const auto& [l, m] : f) os << "*[" << l.str() << "]^" << m;
  }
  return os.str();
}

Rational binomial(int m, int k) {
  Rational r = 1;
  for (int i = 0; i < k; ++i) {
    Rational f(m - i, i + 1);
    f.canonicalize();
    r *= f;
  }
  return r;
}

Expansion expand_at(const FactoredSum& f, int v, const LinForm& value) {
  if (value.has(v)) throw std::invalid_argument("substituted value contains the variable");
  struct Part {
    LinForm base;
    Scalar d;
    int m;
  };
  Expansion out;
  for (const auto& [fm, c] : f.terms()) {
    int ord = 0;
    Scalar coef = c;
    std::vector<std::pair<LinForm, int>> fixed;
    std::vector<Part> parts;
    for (const auto& [l, m] : fm) {
      Scalar d = l.coeff(v);
      if (d.is_zero()) {
        fixed.emplace_back(l, m);
        continue;
      }
      LinForm sub = l.substituted(v, value);
      if (sub.is_zero()) {
        ord += m;
        coef *= d.pow(m);
      } else {
        parts.push_back({sub, d, m});
      }
    }
    if (ord > 0) continue;
    const int need = -ord;
    for (int j = 0; j <= need; ++j) {
      FactoredSum& target = (j == need) ? out.regular : out.singular[need - j];
      std::vector<int> ks(parts.size(), 0);
      std::function<void(std::size_t, int)> rec = [&](std::size_t idx, int left) {
        if (idx == parts.size()) {
          if (left != 0) return;
          Scalar x = coef;
          std::vector<std::pair<LinForm, int>> fs = fixed;
          for (std::size_t a = 0; a < parts.size(); ++a) {
            if (ks[a] > 0) x *= Scalar(binomial(parts[a].m, ks[a])) * parts[a].d.pow(ks[a]);
            fs.emplace_back(parts[a].base, parts[a].m - ks[a]);
          }
          target.add_term(x, fs);
          return;
        }
        for (int k = 0; k <= left; ++k) {
          ks[idx] = k;
          rec(idx + 1, left - k);
        }
        ks[idx] = 0;
      };
      rec(0, j);
    }
  }
  for (auto it = out.singular.begin(); it != out.singular.end();)
    it = it->second.is_empty() ? out.singular.erase(it) : std::next(it);
  return out;
}

FactoredSum substitute(const FactoredSum& f, int v, const LinForm& value) {
  Expansion e = expand_at(f, v, value);
  for (const auto& [k, coeff] : e.singular)
    if (!is_zero(coeff)) throw PoleSurvived("pole survived substitution (order " + std::to_string(k) + ")");
  return e.regular;
}

FactoredSum invert_variable(const FactoredSum& f, int v) {
  FactoredSum r;
  for (const auto& [fm, c] : f.terms()) {
    std::vector<std::pair<LinForm, int>> fs;
    for (const auto& [l, m] : fm) {
      if (l.coeffs().size() != 1 || l.coeffs()[0].first != v)
        throw std::invalid_argument("inversion needs a single remaining variable");
      // (x + b) at x -> 1/x equals (1 + b x) / x.
      fs.emplace_back(LinForm::variable(v, l.constant_term()) + LinForm::constant(l.coeffs()[0].second), m);
      fs.emplace_back(LinForm::variable(v), -m);
    }
    r.add_term(c, fs);
  }
  return r;
}

FactoredSum limit_at_infinity(const FactoredSum& f, int v) {
  return substitute(invert_variable(f, v), v, LinForm());
}

std::mt19937_64& engine_rng() {
  thread_local std::mt19937_64 rng;
  thread_local std::uint64_t generation = ~std::uint64_t{0};
  if (generation != g_generation.load()) {
    generation = g_generation.load();
    rng.seed(g_seed.load());
  }
  return rng;
}

void seed_engine(std::uint64_t seed) {
  g_seed = seed;
  ++g_generation;
}

Rational random_rational(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> num(-1000003, 1000003);
  std::uniform_int_distribution<long> den(1, 999983);
  long n = 0;
  while (n == 0) n = num(rng);
  Rational r(n, den(rng));
  r.canonicalize();
  return r;
}

bool is_zero(const FactoredSum& f) {
  if (f.is_empty()) return true;
  std::set<int> vars = f.variables();
  if (vars.empty()) return f.constant_value().is_zero();
  auto& rng = engine_rng();
  const int top = *vars.rbegin();
  int done = 0;
  for (int attempt = 0; attempt < 20 && done < 2; ++attempt) {
    Rational s = random_rational(rng), w = random_rational(rng);
    std::vector<Rational> x(top + 1);
    for (int v : vars) x[v] = random_rational(rng);
    try {
      if (f.eval(s, w, x) != 0) return false;
      ++done;
    } catch (const DegenerateSpecialization&) {
    }
  }
  if (done == 0) throw std::runtime_error("no regular random point found");
  return true;
}

}  // namespace wmac
