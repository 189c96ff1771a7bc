#include "wmac/symfunc.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <mutex>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace wmac {

namespace {

std::atomic<int> g_degree_cap{12};

using Classical = std::map<Partition, Rational>;

Partition merge_parts(const Partition& x, const Partition& y) {
  Partition out(x);
  out.insert(out.end(), y.begin(), y.end());
  std::sort(out.begin(), out.end(), std::greater<int>());
  return out;
}

Classical classical_mul(const Classical& x, const Classical& y) {
  Classical out;
  for (const auto& [kx, cx] : x)
    for (const auto& [ky, cy] : y) {
      Rational& slot = out[merge_parts(kx, ky)];
      slot += cx * cy;
    }
  for (auto it = out.begin(); it != out.end();) it = (it->second == 0) ? out.erase(it) : std::next(it);
  return out;
}

Int factorial(int n) {
  Int r = 1;
  for (int k = 2; k <= n; ++k) r *= k;
  return r;
}

Int z_factor(const Partition& mu) {
  std::map<int, int> mult;
  for (int part : mu) ++mult[part];
  Int z = 1;
  for (const auto& [part, m] : mult) {
    Int pw;
    mpz_pow_ui(pw.get_mpz_t(), Int(part).get_mpz_t(), m);
    z *= pw * factorial(m);
  }
  return z;
}

// h_n or e_n in power sums.
Classical single_to_p(Basis b, int n) {
  Classical out;
  for (const Partition& mu : partitions_of(n)) {
    Rational c(1, 1);
    c /= Rational(z_factor(mu));
    if (b == Basis::e && (n - static_cast<int>(mu.size())) % 2 != 0) c = -c;
    out[mu] = c;
  }
  return out;
}

Classical product_to_p(Basis b, const Partition& lam) {
  Classical acc{{Partition{}, Rational(1)}};
  for (int part : lam) acc = classical_mul(acc, single_to_p(b, part));
  return acc;
}

// Jacobi-Trudi determinant det(h_{lam_i - i + j}) as h-monomials, by Laplace expansion over rows.
Classical schur_in_h(const Partition& lam) {
  const int k = static_cast<int>(lam.size());
  std::map<unsigned, Classical> memo;
  std::function<Classical(int, unsigned)> rec = [&](int row, unsigned used) -> Classical {
    if (row == k) return Classical{{Partition{}, Rational(1)}};
    auto it = memo.find(used);
    if (it != memo.end()) return it->second;
    Classical out;
    int unused_below = 0;
    for (int j = 0; j < k; ++j) {
      if (used & (1u << j)) continue;
      int idx = lam[row] - row + j;
      int sign = (unused_below % 2 == 0) ? 1 : -1;
      ++unused_below;
      if (idx < 0) continue;
      Classical sub = rec(row + 1, used | (1u << j));
      for (const auto& [key, c] : sub) {
        Partition merged = key;
        if (idx > 0) merged = merge_parts(key, Partition{idx});
        out[merged] += sign * c;
      }
    }
    for (auto jt = out.begin(); jt != out.end();) jt = (jt->second == 0) ? out.erase(jt) : std::next(jt);
    memo[used] = out;
    return out;
  };
  return rec(0, 0u);
}

struct Transition {
  std::vector<Partition> index;
  std::map<Partition, int> pos;
  std::vector<Classical> to_p;    // row lam: b_lam in p
  std::vector<Classical> from_p;  // row mu: p_mu in b
};

std::vector<std::vector<Rational>> invert(std::vector<std::vector<Rational>> a) {
  const std::size_t n = a.size();
  std::vector<std::vector<Rational>> inv(n, std::vector<Rational>(n, Rational(0)));
  for (std::size_t i = 0; i < n; ++i) inv[i][i] = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && a[piv][col] == 0) ++piv;
    if (piv == n) throw std::logic_error("singular classical transition matrix");
    std::swap(a[piv], a[col]);
    std::swap(inv[piv], inv[col]);
    Rational d = a[col][col];
    for (std::size_t j = 0; j < n; ++j) {
      a[col][j] /= d;
      inv[col][j] /= d;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || a[r][col] == 0) continue;
      Rational f = a[r][col];
      for (std::size_t j = 0; j < n; ++j) {
        a[r][j] -= f * a[col][j];
        inv[r][j] -= f * inv[col][j];
      }
    }
  }
  return inv;
}

Transition build_transition(Basis b, int n) {
  Transition tr;
  tr.index = partitions_of(n);
  for (std::size_t k = 0; k < tr.index.size(); ++k) tr.pos[tr.index[k]] = static_cast<int>(k);
  const std::size_t m = tr.index.size();
  for (const Partition& lam : tr.index) tr.to_p.push_back(classical_to_p(b, lam));
  std::vector<std::vector<Rational>> mat(m, std::vector<Rational>(m, Rational(0)));
  for (std::size_t r = 0; r < m; ++r)
    for (const auto& [mu, c] : tr.to_p[r]) mat[r][tr.pos.at(mu)] = c;
  // rows of mat: b in p. p_mu = sum_lam inv[mu][lam] b_lam where inv = mat^{-1} read by rows.
  auto inv = invert(mat);
  tr.from_p.resize(m);
  for (std::size_t r = 0; r < m; ++r)
    for (std::size_t c = 0; c < m; ++c)
      if (inv[r][c] != 0) tr.from_p[r][tr.index[c]] = inv[r][c];
  return tr;
}

const Transition& transition(Basis b, int n) {
  static std::mutex mu;
  static std::map<std::pair<int, int>, Transition> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_pair(static_cast<int>(b), n);
  auto it = cache.find(key);
  if (it == cache.end()) it = cache.emplace(key, build_transition(b, n)).first;
  return it->second;
}

int total_size(const MultiPartition& key) { return size(key); }

void check_cap(const SymFunc& f) {
  for (const auto& [key, c] : f.terms())
    if (total_size(key) > degree_cap())
      throw std::invalid_argument("degree " + std::to_string(total_size(key)) + " exceeds cap " +
                                  std::to_string(degree_cap()));
}

// Classical basis (h, e, s) to p, color by color.
SymFunc classical_basis_to_p(const SymFunc& f) {
  SymFunc out(f.ell(), Basis::p);
  out.set_core(f.core());
  for (const auto& [key, c] : f.terms()) {
    std::vector<std::pair<MultiPartition, Rational>> acc{{MultiPartition(f.ell()), Rational(1)}};
    for (int i = 0; i < f.ell(); ++i) {
      const Transition& tr = transition(f.basis(), size(key[i]));
      const Classical& row = tr.to_p[tr.pos.at(key[i])];
      std::vector<std::pair<MultiPartition, Rational>> next;
      for (const auto& [mk, mc] : acc)
        for (const auto& [mu, rc] : row) {
          MultiPartition nk = mk;
          nk[i] = mu;
          next.emplace_back(std::move(nk), mc * rc);
        }
      acc = std::move(next);
    }
    std::map<MultiPartition, Rational> merged;
    for (auto& [k, r] : acc) merged[k] += r;
    for (const auto& [k, r] : merged)
      if (r != 0) out.add_term(k, c * Scalar(r));
  }
  return out;
}

SymFunc p_to_classical_basis(const SymFunc& f, Basis target) {
  SymFunc out(f.ell(), target);
  out.set_core(f.core());
  for (const auto& [key, c] : f.terms()) {
    std::vector<std::pair<MultiPartition, Rational>> acc{{MultiPartition(f.ell()), Rational(1)}};
    for (int i = 0; i < f.ell(); ++i) {
      const Transition& tr = transition(target, size(key[i]));
      const Classical& row = tr.from_p[tr.pos.at(key[i])];
      std::vector<std::pair<MultiPartition, Rational>> next;
      for (const auto& [mk, mc] : acc)
        for (const auto& [lam, rc] : row) {
          MultiPartition nk = mk;
          nk[i] = lam;
          next.emplace_back(std::move(nk), mc * rc);
        }
      acc = std::move(next);
    }
    std::map<MultiPartition, Rational> merged;
    for (auto& [k, r] : acc) merged[k] += r;
    for (const auto& [k, r] : merged)
      if (r != 0) out.add_term(k, c * Scalar(r));
  }
  return out;
}

// Image of p_n(i) as a list of (color, coefficient).
std::vector<std::pair<int, Scalar>> pleth_generator(PlethMap map, int n, int i, int ell) {
  auto color = [ell](int c) { return ((c % ell) + ell) % ell; };
  std::vector<std::pair<int, Scalar>> out;
  switch (map) {
    case PlethMap::PhiQ:
      out = {{color(i), Scalar(1)}, {color(i - 1), -q_pow(n)}};
      break;
    case PlethMap::PhiTinv:
      out = {{color(i), Scalar(1)}, {color(i - 1), -t_pow(-n)}};
      break;
    case PlethMap::PhiQInv: {
      Scalar den = (Scalar(1) - q_pow(n * ell)).inverse();
      for (int k = 0; k < ell; ++k) out.emplace_back(color(i - k), q_pow(k * n) * den);
      break;
    }
    case PlethMap::PhiTinvInv: {
      Scalar den = (Scalar(1) - t_pow(-n * ell)).inverse();
      for (int k = 0; k < ell; ++k) out.emplace_back(color(i - k), t_pow(-k * n) * den);
      break;
    }
  }
  std::map<int, Scalar> merged;
  for (auto& [c, s] : out) merged[c] += s;
  out.clear();
  for (auto& [c, s] : merged)
    if (!s.is_zero()) out.emplace_back(c, s);
  return out;
}

// Image of one p-monomial.
SymFunc pleth_monomial(const MultiPartition& key, PlethMap map, int ell) {
  static std::mutex mu;
  static std::map<std::tuple<int, int, MultiPartition>, SymFunc> cache;
  auto ck = std::make_tuple(static_cast<int>(map), ell, key);
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(ck);
    if (it != cache.end()) return it->second;
  }
  SymFunc acc = SymFunc::one(ell);
  for (int i = 0; i < ell; ++i)
    for (int part : key[i]) {
      SymFunc gen(ell, Basis::p);
      for (const auto& [c, s] : pleth_generator(map, part, i, ell)) {
        MultiPartition k(ell);
        k[c] = {part};
        gen.add_term(k, s);
      }
      acc = multiply(acc, gen);
    }
  std::lock_guard<std::mutex> lock(mu);
  cache.emplace(ck, acc);
  return acc;
}

std::string key_str(const MultiPartition& key) { return to_string(key); }

}  // namespace

std::string basis_name(Basis b) {
  switch (b) {
    case Basis::p:
      return "p";
    case Basis::h:
      return "h";
    case Basis::e:
      return "e";
    case Basis::s:
      return "s";
    case Basis::hhat:
      return "hhat";
    case Basis::ehat:
      return "ehat";
  }
  return "?";
}

Basis parse_basis(const std::string& name) {
  for (Basis b : {Basis::p, Basis::h, Basis::e, Basis::s, Basis::hhat, Basis::ehat})
    if (basis_name(b) == name) return b;
  throw std::invalid_argument("unknown basis: " + name);
}

int degree_cap() { return g_degree_cap.load(); }
void set_degree_cap(int cap) { g_degree_cap.store(cap); }

std::map<Partition, Rational> classical_to_p(Basis b, const Partition& lam) {
  switch (b) {
    case Basis::p:
      return Classical{{lam, Rational(1)}};
    case Basis::h:
    case Basis::e:
      return product_to_p(b, lam);
    case Basis::s: {
      Classical out;
      for (const auto& [hkey, c] : schur_in_h(lam))
        for (const auto& [mu, d] : product_to_p(Basis::h, hkey)) out[mu] += c * d;
      for (auto it = out.begin(); it != out.end();) it = (it->second == 0) ? out.erase(it) : std::next(it);
      return out;
    }
    default:
      throw std::invalid_argument("classical_to_p: basis " + basis_name(b) + " is not classical");
  }
}

SymFunc SymFunc::one(int ell) { return monomial(ell, Basis::p, MultiPartition(ell)); }

SymFunc SymFunc::monomial(int ell, Basis basis, MultiPartition key, const Scalar& c) {
  if (static_cast<int>(key.size()) != ell) throw std::invalid_argument("multipartition length differs from ell");
  SymFunc f(ell, basis);
  f.add_term(key, c);
  return f;
}

SymFunc SymFunc::generator(int ell, Basis basis, int n, int i) {
  MultiPartition key(ell);
  if (n > 0) key[((i % ell) + ell) % ell] = {n};
  return monomial(ell, basis, key);
}

Scalar SymFunc::coeff(const MultiPartition& key) const {
  auto it = terms_.find(key);
  return it == terms_.end() ? Scalar(0) : it->second;
}

void SymFunc::add_term(const MultiPartition& key, const Scalar& c) {
  if (c.is_zero()) return;
  auto it = terms_.find(key);
  if (it == terms_.end()) {
    terms_.emplace(key, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

SymFunc& SymFunc::operator+=(const SymFunc& o) {
  if (o.ell_ != ell_) throw std::invalid_argument("mismatched ell");
  if (o.basis_ != basis_) return *this += convert(o, basis_);
  if (!core_) core_ = o.core_;
  for (const auto& [k, c] : o.terms_) add_term(k, c);
  return *this;
}

SymFunc& SymFunc::operator-=(const SymFunc& o) { return *this += o.scaled(Scalar(-1)); }

SymFunc SymFunc::scaled(const Scalar& c) const {
  SymFunc out(ell_, basis_);
  out.core_ = core_;
  if (c.is_zero()) return out;
  for (const auto& [k, v] : terms_) out.terms_.emplace(k, v * c);
  return out;
}

bool operator==(const SymFunc& x, const SymFunc& y) {
  if (x.ell_ != y.ell_) return false;
  if (x.basis_ != y.basis_) return convert(x, Basis::p) == convert(y, Basis::p);
  return x.terms_ == y.terms_;
}

int SymFunc::degree() const {
  int d = -1;
  for (const auto& [k, c] : terms_) {
    int s = size(k);
    if (d >= 0 && s != d) throw std::invalid_argument("non-homogeneous input");
    d = s;
  }
  return d;
}

bool SymFunc::is_homogeneous() const {
  try {
    degree();
    return true;
  } catch (const std::invalid_argument&) {
    return false;
  }
}

std::string SymFunc::str() const {
  std::ostringstream os;
  if (terms_.empty()) os << "0";
  bool first = true;
  for (const auto& [k, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << "(" << c.str() << ")*" << basis_name(basis_) << key_str(k);
  }
  if (core_) {
    os << " @core(";
    for (std::size_t i = 0; i < core_->size(); ++i) os << (i ? "," : "") << (*core_)[i];
    os << ")";
  }
  return os.str();
}

std::string SymFunc::latex() const {
  std::ostringstream os;
  if (terms_.empty()) os << "0";
  bool first = true;
  const std::string sym = basis_ == Basis::hhat ? "\\hat{h}" : basis_ == Basis::ehat ? "\\hat{e}" : basis_name(basis_);
  for (const auto& [k, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << "\\left(" << c.latex() << "\\right)";
    if (size(k) == 0) continue;
    for (int i = 0; i < ell_; ++i) {
      if (k[i].empty()) continue;
      os << " " << sym << "_{";
      for (std::size_t j = 0; j < k[i].size(); ++j) os << (j ? "," : "") << k[i][j];
      os << "}(" << i << ")";
    }
  }
  if (core_) {
    os << " \\otimes e^{(";
    for (std::size_t i = 0; i < core_->size(); ++i) os << (i ? "," : "") << (*core_)[i];
    os << ")}";
  }
  return os.str();
}

SymFunc convert(const SymFunc& f, Basis target) {
  check_cap(f);
  if (f.basis() == target) return f;
  SymFunc in_p(f.ell(), Basis::p);
  switch (f.basis()) {
    case Basis::p:
      in_p = f;
      break;
    case Basis::h:
    case Basis::e:
    case Basis::s:
      in_p = classical_basis_to_p(f);
      break;
    case Basis::hhat: {
      SymFunc raw(f.ell(), Basis::h);
      raw.set_core(f.core());
      for (const auto& [k, c] : f.terms()) raw.add_term(k, c);
      in_p = pleth(classical_basis_to_p(raw), PlethMap::PhiQInv);
      break;
    }
    case Basis::ehat: {
      SymFunc raw(f.ell(), Basis::e);
      raw.set_core(f.core());
      for (const auto& [k, c] : f.terms()) raw.add_term(k, c);
      in_p = pleth(classical_basis_to_p(raw), PlethMap::PhiTinvInv);
      break;
    }
  }
  switch (target) {
    case Basis::p:
      return in_p;
    case Basis::h:
    case Basis::e:
    case Basis::s:
      return p_to_classical_basis(in_p, target);
    case Basis::hhat: {
      SymFunc raw = p_to_classical_basis(pleth(in_p, PlethMap::PhiQ), Basis::h);
      SymFunc out(f.ell(), Basis::hhat);
      out.set_core(f.core());
      for (const auto& [k, c] : raw.terms()) out.add_term(k, c);
      return out;
    }
    case Basis::ehat: {
      SymFunc raw = p_to_classical_basis(pleth(in_p, PlethMap::PhiTinv), Basis::e);
      SymFunc out(f.ell(), Basis::ehat);
      out.set_core(f.core());
      for (const auto& [k, c] : raw.terms()) out.add_term(k, c);
      return out;
    }
  }
  return in_p;
}

SymFunc multiply(const SymFunc& f, const SymFunc& g) {
  if (f.ell() != g.ell()) throw std::invalid_argument("mismatched ell");
  SymFunc fp = convert(f, Basis::p), gp = convert(g, Basis::p);
  SymFunc out(f.ell(), Basis::p);
  if (f.core() && g.core()) {
    CoreVector c = *f.core();
    for (std::size_t i = 0; i < c.size() && i < g.core()->size(); ++i) c[i] += (*g.core())[i];
    out.set_core(c);
  } else {
    out.set_core(f.core() ? f.core() : g.core());
  }
  for (const auto& [kf, cf] : fp.terms())
    for (const auto& [kg, cg] : gp.terms()) {
      MultiPartition k(f.ell());
      for (int i = 0; i < f.ell(); ++i) k[i] = merge_parts(kf[i], kg[i]);
      out.add_term(k, cf * cg);
    }
  return out;
}

SymFunc pleth(const SymFunc& f, PlethMap map) {
  SymFunc fp = convert(f, Basis::p);
  SymFunc out(f.ell(), Basis::p);
  out.set_core(f.core());
  for (const auto& [k, c] : fp.terms()) {
    SymFunc img = pleth_monomial(k, map, f.ell());
    for (const auto& [ik, ic] : img.terms()) out.add_term(ik, c * ic);
  }
  return out;
}

MultiPartition ehat_key(const MultiPartition& quot) {
  MultiPartition out;
  for (const Partition& part : quot) out.push_back(transpose(part));
  return out;
}

SymFunc hhat(const Partition& lam, int ell) {
  CoreQuotient cq = core_quotient(lam, ell);
  SymFunc f = SymFunc::monomial(ell, Basis::hhat, cq.quot);
  f.set_core(cq.charges);
  return convert(f, Basis::p);
}

SymFunc ehat(const Partition& lam, int ell) {
  CoreQuotient cq = core_quotient(lam, ell);
  SymFunc f = SymFunc::monomial(ell, Basis::ehat, ehat_key(cq.quot));
  f.set_core(cq.charges);
  return convert(f, Basis::p);
}

Scalar trivial_coefficient(const SymFunc& f, int n) {
  int d = f.degree();
  if (d >= 0 && d != n) throw std::invalid_argument("non-homogeneous input");
  MultiPartition key(f.ell());
  if (n > 0) key[0] = {n};
  return convert(f, Basis::s).coeff(key);
}

std::string to_json(const SymFunc& f) {
  nlohmann::json j;
  j["ell"] = f.ell();
  j["basis"] = basis_name(f.basis());
  j["core"] = f.core() ? nlohmann::json(*f.core()) : nlohmann::json(nullptr);
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [k, c] : f.terms()) terms.push_back({k, c.str()});
  j["terms"] = terms;
  return j.dump();
}

SymFunc symfunc_from_json(const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text);
  SymFunc f(j.at("ell").get<int>(), parse_basis(j.at("basis").get<std::string>()));
  if (!j.at("core").is_null()) f.set_core(j.at("core").get<CoreVector>());
  for (const auto& t : j.at("terms")) {
    MultiPartition k = t.at(0).get<MultiPartition>();
    if (static_cast<int>(k.size()) != f.ell()) throw std::invalid_argument("multipartition length differs from ell");
    f.add_term(k, Scalar::parse(t.at(1).get<std::string>()));
  }
  return f;
}

}  // namespace wmac
