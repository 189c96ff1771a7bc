#include "wmac/scalar.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <unordered_map>

namespace wmac {

namespace {

bool term_greater(const Poly2::Term& x, const Poly2::Term& y) {
  return x.a != y.a ? x.a > y.a : x.b > y.b;
}

std::uint64_t pack(int a, int b) {
  return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(a)) << 32) |
         static_cast<std::uint32_t>(b);
}

// Dense univariate polynomial over Z, index = degree.
using UPoly = std::vector<Int>;

void trim(UPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

int deg(const UPoly& p) { return static_cast<int>(p.size()) - 1; }

UPoly u_mul(const UPoly& x, const UPoly& y) {
  if (x.empty() || y.empty()) return {};
  UPoly r(x.size() + y.size() - 1, 0);
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; j < y.size(); ++j) r[i + j] += x[i] * y[j];
  }
  trim(r);
  return r;
}

UPoly u_sub(const UPoly& x, const UPoly& y) {
  UPoly r(std::max(x.size(), y.size()), 0);
  for (std::size_t i = 0; i < x.size(); ++i) r[i] = x[i];
  for (std::size_t i = 0; i < y.size(); ++i) r[i] -= y[i];
  trim(r);
  return r;
}

UPoly u_scale(const UPoly& x, const Int& c) {
  if (c == 0) return {};
  UPoly r = x;
  for (auto& v : r) v *= c;
  return r;
}

Int u_content(const UPoly& x) {
  Int g = 0;
  for (const auto& v : x) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

UPoly u_divint(const UPoly& x, const Int& c) {
  UPoly r = x;
  for (auto& v : r) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), c.get_mpz_t());
  return r;
}

UPoly u_pp(const UPoly& x) {
  if (x.empty()) return x;
  Int c = u_content(x);
  if (x.back() < 0) c = -c;
  return u_divint(x, c);
}

// Exact division in Z[x]; false when y does not divide x.
bool u_divexact(const UPoly& x, const UPoly& y, UPoly* q) {
  if (y.empty()) throw std::domain_error("division by zero polynomial");
  if (x.empty()) {
    q->clear();
    return true;
  }
  if (deg(x) < deg(y)) return false;
  UPoly r = x;
  UPoly out(x.size() - y.size() + 1, 0);
  const Int& lc = y.back();
  Int t;
  for (int k = deg(r); k >= deg(y); --k) {
    if (r[k] == 0) continue;
    if (!mpz_divisible_p(r[k].get_mpz_t(), lc.get_mpz_t())) return false;
    mpz_divexact(t.get_mpz_t(), r[k].get_mpz_t(), lc.get_mpz_t());
    out[k - deg(y)] = t;
    for (int j = 0; j <= deg(y); ++j) r[k - deg(y) + j] -= t * y[j];
  }
  for (const auto& v : r)
    if (v != 0) return false;
  trim(out);
  *q = std::move(out);
  return true;
}

UPoly u_prem(UPoly a, const UPoly& b) {
  const Int& lc = b.back();
  while (!a.empty() && deg(a) >= deg(b)) {
    Int la = a.back();
    int shift = deg(a) - deg(b);
    for (auto& v : a) v *= lc;
    for (int j = 0; j <= deg(b); ++j) a[shift + j] -= la * b[j];
    trim(a);
  }
  return a;
}

UPoly u_gcd_prs(UPoly a, UPoly b) {
  if (a.empty()) return u_pp(b);
  if (b.empty()) return u_pp(a);
  Int c = gcd(u_content(a), u_content(b));
  a = u_pp(a);
  b = u_pp(b);
  if (deg(a) < deg(b)) std::swap(a, b);
  while (!b.empty()) {
    UPoly r = u_prem(a, b);
    a = std::move(b);
    b = u_pp(r);
  }
  return u_scale(u_pp(a), c);
}

Int u_eval(const UPoly& p, const Int& x) {
  Int r = 0;
  for (int k = deg(p); k >= 0; --k) r = r * x + p[k];
  return r;
}

Int maxnorm(const UPoly& p) {
  Int m = 0;
  for (const auto& v : p)
    if (abs(v) > m) m = abs(v);
  return m;
}

// Symmetric xi-adic digits of v.
UPoly xi_adic(Int v, const Int& xi) {
  UPoly out;
  Int half = xi / 2;
  while (v != 0) {
    Int r;
    mpz_fdiv_r(r.get_mpz_t(), v.get_mpz_t(), xi.get_mpz_t());
    if (r > half) r -= xi;
    out.push_back(r);
    v = (v - r) / xi;
  }
  return out;
}

// Heuristic gcd of primitive univariate polynomials; falls back to PRS.
UPoly u_gcd(const UPoly& a0, const UPoly& b0) {
  if (a0.empty()) return u_pp(b0);
  if (b0.empty()) return u_pp(a0);
  Int c = gcd(u_content(a0), u_content(b0));
  UPoly a = u_pp(a0), b = u_pp(b0);
  if (deg(a) == 0 || deg(b) == 0) return UPoly{c};
  Int xi = 2 * std::min(maxnorm(a), maxnorm(b)) + 29;
  for (int attempt = 0; attempt < 6; ++attempt) {
    Int g = gcd(u_eval(a, xi), u_eval(b, xi));
    if (g != 0) {
      UPoly cand = u_pp(xi_adic(g, xi));
      UPoly tmp;
      if (!cand.empty() && u_divexact(a, cand, &tmp) && u_divexact(b, cand, &tmp))
        return u_scale(cand, c);
    }
    xi = xi * 73794 / 27011 + 1;
  }
  return u_scale(u_gcd_prs(a, b), c);
}

// Dense bivariate polynomial in Z[w][s]: index = s-degree, entries in Z[w].
using BPoly = std::vector<UPoly>;

void btrim(BPoly& p) {
  while (!p.empty() && p.back().empty()) p.pop_back();
}

BPoly to_dense(const Poly2& p) {
  BPoly out;
  if (p.is_zero()) return out;
  out.resize(p.max_a() + 1);
  for (const auto& t : p.terms()) {
    auto& row = out[t.a];
    if (static_cast<int>(row.size()) <= t.b) row.resize(t.b + 1, 0);
    row[t.b] = t.c;
  }
  return out;
}

Poly2 from_dense(const BPoly& p) {
  std::vector<Poly2::Term> terms;
  for (int a = static_cast<int>(p.size()) - 1; a >= 0; --a)
    for (int b = static_cast<int>(p[a].size()) - 1; b >= 0; --b)
      if (p[a][b] != 0) terms.push_back({a, b, p[a][b]});
  return Poly2::from_terms(std::move(terms));
}


bool b_divexact(const BPoly& x, const BPoly& y, BPoly* q) {
  if (y.empty()) throw std::domain_error("division by zero polynomial");
  if (x.empty()) {
    q->clear();
    return true;
  }
  int dy = static_cast<int>(y.size()) - 1;
  int dx = static_cast<int>(x.size()) - 1;
  if (dx < dy) return false;
  BPoly r = x;
  BPoly out(dx - dy + 1);
  for (int k = dx; k >= dy; --k) {
    if (r[k].empty()) continue;
    UPoly c;
    if (!u_divexact(r[k], y.back(), &c)) return false;
    for (int j = 0; j <= dy; ++j)
      if (!y[j].empty()) r[k - dy + j] = u_sub(r[k - dy + j], u_mul(c, y[j]));
    out[k - dy] = std::move(c);
  }
  for (const auto& v : r)
    if (!v.empty()) return false;
  btrim(out);
  *q = std::move(out);
  return true;
}

BPoly b_prem(BPoly a, const BPoly& b) {
  int db = static_cast<int>(b.size()) - 1;
  while (!a.empty() && static_cast<int>(a.size()) - 1 >= db) {
    UPoly la = a.back();
    int shift = static_cast<int>(a.size()) - 1 - db;
    for (auto& v : a) v = u_mul(v, b.back());
    for (int j = 0; j <= db; ++j) a[shift + j] = u_sub(a[shift + j], u_mul(la, b[j]));
    btrim(a);
  }
  return a;
}

UPoly b_content(const BPoly& p) {
  UPoly g;
  for (const auto& v : p) {
    if (v.empty()) continue;
    g = g.empty() ? u_pp(v) : u_gcd(g, v);
    if (g.size() == 1) break;
  }
  if (g.size() == 1) g[0] = 1;
  return g;
}

BPoly b_divcoef(const BPoly& p, const UPoly& c) {
  BPoly out(p.size());
  for (std::size_t k = 0; k < p.size(); ++k)
    if (!p[k].empty() && !u_divexact(p[k], c, &out[k]))
      throw std::logic_error("content division failed");
  return out;
}

BPoly b_pp(const BPoly& p) {
  if (p.empty()) return p;
  BPoly out = b_divcoef(p, b_content(p));
  if (out.back().back() < 0)
    for (auto& v : out) v = u_scale(v, -1);
  return out;
}

BPoly b_gcd_prs(BPoly a, BPoly b) {
  UPoly c = u_gcd(b_content(a), b_content(b));
  a = b_pp(a);
  b = b_pp(b);
  if (a.size() < b.size()) std::swap(a, b);
  while (!b.empty()) {
    BPoly r = b_prem(a, b);
    a = std::move(b);
    b = b_pp(r);
  }
  a = b_pp(a);
  for (auto& v : a) v = u_mul(v, c);
  return a;
}

Int poly_maxnorm(const Poly2& p) {
  Int m = 0;
  for (const auto& t : p.terms())
    if (abs(t.c) > m) m = abs(t.c);
  return m;
}

UPoly subs_w_dense(const Poly2& p, const Int& xi) {
  UPoly out;
  if (p.is_zero()) return out;
  out.assign(p.max_a() + 1, 0);
  for (const auto& t : p.terms()) {
    Int v;
    mpz_pow_ui(v.get_mpz_t(), xi.get_mpz_t(), t.b);
    out[t.a] += t.c * v;
  }
  trim(out);
  return out;
}

Poly2 poly_gcd_primitive(const Poly2& a, const Poly2& b) {
  BPoly da = to_dense(a), db = to_dense(b);
  Int xi = 2 * std::min(poly_maxnorm(a), poly_maxnorm(b)) + 29;
  for (int attempt = 0; attempt < 5; ++attempt) {
    UPoly ax = subs_w_dense(a, xi), bx = subs_w_dense(b, xi);
    if (deg(ax) == a.max_a() && deg(bx) == b.max_a()) {
      UPoly g = u_gcd(ax, bx);
      BPoly cand(g.size());
      for (std::size_t k = 0; k < g.size(); ++k) cand[k] = xi_adic(g[k], xi);
      btrim(cand);
      if (!cand.empty()) {
        Int cont = 0;
        for (const auto& v : cand) cont = gcd(cont, u_content(v));
        for (auto& v : cand) v = u_divint(v, cont);
        if (cand.back().back() < 0)
          for (auto& v : cand) v = u_scale(v, -1);
        BPoly tmp;
        if (b_divexact(da, cand, &tmp) && b_divexact(db, cand, &tmp)) return from_dense(cand);
      }
    }
    xi = xi * 73794 / 27011 + 1;
  }
  return from_dense(b_gcd_prs(da, db));
}

Rational rat_pow(const Rational& x, int e) {
  Rational base = x;
  if (e < 0) {
    if (base == 0) throw DegenerateSpecialization("negative power of zero");
    base = 1 / base;
    e = -e;
  }
  Rational r = 1;
  mpz_pow_ui(r.get_num_mpz_t(), base.get_num_mpz_t(), e);
  mpz_pow_ui(r.get_den_mpz_t(), base.get_den_mpz_t(), e);
  r.canonicalize();
  return r;
}

}  // namespace

Poly2::Poly2(long c) {
  if (c != 0) terms_.push_back({0, 0, Int(c)});
}

Poly2::Poly2(const Int& c) {
  if (c != 0) terms_.push_back({0, 0, c});
}

Poly2 Poly2::monomial(const Int& c, int a, int b) {
  Poly2 p;
  if (c != 0) p.terms_.push_back({a, b, c});
  return p;
}

Poly2 Poly2::from_terms(std::vector<Term> terms) {
  Poly2 p;
  p.terms_ = std::move(terms);
  p.normalize();
  return p;
}

void Poly2::normalize() {
  std::sort(terms_.begin(), terms_.end(), term_greater);
  std::size_t out = 0;
  for (std::size_t i = 0; i < terms_.size();) {
    std::size_t j = i + 1;
    Int c = terms_[i].c;
    while (j < terms_.size() && terms_[j].a == terms_[i].a && terms_[j].b == terms_[i].b)
      c += terms_[j++].c;
    if (c != 0) {
      terms_[out] = {terms_[i].a, terms_[i].b, c};
      ++out;
    }
    i = j;
  }
  terms_.resize(out);
}

bool Poly2::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].a == 0 && terms_[0].b == 0);
}

bool Poly2::is_one() const {
  return terms_.size() == 1 && terms_[0].a == 0 && terms_[0].b == 0 && terms_[0].c == 1;
}

int Poly2::min_a() const { return terms_.empty() ? 0 : terms_.back().a; }

int Poly2::max_a() const { return terms_.empty() ? 0 : terms_.front().a; }

int Poly2::min_b() const {
  int m = terms_.empty() ? 0 : terms_[0].b;
  for (const auto& t : terms_) m = std::min(m, t.b);
  return m;
}

int Poly2::max_b() const {
  int m = terms_.empty() ? 0 : terms_[0].b;
  for (const auto& t : terms_) m = std::max(m, t.b);
  return m;
}

Poly2 Poly2::operator-() const {
  Poly2 p = *this;
  for (auto& t : p.terms_) t.c = -t.c;
  return p;
}

namespace {

std::vector<Poly2::Term> merge_terms(const std::vector<Poly2::Term>& x,
                                     const std::vector<Poly2::Term>& y, bool subtract) {
  std::vector<Poly2::Term> out;
  out.reserve(x.size() + y.size());
  std::size_t i = 0, j = 0;
  while (i < x.size() || j < y.size()) {
    if (j == y.size() || (i < x.size() && term_greater(x[i], y[j]))) {
      out.push_back(x[i++]);
    } else if (i == x.size() || term_greater(y[j], x[i])) {
      out.push_back({y[j].a, y[j].b, subtract ? Int(-y[j].c) : y[j].c});
      ++j;
    } else {
      Int c = subtract ? Int(x[i].c - y[j].c) : Int(x[i].c + y[j].c);
      if (c != 0) out.push_back({x[i].a, x[i].b, c});
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

Poly2& Poly2::operator+=(const Poly2& o) {
  terms_ = merge_terms(terms_, o.terms_, false);
  return *this;
}

Poly2& Poly2::operator-=(const Poly2& o) {
  terms_ = merge_terms(terms_, o.terms_, true);
  return *this;
}

Poly2& Poly2::operator*=(const Poly2& o) {
  *this = *this * o;
  return *this;
}

Poly2 operator*(const Poly2& x, const Poly2& y) {
  if (x.is_zero() || y.is_zero()) return Poly2();
  if (x.is_monomial()) return y.shifted(x.lead().a, x.lead().b).scaled(x.lead().c);
  if (y.is_monomial()) return x.shifted(y.lead().a, y.lead().b).scaled(y.lead().c);
  std::unordered_map<std::uint64_t, std::size_t> index;
  std::vector<Poly2::Term> acc;
  acc.reserve(x.size() * y.size());
  index.reserve(x.size() * y.size());
  for (const auto& s : x.terms())
    for (const auto& t : y.terms()) {
      int a = s.a + t.a, b = s.b + t.b;
      auto [it, fresh] = index.emplace(pack(a, b), acc.size());
      if (fresh)
        acc.push_back({a, b, s.c * t.c});
      else
        acc[it->second].c += s.c * t.c;
    }
  return Poly2::from_terms(std::move(acc));
}

Poly2 Poly2::scaled(const Int& c) const {
  if (c == 0) return Poly2();
  Poly2 p = *this;
  for (auto& t : p.terms_) t.c *= c;
  return p;
}

Poly2 Poly2::shifted(int da, int db) const {
  Poly2 p = *this;
  for (auto& t : p.terms_) {
    t.a += da;
    t.b += db;
  }
  return p;
}

Poly2 Poly2::div_int(const Int& c) const {
  Poly2 p = *this;
  for (auto& t : p.terms_) {
    if (!mpz_divisible_p(t.c.get_mpz_t(), c.get_mpz_t()))
      throw std::logic_error("inexact integer division");
    mpz_divexact(t.c.get_mpz_t(), t.c.get_mpz_t(), c.get_mpz_t());
  }
  return p;
}

Int Poly2::content() const {
  Int g = 0;
  for (const auto& t : terms_) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), t.c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

Poly2 Poly2::pow(unsigned e) const {
  Poly2 r(1), base = *this;
  while (e) {
    if (e & 1u) r *= base;
    e >>= 1u;
    if (e) base *= base;
  }
  return r;
}

bool Poly2::divides_into(const Poly2& o, Poly2* quotient) const {
  // *this / o
  if (o.is_zero()) throw std::domain_error("division by zero polynomial");
  if (is_zero()) {
    *quotient = Poly2();
    return true;
  }
  if (o.is_monomial()) {
    const Term& m = o.lead();
    Poly2 q = shifted(-m.a, -m.b);
    for (auto& t : q.terms_) {
      if (!mpz_divisible_p(t.c.get_mpz_t(), m.c.get_mpz_t())) return false;
      mpz_divexact(t.c.get_mpz_t(), t.c.get_mpz_t(), m.c.get_mpz_t());
    }
    *quotient = std::move(q);
    return true;
  }
  int xa = min_a(), xb = min_b(), ya = o.min_a(), yb = o.min_b();
  BPoly q;
  if (!b_divexact(to_dense(shifted(-xa, -xb)), to_dense(o.shifted(-ya, -yb)), &q)) return false;
  *quotient = from_dense(q).shifted(xa - ya, xb - yb);
  return true;
}

Poly2 Poly2::exact_div(const Poly2& o) const {
  Poly2 q;
  if (!divides_into(o, &q)) throw std::logic_error("inexact polynomial division");
  return q;
}

Rational Poly2::eval(const Rational& s, const Rational& w) const {
  Rational r = 0;
  for (const auto& t : terms_) r += Rational(t.c) * rat_pow(s, t.a) * rat_pow(w, t.b);
  return r;
}

Poly2 Poly2::subs_w(const Int& w) const {
  std::vector<Term> out;
  for (const auto& t : terms_) {
    Int v;
    mpz_pow_ui(v.get_mpz_t(), w.get_mpz_t(), t.b);
    out.push_back({t.a, 0, t.c * v});
  }
  return from_terms(std::move(out));
}

std::size_t Poly2::hash() const {
  std::size_t h = terms_.size();
  for (const auto& t : terms_) {
    h = h * 31 + std::hash<std::uint64_t>()(pack(t.a, t.b));
    h = h * 31 + mpz_get_ui(t.c.get_mpz_t()) + (t.c < 0 ? 7 : 0);
  }
  return h;
}

bool operator==(const Poly2& x, const Poly2& y) {
  if (x.terms_.size() != y.terms_.size()) return false;
  for (std::size_t i = 0; i < x.terms_.size(); ++i) {
    const auto &s = x.terms_[i], &t = y.terms_[i];
    if (s.a != t.a || s.b != t.b || s.c != t.c) return false;
  }
  return true;
}

bool operator<(const Poly2& x, const Poly2& y) {
  if (x.terms_.size() != y.terms_.size()) return x.terms_.size() < y.terms_.size();
  for (std::size_t i = 0; i < x.terms_.size(); ++i) {
    const auto &s = x.terms_[i], &t = y.terms_[i];
    if (s.a != t.a) return s.a < t.a;
    if (s.b != t.b) return s.b < t.b;
    if (s.c != t.c) return s.c < t.c;
  }
  return false;
}

std::string Poly2::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    if (i) os << " + ";
    os << terms_[i].c.get_str() << "*s^" << terms_[i].a << "*w^" << terms_[i].b;
  }
  return os.str();
}

Poly2 Poly2::parse(const std::string& text) {
  std::vector<Term> out;
  std::string body;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) body += ch;
  if (body.empty() || body == "0") return Poly2();
  std::size_t pos = 0;
  while (pos < body.size()) {
    std::size_t next = body.find('+', pos);
    std::string piece = body.substr(pos, next == std::string::npos ? std::string::npos : next - pos);
    pos = next == std::string::npos ? body.size() : next + 1;
    std::size_t star_s = piece.find("*s^");
    std::size_t star_w = piece.find("*w^");
    if (star_s == std::string::npos || star_w == std::string::npos)
      throw std::invalid_argument("malformed term: " + piece);
    Term t;
    t.c = Int(piece.substr(0, star_s));
    t.a = std::stoi(piece.substr(star_s + 3, star_w - star_s - 3));
    t.b = std::stoi(piece.substr(star_w + 3));
    out.push_back(t);
  }
  return from_terms(std::move(out));
}

std::ostream& operator<<(std::ostream& os, const Poly2& x) { return os << x.str(); }

Poly2 poly_gcd(const Poly2& x, const Poly2& y) {
  if (x.is_zero()) return y.is_zero() ? Poly2() : (y.lead().c < 0 ? -y : y);
  if (y.is_zero()) return x.lead().c < 0 ? -x : x;
  Int c = gcd(x.content(), y.content());
  if (x.is_monomial() || y.is_monomial()) {
    const Poly2& m = x.is_monomial() ? x : y;
    const Poly2& o = x.is_monomial() ? y : x;
    int a = std::min(m.lead().a, o.min_a());
    int b = std::min(m.lead().b, o.min_b());
    return Poly2::monomial(c, a, b);
  }
  Poly2 xp = x.div_int(x.content()), yp = y.div_int(y.content());
  int a = std::min(xp.min_a(), yp.min_a()), b = std::min(xp.min_b(), yp.min_b());
  xp = xp.shifted(-xp.min_a(), -xp.min_b());
  yp = yp.shifted(-yp.min_a(), -yp.min_b());
  Poly2 g;
  Poly2 q;
  if (xp.size() <= yp.size() && yp.divides_into(xp, &q))
    g = xp;
  else if (yp.size() <= xp.size() && xp.divides_into(yp, &q))
    g = yp;
  else
    g = poly_gcd_primitive(xp, yp);
  if (g.lead().c < 0) g = -g;
  return g.shifted(a, b).scaled(c);
}

}  // namespace wmac
