#include "wmac/macdonald.hpp"

#include <fcntl.h>
#include <sys/file.h>
#include <unistd.h>

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <mutex>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace wmac {

namespace {

using Coords = std::map<Partition, std::map<Partition, Scalar>>;

bool dominates(const Partition& mu, const Partition& lam) { return dominance_leq(lam, mu); }

// ehat_nu written in the hhat basis, re-indexed by cell members.
Coords ehat_in_hhat(const Cell& cell) {
  Partition core = core_from_charges(cell.core);
  Coords out;
  for (const Partition& nu : cell.members) {
    SymFunc hh = convert(ehat(nu, cell.ell), Basis::hhat);
    auto& row = out[nu];
    for (const auto& [key, c] : hh.terms()) row[combine(core, key, cell.ell)] = c;
  }
  return out;
}

struct System {
  std::vector<Partition> rows;
  std::vector<Partition> cols;
  ScalarMatrix a;
};

// Combinations of ehat_nu (nu <= lam) with no hhat_mu component for mu not >= lam.
System intersection_system(const Cell& cell, const Coords& coords, const Partition& lam) {
  System sys;
  for (const Partition& mu : cell.members) {
    if (!dominates(mu, lam)) sys.rows.push_back(mu);
    if (dominates(lam, mu)) sys.cols.push_back(mu);
  }
  for (const Partition& mu : sys.rows) {
    std::vector<Scalar> row;
    for (const Partition& nu : sys.cols) {
      const auto& c = coords.at(nu);
      auto it = c.find(mu);
      row.push_back(it == c.end() ? Scalar(0) : it->second);
    }
    sys.a.push_back(std::move(row));
  }
  return sys;
}

SymFunc solve_one(const Cell& cell, const Coords& coords, const Partition& lam) {
  System sys = intersection_system(cell, coords, lam);
  auto kernel = nullspace(sys.a, sys.cols.size());
  if (kernel.size() != 1)
    throw std::logic_error("intersection dimension != 1 for " + to_string(lam) + " (got " +
                           std::to_string(kernel.size()) + ")");
  SymFunc h(cell.ell, Basis::p);
  for (std::size_t k = 0; k < sys.cols.size(); ++k)
    if (!kernel[0][k].is_zero()) h += ehat(sys.cols[k], cell.ell).scaled(kernel[0][k]);
  Scalar triv = trivial_coefficient(h, cell.n);
  if (triv.is_zero()) throw std::logic_error("trivial coefficient is zero for " + to_string(lam));
  SymFunc out = h.scaled(triv.inverse());
  out.set_core(cell.core);
  return out;
}

std::string core_tag(const CoreVector& core) {
  std::ostringstream os;
  for (std::size_t i = 0; i < core.size(); ++i) os << (i ? "," : "") << core[i];
  return os.str();
}

std::optional<MacdonaldTable> load_cached(const std::string& path, const Cell& cell) {
  std::ifstream in(path);
  if (!in) return std::nullopt;
  std::stringstream buf;
  buf << in.rdbuf();
  try {
    MacdonaldTable t = table_from_json(buf.str());
    if (t.cell.ell != cell.ell || t.cell.core != cell.core || t.cell.n != cell.n || t.cell.members != cell.members)
      return std::nullopt;
    return t;
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

void store_cached(const std::string& path, const MacdonaldTable& table) {
  namespace fs = std::filesystem;
  fs::create_directories(fs::path(path).parent_path());
  std::string lock_path = path + ".lock";
  int fd = ::open(lock_path.c_str(), O_CREAT | O_RDWR, 0644);
  if (fd < 0) return;
  if (::flock(fd, LOCK_EX) == 0) {
    std::string tmp = path + ".tmp." + std::to_string(::getpid());
    {
      std::ofstream out(tmp);
      out << table_to_json(table) << "\n";
    }
    fs::rename(tmp, path);
    ::flock(fd, LOCK_UN);
  }
  ::close(fd);
}

}  // namespace

int Cell::index_of(const Partition& lam) const {
  auto it = std::find(members.begin(), members.end(), lam);
  return it == members.end() ? -1 : static_cast<int>(it - members.begin());
}

Cell enumerate_cell(const CoreVector& core, int n, int ell) {
  if (static_cast<int>(core.size()) != ell) throw std::invalid_argument("charge vector length differs from ell");
  int total = 0;
  for (int c : core) total += c;
  if (total != 0) throw std::invalid_argument("charges must sum to zero");
  Cell cell;
  cell.ell = ell;
  cell.core = core;
  cell.n = n;
  Partition base = core_from_charges(core);
  for (const MultiPartition& mp : multipartitions_of(n, ell)) cell.members.push_back(combine(base, mp, ell));
  std::sort(cell.members.begin(), cell.members.end(), std::greater<Partition>());
  return cell;
}

CacheOptions CacheOptions::from_env() {
  const char* env = std::getenv("WMAC_CACHE_DIR");
  return CacheOptions{env && *env ? std::string(env) : std::string("cache")};
}

std::string table_cache_path(const CacheOptions& cache, int ell, const CoreVector& core, int n) {
  return cache.root + "/ell-" + std::to_string(ell) + "/core-" + core_tag(core) + "/n-" + std::to_string(n) + ".json";
}

MacdonaldTable macdonald_table(const Cell& cell, const CacheOptions& cache) {
  std::string path;
  if (cache.enabled()) {
    path = table_cache_path(cache, cell.ell, cell.core, cell.n);
    if (auto hit = load_cached(path, cell)) return *hit;
  }
  MacdonaldTable table;
  table.cell = cell;
  Coords coords = ehat_in_hhat(cell);
  for (const Partition& lam : cell.members) table.polynomials.emplace(lam, solve_one(cell, coords, lam));
  if (cache.enabled()) store_cached(path, table);
  return table;
}

SymFunc wreath_macdonald(const Partition& lam, int ell, const CacheOptions& cache) {
  CoreQuotient cq = core_quotient(lam, ell);
  Cell cell = enumerate_cell(cq.charges, size(cq.quot), ell);
  if (cache.enabled()) return macdonald_table(cell, cache).polynomials.at(lam);
  return solve_one(cell, ehat_in_hhat(cell), lam);
}

int intersection_dimension_at(const Partition& lam, int ell, const Rational& s0, const Rational& w0) {
  CoreQuotient cq = core_quotient(lam, ell);
  Cell cell = enumerate_cell(cq.charges, size(cq.quot), ell);
  System sys = intersection_system(cell, ehat_in_hhat(cell), lam);
  return static_cast<int>(sys.cols.size() - rank_at(sys.a, sys.cols.size(), s0, w0));
}

std::string table_to_json(const MacdonaldTable& table) {
  nlohmann::json j;
  j["schema_version"] = kTableSchemaVersion;
  j["ell"] = table.cell.ell;
  j["core"] = table.cell.core;
  j["n"] = table.cell.n;
  j["members"] = table.cell.members;
  nlohmann::json polys = nlohmann::json::array();
  for (const Partition& lam : table.cell.members)
    polys.push_back({lam, nlohmann::json::parse(to_json(table.polynomials.at(lam)))});
  j["polynomials"] = polys;
  return j.dump();
}

MacdonaldTable table_from_json(const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text);
  if (j.at("schema_version").get<int>() != kTableSchemaVersion) throw std::invalid_argument("unsupported schema_version");
  MacdonaldTable t;
  t.cell.ell = j.at("ell").get<int>();
  t.cell.core = j.at("core").get<CoreVector>();
  t.cell.n = j.at("n").get<int>();
  t.cell.members = j.at("members").get<std::vector<Partition>>();
  for (const auto& entry : j.at("polynomials"))
    t.polynomials.emplace(entry.at(0).get<Partition>(), symfunc_from_json(entry.at(1).dump()));
  return t;
}

std::map<Partition, Scalar> expand_in_H(const SymFunc& f, const MacdonaldTable& table) {
  const Cell& cell = table.cell;
  if (f.ell() != cell.ell) throw std::invalid_argument("mismatched ell");
  SymFunc fp = convert(f, Basis::p);
  if (fp.is_zero()) return {};
  if (fp.core() && *fp.core() != cell.core) throw std::domain_error("not in span");
  for (const auto& [k, c] : fp.terms())
    if (size(k) != cell.n) throw std::domain_error("not in span");
  std::vector<MultiPartition> keys = multipartitions_of(cell.n, cell.ell);
  ScalarMatrix a(keys.size(), std::vector<Scalar>(cell.members.size()));
  std::vector<Scalar> b(keys.size());
  for (std::size_t r = 0; r < keys.size(); ++r) {
    for (std::size_t c = 0; c < cell.members.size(); ++c) a[r][c] = table.polynomials.at(cell.members[c]).coeff(keys[r]);
    b[r] = fp.coeff(keys[r]);
  }
  std::vector<Scalar> x;
  try {
    x = solve(a, b, cell.members.size());
  } catch (const std::domain_error&) {
    throw std::domain_error("not in span");
  }
  std::map<Partition, Scalar> out;
  for (std::size_t c = 0; c < x.size(); ++c)
    if (!x[c].is_zero()) out.emplace(cell.members[c], x[c]);
  return out;
}

ScalarMatrix bosonic_multiplication_matrix(Basis kind, int n, int p, const MacdonaldTable& source,
                                           const MacdonaldTable& target) {
  if (kind != Basis::hhat && kind != Basis::ehat) throw std::invalid_argument("kind must be hhat or ehat");
  if (target.cell.n != source.cell.n + n || target.cell.core != source.cell.core || target.cell.ell != source.cell.ell)
    throw std::invalid_argument("target cell does not match source cell plus degree");
  const int ell = source.cell.ell;
  SymFunc gen = convert(SymFunc::generator(ell, kind, n, p), Basis::p);
  ScalarMatrix out(target.cell.members.size(), std::vector<Scalar>(source.cell.members.size()));
  for (std::size_t c = 0; c < source.cell.members.size(); ++c) {
    SymFunc prod = multiply(gen, source.polynomials.at(source.cell.members[c]));
    prod.set_core(source.cell.core);
    for (const auto& [mu, x] : expand_in_H(prod, target)) out[target.cell.index_of(mu)][c] = x;
  }
  return out;
}

}  // namespace wmac
