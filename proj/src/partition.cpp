#include "wmac/partition.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <stdexcept>

namespace wmac {

int Node::color(int ell) const { return ((content() % ell) + ell) % ell; }

Scalar Node::character() const { return Scalar::qt(a - 1, b - 1); }

int size(const Partition& lam) {
  int s = 0;
  for (int v : lam) s += v;
  return s;
}

int size(const MultiPartition& lam) {
  int s = 0;
  for (const auto& p : lam) s += size(p);
  return s;
}

bool is_partition(const Partition& lam) {
  for (std::size_t i = 0; i < lam.size(); ++i) {
    if (lam[i] <= 0) return false;
    if (i > 0 && lam[i] > lam[i - 1]) return false;
  }
  return true;
}

Partition transpose(const Partition& lam) {
  Partition out;
  if (lam.empty()) return out;
  for (int a = 1; a <= lam[0]; ++a) {
    int len = 0;
    while (len < static_cast<int>(lam.size()) && lam[len] >= a) ++len;
    out.push_back(len);
  }
  return out;
}

bool contains(const Partition& lam, const Node& n) {
  return n.a >= 1 && n.b >= 1 && n.b <= static_cast<int>(lam.size()) && n.a <= lam[n.b - 1];
}

bool contains(const Partition& big, const Partition& small) {
  if (small.size() > big.size()) return false;
  for (std::size_t i = 0; i < small.size(); ++i)
    if (small[i] > big[i]) return false;
  return true;
}

Partition add_node(const Partition& lam, const Node& n) {
  Partition out = lam;
  if (n.b == static_cast<int>(out.size()) + 1 && n.a == 1) {
    out.push_back(1);
  } else if (n.b <= static_cast<int>(out.size()) && out[n.b - 1] + 1 == n.a) {
    out[n.b - 1] += 1;
  } else {
    throw std::invalid_argument("node is not addable");
  }
  if (!is_partition(out)) throw std::invalid_argument("node is not addable");
  return out;
}

Partition remove_node(const Partition& lam, const Node& n) {
  if (!contains(lam, n) || lam[n.b - 1] != n.a) throw std::invalid_argument("node is not removable");
  Partition out = lam;
  out[n.b - 1] -= 1;
  if (out.back() == 0) out.pop_back();
  if (!is_partition(out)) throw std::invalid_argument("node is not removable");
  return out;
}

std::vector<Node> nodes(const Partition& lam) {
  std::vector<Node> out;
  for (int b = 1; b <= static_cast<int>(lam.size()); ++b)
    for (int a = 1; a <= lam[b - 1]; ++a) out.push_back({a, b});
  return out;
}

std::vector<Node> skew_nodes(const Partition& big, const Partition& small) {
  if (!contains(big, small)) throw std::invalid_argument("not a skew shape");
  std::vector<Node> out;
  for (int b = 1; b <= static_cast<int>(big.size()); ++b) {
    int start = b <= static_cast<int>(small.size()) ? small[b - 1] : 0;
    for (int a = start + 1; a <= big[b - 1]; ++a) out.push_back({a, b});
  }
  std::sort(out.begin(), out.end());
  return out;
}

int arm(const Partition& lam, const Node& n) { return lam[n.b - 1] - n.a; }

int leg(const Partition& lam, const Node& n) {
  int len = 0;
  while (len < static_cast<int>(lam.size()) && lam[len] >= n.a) ++len;
  return len - n.b;
}

int hook(const Partition& lam, const Node& n) { return arm(lam, n) + leg(lam, n) + 1; }

bool dominance_leq(const Partition& mu, const Partition& lam) {
  if (size(mu) != size(lam)) return false;
  int sm = 0, sl = 0;
  for (std::size_t i = 0; i < std::max(mu.size(), lam.size()); ++i) {
    sm += i < mu.size() ? mu[i] : 0;
    sl += i < lam.size() ? lam[i] : 0;
    if (sm > sl) return false;
  }
  return true;
}

std::vector<Partition> partitions_of(int n) {
  std::vector<Partition> out;
  Partition cur;
  std::function<void(int, int)> rec = [&](int left, int maxpart) {
    if (left == 0) {
      out.push_back(cur);
      return;
    }
    for (int k = std::min(left, maxpart); k >= 1; --k) {
      cur.push_back(k);
      rec(left - k, k);
      cur.pop_back();
    }
  };
  rec(n, n);
  return out;
}

std::vector<MultiPartition> multipartitions_of(int n, int ell) {
  std::vector<MultiPartition> out;
  MultiPartition cur(ell);
  std::function<void(int, int)> rec = [&](int comp, int left) {
    if (comp == ell - 1) {
      for (const auto& p : partitions_of(left)) {
        cur[comp] = p;
        out.push_back(cur);
      }
      return;
    }
    for (int k = left; k >= 0; --k)
      for (const auto& p : partitions_of(k)) {
        cur[comp] = p;
        rec(comp + 1, left - k);
      }
  };
  if (ell == 0) return out;
  rec(0, n);
  return out;
}

int MayaDiagram::value(int j) const {
  if (j >= 0) return black.count(j) ? 1 : -1;
  return white.count(j) ? -1 : 1;
}

namespace {

// Number of nodes of each content, keyed by content.
std::map<int, int> diagonal_counts(const Partition& lam) {
  std::map<int, int> n;
  for (const auto& nd : nodes(lam)) n[nd.content()] += 1;
  return n;
}

int lookup(const std::map<int, int>& m, int k) {
  auto it = m.find(k);
  return it == m.end() ? 0 : it->second;
}

}  // namespace

MayaDiagram to_maya(const Partition& lam) {
  MayaDiagram m;
  auto n = diagonal_counts(lam);
  int rows = static_cast<int>(lam.size());
  int cols = lam.empty() ? 0 : lam[0];
  for (int j = 0; j <= rows; ++j)
    if (lookup(n, j + 1) - lookup(n, j) == -1) m.black.insert(j);
  for (int j = -cols - 1; j < 0; ++j)
    if (lookup(n, j + 1) - lookup(n, j) == 1) m.white.insert(j);
  return m;
}

Partition from_maya(const MayaDiagram& m) {
  if (m.charge() != 0) throw std::invalid_argument("not a charge-zero diagram");
  int lo = m.white.empty() ? 0 : *m.white.begin();
  int hi = m.black.empty() ? 0 : *m.black.rbegin();
  std::map<int, int> n;
  for (int j = 0; j <= hi; ++j)
    n[j] = static_cast<int>(std::distance(m.black.lower_bound(j), m.black.end()));
  int n0 = static_cast<int>(m.black.size());
  for (int j = -1; j >= lo; --j)
    n[j] = n0 - static_cast<int>(std::distance(m.white.lower_bound(j), m.white.end()));
  std::map<int, int> rows;
  for (const auto& [j, cnt] : n) {
    int first = j >= 0 ? 1 : 1 - j;
    for (int a = first; a < first + cnt; ++a) rows[a + j] += 1;
  }
  Partition out;
  for (int b = 1; rows.count(b); ++b) out.push_back(rows[b]);
  if (!is_partition(out) || size(out) != [&] {
        int s = 0;
        for (const auto& kv : n) s += kv.second;
        return s;
      }())
    throw std::logic_error("malformed Maya diagram");
  return out;
}

MayaDiagram shift_maya(const MayaDiagram& m, int d) {
  int k = std::abs(d) + 2;
  for (int j : m.black) k = std::max(k, std::abs(j) + std::abs(d) + 2);
  for (int j : m.white) k = std::max(k, std::abs(j) + std::abs(d) + 2);
  MayaDiagram out;
  for (int j = -k; j <= k; ++j) {
    int v = m.value(j + d);
    if (j >= 0 && v == 1) out.black.insert(j);
    if (j < 0 && v == -1) out.white.insert(j);
  }
  return out;
}

namespace {

// Subdiagram j -> m(i + j ell).
MayaDiagram sub_maya(const MayaDiagram& m, int i, int ell) {
  MayaDiagram out;
  for (int j : m.black)
    if (((j % ell) + ell) % ell == i) out.black.insert((j - i) / ell);
  for (int j : m.white)
    if (((j % ell) + ell) % ell == i) out.white.insert((j - i) / ell);
  return out;
}

// Inverse of sub_maya over all colors.
MayaDiagram interleave(const std::vector<MayaDiagram>& subs, int ell) {
  MayaDiagram out;
  for (int i = 0; i < ell; ++i) {
    for (int j : subs[i].black) out.black.insert(i + j * ell);
    for (int j : subs[i].white) out.white.insert(i + j * ell);
  }
  return out;
}

}  // namespace

CoreQuotient core_quotient(const Partition& lam, int ell) {
  if (ell < 1) throw std::invalid_argument("ell must be positive");
  CoreQuotient cq;
  MayaDiagram m = to_maya(lam);
  for (int i = 0; i < ell; ++i) {
    MayaDiagram mi = sub_maya(m, i, ell);
    int c = mi.charge();
    cq.charges.push_back(c);
    cq.quot.push_back(from_maya(shift_maya(mi, -c)));
  }
  cq.core = core_from_charges(cq.charges);
  return cq;
}

Partition core_from_charges(const std::vector<int>& charges) {
  int ell = static_cast<int>(charges.size());
  int total = 0;
  for (int c : charges) total += c;
  if (total != 0) throw std::invalid_argument("charges must sum to zero");
  std::vector<MayaDiagram> subs(ell);
  for (int i = 0; i < ell; ++i) subs[i] = shift_maya(MayaDiagram{}, charges[i]);
  return from_maya(interleave(subs, ell));
}

bool is_core(const Partition& lam, int ell) {
  for (const auto& nd : nodes(lam))
    if (hook(lam, nd) % ell == 0) return false;
  return true;
}

Partition combine(const Partition& core, const MultiPartition& quot, int ell) {
  if (static_cast<int>(quot.size()) != ell) throw std::invalid_argument("quotient length must equal ell");
  if (!is_core(core, ell)) throw std::invalid_argument("not a core");
  CoreQuotient cq = core_quotient(core, ell);
  std::vector<MayaDiagram> subs(ell);
  for (int i = 0; i < ell; ++i) subs[i] = shift_maya(to_maya(quot[i]), cq.charges[i]);
  return from_maya(interleave(subs, ell));
}

std::vector<Node> addable_nodes(const Partition& lam) {
  std::vector<Node> out;
  int rows = static_cast<int>(lam.size());
  for (int b = 1; b <= rows + 1; ++b) {
    int len = b <= rows ? lam[b - 1] : 0;
    int above_prev = b == 1 ? 1 << 30 : lam[b - 2];
    if (len + 1 <= above_prev) out.push_back({len + 1, b});
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Node> removable_nodes(const Partition& lam) {
  std::vector<Node> out;
  int rows = static_cast<int>(lam.size());
  for (int b = 1; b <= rows; ++b) {
    int next = b < rows ? lam[b] : 0;
    if (lam[b - 1] > next) out.push_back({lam[b - 1], b});
  }
  std::sort(out.begin(), out.end());
  return out;
}

Corners corners(const Partition& lam, int ell, int i) {
  Corners c;
  for (const auto& n : addable_nodes(lam))
    if (n.color(ell) == i) c.addable.push_back(n);
  for (const auto& n : removable_nodes(lam))
    if (n.color(ell) == i) c.removable.push_back(n);
  return c;
}

bool leq_ell(const Partition& mu, const Partition& lam, int ell) {
  if (size(mu) != size(lam)) return false;
  if (!dominance_leq(mu, lam)) return false;
  return core_quotient(mu, ell).core == core_quotient(lam, ell).core;
}

bool is_rim_strip(const Partition& big, const Partition& small) {
  std::vector<Node> s = skew_nodes(big, small);
  if (s.empty()) return false;
  for (std::size_t k = 1; k < s.size(); ++k)
    if (s[k].content() != s[k - 1].content() + 1) return false;
  return true;
}

namespace {

std::vector<StripStep> strip_order(const Partition& lam, int ell, bool columns) {
  CoreQuotient cq = core_quotient(lam, ell);
  std::vector<std::vector<int>> pieces(ell);
  for (int i = 0; i < ell; ++i) pieces[i] = columns ? transpose(cq.quot[i]) : cq.quot[i];
  std::size_t total = 0;
  for (const auto& p : pieces) total += p.size();

  std::vector<int> used(ell, 0);
  std::vector<StripStep> cur, found;
  int solutions = 0;
  std::function<void(const Partition&)> rec = [&](const Partition& base) {
    if (cur.size() == total) {
      if (++solutions == 1) found = cur;
      return;
    }
    for (int p = 0; p < ell; ++p) {
      if (used[p] == static_cast<int>(pieces[p].size())) continue;
      MultiPartition quot(ell);
      for (int i = 0; i < ell; ++i) {
        int k = used[i] + (i == p ? 1 : 0);
        std::vector<int> prefix(pieces[i].begin(), pieces[i].begin() + k);
        quot[i] = columns ? transpose(prefix) : prefix;
      }
      Partition next = combine(cq.core, quot, ell);
      std::vector<Node> strip = skew_nodes(next, base);
      StripStep st{p, pieces[p][used[p]], base, next, strip.back().content(), strip.front().content()};
      bool ok = true;
      for (const auto& prev : cur) {
        if (columns && !(prev.initial_content > st.initial_content)) ok = false;
        if (!columns && !(prev.final_content < st.final_content)) ok = false;
      }
      if (!ok) continue;
      if (!is_rim_strip(next, base) || static_cast<int>(strip.size()) != st.length * ell)
        throw std::logic_error("quotient addition is not a strip");
      if (strip.back().color(ell) != p) throw std::logic_error("strip starts at the wrong color");
      used[p] += 1;
      cur.push_back(st);
      rec(next);
      cur.pop_back();
      used[p] -= 1;
    }
  };
  rec(cq.core);
  if (solutions != 1)
    throw std::logic_error("strip order is not unique for " + to_string(lam) + ": " +
                           std::to_string(solutions) + " candidates");
  return found;
}

}  // namespace

std::vector<StripStep> column_order(const Partition& lam, int ell) { return strip_order(lam, ell, true); }

std::vector<StripStep> row_order(const Partition& lam, int ell) { return strip_order(lam, ell, false); }

bool has_horizontal_pair(const std::vector<Node>& added, int p, int ell) {
  for (const auto& x : added)
    for (const auto& y : added)
      if (y.b == x.b && y.a == x.a + 1 && x.color(ell) == (p + 1) % ell && y.color(ell) == p) return true;
  return false;
}

bool has_vertical_pair(const std::vector<Node>& added, int p, int ell) {
  for (const auto& x : added)
    for (const auto& y : added)
      if (y.a == x.a && y.b == x.b + 1 && x.color(ell) == p && y.color(ell) == (p + 1) % ell) return true;
  return false;
}

std::string to_string(const Partition& lam) {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < lam.size(); ++i) os << (i ? "," : "") << lam[i];
  os << ")";
  return os.str();
}

std::string to_string(const MultiPartition& lam) {
  std::string out = "[";
  for (std::size_t i = 0; i < lam.size(); ++i) out += (i ? "," : "") + to_string(lam[i]);
  return out + "]";
}

Partition parse_partition(const std::string& text) {
  Partition out;
  std::string cur;
  for (char ch : text + ",") {
    if (ch >= '0' && ch <= '9') {
      cur += ch;
    } else if (ch == ',' || ch == ')' || ch == ' ') {
      if (!cur.empty()) {
        int v = std::stoi(cur);
        if (v > 0) out.push_back(v);
        cur.clear();
      }
    } else if (ch != '(') {
      throw std::invalid_argument("malformed partition: " + text);
    }
  }
  if (!is_partition(out)) throw std::invalid_argument("parts must be weakly decreasing: " + text);
  return out;
}

}  // namespace wmac
