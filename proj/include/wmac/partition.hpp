#pragma once

#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "wmac/scalar.hpp"

namespace wmac {

// Weakly decreasing positive parts. Row b (1-based) has parts[b-1] nodes.
using Partition = std::vector<int>;
// ell partitions, component i holds lambda^i.
using MultiPartition = std::vector<Partition>;

// Node (a, b): column a, row b, 1 <= a <= lambda_b. Content b - a.
struct Node {
  int a;
  int b;
  int content() const { return b - a; }
  int color(int ell) const;
  // q^{a-1} t^{b-1}
  Scalar character() const;
  friend bool operator==(const Node& x, const Node& y) { return x.a == y.a && x.b == y.b; }
  friend bool operator<(const Node& x, const Node& y) {
    return x.content() != y.content() ? x.content() < y.content() : x.a < y.a;
  }
};

int size(const Partition& lam);
int size(const MultiPartition& lam);
bool is_partition(const Partition& lam);
Partition transpose(const Partition& lam);
bool contains(const Partition& lam, const Node& n);
bool contains(const Partition& big, const Partition& small);
Partition add_node(const Partition& lam, const Node& n);
Partition remove_node(const Partition& lam, const Node& n);
std::vector<Node> nodes(const Partition& lam);
// Nodes of big not in small, sorted by content.
std::vector<Node> skew_nodes(const Partition& big, const Partition& small);

int arm(const Partition& lam, const Node& n);
int leg(const Partition& lam, const Node& n);
int hook(const Partition& lam, const Node& n);

bool dominance_leq(const Partition& mu, const Partition& lam);

// All partitions of n, reverse lexicographic.
std::vector<Partition> partitions_of(int n);
// All ell-multipartitions of total size n.
std::vector<MultiPartition> multipartitions_of(int n, int ell);

// Charge-zero Maya diagrams are the Young diagrams; general ones carry charge.
struct MayaDiagram {
  std::set<int> black;  // j >= 0 with m(j) = 1
  std::set<int> white;  // j < 0 with m(j) = -1
  int charge() const { return static_cast<int>(white.size()) - static_cast<int>(black.size()); }
  // m(j) as +1 or -1
  int value(int j) const;
  friend bool operator==(const MayaDiagram& x, const MayaDiagram& y) {
    return x.black == y.black && x.white == y.white;
  }
};

MayaDiagram to_maya(const Partition& lam);
Partition from_maya(const MayaDiagram& m);
// j -> m(j + d)
MayaDiagram shift_maya(const MayaDiagram& m, int d);

struct CoreQuotient {
  Partition core;
  std::vector<int> charges;
  MultiPartition quot;
};

CoreQuotient core_quotient(const Partition& lam, int ell);
Partition combine(const Partition& core, const MultiPartition& quot, int ell);
Partition core_from_charges(const std::vector<int>& charges);
bool is_core(const Partition& lam, int ell);

struct Corners {
  std::vector<Node> addable;
  std::vector<Node> removable;
};
// Addable and removable nodes of color i, sorted by content.
Corners corners(const Partition& lam, int ell, int i);
std::vector<Node> addable_nodes(const Partition& lam);
std::vector<Node> removable_nodes(const Partition& lam);

bool leq_ell(const Partition& mu, const Partition& lam, int ell);

// One step of building lambda from its core.
struct StripStep {
  int component;  // p
  int length;     // n
  Partition before;
  Partition after;
  int initial_content;  // northwestern-most node
  int final_content;    // southeastern-most node
};

// Column additions in left-to-right order, rows in right-to-left order.
std::vector<StripStep> column_order(const Partition& lam, int ell);
std::vector<StripStep> row_order(const Partition& lam, int ell);
// True if big/small is a connected rim strip (no 2x2 block).
bool is_rim_strip(const Partition& big, const Partition& small);

// Added nodes containing a horizontally adjacent pair, (p+1)-node left of a p-node.
bool has_horizontal_pair(const std::vector<Node>& added, int p, int ell);
// Added nodes containing a vertically adjacent pair, (p+1)-node above a p-node.
bool has_vertical_pair(const std::vector<Node>& added, int p, int ell);

std::string to_string(const Partition& lam);
std::string to_string(const MultiPartition& lam);
Partition parse_partition(const std::string& text);

}  // namespace wmac
