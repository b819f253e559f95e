#ifndef HOOKFUSION_RIBBON_HPP
#define HOOKFUSION_RIBBON_HPP

#include <optional>
#include <queue>
#include <set>
#include <string>
#include <vector>

#include "hookfusion/fusion.hpp"

namespace hookfusion {

// A tableau with equality-edges between row- or column-adjacent boxes.
// Connected boxes share a spectral parameter; everything else stays
// generic.  The edge set is what the validity taxonomy classifies.
class ConnectionDiagram {
 public:
  using Edge = std::pair<Box, Box>;

  ConnectionDiagram() = default;
  explicit ConnectionDiagram(StandardTableau t) : tableau_(std::move(t)) {}
  ConnectionDiagram(StandardTableau t, const std::vector<Edge>& edges)
      : tableau_(std::move(t)) {
    for (const Edge& e : edges) add_edge(e.first, e.second);
  }

  const StandardTableau& tableau() const { return tableau_; }
  const std::set<Edge>& edges() const { return edges_; }

  static Edge make_edge(Box a, Box b) {
    if (b < a) std::swap(a, b);
    return {a, b};
  }

  bool valid_edge(const Box& a, const Box& b) const {
    if (!tableau_.shape().has_box(a.row, a.col)) return false;
    if (!tableau_.shape().has_box(b.row, b.col)) return false;
    const bool row_adj = a.row == b.row && std::abs(a.col - b.col) == 1;
    const bool col_adj = a.col == b.col && std::abs(a.row - b.row) == 1;
    return row_adj || col_adj;
  }
  void add_edge(const Box& a, const Box& b) {
    if (!valid_edge(a, b))
      throw std::invalid_argument("edge must join row- or column-adjacent boxes");
    edges_.insert(make_edge(a, b));
  }
  void remove_edge(const Box& a, const Box& b) { edges_.erase(make_edge(a, b)); }
  bool has_edge(const Box& a, const Box& b) const {
    return edges_.count(make_edge(a, b)) > 0;
  }
  ConnectionDiagram with_toggled(const Edge& e) const {
    ConnectionDiagram d = *this;
    if (d.edges_.count(e)) d.edges_.erase(e);
    else d.edges_.insert(e);
    return d;
  }

  // First-row boxes right of lambda_2 and first-column boxes below
  // lambda'_2 may be connected freely; such edges touch no singularity
  // square at any degree.
  bool is_free_edge(const Edge& e) const {
    const Partition& sh = tableau_.shape();
    const auto& [a, b] = e;
    if (a.row == 1 && b.row == 1)
      return std::min(a.col, b.col) > sh.part(2);
    if (a.col == 1 && b.col == 1)
      return std::min(a.row, b.row) > sh.conjugate().part(2);
    return false;
  }
  ConnectionDiagram normalized() const {
    ConnectionDiagram d(tableau_);
    for (const Edge& e : edges_)
      if (!is_free_edge(e)) d.edges_.insert(e);
    return d;
  }

  // Equality-groups of the entries: connected components of the edge set.
  std::vector<int> entry_groups() const {
    const int n = tableau_.n();
    std::vector<int> parent(n + 1);
    for (int i = 0; i <= n; ++i) parent[i] = i;
    auto find = [&](int x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    for (const auto& [a, b] : edges_) {
      int ra = find(tableau_.entry(a)), rb = find(tableau_.entry(b));
      if (ra != rb) parent[std::max(ra, rb)] = std::min(ra, rb);
    }
    std::vector<int> labels(n);
    for (int k = 1; k <= n; ++k) labels[k - 1] = find(k);
    return labels;
  }

  // Every edge the shape supports, row-major.
  static std::vector<Edge> all_edges(const Partition& shape) {
    std::vector<Edge> out;
    for (int i = 1; i <= shape.rows(); ++i)
      for (int j = 1; j <= shape.part(i); ++j) {
        if (shape.has_box(i, j + 1)) out.push_back({Box{i, j}, Box{i, j + 1}});
        if (shape.has_box(i + 1, j)) out.push_back({Box{i, j}, Box{i + 1, j}});
      }
    return out;
  }

  bool operator==(const ConnectionDiagram& o) const {
    return tableau_ == o.tableau_ && edges_ == o.edges_;
  }

 private:
  StandardTableau tableau_;
  std::set<Edge> edges_;
};

// ---- the 0..15 square taxonomy ---------------------------------------

// Edges of a (superimposed) 2x2 square: left vertical, top horizontal,
// bottom horizontal, right vertical.
enum SquareEdgeBit { kLV = 1, kTH = 2, kBH = 4, kRV = 8 };

// Edge masks of the types 0..15 in the order they are numbered.
constexpr int kTypeMask[16] = {
    kLV | kRV,              // 0: both verticals
    kLV,                    // 1
    kLV | kTH,              // 2
    kTH,                    // 3
    kTH | kBH,              // 4: both horizontals
    kBH,                    // 5
    kBH | kRV,              // 6
    kRV,                    // 7
    kTH | kRV,              // 8
    kLV | kBH,              // 9
    kLV | kBH | kTH,        // 10
    kLV | kRV | kTH,        // 11
    kRV | kBH | kTH,        // 12
    kLV | kRV | kBH,        // 13
    kLV | kRV | kBH | kTH,  // 14
    0,                      // 15: no edges
};

inline int type_from_mask(int mask) {
  for (int t = 0; t < 16; ++t)
    if (kTypeMask[t] == mask) return t;
  throw std::logic_error("unreachable: bad mask");
}

// Same-diagonal entry pair: q sits `degree` steps down-right of p.
struct SingularityDescriptor {
  int p = 0, q = 0;   // entries
  int degree = 0;
  Box top;            // box of p

  bool operator==(const SingularityDescriptor& o) const {
    return p == o.p && q == o.q && degree == o.degree;
  }
};

inline std::vector<SingularityDescriptor> enumerate_singularities(
    const ConnectionDiagram& d) {
  const StandardTableau& t = d.tableau();
  const Partition& sh = t.shape();
  std::vector<SingularityDescriptor> out;
  for (int r = 1;; ++r) {
    bool any = false;
    for (int i = 1; i <= sh.rows(); ++i)
      for (int j = 1; j <= sh.part(i); ++j)
        if (sh.has_box(i + r, j + r)) {
          any = true;
          out.push_back({t.entry(i, j), t.entry(i + r, j + r), r, Box{i, j}});
        }
    if (!any) break;
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    if (a.degree != b.degree) return a.degree < b.degree;
    return a.top < b.top;
  });
  return out;
}

// Type of the square obtained by superimposing the box below p with the
// box left of q, and the box right of p with the box above q.
inline int classify_square(const ConnectionDiagram& d, const SingularityDescriptor& s) {
  const int i = s.top.row, j = s.top.col, r = s.degree;
  int mask = 0;
  if (d.has_edge(Box{i, j}, Box{i + 1, j})) mask |= kLV;
  if (d.has_edge(Box{i, j}, Box{i, j + 1})) mask |= kTH;
  if (d.has_edge(Box{i + r, j + r - 1}, Box{i + r, j + r})) mask |= kBH;
  if (d.has_edge(Box{i + r - 1, j + r}, Box{i + r, j + r})) mask |= kRV;
  return type_from_mask(mask);
}

// ---- validity ----------------------------------------------------------

struct Verdict {
  bool valid = true;
  std::string reason;  // first violated clause, empty when valid
};

namespace detail {

// Connector squares pass a chain through two sides, end squares carry one
// side.  Sides: L, R, T, B encoded as bits.
enum SideBit { kSideL = 1, kSideR = 2, kSideT = 4, kSideB = 8 };

inline int ports_of_type(int type) {
  switch (type) {
    case 3: return kSideR;
    case 5: return kSideL;
    case 1: return kSideB;
    case 7: return kSideT;
    case 0: return kSideT | kSideB;
    case 4: return kSideL | kSideR;
    case 2: return kSideB | kSideR;
    case 6: return kSideL | kSideT;
    default: return 0;
  }
}
inline bool is_union_end(int type) {
  return type == 1 || type == 3 || type == 5 || type == 7;
}
inline bool is_union_connector(int type) {
  return type == 0 || type == 2 || type == 4 || type == 6;
}

// Types allowed immediately diagonally below-right of each type.
inline const std::set<int>& diagonal_allowed(int type) {
  static const std::set<int> tbl[8] = {
      {5, 6, 7, 0, 1},           // below 0
      {0, 1, 2, 3, 4, 5, 6, 7},  // below 1
      {0, 1, 2, 3, 4, 5, 6, 7},  // below 2
      {0, 1, 2, 3, 4, 5, 6, 7},  // below 3
      {3, 4, 5, 6, 7},           // below 4
      {4, 5, 6, 7},              // below 5
      {5, 6, 7},                 // below 6
      {5, 6, 7, 0},              // below 7
  };
  return tbl[type];
}

struct SquareGrid {
  // per degree: map from p-box to square type
  std::map<int, std::map<Box, int>> by_degree;
};

inline SquareGrid grid_of(const ConnectionDiagram& d) {
  SquareGrid g;
  for (const SingularityDescriptor& s : enumerate_singularities(d))
    g.by_degree[s.degree][s.top] = classify_square(d, s);
  return g;
}

// Walks the union chain leaving an end square; returns the terminal end
// type if the walk completes an excluded union.
inline std::optional<std::string> walk_union(const std::map<Box, int>& squares,
                                             Box at, int degree) {
  const int start_type = squares.at(at);
  // 3 exits right, 7 exits top
  int exit_side = (start_type == 3) ? kSideR : kSideT;
  std::string trail = std::to_string(start_type);
  while (true) {
    Box next = at;
    int enter_side;
    if (exit_side == kSideR) { next.col += 1; enter_side = kSideL; }
    else { next.row -= 1; enter_side = kSideB; }
    auto it = squares.find(next);
    if (it == squares.end()) return std::nullopt;
    const int type = it->second;
    trail += "-" + std::to_string(type);
    if (is_union_end(type)) {
      if (ports_of_type(type) == enter_side)
        return "excluded union " + trail + " at degree " + std::to_string(degree);
      return std::nullopt;
    }
    if (!is_union_connector(type)) return std::nullopt;
    const int ports = ports_of_type(type);
    if (!(ports & enter_side)) return std::nullopt;
    exit_side = ports & ~enter_side;
    at = next;
  }
}

}  // namespace detail

// Definition of validity: no 2x2 square of type 8..15, no excluded union
// of any degree, no singularity of type 15 of any degree, and the
// diagonal adjacency table for 2x2 squares.
inline Verdict validity_check(const ConnectionDiagram& d) {
  detail::SquareGrid grid = detail::grid_of(d);

  // (i) 2x2 squares must be of type 0..7
  if (grid.by_degree.count(1))
    for (const auto& [box, type] : grid.by_degree.at(1))
      if (type >= 8)
        return {false, "square of type " + std::to_string(type) + " at (" +
                           std::to_string(box.row) + "," + std::to_string(box.col) + ")"};

  // (iii) no type-15 singularity of any degree
  for (const auto& [degree, squares] : grid.by_degree)
    for (const auto& [box, type] : squares)
      if (type == 15)
        return {false, "type-15 singularity of degree " + std::to_string(degree) +
                           " at (" + std::to_string(box.row) + "," +
                           std::to_string(box.col) + ")"};

  // (ii) excluded unions: chains from a 3 (rightwards) or a 7 (upwards)
  // through 0/4/2/6 connectors into a 5 (from its left) or a 1 (from
  // below), at every degree
  for (const auto& [degree, squares] : grid.by_degree)
    for (const auto& [box, type] : squares)
      if (type == 3 || type == 7)
        if (auto hit = detail::walk_union(squares, box, degree))
          return {false, *hit};

  // diagonal adjacency of 2x2 squares
  if (grid.by_degree.count(1)) {
    const auto& squares = grid.by_degree.at(1);
    for (const auto& [box, type] : squares) {
      auto below = squares.find(Box{box.row + 1, box.col + 1});
      if (below == squares.end()) continue;
      if (!detail::diagonal_allowed(type).count(below->second))
        return {false, "type " + std::to_string(below->second) +
                           " diagonally below type " + std::to_string(type) + " at (" +
                           std::to_string(box.row) + "," + std::to_string(box.col) + ")"};
    }
  }
  return {true, ""};
}

// ---- limits over diagram subspaces -------------------------------------

inline FusionProduct diagram_product(const ConnectionDiagram& d) {
  return FusionProduct::make(d.tableau(), SubspaceSpec::custom(d.entry_groups()));
}

namespace detail {

// A straight line through the limit point sees every pole whose residue
// survives on lines, but some non-removable singularities have equal
// finite limits along every line (the value only jumps when a pair of
// group parameters is steered together faster than the rest).  For each
// singularity whose entries lie in different groups we therefore also
// probe the quadratic curve z_g = s_g t + r_g t^2 with the two involved
// s-values equal; the limit exists and is curve-independent exactly when
// the restriction itself is regular.
struct SingularityProbe {
  SingularityDescriptor singularity;
  FusionProduct product;
  std::string collision;  // "z_p = z_q" description
};

inline std::vector<SingularityProbe> singularity_probes(const ConnectionDiagram& d) {
  std::vector<SingularityProbe> probes;
  const std::vector<int> groups = d.entry_groups();
  for (const SingularityDescriptor& s : enumerate_singularities(d)) {
    const int gp = groups[s.p - 1], gq = groups[s.q - 1];
    if (gp == gq) continue;  // hard singularity, caught by the factor itself
    FusionProduct fp = diagram_product(d);
    Rat next_s(2), next_r(1);
    for (auto& [label, z] : fp.directions) {
      const Rat s_val = (label == gp || label == gq) ? Rat(1) : next_s;
      if (!(label == gp || label == gq)) next_s += 1;
      z = UniPoly<Rat>(std::vector<Rat>{Rat(0), s_val, next_r});
      next_r += 1;
    }
    probes.push_back({s, std::move(fp),
                      "z_" + std::to_string(s.p) + " = z_" + std::to_string(s.q) +
                          " collision"});
  }
  return probes;
}

}  // namespace detail

struct ProbeResult {
  std::optional<Rat> value;          // limit of the chosen coefficient
  std::optional<PoleDiagnosis> pole; // set when the limit does not exist
  bool regular() const { return value.has_value(); }
};

// Limit of a single coefficient of the fusion product over the diagram's
// subspace.  A pole is a result here, not an error.
inline ProbeResult probe_limit(const ConnectionDiagram& d, const Perm& target) {
  ProbeResult out;
  try {
    const QT base = big_f(diagram_product(d)).coeff(target);
    auto v = base.try_eval_at_zero();
    if (!v) {
      out.pole = PoleDiagnosis{target, base.den()};
      return out;
    }
    for (const auto& probe : detail::singularity_probes(d)) {
      const QT along = big_f(probe.product).coeff(target);
      auto w = along.try_eval_at_zero();
      if (!w) {
        out.pole = PoleDiagnosis{target, along.den(), probe.collision};
        return out;
      }
      if (*w != *v) {
        out.pole = PoleDiagnosis{target, along.den(),
                                 "limit differs along " + probe.collision};
        return out;
      }
    }
    out.value = *v;
  } catch (const HardSingularity& hs) {
    out.pole = PoleDiagnosis{Perm::transposition(hs.p, hs.q, d.tableau().n()),
                             UniPoly<Rat>(),
                             "z_" + std::to_string(hs.p) + " = z_" +
                                 std::to_string(hs.q) + " identically"};
  }
  return out;
}

struct FullLimitResult {
  LimitOutcome outcome;
  bool matches_oracle = false;  // meaningful when outcome.regular()
};

// Limit of the whole product, compared against the ground-truth element.
// Regularity requires the same finite limit along the straight line and
// along every singularity collision curve.
inline FullLimitResult full_limit(const ConnectionDiagram& d) {
  FullLimitResult res;
  try {
    res.outcome = evaluate_limit_of(big_f(diagram_product(d)));
    if (!res.outcome.regular()) return res;
    for (const auto& probe : detail::singularity_probes(d)) {
      LimitOutcome along = evaluate_limit_of(big_f(probe.product));
      if (!along.regular()) {
        along.pole->detail = probe.collision;
        res.outcome = along;
        return res;
      }
      if (!(*along.element == *res.outcome.element)) {
        res.outcome.element.reset();
        res.outcome.pole = PoleDiagnosis{Perm::identity(d.tableau().n()),
                                         UniPoly<Rat>(),
                                         "limit differs along " + probe.collision};
        return res;
      }
    }
  } catch (const HardSingularity& hs) {
    res.outcome.element.reset();
    res.outcome.pole =
        PoleDiagnosis{Perm::transposition(hs.p, hs.q, d.tableau().n()),
                      UniPoly<Rat>(),
                      "z_" + std::to_string(hs.p) + " = z_" + std::to_string(hs.q) +
                          " identically"};
    return res;
  }
  if (res.outcome.regular())
    res.matches_oracle = (*res.outcome.element == dme_any(d.tableau()));
  return res;
}

// ---- chain reduction ----------------------------------------------------

// Deterministic A* over valid diagrams: each step toggles one edge (which
// moves every incident 2x2 square one step around the type circle), every
// intermediate diagram stays valid, and the walk ends at the column
// diagram.  Heuristic = Hamming distance of edge sets, so monotone chains
// are found directly; detours are explored when needed.
inline std::vector<ConnectionDiagram> chain_reduce(const ConnectionDiagram& start,
                                                   size_t node_budget = 200000) {
  if (!validity_check(start).valid)
    throw std::invalid_argument("chain_reduce requires a valid diagram");

  const Partition& shape = start.tableau().shape();
  const std::vector<ConnectionDiagram::Edge> edges = ConnectionDiagram::all_edges(shape);
  const size_t ne = edges.size();
  if (ne > 63) throw BoundExceeded("too many edges for chain reduction");

  auto mask_of = [&](const ConnectionDiagram& d) {
    uint64_t m = 0;
    for (size_t i = 0; i < ne; ++i)
      if (d.edges().count(edges[i])) m |= (uint64_t{1} << i);
    return m;
  };
  auto diagram_of = [&](uint64_t m) {
    ConnectionDiagram d(start.tableau());
    for (size_t i = 0; i < ne; ++i)
      if (m & (uint64_t{1} << i)) d.add_edge(edges[i].first, edges[i].second);
    return d;
  };

  uint64_t target = 0;
  for (size_t i = 0; i < ne; ++i)
    if (edges[i].first.col == edges[i].second.col) target |= (uint64_t{1} << i);

  const uint64_t s0 = mask_of(start);
  auto hamming = [&](uint64_t m) { return __builtin_popcountll(m ^ target); };

  struct Node {
    int f;
    size_t order;
    uint64_t mask;
    bool operator>(const Node& o) const {
      return f != o.f ? f > o.f : order > o.order;
    }
  };
  std::priority_queue<Node, std::vector<Node>, std::greater<Node>> open;
  std::map<uint64_t, int> dist;
  std::map<uint64_t, uint64_t> parent;
  size_t counter = 0;
  open.push({hamming(s0), counter++, s0});
  dist[s0] = 0;

  while (!open.empty()) {
    Node cur = open.top();
    open.pop();
    const int g = dist.at(cur.mask);
    if (cur.f > g + hamming(cur.mask)) continue;  // stale entry
    if (cur.mask == target) {
      std::vector<uint64_t> masks{cur.mask};
      while (masks.back() != s0) masks.push_back(parent.at(masks.back()));
      std::vector<ConnectionDiagram> chain;
      for (auto it = masks.rbegin(); it != masks.rend(); ++it)
        chain.push_back(diagram_of(*it));
      return chain;
    }
    if (dist.size() > node_budget)
      throw std::runtime_error(
          "chain reduction exceeded its search budget from diagram state " +
          std::to_string(s0));
    // distance-reducing toggles first, then the rest, in edge order
    for (int phase = 0; phase < 2; ++phase)
      for (size_t i = 0; i < ne; ++i) {
        const uint64_t next = cur.mask ^ (uint64_t{1} << i);
        const bool reducing = hamming(next) < hamming(cur.mask);
        if ((phase == 0) != reducing) continue;
        if (dist.count(next) && dist.at(next) <= g + 1) continue;
        if (!validity_check(diagram_of(next)).valid) continue;
        dist[next] = g + 1;
        parent[next] = cur.mask;
        open.push({g + 1 + hamming(next), counter++, next});
      }
  }
  throw std::runtime_error("no single-edge chain of valid diagrams reaches the column diagram");
}

}  // namespace hookfusion

#endif
