#include "arrowpoly/cabling.hpp"

#include <cstdlib>
#include <map>
#include <mutex>
#include <set>

namespace arrowpoly {

std::size_t CabledBlock::boundary_slots() const {
  const bool kink = kind == BlockKind::KinkP || kind == BlockKind::KinkM;
  return static_cast<std::size_t>((kink ? 2 : 4) * n);
}

namespace {

/// Emits the n x n grid replacing one crossing. `strand(s, k)` is the arc of
/// strand k (1-based) at crossing slot s; `fresh` allocates internal arcs.
template <typename StrandFn, typename FreshFn>
std::vector<Node> grid_nodes(NodeKind kind, int n, StrandFn strand, FreshFn fresh) {
  // u[i][l]: segment l (0..n) of under-strand i; o[j][l] likewise.
  std::vector<std::vector<int>> u(static_cast<std::size_t>(n + 1), std::vector<int>(static_cast<std::size_t>(n + 1)));
  std::vector<std::vector<int>> o = u;
  const bool pos = kind == NodeKind::Xp;
  for (int k = 1; k <= n; ++k) {
    auto& uk = u[static_cast<std::size_t>(k)];
    auto& ok = o[static_cast<std::size_t>(k)];
    uk[0] = strand(0, k);
    uk[static_cast<std::size_t>(n)] = strand(2, k);
    ok[0] = strand(pos ? 3 : 1, k);
    ok[static_cast<std::size_t>(n)] = strand(pos ? 1 : 3, k);
    for (int l = 1; l < n; ++l) {
      uk[static_cast<std::size_t>(l)] = fresh();
      ok[static_cast<std::size_t>(l)] = fresh();
    }
  }
  auto U = [&](int i, int l) { return u[static_cast<std::size_t>(i)][static_cast<std::size_t>(l)]; };
  auto O = [&](int j, int l) { return o[static_cast<std::size_t>(j)][static_cast<std::size_t>(l)]; };
  std::vector<Node> nodes;
  // Row-major: rows follow the under strands' direction.
  for (int row = 1; row <= n; ++row) {
    for (int i = 1; i <= n; ++i) {
      if (pos) {
        // Under strands run south to north at x = i; over strand j runs west
        // to east at height n + 1 - j.
        const int j = n + 1 - row;
        nodes.push_back(Node::xp(U(i, row - 1), O(j, i), U(i, row), O(j, i - 1)));
      } else {
        // Over strand j runs east to west at height j.
        const int j = row;
        nodes.push_back(Node::xm(U(i, j - 1), O(j, n - i), U(i, j), O(j, n - i + 1)));
      }
    }
  }
  return nodes;
}

bool is_kink_node(const Node& nd) {
  if (nd.kind == NodeKind::Xp) return nd.arcs[2] == nd.arcs[3];
  if (nd.kind == NodeKind::Xm) return nd.arcs[1] == nd.arcs[2];
  return false;
}

std::vector<int> vec_combine(const std::vector<int>& rel, int under_label, int over_label) {
  std::vector<int> out(static_cast<std::size_t>(std::max(under_label, over_label)), 0);
  if (!rel.empty()) out[static_cast<std::size_t>(under_label - 1)] += rel[0];
  if (rel.size() > 1) out[static_cast<std::size_t>(over_label - 1)] += rel[1];
  return out;
}

}  // namespace

CabledBlock build_block(BlockKind kind, int n) {
  if (n < 1) throw std::invalid_argument("cable width must be positive");
  const bool kink = kind == BlockKind::KinkP || kind == BlockKind::KinkM;
  const NodeKind nk = (kind == BlockKind::Xp || kind == BlockKind::KinkP) ? NodeKind::Xp : NodeKind::Xm;
  int next = 4 * n + 1;
  auto fresh = [&] { return next++; };
  // Curl arcs: the loop arc y joins the c-side to the over-strand's incoming
  // side. Boundary ids: x strands 1..n, z strands n+1..2n.
  std::vector<int> loop(static_cast<std::size_t>(n + 1), 0);
  if (kink)
    for (int k = 1; k <= n; ++k) loop[static_cast<std::size_t>(k)] = fresh();
  auto strand = [&](int s, int k) {
    if (!kink) return s * n + k;
    const int over_in = nk == NodeKind::Xp ? 3 : 1;
    if (s == 0) return k;
    if (s == 2 || s == over_in) return loop[static_cast<std::size_t>(k)];
    return n + k;
  };
  const std::vector<Node> nodes = grid_nodes(nk, n, strand, fresh);

  std::map<int, int> labels;
  for (const auto& nd : nodes) {
    // Under strands carry relative label 1, over strands 2; curls are a
    // single strand and use label 1 throughout.
    const auto& a = nd.arcs;
    labels[a[0]] = 1;
    labels[a[2]] = 1;
    labels[a[1]] = kink ? 1 : 2;
    labels[a[3]] = kink ? 1 : 2;
  }
  std::vector<Piece> pieces;
  std::vector<std::vector<int>> piece_arcs;
  for (const auto& nd : nodes) {
    pieces.push_back(Piece{expand_crossing(nd, labels)});
    piece_arcs.emplace_back(nd.arcs.begin(), nd.arcs.end());
  }
  std::vector<int> order(nodes.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
  auto states = contract_open(pieces, order);

  CabledBlock block;
  block.kind = kind;
  block.n = n;
  for (auto& t : states) {
    for (auto& p : t.paths) {
      p.a -= 1;
      p.b -= 1;
    }
    block.expansion.push_back(std::move(t));
  }
  return block;
}

std::shared_ptr<const CabledBlock> block_cache(BlockKind kind, int n) {
  static std::mutex mu;
  static std::map<std::pair<int, int>, std::shared_ptr<const CabledBlock>> cache;
  const std::pair<int, int> key{static_cast<int>(kind), n};
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
  }
  auto built = std::make_shared<const CabledBlock>(build_block(kind, n));
  std::lock_guard<std::mutex> lock(mu);
  // First publisher wins; later builders discard their copy.
  auto [it, inserted] = cache.try_emplace(key, std::move(built));
  return it->second;
}

Piece instantiate_block(const CabledBlock& block, const std::vector<int>& slot_arcs, int under_label, int over_label) {
  if (slot_arcs.size() != block.boundary_slots()) throw std::invalid_argument("instantiate_block: wrong slot count");
  IntMatrix push(static_cast<std::size_t>(std::max(under_label, over_label)), std::vector<int>(2, 0));
  push[static_cast<std::size_t>(under_label - 1)][0] += 1;
  push[static_cast<std::size_t>(over_label - 1)][1] += 1;
  Piece piece;
  for (const auto& t : block.expansion) {
    TangleState s;
    for (const auto& p : t.paths)
      s.paths.push_back(PathTerm::make(slot_arcs[static_cast<std::size_t>(p.a)], slot_arcs[static_cast<std::size_t>(p.b)],
                                       vec_combine(p.whiskers, under_label, over_label)));
    s.normalize();
    s.weight = t.weight.is_scalar() ? t.weight : pushforward(t.weight, push);
    piece.terms.push_back(std::move(s));
  }
  return piece;
}

PDCode zero_frame(const PDCode& pd) {
  PDCode out = pd;
  for (std::size_t i = 0; i < pd.components().size(); ++i) {
    const int w = self_writhe(pd, static_cast<int>(i));
    const int arc = pd.components()[i].arcs.front();
    for (int k = 0; k < std::abs(w); ++k) out = insert_kink(out, arc, w > 0 ? -1 : 1);
  }
  return out;
}

PDCode cable(const PDCode& pd, int n) {
  if (n < 1) throw std::invalid_argument("cable width must be positive");
  const PDCode zp = zero_frame(pd);
  std::map<int, int> rank;
  for (int a : zp.arcs()) rank.emplace(a, static_cast<int>(rank.size()));
  auto cab = [&](int arc, int k) { return rank.at(arc) * n + k; };
  int next = static_cast<int>(rank.size()) * n + 1;
  auto fresh = [&] { return next++; };

  std::vector<Node> nodes;
  std::map<int, int> labels;
  for (const auto& nd : zp.nodes()) {
    if (nd.kind == NodeKind::P) {
      for (int k = 1; k <= n; ++k) nodes.push_back(Node::p(cab(nd.arcs[0], k), cab(nd.arcs[1], k)));
      continue;
    }
    auto strand = [&](int s, int k) { return cab(nd.arcs[static_cast<std::size_t>(s)], k); };
    for (auto& g : grid_nodes(nd.kind, n, strand, fresh)) nodes.push_back(g);
  }
  PDCode bare(std::move(nodes));
  if (!pd.component_labels()) return bare;
  // Every strand inherits its original component's label.
  for (const auto& [a, l] : zp.arc_labels())
    for (int k = 1; k <= n; ++k) labels[cab(a, k)] = l;
  return bare.with_arc_labels(labels);
}

HArrowPoly cabled_arrow(const PDCode& pd, int n, const CableOptions& opts, EngineStats* stats) {
  if (n < 1) throw std::invalid_argument("cable width must be positive");
  const PDCode zp = zero_frame(pd);
  const int cabled_writhe = writhe(zp) * n * n;
  if (!opts.use_blocks) {
    const PDCode cp = cable(pd, n);
    return writhe_normalize(compute_arrow(cp, opts.engine, stats), cabled_writhe);
  }

  std::map<int, int> rank;
  for (int a : zp.arcs()) rank.emplace(a, static_cast<int>(rank.size()));
  auto cab = [&](int arc, int k) { return rank.at(arc) * n + k; };

  // Cut the last strand of the largest arc that is not a curl loop.
  std::set<int> loops;
  for (const auto& nd : zp.nodes())
    if (is_kink_node(nd)) loops.insert(nd.kind == NodeKind::Xp ? nd.arcs[2] : nd.arcs[1]);
  int cut_arc = 0;
  for (int a : zp.arcs())
    if (!loops.count(a)) cut_arc = a;
  const auto [cut_node, cut_slot] = zp.head(cut_arc);
  const int cut_end = static_cast<int>(rank.size()) * n + 1;

  std::vector<Piece> pieces;
  std::vector<std::vector<int>> piece_arcs;
  auto add_piece = [&](Piece p) {
    piece_arcs.push_back(p.arcs());
    pieces.push_back(std::move(p));
  };
  for (int ni = 0; ni < static_cast<int>(zp.nodes().size()); ++ni) {
    const auto& nd = zp.nodes()[static_cast<std::size_t>(ni)];
    auto arc_at = [&](int s, int k) {
      if (ni == cut_node && s == cut_slot && k == n) return cut_end;
      return cab(nd.arcs[static_cast<std::size_t>(s)], k);
    };
    if (nd.kind == NodeKind::P) {
      for (int k = 1; k <= n; ++k) {
        TangleState t{{PathTerm::make(arc_at(0, k), arc_at(1, k), {})}, HArrowPoly(1)};
        add_piece(Piece{{t}});
      }
      continue;
    }
    std::vector<int> slots;
    BlockKind kind;
    if (is_kink_node(nd)) {
      kind = nd.kind == NodeKind::Xp ? BlockKind::KinkP : BlockKind::KinkM;
      const int out_slot = nd.kind == NodeKind::Xp ? 1 : 3;
      for (int k = 1; k <= n; ++k) slots.push_back(arc_at(0, k));
      for (int k = 1; k <= n; ++k) slots.push_back(arc_at(out_slot, k));
    } else {
      kind = nd.kind == NodeKind::Xp ? BlockKind::Xp : BlockKind::Xm;
      for (int s = 0; s < 4; ++s)
        for (int k = 1; k <= n; ++k) slots.push_back(arc_at(s, k));
    }
    const auto block = block_cache(kind, n);
    add_piece(instantiate_block(*block, slots, 1, 1));
  }
  const auto order = contraction_order(piece_arcs);
  const HArrowPoly raw = contract(pieces, order, {cab(cut_arc, n), cut_end}, opts.engine, stats);
  return writhe_normalize(raw, cabled_writhe);
}

}  // namespace arrowpoly
