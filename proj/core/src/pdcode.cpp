#include "arrowpoly/pdcode.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <set>
#include <sstream>

namespace arrowpoly {

bool Node::slot_incoming(int s) const {
  switch (kind) {
    case NodeKind::P: return s == 0;
    case NodeKind::Xp: return s == 0 || s == 3;
    case NodeKind::Xm: return s == 0 || s == 1;
  }
  return false;
}

int Node::through_slot(int s) const {
  switch (kind) {
    case NodeKind::P: return 1;
    case NodeKind::Xp: return s == 0 ? 2 : 1;
    case NodeKind::Xm: return s == 0 ? 2 : 3;
  }
  return -1;
}

bool Node::slot_over(int s) const {
  switch (kind) {
    case NodeKind::P: return false;
    case NodeKind::Xp: return s == 3;
    case NodeKind::Xm: return s == 1;
  }
  return false;
}

int FaceData::genus() const { return std::accumulate(piece_genus.begin(), piece_genus.end(), 0); }

int FaceData::face_of(ArcSide s) const {
  const auto& m = s.side == Side::Left ? left_face : right_face;
  auto it = m.find(s.arc);
  if (it == m.end()) throw std::invalid_argument("unknown arc " + std::to_string(s.arc));
  return it->second;
}

// ---- validation ---------------------------------------------------------

void validate(const std::vector<Node>& nodes, const std::optional<std::vector<int>>& component_labels) {
  if (nodes.empty()) throw ValidationError("PD code has no nodes", 0);
  std::map<int, std::pair<int, int>> uses;  // arc -> (incoming count, outgoing count)
  for (const auto& n : nodes) {
    for (int s = 0; s < n.arity(); ++s) {
      const int a = n.arcs[static_cast<std::size_t>(s)];
      if (a <= 0) throw ValidationError("arc ids must be positive, got " + std::to_string(a), a);
      auto& u = uses[a];
      (n.slot_incoming(s) ? u.first : u.second)++;
    }
  }
  for (const auto& [a, u] : uses) {
    const int total = u.first + u.second;
    if (total != 2)
      throw ValidationError("arc " + std::to_string(a) + " occurs " + std::to_string(total) + " times (expected 2)", a);
    if (u.first != 1)
      throw ValidationError("arc " + std::to_string(a) + " occurs with inconsistent orientation multiplicity (" +
                                std::to_string(u.first) + " incoming, " + std::to_string(u.second) + " outgoing)",
                            a);
  }
  (void)component_labels;
}

PDCode::PDCode(std::vector<Node> nodes, std::optional<std::vector<int>> component_labels)
    : nodes_(std::move(nodes)), labels_(std::move(component_labels)) {
  validate(nodes_, labels_);
  index();
  if (labels_) {
    if (labels_->size() != components_.size())
      throw ValidationError("label map has " + std::to_string(labels_->size()) + " entries for " +
                                std::to_string(components_.size()) + " components",
                            0);
    for (std::size_t i = 0; i < labels_->size(); ++i)
      if ((*labels_)[i] <= 0)
        throw ValidationError("component " + std::to_string(i + 1) + " has non-positive label",
                              components_[i].arcs.front());
  }
}

void PDCode::index() {
  for (int ni = 0; ni < static_cast<int>(nodes_.size()); ++ni) {
    const auto& n = nodes_[static_cast<std::size_t>(ni)];
    for (int s = 0; s < n.arity(); ++s) {
      const int a = n.arcs[static_cast<std::size_t>(s)];
      (n.slot_incoming(s) ? head_ : tail_)[a] = {ni, s};
    }
  }
  std::set<int> unseen;
  for (const auto& [a, h] : head_) unseen.insert(a);
  while (!unseen.empty()) {
    Component c;
    int a = *unseen.begin();
    while (unseen.erase(a) != 0) {
      c.arcs.push_back(a);
      arc_component_[a] = static_cast<int>(components_.size());
      const auto [ni, s] = head_.at(a);
      const auto& n = nodes_[static_cast<std::size_t>(ni)];
      a = n.arcs[static_cast<std::size_t>(n.through_slot(s))];
    }
    components_.push_back(std::move(c));
  }
}

int PDCode::max_arc() const { return head_.empty() ? 0 : head_.rbegin()->first; }

std::vector<int> PDCode::arcs() const {
  std::vector<int> out;
  for (const auto& [a, h] : head_) out.push_back(a);
  return out;
}

int PDCode::crossing_count() const {
  return static_cast<int>(std::count_if(nodes_.begin(), nodes_.end(), [](const Node& n) { return n.is_crossing(); }));
}

int PDCode::arc_label(int arc) const {
  if (!labels_) return 1;
  return (*labels_)[static_cast<std::size_t>(arc_component_.at(arc))];
}

std::map<int, int> PDCode::arc_labels() const {
  std::map<int, int> out;
  for (const auto& [a, c] : arc_component_) out[a] = arc_label(a);
  return out;
}

PDCode PDCode::with_arc_labels(const std::map<int, int>& arc_labels) const {
  std::vector<int> labels(components_.size(), 0);
  for (std::size_t i = 0; i < components_.size(); ++i) {
    for (int a : components_[i].arcs) {
      auto it = arc_labels.find(a);
      if (it == arc_labels.end()) continue;
      if (labels[i] != 0 && labels[i] != it->second)
        throw ValidationError("component " + std::to_string(i + 1) + " carries labels " + std::to_string(labels[i]) +
                                  " and " + std::to_string(it->second) + " (arc " + std::to_string(a) + ")",
                              a);
      labels[i] = it->second;
    }
    if (labels[i] == 0) throw ValidationError("component " + std::to_string(i + 1) + " has no label", components_[i].arcs.front());
  }
  return PDCode(nodes_, std::move(labels));
}

PDCode PDCode::with_component_labels(std::optional<std::vector<int>> labels) const {
  return PDCode(nodes_, std::move(labels));
}

std::string PDCode::to_string() const {
  std::ostringstream os;
  os << "PD[";
  for (std::size_t i = 0; i < nodes_.size(); ++i) {
    const auto& n = nodes_[i];
    if (i) os << ", ";
    os << (n.kind == NodeKind::P ? "P" : n.kind == NodeKind::Xp ? "Xp" : "Xm") << '[';
    for (int s = 0; s < n.arity(); ++s) os << (s ? ", " : "") << n.arcs[static_cast<std::size_t>(s)];
    os << ']';
  }
  os << ']';
  return os.str();
}

// ---- parsing ------------------------------------------------------------

namespace {

class PdParser {
public:
  explicit PdParser(std::string_view s) : s_(s) {}

  std::vector<Node> parse() {
    expect_word("PD");
    expect('[');
    std::vector<Node> nodes;
    nodes.push_back(node());
    while (accept(',')) nodes.push_back(node());
    expect(']');
    skip_ws();
    if (pos_ != s_.size()) throw ParseError("unexpected trailing input", pos_);
    return nodes;
  }

private:
  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_ws();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!accept(c)) throw ParseError(std::string("expected '") + c + "'", pos_);
  }

  std::string word() {
    skip_ws();
    const std::size_t start = pos_;
    while (pos_ < s_.size() && std::isalpha(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    return std::string(s_.substr(start, pos_ - start));
  }

  void expect_word(const std::string& w) {
    skip_ws();
    const std::size_t at = pos_;
    if (word() != w) throw ParseError("expected '" + w + "'", at);
  }

  int integer() {
    skip_ws();
    const std::size_t start = pos_;
    if (pos_ < s_.size() && s_[pos_] == '-') ++pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (pos_ == start || (pos_ == start + 1 && s_[start] == '-')) throw ParseError("expected integer", start);
    try {
      return std::stoi(std::string(s_.substr(start, pos_ - start)));
    } catch (const std::out_of_range&) {
      throw ParseError("integer out of range", start);
    }
  }

  Node node() {
    skip_ws();
    const std::size_t at = pos_;
    const std::string w = word();
    Node n;
    if (w == "P") {
      n.kind = NodeKind::P;
    } else if (w == "Xp") {
      n.kind = NodeKind::Xp;
    } else if (w == "Xm") {
      n.kind = NodeKind::Xm;
    } else {
      throw ParseError("unknown node type '" + w + "'", at);
    }
    expect('[');
    for (int s = 0; s < n.arity(); ++s) {
      if (s) expect(',');
      n.arcs[static_cast<std::size_t>(s)] = integer();
    }
    expect(']');
    return n;
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

PDCode parse_pd(std::string_view text, const ParseOptions& opts) {
  PDCode pd(PdParser(text).parse());
  if (!opts.mod10_labels) return pd;
  std::map<int, int> labels;
  for (int a : pd.arcs()) labels[a] = (a % 10 == 0) ? 10 : a % 10;
  return pd.with_arc_labels(labels);
}

// ---- writhe -------------------------------------------------------------

int writhe(const PDCode& pd) {
  int w = 0;
  for (const auto& n : pd.nodes()) w += n.sign();
  return w;
}

int self_writhe(const PDCode& pd, int component) {
  int w = 0;
  for (const auto& n : pd.nodes()) {
    if (!n.is_crossing()) continue;
    if (pd.component_of(n.arcs[0]) == component && pd.component_of(n.arcs[1]) == component) w += n.sign();
  }
  return w;
}

// ---- faces --------------------------------------------------------------

FaceData faces_and_genus(const PDCode& pd) {
  const auto& nodes = pd.nodes();
  // Darts are (node, slot), flattened.
  std::vector<int> offset(nodes.size() + 1, 0);
  for (std::size_t i = 0; i < nodes.size(); ++i) offset[i + 1] = offset[i] + nodes[i].arity();
  const int n_darts = offset.back();
  std::vector<int> dart_node(static_cast<std::size_t>(n_darts));
  for (std::size_t i = 0; i < nodes.size(); ++i)
    for (int s = 0; s < nodes[i].arity(); ++s) dart_node[static_cast<std::size_t>(offset[i] + s)] = static_cast<int>(i);

  auto dart = [&](std::pair<int, int> ns) { return offset[static_cast<std::size_t>(ns.first)] + ns.second; };
  auto arc_of = [&](int d) {
    const int ni = dart_node[static_cast<std::size_t>(d)];
    return nodes[static_cast<std::size_t>(ni)].arcs[static_cast<std::size_t>(d - offset[static_cast<std::size_t>(ni)])];
  };
  auto opposite = [&](int d) {
    const int a = arc_of(d);
    const int h = dart(pd.head(a));
    return h == d ? dart(pd.tail(a)) : h;
  };
  auto rotate = [&](int d) {
    const int ni = dart_node[static_cast<std::size_t>(d)];
    const int base = offset[static_cast<std::size_t>(ni)];
    return base + (d - base + 1) % nodes[static_cast<std::size_t>(ni)].arity();
  };

  FaceData fd;
  std::vector<int> face_of_dart(static_cast<std::size_t>(n_darts), -1);
  for (int d0 = 0; d0 < n_darts; ++d0) {
    if (face_of_dart[static_cast<std::size_t>(d0)] >= 0) continue;
    const int f = static_cast<int>(fd.faces.size());
    std::vector<ArcSide> walk;
    int d = d0;
    do {
      face_of_dart[static_cast<std::size_t>(d)] = f;
      const int a = arc_of(d);
      // Traversing the arc from this dart puts the face on the right.
      const bool forward = dart(pd.tail(a)) == d;
      walk.push_back({a, forward ? Side::Right : Side::Left});
      (forward ? fd.right_face : fd.left_face)[a] = f;
      d = rotate(opposite(d));
    } while (d != d0);
    fd.faces.push_back(std::move(walk));
  }

  // Connected pieces by union-find over nodes.
  std::vector<int> parent(nodes.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[static_cast<std::size_t>(x)] != x) x = parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
    return x;
  };
  for (int a : pd.arcs()) {
    const int u = find(pd.head(a).first);
    const int v = find(pd.tail(a).first);
    if (u != v) parent[static_cast<std::size_t>(u)] = v;
  }
  std::map<int, int> piece_index;
  std::vector<int> node_piece(nodes.size());
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    const int r = find(static_cast<int>(i));
    auto [it, inserted] = piece_index.try_emplace(r, static_cast<int>(fd.pieces.size()));
    if (inserted) fd.pieces.emplace_back();
    fd.pieces[static_cast<std::size_t>(it->second)].push_back(static_cast<int>(i));
    node_piece[i] = it->second;
  }
  std::vector<int> v_count(fd.pieces.size(), 0), e_count(fd.pieces.size(), 0), f_count(fd.pieces.size(), 0);
  for (std::size_t p = 0; p < fd.pieces.size(); ++p) v_count[p] = static_cast<int>(fd.pieces[p].size());
  for (int a : pd.arcs()) e_count[static_cast<std::size_t>(node_piece[static_cast<std::size_t>(pd.head(a).first)])]++;
  for (std::size_t f = 0; f < fd.faces.size(); ++f) {
    const int p = node_piece[static_cast<std::size_t>(pd.head(fd.faces[f].front().arc).first)];
    fd.face_piece.push_back(p);
    f_count[static_cast<std::size_t>(p)]++;
  }
  for (std::size_t p = 0; p < fd.pieces.size(); ++p) {
    const int chi = v_count[p] - e_count[p] + f_count[p];
    fd.piece_genus.push_back((2 - chi) / 2);
  }
  return fd;
}

// ---- alternation --------------------------------------------------------

bool is_alternating(const PDCode& pd) {
  for (const auto& c : pd.components()) {
    std::vector<bool> passes;
    for (int a : c.arcs) {
      const auto [ni, s] = pd.head(a);
      const auto& n = pd.nodes()[static_cast<std::size_t>(ni)];
      if (n.is_crossing()) passes.push_back(n.slot_over(s));
    }
    for (std::size_t i = 0; i < passes.size(); ++i)
      if (passes[i] == passes[(i + 1) % passes.size()]) return false;
  }
  return true;
}

// ---- edits --------------------------------------------------------------

namespace {

/// Replaces the arc id in a single slot.
void set_slot(std::vector<Node>& nodes, std::pair<int, int> at, int arc) {
  nodes[static_cast<std::size_t>(at.first)].arcs[static_cast<std::size_t>(at.second)] = arc;
}

/// Builds a crossing from its counterclockwise slot list starting at the
/// incoming under-strand; the kind follows from where the over-strand enters.
Node crossing_from_ccw(std::array<int, 4> ccw, bool over_enters_second_slot) {
  return over_enters_second_slot ? Node::xm(ccw[0], ccw[1], ccw[2], ccw[3]) : Node::xp(ccw[0], ccw[1], ccw[2], ccw[3]);
}

std::optional<std::vector<int>> relabel_like(const PDCode& src, const std::vector<Node>& nodes,
                                             const std::map<int, int>& extra_arc_labels) {
  if (!src.component_labels()) return std::nullopt;
  PDCode bare(nodes);
  auto labels = src.arc_labels();
  for (const auto& [a, l] : extra_arc_labels) labels[a] = l;
  std::map<int, int> present;
  for (int a : bare.arcs())
    if (labels.count(a)) present[a] = labels[a];
  return bare.with_arc_labels(present).component_labels();
}

}  // namespace

PDCode mirror_pd(const PDCode& pd) {
  std::vector<Node> out;
  for (const auto& n : pd.nodes()) {
    const auto& a = n.arcs;
    switch (n.kind) {
      case NodeKind::P: out.push_back(n); break;
      case NodeKind::Xp: out.push_back(Node::xm(a[3], a[0], a[1], a[2])); break;
      case NodeKind::Xm: out.push_back(Node::xp(a[1], a[2], a[3], a[0])); break;
    }
  }
  return PDCode(std::move(out), pd.component_labels());
}

PDCode reverse_all(const PDCode& pd) {
  std::vector<Node> out;
  for (const auto& n : pd.nodes()) {
    const auto& a = n.arcs;
    switch (n.kind) {
      case NodeKind::P: out.push_back(Node::p(a[1], a[0])); break;
      case NodeKind::Xp: out.push_back(Node::xp(a[2], a[3], a[0], a[1])); break;
      case NodeKind::Xm: out.push_back(Node::xm(a[2], a[3], a[0], a[1])); break;
    }
  }
  // Component order may change because the traversal start changes; labels
  // follow the arcs.
  std::map<int, int> labels = pd.arc_labels();
  PDCode bare(std::move(out));
  return pd.component_labels() ? bare.with_arc_labels(labels) : bare;
}

PDCode reverse_components(const PDCode& pd, const std::set<int>& comps) {
  std::vector<Node> out;
  for (const auto& n : pd.nodes()) {
    const auto& a = n.arcs;
    if (n.kind == NodeKind::P) {
      out.push_back(comps.count(pd.component_of(a[0])) ? Node::p(a[1], a[0]) : n);
      continue;
    }
    const bool ru = comps.count(pd.component_of(a[0])) > 0;
    const bool ro = comps.count(pd.component_of(a[1])) > 0;
    // Reversing one strand flips the sign; reversing the under-strand also
    // moves its incoming end to slot 2.
    const bool flip = ru != ro;
    const NodeKind k = flip ? (n.kind == NodeKind::Xp ? NodeKind::Xm : NodeKind::Xp) : n.kind;
    const std::array<int, 4> arcs = ru ? std::array<int, 4>{a[2], a[3], a[0], a[1]} : a;
    out.push_back(k == NodeKind::Xp ? Node::xp(arcs[0], arcs[1], arcs[2], arcs[3])
                                    : Node::xm(arcs[0], arcs[1], arcs[2], arcs[3]));
  }
  std::map<int, int> labels = pd.arc_labels();
  PDCode bare(std::move(out));
  return pd.component_labels() ? bare.with_arc_labels(labels) : bare;
}

PDCode disjoint_union(const PDCode& a, const PDCode& b) {
  const int shift = a.max_arc();
  std::vector<Node> out = a.nodes();
  for (auto n : b.nodes()) {
    for (int s = 0; s < n.arity(); ++s) n.arcs[static_cast<std::size_t>(s)] += shift;
    out.push_back(n);
  }
  if (!a.component_labels() && !b.component_labels()) return PDCode(std::move(out));
  std::map<int, int> labels = a.arc_labels();
  for (const auto& [arc, l] : b.arc_labels()) labels[arc + shift] = l;
  return PDCode(std::move(out)).with_arc_labels(labels);
}

PDCode connect_sum(const PDCode& a, int arc_a, const PDCode& b, int arc_b) {
  if (!a.arc_labels().count(arc_a)) throw std::invalid_argument("connect_sum: unknown arc " + std::to_string(arc_a));
  if (!b.arc_labels().count(arc_b)) throw std::invalid_argument("connect_sum: unknown arc " + std::to_string(arc_b));
  const int shift = a.max_arc();
  const int arc_b2 = arc_b + shift;
  std::vector<Node> out = a.nodes();
  const auto ha = a.head(arc_a);
  auto hb = b.head(arc_b);
  hb.first += static_cast<int>(a.nodes().size());
  for (auto n : b.nodes()) {
    for (int s = 0; s < n.arity(); ++s) n.arcs[static_cast<std::size_t>(s)] += shift;
    out.push_back(n);
  }
  set_slot(out, ha, arc_b2);
  set_slot(out, hb, arc_a);
  if (!a.component_labels() && !b.component_labels()) return PDCode(std::move(out));
  std::map<int, int> labels = a.arc_labels();
  for (const auto& [arc, l] : b.arc_labels()) labels[arc + shift] = l;
  labels[arc_b2] = labels[arc_a];
  // Any other arc of b's joined component keeps its own label; conflicts are
  // reported by with_arc_labels.
  return PDCode(std::move(out)).with_arc_labels(labels);
}

PDCode insert_kink(const PDCode& pd, int arc, int sign) {
  if (sign != 1 && sign != -1) throw std::invalid_argument("insert_kink: sign must be +1 or -1");
  if (!pd.arc_labels().count(arc)) throw std::invalid_argument("insert_kink: unknown arc " + std::to_string(arc));
  const int loop = pd.max_arc() + 1;
  const int out_arc = pd.max_arc() + 2;
  std::vector<Node> nodes = pd.nodes();
  set_slot(nodes, pd.head(arc), out_arc);
  nodes.push_back(sign > 0 ? Node::xp(arc, out_arc, loop, loop) : Node::xm(arc, loop, loop, out_arc));
  const int l = pd.arc_label(arc);
  auto labels = relabel_like(pd, nodes, {{loop, l}, {out_arc, l}});
  return PDCode(std::move(nodes), std::move(labels));
}

PDCode subdivide(const PDCode& pd, int arc) {
  if (!pd.arc_labels().count(arc)) throw std::invalid_argument("subdivide: unknown arc " + std::to_string(arc));
  const int fresh = pd.max_arc() + 1;
  std::vector<Node> nodes = pd.nodes();
  set_slot(nodes, pd.head(arc), fresh);
  nodes.push_back(Node::p(arc, fresh));
  auto labels = relabel_like(pd, nodes, {{fresh, pd.arc_label(arc)}});
  return PDCode(std::move(nodes), std::move(labels));
}

PDCode remove_passes(const PDCode& pd) {
  std::vector<Node> nodes = pd.nodes();
  for (;;) {
    auto it = std::find_if(nodes.begin(), nodes.end(),
                           [](const Node& n) { return n.kind == NodeKind::P && n.arcs[0] != n.arcs[1]; });
    if (it == nodes.end() || nodes.size() == 1) break;
    const int in = it->arcs[0];
    const int out = it->arcs[1];
    nodes.erase(it);
    for (auto& n : nodes)
      for (int s = 0; s < n.arity(); ++s)
        if (n.arcs[static_cast<std::size_t>(s)] == out && n.slot_incoming(s)) n.arcs[static_cast<std::size_t>(s)] = in;
  }
  auto labels = relabel_like(pd, nodes, {});
  return PDCode(std::move(nodes), std::move(labels));
}

PDCode r2_insert(const PDCode& pd, int face, ArcSide side1, ArcSide side2) {
  const FaceData fd = faces_and_genus(pd);
  if (face < 0 || face >= static_cast<int>(fd.faces.size())) throw std::invalid_argument("r2_insert: no such face");
  auto on_face = [&](ArcSide s) {
    const auto& w = fd.faces[static_cast<std::size_t>(face)];
    return std::find(w.begin(), w.end(), s) != w.end();
  };
  if (!on_face(side1) || !on_face(side2)) throw std::invalid_argument("r2_insert: arc side is not on the boundary of the face");

  PDCode base = pd;
  bool subdivided = false;
  if (side1.arc == side2.arc) {
    base = subdivide(pd, side1.arc);
    side2.arc = base.max_arc();
    subdivided = true;
  }
  const int x = side1.arc;
  const int y = side2.arc;
  const int m = base.max_arc();
  const int x1 = m + 1, x2 = m + 2, y1 = m + 3, y2 = m + 4;

  std::vector<Node> nodes = base.nodes();
  set_slot(nodes, base.head(x), x2);
  set_slot(nodes, base.head(y), y2);

  // Local picture with x's face side on its left: x runs east, the face lies
  // north, and x is pushed north over y. Slots are counterclockwise starting
  // from y's incoming end. When the face is on x's right the picture is
  // reflected, which reverses the cyclic order and flips both sides.
  std::array<int, 4> c1{}, c2{};
  if (side2.side != side1.side) {  // y runs east
    c1 = {y, x, y1, x1};
    c2 = {y1, x2, y2, x1};
  } else {  // y runs west
    c1 = {y1, x1, y2, x};
    c2 = {y, x1, y1, x2};
  }
  if (side1.side == Side::Right) {
    std::swap(c1[1], c1[3]);
    std::swap(c2[1], c2[3]);
  }
  // x is the over strand: it arrives at the first crossing along x and
  // leaves it along x1, which arrives at the second.
  nodes.push_back(crossing_from_ccw(c1, c1[1] == x));
  nodes.push_back(crossing_from_ccw(c2, c2[1] == x1));
  const int lx = base.arc_label(x);
  const int ly = base.arc_label(y);
  auto labels = relabel_like(base, nodes, {{x1, lx}, {x2, lx}, {y1, ly}, {y2, ly}});
  PDCode out(std::move(nodes), std::move(labels));
  return subdivided ? remove_passes(out) : out;
}

PDCode renumber(const PDCode& pd) {
  std::map<int, int> fresh;
  int next = 1;
  for (const auto& c : pd.components())
    for (int a : c.arcs) fresh[a] = next++;
  std::vector<Node> nodes = pd.nodes();
  for (auto& n : nodes)
    for (int s = 0; s < n.arity(); ++s) n.arcs[static_cast<std::size_t>(s)] = fresh.at(n.arcs[static_cast<std::size_t>(s)]);
  if (!pd.component_labels()) return PDCode(std::move(nodes));
  std::map<int, int> labels;
  for (const auto& [a, l] : pd.arc_labels()) labels[fresh.at(a)] = l;
  return PDCode(std::move(nodes)).with_arc_labels(labels);
}

}  // namespace arrowpoly
