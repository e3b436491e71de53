#pragma once

// Oriented PD codes: nodes P[i,j], Xp[a,b,c,d], Xm[a,b,c,d] over integer arc
// ids, with the slots of a crossing listed counterclockwise starting from the
// incoming under-strand.
//
//   Xp[a,b,c,d]: under a->c, over d->b   (writhe +1)
//   Xm[a,b,c,d]: under a->c, over b->d   (writhe -1)
//   P[i,j]:      a path i->j
//
// Virtual crossings are not represented; the cyclic slot order carries the
// whole ribbon-graph embedding.

#include <array>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace arrowpoly {

enum class NodeKind { P, Xp, Xm };

struct Node {
  NodeKind kind = NodeKind::P;
  std::array<int, 4> arcs{};

  static Node p(int i, int j) { return {NodeKind::P, {i, j, 0, 0}}; }
  static Node xp(int a, int b, int c, int d) { return {NodeKind::Xp, {a, b, c, d}}; }
  static Node xm(int a, int b, int c, int d) { return {NodeKind::Xm, {a, b, c, d}}; }

  int arity() const { return kind == NodeKind::P ? 2 : 4; }
  bool is_crossing() const { return kind != NodeKind::P; }
  /// Whether slot s carries an incoming end of its arc.
  bool slot_incoming(int s) const;
  /// The outgoing slot continuing the strand that enters at incoming slot s.
  int through_slot(int s) const;
  /// Whether incoming slot s is the over-strand.
  bool slot_over(int s) const;
  int sign() const { return kind == NodeKind::Xp ? 1 : kind == NodeKind::Xm ? -1 : 0; }

  friend bool operator==(const Node&, const Node&) = default;
};

class ParseError : public std::runtime_error {
public:
  ParseError(const std::string& what, std::size_t offset)
      : std::runtime_error("parse error at offset " + std::to_string(offset) + ": " + what), offset_(offset) {}
  std::size_t offset() const { return offset_; }

private:
  std::size_t offset_;
};

class ValidationError : public std::runtime_error {
public:
  ValidationError(const std::string& what, int arc) : std::runtime_error(what), arc_(arc) {}
  /// Offending arc id, or 0 when the problem is not tied to one arc.
  int arc() const { return arc_; }

private:
  int arc_;
};

/// One oriented component: its arcs in traversal order, starting at the
/// smallest id.
struct Component {
  std::vector<int> arcs;
};

enum class Side { Left, Right };

struct ArcSide {
  int arc = 0;
  Side side = Side::Left;
  friend bool operator==(const ArcSide&, const ArcSide&) = default;
};

struct FaceData {
  /// Boundary walk of each face; every element is an arc together with the
  /// side of that arc the face lies on.
  std::vector<std::vector<ArcSide>> faces;
  std::map<int, int> left_face;
  std::map<int, int> right_face;
  /// Node indices of each connected piece of the diagram.
  std::vector<std::vector<int>> pieces;
  /// Surface genus of each piece, aligned with `pieces`.
  std::vector<int> piece_genus;
  /// Piece index of each face.
  std::vector<int> face_piece;

  int genus() const;
  int face_of(ArcSide s) const;
};

class PDCode {
public:
  PDCode() = default;
  /// Validates; throws ValidationError.
  explicit PDCode(std::vector<Node> nodes, std::optional<std::vector<int>> component_labels = std::nullopt);

  const std::vector<Node>& nodes() const { return nodes_; }
  const std::optional<std::vector<int>>& component_labels() const { return labels_; }
  /// Components ordered by smallest arc id.
  const std::vector<Component>& components() const { return components_; }

  int max_arc() const;
  std::vector<int> arcs() const;
  int crossing_count() const;
  /// Index of the component containing an arc.
  int component_of(int arc) const { return arc_component_.at(arc); }
  /// Label of an arc's component (1 when unlabeled).
  int arc_label(int arc) const;
  std::map<int, int> arc_labels() const;
  /// Label map rebuilt through components; throws if a component is given
  /// two different labels.
  PDCode with_arc_labels(const std::map<int, int>& arc_labels) const;
  PDCode with_component_labels(std::optional<std::vector<int>> labels) const;

  /// Node index and slot of the incoming / outgoing end of an arc.
  std::pair<int, int> head(int arc) const { return head_.at(arc); }
  std::pair<int, int> tail(int arc) const { return tail_.at(arc); }

  std::string to_string() const;

  friend bool operator==(const PDCode& a, const PDCode& b) { return a.nodes_ == b.nodes_ && a.labels_ == b.labels_; }

private:
  void index();

  std::vector<Node> nodes_;
  std::optional<std::vector<int>> labels_;
  std::vector<Component> components_;
  std::map<int, int> arc_component_;
  std::map<int, std::pair<int, int>> head_;
  std::map<int, std::pair<int, int>> tail_;
};

struct ParseOptions {
  /// Component label = arc id mod 10, with 0 read as 10.
  bool mod10_labels = false;
};

PDCode parse_pd(std::string_view text, const ParseOptions& opts = {});

/// Throws ValidationError describing the first problem found.
void validate(const std::vector<Node>& nodes, const std::optional<std::vector<int>>& component_labels);

inline const std::vector<Component>& components(const PDCode& pd) { return pd.components(); }

int writhe(const PDCode& pd);
int self_writhe(const PDCode& pd, int component);

FaceData faces_and_genus(const PDCode& pd);

bool is_alternating(const PDCode& pd);

// ---- diagram edits ------------------------------------------------------

PDCode mirror_pd(const PDCode& pd);
PDCode reverse_all(const PDCode& pd);
/// Reverses the listed components (indices into components()).
PDCode reverse_components(const PDCode& pd, const std::set<int>& components);
PDCode disjoint_union(const PDCode& a, const PDCode& b);
/// Cuts arc_a of a and arc_b of b and cross-joins them: the tail of arc_a
/// feeds the head of arc_b and vice versa.
PDCode connect_sum(const PDCode& a, int arc_a, const PDCode& b, int arc_b);
/// Splices a planar one-crossing curl of the given sign (+1/-1) into an arc.
PDCode insert_kink(const PDCode& pd, int arc, int sign);
/// Pushes side1's arc over side2's arc across `face`, adding two crossings
/// of opposite sign.
PDCode r2_insert(const PDCode& pd, int face, ArcSide side1, ArcSide side2);
/// Splits an arc with a P node; the new arc id is max_arc()+1.
PDCode subdivide(const PDCode& pd, int arc);
/// Removes P nodes where possible (a lone P loop is kept).
PDCode remove_passes(const PDCode& pd);
/// Relabels arcs 1..E in component traversal order.
PDCode renumber(const PDCode& pd);

}  // namespace arrowpoly
