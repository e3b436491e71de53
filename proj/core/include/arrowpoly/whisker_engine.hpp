#pragma once

// Whisker state sums. A crossing expands into two weighted pairs of paths;
// a path from arc a to arc b carries a vector of signed whisker counts per
// label slot (left whiskers positive when traversed a -> b). Paths are glued
// end to end at shared arcs, and each closed loop with whisker vector v
// contributes (-A^2 - A^-2) X[v].

#include <cstddef>
#include <map>
#include <set>
#include <stdexcept>
#include <vector>

#include "arrowpoly/pdcode.hpp"
#include "arrowpoly/poly.hpp"

namespace arrowpoly {

/// A path between two open arc ends. Normalized with a <= b; flipping the
/// endpoints negates the whisker vector.
struct PathTerm {
  int a = 0;
  int b = 0;
  std::vector<int> whiskers;

  static PathTerm make(int from, int to, std::vector<int> whiskers);
  friend bool operator==(const PathTerm&, const PathTerm&) = default;
  friend auto operator<=>(const PathTerm&, const PathTerm&) = default;
};

/// A weighted set of disjoint paths plus the polynomial factor of loops that
/// have already closed.
struct TangleState {
  std::vector<PathTerm> paths;  // sorted
  HArrowPoly weight;

  void normalize();
  friend bool operator==(const TangleState&, const TangleState&) = default;
};

enum class LoopWeight {
  /// Every loop contributes delta * X[v] (the homological arrow polynomial).
  DeltaX,
  /// Loops with nonzero v contribute X[v] only; trivial loops contribute delta.
  XOnly,
};

/// Raised when the live state count exceeds the configured cap.
class ResourceError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

struct EngineOptions {
  LoopWeight loop_weight = LoopWeight::DeltaX;
  std::size_t max_states = 20'000'000;
};

struct EngineStats {
  std::size_t peak_states = 0;
  std::size_t peak_frontier = 0;
  std::size_t steps = 0;
};

/// Unit vector e_label (label >= 1).
std::vector<int> unit_vector(int label);

/// The two smoothings of a crossing, or the single path of a P node.
/// `label_of` gives the label of an arc's component.
std::vector<TangleState> expand_crossing(const Node& node, const std::map<int, int>& label_of);

/// Glues a set of incoming paths onto a state by path concatenation, closing
/// loops as they form.
TangleState reduce_product(const TangleState& t, const TangleState& incoming,
                           LoopWeight loop_weight = LoopWeight::DeltaX);

/// Merges states with identical pairings by summing their weights; states
/// with zero weight are dropped. Output is sorted by pairing.
std::vector<TangleState> merge_states(const std::vector<TangleState>& states);

/// One factor of a contraction: a local tangle given as a sum of path sets.
struct Piece {
  std::vector<TangleState> terms;
  /// Arcs touched by the piece (each boundary arc once).
  std::vector<int> arcs() const;
};

/// Greedy order: start at the first piece, then repeatedly take the piece
/// sharing the most arcs with those already consumed (ties: lowest index).
std::vector<int> contraction_order(const std::vector<std::vector<int>>& piece_arcs);
std::vector<int> contraction_order(const PDCode& pd);

/// Contracts pieces in the given order. `terminals` are arcs that are never
/// glued; when present there must be exactly two of them, and the final open
/// path between them contributes X[v] without a delta factor.
HArrowPoly contract(const std::vector<Piece>& pieces, const std::vector<int>& order, const std::set<int>& terminals,
                    const EngineOptions& opts = {}, EngineStats* stats = nullptr);

/// Contracts pieces and returns the merged states over the arcs left open
/// (arcs touched only once), sorted by pairing.
std::vector<TangleState> contract_open(const std::vector<Piece>& pieces, const std::vector<int>& order,
                                       const EngineOptions& opts = {}, EngineStats* stats = nullptr);

/// The homological arrow polynomial (unnormalized; the unknot is delta).
HArrowPoly compute_harrow(const PDCode& pd, LoopWeight loop_weight = LoopWeight::DeltaX,
                          const EngineOptions& opts = {}, EngineStats* stats = nullptr);

/// The arrow polynomial <L>_A normalized so that the unknot is 1, computed by
/// cutting open the first occurrence of the largest arc id. Labels are
/// ignored. The result is in arrow form (X[2n] == K_n).
HArrowPoly compute_arrow(const PDCode& pd, const EngineOptions& opts = {}, EngineStats* stats = nullptr);

/// The same with (-A^3)^(-writhe) applied.
HArrowPoly compute_arrow_normalized(const PDCode& pd, const EngineOptions& opts = {}, EngineStats* stats = nullptr);

}  // namespace arrowpoly
