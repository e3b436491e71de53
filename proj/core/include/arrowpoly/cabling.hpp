#pragma once

// n-cables of the 0-framing of an oriented diagram.
//
// Every arc is replaced by n parallel strands numbered 1..n from left to right
// relative to the arc's direction, and every crossing by the n x n grid in
// which each strand of the under-arc passes under each strand of the
// over-arc. Kinks of compensating sign are inserted first so that every
// component has self-writhe 0.

#include <memory>
#include <vector>

#include "arrowpoly/pdcode.hpp"
#include "arrowpoly/poly.hpp"
#include "arrowpoly/whisker_engine.hpp"

namespace arrowpoly {

enum class BlockKind {
  Xp,
  Xm,
  /// Xp[x, z, y, y]: a positive curl.
  KinkP,
  /// Xm[x, y, y, z]: a negative curl.
  KinkM,
};

/// Precomputed expansion of a cabled crossing or curl.
///
/// Crossing blocks have 4n boundary slots: slot s*n + (k-1) is strand k of
/// the arc at crossing slot s (0..3). Curl blocks have 2n: strands of the
/// incoming arc x, then of the outgoing arc z. Whisker vectors are relative:
/// entry 0 counts the under-strand label, entry 1 the over-strand label.
/// Path endpoints are boundary slot numbers.
struct CabledBlock {
  BlockKind kind = BlockKind::Xp;
  int n = 1;
  std::vector<TangleState> expansion;
  std::size_t boundary_slots() const;
};

/// Returns the block for (kind, n), computing it on first use. The returned
/// value is shared and never modified after publication.
std::shared_ptr<const CabledBlock> block_cache(BlockKind kind, int n);

/// Builds the block directly by contracting the crossing grid (no cache).
CabledBlock build_block(BlockKind kind, int n);

/// Substitutes concrete arcs and labels into a block. `slot_arcs` has one arc
/// per boundary slot; `under_label` / `over_label` give the labels for the
/// relative whisker entries.
Piece instantiate_block(const CabledBlock& block, const std::vector<int>& slot_arcs, int under_label, int over_label);

/// Adds compensating kinks so every component has self-writhe 0. Kinks go on
/// the smallest arc id of each component.
PDCode zero_frame(const PDCode& pd);

/// The n-cable of the 0-framing as an explicit PD code.
PDCode cable(const PDCode& pd, int n);

struct CableOptions {
  EngineOptions engine;
  /// Expand crossings through the block cache (otherwise crossing by crossing).
  bool use_blocks = true;
};

/// Writhe-normalized arrow polynomial of cable(pd, n), in arrow form.
HArrowPoly cabled_arrow(const PDCode& pd, int n, const CableOptions& opts = {}, EngineStats* stats = nullptr);

}  // namespace arrowpoly
