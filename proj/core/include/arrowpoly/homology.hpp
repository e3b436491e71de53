#pragma once

// Dehn numberings of the faces of a diagram's cellular embedding: crossing an
// arc from its right face to its left face adds 1. Over Z/2 this is a
// checkerboard coloring.

#include <cstdint>
#include <optional>
#include <vector>

#include "arrowpoly/pdcode.hpp"

namespace arrowpoly {

struct DehnNumbering {
  /// 0 for Z, otherwise n for Z/nZ (values reduced into [0, n)).
  int64_t modulus = 0;
  /// Indexed by face, as in FaceData::faces.
  std::vector<int64_t> values;
};

struct NumberingDefect {
  /// Z/nZ numberings exist iff n divides d; d == 0 means Z numberings exist.
  int64_t d = 0;
};

/// One step of a face cycle: crossing `arc` from `from` to `to`. The step
/// contributes +1 when going from the arc's right face to its left face.
struct CycleStep {
  int arc = 0;
  int from = 0;
  int to = 0;
  int increment = 0;
};

struct WitnessCycle {
  std::vector<CycleStep> steps;
  /// Sum of increments; nonzero modulo the requested modulus.
  int64_t total = 0;
};

struct DehnResult {
  std::optional<DehnNumbering> numbering;
  std::optional<WitnessCycle> witness;
};

NumberingDefect dehn_defect(const PDCode& pd);
NumberingDefect dehn_defect(const PDCode& pd, const FaceData& fd);

/// Solves over Z (modulus 0) or Z/nZ. `base_face` gets `base_value`; other
/// connected pieces are rooted at their first face with the same value.
DehnResult solve_dehn(const PDCode& pd, int64_t modulus, int base_face = 0, int64_t base_value = 0);
DehnResult solve_dehn(const PDCode& pd, const FaceData& fd, int64_t modulus, int base_face = 0,
                      int64_t base_value = 0);

/// Face colors 0 (black) / 1 (white), or nullopt when none exists.
std::optional<std::vector<int>> checkerboard(const PDCode& pd);

/// Re-checks every arc constraint independently of the solver.
bool verify_numbering(const FaceData& fd, const DehnNumbering& f);

/// Sum of a witness cycle's increments, recomputed from the face data; also
/// checks that consecutive steps connect and that the cycle closes.
std::optional<int64_t> verify_witness(const FaceData& fd, const WitnessCycle& w);

}  // namespace arrowpoly
