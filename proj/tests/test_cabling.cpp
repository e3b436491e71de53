#include <doctest.h>

#include <random>

#include "arrowpoly/cabling.hpp"
#include "oracle.hpp"

using namespace arrowpoly;

namespace {

const char* kTrefoil = "PD[Xm[1, 4, 2, 5], Xm[3, 6, 4, 1], Xm[5, 2, 6, 3]]";
const char* k21 = "PD[Xm[1, 2, 3, 4], Xm[4, 3, 1, 2]]";
const char* kVhopf = "PD[Xm[1, 2, 1, 2]]";
const char* k37 = "PD[Xm[2, 5, 1, 4], Xp[4, 6, 3, 1], Xp[6, 2, 5, 3]]";

HArrowPoly with_blocks(const PDCode& pd, int n, bool blocks) {
  CableOptions o;
  o.use_blocks = blocks;
  return cabled_arrow(pd, n, o);
}

}  // namespace

TEST_SUITE("cabling") {

TEST_CASE("block boundary sizes") {
  CHECK(build_block(BlockKind::Xp, 2).boundary_slots() == 8);
  CHECK(build_block(BlockKind::KinkM, 3).boundary_slots() == 6);
  // n^2 crossings, each smoothed two ways; merging only removes duplicates.
  CHECK(build_block(BlockKind::Xm, 1).expansion.size() == 2);
}

TEST_CASE("the 1-block of a crossing is its smoothing table") {
  for (BlockKind kind : {BlockKind::Xp, BlockKind::Xm}) {
    const CabledBlock b = build_block(kind, 1);
    const Piece p = instantiate_block(b, {1, 2, 3, 4}, 1, 2);
    const Node node = kind == BlockKind::Xp ? Node::xp(1, 2, 3, 4) : Node::xm(1, 2, 3, 4);
    // Under strand 1 -> 3, over strand between 2 and 4.
    CHECK(merge_states(p.terms) == merge_states(expand_crossing(node, {{1, 1}, {3, 1}, {2, 2}, {4, 2}})));
  }
}

TEST_CASE("cache returns one shared block equal to a fresh build") {
  const auto a = block_cache(BlockKind::Xm, 2);
  const auto b = block_cache(BlockKind::Xm, 2);
  CHECK(a.get() == b.get());
  CHECK(a->expansion == build_block(BlockKind::Xm, 2).expansion);
  CHECK(block_cache(BlockKind::KinkP, 2)->expansion == build_block(BlockKind::KinkP, 2).expansion);
}

TEST_CASE("blocks and direct contraction agree") {
  for (const char* s : {kTrefoil, k21, kVhopf, k37}) {
    const PDCode pd = parse_pd(s);
    CAPTURE(s);
    for (int n = 1; n <= 3; ++n) {
      if (n == 3 && pd.crossing_count() > 2) continue;
      CHECK(with_blocks(pd, n, true) == with_blocks(pd, n, false));
    }
  }
}

TEST_CASE("the 1-cable is the normalized arrow polynomial") {
  for (const char* s : {kTrefoil, k21, kVhopf, k37}) {
    const PDCode pd = parse_pd(s);
    CHECK(cabled_arrow(pd, 1) == compute_arrow_normalized(pd));
  }
}

TEST_CASE("cables of the unknot") {
  const PDCode u = parse_pd("PD[P[1, 1]]");
  const PDCode c3 = cable(u, 3);
  CHECK(c3.components().size() == 3);
  const HArrowPoly d(LaurentZ::delta());
  CHECK(compute_harrow(c3) == d * d * d);
  // A kinked unknot is zero-framed before cabling.
  const PDCode kinked = parse_pd("PD[Xp[1, 1, 2, 2]]");
  CHECK(zero_frame(kinked).crossing_count() == 2);
  CHECK(compute_harrow(cable(kinked, 2)) == d * d);
  CHECK(cabled_arrow(kinked, 2) == d);
}

TEST_CASE("cabled diagrams have n strands per component") {
  const PDCode h = parse_pd(kVhopf);
  for (int n = 1; n <= 3; ++n) {
    const PDCode c = cable(h, n);
    CHECK(c.components().size() == static_cast<std::size_t>(2 * n));
    CHECK(c.crossing_count() == n * n * zero_frame(h).crossing_count());
    for (int k = 0; k < 2 * n; ++k) CHECK(self_writhe(c, k) == 0);
  }
}

TEST_CASE("zero framing") {
  const PDCode t = parse_pd(kTrefoil);
  const PDCode z = zero_frame(t);
  CHECK(z.crossing_count() == 6);
  CHECK(self_writhe(z, 0) == 0);
  CHECK(zero_frame(parse_pd("PD[Xm[1, 4, 2, 5], Xp[6, 3, 1, 2], Xp[3, 6, 4, 5]]")).crossing_count() == 4);
}

TEST_CASE("cabled polynomials are invariant under kinks and R2 moves") {
  std::mt19937_64 rng(41);
  for (const char* s : {k21, kTrefoil}) {
    const PDCode pd = parse_pd(s);
    const HArrowPoly c2 = cabled_arrow(pd, 2);
    CHECK(cabled_arrow(insert_kink(pd, 1, 1), 2) == c2);
    CHECK(cabled_arrow(insert_kink(pd, 2, -1), 2) == c2);
    const FaceData fd = faces_and_genus(pd);
    const auto& f = fd.faces[0];
    if (f.size() >= 2) CHECK(cabled_arrow(r2_insert(pd, 0, f[0], f[1]), 2) == c2);
  }
}

TEST_CASE("cabled arrow polynomials are in arrow form and mirror correctly") {
  const PDCode pd = parse_pd(k37);
  const HArrowPoly c2 = cabled_arrow(pd, 2);
  CHECK(is_arrow_form(c2));
  CHECK(cabled_arrow(mirror_pd(pd), 2) == mirror_subst(c2));
}

}  // TEST_SUITE
