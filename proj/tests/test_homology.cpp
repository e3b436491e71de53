#include <doctest.h>

#include <random>

#include "arrowpoly/homology.hpp"
#include "oracle.hpp"

using namespace arrowpoly;

namespace {

const char* kTrefoil = "PD[Xm[1, 4, 2, 5], Xm[3, 6, 4, 1], Xm[5, 2, 6, 3]]";
const char* kFigure8 = "PD[Xp[4, 2, 5, 1], Xp[8, 6, 1, 5], Xm[6, 3, 7, 4], Xm[2, 7, 3, 8]]";
const char* k21 = "PD[Xm[1, 2, 3, 4], Xm[4, 3, 1, 2]]";
const char* k35 = "PD[Xm[1, 4, 2, 5], Xm[2, 5, 3, 6], Xm[3, 6, 4, 1]]";

// Whether some assignment of Z/n values to faces satisfies every arc,
// by trying all of them.
bool numbering_exists(const FaceData& fd, int n) {
  const std::size_t f = fd.faces.size();
  std::vector<int> v(f, 0);
  while (true) {
    bool ok = true;
    for (const auto& [arc, left] : fd.left_face)
      if (((v[static_cast<std::size_t>(left)] - v[static_cast<std::size_t>(fd.right_face.at(arc))] - 1) % n + n) % n != 0) {
        ok = false;
        break;
      }
    if (ok) return true;
    std::size_t i = 0;
    while (i < f && ++v[i] == n) v[i++] = 0;
    if (i == f) return false;
  }
}

}  // namespace

TEST_SUITE("homology") {

TEST_CASE("classical knots admit integer numberings") {
  for (const char* s : {kTrefoil, kFigure8, "PD[P[1, 1]]"}) {
    const PDCode pd = parse_pd(s);
    CHECK(dehn_defect(pd).d == 0);
    const DehnResult r = solve_dehn(pd, 0);
    REQUIRE(r.numbering);
    CHECK_FALSE(r.witness);
    CHECK(verify_numbering(faces_and_genus(pd), *r.numbering));
    CHECK(checkerboard(pd));
  }
}

TEST_CASE("2.1 has odd defect and no checkerboard coloring") {
  const PDCode pd = parse_pd(k21);
  const FaceData fd = faces_and_genus(pd);
  const int64_t d = dehn_defect(pd).d;
  CHECK(d % 2 != 0);
  CHECK_FALSE(numbering_exists(fd, 2));
  CHECK_FALSE(checkerboard(pd));
  const DehnResult r = solve_dehn(pd, 2);
  CHECK_FALSE(r.numbering);
  REQUIRE(r.witness);
  const auto total = verify_witness(fd, *r.witness);
  REQUIRE(total);
  CHECK(*total == r.witness->total);
  CHECK(*total % 2 != 0);
}

TEST_CASE("3.5 is checkerboard colorable") {
  const PDCode pd = parse_pd(k35);
  CHECK(faces_and_genus(pd).genus() == 1);
  const auto c = checkerboard(pd);
  REQUIRE(c);
  const FaceData fd = faces_and_genus(pd);
  for (const auto& [arc, left] : fd.left_face) CHECK((*c)[static_cast<std::size_t>(left)] != (*c)[static_cast<std::size_t>(fd.right_face.at(arc))]);
}

TEST_CASE("virtual Hopf link") {
  const PDCode pd = parse_pd("PD[Xm[1, 2, 1, 2]]");
  const FaceData fd = faces_and_genus(pd);
  for (int n = 2; n <= 4; ++n) CHECK(solve_dehn(pd, n).numbering.has_value() == numbering_exists(fd, n));
}

TEST_CASE("base value shifts the whole numbering") {
  const PDCode pd = parse_pd(kFigure8);
  const auto r0 = solve_dehn(pd, 0, 0, 0);
  const auto r5 = solve_dehn(pd, 0, 0, 5);
  REQUIRE(r0.numbering);
  REQUIRE(r5.numbering);
  for (std::size_t i = 0; i < r0.numbering->values.size(); ++i)
    CHECK(r5.numbering->values[i] == r0.numbering->values[i] + 5);
  const auto r3 = solve_dehn(pd, 0, 2, -1);
  REQUIRE(r3.numbering);
  CHECK(r3.numbering->values[2] == -1);
}

TEST_CASE("verification rejects corrupted certificates") {
  const PDCode pd = parse_pd(kTrefoil);
  const FaceData fd = faces_and_genus(pd);
  DehnNumbering n = *solve_dehn(pd, 0).numbering;
  n.values[0] += 1;
  CHECK_FALSE(verify_numbering(fd, n));
  const PDCode v = parse_pd(k21);
  const FaceData vfd = faces_and_genus(v);
  WitnessCycle w = *solve_dehn(v, 2).witness;
  REQUIRE(!w.steps.empty());
  w.steps.pop_back();
  if (!w.steps.empty()) CHECK_FALSE(verify_witness(vfd, w));
}

TEST_CASE("solver agrees with exhaustive search on random diagrams") {
  std::mt19937_64 rng(23);
  int checked = 0;
  for (int it = 0; it < 300; ++it) {
    const PDCode pd = oracle::random_diagram(rng, {1, 5, 2, 1});
    const FaceData fd = faces_and_genus(pd);
    const int64_t d = dehn_defect(pd, fd).d;
    for (int n : {2, 3}) {
      if (fd.faces.size() > (n == 2 ? 14u : 9u)) continue;
      ++checked;
      const bool exists = numbering_exists(fd, n);
      CHECK(exists == (d % n == 0));
      const DehnResult r = solve_dehn(pd, fd, n);
      CHECK(r.numbering.has_value() == exists);
      if (r.numbering) CHECK(verify_numbering(fd, *r.numbering));
      if (r.witness) {
        const auto t = verify_witness(fd, *r.witness);
        REQUIRE(t);
        CHECK(*t % n != 0);
      }
      if (n == 2) CHECK(checkerboard(pd).has_value() == exists);
    }
    const DehnResult z = solve_dehn(pd, fd, 0);
    CHECK(z.numbering.has_value() == (d == 0));
    if (z.numbering) CHECK(verify_numbering(fd, *z.numbering));
    if (z.witness) CHECK(verify_witness(fd, *z.witness).value_or(0) != 0);
  }
  CHECK(checked > 300);
}

}  // TEST_SUITE
