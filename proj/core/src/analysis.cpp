#include "arrowpoly/analysis.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace arrowpoly {

int genus_lower_bound(const HArrowPoly& p) {
  int best = 0;
  for (const auto& [m, c] : p.terms()) {
    const auto& f = m.factors();
    const int distinct = static_cast<int>(std::set<IndexVector>(f.begin(), f.end()).size());
    best = std::max(best, distinct <= 1 ? distinct : (distinct + 5) / 3);
  }
  return best;
}

int crossing_lower_bound(const HArrowPoly& p) {
  int best = 0;
  for (const auto& [m, c] : p.terms()) {
    int s = 0;
    for (const auto& v : m.factors()) s += v.abs_sum();
    best = std::max(best, (s + 1) / 2);
  }
  return best;
}

CheckerboardVerdict checkerboard_obstruction(const HArrowPoly& p) {
  for (const auto& [m, c] : p.terms()) {
    if (m.is_unit()) continue;
    std::vector<int64_t> idx;
    for (const auto& v : m.factors()) {
      if (v.size() != 1) throw InvariantError("checkerboard_obstruction needs single-label indices");
      idx.push_back(v.entries()[0]);
    }
    const int64_t sum = std::accumulate(idx.begin(), idx.end(), int64_t{0});
    const int64_t top = *std::max_element(idx.begin(), idx.end());
    std::string reason;
    if (idx.size() < 2) reason = "single factor (k = 1)";
    else if (sum % 4 != 0) reason = "index sum " + std::to_string(sum) + " not divisible by 4";
    else if (top > sum - top) reason = "largest index exceeds the sum of the others";
    if (!reason.empty()) return {true, m, reason};
  }
  return {};
}

bool NullhomologyReport::allows(int64_t n) const {
  if (n < 0) n = -n;
  if (n == 0) return arrow_trivial;
  if (index_gcd == 0) return true;
  return index_gcd % (n % 2 == 0 ? n : 2 * n) == 0;
}

NullhomologyReport nullhomology_necessary(const HArrowPoly& p) {
  NullhomologyReport r;
  for (const auto& [m, c] : p.terms())
    for (const auto& v : m.factors()) {
      if (v.size() != 1) throw InvariantError("nullhomology_necessary needs single-label indices");
      r.arrow_trivial = false;
      r.index_gcd = std::gcd(r.index_gcd, static_cast<int64_t>(v.entries()[0]));
    }
  return r;
}

BoundReport bound_report(const HArrowPoly& p) {
  BoundReport r;
  r.genus_lb = genus_lower_bound(p);
  r.crossing_lb = crossing_lower_bound(p);
  r.checkerboard = checkerboard_obstruction(p);
  r.arrow_trivial = p.is_scalar();
  return r;
}

}  // namespace arrowpoly
