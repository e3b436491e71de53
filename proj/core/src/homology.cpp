#include "arrowpoly/homology.hpp"

#include <numeric>
#include <queue>
#include <stdexcept>

namespace arrowpoly {

namespace {

struct Edge {
  int arc;
  int right;  // +1 from here
  int left;
};

std::vector<Edge> edges_of(const FaceData& fd) {
  std::vector<Edge> es;
  for (const auto& [arc, r] : fd.right_face) es.push_back({arc, r, fd.left_face.at(arc)});
  return es;
}

int64_t reduce(int64_t v, int64_t n) {
  if (n == 0) return v;
  v %= n;
  return v < 0 ? v + n : v;
}

/// Integer potentials along a BFS spanning forest, with tree parents.
struct Forest {
  std::vector<int64_t> pot;
  std::vector<int> parent_edge;  // index into edges, -1 at roots
  std::vector<int> root;
  std::vector<char> tree_edge;
};

Forest span(const FaceData& fd, const std::vector<Edge>& es, int base_face) {
  const std::size_t nf = fd.faces.size();
  std::vector<std::vector<int>> adj(nf);
  for (std::size_t i = 0; i < es.size(); ++i) {
    adj[static_cast<std::size_t>(es[i].right)].push_back(static_cast<int>(i));
    adj[static_cast<std::size_t>(es[i].left)].push_back(static_cast<int>(i));
  }
  Forest f{std::vector<int64_t>(nf, 0), std::vector<int>(nf, -1), std::vector<int>(nf, -1),
           std::vector<char>(es.size(), 0)};
  std::vector<int> roots;
  if (nf > 0) roots.push_back(base_face);
  for (std::size_t i = 0; i < nf; ++i) roots.push_back(static_cast<int>(i));
  for (int r : roots) {
    if (f.root[static_cast<std::size_t>(r)] >= 0) continue;
    f.root[static_cast<std::size_t>(r)] = r;
    std::queue<int> q;
    q.push(r);
    while (!q.empty()) {
      const int u = q.front();
      q.pop();
      for (int ei : adj[static_cast<std::size_t>(u)]) {
        const Edge& e = es[static_cast<std::size_t>(ei)];
        const int v = e.right == u ? e.left : e.right;
        if (f.root[static_cast<std::size_t>(v)] >= 0) continue;
        f.root[static_cast<std::size_t>(v)] = r;
        f.pot[static_cast<std::size_t>(v)] = f.pot[static_cast<std::size_t>(u)] + (e.right == u ? 1 : -1);
        f.parent_edge[static_cast<std::size_t>(v)] = ei;
        f.tree_edge[static_cast<std::size_t>(ei)] = 1;
        q.push(v);
      }
    }
  }
  return f;
}

/// violation = pot(left) - pot(right) - 1; zero iff the edge is satisfied.
int64_t violation(const Forest& f, const Edge& e) {
  return f.pot[static_cast<std::size_t>(e.left)] - f.pot[static_cast<std::size_t>(e.right)] - 1;
}

/// Tree path from face u up to its root, as steps walking upward.
std::vector<CycleStep> path_up(const Forest& f, const std::vector<Edge>& es, int u) {
  std::vector<CycleStep> out;
  while (f.parent_edge[static_cast<std::size_t>(u)] >= 0) {
    const Edge& e = es[static_cast<std::size_t>(f.parent_edge[static_cast<std::size_t>(u)])];
    const int parent = e.right == u ? e.left : e.right;
    out.push_back({e.arc, u, parent, e.right == u ? 1 : -1});
    u = parent;
  }
  return out;
}

WitnessCycle witness_for(const Forest& f, const std::vector<Edge>& es, const Edge& bad) {
  // right -> left across `bad`, then back through the tree to `right`.
  WitnessCycle w;
  w.steps.push_back({bad.arc, bad.right, bad.left, 1});
  auto up_l = path_up(f, es, bad.left);
  auto up_r = path_up(f, es, bad.right);
  // Strip the common tail above the lowest common ancestor.
  while (!up_l.empty() && !up_r.empty() && up_l.back().arc == up_r.back().arc && up_l.back().to == up_r.back().to) {
    up_l.pop_back();
    up_r.pop_back();
  }
  for (const auto& s : up_l) w.steps.push_back(s);
  for (auto it = up_r.rbegin(); it != up_r.rend(); ++it) w.steps.push_back({it->arc, it->to, it->from, -it->increment});
  for (const auto& s : w.steps) w.total += s.increment;
  return w;
}

}  // namespace

NumberingDefect dehn_defect(const PDCode& pd) { return dehn_defect(pd, faces_and_genus(pd)); }

NumberingDefect dehn_defect(const PDCode&, const FaceData& fd) {
  const auto es = edges_of(fd);
  const Forest f = span(fd, es, 0);
  int64_t d = 0;
  for (std::size_t i = 0; i < es.size(); ++i)
    if (!f.tree_edge[i]) d = std::gcd(d, violation(f, es[i]));
  return {d < 0 ? -d : d};
}

DehnResult solve_dehn(const PDCode& pd, int64_t modulus, int base_face, int64_t base_value) {
  return solve_dehn(pd, faces_and_genus(pd), modulus, base_face, base_value);
}

DehnResult solve_dehn(const PDCode&, const FaceData& fd, int64_t modulus, int base_face, int64_t base_value) {
  if (modulus < 0) throw std::invalid_argument("modulus must be nonnegative");
  if (base_face < 0 || static_cast<std::size_t>(base_face) >= fd.faces.size())
    throw std::out_of_range("base face out of range");
  const auto es = edges_of(fd);
  const Forest f = span(fd, es, base_face);
  DehnResult out;
  for (std::size_t i = 0; i < es.size(); ++i) {
    if (f.tree_edge[i] || reduce(violation(f, es[i]), modulus) == 0) continue;
    out.witness = witness_for(f, es, es[i]);
    return out;
  }
  DehnNumbering num;
  num.modulus = modulus;
  for (int64_t p : f.pot) num.values.push_back(reduce(p + base_value, modulus));
  out.numbering = std::move(num);
  return out;
}

std::optional<std::vector<int>> checkerboard(const PDCode& pd) {
  const auto r = solve_dehn(pd, 2);
  if (!r.numbering) return std::nullopt;
  std::vector<int> colors;
  for (int64_t v : r.numbering->values) colors.push_back(static_cast<int>(v));
  return colors;
}

bool verify_numbering(const FaceData& fd, const DehnNumbering& f) {
  if (f.values.size() != fd.faces.size()) return false;
  for (const auto& [arc, r] : fd.right_face) {
    const int l = fd.left_face.at(arc);
    const int64_t diff = f.values[static_cast<std::size_t>(l)] - f.values[static_cast<std::size_t>(r)] - 1;
    if (reduce(diff, f.modulus) != 0) return false;
  }
  return true;
}

std::optional<int64_t> verify_witness(const FaceData& fd, const WitnessCycle& w) {
  if (w.steps.empty()) return std::nullopt;
  int64_t total = 0;
  for (std::size_t i = 0; i < w.steps.size(); ++i) {
    const auto& s = w.steps[i];
    const auto r = fd.right_face.find(s.arc);
    if (r == fd.right_face.end()) return std::nullopt;
    const int l = fd.left_face.at(s.arc);
    if (s.from == r->second && s.to == l) total += 1;
    else if (s.from == l && s.to == r->second) total -= 1;
    else return std::nullopt;
    if (w.steps[(i + 1) % w.steps.size()].from != s.to) return std::nullopt;
  }
  return total;
}

}  // namespace arrowpoly
