#include "arrowpoly/whisker_engine.hpp"

#include <algorithm>
#include <unordered_map>

namespace arrowpoly {

namespace {

std::vector<int> add_vec(std::vector<int> a, const std::vector<int>& b, int sign = 1) {
  if (a.size() < b.size()) a.resize(b.size(), 0);
  for (std::size_t i = 0; i < b.size(); ++i) a[i] += sign * b[i];
  return a;
}

std::vector<int> neg_vec(std::vector<int> a) {
  for (int& x : a) x = -x;
  return a;
}

void trim(std::vector<int>& v) {
  while (!v.empty() && v.back() == 0) v.pop_back();
}

HArrowPoly loop_value(const std::vector<int>& v, LoopWeight lw) {
  IndexVector iv(v);
  if (iv.is_zero()) return HArrowPoly(LaurentZ::delta());
  const LaurentZ c = lw == LoopWeight::DeltaX ? LaurentZ::delta() : LaurentZ(1);
  return HArrowPoly::term(c, Monomial({iv}));
}

}  // namespace

PathTerm PathTerm::make(int from, int to, std::vector<int> whiskers) {
  trim(whiskers);
  if (to < from) return PathTerm{to, from, neg_vec(std::move(whiskers))};
  return PathTerm{from, to, std::move(whiskers)};
}

void TangleState::normalize() { std::sort(paths.begin(), paths.end()); }

std::vector<int> unit_vector(int label) {
  if (label < 1) throw std::invalid_argument("labels are positive integers");
  std::vector<int> v(static_cast<std::size_t>(label), 0);
  v.back() = 1;
  return v;
}

std::vector<TangleState> expand_crossing(const Node& node, const std::map<int, int>& label_of) {
  auto e = [&](int arc) {
    auto it = label_of.find(arc);
    return unit_vector(it == label_of.end() ? 1 : it->second);
  };
  const auto& [a, b, c, d] = node.arcs;
  const LaurentZ up = LaurentZ::monomial(1, 1);
  const LaurentZ down = LaurentZ::monomial(1, -1);
  std::vector<TangleState> out;
  auto emit = [&](const LaurentZ& w, PathTerm p, PathTerm q) {
    TangleState t{{std::move(p), std::move(q)}, HArrowPoly(w)};
    t.normalize();
    out.push_back(std::move(t));
  };
  switch (node.kind) {
    case NodeKind::P:
      out.push_back(TangleState{{PathTerm::make(a, b, {})}, HArrowPoly(1)});
      break;
    case NodeKind::Xp:
      emit(up, PathTerm::make(a, b, {}), PathTerm::make(d, c, add_vec(e(c), e(d), -1)));
      emit(down, PathTerm::make(d, a, e(a)), PathTerm::make(c, b, e(b)));
      break;
    case NodeKind::Xm:
      emit(down, PathTerm::make(b, c, {}), PathTerm::make(a, d, add_vec(e(d), e(a), -1)));
      emit(up, PathTerm::make(a, b, e(b)), PathTerm::make(d, c, e(c)));
      break;
  }
  return out;
}

TangleState reduce_product(const TangleState& t, const TangleState& incoming, LoopWeight loop_weight) {
  std::vector<PathTerm> paths = t.paths;
  paths.insert(paths.end(), incoming.paths.begin(), incoming.paths.end());
  HArrowPoly weight = t.weight * incoming.weight;
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < paths.size() && !changed; ++i) {
      if (paths[i].a == paths[i].b) {
        weight *= loop_value(paths[i].whiskers, loop_weight);
        paths.erase(paths.begin() + static_cast<long>(i));
        changed = true;
        break;
      }
      for (std::size_t j = i + 1; j < paths.size() && !changed; ++j) {
        const PathTerm p = paths[i];
        const PathTerm q = paths[j];
        PathTerm r;
        if (p.b == q.a) {
          r = PathTerm::make(p.a, q.b, add_vec(p.whiskers, q.whiskers));
        } else if (p.b == q.b) {
          r = PathTerm::make(p.a, q.a, add_vec(p.whiskers, q.whiskers, -1));
        } else if (p.a == q.a) {
          r = PathTerm::make(q.b, p.b, add_vec(p.whiskers, q.whiskers, -1));
        } else if (p.a == q.b) {
          r = PathTerm::make(q.a, p.b, add_vec(q.whiskers, p.whiskers));
        } else {
          continue;
        }
        paths.erase(paths.begin() + static_cast<long>(j));
        paths[i] = std::move(r);
        changed = true;
      }
    }
  }
  TangleState out{std::move(paths), std::move(weight)};
  out.normalize();
  return out;
}

std::vector<TangleState> merge_states(const std::vector<TangleState>& states) {
  std::map<std::vector<PathTerm>, HArrowPoly> acc;
  for (const auto& s : states) {
    std::vector<PathTerm> key = s.paths;
    std::sort(key.begin(), key.end());
    acc[key] += s.weight;
  }
  std::vector<TangleState> out;
  for (auto& [k, w] : acc)
    if (!w.is_zero()) out.push_back(TangleState{k, w});
  return out;
}

std::vector<int> Piece::arcs() const {
  std::vector<int> out;
  if (terms.empty()) return out;
  std::map<int, int> count;
  for (const auto& p : terms.front().paths) {
    count[p.a]++;
    count[p.b]++;
  }
  for (const auto& [a, n] : count) out.push_back(a);
  return out;
}

std::vector<int> contraction_order(const std::vector<std::vector<int>>& piece_arcs) {
  const std::size_t n = piece_arcs.size();
  std::vector<int> order;
  if (n == 0) return order;
  std::vector<bool> used(n, false);
  std::map<int, int> seen;  // arc -> times touched by consumed pieces
  // arc -> pieces touching it
  std::map<int, std::vector<int>> touching;
  for (std::size_t i = 0; i < n; ++i)
    for (int a : piece_arcs[i]) touching[a].push_back(static_cast<int>(i));
  std::vector<int> score(n, 0);
  auto consume = [&](int i) {
    used[static_cast<std::size_t>(i)] = true;
    order.push_back(i);
    for (int a : piece_arcs[static_cast<std::size_t>(i)]) {
      if (seen[a]++ != 0) continue;
      for (int j : touching[a])
        if (!used[static_cast<std::size_t>(j)]) score[static_cast<std::size_t>(j)]++;
    }
  };
  consume(0);
  while (order.size() < n) {
    int best = -1;
    for (std::size_t j = 0; j < n; ++j) {
      if (used[j]) continue;
      if (best < 0 || score[j] > score[static_cast<std::size_t>(best)]) best = static_cast<int>(j);
    }
    consume(best);
  }
  return order;
}

std::vector<int> contraction_order(const PDCode& pd) {
  std::vector<std::vector<int>> arcs;
  for (const auto& n : pd.nodes()) arcs.emplace_back(n.arcs.begin(), n.arcs.begin() + n.arity());
  return contraction_order(arcs);
}

// ---- fast contraction ---------------------------------------------------

namespace {

/// Sorted multiset of interned index-vector ids.
using MonoKey = std::vector<uint32_t>;

struct CoeffTerm {
  MonoKey mono;
  LaurentZ coeff;
};
/// Sorted by mono, no zero coefficients.
using CoeffMap = std::vector<CoeffTerm>;

class Interner {
public:
  uint32_t id(const IndexVector& v) {
    auto [it, inserted] = ids_.try_emplace(v, static_cast<uint32_t>(vectors_.size()));
    if (inserted) vectors_.push_back(v);
    return it->second;
  }
  const IndexVector& vec(uint32_t id) const { return vectors_[id]; }

private:
  std::map<IndexVector, uint32_t> ids_;
  std::vector<IndexVector> vectors_;
};

void coeff_accumulate(CoeffMap& into, CoeffMap&& from) {
  if (into.empty()) {
    into = std::move(from);
    return;
  }
  CoeffMap out;
  out.reserve(into.size() + from.size());
  auto i = into.begin();
  auto j = from.begin();
  while (i != into.end() || j != from.end()) {
    if (j == from.end() || (i != into.end() && i->mono < j->mono)) {
      out.push_back(std::move(*i++));
    } else if (i == into.end() || j->mono < i->mono) {
      out.push_back(std::move(*j++));
    } else {
      i->coeff += j->coeff;
      if (!i->coeff.is_zero()) out.push_back(std::move(*i));
      ++i;
      ++j;
    }
  }
  into = std::move(out);
}

MonoKey mono_mul(const MonoKey& a, const MonoKey& b) {
  MonoKey r;
  r.reserve(a.size() + b.size());
  std::merge(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(r));
  return r;
}

CoeffMap coeff_mul(const CoeffMap& a, const CoeffMap& b) {
  if (b.size() == 1 && b.front().mono.empty()) {
    CoeffMap r = a;
    for (auto& t : r) t.coeff *= b.front().coeff;
    return r;
  }
  std::map<MonoKey, LaurentZ> acc;
  for (const auto& x : a)
    for (const auto& y : b) acc[mono_mul(x.mono, y.mono)] += x.coeff * y.coeff;
  CoeffMap r;
  for (auto& [m, c] : acc)
    if (!c.is_zero()) r.push_back({m, std::move(c)});
  return r;
}

struct KeyHash {
  std::size_t operator()(const std::vector<int32_t>& v) const noexcept {
    uint64_t h = 0xcbf29ce484222325ULL ^ v.size();
    for (int32_t x : v) {
      h ^= static_cast<uint32_t>(x);
      h *= 0x100000001b3ULL;
      h ^= h >> 29;
    }
    return static_cast<std::size_t>(h);
  }
};

using StateMap = std::unordered_map<std::vector<int32_t>, CoeffMap, KeyHash>;

/// A term of a piece in local form: segments between local arc indices.
struct LocalSeg {
  int u, v;
  std::vector<int> w;  // oriented u -> v, padded to the label dimension
};

class Contractor {
public:
  Contractor(const std::vector<Piece>& pieces, const std::set<int>& terminals, const EngineOptions& opts)
      : pieces_(pieces), terminals_(terminals), opts_(opts) {
    for (const auto& p : pieces)
      for (const auto& t : p.terms)
        for (const auto& path : t.paths) dim_ = std::max(dim_, static_cast<int>(path.whiskers.size()));
    for (const auto& p : pieces)
      for (const auto& t : p.terms)
        for (const auto& [m, c] : t.weight.terms())
          for (const auto& f : m.factors()) dim_ = std::max(dim_, static_cast<int>(f.size()));
    dim_ = std::max(dim_, 1);
  }

  HArrowPoly run(const std::vector<int>& order, EngineStats* stats) {
    std::vector<int> frontier;
    StateMap states = run_steps(order, stats, frontier);
    return finish(frontier, states);
  }

  std::vector<TangleState> run_open(const std::vector<int>& order, EngineStats* stats) {
    std::vector<int> frontier;
    StateMap states = run_steps(order, stats, frontier);
    const std::size_t m = frontier.size();
    const std::size_t dim = static_cast<std::size_t>(dim_);
    std::vector<TangleState> out;
    for (const auto& [key, c] : states) {
      TangleState t;
      std::size_t wpos = m;
      for (std::size_t i = 0; i < m; ++i) {
        const int p = key[i];
        if (static_cast<int>(i) > p) continue;
        std::vector<int> w(key.begin() + static_cast<long>(wpos), key.begin() + static_cast<long>(wpos + dim));
        wpos += dim;
        t.paths.push_back(PathTerm::make(frontier[i], frontier[static_cast<std::size_t>(p)], std::move(w)));
      }
      t.normalize();
      t.weight = from_coeff(c);
      out.push_back(std::move(t));
    }
    std::sort(out.begin(), out.end(), [](const TangleState& x, const TangleState& y) { return x.paths < y.paths; });
    return out;
  }

private:
  StateMap run_steps(const std::vector<int>& order, EngineStats* stats, std::vector<int>& frontier) {
    StateMap states;
    states.emplace(std::vector<int32_t>{}, CoeffMap{CoeffTerm{{}, LaurentZ(1)}});
    for (int pi : order) {
      step(pieces_[static_cast<std::size_t>(pi)], frontier, states);
      if (stats) {
        stats->steps++;
        stats->peak_states = std::max(stats->peak_states, states.size());
        stats->peak_frontier = std::max(stats->peak_frontier, frontier.size());
      }
    }
    return states;
  }

  CoeffMap to_coeff(const HArrowPoly& p) {
    CoeffMap r;
    for (const auto& [m, c] : p.terms()) {
      MonoKey k;
      for (const auto& f : m.factors()) k.push_back(interner_.id(f));
      std::sort(k.begin(), k.end());
      r.push_back({std::move(k), c});
    }
    std::sort(r.begin(), r.end(), [](const CoeffTerm& x, const CoeffTerm& y) { return x.mono < y.mono; });
    return r;
  }

  HArrowPoly from_coeff(const CoeffMap& c) const {
    HArrowPoly r;
    for (const auto& t : c) {
      std::vector<IndexVector> fs;
      for (uint32_t id : t.mono) fs.push_back(interner_.vec(id));
      r.add_term(Monomial(std::move(fs)), t.coeff);
    }
    return r;
  }

  std::vector<int> padded(const std::vector<int>& w) const {
    std::vector<int> r(static_cast<std::size_t>(dim_), 0);
    std::copy(w.begin(), w.end(), r.begin());
    return r;
  }

  void step(const Piece& piece, std::vector<int>& frontier, StateMap& states) {
    // Local indexing: current frontier first, then arcs new to this piece.
    std::map<int, int> local;
    for (std::size_t i = 0; i < frontier.size(); ++i) local[frontier[i]] = static_cast<int>(i);
    std::vector<int> local_arc = frontier;
    std::vector<int> mult(frontier.size(), 1);
    const auto& t0 = piece.terms.front();
    for (const auto& p : t0.paths) {
      for (int a : {p.a, p.b}) {
        auto [it, inserted] = local.try_emplace(a, static_cast<int>(local_arc.size()));
        if (inserted) {
          local_arc.push_back(a);
          mult.push_back(0);
        }
        mult[static_cast<std::size_t>(it->second)]++;
      }
    }
    const int n_local = static_cast<int>(local_arc.size());
    std::vector<int> next_frontier;
    std::vector<int> new_pos(static_cast<std::size_t>(n_local), -1);
    for (int i = 0; i < n_local; ++i) {
      const bool terminal = terminals_.count(local_arc[static_cast<std::size_t>(i)]) != 0;
      if (mult[static_cast<std::size_t>(i)] == 1 || terminal) {
        if (mult[static_cast<std::size_t>(i)] != 1) throw std::logic_error("terminal arc glued");
        new_pos[static_cast<std::size_t>(i)] = static_cast<int>(next_frontier.size());
        next_frontier.push_back(local_arc[static_cast<std::size_t>(i)]);
      } else if (mult[static_cast<std::size_t>(i)] != 2) {
        throw std::logic_error("arc " + std::to_string(local_arc[static_cast<std::size_t>(i)]) + " touched " +
                               std::to_string(mult[static_cast<std::size_t>(i)]) + " times");
      }
    }

    // Piece terms in local form.
    struct LocalTerm {
      std::vector<LocalSeg> segs;
      CoeffMap coeff;
    };
    std::vector<LocalTerm> lterms;
    for (const auto& t : piece.terms) {
      LocalTerm lt;
      for (const auto& p : t.paths) lt.segs.push_back({local.at(p.a), local.at(p.b), padded(p.whiskers)});
      lt.coeff = to_coeff(t.weight);
      lterms.push_back(std::move(lt));
    }

    const std::size_t dim = static_cast<std::size_t>(dim_);
    const std::size_t m = frontier.size();
    StateMap next;
    next.reserve(states.size() * 2);

    // Scratch buffers.
    std::vector<LocalSeg> segs;
    std::vector<std::array<int, 2>> attach(static_cast<std::size_t>(n_local));  // seg*2+end, -1 if none
    std::vector<bool> seg_used;
    std::vector<int> acc(dim);

    for (auto& [key, coeff] : states) {
      for (const auto& lt : lterms) {
        segs.clear();
        for (std::size_t i = 0; i < m; ++i) {
          const int p = key[i];
          if (static_cast<int>(i) < p) {
            // whiskers stored after the partner table, in order of lower index
            segs.push_back({static_cast<int>(i), p, {}});
          }
        }
        {
          std::size_t wpos = m;
          for (auto& s : segs) {
            s.w.assign(key.begin() + static_cast<long>(wpos), key.begin() + static_cast<long>(wpos + dim));
            wpos += dim;
          }
        }
        for (const auto& s : lt.segs) segs.push_back(s);
        for (auto& at : attach) at = {-1, -1};
        for (std::size_t si = 0; si < segs.size(); ++si) {
          for (int end = 0; end < 2; ++end) {
            const int li = end == 0 ? segs[si].u : segs[si].v;
            auto& at = attach[static_cast<std::size_t>(li)];
            (at[0] < 0 ? at[0] : at[1]) = static_cast<int>(si * 2 + static_cast<std::size_t>(end));
          }
        }
        seg_used.assign(segs.size(), false);

        std::vector<int32_t> out_key(next_frontier.size() + next_frontier.size() / 2 * dim, 0);
        std::vector<std::pair<int, std::vector<int>>> pairs;  // lower new index -> whiskers
        for (int li = 0; li < n_local; ++li) {
          const int np = new_pos[static_cast<std::size_t>(li)];
          if (np < 0) continue;
          int start_seg_end = attach[static_cast<std::size_t>(li)][0];
          if (seg_used[static_cast<std::size_t>(start_seg_end / 2)]) continue;
          std::fill(acc.begin(), acc.end(), 0);
          int cur = li;
          int se = start_seg_end;
          for (;;) {
            const std::size_t si = static_cast<std::size_t>(se / 2);
            const int end = se % 2;
            seg_used[si] = true;
            const auto& s = segs[si];
            const int sign = end == 0 ? 1 : -1;
            for (std::size_t k = 0; k < dim; ++k) acc[k] += sign * s.w[k];
            cur = end == 0 ? s.v : s.u;
            const auto& at = attach[static_cast<std::size_t>(cur)];
            const int other = at[0] == static_cast<int>(si * 2 + static_cast<std::size_t>(1 - end)) ? at[1] : at[0];
            if (new_pos[static_cast<std::size_t>(cur)] >= 0) break;
            se = other;
          }
          const int a = np;
          const int b = new_pos[static_cast<std::size_t>(cur)];
          out_key[static_cast<std::size_t>(a)] = b;
          out_key[static_cast<std::size_t>(b)] = a;
          if (a < b) {
            pairs.emplace_back(a, acc);
          } else {
            std::vector<int> neg(acc);
            for (int& x : neg) x = -x;
            pairs.emplace_back(b, std::move(neg));
          }
        }
        std::sort(pairs.begin(), pairs.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
        {
          std::size_t wpos = next_frontier.size();
          for (const auto& [lo, w] : pairs) {
            std::copy(w.begin(), w.end(), out_key.begin() + static_cast<long>(wpos));
            wpos += dim;
          }
        }

        // Closed loops.
        int deltas = 0;
        MonoKey loop_mono;
        for (std::size_t si0 = 0; si0 < segs.size(); ++si0) {
          if (seg_used[si0]) continue;
          std::fill(acc.begin(), acc.end(), 0);
          int se = static_cast<int>(si0 * 2);
          for (;;) {
            const std::size_t si = static_cast<std::size_t>(se / 2);
            const int end = se % 2;
            seg_used[si] = true;
            const auto& s = segs[si];
            const int sign = end == 0 ? 1 : -1;
            for (std::size_t k = 0; k < dim; ++k) acc[k] += sign * s.w[k];
            const int cur = end == 0 ? s.v : s.u;
            const auto& at = attach[static_cast<std::size_t>(cur)];
            const int mine = static_cast<int>(si * 2 + static_cast<std::size_t>(1 - end));
            const int other = at[0] == mine ? at[1] : at[0];
            if (static_cast<std::size_t>(other / 2) == si0) break;
            se = other;
          }
          IndexVector iv(acc);
          if (iv.is_zero()) {
            deltas++;
          } else {
            if (opts_.loop_weight == LoopWeight::DeltaX) deltas++;
            loop_mono.push_back(interner_.id(iv));
          }
        }
        std::sort(loop_mono.begin(), loop_mono.end());

        CoeffMap c = coeff_mul(coeff, lt.coeff);
        if (deltas > 0 || !loop_mono.empty()) {
          const LaurentZ dpow = LaurentZ::delta().pow(static_cast<unsigned>(deltas));
          for (auto& t : c) {
            if (!loop_mono.empty()) t.mono = mono_mul(t.mono, loop_mono);
            if (deltas) t.coeff *= dpow;
          }
          if (!loop_mono.empty())
            std::sort(c.begin(), c.end(), [](const CoeffTerm& x, const CoeffTerm& y) { return x.mono < y.mono; });
        }
        if (c.empty()) continue;
        auto [it, inserted] = next.try_emplace(std::move(out_key));
        coeff_accumulate(it->second, std::move(c));
        if (it->second.empty()) next.erase(it);
        if (next.size() > opts_.max_states)
          throw ResourceError("live state count exceeded the cap of " + std::to_string(opts_.max_states));
      }
    }
    states = std::move(next);
    frontier = std::move(next_frontier);
  }

  HArrowPoly finish(const std::vector<int>& frontier, const StateMap& states) {
    HArrowPoly total;
    if (frontier.empty()) {
      for (const auto& [k, c] : states) total += from_coeff(c);
      return total;
    }
    if (frontier.size() != 2) throw std::logic_error("contraction finished with open arcs");
    const std::size_t dim = static_cast<std::size_t>(dim_);
    for (const auto& [k, c] : states) {
      std::vector<int> w(k.begin() + 2, k.begin() + 2 + static_cast<long>(dim));
      IndexVector iv(w);
      HArrowPoly f = iv.is_zero() ? HArrowPoly(1) : HArrowPoly::term(LaurentZ(1), Monomial({iv}));
      total += from_coeff(c) * f;
    }
    return total;
  }

  const std::vector<Piece>& pieces_;
  std::set<int> terminals_;
  EngineOptions opts_;
  int dim_ = 1;
  Interner interner_;
};

}  // namespace

HArrowPoly contract(const std::vector<Piece>& pieces, const std::vector<int>& order, const std::set<int>& terminals,
                    const EngineOptions& opts, EngineStats* stats) {
  if (!terminals.empty() && terminals.size() != 2) throw std::invalid_argument("contract: need zero or two terminals");
  Contractor c(pieces, terminals, opts);
  return c.run(order, stats);
}

std::vector<TangleState> contract_open(const std::vector<Piece>& pieces, const std::vector<int>& order,
                                       const EngineOptions& opts, EngineStats* stats) {
  Contractor c(pieces, {}, opts);
  return c.run_open(order, stats);
}

namespace {

std::vector<Piece> node_pieces(const std::vector<Node>& nodes, const std::map<int, int>& labels) {
  std::vector<Piece> pieces;
  for (const auto& n : nodes) pieces.push_back(Piece{expand_crossing(n, labels)});
  return pieces;
}

std::vector<int> order_for(const std::vector<Node>& nodes) {
  std::vector<std::vector<int>> arcs;
  for (const auto& n : nodes) arcs.emplace_back(n.arcs.begin(), n.arcs.begin() + n.arity());
  return contraction_order(arcs);
}

}  // namespace

HArrowPoly compute_harrow(const PDCode& pd, LoopWeight loop_weight, const EngineOptions& opts, EngineStats* stats) {
  EngineOptions o = opts;
  o.loop_weight = loop_weight;
  const auto pieces = node_pieces(pd.nodes(), pd.arc_labels());
  return contract(pieces, order_for(pd.nodes()), {}, o, stats);
}

HArrowPoly compute_arrow(const PDCode& pd, const EngineOptions& opts, EngineStats* stats) {
  const int mx = pd.max_arc();
  std::vector<Node> nodes = pd.nodes();
  bool done = false;
  for (auto& n : nodes) {
    for (int s = 0; s < n.arity() && !done; ++s) {
      if (n.arcs[static_cast<std::size_t>(s)] == mx) {
        n.arcs[static_cast<std::size_t>(s)] = mx + 1;
        done = true;
      }
    }
    if (done) break;
  }
  const auto pieces = node_pieces(nodes, {});
  EngineOptions o = opts;
  o.loop_weight = LoopWeight::DeltaX;
  return contract(pieces, order_for(nodes), {mx, mx + 1}, o, stats);
}

HArrowPoly compute_arrow_normalized(const PDCode& pd, const EngineOptions& opts, EngineStats* stats) {
  return writhe_normalize(compute_arrow(pd, opts, stats), writhe(pd));
}

}  // namespace arrowpoly
