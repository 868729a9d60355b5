#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <type_traits>
#include <utility>
#include <variant>
#include <vector>

#include "bqarrow/errors.hpp"
#include "bqarrow/gauss.hpp"

namespace bqarrow {

// Arc k is the gap just before endpoint k; arc 2n is the gap after the last
// endpoint (the same gap as arc 0 up to the choice of base point).

// Adds an isolated arrow whose endpoints are adjacent.
struct RIInsert {
  int arc = 0;
  int sign = 1;
  bool tail_first = true;
};

struct RIRemove {
  std::size_t arrow = 0;
};

// Adds two arrows of opposite sign, both running from tail_arc to head_arc.
// With `crossing` the heads come in the same order as the tails (parallel
// strands, interleaved chords); otherwise in reverse order (antiparallel
// strands, nested chords). `first_sign` is the sign of the arrow whose tail
// comes first. When both arcs coincide, `tails_first` orders the two pairs.
struct RIIInsert {
  int tail_arc = 0;
  int head_arc = 0;
  bool crossing = true;
  int first_sign = 1;
  bool tails_first = true;
};

struct RIIRemove {
  std::size_t first = 0;
  std::size_t second = 0;
};

// Third move on three positive arrows top->middle, top->bottom and
// middle->bottom whose endpoints sit in three adjacent pairs: the two tails
// on the top strand, head(top_middle) next to tail(middle_bottom) on the
// middle strand, and the two heads on the bottom strand. In one state every
// pair reads (top_middle, top_bottom), (top_middle, middle_bottom),
// (top_bottom, middle_bottom) in circle order; the move reverses all three.
struct RIIIMove {
  std::size_t top_middle = 0;
  std::size_t top_bottom = 0;
  std::size_t middle_bottom = 0;
};

using MoveSpec = std::variant<RIInsert, RIRemove, RIIInsert, RIIRemove, RIIIMove>;

inline std::string move_name(const MoveSpec& m) {
  static const char* names[] = {"RI_insert", "RI_remove", "RII_insert", "RII_remove", "RIII"};
  return names[m.index()];
}

namespace detail {

struct Endpoint {
  std::size_t arrow;
  bool tail;
};

inline std::vector<Endpoint> endpoint_sequence(const GaussDiagram& d) {
  std::vector<Endpoint> seq(d.endpoints());
  for (std::size_t i = 0; i < d.size(); ++i) {
    seq[d.arrows()[i].tail] = {i, true};
    seq[d.arrows()[i].head] = {i, false};
  }
  return seq;
}

inline GaussDiagram from_sequence(const std::vector<Endpoint>& seq, const std::vector<int>& signs) {
  std::vector<Arrow> arrows(signs.size());
  for (std::size_t p = 0; p < seq.size(); ++p) {
    Arrow& a = arrows[seq[p].arrow];
    (seq[p].tail ? a.tail : a.head) = static_cast<int>(p);
  }
  for (std::size_t i = 0; i < signs.size(); ++i) arrows[i].sign = signs[i];
  return GaussDiagram(std::move(arrows));
}

// Inserts new endpoints into gaps. Items for the same arc keep their order.
inline GaussDiagram insert_endpoints(const GaussDiagram& d,
                                     const std::vector<std::pair<int, std::vector<Endpoint>>>& items,
                                     const std::vector<int>& new_signs) {
  const int m = d.endpoints();
  for (const auto& [arc, eps] : items)
    if (arc < 0 || arc > m) throw PreconditionError("arc " + std::to_string(arc) + " outside 0.." + std::to_string(m));
  const auto old = endpoint_sequence(d);
  std::vector<Endpoint> seq;
  for (int k = 0; k <= m; ++k) {
    for (const auto& [arc, eps] : items)
      if (arc == k) seq.insert(seq.end(), eps.begin(), eps.end());
    if (k < m) seq.push_back(old[k]);
  }
  std::vector<int> signs;
  for (const Arrow& a : d.arrows()) signs.push_back(a.sign);
  signs.insert(signs.end(), new_signs.begin(), new_signs.end());
  return from_sequence(seq, signs);
}

inline GaussDiagram remove_arrows(const GaussDiagram& d, const std::vector<std::size_t>& doomed) {
  std::vector<std::size_t> remap(d.size());
  std::vector<int> signs;
  for (std::size_t i = 0; i < d.size(); ++i) {
    bool gone = false;
    for (std::size_t k : doomed) gone = gone || k == i;
    if (!gone) {
      remap[i] = signs.size();
      signs.push_back(d.arrows()[i].sign);
    } else {
      remap[i] = SIZE_MAX;
    }
  }
  std::vector<Endpoint> seq;
  for (const Endpoint& e : endpoint_sequence(d))
    if (remap[e.arrow] != SIZE_MAX) seq.push_back({remap[e.arrow], e.tail});
  return from_sequence(seq, signs);
}

inline bool next_to(int p, int q, int m) { return (p + 1) % m == q; }

inline void check_sign(int s) {
  if (s != 1 && s != -1) throw PreconditionError("sign must be +1 or -1");
}

}  // namespace detail

inline bool ri_removable(const GaussDiagram& d, std::size_t i) {
  const Arrow& a = d.arrow(i);
  const int m = d.endpoints();
  return detail::next_to(a.tail, a.head, m) || detail::next_to(a.head, a.tail, m);
}

// Opposite signs, tails adjacent, heads adjacent, in either the interleaved
// or the nested pattern.
inline bool rii_removable(const GaussDiagram& d, std::size_t i, std::size_t j) {
  if (i == j) return false;
  const Arrow* a = &d.arrow(i);
  const Arrow* b = &d.arrow(j);
  const int m = d.endpoints();
  if (a->sign != -b->sign) return false;
  if (detail::next_to(b->tail, a->tail, m)) std::swap(a, b);
  if (!detail::next_to(a->tail, b->tail, m)) return false;
  return detail::next_to(a->head, b->head, m) || detail::next_to(b->head, a->head, m);
}

// 0 or 1 for the two states of the third move, -1 if the triple does not fit.
inline int riii_state(const GaussDiagram& d, const RIIIMove& mv) {
  const std::size_t ids[] = {mv.top_middle, mv.top_bottom, mv.middle_bottom};
  if (ids[0] == ids[1] || ids[0] == ids[2] || ids[1] == ids[2]) return -1;
  const Arrow& tm = d.arrow(mv.top_middle);
  const Arrow& tb = d.arrow(mv.top_bottom);
  const Arrow& mb = d.arrow(mv.middle_bottom);
  if (tm.sign < 0 || tb.sign < 0 || mb.sign < 0) return -1;
  const int m = d.endpoints();
  using detail::next_to;
  if (next_to(tm.tail, tb.tail, m) && next_to(tm.head, mb.tail, m) && next_to(tb.head, mb.head, m)) return 0;
  if (next_to(tb.tail, tm.tail, m) && next_to(mb.tail, tm.head, m) && next_to(mb.head, tb.head, m)) return 1;
  return -1;
}

inline std::vector<RIRemove> ri_sites(const GaussDiagram& d) {
  std::vector<RIRemove> out;
  for (std::size_t i = 0; i < d.size(); ++i)
    if (ri_removable(d, i)) out.push_back({i});
  return out;
}

inline std::vector<RIIRemove> rii_sites(const GaussDiagram& d) {
  std::vector<RIIRemove> out;
  for (std::size_t i = 0; i < d.size(); ++i)
    for (std::size_t j = i + 1; j < d.size(); ++j)
      if (rii_removable(d, i, j)) out.push_back({i, j});
  return out;
}

inline std::vector<RIIIMove> riii_sites(const GaussDiagram& d) {
  std::vector<RIIIMove> out;
  const std::size_t n = d.size();
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c) {
        const RIIIMove mv{a, b, c};
        if (riii_state(d, mv) >= 0) out.push_back(mv);
      }
  return out;
}

inline GaussDiagram apply_move(const GaussDiagram& d, const MoveSpec& move) {
  using detail::Endpoint;
  const std::size_t n = d.size();
  return std::visit(
      [&](const auto& mv) -> GaussDiagram {
        using M = std::decay_t<decltype(mv)>;
        if constexpr (std::is_same_v<M, RIInsert>) {
          detail::check_sign(mv.sign);
          std::vector<Endpoint> eps = {{n, true}, {n, false}};
          if (!mv.tail_first) std::swap(eps[0], eps[1]);
          return detail::insert_endpoints(d, {{mv.arc, eps}}, {mv.sign});
        } else if constexpr (std::is_same_v<M, RIRemove>) {
          if (mv.arrow >= n) throw PreconditionError("RI_remove: no arrow " + std::to_string(mv.arrow));
          if (!ri_removable(d, mv.arrow)) throw PreconditionError("RI_remove: arrow endpoints are not adjacent");
          return detail::remove_arrows(d, {mv.arrow});
        } else if constexpr (std::is_same_v<M, RIIInsert>) {
          detail::check_sign(mv.first_sign);
          const std::vector<Endpoint> tails = {{n, true}, {n + 1, true}};
          const std::vector<Endpoint> heads =
              mv.crossing ? std::vector<Endpoint>{{n, false}, {n + 1, false}} : std::vector<Endpoint>{{n + 1, false}, {n, false}};
          const std::vector<int> signs = {mv.first_sign, -mv.first_sign};
          if (mv.tail_arc == mv.head_arc) {
            std::vector<Endpoint> all = mv.tails_first ? tails : heads;
            const auto& rest = mv.tails_first ? heads : tails;
            all.insert(all.end(), rest.begin(), rest.end());
            return detail::insert_endpoints(d, {{mv.tail_arc, all}}, signs);
          }
          return detail::insert_endpoints(d, {{mv.tail_arc, tails}, {mv.head_arc, heads}}, signs);
        } else if constexpr (std::is_same_v<M, RIIRemove>) {
          if (mv.first >= n || mv.second >= n) throw PreconditionError("RII_remove: arrow index out of range");
          if (!rii_removable(d, mv.first, mv.second))
            throw PreconditionError("RII_remove: arrows need opposite signs with adjacent tails and adjacent heads");
          return detail::remove_arrows(d, {mv.first, mv.second});
        } else {
          if (mv.top_middle >= n || mv.top_bottom >= n || mv.middle_bottom >= n)
            throw PreconditionError("RIII: arrow index out of range");
          if (riii_state(d, mv) < 0)
            throw PreconditionError("RIII: arrows do not form the positive three-strand configuration");
          std::vector<Arrow> arrows = d.arrows();
          Arrow& tm = arrows[mv.top_middle];
          Arrow& tb = arrows[mv.top_bottom];
          Arrow& mb = arrows[mv.middle_bottom];
          std::swap(tm.tail, tb.tail);
          std::swap(tm.head, mb.tail);
          std::swap(tb.head, mb.head);
          return GaussDiagram(std::move(arrows));
        }
      },
      move);
}

namespace detail {

// Portable bounded draw; the modulo bias is irrelevant at these ranges.
inline std::uint64_t draw(std::mt19937_64& rng, std::uint64_t bound) { return rng() % bound; }

}  // namespace detail

// Picks a uniformly random applicable move of a uniformly random kind.
// Kinds with no site in the current diagram are redrawn; insertions always
// apply, so this terminates.
inline MoveSpec random_move(const GaussDiagram& d, std::mt19937_64& rng) {
  using detail::draw;
  const int arcs = d.endpoints() + 1;
  for (;;) {
    switch (draw(rng, 5)) {
      case 0: {
        RIInsert mv;
        mv.arc = static_cast<int>(draw(rng, arcs));
        mv.sign = draw(rng, 2) ? 1 : -1;
        mv.tail_first = draw(rng, 2);
        return mv;
      }
      case 1: {
        auto sites = ri_sites(d);
        if (sites.empty()) continue;
        return sites[draw(rng, sites.size())];
      }
      case 2: {
        RIIInsert mv;
        mv.tail_arc = static_cast<int>(draw(rng, arcs));
        mv.head_arc = static_cast<int>(draw(rng, arcs));
        mv.crossing = draw(rng, 2);
        mv.first_sign = draw(rng, 2) ? 1 : -1;
        mv.tails_first = draw(rng, 2);
        return mv;
      }
      case 3: {
        auto sites = rii_sites(d);
        if (sites.empty()) continue;
        return sites[draw(rng, sites.size())];
      }
      default: {
        auto sites = riii_sites(d);
        if (sites.empty()) continue;
        return sites[draw(rng, sites.size())];
      }
    }
  }
}

struct MoveWalk {
  GaussDiagram result;
  std::vector<MoveSpec> moves;
};

inline MoveWalk random_move_walk_traced(const GaussDiagram& d, int steps, std::uint64_t seed) {
  if (steps < 0) throw PreconditionError("steps must be non-negative");
  std::mt19937_64 rng(seed);
  MoveWalk walk{d, {}};
  for (int s = 0; s < steps; ++s) {
    MoveSpec mv = random_move(walk.result, rng);
    walk.result = apply_move(walk.result, mv);
    walk.moves.push_back(mv);
  }
  return walk;
}

inline GaussDiagram random_move_walk(const GaussDiagram& d, int steps, std::uint64_t seed) {
  return random_move_walk_traced(d, steps, seed).result;
}

}  // namespace bqarrow
