#pragma once

#include <algorithm>
#include <array>
#include <vector>

#include "bqarrow/biquandle.hpp"
#include "bqarrow/errors.hpp"
#include "bqarrow/gauss.hpp"

namespace bqarrow {

// Segment j runs from endpoint j to endpoint j+1 (mod 2n). The unknot
// diagram has a single segment.
struct Coloring {
  std::vector<Element> segments;

  friend bool operator==(const Coloring&, const Coloring&) = default;
  friend auto operator<=>(const Coloring&, const Coloring&) = default;
};

struct ColoredArrow {
  Element x;  // under strand: incoming at a positive arrow, outgoing at a negative one
  Element y;  // over strand: outgoing at a positive arrow, incoming at a negative one
  int sign;

  friend bool operator==(const ColoredArrow&, const ColoredArrow&) = default;
};

using ArrowColors = std::vector<ColoredArrow>;

inline std::size_t segment_count(const GaussDiagram& d) { return d.empty() ? 1 : d.endpoints(); }

namespace detail {

inline int before(int p, int m) { return p == 0 ? m - 1 : p - 1; }

// s[lhs] = s[left] op s[right]
struct Equation {
  int lhs, left, right;
  bool over;
};

// Every arrow carries S(x, y) = (y over x, x under y) from its pair (x, y)
// to the two remaining segments around it.
//   positive: s[t-1] = s[t] over s[h-1],   s[h] = s[h-1] under s[t]
//   negative: s[t] = s[t-1] over s[h],     s[h-1] = s[h] under s[t-1]
inline std::array<Equation, 2> equations(const Arrow& a, int m) {
  const int t0 = before(a.tail, m), h0 = before(a.head, m);
  if (a.sign > 0) return {{{t0, a.tail, h0, true}, {a.head, h0, a.tail, false}}};
  return {{{a.tail, t0, a.head, true}, {h0, a.head, t0, false}}};
}

inline bool holds(const Equation& e, const Biquandle& b, const std::vector<Element>& s) {
  return s[e.lhs] == (e.over ? b.over(s[e.left], s[e.right]) : b.under(s[e.left], s[e.right]));
}

inline bool arrow_ok(const Arrow& a, const Biquandle& b, const std::vector<Element>& s, int m) {
  for (const Equation& e : equations(a, m))
    if (!holds(e, b, s)) return false;
  return true;
}

}  // namespace detail

inline bool check_coloring(const GaussDiagram& d, const Biquandle& b, const Coloring& c) {
  if (c.segments.size() != segment_count(d))
    throw SizeError("coloring has " + std::to_string(c.segments.size()) + " segments, diagram has " +
                    std::to_string(segment_count(d)));
  for (Element e : c.segments)
    if (e < 0 || e >= b.size()) throw RangeError("coloring uses an element outside the biquandle");
  const int m = d.endpoints();
  for (const Arrow& a : d.arrows())
    if (!detail::arrow_ok(a, b, c.segments, m)) return false;
  return true;
}

// Backtracking over segments 0..2n-1. Around each arrow the four segments
// hold (x, y, y over x, x under y) for the arrow's pair (x, y), and any two of
// them fix the other two, so each segment only tries the values allowed by
// every arrow touching it given the segments already assigned. Output is
// sorted lexicographically.
inline std::vector<Coloring> enumerate_colorings(const GaussDiagram& d, const Biquandle& b) {
  std::vector<Coloring> out;
  const int k = b.size();
  if (d.empty()) {
    for (Element e = 0; e < k; ++e) out.push_back({{e}});
    return out;
  }
  const int m = d.endpoints();
  using detail::before;

  // Segments in the roles x, y, y over x, x under y.
  std::vector<std::array<int, 4>> roles;
  std::vector<std::vector<std::size_t>> touching(m);
  for (const Arrow& a : d.arrows()) {
    const int t0 = before(a.tail, m), h0 = before(a.head, m);
    roles.push_back(a.sign > 0 ? std::array<int, 4>{h0, a.tail, t0, a.head}
                               : std::array<int, 4>{a.head, t0, a.tail, h0});
    for (int seg : roles.back())
      if (touching[seg].empty() || touching[seg].back() != roles.size() - 1) touching[seg].push_back(roles.size() - 1);
  }

  std::vector<Element> s(m, 0);
  std::vector<std::vector<char>> allowed(m, std::vector<char>(k));
  auto rec = [&](auto&& self, int j) -> void {
    if (j == m) {
      out.push_back({s});
      return;
    }
    std::vector<char>& ok = allowed[j];
    std::fill(ok.begin(), ok.end(), 1);
    for (std::size_t i : touching[j]) {
      const auto& r = roles[i];
      bool constrained = false;
      for (int seg : r) constrained |= seg < j;
      if (!constrained) continue;
      std::vector<char> here(k, 0);
      for (Element x = 0; x < k; ++x)
        for (Element y = 0; y < k; ++y) {
          const std::array<Element, 4> v{x, y, b.over(y, x), b.under(x, y)};
          Element at_j = -1;
          bool fits = true;
          for (int q = 0; q < 4 && fits; ++q) {
            if (r[q] < j) {
              fits = v[q] == s[r[q]];
            } else if (r[q] == j) {
              fits = at_j < 0 || at_j == v[q];
              at_j = v[q];
            }
          }
          if (fits && at_j >= 0) here[at_j] = 1;
        }
      for (Element v = 0; v < k; ++v) ok[v] &= here[v];
    }
    for (Element v = 0; v < k; ++v) {
      if (!ok[v]) continue;
      s[j] = v;
      self(self, j + 1);
    }
  };
  rec(rec, 0);
  return out;
}

// The pair (x, y) an arrow feeds into S: (s[h-1], s[t]) for a positive arrow,
// (s[h], s[t-1]) for a negative one.
inline ColoredArrow arrow_pair(const Arrow& a, const std::vector<Element>& s, int m) {
  if (a.sign > 0) return {s[detail::before(a.head, m)], s[a.tail], 1};
  return {s[a.head], s[detail::before(a.tail, m)], -1};
}

inline ArrowColors extract_pairs(const GaussDiagram& d, const Biquandle& b, const Coloring& c) {
  if (!check_coloring(d, b, c)) throw InvalidColoring("coloring violates an arrow constraint");
  const int m = d.endpoints();
  ArrowColors out;
  out.reserve(d.size());
  for (const Arrow& a : d.arrows()) out.push_back(arrow_pair(a, c.segments, m));
  return out;
}

}  // namespace bqarrow
