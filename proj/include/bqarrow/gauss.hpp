#pragma once

#include <algorithm>
#include <cctype>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "bqarrow/errors.hpp"

namespace bqarrow {

// A signed chord of a Gauss diagram. The tail sits on the over passage, the
// head on the under passage. Positions are read once around the circle.
struct Arrow {
  int tail = 0;
  int head = 0;
  int sign = 1;  // +1 or -1

  friend bool operator==(const Arrow&, const Arrow&) = default;
};

// Gauss diagram of a single-component (classical or virtual) knot.
//
// Arrows are kept sorted by their first endpoint, so arrow i carries label
// i+1 in the serialized code and equal diagrams compare equal.
class GaussDiagram {
 public:
  GaussDiagram() = default;

  // Throws PreconditionError unless the endpoints are exactly 0..2n-1 and
  // every sign is +-1.
  explicit GaussDiagram(std::vector<Arrow> arrows) : arrows_(std::move(arrows)) {
    const std::size_t ends = 2 * arrows_.size();
    std::vector<char> used(ends, 0);
    for (const Arrow& a : arrows_) {
      for (int p : {a.tail, a.head}) {
        if (p < 0 || static_cast<std::size_t>(p) >= ends || used[p])
          throw PreconditionError("endpoint positions must be a permutation of 0..2n-1");
        used[p] = 1;
      }
      if (a.sign != 1 && a.sign != -1) throw PreconditionError("arrow sign must be +1 or -1");
    }
    std::sort(arrows_.begin(), arrows_.end(),
              [](const Arrow& a, const Arrow& b) { return std::min(a.tail, a.head) < std::min(b.tail, b.head); });
  }

  std::size_t size() const { return arrows_.size(); }
  int endpoints() const { return static_cast<int>(2 * arrows_.size()); }
  bool empty() const { return arrows_.empty(); }
  const std::vector<Arrow>& arrows() const { return arrows_; }
  const Arrow& arrow(std::size_t i) const {
    if (i >= arrows_.size()) throw IndexError("arrow index " + std::to_string(i) + " out of range");
    return arrows_[i];
  }

  friend bool operator==(const GaussDiagram&, const GaussDiagram&) = default;

 private:
  std::vector<Arrow> arrows_;
};

// Parses a signed Gauss code such as "O1+U2+O3+U1+O2+U3+". Whitespace is
// ignored; the empty code is the zero-crossing unknot.
inline GaussDiagram parse_gauss_code(std::string_view text) {
  struct Seen {
    int tail = -1, head = -1, sign = 0;
    int first = -1;
  };
  std::map<long, Seen> labels;
  int pos = 0;
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  for (skip_ws(); i < text.size(); skip_ws()) {
    const std::size_t start = i;
    const char kind = text[i++];
    if (kind != 'O' && kind != 'U')
      throw SyntaxError("expected 'O' or 'U' at offset " + std::to_string(start));
    std::size_t digits = i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
    if (digits == i) throw SyntaxError("missing crossing label at offset " + std::to_string(digits));
    if (i - digits > 9) throw SyntaxError("crossing label too long at offset " + std::to_string(digits));
    const long label = std::stol(std::string(text.substr(digits, i - digits)));
    if (i >= text.size() || (text[i] != '+' && text[i] != '-'))
      throw SyntaxError("missing sign after label " + std::to_string(label));
    const int sign = text[i++] == '+' ? 1 : -1;

    Seen& s = labels[label];
    if (s.first < 0) s.first = pos;
    int& slot = kind == 'O' ? s.tail : s.head;
    if (slot >= 0)
      throw LabelError("label " + std::to_string(label) + " appears twice as " + std::string(1, kind));
    slot = pos;
    if (s.sign != 0 && s.sign != sign) throw SignMismatch("label " + std::to_string(label) + " has both signs");
    s.sign = sign;
    ++pos;
  }
  std::vector<Arrow> arrows;
  arrows.reserve(labels.size());
  for (const auto& [label, s] : labels) {
    if (s.tail < 0 || s.head < 0)
      throw LabelError("label " + std::to_string(label) + " must appear once as O and once as U");
    arrows.push_back({s.tail, s.head, s.sign});
  }
  return GaussDiagram(std::move(arrows));
}

// Canonical code: no separators, labels 1..n in order of first occurrence.
inline std::string serialize_gauss_code(const GaussDiagram& d) {
  std::vector<std::string> tokens(d.endpoints());
  for (std::size_t i = 0; i < d.size(); ++i) {
    const Arrow& a = d.arrows()[i];
    const std::string tail = std::to_string(i + 1) + (a.sign > 0 ? "+" : "-");
    tokens[a.tail] = "O" + tail;
    tokens[a.head] = "U" + tail;
  }
  std::string out;
  for (const auto& t : tokens) out += t;
  return out;
}

// True iff p lies strictly inside the cyclic interval walked from `from`
// to `to` in increasing position order.
inline bool strictly_between(int from, int to, int p) {
  return from < to ? (from < p && p < to) : (p > from || p < to);
}

inline bool arrows_cross(const GaussDiagram& d, std::size_t i, std::size_t j) {
  if (i == j) throw IndexError("arrows_cross needs two distinct arrows");
  const Arrow& a = d.arrow(i);
  const Arrow& b = d.arrow(j);
  return strictly_between(a.tail, a.head, b.tail) != strictly_between(a.tail, a.head, b.head);
}

// Moves the base point k positions forward: position p becomes p - k (mod 2n).
inline GaussDiagram rotate(const GaussDiagram& d, int k) {
  const int m = d.endpoints();
  if (m == 0) return d;
  auto shift = [&](int p) { return ((p - k) % m + m) % m; };
  std::vector<Arrow> arrows;
  for (const Arrow& a : d.arrows()) arrows.push_back({shift(a.tail), shift(a.head), a.sign});
  return GaussDiagram(std::move(arrows));
}

// Mirror image: every crossing switches, so arrows reverse and signs flip.
inline GaussDiagram mirror(const GaussDiagram& d) {
  std::vector<Arrow> arrows;
  for (const Arrow& a : d.arrows()) arrows.push_back({a.head, a.tail, -a.sign});
  return GaussDiagram(std::move(arrows));
}

// Orientation reversal: the circle is read backwards, signs are kept.
inline GaussDiagram reverse(const GaussDiagram& d) {
  const int m = d.endpoints();
  std::vector<Arrow> arrows;
  for (const Arrow& a : d.arrows()) arrows.push_back({m - 1 - a.tail, m - 1 - a.head, a.sign});
  return GaussDiagram(std::move(arrows));
}

}  // namespace bqarrow
