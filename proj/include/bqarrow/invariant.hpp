#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "bqarrow/coloring.hpp"
#include "bqarrow/gauss.hpp"
#include "bqarrow/weight.hpp"

namespace bqarrow {

// Multiset of weight sums over all colorings, i.e. the polynomial
// sum_D u^{Sigma_D}. Residues with multiplicity zero are not stored.
struct InvariantValue {
  Residue modulus = 1;
  std::map<Residue, std::uint64_t> counts;

  std::uint64_t total() const {
    std::uint64_t t = 0;
    for (const auto& [r, c] : counts) t += c;
    return t;
  }

  // "19+4u+4u^2": increasing exponent, constant term as a bare integer.
  std::string polynomial() const {
    if (counts.empty()) return "0";
    std::string out;
    for (const auto& [e, c] : counts) {
      if (!out.empty()) out += "+";
      if (e == 0) {
        out += std::to_string(c);
        continue;
      }
      if (c != 1) out += std::to_string(c);
      out += "u";
      if (e != 1) out += "^" + std::to_string(e);
    }
    return out;
  }

  friend bool operator==(const InvariantValue&, const InvariantValue&) = default;
  friend auto operator<=>(const InvariantValue&, const InvariantValue&) = default;
};

inline std::vector<std::pair<std::size_t, std::size_t>> crossing_pairs(const GaussDiagram& d) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t i = 0; i < d.size(); ++i)
    for (std::size_t j = i + 1; j < d.size(); ++j)
      if (arrows_cross(d, i, j)) out.emplace_back(i, j);
  return out;
}

// Ignore is a broken rule kept for negative controls: it drops the sign
// product, so the sum is no longer a move invariant.
enum class SignRule { Product, Ignore };

namespace detail {

inline Residue weight_sum(const ArrowColors& pairs, const ArrowWeight& w,
                          const std::vector<std::pair<std::size_t, std::size_t>>& crossings,
                          SignRule rule = SignRule::Product) {
  Residue s = 0;
  for (const auto& [i, j] : crossings) {
    const ColoredArrow& a = pairs[i];
    const ColoredArrow& b = pairs[j];
    const int eps = rule == SignRule::Product ? a.sign * b.sign : 1;
    s = w.reduce(s + eps * w(a.x, a.y, b.x, b.y));
  }
  return s;
}

inline void check_dims(const Biquandle& b, const ArrowWeight& w) {
  if (w.size() != b.size()) throw DimensionError("weight and biquandle sizes differ");
}

}  // namespace detail

// Sigma_D: sum over unordered crossing arrow pairs of eps_i eps_j phi(p_i, p_j).
inline Residue weight_sum(const GaussDiagram& d, const Biquandle& b, const ArrowWeight& w, const Coloring& c) {
  detail::check_dims(b, w);
  return detail::weight_sum(extract_pairs(d, b, c), w, crossing_pairs(d));
}

inline InvariantValue compute_invariant(const GaussDiagram& d, const Biquandle& b, const ArrowWeight& w,
                                        SignRule rule = SignRule::Product) {
  detail::check_dims(b, w);
  InvariantValue v;
  v.modulus = w.modulus();
  const auto crossings = crossing_pairs(d);
  for (const Coloring& c : enumerate_colorings(d, b))
    ++v.counts[detail::weight_sum(extract_pairs(d, b, c), w, crossings, rule)];
  return v;
}

// Per-coloring sums in enumeration order, i.e. the multiset version.
inline std::vector<Residue> weight_sums(const GaussDiagram& d, const Biquandle& b, const ArrowWeight& w) {
  detail::check_dims(b, w);
  const auto crossings = crossing_pairs(d);
  std::vector<Residue> out;
  for (const Coloring& c : enumerate_colorings(d, b)) out.push_back(detail::weight_sum(extract_pairs(d, b, c), w, crossings));
  return out;
}

inline std::uint64_t counting_invariant(const GaussDiagram& d, const Biquandle& b) {
  return enumerate_colorings(d, b).size();
}

}  // namespace bqarrow
