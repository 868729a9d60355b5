#pragma once

#include <cstddef>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "bqarrow/errors.hpp"

namespace bqarrow {

// Biquandle elements are 0-based internally. Everything that faces a user
// (JSON, CLI output, error messages) is 1-based, like published tables.
using Element = int;

// Square operation table, row = left operand, column = right operand.
using Table = std::vector<std::vector<Element>>;

enum class Axiom { I, II, III };

inline const char* to_string(Axiom a) {
  switch (a) {
    case Axiom::I: return "i";
    case Axiom::II: return "ii";
    case Axiom::III: return "iii";
  }
  return "?";
}

struct AxiomViolation {
  Axiom axiom;
  std::vector<Element> witness;  // 0-based
  std::string detail;

  std::string describe() const {
    std::ostringstream os;
    os << "axiom (" << to_string(axiom) << ") fails at (";
    for (std::size_t i = 0; i < witness.size(); ++i) os << (i ? "," : "") << witness[i] + 1;
    os << ")";
    if (!detail.empty()) os << ": " << detail;
    return os.str();
  }
};

class AxiomError : public Error {
 public:
  explicit AxiomError(AxiomViolation v) : Error(v.describe()), violation_(std::move(v)) {}
  const AxiomViolation& violation() const { return violation_; }

 private:
  AxiomViolation violation_;
};

namespace detail {

inline void check_table_shape(const Table& under, const Table& over) {
  const std::size_t n = under.size();
  if (over.size() != n) throw RangeError("operation tables differ in size");
  for (const Table* t : {&under, &over}) {
    for (std::size_t r = 0; r < n; ++r) {
      if ((*t)[r].size() != n) throw RangeError("operation table is not square");
      for (std::size_t c = 0; c < n; ++c) {
        const Element e = (*t)[r][c];
        if (e < 0 || static_cast<std::size_t>(e) >= n) {
          std::ostringstream os;
          os << "table entry " << e + 1 << " at (" << r + 1 << "," << c + 1 << ") outside 1.." << n;
          throw RangeError(os.str());
        }
      }
    }
  }
}

}  // namespace detail

// Scan order: axiom (i) over x; axiom (ii) alpha columns, beta columns, then
// injectivity of S; axiom (iii) over lexicographic (x,y,z), three laws each.
// Throws RangeError on malformed tables.
inline std::optional<AxiomViolation> find_biquandle_violation(const Table& under, const Table& over) {
  detail::check_table_shape(under, over);
  const int n = static_cast<int>(under.size());
  auto U = [&](int x, int y) { return under[x][y]; };
  auto O = [&](int x, int y) { return over[x][y]; };

  for (int x = 0; x < n; ++x)
    if (U(x, x) != O(x, x)) return AxiomViolation{Axiom::I, {x}, "x under x != x over x"};

  for (int pass = 0; pass < 2; ++pass) {
    for (int x = 0; x < n; ++x) {
      std::vector<int> seen(n, -1);
      for (int y = 0; y < n; ++y) {
        const int v = pass == 0 ? O(y, x) : U(y, x);
        if (seen[v] >= 0)
          return AxiomViolation{Axiom::II, {x, y}, pass == 0 ? "alpha_x not a bijection" : "beta_x not a bijection"};
        seen[v] = y;
      }
    }
  }
  std::vector<char> hit(static_cast<std::size_t>(n) * n, 0);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      const std::size_t key = static_cast<std::size_t>(O(y, x)) * n + U(x, y);
      if (hit[key]) return AxiomViolation{Axiom::II, {x, y}, "S not a bijection"};
      hit[key] = 1;
    }

  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z) {
        if (U(U(x, y), U(z, y)) != U(U(x, z), O(y, z)))
          return AxiomViolation{Axiom::III, {x, y, z}, "first exchange law"};
        if (O(U(x, y), U(z, y)) != U(O(x, z), O(y, z)))
          return AxiomViolation{Axiom::III, {x, y, z}, "second exchange law"};
        if (O(O(x, y), O(z, y)) != O(O(x, z), U(y, z)))
          return AxiomViolation{Axiom::III, {x, y, z}, "third exchange law"};
      }
  return std::nullopt;
}

// A finite biquandle whose axioms have been checked. Immutable.
class Biquandle {
 public:
  // Throws RangeError or AxiomError.
  static Biquandle validate(Table under, Table over) {
    if (auto v = find_biquandle_violation(under, over)) throw AxiomError(*v);
    return Biquandle(std::move(under), std::move(over));
  }

  static Biquandle trivial(int n) {
    Table t(n, std::vector<Element>(n));
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y) t[x][y] = x;
    return validate(t, t);
  }

  int size() const { return n_; }

  // x under y
  Element under(Element x, Element y) const { return under_[idx(x, y)]; }
  // x over y
  Element over(Element x, Element y) const { return over_[idx(x, y)]; }
  // the z with (z over x) == y
  Element inv_over(Element y, Element x) const { return inv_over_[idx(y, x)]; }
  // the z with (z under x) == y
  Element inv_under(Element y, Element x) const { return inv_under_[idx(y, x)]; }

  Table under_table() const { return unflatten(under_); }
  Table over_table() const { return unflatten(over_); }

  friend bool operator==(const Biquandle&, const Biquandle&) = default;

 private:
  Biquandle(const Table& under, const Table& over)
      : n_(static_cast<int>(under.size())),
        under_(flatten(under)),
        over_(flatten(over)),
        inv_over_(under_.size()),
        inv_under_(under_.size()) {
    for (int z = 0; z < n_; ++z)
      for (int x = 0; x < n_; ++x) {
        inv_over_[idx(over_[idx(z, x)], x)] = z;
        inv_under_[idx(under_[idx(z, x)], x)] = z;
      }
  }

  std::size_t idx(Element x, Element y) const { return static_cast<std::size_t>(x) * n_ + y; }

  static std::vector<Element> flatten(const Table& t) {
    std::vector<Element> out;
    out.reserve(t.size() * t.size());
    for (const auto& row : t) out.insert(out.end(), row.begin(), row.end());
    return out;
  }
  Table unflatten(const std::vector<Element>& v) const {
    Table t(n_, std::vector<Element>(n_));
    for (int x = 0; x < n_; ++x)
      for (int y = 0; y < n_; ++y) t[x][y] = v[idx(x, y)];
    return t;
  }

  int n_;
  std::vector<Element> under_;
  std::vector<Element> over_;
  std::vector<Element> inv_over_;
  std::vector<Element> inv_under_;
};

}  // namespace bqarrow
