#pragma once

#include <array>
#include <cstdint>
#include <limits>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "bqarrow/biquandle.hpp"
#include "bqarrow/errors.hpp"
#include "bqarrow/modular.hpp"

namespace bqarrow {

using Residue = std::int64_t;

struct ColorPair {
  Element x;
  Element y;
};

// A function phi: X^4 -> Z_m stored as an n x n x n x n table. Entry
// [i][j][k][l] is phi((i,j),(k,l)): row k, column l of the matrix sitting at
// row i, column j of the matrix of matrices.
class ArrowWeight {
 public:
  ArrowWeight(int n, Residue modulus) : n_(n), m_(modulus) {
    if (modulus < 1) throw ModulusError("modulus must be at least 1");
    if (n < 0) throw DimensionError("negative biquandle size");
    entries_.assign(static_cast<std::size_t>(n) * n * n * n, 0);
  }

  // Entries are reduced to 0..m-1.
  ArrowWeight(int n, Residue modulus, std::vector<Residue> entries) : ArrowWeight(n, modulus) {
    if (entries.size() != entries_.size()) throw DimensionError("tensor has the wrong number of entries");
    for (std::size_t i = 0; i < entries.size(); ++i) entries_[i] = reduce(entries[i]);
  }

  static ArrowWeight zero(int n, Residue modulus) { return ArrowWeight(n, modulus); }

  int size() const { return n_; }
  Residue modulus() const { return m_; }
  const std::vector<Residue>& entries() const { return entries_; }

  std::size_t index(Element x, Element y, Element u, Element v) const {
    return ((static_cast<std::size_t>(x) * n_ + y) * n_ + u) * n_ + v;
  }

  Residue operator()(Element x, Element y, Element u, Element v) const { return entries_[index(x, y, u, v)]; }

  // Bounds-checked phi((x,y),(u,v)).
  Residue lookup(ColorPair a, ColorPair b) const {
    for (Element e : {a.x, a.y, b.x, b.y})
      if (e < 0 || e >= n_) throw IndexError("weight index out of range");
    return (*this)(a.x, a.y, b.x, b.y);
  }

  void set(Element x, Element y, Element u, Element v, Residue r) { entries_[index(x, y, u, v)] = reduce(r); }

  Residue reduce(Residue r) const {
    r %= m_;
    return r < 0 ? r + m_ : r;
  }

  // this + c * other
  ArrowWeight plus_scaled(const ArrowWeight& other, Residue c) const {
    if (other.n_ != n_ || other.m_ != m_) throw DimensionError("weights differ in size or modulus");
    ArrowWeight out = *this;
    for (std::size_t i = 0; i < entries_.size(); ++i)
      out.entries_[i] = reduce(entries_[i] + reduce(c) * other.entries_[i]);
    return out;
  }

  friend bool operator==(const ArrowWeight&, const ArrowWeight&) = default;
  friend auto operator<=>(const ArrowWeight&, const ArrowWeight&) = default;

 private:
  int n_;
  Residue m_;
  std::vector<Residue> entries_;
};

enum class WeightAxiom { I, II, III, IV };

inline const char* to_string(WeightAxiom a) {
  switch (a) {
    case WeightAxiom::I: return "i";
    case WeightAxiom::II: return "ii";
    case WeightAxiom::III: return "iii";
    case WeightAxiom::IV: return "iv";
  }
  return "?";
}

struct WeightViolation {
  WeightAxiom axiom;
  std::vector<Element> witness;  // (x,y,u,v) for (i), (x,y) for (ii), (x,y,z) otherwise

  std::string describe() const {
    std::ostringstream os;
    os << "axiom (" << to_string(axiom) << ") fails at (";
    for (std::size_t i = 0; i < witness.size(); ++i) os << (i ? "," : "") << witness[i] + 1;
    os << ")";
    return os.str();
  }
};

struct WeightCheck {
  std::optional<WeightViolation> violation;
  std::size_t instances = 0;  // axiom instances evaluated

  bool ok() const { return !violation; }
};

// Axiom (iii) and (iv) in the form lhs - rhs == 0. Used by both the checker
// and the linear system so the two cannot drift apart.
namespace detail {

struct Term {
  Element x, y, u, v;
  int coeff;
};

inline std::array<Term, 3> axiom_iii(const Biquandle& b, Element x, Element y, Element z) {
  return {{{x, y, y, z, 1},
           {x, z, b.over(y, x), b.over(z, x), -1},
           {x, z, b.under(x, z), b.under(y, z), -1}}};
}

inline std::array<Term, 3> axiom_iv(const Biquandle& b, Element x, Element y, Element z) {
  const Element xy = b.under(x, y), zy = b.over(z, y);
  return {{{b.under(x, z), b.under(y, z), b.over(y, x), b.over(z, x), 1},
           {x, y, xy, zy, -1},
           {y, z, xy, zy, -1}}};
}

}  // namespace detail

// Checks every instance of the four arrow-weight axioms: n^4 for (i), n^2
// for (ii), n^3 each for (iii) and (iv). Stops at the first failure.
inline WeightCheck verify_weight(const Biquandle& b, const ArrowWeight& w) {
  if (w.size() != b.size())
    throw DimensionError("weight is " + std::to_string(w.size()) + "-dimensional, biquandle has " +
                         std::to_string(b.size()) + " elements");
  const int n = b.size();
  WeightCheck out;
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y)
      for (Element u = 0; u < n; ++u)
        for (Element v = 0; v < n; ++v) {
          ++out.instances;
          if (w(x, y, u, v) != w(u, v, x, y)) {
            out.violation = WeightViolation{WeightAxiom::I, {x, y, u, v}};
            return out;
          }
        }
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y) {
      ++out.instances;
      if (w(x, y, x, y) != 0) {
        out.violation = WeightViolation{WeightAxiom::II, {x, y}};
        return out;
      }
    }
  auto value = [&](const std::array<detail::Term, 3>& terms) {
    Residue s = 0;
    for (const auto& t : terms) s += t.coeff * w(t.x, t.y, t.u, t.v);
    return w.reduce(s);
  };
  for (WeightAxiom ax : {WeightAxiom::III, WeightAxiom::IV})
    for (Element x = 0; x < n; ++x)
      for (Element y = 0; y < n; ++y)
        for (Element z = 0; z < n; ++z) {
          ++out.instances;
          const auto terms = ax == WeightAxiom::III ? detail::axiom_iii(b, x, y, z) : detail::axiom_iv(b, x, y, z);
          if (value(terms) != 0) {
            out.violation = WeightViolation{ax, {x, y, z}};
            return out;
          }
        }
  return out;
}

// All arrow weights over Z_m for a biquandle: a finite abelian group given as
// a direct sum of cyclic factors, one per generator.
class WeightSpace {
 public:
  int size() const { return n_; }
  Residue modulus() const { return kernel_.modulus(); }
  const std::vector<ArrowWeight>& generators() const { return generators_; }
  const std::vector<Residue>& orders() const { return orders_; }

  // Number of distinct weights; saturates at the maximum of uint64.
  std::uint64_t count() const {
    std::uint64_t c = 1;
    for (Residue o : orders_) {
      if (c > std::numeric_limits<std::uint64_t>::max() / static_cast<std::uint64_t>(o))
        return std::numeric_limits<std::uint64_t>::max();
      c *= static_cast<std::uint64_t>(o);
    }
    return c;
  }

  // Coefficients over generators(), or nullopt if w is not in the space.
  std::optional<std::vector<Residue>> coordinates(const ArrowWeight& w) const {
    if (w.size() != n_ || w.modulus() != modulus()) throw DimensionError("weight does not match the space");
    return kernel_.coordinates(w.entries());
  }
  bool contains(const ArrowWeight& w) const { return coordinates(w).has_value(); }

  ArrowWeight combine(const std::vector<Residue>& coeffs) const {
    if (coeffs.size() != generators_.size()) throw DimensionError("coefficient count does not match generators");
    ArrowWeight w = ArrowWeight::zero(n_, modulus());
    for (std::size_t i = 0; i < coeffs.size(); ++i) w = w.plus_scaled(generators_[i], coeffs[i]);
    return w;
  }

 private:
  friend WeightSpace solve_weight_space(const Biquandle& b, Residue m);

  WeightSpace(int n, ModularKernel kernel) : n_(n), kernel_(std::move(kernel)) {
    for (auto& g : kernel_.generators()) generators_.emplace_back(n, kernel_.modulus(), std::move(g));
    orders_ = kernel_.orders();
  }

  int n_;
  ModularKernel kernel_;
  std::vector<ArrowWeight> generators_;
  std::vector<Residue> orders_;
};

// One row per axiom instance, n^4 unknowns. Redundant rows are kept.
inline ModMatrix weight_constraints(const Biquandle& b, Residue m) {
  const int n = b.size();
  const ArrowWeight shape(n, m);
  const std::size_t unknowns = shape.entries().size();
  const std::size_t rows = unknowns + static_cast<std::size_t>(n) * n + 2 * static_cast<std::size_t>(n) * n * n;
  ModMatrix a(rows, unknowns, m);
  std::size_t r = 0;
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y)
      for (Element u = 0; u < n; ++u)
        for (Element v = 0; v < n; ++v, ++r) {
          a.add(r, shape.index(x, y, u, v), 1);
          a.add(r, shape.index(u, v, x, y), -1);
        }
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y, ++r) a.add(r, shape.index(x, y, x, y), 1);
  for (int which = 0; which < 2; ++which)
    for (Element x = 0; x < n; ++x)
      for (Element y = 0; y < n; ++y)
        for (Element z = 0; z < n; ++z, ++r) {
          const auto terms = which == 0 ? detail::axiom_iii(b, x, y, z) : detail::axiom_iv(b, x, y, z);
          for (const auto& t : terms) a.add(r, shape.index(t.x, t.y, t.u, t.v), t.coeff);
        }
  return a;
}

inline WeightSpace solve_weight_space(const Biquandle& b, Residue m) {
  if (m < 2) throw ModulusError("weight spaces need a modulus of at least 2");
  return WeightSpace(b.size(), ModularKernel(weight_constraints(b, m)));
}

// Distinct weights of the space in lexicographic order of their coefficient
// vectors. Throws TooMany when the space is larger than `limit`, unless
// `truncate` is set, in which case the first `limit` weights are returned.
inline std::vector<ArrowWeight> enumerate_weights(const WeightSpace& ws, std::uint64_t limit, bool truncate = false) {
  const std::uint64_t total = ws.count();
  if (total > limit && !truncate)
    throw TooMany("weight space has " + std::to_string(total) + " elements, limit is " + std::to_string(limit));
  std::vector<ArrowWeight> out;
  const auto& orders = ws.orders();
  std::vector<Residue> coeffs(orders.size(), 0);
  while (out.size() < std::min(total, limit)) {
    out.push_back(ws.combine(coeffs));
    std::size_t i = coeffs.size();
    while (i > 0) {
      --i;
      if (++coeffs[i] < orders[i]) break;
      coeffs[i] = 0;
    }
  }
  return out;
}

}  // namespace bqarrow
