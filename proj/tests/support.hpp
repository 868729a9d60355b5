#pragma once

#include <algorithm>
#include <random>
#include <string>
#include <vector>

#include <bqarrow/coloring.hpp>
#include <bqarrow/invariant.hpp>
#include <bqarrow/io.hpp>
#include <bqarrow/knotdb.hpp>
#include <bqarrow/moves.hpp>

namespace fixture {

using namespace bqarrow;

inline std::string data(const std::string& rel) { return std::string(BQARROW_DATA) + "/" + rel; }

inline Biquandle x2() { return load_biquandle(data("biquandles/x2.json")); }
inline Biquandle tricolor() { return load_biquandle(data("biquandles/tricolor.json")); }
inline ArrowWeight weight(const std::string& name) { return load_weight(data("weights/" + name + ".json")); }

inline GaussDiagram knot(const std::string& name) {
  for (const char* table : {"knots/classical.tsv", "knots/virtual.tsv"})
    for (const auto& k : load_table(data(table)))
      if (k.name == name) return k.diagram;
  throw IndexError("no shipped knot " + name);
}

// Alexander biquandles x under y = t x + (s - t) y, x over y = s x over Z_n,
// plus the two shipped ones.
inline std::vector<Biquandle> sample_biquandles(int max_n = 5) {
  std::vector<Biquandle> out{x2(), tricolor(), Biquandle::trivial(1), Biquandle::trivial(3)};
  for (int n = 3; n <= max_n; ++n)
    for (int t = 1; t < n; ++t)
      for (int s = 1; s < n; ++s) {
        Table u(n, std::vector<Element>(n)), o(n, std::vector<Element>(n));
        for (int x = 0; x < n; ++x)
          for (int y = 0; y < n; ++y) {
            u[x][y] = ((t * x + (s - t) * y) % n + n) % n;
            o[x][y] = s * x % n;
          }
        if (!find_biquandle_violation(u, o)) out.push_back(Biquandle::validate(u, o));
      }
  return out;
}

inline GaussDiagram random_diagram(std::mt19937_64& rng, int arrows) {
  std::vector<int> ends(2 * arrows);
  for (int i = 0; i < 2 * arrows; ++i) ends[i] = i;
  std::shuffle(ends.begin(), ends.end(), rng);
  std::vector<Arrow> a;
  for (int i = 0; i < arrows; ++i) a.push_back({ends[2 * i], ends[2 * i + 1], rng() & 1 ? 1 : -1});
  return GaussDiagram(a);
}

// Every assignment of colors to segments, filtered through check_coloring.
inline std::vector<Coloring> brute_force_colorings(const GaussDiagram& d, const Biquandle& b) {
  const std::size_t m = segment_count(d);
  std::vector<Coloring> out;
  Coloring c{std::vector<Element>(m, 0)};
  for (;;) {
    if (check_coloring(d, b, c)) out.push_back(c);
    std::size_t i = m;
    while (i > 0 && ++c.segments[i - 1] == b.size()) c.segments[--i] = 0;
    if (i == 0) return out;
  }
}

// Every assignment of residues to the n^4 tensor entries, filtered through
// verify_weight.
inline std::vector<ArrowWeight> brute_force_weights(const Biquandle& b, Residue m) {
  const int n = b.size();
  const std::size_t entries = static_cast<std::size_t>(n) * n * n * n;
  std::vector<ArrowWeight> out;
  std::vector<Residue> t(entries, 0);
  for (;;) {
    ArrowWeight w(n, m, t);
    if (verify_weight(b, w).ok()) out.push_back(w);
    std::size_t i = entries;
    while (i > 0 && ++t[i - 1] == m) t[--i] = 0;
    if (i == 0) return out;
  }
}

}  // namespace fixture
