#pragma once

#include <algorithm>
#include <future>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "bqarrow/errors.hpp"
#include "bqarrow/gauss.hpp"
#include "bqarrow/invariant.hpp"
#include "bqarrow/io.hpp"

namespace bqarrow {

struct KnotRecord {
  std::string name;
  std::string gauss_code;
  GaussDiagram diagram;
};

// Lines are `name<TAB>gauss_code`. Blank lines and lines starting with '#'
// are skipped; an empty code is the unknot.
inline std::vector<KnotRecord> parse_table(const std::string& text) {
  std::vector<KnotRecord> out;
  std::set<std::string> names;
  std::istringstream in(text);
  std::string line;
  for (std::size_t number = 1; std::getline(in, line); ++number) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.find_first_not_of(" \t") == std::string::npos || line[0] == '#') continue;
    const auto tab = line.find('\t');
    if (tab == std::string::npos) throw ParseError(number, "expected name<TAB>gauss_code");
    std::string name = line.substr(0, tab), code = line.substr(tab + 1);
    if (name.empty()) throw ParseError(number, "empty knot name");
    GaussDiagram d;
    try {
      d = parse_gauss_code(code);
    } catch (const Error& e) {
      throw ParseError(number, e.what());
    }
    if (!names.insert(name).second) throw DuplicateName("line " + std::to_string(number) + ": duplicate knot " + name);
    out.push_back({std::move(name), std::move(code), std::move(d)});
  }
  return out;
}

inline std::vector<KnotRecord> load_table(const std::string& path) { return parse_table(read_file(path)); }

struct ClassificationReport {
  std::vector<std::string> names;      // input order
  std::vector<InvariantValue> values;  // values[i] belongs to names[i]

  // Polynomial -> knot names in input order.
  std::map<std::string, std::vector<std::string>> groups() const {
    std::map<std::string, std::vector<std::string>> g;
    for (std::size_t i = 0; i < names.size(); ++i) g[values[i].polynomial()].push_back(names[i]);
    return g;
  }

  const InvariantValue& value(const std::string& name) const {
    const auto it = std::find(names.begin(), names.end(), name);
    if (it == names.end()) throw IndexError("no knot named " + name);
    return values[it - names.begin()];
  }
};

// Knots are split into `threads` interleaved stripes evaluated concurrently;
// the report does not depend on the thread count.
inline ClassificationReport classify(const std::vector<KnotRecord>& records, const Biquandle& b, const ArrowWeight& w,
                                     unsigned threads = std::thread::hardware_concurrency()) {
  detail::check_dims(b, w);
  ClassificationReport r;
  for (const auto& k : records) r.names.push_back(k.name);
  r.values.resize(records.size());
  auto stripe = [&](std::size_t first, std::size_t step) {
    for (std::size_t i = first; i < records.size(); i += step) {
      try {
        r.values[i] = compute_invariant(records[i].diagram, b, w);
      } catch (const Error& e) {
        throw RecordError(records[i].name, e.what());
      }
    }
  };
  threads = std::max(1u, std::min<unsigned>(threads, records.size()));
  if (threads == 1) {
    stripe(0, 1);
    return r;
  }
  std::vector<std::future<void>> jobs;
  for (unsigned t = 0; t < threads; ++t) jobs.push_back(std::async(std::launch::async, stripe, t, threads));
  for (auto& j : jobs) j.get();
  return r;
}

// Two columns like the published tables: value, then the knots having it.
inline std::string render_text(const ClassificationReport& r) {
  std::ostringstream os;
  std::size_t width = 0;
  const auto groups = r.groups();
  for (const auto& [poly, names] : groups) width = std::max(width, poly.size());
  for (const auto& [poly, names] : groups) {
    os << std::string(width - poly.size(), ' ') << poly << " | ";
    for (std::size_t i = 0; i < names.size(); ++i) os << (i ? ", " : "") << names[i];
    os << "\n";
  }
  return os.str();
}

inline Json render_json(const ClassificationReport& r) {
  Json g = Json::object();
  for (const auto& [poly, names] : r.groups()) g[poly] = names;
  return {{"groups", std::move(g)}};
}

}  // namespace bqarrow
