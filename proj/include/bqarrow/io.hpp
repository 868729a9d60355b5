#pragma once

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "bqarrow/biquandle.hpp"
#include "bqarrow/errors.hpp"
#include "bqarrow/weight.hpp"

namespace bqarrow {

using Json = nlohmann::json;

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

inline Json parse_json(const std::string& text, const std::string& origin) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw FormatError(origin + ": " + e.what());
  }
}

namespace detail {

inline const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw FormatError(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

inline std::int64_t integer(const Json& j) {
  if (!j.is_number_integer()) throw FormatError("expected an integer, got " + j.dump());
  return j.get<std::int64_t>();
}

// 1-based JSON table to 0-based Table.
inline Table table_from_json(const Json& j, std::size_t n) {
  if (!j.is_array() || j.size() != n) throw FormatError("operation table must have " + std::to_string(n) + " rows");
  Table t;
  for (const Json& row : j) {
    if (!row.is_array() || row.size() != n) throw FormatError("operation table row must have " + std::to_string(n) + " entries");
    std::vector<Element> r;
    for (const Json& e : row) r.push_back(static_cast<Element>(integer(e) - 1));
    t.push_back(std::move(r));
  }
  return t;
}

inline Json table_to_json(const Table& t) {
  Json out = Json::array();
  for (const auto& row : t) {
    Json r = Json::array();
    for (Element e : row) r.push_back(e + 1);
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace detail

// {"n": 2, "under": [[2,2],[1,1]], "over": [[2,2],[1,1]]}, entries 1-based.
// Throws FormatError for a bad document, RangeError or AxiomError for bad tables.
inline Biquandle biquandle_from_json(const Json& j) {
  const std::int64_t n = detail::integer(detail::field(j, "n"));
  if (n < 1) throw FormatError("n must be positive");
  return Biquandle::validate(detail::table_from_json(detail::field(j, "under"), n),
                             detail::table_from_json(detail::field(j, "over"), n));
}

inline Json biquandle_to_json(const Biquandle& b) {
  return {{"n", b.size()}, {"under", detail::table_to_json(b.under_table())}, {"over", detail::table_to_json(b.over_table())}};
}

// {"m": 8, "tensor": [[[[0,2],[6,4]], ...]]}: tensor[i][j] is the matrix in
// row i column j, and its row k column l entry is phi((i,j),(k,l)).
inline ArrowWeight weight_from_json(const Json& j) {
  const std::int64_t m = detail::integer(detail::field(j, "m"));
  if (m < 1) throw ModulusError("modulus must be at least 1");
  const Json& t = detail::field(j, "tensor");
  if (!t.is_array() || t.empty()) throw FormatError("tensor must be a non-empty array");
  const std::size_t n = t.size();
  std::vector<Residue> entries;
  auto square = [&](const Json& a) {
    if (!a.is_array() || a.size() != n) throw FormatError("tensor is not " + std::to_string(n) + "-dimensional throughout");
  };
  square(t);
  for (const Json& row : t) {
    square(row);
    for (const Json& mat : row) {
      square(mat);
      for (const Json& r : mat) {
        square(r);
        for (const Json& e : r) entries.push_back(detail::integer(e));
      }
    }
  }
  return ArrowWeight(static_cast<int>(n), m, std::move(entries));
}

inline Json weight_to_json(const ArrowWeight& w) {
  const int n = w.size();
  Json t = Json::array();
  for (Element i = 0; i < n; ++i) {
    Json row = Json::array();
    for (Element j = 0; j < n; ++j) {
      Json mat = Json::array();
      for (Element k = 0; k < n; ++k) {
        Json r = Json::array();
        for (Element l = 0; l < n; ++l) r.push_back(w(i, j, k, l));
        mat.push_back(std::move(r));
      }
      row.push_back(std::move(mat));
    }
    t.push_back(std::move(row));
  }
  return {{"m", w.modulus()}, {"tensor", std::move(t)}};
}

inline Biquandle load_biquandle(const std::string& path) { return biquandle_from_json(parse_json(read_file(path), path)); }
inline ArrowWeight load_weight(const std::string& path) { return weight_from_json(parse_json(read_file(path), path)); }

}  // namespace bqarrow
