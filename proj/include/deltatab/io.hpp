#pragma once

#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"

#include "deltatab/hive.hpp"
#include "deltatab/partition.hpp"
#include "deltatab/poly.hpp"
#include "deltatab/promotion.hpp"
#include "deltatab/tableau.hpp"

namespace deltatab {

using Json = nlohmann::json;

/// Comma-separated nonnegative integers, e.g. "2,2,2".
inline ContentVector parse_content(const std::string& text) {
  ContentVector out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(item, &used);
    } catch (const std::exception&) {
      throw std::invalid_argument("content entry '" + item + "' is not an integer");
    }
    if (used != item.size() || v < 0) throw std::invalid_argument("content entry '" + item + "' is not a nonnegative integer");
    out.push_back(v);
  }
  if (!text.empty() && text.back() == ',') throw std::invalid_argument("trailing comma in content");
  return out;
}

inline std::string format_content(const ContentVector& gamma) {
  std::string s;
  for (std::size_t i = 0; i < gamma.size(); ++i) s += (i ? "," : "") + std::to_string(gamma[i]);
  return s;
}

/// Rows separated by '/', entries by ',', e.g. "1,1,2,5/2,3,4,6".
inline Grid parse_grid(const std::string& text) {
  Grid g;
  std::stringstream rows(text);
  std::string row;
  while (std::getline(rows, row, '/')) {
    if (row.empty()) throw std::invalid_argument("empty row in tableau text");
    g.push_back(parse_content(row));
  }
  return g;
}

/// One row per line, entries separated by spaces, dotted cells as '.'.
inline std::string render(const Grid& g) {
  std::string s;
  for (const auto& row : g) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c) s += ' ';
      s += row[c] == kDot ? "." : std::to_string(row[c]);
    }
    s += '\n';
  }
  return s;
}

inline std::string render(const Tableau& t) { return render(t.rows()); }

inline Json to_json(const Tableau& t) {
  Json j;
  j["shape"] = t.rows().empty() ? std::vector<int>{} : t.shape().parts();
  j["rows"] = t.rows();
  j["delta"] = t.delta().str();
  j["gamma"] = t.content();
  return j;
}

/// Inverse of to_json.  Shape and content are recomputed and must match.
inline Tableau tableau_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("rows") || !j.contains("delta"))
    throw std::invalid_argument("tableau record needs rows and delta");
  Tableau t(j.at("rows").get<Grid>(), OrientationString::parse(j.at("delta").get<std::string>()));
  if (j.contains("shape") && j.at("shape").get<std::vector<int>>() != (t.rows().empty() ? std::vector<int>{} : t.shape().parts()))
    throw std::invalid_argument("tableau record shape does not match its rows");
  if (j.contains("gamma") && j.at("gamma").get<ContentVector>() != t.content())
    throw std::invalid_argument("tableau record gamma does not match its rows");
  return t;
}

/// {n, m, entries: [[coords..., value], ...]} with n the number of corners.
inline Json to_json(const Hive& h) {
  Json j;
  j["n"] = h.corners();
  j["m"] = h.m();
  Json entries = Json::array();
  const Simplex& s = h.lattice();
  for (int i = 0; i < static_cast<int>(s.size()); ++i) {
    if (!h.known(i)) continue;
    Json e(s.point(i));
    e.push_back(h.value(i));
    entries.push_back(std::move(e));
  }
  j["entries"] = std::move(entries);
  return j;
}

/// Inverse of to_json; points not listed stay unknown.
inline Hive hive_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("m") || !j.contains("entries"))
    throw std::invalid_argument("hive record needs n, m and entries");
  const int n = j.at("n").get<int>(), m = j.at("m").get<int>();
  if (n < 2 || m < 0) throw std::invalid_argument("hive record needs n >= 2 and m >= 0");
  Hive h(n, m);
  for (const auto& e : j.at("entries")) {
    auto v = e.get<std::vector<long long>>();
    if (static_cast<int>(v.size()) != n + 1) throw std::invalid_argument("hive entry must list n coordinates and a value");
    std::vector<int> coords(v.begin(), v.end() - 1);
    const int idx = h.lattice().index(coords);
    if (idx < 0) throw std::invalid_argument("hive entry " + format_point(coords) + " is not a lattice point");
    h.set(idx, v.back());
  }
  return h;
}

inline Json to_json(const IntPoly& p) {
  Json terms = Json::array();
  for (std::size_t d = 0; d < p.coeffs().size(); ++d)
    if (p.coeffs()[d] != 0) terms.push_back({static_cast<int>(d), p.coeffs()[d]});
  return Json{{"terms", terms}, {"text", to_string(p)}};
}

inline IntPoly poly_from_json(const Json& j) {
  std::map<int, long long> terms;
  for (const auto& t : j.at("terms")) terms[t.at(0).get<int>()] += t.at(1).get<long long>();
  return IntPoly::from_terms(terms);
}

}  // namespace deltatab
