#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "algent/json_io.hpp"

namespace algent {

struct CatalogEntry {
  std::string name;
  std::string kind;  // monomial | rational | tropical | pl-recurrence
  Json definition;
  std::string anchor;

  AnyMap load() const { return map_from_json(definition); }
};

inline const std::vector<CatalogEntry>& catalog() {
  static const std::vector<CatalogEntry> entries = [] {
    auto mono = [](const char* name, std::vector<std::vector<int>> rows, const char* anchor) {
      Json m = Json::array();
      for (const auto& r : rows) {
        Json row = Json::array();
        for (int v : r) row.push_back(std::to_string(v));
        m.push_back(row);
      }
      return CatalogEntry{name, "monomial", Json{{"type", "monomial"}, {"matrix", m}}, anchor};
    };
    auto rat = [](const char* name, std::vector<std::string> vars, std::vector<std::string> comps, const char* anchor) {
      return CatalogEntry{name, "rational", Json{{"type", "rational"}, {"vars", vars}, {"components", comps}}, anchor};
    };
    auto trop = [](const char* name, std::vector<std::string> vars, std::vector<std::string> comps, const char* anchor) {
      return CatalogEntry{name, "tropical", Json{{"type", "tropical"}, {"vars", vars}, {"components", comps}}, anchor};
    };
    std::vector<CatalogEntry> e;
    e.push_back(rat("henon", {"x", "y"}, {"1+y-x^2", "x"}, "Henon map with A = B = 1, degree 2^N"));
    e.push_back(rat("musiker", {"x", "y"}, {"y", "(y^2+1)/x"}, "Laurent map with linear degree growth 2N"));
    e.push_back(rat("gauss5", {"x", "y"}, {"y", "(y+1)/x"}, "birational map of order 5"));
    e.push_back(rat("somos4", {"w", "x", "y", "z"}, {"x", "y", "z", "(x*z+y^2)/w"}, "Somos-4 recurrence, quadratic degree growth"));
    e.push_back(rat("scott", {"x", "y", "z"}, {"y", "z", "(y^2+z^2)/x"}, "Scott map, degrees 2, 4, 8, 14, 24, 40, 66, 108"));
    e.push_back(rat("hone", {"w", "x", "y", "z"}, {"x", "y", "z", "z*(w*z-x*y)/(w*y-x^2)"},
                    "quartic-denominator map with degrees floor((2N^2+6N+9)/5)"));
    e.push_back(mono("fibmono", {{0, 1}, {1, 1}}, "Fibonacci monomial map (x, y) -> (y, xy)"));
    e.push_back(mono("squaremono", {{2, 0}, {0, 3}}, "diag(2,3): algebraic entropy log 3, toral entropy log 6"));
    e.push_back(mono("counterexample", {{-1, 1, 0}, {-1, 0, 1}, {1, 0, 0}}, "degree sequence with no linear recurrence"));
    e.push_back(mono("inv-gap", {{1, 2}, {-2, 1}}, "complex eigenvalues 1 +- 2i, strict entropy gap"));
    e.push_back(trop("scott-trop", {"a", "b", "c"}, {"b", "c", "max(2b,2c)-a"}, "tropical Scott map, Fibonacci coefficient growth"));
    e.push_back(trop("musiker-trop", {"a", "b"}, {"b", "max(2b,0)-a"}, "tropical Musiker map"));
    e.push_back(CatalogEntry{"pl-max2", "pl-recurrence",
                             Json{{"type", "pl-recurrence"}, {"arity", 3}, {"expr", "max(a1,a2)-2a3"}, {"init", {"1", "1", "-1"}}},
                             "a_n = max(a_{n-1}, a_{n-2}) - 2 a_{n-3} from 1, 1, -1"});
    return e;
  }();
  return entries;
}

inline const CatalogEntry* find_catalog_entry(const std::string& name) {
  const auto& c = catalog();
  auto it = std::find_if(c.begin(), c.end(), [&](const CatalogEntry& e) { return e.name == name; });
  return it == c.end() ? nullptr : &*it;
}

// Square integer matrices of the monomial entries.
inline std::vector<std::pair<std::string, IntMatrix>> catalog_matrices() {
  std::vector<std::pair<std::string, IntMatrix>> out;
  for (const auto& e : catalog())
    if (e.kind == "monomial") out.emplace_back(e.name, std::get<IntMatrix>(e.load()));
  return out;
}

}  // namespace algent
