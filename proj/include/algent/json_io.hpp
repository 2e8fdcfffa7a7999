#pragma once

#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "algent/errors.hpp"
#include "algent/linalg.hpp"
#include "algent/ratmap.hpp"
#include "algent/recurrence.hpp"
#include "algent/spectral.hpp"
#include "algent/tropical.hpp"

namespace algent {

using Json = nlohmann::ordered_json;

// Input JSON that does not follow the expected schema.
class SchemaError : public DomainError {
 public:
  using DomainError::DomainError;
};

// Numbers travel as decimal strings so big integers survive bit-exactly.

inline Json to_json(const IntMatrix& a) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < a.size(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < a.size(); ++j) row.push_back(to_string(a(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

namespace detail {
inline Int int_from_json(const Json& v) {
  if (v.is_string()) {
    try {
      return parse_int(v.get<std::string>());
    } catch (const std::exception&) {
      throw SchemaError("bad integer '" + v.get<std::string>() + "'");
    }
  }
  if (v.is_number_integer()) return Int(std::to_string(v.get<long long>()));
  throw SchemaError("expected an integer as a decimal string");
}
inline Rat rat_from_json(const Json& v) {
  if (v.is_string()) {
    try {
      return parse_rat(v.get<std::string>());
    } catch (const std::exception&) {
      throw SchemaError("bad rational '" + v.get<std::string>() + "'");
    }
  }
  if (v.is_number_integer()) return Rat(Int(std::to_string(v.get<long long>())));
  throw SchemaError("expected a rational as a decimal string");
}
}  // namespace detail

inline IntMatrix matrix_from_json(const Json& j) {
  if (!j.is_array() || j.empty()) throw SchemaError("matrix must be a nonempty array of rows");
  std::vector<std::vector<Int>> rows;
  for (const auto& r : j) {
    if (!r.is_array() || r.size() != j.size()) throw SchemaError("matrix must be square");
    std::vector<Int> row;
    for (const auto& v : r) row.push_back(detail::int_from_json(v));
    rows.push_back(std::move(row));
  }
  return IntMatrix::from_rows(rows);
}

template <class T>
Json sequence_to_json(const std::vector<T>& s) {
  Json out = Json::array();
  for (const auto& v : s) out.push_back(to_string(v));
  return out;
}

inline std::vector<Rat> sequence_from_json(const Json& j) {
  if (!j.is_array()) throw SchemaError("sequence must be an array");
  std::vector<Rat> out;
  for (const auto& v : j) out.push_back(detail::rat_from_json(v));
  return out;
}

inline Json to_json(const Recurrence& r) {
  return Json{{"order", r.order}, {"coeffs", sequence_to_json(r.coeffs)}};
}

inline Recurrence recurrence_from_json(const Json& j) {
  Recurrence r;
  r.order = j.at("order").get<std::size_t>();
  r.coeffs = sequence_from_json(j.at("coeffs"));
  if (r.coeffs.size() != r.order) throw SchemaError("recurrence coefficient count must equal its order");
  return r;
}

inline Json to_json(const RationalMap& f) {
  return Json{{"type", "rational"}, {"vars", f.vars()}, {"components", f.to_strings()}};
}

inline RationalMap rational_map_from_json(const Json& j) {
  auto vars = j.at("vars").get<std::vector<std::string>>();
  auto comps = j.at("components").get<std::vector<std::string>>();
  if (vars.empty() || comps.size() != vars.size()) throw SchemaError("need one component per variable");
  return RationalMap::parse(std::move(vars), comps);
}

inline Json to_json(const ProjectiveForm& p) {
  return Json{{"degree", p.degree}, {"exact", p.exact}, {"vars", p.vars}, {"polys", p.to_strings()}};
}

namespace detail {
inline Json form_to_json(const AffineForm& f) {
  Json out = Json::array();
  for (const auto& c : f.coeffs) out.push_back(to_string(c));
  out.push_back(to_string(f.constant));
  return out;
}
inline AffineForm form_from_json(const Json& j, std::size_t dim) {
  if (!j.is_array()) throw SchemaError("affine form must be an array");
  if (j.size() != dim && j.size() != dim + 1) throw SchemaError("affine form has the wrong length");
  AffineForm f(dim);
  for (std::size_t i = 0; i < dim; ++i) f.coeffs[i] = rat_from_json(j[i]);
  if (j.size() == dim + 1) f.constant = rat_from_json(j[dim]);
  return f;
}
inline TropExpr expr_from_json(const Json& j, std::size_t dim) {
  if (!j.is_array() || j.empty()) throw SchemaError("max-expression must be a nonempty array of forms");
  std::vector<AffineForm> forms;
  for (const auto& f : j) forms.push_back(form_from_json(f, dim));
  return TropExpr(std::move(forms));
}
}  // namespace detail

inline Json to_json(const TropMap& m) {
  Json comps = Json::array();
  for (const auto& c : m.components()) {
    Json num = Json::array(), den = Json::array();
    for (const auto& f : c.num().forms()) num.push_back(detail::form_to_json(f));
    for (const auto& f : c.den().forms()) den.push_back(detail::form_to_json(f));
    comps.push_back(Json{{"num", num}, {"den", den}});
  }
  return Json{{"type", "tropical"}, {"vars", m.vars()}, {"components", comps}};
}

// Components may be {"num": [...], "den": [...]} objects or text such as
// "max(2b,2c)-a".
inline TropMap trop_map_from_json(const Json& j) {
  auto vars = j.at("vars").get<std::vector<std::string>>();
  if (vars.empty() || !j.at("components").is_array() || j.at("components").size() != vars.size())
    throw SchemaError("need one component per variable");
  std::vector<TropComponent> comps;
  for (const auto& c : j.at("components")) {
    if (c.is_string()) {
      comps.push_back(parse_tropical(c.get<std::string>(), vars));
      continue;
    }
    TropExpr num = detail::expr_from_json(c.at("num"), vars.size());
    TropExpr den = c.contains("den") ? detail::expr_from_json(c.at("den"), vars.size()) : TropExpr::zero(vars.size());
    comps.emplace_back(std::move(num), std::move(den));
  }
  return TropMap(std::move(vars), std::move(comps));
}

// a_n = F(a_{n-1}, ..., a_{n-k}) with lag names a1..ak, plus initial terms.
struct PLSpec {
  std::size_t arity = 0;
  std::string expr;
  std::vector<Int> init;

  PLRecurrence recurrence() const { return PLRecurrence::parse(arity, expr); }
};

inline Json to_json(const PLSpec& p) {
  return Json{{"type", "pl-recurrence"}, {"arity", p.arity}, {"expr", p.expr}, {"init", sequence_to_json(p.init)}};
}

inline PLSpec pl_spec_from_json(const Json& j) {
  PLSpec p;
  p.arity = j.at("arity").get<std::size_t>();
  p.expr = j.at("expr").get<std::string>();
  for (const auto& v : j.at("init")) p.init.push_back(detail::int_from_json(v));
  if (p.init.size() != p.arity) throw SchemaError("initial values must match the recurrence arity");
  p.recurrence();
  return p;
}

using AnyMap = std::variant<IntMatrix, RationalMap, TropMap, PLSpec>;

inline std::string kind_name(const AnyMap& m) {
  switch (m.index()) {
    case 0: return "monomial";
    case 1: return "rational";
    case 2: return "tropical";
    default: return "pl-recurrence";
  }
}

inline Json to_json(const AnyMap& m) {
  if (auto* a = std::get_if<IntMatrix>(&m)) return Json{{"type", "monomial"}, {"matrix", to_json(*a)}};
  if (auto* f = std::get_if<RationalMap>(&m)) return to_json(*f);
  if (auto* t = std::get_if<TropMap>(&m)) return to_json(*t);
  return to_json(std::get<PLSpec>(m));
}

inline AnyMap map_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("type")) throw SchemaError("map JSON needs a \"type\" field");
  std::string type = j.at("type").get<std::string>();
  if (type == "monomial") {
    IntMatrix a = matrix_from_json(j.at("matrix"));
    if (determinant(a) == 0) throw DomainError("monomial map requires a nonsingular matrix");
    return a;
  }
  if (type == "rational") return rational_map_from_json(j);
  if (type == "tropical") return trop_map_from_json(j);
  if (type == "pl-recurrence") return pl_spec_from_json(j);
  throw SchemaError("unknown map type '" + type + "'");
}

inline Json to_json(const EntropyReport& r) {
  Json degrees = Json::array(), conj = Json::array(), bounds = Json::object();
  for (const auto& d : r.dynamical_degrees) {
    degrees.push_back(d.log_value.value);
    conj.push_back(d.conjectural);
  }
  Json dd_err = Json::array();
  for (const auto& d : r.dynamical_degrees) dd_err.push_back(d.log_value.error);
  bounds["algebraic_entropy"] = r.algebraic_entropy.error;
  bounds["toral_entropy"] = r.toral.value.error;
  bounds["dynamical_degrees"] = dd_err;
  return Json{{"algebraic_entropy", r.algebraic_entropy.value},
              {"toral_entropy", r.toral.value.value},
              {"toral_method", r.toral.method},
              {"toral_ambiguous", r.toral.ambiguous},
              {"dynamical_degrees", degrees},
              {"conjectural", conj},
              {"error_bounds", bounds}};
}

}  // namespace algent
