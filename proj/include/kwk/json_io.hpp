#pragma once

// JSON forms of the input objects (matrix, blocks, scroll type) and of the
// values reported by the command-line tool. Rationals travel as strings
// ("3/2") or integers; floating-point numbers are rejected.

#include <algorithm>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "kwk/error.hpp"
#include "kwk/kronecker.hpp"
#include "kwk/pencil.hpp"
#include "kwk/qmatrix.hpp"

namespace kwk {

using json = nlohmann::json;

struct ScrollType {
  std::vector<std::size_t> lengths;
  friend bool operator==(const ScrollType&, const ScrollType&) = default;
};

using ParsedInput = std::variant<LinearFormMatrix, KWForm, ScrollType>;

namespace detail {

inline const json& field(const json& obj, const std::string& key, const std::string& at) {
  if (!obj.is_object()) throw SchemaError(at, "expected an object");
  auto it = obj.find(key);
  if (it == obj.end()) throw SchemaError(at + "/" + key, "missing field");
  return *it;
}

inline std::size_t positive(const json& v, const std::string& at) {
  if (!v.is_number_integer() || v.get<long long>() < 1) throw SchemaError(at, "expected a positive integer");
  return v.get<std::size_t>();
}

}  // namespace detail

inline Rational rational_from_json(const json& v, const std::string& at) {
  if (v.is_number_integer()) return Rational(v.get<long long>());
  if (v.is_string()) {
    auto r = Rational::parse(v.get<std::string>());
    if (!r) throw SchemaError(at, "malformed rational \"" + v.get<std::string>() + "\"");
    return *r;
  }
  throw SchemaError(at, "expected an integer or a rational string");
}

inline json rational_to_json(const Rational& r) {
  if (r.is_integer() && r.is_small()) return json(std::stoll(r.to_string()));
  return json(r.to_string());
}

/// {"a": 1, "c": "-1/2"} over the given variables.
inline LinearForm linear_form_from_json(const json& v, const std::vector<std::string>& vars, const std::string& at) {
  if (!v.is_object()) throw SchemaError(at, "expected an object mapping variables to coefficients");
  LinearForm f(vars.size());
  for (auto it = v.begin(); it != v.end(); ++it) {
    auto pos = std::find(vars.begin(), vars.end(), it.key());
    if (pos == vars.end()) throw SchemaError(at + "/" + it.key(), "unknown variable");
    f[static_cast<std::size_t>(pos - vars.begin())] = rational_from_json(*it, at + "/" + it.key());
  }
  return f;
}

inline json linear_form_to_json(const LinearForm& f, const std::vector<std::string>& vars) {
  json out = json::object();
  for (std::size_t i = 0; i < f.size(); ++i)
    if (!f[i].is_zero()) out[vars[i]] = rational_to_json(f[i]);
  return out;
}

inline LinearFormMatrix matrix_from_json(const json& j, const std::string& at = "") {
  LinearFormMatrix x;
  const json& vars = detail::field(j, "variables", at);
  if (!vars.is_array() || vars.empty()) throw SchemaError(at + "/variables", "expected a nonempty array of names");
  for (std::size_t k = 0; k < vars.size(); ++k) {
    if (!vars[k].is_string()) throw SchemaError(at + "/variables/" + std::to_string(k), "expected a string");
    auto name = vars[k].get<std::string>();
    if (std::find(x.variables.begin(), x.variables.end(), name) != x.variables.end())
      throw SchemaError(at + "/variables/" + std::to_string(k), "duplicate variable");
    x.variables.push_back(name);
  }
  const json& rows = detail::field(j, "rows", at);
  if (!rows.is_array() || rows.size() != 2) throw SchemaError(at + "/rows", "expected exactly two rows");
  for (std::size_t r = 0; r < 2; ++r) {
    std::string rat = at + "/rows/" + std::to_string(r);
    if (!rows[r].is_array() || rows[r].empty()) throw SchemaError(rat, "expected a nonempty array of entries");
    for (std::size_t c = 0; c < rows[r].size(); ++c)
      x.entries[r].push_back(linear_form_from_json(rows[r][c], x.variables, rat + "/" + std::to_string(c)));
  }
  if (x.entries[0].size() != x.entries[1].size()) throw SchemaError(at + "/rows/1", "rows have different lengths");
  return x;
}

inline json matrix_to_json(const LinearFormMatrix& x) {
  json rows = json::array();
  for (const auto& row : x.entries) {
    json r = json::array();
    for (const auto& f : row) r.push_back(linear_form_to_json(f, x.variables));
    rows.push_back(r);
  }
  return {{"kind", "matrix"}, {"variables", x.variables}, {"rows", rows}};
}

inline KWBlock block_from_json(const json& b, const std::string& at) {
  const json& kind = detail::field(b, "kind", at);
  std::size_t len = detail::positive(detail::field(b, "length", at), at + "/length");
  if (kind == "nilpotent") return KWBlock::nilpotent(len);
  if (kind == "scroll") return KWBlock::scroll(len);
  if (kind == "jordan") return KWBlock::jordan(len, rational_from_json(detail::field(b, "eigenvalue", at), at + "/eigenvalue"));
  throw SchemaError(at + "/kind", "expected \"nilpotent\", \"scroll\" or \"jordan\"");
}

inline json block_to_json(const KWBlock& b) {
  json out = {{"kind", std::string(to_string(b.kind))}, {"length", b.length}};
  if (b.kind == BlockKind::Jordan) out["eigenvalue"] = b.eigenvalue.to_string();
  return out;
}

inline KWForm form_from_json(const json& j, const std::string& at = "") {
  KWForm f;
  const json& blocks = detail::field(j, "blocks", at);
  if (!blocks.is_array()) throw SchemaError(at + "/blocks", "expected an array");
  for (std::size_t k = 0; k < blocks.size(); ++k) f.blocks.push_back(block_from_json(blocks[k], at + "/blocks/" + std::to_string(k)));
  if (j.contains("free_variables")) {
    const json& fv = j["free_variables"];
    if (!fv.is_number_integer() || fv.get<long long>() < 0) throw SchemaError(at + "/free_variables", "expected a nonnegative integer");
    f.free_variables = fv.get<std::size_t>();
  }
  if (f.blocks.empty() && f.free_variables == 0) throw SchemaError(at + "/blocks", "empty normal form");
  return f;
}

inline json form_to_json(const KWForm& f) {
  json blocks = json::array();
  for (const auto& b : f.blocks) blocks.push_back(block_to_json(b));
  json out = {{"kind", "blocks"}, {"blocks", blocks}};
  if (f.free_variables) out["free_variables"] = f.free_variables;
  return out;
}

inline ScrollType scroll_type_from_json(const json& j, const std::string& at = "") {
  const json& t = detail::field(j, "type", at);
  if (!t.is_array() || t.empty()) throw SchemaError(at + "/type", "expected a nonempty array of lengths");
  ScrollType s;
  for (std::size_t k = 0; k < t.size(); ++k) s.lengths.push_back(detail::positive(t[k], at + "/type/" + std::to_string(k)));
  return s;
}

inline json scroll_type_to_json(const ScrollType& s) { return {{"kind", "scroll"}, {"type", s.lengths}}; }

inline ParsedInput parse_input(const json& j) {
  const json& kind = detail::field(j, "kind", "");
  if (kind == "matrix") return matrix_from_json(j);
  if (kind == "blocks") return form_from_json(j);
  if (kind == "scroll") return scroll_type_from_json(j);
  throw SchemaError("/kind", "expected \"matrix\", \"blocks\" or \"scroll\"");
}

inline json input_to_json(const ParsedInput& in) {
  return std::visit(
      [](const auto& v) -> json {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, LinearFormMatrix>) return matrix_to_json(v);
        else if constexpr (std::is_same_v<T, KWForm>) return form_to_json(v);
        else return scroll_type_to_json(v);
      },
      in);
}

inline json qmatrix_to_json(const QMatrix& m) {
  json out = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m(i, j).to_string());
    out.push_back(row);
  }
  return out;
}

}  // namespace kwk
