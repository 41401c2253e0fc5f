#pragma once

// Dispatch for the kwkoszul command-line tool, usable in-process.
// Exit codes: 0 verdict true / pass, 1 verdict false / refuted, 2 input or
// bounds error (with a JSON error object).

#include <chrono>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "kwk/filtration.hpp"
#include "kwk/homology.hpp"
#include "kwk/invariants.hpp"
#include "kwk/json_io.hpp"
#include "kwk/kronecker.hpp"
#include "kwk/ringmodel.hpp"

namespace kwk {

inline constexpr const char* kReportSchema = "kwkoszul.report/1";

struct JobSpec {
  std::string subcommand;  // "filtration verify" for the nested command
  std::optional<std::string> input_path;
  std::optional<std::string> inline_json;
  int max_degree = 4;
  std::map<std::string, std::string> bounds;
  std::optional<std::string> out;
  std::vector<std::string> section_forms;  // JSON objects {var: coeff}
  long m = 0, n = 0;                       // homology-witness
};

struct RunResult {
  int exit_code = 0;
  json report;  // on success
  json error;   // on exit code 2
};

struct CliBounds {
  FiltrationBounds filtration;
  ResolutionBounds resolution{6, 6};
  HomologyBounds homology;
};

namespace detail {

inline long bound_value(const std::string& key, const std::string& text) {
  try {
    std::size_t used = 0;
    long v = std::stol(text, &used);
    if (used != text.size() || v < 0) throw std::invalid_argument("");
    return v;
  } catch (const std::exception&) {
    throw SchemaError("--bounds/" + key, "expected a nonnegative integer, got \"" + text + "\"");
  }
}

inline CliBounds parse_bounds(const std::map<std::string, std::string>& kv) {
  CliBounds b;
  for (const auto& [key, text] : kv) {
    auto v = bound_value(key, text);
    auto u = static_cast<std::size_t>(v);
    if (key == "filtration.max_variables") b.filtration.max_variables = u;
    else if (key == "filtration.max_scroll_blocks") b.filtration.max_scroll_blocks = u;
    else if (key == "filtration.max_scroll_length") b.filtration.max_scroll_length = u;
    else if (key == "resolution.max_vars") b.resolution.max_vars = u;
    else if (key == "resolution.max_degree") b.resolution.max_degree = static_cast<int>(v);
    else if (key == "homology.max_degree") b.homology.max_degree = v;
    else if (key == "homology.max_interval") b.homology.max_interval = u;
    else throw SchemaError("--bounds/" + key, "unknown bound");
  }
  return b;
}

inline json load_input_json(const JobSpec& spec) {
  std::string text;
  if (spec.inline_json) {
    text = *spec.inline_json;
  } else if (spec.input_path) {
    std::ifstream in(*spec.input_path);
    if (!in) throw SchemaError("--input", "cannot read " + *spec.input_path);
    std::stringstream ss;
    ss << in.rdbuf();
    text = ss.str();
  } else {
    throw SchemaError("--input", "this subcommand needs --input or --inline");
  }
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw SchemaError("", std::string("invalid JSON: ") + e.what());
  }
}

inline KWForm scroll_form(const ScrollType& s) {
  KWForm f;
  for (auto n : s.lengths) f.blocks.push_back(KWBlock::scroll(n));
  return f.canonical();
}

/// The matrix behind any input kind.
inline LinearFormMatrix as_matrix(const ParsedInput& in) {
  if (auto x = std::get_if<LinearFormMatrix>(&in)) {
    x->validate();
    return *x;
  }
  if (auto f = std::get_if<KWForm>(&in)) return blocks_to_matrix(*f);
  return blocks_to_matrix(scroll_form(std::get<ScrollType>(in)));
}

/// The normal form behind any input kind; matrices go through kw_normal_form.
inline KWForm as_form(const ParsedInput& in) {
  if (auto f = std::get_if<KWForm>(&in)) return f->canonical();
  if (auto s = std::get_if<ScrollType>(&in)) return scroll_form(*s);
  return kw_normal_form(std::get<LinearFormMatrix>(in)).form;
}

inline json normal_form_json(const LinearFormMatrix& x) {
  auto p = matrix_to_pencil(x);
  auto res = kw_normal_form(p);
  bool ok = verify_certificate(p, res.form, res.certificate);
  auto ls = LengthSequence::from_form(res.form);
  return {{"form", form_to_json(res.form)},
          {"length_sequence", ls.to_string()},
          {"certificate",
           {{"C", qmatrix_to_json(res.certificate.C)},
            {"Cprime", qmatrix_to_json(res.certificate.Cprime)},
            {"row_mix", qmatrix_to_json(res.certificate.row_mix)}}},
          {"certificate_verified", ok}};
}

inline json verdict_json(bool value, std::optional<int> degree) {
  json v = {{"value", value}};
  v["checked_to_degree"] = degree ? json(*degree) : json(nullptr);
  return v;
}

}  // namespace detail

inline json error_json(const Error& e) {
  json err = {{"kind", std::string(to_string(e.kind()))}, {"message", e.what()}};
  if (auto s = dynamic_cast<const SchemaError*>(&e)) err["pointer"] = s->pointer();
  return {{"error", err}};
}

/// Runs one job. Library errors become exit code 2 with an error object.
inline RunResult run(const JobSpec& spec) {
  using namespace detail;
  RunResult out;
  auto start = std::chrono::steady_clock::now();
  try {
    if (spec.max_degree < 1) throw SchemaError("--max-degree", "must be at least 1");
    CliBounds bounds = parse_bounds(spec.bounds);
    const int D = spec.max_degree;
    json inputs = json::object();
    json results;
    bool value = true;
    std::optional<int> degree;

    std::optional<ParsedInput> input;
    if (spec.subcommand != "homology-witness") {
      input = parse_input(load_input_json(spec));
      inputs["input"] = input_to_json(*input);
    }

    const std::string& cmd = spec.subcommand;
    if (cmd == "normal-form") {
      results = normal_form_json(as_matrix(*input));
      value = results["certificate_verified"].get<bool>();
    } else if (cmd == "section") {
      auto x = as_matrix(*input);
      std::vector<LinearForm> forms;
      json echo = json::array();
      for (std::size_t k = 0; k < spec.section_forms.size(); ++k) {
        json f;
        try {
          f = json::parse(spec.section_forms[k]);
        } catch (const json::parse_error&) {
          throw SchemaError("--form/" + std::to_string(k), "invalid JSON");
        }
        forms.push_back(linear_form_from_json(f, x.variables, "--form/" + std::to_string(k)));
        echo.push_back(f);
      }
      inputs["forms"] = echo;
      auto s = section(x, forms);
      results = normal_form_json(s);
      results["section"] = matrix_to_json(s);
      value = results["certificate_verified"].get<bool>();
    } else if (cmd == "analyze") {
      auto ls = LengthSequence::from_form(as_form(*input));
      bool koszul = koszul_verdict(ls);
      results = {{"length_sequence", ls.to_string()},
                 {"longest_nilpotent", ls.longest_nilpotent()},
                 {"shortest_scroll", ls.shortest_scroll()},
                 {"koszul", koszul},
                 {"regularity", regularity_formula(ls)},
                 {"correction", hilbert_correction(ls).to_string()}};
      value = koszul;
    } else if (cmd == "hilbert") {
      auto form = as_form(*input);
      auto ls = LengthSequence::from_form(form);
      auto corr = hilbert_correction(ls);
      auto x = blocks_to_matrix(form);
      PolyRing full(x.variables);
      auto gens = two_minors(x);
      KWForm rest;
      for (const auto& b : form.blocks)
        if (b.kind != BlockKind::Nilpotent) rest.blocks.push_back(b);
      rest.free_variables = form.free_variables;
      std::optional<LinearFormMatrix> xr;
      if (!rest.blocks.empty() || rest.free_variables) xr = blocks_to_matrix(rest);
      json rows = json::array();
      for (int d = 0; d <= D; ++d) {
        long hf = static_cast<long>(hilbert_function(full, gens, d));
        long hr = xr ? static_cast<long>(hilbert_function(PolyRing(xr->variables), two_minors(*xr), d)) : (d == 0 ? 1 : 0);
        Rational c = corr.coefficient(static_cast<std::size_t>(d));
        bool match = c == Rational(hf - hr);
        value = value && match;
        rows.push_back({{"degree", d}, {"full", hf}, {"without_nilpotent", hr}, {"difference", hf - hr},
                        {"correction", c.to_string()}, {"match", match}});
      }
      results = {{"correction", corr.to_string()}, {"table", rows}};
      degree = D;
    } else if (cmd == "filtration verify") {
      auto F = enumerate_filtration(as_form(*input), bounds.filtration);
      auto rep = verify_koszul_filtration(F, D);
      json steps = json::array();
      for (const auto& s : rep.steps) {
        json st = {{"ideal", s.ideal}, {"smaller", s.smaller}, {"x", s.x}, {"colon", s.colon}, {"ok", s.ok()}};
        if (!s.ok() && s.colon_check.first_failure) st["first_failure_degree"] = *s.colon_check.first_failure;
        steps.push_back(st);
      }
      results = {{"members", rep.members}, {"steps", steps}, {"verdict", rep.verdict}};
      value = rep.verdict;
      degree = D;
    } else if (cmd == "groebner-check") {
      auto form = as_form(*input);
      auto x = blocks_to_matrix(form);
      std::vector<GroebnerDegreeReport> per;
      auto v = groebner_check_degreewise(x, scroll_term_order(form), D, &per);
      json rows = json::array();
      for (const auto& r : per)
        rows.push_back({{"degree", r.degree}, {"initial_dim", r.initial_dim}, {"leading_term_dim", r.leading_term_dim}});
      results = {{"form", form_to_json(form)}, {"degrees", rows}, {"ok", v.ok}};
      value = v.ok;
      degree = v.checked_to_degree;
    } else if (cmd == "classify") {
      auto s = std::get_if<ScrollType>(&*input);
      if (!s) throw SchemaError("/kind", "classify expects a scroll type");
      auto c = classify_scroll(s->lengths);
      results = {{"type", c.type},
                 {"balanced", c.balanced_regularity},
                 {"linearly_koszul", c.linearly_koszul},
                 {"strongly_koszul", c.strongly_koszul},
                 {"ul_koszul", c.ul_koszul},
                 {"universal_regularity", c.universal_regularity}};
    } else if (cmd == "homology-witness") {
      if (spec.m < 1 || spec.n < 1) throw SchemaError("--m", "homology-witness needs --m and --n at least 1");
      inputs = {{"m", spec.m}, {"n", spec.n}};
      auto r = nonkoszul_witness(spec.m, spec.n, bounds.homology);
      results = {{"mu", to_string(r.mu)},
                 {"mu_exponents", r.mu},
                 {"a", r.a},
                 {"interval_size", r.interval_size},
                 {"components_of_subcomplex", r.components_of_subcomplex},
                 {"betti3", r.betti3},
                 {"witness", r.witness}};
      value = r.witness;
    } else if (cmd == "betti") {
      auto x = as_matrix(*input);
      auto table = quotient_res_betti(PolyRing(x.variables), two_minors(x), 3, D, bounds.resolution);
      json rows = json::array();
      bool linear = true;
      for (const auto& [ij, b] : table) {
        rows.push_back({{"i", ij.first}, {"j", ij.second}, {"value", b}});
        linear = linear && ij.first == ij.second;
      }
      results = {{"homological_degree_max", 3}, {"table", rows}, {"linear", linear}};
      value = linear;
      degree = D;
    } else {
      throw SchemaError("subcommand", "unknown subcommand \"" + cmd + "\"");
    }

    auto ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    out.report = {{"schema", kReportSchema},
                  {"subcommand", cmd},
                  {"inputs", inputs},
                  {"results", results},
                  {"verdict", verdict_json(value, degree)},
                  {"timing_ms", ms}};
    out.exit_code = value ? 0 : 1;
  } catch (const Error& e) {
    out.exit_code = 2;
    out.error = error_json(e);
  }
  return out;
}

}  // namespace kwk
