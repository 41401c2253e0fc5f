// kwkoszul: normal forms, Koszul verdicts and their certificates for 2 x e
// matrices of linear forms. Reports are JSON on stdout (or --out); errors are
// JSON on stderr with exit code 2.

#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "kwk/cli.hpp"

namespace {

void add_input_options(CLI::App* sub, kwk::JobSpec& spec, std::vector<std::string>& bounds) {
  sub->add_option("--input", spec.input_path, "JSON file with a matrix, blocks or scroll type");
  sub->add_option("--inline", spec.inline_json, "the same JSON given on the command line");
  sub->add_option("--max-degree", spec.max_degree, "degree bound for degreewise checks")->capture_default_str();
  sub->add_option("--out", spec.out, "write the report here instead of stdout");
  sub->add_option("--bounds", bounds, "override an enumeration bound, key=value");
}

int emit_error(const kwk::json& err) {
  std::cerr << err.dump() << "\n";
  return 2;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Kronecker-Weierstrass forms and Koszul properties of 2 x e determinantal rings"};
  app.require_subcommand(1);
  kwk::JobSpec spec;
  std::vector<std::string> bounds;

  const std::vector<std::pair<std::string, std::string>> plain = {
      {"normal-form", "normal form with a strict-equivalence certificate"},
      {"section", "cut by linear forms (--form) and take the normal form"},
      {"analyze", "length sequence, Koszul verdict, regularity, Hilbert correction"},
      {"hilbert", "Hilbert correction against the degreewise Hilbert function"},
      {"groebner-check", "degreewise check that the 2-minors form a Groebner basis"},
      {"classify", "Koszul-type predicates of a rational normal scroll"},
      {"betti", "Betti numbers of the residue field up to homological degree 3"},
  };
  std::vector<CLI::App*> subs;
  for (const auto& [name, help] : plain) {
    auto* s = app.add_subcommand(name, help);
    add_input_options(s, spec, bounds);
    if (name == "section") s->add_option("--form", spec.section_forms, "linear form as JSON {var: coeff}, repeatable");
    subs.push_back(s);
  }
  auto* filtration = app.add_subcommand("filtration", "Koszul filtration tools");
  filtration->require_subcommand(1);
  auto* verify = filtration->add_subcommand("verify", "build the filtration and check every colon step");
  add_input_options(verify, spec, bounds);

  auto* witness = app.add_subcommand("homology-witness", "relative order-complex homology for R(m, n)");
  witness->add_option("--m", spec.m, "length of the long scroll block")->required();
  witness->add_option("--n", spec.n, "length of the short scroll block")->required();
  witness->add_option("--out", spec.out, "write the report here instead of stdout");
  witness->add_option("--bounds", bounds, "override an enumeration bound, key=value");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    return emit_error({{"error", {{"kind", "UsageError"}, {"message", e.what()}}}});
  }

  if (verify->parsed()) {
    spec.subcommand = "filtration verify";
  } else if (witness->parsed()) {
    spec.subcommand = "homology-witness";
  } else {
    for (auto* s : subs)
      if (s->parsed()) spec.subcommand = s->get_name();
  }
  for (const auto& kv : bounds) {
    auto eq = kv.find('=');
    if (eq == std::string::npos)
      return emit_error({{"error", {{"kind", "SchemaError"}, {"message", "bounds must be key=value"}, {"pointer", "--bounds"}}}});
    spec.bounds[kv.substr(0, eq)] = kv.substr(eq + 1);
  }

  auto result = kwk::run(spec);
  if (result.exit_code == 2) return emit_error(result.error);
  std::string text = result.report.dump(2);
  if (spec.out) {
    std::ofstream f(*spec.out);
    if (!f) return emit_error({{"error", {{"kind", "SchemaError"}, {"message", "cannot write " + *spec.out}, {"pointer", "--out"}}}});
    f << text << "\n";
  } else {
    std::cout << text << "\n";
  }
  return result.exit_code;
}
