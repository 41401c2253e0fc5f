// Acceptance run: one PASS/FAIL line per criterion.
//
//   acceptance [--expect-fail N]...
//
// Exit status is 0 exactly when the set of failing criteria equals the set
// named by --expect-fail (empty by default).

#include <chrono>
#include <cstdlib>
#include <cstring>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>

#include "kwk/cli.hpp"
#include "support/property_suites.hpp"
#include "support/worked_examples.hpp"

using namespace kwk;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

std::size_t hilbert_of(const KWForm& f, int d) {
  bool any = false;
  for (const auto& b : f.blocks) any = any || b.pencil_cols() > 0;
  if (!any) return d == 0 ? 1 : 0;
  auto x = blocks_to_matrix(f);
  return hilbert_function(PolyRing(x.variables), two_minors(x), d);
}

std::size_t num_vars(const KWForm& f) {
  bool any = false;
  for (const auto& b : f.blocks) any = any || b.pencil_cols() > 0;
  return any ? blocks_to_matrix(f).num_vars() : 0;
}

Outcome section_example() {
  JobSpec s;
  s.subcommand = "section";
  s.inline_json = R"({"kind":"scroll","type":[2,4]})";
  s.section_forms = {R"({"y2_3":1})"};
  auto cut = run(s);
  if (cut.exit_code != 0) return {false, "section failed: " + cut.error.dump()};
  JobSpec nf;
  nf.subcommand = "normal-form";
  nf.inline_json = cut.report["results"]["section"].dump();
  auto r = run(nf);
  if (r.exit_code != 0) return {false, "normal-form did not verify"};
  auto f = form_from_json(r.report["results"]["form"]);
  std::multiset<std::string> kinds;
  std::set<Rational> eigen;
  for (const auto& b : f.blocks) {
    kinds.insert(std::string(to_string(b.kind)) + std::to_string(b.length));
    if (b.kind == BlockKind::Jordan) eigen.insert(b.eigenvalue);
  }
  bool ok = kinds == std::multiset<std::string>{"scroll2", "jordan2", "jordan2"} && eigen.size() == 2 &&
            r.report["results"]["certificate_verified"] == true;
  return {ok, "normal form " + LengthSequence::from_form(f).to_string()};
}

Outcome boundary() {
  std::ostringstream d;
  bool ok = true;
  for (std::size_t n : {1, 2}) {
    KWForm good{{KWBlock::nilpotent(2 * n), KWBlock::scroll(n)}};
    bool v = koszul_verdict(LengthSequence::from_form(good));
    bool filt = verify_koszul_filtration(good, 4).verdict;
    KWForm bad{{KWBlock::nilpotent(2 * n + 1), KWBlock::scroll(n)}};
    bool vb = koszul_verdict(LengthSequence::from_form(bad));
    bool w = nonkoszul_witness(static_cast<long>(2 * n + 1), static_cast<long>(n)).witness;
    ok = ok && v && filt && !vb && w;
    d << "n=" << n << ": verdict " << v << "/" << vb << " filtration " << filt << " witness " << w << "; ";
  }
  return {ok, d.str()};
}

Outcome homology_witness() {
  auto r = nonkoszul_witness(3, 1);
  // R(3,1) cut by the two ends of its long block
  auto x = blocks_to_matrix(KWForm{{KWBlock::scroll(3), KWBlock::scroll(1)}});
  auto cut = section(x, {coordinate(x.num_vars(), *variable_index(x, "y1_1")), coordinate(x.num_vars(), *variable_index(x, "y1_4"))});
  auto nf = kw_normal_form(cut).form;
  auto table = quotient_res_betti(PolyRing(cut.variables), two_minors(cut), 3, 4);
  std::size_t b34 = table.count({3, 4}) ? table.at({3, 4}) : 0;
  bool ok = r.components_of_subcomplex == 2 && r.betti3 >= 1 && b34 >= 1 && cut.num_vars() == 4;
  std::ostringstream d;
  d << "components " << r.components_of_subcomplex << ", relative H1 " << r.betti3 << ", beta_{3,4} " << b34 << " over "
    << LengthSequence::from_form(nf).to_string();
  return {ok, d.str()};
}

Outcome hilbert_formula() {
  std::vector<KWForm> forms;
  const std::vector<std::vector<KWBlock>> rest = {
      {KWBlock::scroll(1)},
      {KWBlock::scroll(2)},
      {KWBlock::scroll(3)},
      {KWBlock::scroll(1), KWBlock::scroll(1)},
      {KWBlock::scroll(1), KWBlock::scroll(2)},
      {KWBlock::scroll(1), KWBlock::jordan(1, 0)},
      {KWBlock::scroll(2), KWBlock::jordan(1, 1)},
      {KWBlock::scroll(1), KWBlock::jordan(2, 0), KWBlock::jordan(1, 1)},
      {KWBlock::jordan(2, 0)},
      {KWBlock::jordan(1, 0), KWBlock::jordan(1, 1)},
      {},
  };
  for (std::size_t m = 2; m <= 5; ++m)
    for (const auto& r : rest) {
      KWForm f{{KWBlock::nilpotent(m)}};
      f.blocks.insert(f.blocks.end(), r.begin(), r.end());
      if (num_vars(f) <= 8) forms.push_back(f);
    }
  forms.push_back({{KWBlock::nilpotent(2), KWBlock::nilpotent(3), KWBlock::scroll(1)}});
  forms.push_back({{KWBlock::nilpotent(2), KWBlock::nilpotent(2), KWBlock::scroll(2)}});

  int bad = 0;
  std::string first;
  for (const auto& f : forms) {
    auto corr = hilbert_correction(LengthSequence::from_form(f));
    KWForm g;
    for (const auto& b : f.blocks)
      if (b.kind != BlockKind::Nilpotent) g.blocks.push_back(b);
    for (int d = 1; d <= 5; ++d) {
      long diff = static_cast<long>(hilbert_of(f, d)) - static_cast<long>(hilbert_of(g, d));
      if (corr.coefficient(static_cast<std::size_t>(d)) != Rational(diff)) {
        if (!bad) first = LengthSequence::from_form(f).to_string() + " degree " + std::to_string(d);
        ++bad;
      }
    }
  }
  bool ok = bad == 0 && forms.size() >= 20;
  return {ok, std::to_string(forms.size()) + " length sequences" + (bad ? ", first mismatch " + first : "")};
}

Outcome regularity() {
  std::vector<std::pair<KWForm, int>> cases = {
      {{{KWBlock::nilpotent(3), KWBlock::scroll(1)}}, 2},
      {{{KWBlock::nilpotent(5), KWBlock::scroll(2)}}, 2},
      {{{KWBlock::nilpotent(4), KWBlock::scroll(1)}}, 3},
      {{{KWBlock::scroll(2)}}, 1},
      {{{KWBlock::scroll(1), KWBlock::scroll(2)}}, 1},
      {{{KWBlock::scroll(1), KWBlock::scroll(1), KWBlock::scroll(1)}}, 1},
  };
  std::ostringstream d;
  bool ok = true;
  for (const auto& [f, expected] : cases) {
    auto x = blocks_to_matrix(f);
    int oracle = regularity_oracle(PolyRing(x.variables), two_minors(x), 7, ResolutionBounds{7, 7});
    int formula = static_cast<int>(regularity_formula(LengthSequence::from_form(f)));
    ok = ok && oracle == formula && formula == expected;
    d << LengthSequence::from_form(f).to_string() << "=" << formula << "/" << oracle << " ";
  }
  return {ok, d.str()};
}

Outcome groebner() {
  std::vector<KWForm> forms = {
      {{KWBlock::scroll(1), KWBlock::scroll(1)}},
      {{KWBlock::scroll(2), KWBlock::jordan(2, 0)}},
      {{KWBlock::jordan(2, 0), KWBlock::jordan(2, 1)}},
      {{KWBlock::scroll(1), KWBlock::jordan(1, 0), KWBlock::jordan(1, 1), KWBlock::jordan(1, 2)}},
      {{KWBlock::scroll(3), KWBlock::jordan(2, 2)}},
      {{KWBlock::scroll(1), KWBlock::scroll(2), KWBlock::jordan(1, 1)}},
      {{KWBlock::jordan(3, 0), KWBlock::jordan(1, 0), KWBlock::jordan(2, 1)}},
      {{KWBlock::scroll(2), KWBlock::scroll(2)}},
      {{KWBlock::scroll(1), KWBlock::jordan(2, 1), KWBlock::jordan(1, 2)}},
      {{KWBlock::jordan(2, 0), KWBlock::jordan(2, 0), KWBlock::jordan(1, 2)}},
      {{KWBlock::scroll(1), KWBlock::scroll(1), KWBlock::jordan(2, 2)}},
      {{KWBlock::scroll(4)}},
  };
  int bad = 0;
  std::string first;
  for (const auto& f : forms) {
    if (!groebner_check_degreewise(blocks_to_matrix(f), scroll_term_order(f), 4).ok) {
      if (!bad) first = LengthSequence::from_form(f).to_string();
      ++bad;
    }
  }
  return {bad == 0, std::to_string(forms.size()) + " forms" + (bad ? ", first failure " + first : "")};
}

Outcome worked_filtrations() {
  std::vector<examples::NamedCheck> all;
  auto add = [&](std::vector<examples::NamedCheck> v) { all.insert(all.end(), v.begin(), v.end()); };
  for (auto [m, n] : std::vector<std::pair<std::size_t, std::size_t>>{{2, 1}, {3, 2}, {4, 2}}) add(examples::nilpotent_scroll(m, n));
  for (auto [p, q] : std::vector<std::pair<std::size_t, std::size_t>>{{2, 2}, {3, 2}, {1, 3}}) add(examples::two_jordan(p, q));
  add(examples::mixed());
  for (const auto& c : all)
    if (!c.ok) return {false, "failed: " + c.label};
  return {true, std::to_string(all.size()) + " checks"};
}

Outcome structural() {
  KWForm f{{KWBlock::nilpotent(3), KWBlock::scroll(2), KWBlock::jordan(2, 0), KWBlock::jordan(2, 1)}};
  auto rep = verify_structural_identities(f);
  std::size_t asserted = 0;
  for (const auto& c : rep.checks) asserted += c.asserted;
  // the guard asks for x_2 y_1 outside I_2; with m = 3, n = 2 the product is a
  // 2-minor (r + s = 3 <= n + 1), so this part cannot hold
  auto L = make_layout(f);
  bool x2y1_in = membership(Poly::variable(L.xv(1, 2)) * Poly::variable(L.yv(1, 1)), PolyRing(L.matrix.variables), L.minors);
  std::ostringstream d;
  d << asserted << " asserted products " << (rep.verdict ? "all vanish" : "NOT all vanishing") << "; x1_2*y1_1 "
    << (x2y1_in ? "lies in I_2 (covered by the y-range of the nilpotent/scroll identity), guard unattainable" : "is not in I_2");
  return {rep.verdict && !x2y1_in, d.str()};
}

Outcome classification() {
  auto c = [](std::vector<std::size_t> t) { return classify_scroll(std::move(t)); };
  auto c11 = c({1, 1}), c12 = c({1, 2}), c13 = c({1, 3}), c222 = c({2, 2, 2}), c111 = c({1, 1, 1}), c112 = c({1, 1, 2});
  bool ok = c11.strongly_koszul && c12.balanced_regularity && c12.linearly_koszul && c12.ul_koszul && c12.universal_regularity &&
            !c12.strongly_koszul && !c13.linearly_koszul && c222.ul_koszul && !c222.universal_regularity && c111.balanced_regularity &&
            c111.linearly_koszul && c111.strongly_koszul && c111.ul_koszul && c111.universal_regularity && !c112.ul_koszul &&
            c112.linearly_koszul;
  return {ok, "six scroll types"};
}

Outcome property_suites() {
  auto a = properties::certificate_soundness(100, 20240611);
  auto b = properties::section_monotonicity(50, 5150);
  auto c = properties::coordinate_sections(50, 8128);
  std::ostringstream d;
  d << a.checked << " pencils, " << b.checked << " sections, " << c.checked << " coordinate sections";
  std::size_t failures = a.failures.size() + b.failures.size() + c.failures.size();
  if (failures) d << ", " << failures << " failures";
  return {failures == 0, d.str()};
}

}  // namespace

int main(int argc, char** argv) {
  std::set<int> expected_fail;
  for (int k = 1; k < argc; ++k) {
    if (std::strcmp(argv[k], "--expect-fail") == 0 && k + 1 < argc) {
      expected_fail.insert(std::atoi(argv[++k]));
    } else {
      std::cerr << "usage: acceptance [--expect-fail N]...\n";
      return 2;
    }
  }

  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"section of R(2,4) by y2_3", section_example},
      {"length-condition boundary", boundary},
      {"homology witness for R(3,1)", homology_witness},
      {"Hilbert correction vs oracle", hilbert_formula},
      {"regularity vs Koszul homology", regularity},
      {"Groebner basis degreewise", groebner},
      {"worked filtrations", worked_filtrations},
      {"structural identities", structural},
      {"scroll classification", classification},
      {"property suites", property_suites},
  };

  std::set<int> failed;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    const int id = static_cast<int>(k + 1);
    auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[k].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (!o.pass) failed.insert(id);
    std::cout << "criterion " << id << ": " << (o.pass ? "PASS" : "FAIL") << "  " << criteria[k].first << "  (" << o.detail
              << "; " << secs << " s)" << (!o.pass && expected_fail.count(id) ? "  [expected]" : "") << "\n";
  }
  return failed == expected_fail ? 0 : 1;
}
