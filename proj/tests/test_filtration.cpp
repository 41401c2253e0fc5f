#include "catch_amalgamated.hpp"

#include <set>

#include "kwk/filtration.hpp"
#include "kwk/invariants.hpp"
#include "support/worked_examples.hpp"

using namespace kwk;

namespace {

using examples::I1;
using examples::Id;
using examples::Jg;
using examples::V;

bool colon(const FiltrationLayout& L, const Id& smaller, const Id& larger, const Id& claimed, int D = 3) {
  return verify_colon_identity(L, smaller, larger, claimed, D).ok;
}

void check_all(const std::vector<examples::NamedCheck>& checks) {
  REQUIRE_FALSE(checks.empty());
  for (const auto& c : checks) {
    INFO(c.label);
    CHECK(c.ok);
  }
}

}  // namespace

TEST_CASE("nilpotent plus scroll worked example") {
  for (auto [m, n] : std::vector<std::pair<std::size_t, std::size_t>>{{2, 1}, {3, 2}, {4, 2}}) {
    INFO("m = " << m << ", n = " << n);
    check_all(examples::nilpotent_scroll(m, n));
  }
}

TEST_CASE("two Jordan blocks worked example") {
  for (auto [p, q] : std::vector<std::pair<std::size_t, std::size_t>>{{2, 2}, {3, 2}, {1, 3}}) {
    INFO("p = " << p << ", q = " << q);
    check_all(examples::two_jordan(p, q));
  }
}

TEST_CASE("mixed worked example") {
  check_all(examples::mixed());
  auto F = enumerate_filtration(KWForm{{KWBlock::nilpotent(4), KWBlock::scroll(2), KWBlock::jordan(2, 0), KWBlock::jordan(2, 1)}});
  CHECK(F.layout.s_of(1) == 2);
  CHECK(verify_koszul_filtration(F, 3).steps.size() + 1 == F.members.size());
}

TEST_CASE("small filtrations verify to degree 4") {
  CHECK(verify_koszul_filtration(KWForm{{KWBlock::nilpotent(2), KWBlock::scroll(1)}}, 4).verdict);
  CHECK(verify_koszul_filtration(KWForm{{KWBlock::scroll(1), KWBlock::scroll(1)}}, 4).verdict);
}

TEST_CASE("a wrong colon claim is rejected") {
  auto F = enumerate_filtration(KWForm{{KWBlock::nilpotent(3), KWBlock::scroll(2)}});
  const auto& L = F.layout;
  // y_{1,1} is regular modulo the nilpotent variables, the colon is not m
  CHECK_FALSE(colon(L, Id::H(1, 2), I1(1, 0), Id::maximal()));
  // not a one-variable extension
  CHECK_FALSE(colon(L, Id::zero(), I1(2, 0), Id::maximal()));
}

TEST_CASE("the a-prime rule keeps tail variables already present") {
  // I_{(1,2),(1,0)} + y2_3: y1_4 lies in the smaller ideal, so it must be in the colon
  auto F = enumerate_filtration(KWForm{{KWBlock::scroll(3), KWBlock::scroll(3)}});
  const auto& L = F.layout;
  Id target = Id::I({1, 3}, {1, 0});
  auto w = witness(target, L);
  CHECK(w.smaller == Id::I({1, 2}, {1, 0}));
  CHECK(L.name(w.x) == "y2_3");
  CHECK(w.colon == Id::I({4, 3}, {0, 0}));
  CHECK(colon(L, w.smaller, target, w.colon, 4));
  CHECK_FALSE(colon(L, w.smaller, target, Id::I({3, 3}, {0, 0}), 4));
}

TEST_CASE("filtration closure and chain exhaustion") {
  std::vector<KWForm> forms = {
      {{KWBlock::nilpotent(4), KWBlock::scroll(2), KWBlock::jordan(2, 0), KWBlock::jordan(2, 1)}},
      {{KWBlock::nilpotent(2), KWBlock::nilpotent(3), KWBlock::scroll(2), KWBlock::scroll(3)}},
      {{KWBlock::jordan(2, 0), KWBlock::jordan(1, 0), KWBlock::jordan(1, 1), KWBlock::jordan(1, 2)}},
      {{KWBlock::scroll(1), KWBlock::scroll(2), KWBlock::scroll(4)}},
  };
  for (const auto& f : forms) {
    auto F = enumerate_filtration(f);
    const auto& L = F.layout;
    CHECK(F.variables[F.maximal_index].size() == L.num_vars());
    CHECK(F.variables[0].empty());
    for (std::size_t k = 1; k < F.members.size(); ++k) {
      auto w = witness(F.members[k], L);
      CHECK(F.find(ideal_variables(w.smaller, L)));
      CHECK(F.find(ideal_variables(w.colon, L)));
    }
    Id cur = F.members[F.maximal_index];
    std::size_t steps = 0;
    while (cur.kind != Id::Kind::Zero && steps <= L.num_vars()) {
      cur = witness(cur, L).smaller;
      ++steps;
    }
    CHECK(steps == L.num_vars());
  }
}

TEST_CASE("specialization to the separate constructions") {
  // no Jordan blocks: only H and I members
  auto F = enumerate_filtration(KWForm{{KWBlock::nilpotent(3), KWBlock::scroll(2), KWBlock::scroll(2)}});
  for (const auto& id : F.members) CHECK(id.kind != Id::Kind::G);
  // only Jordan blocks: every nonzero member is a Jordan member
  auto G = enumerate_filtration(KWForm{{KWBlock::jordan(2, 0), KWBlock::jordan(1, 3)}});
  for (std::size_t k = 1; k < G.members.size(); ++k) CHECK(G.members[k].kind == Id::Kind::G);
}

TEST_CASE("three eigenvalues need partial unions of full groups") {
  // z^2 + z^3 in full is the colon of 0 : z^1_{1,1}
  KWForm f{{KWBlock::jordan(1, 0), KWBlock::jordan(1, 1), KWBlock::jordan(2, 2)}};
  auto F = enumerate_filtration(f);
  const auto& L = F.layout;
  Id twothree = Id::G({}, {}, {2}, 3, 1, 2);
  CHECK(colon(L, Id::zero(), Jg(1, 1), twothree, 4));
  CHECK(F.find(ideal_variables(twothree, L)));
  CHECK(verify_koszul_filtration(F, 3).verdict);
}

TEST_CASE("Koszul verdict and filtration agree on a corpus") {
  std::vector<KWForm> forms = {
      {{KWBlock::nilpotent(2), KWBlock::scroll(1), KWBlock::jordan(1, 0)}},
      {{KWBlock::nilpotent(4), KWBlock::scroll(2), KWBlock::scroll(3)}},
      {{KWBlock::nilpotent(2), KWBlock::nilpotent(2), KWBlock::scroll(1), KWBlock::scroll(1)}},
      {{KWBlock::scroll(1), KWBlock::scroll(1), KWBlock::scroll(1)}},
      {{KWBlock::scroll(2), KWBlock::jordan(3, 1)}},
      {{KWBlock::nilpotent(5)}},
      {{KWBlock::nilpotent(3), KWBlock::jordan(2, 0), KWBlock::jordan(1, 0)}},
      {{KWBlock::nilpotent(1), KWBlock::scroll(2)}},
  };
  for (const auto& f : forms) {
    REQUIRE(koszul_verdict(LengthSequence::from_form(f)));
    CHECK(verify_koszul_filtration(f, 3).verdict);
  }
}

TEST_CASE("filtration-verified rings have linear resolutions at desk scale") {
  std::vector<KWForm> forms = {
      {{KWBlock::nilpotent(2), KWBlock::scroll(1)}},
      {{KWBlock::nilpotent(4), KWBlock::scroll(2)}},
      {{KWBlock::scroll(1), KWBlock::jordan(2, 0)}},
      {{KWBlock::jordan(2, 0), KWBlock::jordan(2, 1)}},
      {{KWBlock::nilpotent(3), KWBlock::scroll(2)}},
  };
  for (const auto& f : forms) {
    REQUIRE(verify_koszul_filtration(f, 3).verdict);
    auto x = blocks_to_matrix(f);
    REQUIRE(x.num_vars() <= 6);
    for (const auto& [ij, b] : quotient_res_betti(PolyRing(x.variables), two_minors(x), 3, 5)) CHECK(ij.first == ij.second);
  }
}

TEST_CASE("filtration errors") {
  try {
    enumerate_filtration(KWForm{{KWBlock::nilpotent(3), KWBlock::scroll(1)}});
    FAIL("expected LengthConditionViolated");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::LengthConditionViolated);
  }
  auto L = make_layout(KWForm{{KWBlock::nilpotent(3), KWBlock::scroll(2)}});
  CHECK_THROWS_AS(ideal_variables(Id::H(1, 3), L), Error);
  CHECK_THROWS_AS(ideal_variables(I1(3, 1), L), Error);
  CHECK_THROWS_AS(ideal_variables(Id::I({1, 1}, {0, 0}), L), Error);
  CHECK_THROWS_AS(witness(Id::zero(), L), Error);
  // b with a gap
  auto L2 = make_layout(KWForm{{KWBlock::scroll(2), KWBlock::scroll(2)}});
  CHECK_THROWS_AS(ideal_variables(Id::I({1, 1}, {0, 1}), L2), Error);
  CHECK_THROWS_AS(make_layout(KWForm{{KWBlock::scroll(1)}, 1}), Error);
  try {
    enumerate_filtration(KWForm{{KWBlock::scroll(5)}});
    FAIL("expected BoundsExceeded");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::BoundsExceeded);
  }
}

TEST_CASE("structural identities") {
  auto rep = verify_structural_identities(KWForm{{KWBlock::nilpotent(3), KWBlock::scroll(2), KWBlock::jordan(2, 0), KWBlock::jordan(2, 1)}});
  CHECK(rep.verdict);
  std::set<std::string> items;
  for (const auto& c : rep.checks) items.insert(c.item);
  CHECK(items == std::set<std::string>{"i", "ii", "iii", "iv", "v", "vi"});

  CHECK(verify_structural_identities(KWForm{{KWBlock::nilpotent(2), KWBlock::jordan(1, 5)}}).verdict);
  auto jj = verify_structural_identities(KWForm{{KWBlock::jordan(2, 0), KWBlock::jordan(2, 1)}});
  CHECK(jj.verdict);
  CHECK(std::count_if(jj.checks.begin(), jj.checks.end(), [](const IdentityCheck& c) { return c.item == "vi"; }) == 4);
}

TEST_CASE("products outside the vanishing range survive") {
  // m = 4, n = 2: x_r y_s with r + s = 4 is covered by neither bound
  auto rep = verify_structural_identities(KWForm{{KWBlock::nilpotent(4), KWBlock::scroll(2)}});
  CHECK(rep.verdict);
  std::size_t unasserted = 0;
  for (const auto& c : rep.checks)
    if (!c.asserted) {
      ++unasserted;
      CHECK_FALSE(c.holds);
    }
  CHECK(unasserted == 3);

  // m = 3, n = 2: every x_r y_s is covered; x_2 y_1 has r + s = 3 <= n + 1
  auto L = make_layout(KWForm{{KWBlock::nilpotent(3), KWBlock::scroll(2)}});
  PolyRing ring(L.matrix.variables);
  CHECK(membership(Poly::variable(L.xv(1, 2)) * Poly::variable(L.yv(1, 1)), ring, L.minors));
  auto rep32 = verify_structural_identities(KWForm{{KWBlock::nilpotent(3), KWBlock::scroll(2)}});
  for (const auto& c : rep32.checks) CHECK(c.asserted);
}
