#include "catch_amalgamated.hpp"

#include "kwk/kronecker.hpp"
#include "kwk/pencil.hpp"

using namespace kwk;

namespace {

LinearFormMatrix make(std::vector<std::string> vars, std::vector<std::vector<int>> top, std::vector<std::vector<int>> bottom) {
  LinearFormMatrix x;
  x.variables = std::move(vars);
  for (auto& f : top) x.entries[0].push_back(LinearForm(f.begin(), f.end()));
  for (auto& f : bottom) x.entries[1].push_back(LinearForm(f.begin(), f.end()));
  return x;
}

}  // namespace

TEST_CASE("matrix_to_pencil transcribes coefficients column by column") {
  auto p = matrix_to_pencil(make({"y1", "y2"}, {{1, 0}}, {{0, 1}}));
  CHECK(p.A == (QMatrix{{1, 0}}));
  CHECK(p.B == (QMatrix{{0, 1}}));

  auto same = matrix_to_pencil(make({"x"}, {{1}}, {{1}}));
  CHECK(same.A == (QMatrix{{1}}));
  CHECK(same.B == (QMatrix{{1}}));

  // two copies of a length-1 scroll block
  auto two = matrix_to_pencil(blocks_to_matrix({{KWBlock::scroll(1), KWBlock::scroll(1)}}));
  CHECK(two.A == (QMatrix{{1, 0, 0, 0}, {0, 0, 1, 0}}));
  CHECK(two.B == (QMatrix{{0, 1, 0, 0}, {0, 0, 0, 1}}));

  CHECK(pencil_to_matrix(two, blocks_to_matrix({{KWBlock::scroll(1), KWBlock::scroll(1)}}).variables) ==
        blocks_to_matrix({{KWBlock::scroll(1), KWBlock::scroll(1)}}));
}

TEST_CASE("blocks_to_matrix displays") {
  auto s2 = blocks_to_matrix({{KWBlock::scroll(2)}});
  CHECK(s2 == make({"y1_1", "y1_2", "y1_3"}, {{1, 0, 0}, {0, 1, 0}}, {{0, 1, 0}, {0, 0, 1}}));

  auto n2 = blocks_to_matrix({{KWBlock::nilpotent(2)}});
  CHECK(n2 == make({"x1_1"}, {{0}, {1}}, {{1}, {0}}));

  auto j1 = blocks_to_matrix({{KWBlock::jordan(1, 5)}});
  CHECK(j1 == make({"z1_1_1"}, {{1}}, {{5}}));

  KWForm with_free{{KWBlock::scroll(1)}, 2};
  auto wf = blocks_to_matrix(with_free);
  CHECK(wf.variables == std::vector<std::string>{"y1_1", "y1_2", "w1", "w2"});

  CHECK_THROWS_AS(blocks_to_matrix(KWForm{}), Error);
}

TEST_CASE("section substitutes the leading variable") {
  auto segre = make({"a", "b", "c", "d"}, {{1, 0, 0, 0}, {0, 0, 1, 0}}, {{0, 1, 0, 0}, {0, 0, 0, 1}});
  auto s = section(segre, {LinearForm{1, 0, 0, -1}});
  CHECK(s == make({"b", "c", "d"}, {{0, 0, 1}, {0, 1, 0}}, {{1, 0, 0}, {0, 0, 1}}));

  CHECK(section(segre, {}) == segre);

  try {
    section(segre, {LinearForm{1, 1, 0, 0}, LinearForm{2, 2, 0, 0}});
    FAIL("expected DependentForms");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::DependentForms);
  }
}

TEST_CASE("section of the (2,4) scroll by its middle variable") {
  auto r24 = blocks_to_matrix({{KWBlock::scroll(2), KWBlock::scroll(4)}});
  auto idx = variable_index(r24, "y2_3");
  REQUIRE(idx);
  auto s = section(r24, {coordinate(r24.num_vars(), *idx)});
  REQUIRE(s.num_vars() == 7);
  REQUIRE(s.num_cols() == 6);
  // second block's columns: (t1 t2 0 u1 ; t2 0 u1 u2)
  auto t1 = *variable_index(s, "y2_1"), t2 = *variable_index(s, "y2_2");
  auto u1 = *variable_index(s, "y2_4"), u2 = *variable_index(s, "y2_5");
  CHECK(s.entries[0][2] == coordinate(7, t1));
  CHECK(s.entries[0][4] == LinearForm(7));
  CHECK(s.entries[1][3] == LinearForm(7));
  CHECK(s.entries[1][4] == coordinate(7, u1));
  CHECK(s.entries[1][5] == coordinate(7, u2));
  CHECK(s.entries[1][2] == coordinate(7, t2));
}

TEST_CASE("pencil rank of single blocks") {
  for (std::size_t s = 1; s <= 5; ++s) {
    CHECK(pencil_rank(canonical_pencil({{KWBlock::scroll(s)}})) == s);
    CHECK(pencil_rank(canonical_pencil({{KWBlock::nilpotent(s + 1)}})) == s);
    CHECK(pencil_rank(canonical_pencil({{KWBlock::jordan(s, Rational(-2, 3))}})) == s);
  }
  // rank over Q(v) can exceed the rank at any single integer point below the bound
  Pencil p{QMatrix{{1, 0}, {0, 1}}, QMatrix{{-1, 0}, {0, -2}}};
  CHECK(rank(p.at(1)) == 1);
  CHECK(pencil_rank(p) == 2);
}

TEST_CASE("scroll chains exist exactly at the minimal index") {
  for (std::size_t s = 1; s <= 5; ++s) {
    auto p = canonical_pencil({{KWBlock::scroll(s)}});
    auto w = scroll_chain(p, s);
    REQUIRE(w);
    CHECK(w->size() == s + 1);
    CHECK(p.A * (*w)[0] == QVector(s));
    for (std::size_t k = 1; k <= s; ++k) CHECK(p.B * (*w)[k - 1] == p.A * (*w)[k]);
    CHECK(p.B * (*w)[s] == QVector(s));
    CHECK_FALSE(scroll_chain(p, s - 1));
  }
  for (std::size_t s = 0; s <= 4; ++s) CHECK_FALSE(scroll_chain(canonical_pencil({{KWBlock::jordan(3, 1)}}), s));
}

TEST_CASE("degenerate pencils are detected") {
  CHECK(is_degenerate(matrix_to_pencil(make({"x"}, {{1}}, {{1}}))));
  CHECK_FALSE(is_degenerate(canonical_pencil({{KWBlock::scroll(1)}})));
}
