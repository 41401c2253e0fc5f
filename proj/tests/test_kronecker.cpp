#include "catch_amalgamated.hpp"

#include <random>

#include "kwk/kronecker.hpp"

using namespace kwk;

namespace {

KWForm round_trip(const KWForm& f) {
  auto res = kw_normal_form(blocks_to_matrix(f));
  CHECK(verify_certificate(matrix_to_pencil(blocks_to_matrix(f)), res.form, res.certificate));
  return res.form;
}

QMatrix random_invertible(std::size_t n, std::mt19937& rng) {
  std::uniform_int_distribution<int> d(-2, 2);
  for (;;) {
    QMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) m(i, j) = d(rng);
    if (is_invertible(m)) return m;
  }
}

}  // namespace

TEST_CASE("normal forms are fixed points on canonical inputs") {
  std::vector<KWForm> forms = {
      {{KWBlock::nilpotent(3), KWBlock::scroll(1)}},
      {{KWBlock::scroll(1), KWBlock::scroll(1)}},
      {{KWBlock::scroll(2), KWBlock::jordan(2, 0), KWBlock::jordan(2, 1)}},
      {{KWBlock::nilpotent(2), KWBlock::nilpotent(4), KWBlock::scroll(2), KWBlock::scroll(3)}},
      {{KWBlock::jordan(3, -1), KWBlock::jordan(1, -1), KWBlock::jordan(2, Rational(1, 2))}},
      {{KWBlock::scroll(1)}, 2},
  };
  for (const auto& f : forms) CHECK(round_trip(f) == f.canonical());
}

TEST_CASE("the (2,4) scroll cut by its middle variable has two Jordan blocks") {
  auto r24 = blocks_to_matrix({{KWBlock::scroll(2), KWBlock::scroll(4)}});
  auto s = section(r24, {coordinate(r24.num_vars(), *variable_index(r24, "y2_3"))});
  auto p = matrix_to_pencil(s);
  auto res = kw_normal_form(p);
  CHECK(verify_certificate(p, res.form, res.certificate));
  REQUIRE(res.form.blocks.size() == 3);
  CHECK(res.form.blocks[0] == KWBlock::scroll(2));
  CHECK(res.form.blocks[1].kind == BlockKind::Jordan);
  CHECK(res.form.blocks[1].length == 2);
  CHECK(res.form.blocks[2].kind == BlockKind::Jordan);
  CHECK(res.form.blocks[2].length == 2);
  CHECK(res.form.eigenvalues() == std::vector<Rational>{0, 1});
  CHECK(res.form.free_variables == 0);
}

TEST_CASE("Segre matrix splits into two length-one scrolls") {
  LinearFormMatrix x;
  x.variables = {"a", "b", "c", "d"};
  x.entries[0] = {LinearForm{1, 0, 0, 0}, LinearForm{0, 0, 1, 0}};
  x.entries[1] = {LinearForm{0, 1, 0, 0}, LinearForm{0, 0, 0, 1}};
  auto res = kw_normal_form(x);
  CHECK(res.form == KWForm{{KWBlock::scroll(1), KWBlock::scroll(1)}});
  auto p = matrix_to_pencil(x);
  CHECK(p.transform(res.certificate.C, res.certificate.Cprime) == canonical_pencil(res.form));
}

TEST_CASE("verify_certificate rejects bad certificates") {
  KWForm f{{KWBlock::scroll(1), KWBlock::jordan(1, 2)}};
  auto p = matrix_to_pencil(blocks_to_matrix(f));
  auto res = kw_normal_form(p);
  REQUIRE(verify_certificate(p, res.form, res.certificate));

  auto zero = res.certificate;
  zero.C = QMatrix(p.rows(), p.rows());
  CHECK_FALSE(verify_certificate(p, res.form, zero));

  // permuted blocks with the matching permuted certificate: exact but not canonical
  KWForm swapped{{KWBlock::jordan(1, 2), KWBlock::scroll(1)}};
  QMatrix rp{{0, 1}, {1, 0}};
  QMatrix cp{{0, 1, 0}, {0, 0, 1}, {1, 0, 0}};
  EquivalenceCertificate perm{rp * res.certificate.C, res.certificate.Cprime * cp};
  CHECK(p.transform(perm.C, perm.Cprime) == canonical_pencil(swapped));
  CHECK_FALSE(verify_certificate(p, swapped, perm));
}

TEST_CASE("infinite eigenvalues are handled with a row mix") {
  // A singular on the regular part: (x ; 0) is strictly equivalent to nothing
  // with invertible A, so the rows must be mixed.
  LinearFormMatrix x;
  x.variables = {"a", "b"};
  x.entries[0] = {LinearForm{0, 0}, LinearForm{0, 1}};
  x.entries[1] = {LinearForm{1, 0}, LinearForm{0, 0}};
  auto p = matrix_to_pencil(x);
  auto res = kw_normal_form(p);
  CHECK(verify_certificate(p, res.form, res.certificate));
  CHECK(res.form.lengths(BlockKind::Jordan).size() == 2);
  CHECK_FALSE(res.certificate.row_mix == QMatrix::identity(2));
}

TEST_CASE("errors") {
  LinearFormMatrix deg;
  deg.variables = {"x"};
  deg.entries[0] = {LinearForm{1}};
  deg.entries[1] = {LinearForm{1}};
  try {
    kw_normal_form(deg);
    FAIL("expected DegeneratePencil");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::DegeneratePencil);
  }

  // eigenvalue polynomial v^2 + 1 has no rational roots
  Pencil irr{QMatrix::identity(2), QMatrix{{0, -1}, {1, 0}}};
  try {
    kw_normal_form(irr);
    FAIL("expected IrrationalEigenvalues");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::IrrationalEigenvalues);
  }
}

TEST_CASE("strict equivalence does not change the normal form") {
  std::mt19937 rng(7);
  std::vector<KWForm> forms = {
      {{KWBlock::nilpotent(2), KWBlock::scroll(1), KWBlock::jordan(2, 3)}},
      {{KWBlock::scroll(2), KWBlock::scroll(3)}},
      {{KWBlock::nilpotent(3), KWBlock::scroll(2), KWBlock::jordan(1, 0), KWBlock::jordan(1, 1)}},
      {{KWBlock::jordan(2, 0), KWBlock::jordan(1, 0)}},
  };
  for (const auto& f : forms) {
    auto base = canonical_pencil(f);
    for (int trial = 0; trial < 5; ++trial) {
      auto p = base.transform(random_invertible(base.rows(), rng), random_invertible(base.cols(), rng));
      auto res = kw_normal_form(p);
      CHECK(res.form == f.canonical());
      CHECK(verify_certificate(p, res.form, res.certificate));
    }
  }
}

TEST_CASE("minimal indices agree with the first chain") {
  auto p = canonical_pencil({{KWBlock::nilpotent(3), KWBlock::scroll(2), KWBlock::scroll(4), KWBlock::jordan(1, 1)}});
  auto mi = minimal_indices(p);
  CHECK(mi.scroll_lengths == std::vector<std::size_t>{2, 4});
  CHECK(mi.nilpotent_lengths == std::vector<std::size_t>{3});
  CHECK(mi.regular_size == 1);
  CHECK_FALSE(scroll_chain(p, 1));
  CHECK(scroll_chain(p, 2));
}
