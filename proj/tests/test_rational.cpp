#include "catch_amalgamated.hpp"

#include <random>

#include "kwk/qmatrix.hpp"
#include "kwk/qpoly.hpp"
#include "kwk/rational.hpp"

using namespace kwk;

TEST_CASE("rationals normalise and compare exactly") {
  CHECK(Rational(6, -4) == Rational(-3, 2));
  CHECK(Rational(6, -4).to_string() == "-3/2");
  CHECK(Rational(10, 5).to_string() == "2");
  CHECK(Rational(1, 3) + Rational(1, 6) == Rational(1, 2));
  CHECK(Rational(1, 3) < Rational(1, 2));
  CHECK(Rational(-1, 3) > Rational(-1, 2));
  CHECK((Rational(7, 3) / Rational(7, 3)).is_one());
  CHECK_THROWS(Rational(1, 0));
  CHECK_THROWS(Rational(0).inverse());
}

TEST_CASE("rational arithmetic survives overflow of the inline form") {
  Rational big(INT64_MAX);
  Rational sq = big * big;
  CHECK_FALSE(sq.is_small());
  CHECK(sq / big == big);
  CHECK((sq / big).is_small());
  Rational third(1, 3);
  Rational acc = 0;
  for (int i = 0; i < 200; ++i) acc = acc * third + Rational(1);
  // geometric series sum_{k<200} 3^-k = 3/2 (1 - 3^-200)
  mpz_class p3 = 1;
  for (int i = 0; i < 200; ++i) p3 *= 3;
  Rational closed = Rational(3, 2) * (Rational(1) - Rational(mpz_class(1), p3));
  CHECK(acc == closed);
  CHECK_FALSE(acc.is_small());
}

TEST_CASE("rational parsing") {
  CHECK(Rational::parse("3/6") == Rational(1, 2));
  CHECK(Rational::parse("-7") == Rational(-7));
  CHECK(Rational::parse("+2/4") == Rational(1, 2));
  CHECK_FALSE(Rational::parse("1/0"));
  CHECK_FALSE(Rational::parse("abc"));
  CHECK_FALSE(Rational::parse("1/"));
  CHECK_FALSE(Rational::parse(""));
  CHECK(Rational::parse("123456789012345678901234567890")->to_string() == "123456789012345678901234567890");
}

TEST_CASE("rref on small matrices") {
  auto r = rref(QMatrix{{1, 2}, {2, 4}});
  CHECK(r.rank == 1);
  REQUIRE(r.kernel.size() == 1);
  CHECK(r.kernel[0] == QVector{-2, 1});

  auto id = rref(QMatrix::identity(3));
  CHECK(id.rank == 3);
  CHECK(id.kernel.empty());

  auto u = rref(QMatrix{{0, 1, 0}, {0, 0, 1}});
  CHECK(u.rank == 2);
  REQUIRE(u.kernel.size() == 1);
  CHECK(u.kernel[0] == QVector{1, 0, 0});
  CHECK(u.pivots == std::vector<std::size_t>{1, 2});
}

TEST_CASE("matrix inversion") {
  CHECK(invert(QMatrix{{0, 1}, {1, 0}}) == (QMatrix{{0, 1}, {1, 0}}));
  CHECK(invert(QMatrix{{2, 0}, {0, 2}}) == (QMatrix{{Rational(1, 2), 0}, {0, Rational(1, 2)}}));
  try {
    invert(QMatrix{{1, 1}, {1, 1}});
    FAIL("expected Singular");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::Singular);
  }
}

TEST_CASE("random matrices: kernels are annihilated and inverses are exact") {
  std::mt19937 rng(42);
  std::uniform_int_distribution<int> entry(-3, 3), dim(1, 6);
  for (int trial = 0; trial < 200; ++trial) {
    std::size_t r = static_cast<std::size_t>(dim(rng)), c = static_cast<std::size_t>(dim(rng));
    QMatrix m(r, c);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j) m(i, j) = entry(rng);
    auto red = rref(m);
    CHECK(red.rank + red.kernel.size() == c);
    for (const auto& k : red.kernel) CHECK(m * k == QVector(r));
    if (r == c && red.rank == r) {
      CHECK(invert(m) * m == QMatrix::identity(r));
      CHECK_FALSE(determinant(m).is_zero());
    } else if (r == c) {
      CHECK(determinant(m).is_zero());
    }
  }
}

TEST_CASE("rational linear factors") {
  auto a = rational_linear_factors(QPoly{-1, 0, 1});
  CHECK(a.complete);
  CHECK(a.roots == std::vector<RootMultiplicity>{{-1, 1}, {1, 1}});

  auto b = rational_linear_factors(QPoly{1, 4, 4});
  CHECK(b.complete);
  CHECK(b.roots == std::vector<RootMultiplicity>{{Rational(-1, 2), 2}});

  auto c = rational_linear_factors(QPoly{1, 0, 1});
  CHECK_FALSE(c.complete);
  CHECK(c.roots.empty());

  // v^2 (v - 2/3)^3 (v^2 - 2): roots 0 and 2/3 only, incomplete
  QPoly p = QPoly{0, 0, 1} * QPoly{Rational(-2, 3), 1} * QPoly{Rational(-2, 3), 1} * QPoly{Rational(-2, 3), 1} * QPoly{-2, 0, 1};
  auto d = rational_linear_factors(p);
  CHECK_FALSE(d.complete);
  CHECK(d.roots == std::vector<RootMultiplicity>{{0, 2}, {Rational(2, 3), 3}});
}

TEST_CASE("characteristic polynomial and interpolation") {
  QMatrix m{{2, 1}, {0, 3}};
  CHECK(characteristic_polynomial(m) == (QPoly{6, -5, 1}));
  std::vector<Rational> xs{0, 1, 2, 3}, ys;
  QPoly f{1, -2, 0, Rational(1, 2)};
  for (const auto& x : xs) ys.push_back(f(x));
  CHECK(interpolate(xs, ys) == f);
  CHECK(QPoly({0, 2, 1}).to_string() == "2v+v^2");
}
