#include "doctest.h"

#include <random>

#include "brick/gf.hpp"

using namespace brick;

namespace
{

// Schoolbook product of residues reduced by the modulus; independent of the
// log tables used by Field::mul.
Elem poly_mul_oracle(Field const &f, Elem a, Elem b)
{
  int p = f.p(), m = f.m();
  auto ca = f.coefficients(a), cb = f.coefficients(b);
  std::vector<int> prod(2 * m, 0);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      prod[i + j] = (prod[i + j] + ca[i] * cb[j]) % p;
  auto const &mod = f.modulus();
  for (int d = 2 * m - 1; d >= m; --d) {
    int c = prod[d];
    if (c == 0)
      continue;
    for (int j = 0; j <= m; ++j)
      prod[d - m + j] = ((prod[d - m + j] - c * mod[j]) % p + p) % p;
  }
  if (m == 1)
    return static_cast<Elem>(ca[0] * cb[0] % p);
  prod.resize(m);
  return f.from_coefficients(prod);
}

std::vector<std::pair<int, int>> small_fields()
{
  return {{2, 1}, {3, 1}, {5, 1}, {7, 1}, {2, 2}, {2, 3}, {3, 2}, {2, 4}, {5, 2}, {3, 3}, {7, 2}, {3, 4}};
}

} // namespace

TEST_CASE("make_field examples")
{
  auto f3 = Field::make(3, 1);
  CHECK(f3->q() == 3);
  CHECK(f3->modulus() == std::vector<int>{0, 1});

  auto f9 = Field::make(3, 2);
  CHECK(f9->q() == 9);
  CHECK(f9->modulus() == std::vector<int>{2, 2, 1});
  // x^2 + 2x + 2 has no root in GF(3)
  for (int x = 0; x < 3; ++x)
    CHECK((x * x + 2 * x + 2) % 3 != 0);

  auto f2 = Field::make(2, 1);
  CHECK(f2->q() == 2);
  CHECK(f2->add(1, 1) == 0);

  CHECK(Field::make(3, 2) == f9);
  CHECK(f9->header() == "GF 3 2 2 2 1");
}

TEST_CASE("make_field errors")
{
  CHECK_THROWS_AS(Field::make(4, 1), std::invalid_argument);
  CHECK_THROWS_AS(Field::make(1, 1), std::invalid_argument);
  CHECK_THROWS_AS(Field::make(2, 17), std::invalid_argument);
  CHECK_THROWS_AS(Field::make(257, 2), std::invalid_argument);
  CHECK_THROWS_AS(Field::make(3, 0), std::invalid_argument);
}

TEST_CASE("explicit moduli are validated")
{
  // x^2 + 1 is irreducible over GF(3) but x has order 4, not 8
  CHECK(is_irreducible_poly(3, {1, 0, 1}));
  CHECK_THROWS_WITH_AS(Field::with_modulus(3, {1, 0, 1}), "modulus is irreducible but x is not primitive",
                       std::invalid_argument);
  // x^2 + 2 = (x+1)(x+2) over GF(3)
  CHECK_FALSE(is_irreducible_poly(3, {2, 0, 1}));
  CHECK_THROWS_AS(Field::with_modulus(3, {2, 0, 1}), std::invalid_argument);
}

TEST_CASE("GF(9) inverses and the order of x")
{
  auto f = Field::make(3, 2);
  for (Elem a = 1; a < 9; ++a)
    CHECK(f->mul(a, f->inv(a)) == 1);
  CHECK_THROWS_AS(f->inv(0), std::domain_error);

  Elem g = f->from_coefficients({0, 1});
  CHECK(g == f->primitive());
  Elem acc = 1;
  for (int k = 1; k <= 8; ++k) {
    acc = f->mul(acc, g);
    if (k < 8)
      CHECK(acc != 1);
  }
  CHECK(acc == 1);
}

TEST_CASE("shipped and generated moduli are irreducible and primitive")
{
  std::vector<std::pair<int, int>> fields = {{2, 2}, {2, 3}, {2, 4}, {2, 5}, {2, 6}, {2, 7}, {2, 8},
                                             {3, 2}, {3, 3}, {3, 4}, {5, 2}, {5, 3}, {7, 2}, {2, 9},
                                             {2, 16}, {3, 5}, {11, 2}, {13, 2}, {251, 1}};
  for (auto [p, m] : fields) {
    CAPTURE(p);
    CAPTURE(m);
    auto f = Field::make(p, m);
    if (m > 1)
      CHECK(is_irreducible_poly(p, f->modulus()));
    // primitive element has order exactly q - 1
    int q = f->q();
    for (int d = 1; d < q - 1; ++d)
      if ((q - 1) % d == 0)
        CHECK(f->pow(f->primitive(), d) != 1);
    CHECK(f->pow(f->primitive(), q - 1) == 1);
  }
}

TEST_CASE("field axioms hold exhaustively on small fields")
{
  for (auto [p, m] : small_fields()) {
    auto f = Field::make(p, m);
    int q = f->q();
    CAPTURE(q);
    bool ok = true;
    for (int a = 0; a < q && ok; ++a)
      for (int b = 0; b < q && ok; ++b) {
        Elem x = static_cast<Elem>(a), y = static_cast<Elem>(b);
        ok = ok && f->add(x, y) == f->add(y, x) && f->mul(x, y) == f->mul(y, x);
        ok = ok && f->mul(x, y) == poly_mul_oracle(*f, x, y);
        ok = ok && f->add(x, f->neg(x)) == 0;
        for (int c = 0; c < q && ok; ++c) {
          Elem z = static_cast<Elem>(c);
          ok = ok && f->add(f->add(x, y), z) == f->add(x, f->add(y, z));
          ok = ok && f->mul(f->mul(x, y), z) == f->mul(x, f->mul(y, z));
          ok = ok && f->mul(x, f->add(y, z)) == f->add(f->mul(x, y), f->mul(x, z));
        }
      }
    CHECK(ok);
  }
}

TEST_CASE("field axioms on samples from larger fields")
{
  std::mt19937_64 rng(7);
  for (auto [p, m] : std::vector<std::pair<int, int>>{{5, 3}, {2, 8}, {2, 10}, {3, 7}, {2, 16}}) {
    auto f = Field::make(p, m);
    int q = f->q();
    CAPTURE(q);
    for (int t = 0; t < 2000; ++t) {
      Elem x = static_cast<Elem>(rng() % q), y = static_cast<Elem>(rng() % q), z = static_cast<Elem>(rng() % q);
      REQUIRE(f->mul(x, y) == poly_mul_oracle(*f, x, y));
      REQUIRE(f->mul(x, f->add(y, z)) == f->add(f->mul(x, y), f->mul(x, z)));
      REQUIRE(f->add(f->add(x, y), z) == f->add(x, f->add(y, z)));
      if (x != 0)
        REQUIRE(f->mul(x, f->inv(x)) == 1);
    }
  }
}

TEST_CASE("Frobenius is additive")
{
  for (auto [p, m] : small_fields()) {
    auto f = Field::make(p, m);
    for (int a = 0; a < f->q(); ++a)
      for (int b = 0; b < f->q(); ++b) {
        Elem x = static_cast<Elem>(a), y = static_cast<Elem>(b);
        REQUIRE(f->pow(f->add(x, y), p) == f->add(f->pow(x, p), f->pow(y, p)));
      }
  }
}

TEST_CASE("encoding round trip")
{
  for (auto [p, m] : small_fields()) {
    auto f = Field::make(p, m);
    for (int a = 0; a < f->q(); ++a)
      REQUIRE(f->from_coefficients(f->coefficients(static_cast<Elem>(a))) == a);
  }
  auto f = Field::make(5, 2);
  CHECK(Field::parse_header(f->header()) == f);
  CHECK_THROWS_AS(Field::parse_header("GF 5 2 2 4"), std::invalid_argument);
  CHECK_THROWS_AS(Field::parse_header("GX 5 1 0 1"), std::invalid_argument);
}

TEST_CASE("axpy agrees with scalar arithmetic")
{
  for (auto [p, m] : std::vector<std::pair<int, int>>{{2, 1}, {3, 1}, {2, 2}, {3, 2}, {5, 2}, {2, 10}, {3, 7}}) {
    auto f = Field::make(p, m);
    std::mt19937_64 rng(p * 100 + m);
    std::vector<Elem> d(37), s(37);
    for (auto &x : d)
      x = static_cast<Elem>(rng() % f->q());
    for (auto &x : s)
      x = static_cast<Elem>(rng() % f->q());
    Elem c = static_cast<Elem>(rng() % f->q());
    auto expect = d;
    for (std::size_t i = 0; i < d.size(); ++i)
      expect[i] = f->add(d[i], f->mul(c, s[i]));
    f->axpy(d, s, c);
    CHECK(d == expect);
  }
}

TEST_CASE("FieldElem rejects cross-field arithmetic")
{
  FieldElem a(Field::make(3, 2), 4), b(Field::make(5, 1), 2);
  CHECK_THROWS_AS(a + b, std::invalid_argument);
  CHECK_THROWS_AS(a * b, std::invalid_argument);
  CHECK_THROWS_AS(FieldElem(Field::make(3, 2), 0).inv(), std::domain_error);
  CHECK((a * a.inv()).value() == 1);
  CHECK_THROWS_AS(FieldElem(Field::make(3, 2), 9), std::invalid_argument);
}
