#include "doctest.h"

#include <random>

#include "brick/poly.hpp"

using namespace brick;

namespace
{

Mat random_mat(FieldPtr const &f, int r, int c, std::mt19937_64 &rng)
{
  Mat m(f, r, c);
  for (auto &x : m.data())
    x = static_cast<Elem>(rng() % f->q());
  return m;
}

// Trial division by every monic polynomial of degree 1..deg/2.
bool irreducible_by_search(Field const &f, Poly const &a)
{
  int n = poly_degree(a);
  if (n < 1)
    return false;
  for (int d = 1; 2 * d <= n; ++d) {
    long long count = 1;
    for (int i = 0; i < d; ++i)
      count *= f.q();
    for (long long code = 0; code < count; ++code) {
      Poly g(d + 1);
      long long x = code;
      for (int i = 0; i < d; ++i) {
        g[i] = static_cast<Elem>(x % f.q());
        x /= f.q();
      }
      g[d] = 1;
      if (poly_mod(f, a, g).empty())
        return false;
    }
  }
  return true;
}

Mat companion(FieldPtr const &fp, Poly const &p)
{
  Field const &f = *fp;
  int n = poly_degree(p);
  Mat c(fp, n, n);
  for (int i = 0; i + 1 < n; ++i)
    c(i, i + 1) = 1;
  for (int j = 0; j < n; ++j)
    c(n - 1, j) = f.neg(p[j]);
  return c;
}

} // namespace

TEST_CASE("polynomial arithmetic")
{
  auto f = Field::make(5, 1);
  Poly a{1, 2, 3}, b{4, 1};
  Poly q, r;
  poly_divmod(*f, a, b, q, r);
  CHECK(poly_add(*f, poly_mul(*f, q, b), r) == a);
  CHECK(poly_degree(r) < poly_degree(b));
  CHECK(poly_gcd(*f, poly_mul(*f, a, b), poly_mul(*f, b, b)) == poly_monic(*f, b));
  CHECK(poly_derivative(*f, Poly{1, 1, 1, 1, 1, 1}) == Poly{1, 2, 3, 4});
  CHECK_THROWS_AS(poly_divmod(*f, a, Poly{}, q, r), std::domain_error);
}

TEST_CASE("charpoly of companion matrices and Cayley-Hamilton")
{
  std::mt19937_64 rng(3);
  for (auto [p, m] : std::vector<std::pair<int, int>>{{2, 1}, {3, 1}, {3, 2}, {5, 2}, {2, 3}}) {
    auto fp = Field::make(p, m);
    for (int n = 1; n <= 9; ++n) {
      Poly monic(n + 1);
      for (int i = 0; i < n; ++i)
        monic[i] = static_cast<Elem>(rng() % fp->q());
      monic[n] = 1;
      CHECK(charpoly(companion(fp, monic)) == monic);

      Mat a = random_mat(fp, n, n, rng);
      Poly cp = charpoly(a);
      REQUIRE(poly_degree(cp) == n);
      CHECK(cp.back() == 1);
      CHECK(poly_eval(cp, a).is_zero());
      // similarity invariance
      Mat c = random_mat(fp, n, n, rng);
      if (auto ci = try_inverse(c))
        CHECK(charpoly(*ci * a * c) == cp);
    }
  }
}

TEST_CASE("irreducible factors against trial division")
{
  std::mt19937_64 rng(11);
  for (auto [p, m] : std::vector<std::pair<int, int>>{{2, 1}, {3, 1}, {2, 2}, {3, 2}, {5, 1}, {2, 3}}) {
    auto fp = Field::make(p, m);
    Field const &f = *fp;
    for (int t = 0; t < 25; ++t) {
      int deg = 1 + static_cast<int>(rng() % 8);
      Poly a(deg + 1);
      for (auto &x : a)
        x = static_cast<Elem>(rng() % f.q());
      a[deg] = 1;
      // force repeated and p-th power factors sometimes
      if (t % 3 == 0)
        a = poly_mul(f, a, a);
      if (t % 5 == 0) {
        Poly pp = Poly{1};
        for (int i = 0; i < p; ++i)
          pp = poly_mul(f, pp, Poly{static_cast<Elem>(rng() % f.q()), 1});
        a = poly_mul(f, a, pp);
      }
      auto facs = irreducible_factors(f, a, t);
      Poly rest = a;
      for (auto const &g : facs) {
        CHECK(g.back() == 1);
        CHECK(irreducible_by_search(f, g));
        REQUIRE(poly_mod(f, rest, g).empty());
        Poly q, r;
        for (;;) {
          poly_divmod(f, rest, g, q, r);
          if (!r.empty())
            break;
          rest = q;
        }
      }
      CHECK(poly_degree(rest) == 0);
      // the seed only drives the splitting
      CHECK(irreducible_factors(f, a, t + 100) == facs);
    }
  }
}
