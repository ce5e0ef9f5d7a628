#include "doctest.h"

#include <random>
#include <set>
#include <sstream>

#include "brick/matrix.hpp"

using namespace brick;

namespace
{

Mat random_mat(FieldPtr f, int r, int c, std::mt19937_64 &rng, int zero_bias = 0)
{
  Mat m(f, r, c);
  for (auto &x : m.data())
    x = (zero_bias > 0 && rng() % (zero_bias + 1) != 0) ? 0 : static_cast<Elem>(rng() % f->q());
  return m;
}

// Every vector of the span of the rows, by enumerating all coefficient tuples.
std::set<std::vector<Elem>> enumerate_span(Mat const &rows)
{
  Field const &f = rows.f();
  std::set<std::vector<Elem>> out;
  int k = rows.rows();
  long long total = 1;
  for (int i = 0; i < k; ++i)
    total *= f.q();
  for (long long code = 0; code < total; ++code) {
    std::vector<Elem> v(rows.cols(), 0);
    long long c = code;
    for (int i = 0; i < k; ++i) {
      f.axpy(v, rows.row(i), static_cast<Elem>(c % f.q()));
      c /= f.q();
    }
    out.insert(v);
  }
  return out;
}

} // namespace

TEST_CASE("rref examples")
{
  auto f2 = Field::make(2, 1);
  auto id = Mat::identity(f2, 3);
  auto r = rref(id);
  CHECK(r.form == id);
  CHECK(r.rank == 3);

  auto f3 = Field::make(3, 1);
  auto a = Mat::from_rows(f3, {{1, 2}, {2, 1}});
  CHECK(rank(a) == 1);
  CHECK(rref(a).form == Mat::from_rows(f3, {{1, 2}, {0, 0}}));

  Mat z(f3, 3, 4);
  auto rz = rref(z);
  CHECK(rz.rank == 0);
  CHECK(rz.form.is_zero());
}

TEST_CASE("nullspace examples")
{
  auto f3 = Field::make(3, 1);
  CHECK(nullspace(Mat::identity(f3, 4)).dim() == 0);
  CHECK(nullspace(Mat(f3, 5, 5)).dim() == 5);
  auto a = Mat::from_rows(f3, {{1, 2}, {2, 1}});
  auto n = nullspace(a);
  CHECK(n.dim() == 1);
  CHECK((a * n.basis().transpose()).is_zero());
}

TEST_CASE("kernel and nullspace use the stated conventions")
{
  auto f = Field::make(5, 1);
  std::mt19937_64 rng(3);
  auto a = random_mat(f, 4, 7, rng);
  auto n = nullspace(a);
  CHECK(n.dim() == 7 - rank(a));
  CHECK((n.basis() * a.transpose()).is_zero());
  auto k = kernel(a.transpose());
  CHECK(k == n);
}

TEST_CASE("solve examples")
{
  auto f9 = Field::make(3, 2);
  std::mt19937_64 rng(11);
  auto b = random_mat(f9, 3, 4, rng);
  auto x = solve(Mat::identity(f9, 4), b);
  REQUIRE(x);
  CHECK(*x == b);

  auto a = random_mat(f9, 5, 4, rng);
  auto x0 = solve(a, Mat(f9, 2, 4));
  REQUIRE(x0);
  CHECK(x0->is_zero());

  auto sing = Mat::from_rows(f9, {{1, 0}, {2, 0}});
  CHECK_FALSE(solve(sing, Mat::from_rows(f9, {{0, 1}})).has_value());
  CHECK_THROWS_AS(solve(sing, Mat(f9, 1, 3)), std::invalid_argument);

  // consistent random systems: the returned x really solves x a = b
  for (int t = 0; t < 20; ++t) {
    auto aa = random_mat(f9, 6, 5, rng, 2);
    auto xx = random_mat(f9, 3, 6, rng);
    auto bb = xx * aa;
    auto sol = solve(aa, bb);
    REQUIRE(sol);
    CHECK(*sol * aa == bb);
  }
}

TEST_CASE("sum and intersect")
{
  auto f = Field::make(3, 2);
  std::mt19937_64 rng(5);
  auto u = Subspace::span(random_mat(f, 3, 6, rng));
  CHECK(intersect(u, u) == u);
  CHECK(sum(u, u) == u);

  auto e = Mat::identity(f, 5);
  auto left = Subspace::span(e.slice(0, 2, 0, 5));
  auto right = Subspace::span(e.slice(2, 3, 0, 5));
  CHECK(intersect(left, right).dim() == 0);
  CHECK(sum(left, right) == Subspace::full(f, 5));
}

TEST_CASE("sum and intersect agree with exhaustive enumeration over GF(2)")
{
  auto f = Field::make(2, 1);
  std::mt19937_64 rng(17);
  for (int t = 0; t < 40; ++t) {
    int n = 1 + static_cast<int>(rng() % 6);
    auto u = Subspace::span(random_mat(f, static_cast<int>(rng() % (n + 1)), n, rng));
    auto v = Subspace::span(random_mat(f, static_cast<int>(rng() % (n + 1)), n, rng));
    auto su = enumerate_span(u.basis()), sv = enumerate_span(v.basis());
    std::set<std::vector<Elem>> both;
    for (auto const &x : su)
      if (sv.count(x))
        both.insert(x);
    auto inter = intersect(u, v);
    auto total = sum(u, v);
    CHECK(enumerate_span(inter.basis()) == both);
    CHECK(static_cast<long long>(enumerate_span(total.basis()).size()) == (1LL << total.dim()));
    for (auto const &x : su)
      CHECK(total.contains(x));
    CHECK(u.dim() + v.dim() == total.dim() + inter.dim());
  }
}

TEST_CASE("block, kron and direct sum")
{
  auto f = Field::make(5, 1);
  CHECK(direct_sum(Mat::identity(f, 2), Mat::identity(f, 3)) == Mat::identity(f, 5));

  auto a = Mat::from_rows(f, {{1, 2}, {3, 4}});
  auto k = kron(Mat::identity(f, 2), a);
  CHECK(k == direct_sum(a, a));
  CHECK(kron(a, Mat::identity(f, 3)).rows() == 6);

  auto one = [&](int v) { return Mat::from_rows(f, {{v}}); };
  CHECK(block({{one(1), one(2)}, {one(3), one(4)}}) == a);
  CHECK_THROWS_AS(block({{one(1), one(2)}, {one(3)}}), std::invalid_argument);
  CHECK_THROWS_AS(block({{one(1), Mat(f, 2, 1)}}), std::invalid_argument);
}

TEST_CASE("rref properties")
{
  std::mt19937_64 rng(23);
  for (auto [p, m] : std::vector<std::pair<int, int>>{{2, 1}, {3, 1}, {2, 2}, {3, 2}, {5, 2}}) {
    auto f = Field::make(p, m);
    for (int t = 0; t < 25; ++t) {
      int r = 1 + static_cast<int>(rng() % 7), c = 1 + static_cast<int>(rng() % 7), k = 1 + static_cast<int>(rng() % 7);
      auto a = random_mat(f, r, k, rng, static_cast<int>(t % 3));
      auto b = random_mat(f, k, c, rng, static_cast<int>(t % 2));
      auto ra = rref(a);
      CHECK(rref(ra.form).form == ra.form);
      CHECK(rank(a * b) <= std::min(rank(a), rank(b)));
      // canonicality: reversed and recombined generators span the same space
      Mat rev(f, a.rows(), a.cols());
      for (int i = 0; i < a.rows(); ++i)
        std::copy(a.row(a.rows() - 1 - i).begin(), a.row(a.rows() - 1 - i).end(), rev.row(i).begin());
      auto g = random_mat(f, a.rows(), a.rows(), rng);
      if (!try_inverse(g))
        g = Mat::identity(f, a.rows());
      CHECK(Subspace::span(rev).basis() == Subspace::span(a).basis());
      CHECK(Subspace::span(g * a).basis() == Subspace::span(a).basis());
    }
  }
}

TEST_CASE("packed GF(2) rref matches the generic kernel")
{
  auto f = Field::make(2, 1);
  std::mt19937_64 rng(29);
  for (int t = 0; t < 30; ++t) {
    int r = 1 + static_cast<int>(rng() % 90), c = 1 + static_cast<int>(rng() % 150);
    auto a = random_mat(f, r, c, rng, static_cast<int>(t % 4));
    auto fast = rref(a), slow = rref_generic(a);
    CHECK(fast.form == slow.form);
    CHECK(fast.pivots == slow.pivots);
  }
}

TEST_CASE("inverse and power")
{
  auto f = Field::make(3, 2);
  std::mt19937_64 rng(31);
  for (int t = 0; t < 10; ++t) {
    auto a = random_mat(f, 5, 5, rng);
    auto inv = try_inverse(a);
    if (!inv) {
      CHECK(rank(a) < 5);
      continue;
    }
    CHECK((a * *inv).is_identity());
    CHECK((power(a, -3) * power(a, 3)).is_identity());
  }
  CHECK_THROWS_AS(inverse(Mat(f, 2, 2)), std::domain_error);
}

TEST_CASE("sparse system agrees with dense nullspace")
{
  std::mt19937_64 rng(37);
  for (auto [p, m] : std::vector<std::pair<int, int>>{{2, 1}, {3, 2}, {7, 1}}) {
    auto f = Field::make(p, m);
    for (int t = 0; t < 20; ++t) {
      int eq = 1 + static_cast<int>(rng() % 25), n = 1 + static_cast<int>(rng() % 20);
      auto a = random_mat(f, eq, n, rng, 4);
      SparseSystem sys(f, n);
      for (int i = 0; i < eq; ++i) {
        std::vector<SparseSystem::Term> terms;
        for (int j = 0; j < n; ++j)
          if (a(i, j))
            terms.emplace_back(j, a(i, j));
        sys.add_equation(terms);
      }
      CHECK(sys.rank() == rank(a));
      CHECK(sys.nullspace() == nullspace(a));
    }
  }
}

TEST_CASE("matrix text format round trip")
{
  std::mt19937_64 rng(41);
  for (auto [p, m] : std::vector<std::pair<int, int>>{{2, 1}, {3, 2}, {5, 2}, {2, 3}}) {
    auto f = Field::make(p, m);
    auto a = random_mat(f, 3, 4, rng);
    std::ostringstream os;
    write_mat(os, a);
    std::istringstream is(os.str());
    CHECK(read_mat(is) == a);
    std::ostringstream again;
    write_mat(again, a);
    CHECK(again.str() == os.str());
  }
  std::istringstream bad("GF 3 1 0 1\n1 2\n0 3\n");
  CHECK_THROWS_AS(read_mat(bad), std::invalid_argument);
  std::istringstream exact("GF 3 2 2 2 1\n2 2\n1 0\n0 8\n");
  auto m = read_mat(exact);
  CHECK(m(1, 1) == 8);
}
