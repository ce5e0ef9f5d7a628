#include "brick/poly.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

namespace brick
{

int poly_degree(Poly const &a) { return static_cast<int>(a.size()) - 1; }

void poly_trim(Poly &a)
{
  while (!a.empty() && a.back() == 0)
    a.pop_back();
}

Poly poly_add(Field const &f, Poly const &a, Poly const &b)
{
  Poly r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    r[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i)
    r[i] = f.add(r[i], b[i]);
  poly_trim(r);
  return r;
}

Poly poly_sub(Field const &f, Poly const &a, Poly const &b)
{
  Poly r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    r[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i)
    r[i] = f.sub(r[i], b[i]);
  poly_trim(r);
  return r;
}

Poly poly_mul(Field const &f, Poly const &a, Poly const &b)
{
  if (a.empty() || b.empty())
    return {};
  Poly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != 0)
      f.axpy(std::span<Elem>(r).subspan(i, b.size()), b, a[i]);
  poly_trim(r);
  return r;
}

void poly_divmod(Field const &f, Poly const &a, Poly const &b, Poly &quot, Poly &rem)
{
  if (b.empty())
    throw std::domain_error("polynomial division by zero");
  rem = a;
  poly_trim(rem);
  int db = poly_degree(b);
  if (poly_degree(rem) < db) {
    quot.clear();
    return;
  }
  quot.assign(rem.size() - b.size() + 1, 0);
  Elem lead_inv = f.inv(b.back());
  for (int d = poly_degree(rem); d >= db; --d) {
    Elem c = f.mul(rem[d], lead_inv);
    if (c == 0)
      continue;
    quot[d - db] = c;
    f.axpy(std::span<Elem>(rem).subspan(d - db, b.size()), b, f.neg(c));
  }
  rem.resize(db);
  poly_trim(rem);
  poly_trim(quot);
}

Poly poly_mod(Field const &f, Poly const &a, Poly const &b)
{
  Poly q, r;
  poly_divmod(f, a, b, q, r);
  return r;
}

Poly poly_monic(Field const &f, Poly a)
{
  poly_trim(a);
  if (!a.empty() && a.back() != 1)
    f.scale(a, f.inv(a.back()));
  return a;
}

Poly poly_gcd(Field const &f, Poly a, Poly b)
{
  poly_trim(a);
  poly_trim(b);
  while (!b.empty()) {
    Poly r = poly_mod(f, a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return poly_monic(f, std::move(a));
}

Poly poly_derivative(Field const &f, Poly const &a)
{
  if (a.size() <= 1)
    return {};
  Poly r(a.size() - 1);
  for (std::size_t i = 1; i < a.size(); ++i)
    r[i - 1] = f.mul(a[i], f.from_int(static_cast<long long>(i)));
  poly_trim(r);
  return r;
}

Poly poly_powmod(Field const &f, Poly base, std::uint64_t e, Poly const &mod)
{
  Poly result = poly_mod(f, Poly{1}, mod);
  base = poly_mod(f, base, mod);
  while (e > 0) {
    if (e & 1)
      result = poly_mod(f, poly_mul(f, result, base), mod);
    e >>= 1;
    if (e)
      base = poly_mod(f, poly_mul(f, base, base), mod);
  }
  return result;
}

Poly charpoly(Mat const &a)
{
  if (!a.square())
    throw std::invalid_argument("charpoly of a non-square matrix");
  Field const &f = a.f();
  int n = a.rows();
  Mat h = a;
  for (int m = 1; m + 1 < n; ++m) {
    int piv = -1;
    for (int i = m; i < n; ++i)
      if (h(i, m - 1) != 0) {
        piv = i;
        break;
      }
    if (piv < 0)
      continue;
    if (piv != m) {
      for (int j = 0; j < n; ++j)
        std::swap(h(piv, j), h(m, j));
      for (int i = 0; i < n; ++i)
        std::swap(h(i, piv), h(i, m));
    }
    Elem t_inv = f.inv(h(m, m - 1));
    for (int i = m + 1; i < n; ++i) {
      Elem u = f.mul(h(i, m - 1), t_inv);
      if (u == 0)
        continue;
      f.axpy(h.row(i), h.row(m), f.neg(u));
      for (int r = 0; r < n; ++r)
        h(r, m) = f.add(h(r, m), f.mul(u, h(r, i)));
    }
  }
  std::vector<Poly> p(n + 1);
  p[0] = {1};
  for (int m = 1; m <= n; ++m) {
    Poly cur = poly_mul(f, Poly{f.neg(h(m - 1, m - 1)), 1}, p[m - 1]);
    Elem t = 1;
    for (int i = m - 1; i >= 1; --i) {
      t = f.mul(t, h(i, i - 1));
      if (t == 0)
        break;
      Elem c = f.mul(h(i - 1, m - 1), t);
      if (c != 0)
        cur = poly_sub(f, cur, poly_mul(f, Poly{c}, p[i - 1]));
    }
    p[m] = std::move(cur);
  }
  return p[n];
}

Mat poly_eval(Poly const &p, Mat const &a)
{
  if (!a.square())
    throw std::invalid_argument("poly_eval needs a square matrix");
  Field const &f = a.f();
  int n = a.rows();
  Mat r(a.field(), n, n);
  for (int d = poly_degree(p); d >= 0; --d) {
    r = r * a;
    for (int i = 0; i < n; ++i)
      r(i, i) = f.add(r(i, i), p[d]);
  }
  return r;
}

namespace
{

Poly pth_root(Field const &f, Poly const &a)
{
  int p = f.p();
  long long e = 1;
  for (int i = 1; i < f.m(); ++i)
    e *= p;
  Poly r;
  for (std::size_t i = 0; i < a.size(); i += p)
    r.push_back(f.pow(a[i], e));
  poly_trim(r);
  return r;
}

Poly poly_exact_div(Field const &f, Poly const &a, Poly const &b)
{
  Poly q, r;
  poly_divmod(f, a, b, q, r);
  return q;
}

// Squarefree polynomials whose irreducible factors together are exactly
// those of a.
void squarefree_parts(Field const &f, Poly a, std::vector<Poly> &out)
{
  if (poly_degree(a) <= 0)
    return;
  Poly da = poly_derivative(f, a);
  if (da.empty()) {
    squarefree_parts(f, pth_root(f, a), out);
    return;
  }
  Poly c = poly_gcd(f, a, da);
  Poly w = poly_exact_div(f, a, c);
  out.push_back(w);
  for (Poly g = poly_gcd(f, c, w); poly_degree(g) > 0; g = poly_gcd(f, c, w))
    c = poly_exact_div(f, c, g);
  squarefree_parts(f, c, out);
}

Poly random_poly(Field const &f, int deg_below, std::mt19937_64 &rng)
{
  Poly r(deg_below);
  for (auto &x : r)
    x = static_cast<Elem>(rng() % f.q());
  poly_trim(r);
  return r;
}

void equal_degree_split(Field const &f, Poly const &g, int d, std::mt19937_64 &rng, std::vector<Poly> &out)
{
  int n = poly_degree(g);
  if (n == d) {
    out.push_back(g);
    return;
  }
  std::uint64_t q = f.q();
  for (;;) {
    Poly a = random_poly(f, n, rng);
    if (poly_degree(a) < 1)
      continue;
    Poly b;
    if (q % 2 == 1) {
      Poly t = a, s = a;
      for (int i = 1; i < d; ++i) {
        t = poly_powmod(f, t, q, g);
        s = poly_mod(f, poly_mul(f, s, t), g);
      }
      b = poly_sub(f, poly_powmod(f, s, (q - 1) / 2, g), Poly{1});
    } else {
      Poly cur = a;
      b = a;
      for (int i = 1; i < f.m() * d; ++i) {
        cur = poly_mod(f, poly_mul(f, cur, cur), g);
        b = poly_add(f, b, cur);
      }
    }
    Poly u = poly_gcd(f, g, b);
    int du = poly_degree(u);
    if (du > 0 && du < n) {
      equal_degree_split(f, u, d, rng, out);
      equal_degree_split(f, poly_exact_div(f, g, u), d, rng, out);
      return;
    }
  }
}

} // namespace

std::vector<Poly> irreducible_factors(Field const &f, Poly const &a, std::uint64_t seed)
{
  Poly m = poly_monic(f, a);
  if (m.empty())
    throw std::invalid_argument("factoring the zero polynomial");
  std::vector<Poly> parts;
  squarefree_parts(f, m, parts);
  std::mt19937_64 rng(seed);
  std::vector<Poly> out;
  Poly x{0, 1};
  for (Poly g : parts) {
    Poly h = x;
    for (int d = 1; 2 * d <= poly_degree(g); ++d) {
      h = poly_powmod(f, h, static_cast<std::uint64_t>(f.q()), g);
      Poly t = poly_gcd(f, g, poly_sub(f, h, x));
      if (poly_degree(t) > 0) {
        equal_degree_split(f, t, d, rng, out);
        g = poly_exact_div(f, g, t);
        h = poly_mod(f, h, g);
      }
    }
    if (poly_degree(g) > 0)
      out.push_back(g);
  }
  std::sort(out.begin(), out.end(), [](Poly const &u, Poly const &v) {
    if (u.size() != v.size())
      return u.size() < v.size();
    return std::lexicographical_compare(u.rbegin(), u.rend(), v.rbegin(), v.rend());
  });
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

} // namespace brick
