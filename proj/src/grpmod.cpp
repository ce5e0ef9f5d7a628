#include "brick/grpmod.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <random>
#include <sstream>
#include <stdexcept>

#include "brick/poly.hpp"

namespace brick
{

GroupRep::GroupRep(FieldPtr field, int dim, std::vector<Mat> gens, std::string group)
    : field_(std::move(field)), dim_(dim), gens_(std::move(gens)), group_(std::move(group))
{
  if (!field_ || dim_ < 0)
    throw std::invalid_argument("GroupRep needs a field and a non-negative dimension");
  for (auto const &g : gens_) {
    if (g.rows() != dim_ || g.cols() != dim_)
      throw std::invalid_argument("generator shape does not match module dimension");
    if (!same_field(g.field(), field_))
      throw std::invalid_argument("generator over a different field");
    auto inv = try_inverse(g);
    if (!inv)
      throw std::invalid_argument("generator matrix is singular");
    inverses_.push_back(std::move(*inv));
  }
}

Mat GroupRep::word(Word const &w) const
{
  Mat r = Mat::identity(field_, dim_);
  for (int x : w) {
    int g = letter_gen(x);
    if (g >= ngens())
      throw std::invalid_argument("word uses a missing generator");
    r = r * (letter_is_inverse(x) ? inverses_[g] : gens_[g]);
  }
  return r;
}

void require_compatible(GroupRep const &a, GroupRep const &b, char const *what)
{
  if (!same_field(a.field(), b.field()))
    throw std::invalid_argument(std::string(what) + ": modules over different fields");
  if (a.group() != b.group())
    throw std::invalid_argument(std::string(what) + ": modules for different groups (" + a.group() + ", " +
                                b.group() + ")");
  if (a.ngens() != b.ngens())
    throw std::invalid_argument(std::string(what) + ": generator counts differ");
}

GroupRep perm_to_rep(PermGroup const &g, FieldPtr field, std::string group)
{
  std::vector<Mat> mats;
  for (auto const &p : g.gens()) {
    if (!perm_is_bijection(p))
      throw std::invalid_argument("not a permutation");
    Mat m(field, g.degree(), g.degree());
    for (int i = 0; i < g.degree(); ++i)
      m(i, p[i]) = 1;
    mats.push_back(std::move(m));
  }
  return GroupRep(field, g.degree(), std::move(mats), std::move(group));
}

GroupRep trivial_rep(FieldPtr field, int ngens, std::string group)
{
  std::vector<Mat> mats(ngens, Mat::identity(field, 1));
  return GroupRep(field, 1, std::move(mats), std::move(group));
}

bool is_hom(GroupRep const &a, GroupRep const &b, Mat const &f)
{
  require_compatible(a, b, "is_hom");
  if (f.rows() != a.dim() || f.cols() != b.dim())
    return false;
  for (int g = 0; g < a.ngens(); ++g)
    if (!(f * b.gen(g) == a.gen(g) * f))
      return false;
  return true;
}

namespace
{

Subspace spin_mats(FieldPtr const &field, int n, std::vector<Mat> const &gens, Mat const &seeds)
{
  EchelonBasis eb(field, n);
  std::vector<std::vector<Elem>> queue;
  auto push = [&](std::vector<Elem> v) {
    eb.reduce(v);
    if (eb.insert_reduced(v) != 0)
      queue.push_back(eb.row(eb.dim() - 1));
  };
  for (int i = 0; i < seeds.rows(); ++i)
    push(std::vector<Elem>(seeds.row(i).begin(), seeds.row(i).end()));
  for (std::size_t k = 0; k < queue.size() && eb.dim() < n; ++k)
    for (auto const &g : gens) {
      push(vec_mul(queue[k], g));
      if (eb.dim() == n)
        break;
    }
  return eb.canonical();
}

bool invertible(Mat const &m) { return m.square() && rank(m) == m.rows(); }

} // namespace

Subspace spin(GroupRep const &a, Mat const &seeds)
{
  if (seeds.cols() != a.dim())
    throw std::invalid_argument("spin: seed length does not match module dimension");
  return spin_mats(a.field(), a.dim(), a.gens(), seeds);
}

std::vector<Mat> hom_g(GroupRep const &a, GroupRep const &b)
{
  require_compatible(a, b, "hom_g");
  int const n = a.dim(), k = b.dim();
  if (n == 0 || k == 0)
    return {};
  FieldPtr const &fp = a.field();
  Field const &f = *fp;

  // Spin a from standard basis vectors. Basis vector i is either a seed or
  // the image of an earlier basis vector under one generator; echelon row r
  // equals sum_j trans[r][j] * basis[j].
  struct Origin
  {
    int parent, gen, seed;
  };
  struct Relation
  {
    int parent, gen;
    std::vector<Elem> lambda;  // basis[parent] * g = sum lambda_j basis[j]
  };
  std::vector<std::vector<Elem>> basis, ech, trans;
  std::vector<int> piv;
  std::vector<Origin> origin;
  std::vector<Relation> relations;
  int nseeds = 0;

  auto place = [&](std::vector<Elem> w, Origin o) -> bool {
    std::vector<Elem> r = w, c(ech.size(), 0);
    for (std::size_t i = 0; i < ech.size(); ++i) {
      Elem x = r[piv[i]];
      if (x == 0)
        continue;
      c[i] = x;
      f.axpy(std::span<Elem>(r).subspan(piv[i]), std::span<Elem const>(ech[i]).subspan(piv[i]), f.neg(x));
    }
    auto it = std::find_if(r.begin(), r.end(), [](Elem x) { return x != 0; });
    if (it == r.end()) {
      if (o.seed < 0) {
        std::vector<Elem> lambda(n, 0);
        for (std::size_t i = 0; i < ech.size(); ++i)
          if (c[i] != 0)
            f.axpy(lambda, trans[i], c[i]);
        relations.push_back({o.parent, o.gen, std::move(lambda)});
      }
      return false;
    }
    int m = static_cast<int>(basis.size());
    std::vector<Elem> t(n, 0);
    t[m] = 1;
    for (std::size_t i = 0; i < ech.size(); ++i)
      if (c[i] != 0)
        f.axpy(t, trans[i], f.neg(c[i]));
    Elem lead_inv = f.inv(*it);
    f.scale(r, lead_inv);
    f.scale(t, lead_inv);
    piv.push_back(static_cast<int>(it - r.begin()));
    ech.push_back(std::move(r));
    trans.push_back(std::move(t));
    basis.push_back(std::move(w));
    origin.push_back(o);
    return true;
  };

  std::size_t next = 0;
  for (int s = 0; s < n && static_cast<int>(basis.size()) < n; ++s) {
    std::vector<Elem> e(n, 0);
    e[s] = 1;
    if (place(std::move(e), {-1, -1, nseeds}))
      ++nseeds;
    for (; next < basis.size(); ++next)
      for (int g = 0; g < a.ngens(); ++g)
        place(vec_mul(basis[next], a.gen(g)), {static_cast<int>(next), g, -1});
  }

  // Unknowns: the images of the seeds, nseeds * k of them. lin[i] expresses
  // the image of basis[i] as a U x k matrix in those unknowns.
  int const unknowns = nseeds * k;
  std::vector<Mat> lin(n);
  for (int i = 0; i < n; ++i) {
    if (origin[i].seed >= 0) {
      lin[i] = Mat(fp, unknowns, k);
      for (int c = 0; c < k; ++c)
        lin[i](origin[i].seed * k + c, c) = 1;
    } else {
      lin[i] = lin[origin[i].parent] * b.gen(origin[i].gen);
    }
  }
  EchelonBasis equations(fp, unknowns);
  for (auto const &rel : relations) {
    Mat c = lin[rel.parent] * b.gen(rel.gen);
    for (int j = 0; j < n; ++j)
      if (rel.lambda[j] != 0)
        f.axpy(c.data(), lin[j].data(), f.neg(rel.lambda[j]));
    for (int col = 0; col < k; ++col) {
      std::vector<Elem> eq(unknowns);
      for (int u = 0; u < unknowns; ++u)
        eq[u] = c(u, col);
      equations.reduce(eq);
      equations.insert_reduced(eq);
    }
    if (equations.dim() == unknowns)
      return {};
  }
  Subspace sol = nullspace(equations.matrix());
  if (sol.dim() == 0)
    return {};

  Mat bmat(fp, n, n);
  for (int i = 0; i < n; ++i)
    std::copy(basis[i].begin(), basis[i].end(), bmat.row(i).begin());
  Mat binv = inverse(bmat);
  Mat flat(fp, sol.dim(), n * k);
  for (int s = 0; s < sol.dim(); ++s) {
    Mat phi(fp, n, k);
    for (int i = 0; i < n; ++i) {
      auto img = vec_mul(sol.basis().row(s), lin[i]);
      std::copy(img.begin(), img.end(), phi.row(i).begin());
    }
    Mat fmap = binv * phi;
    std::copy(fmap.data().begin(), fmap.data().end(), flat.row(s).begin());
  }
  auto canon = rref(flat);
  std::vector<Mat> out;
  for (int s = 0; s < canon.rank; ++s) {
    Mat m(fp, n, k);
    std::copy(canon.form.row(s).begin(), canon.form.row(s).end(), m.data().begin());
    out.push_back(std::move(m));
  }
  return out;
}

GroupRep sub(GroupRep const &a, Subspace const &w)
{
  if (w.ambient_dim() != a.dim())
    throw std::invalid_argument("sub: ambient mismatch");
  std::vector<Mat> gens;
  for (auto const &g : a.gens()) {
    Mat img = w.basis() * g;
    for (int i = 0; i < img.rows(); ++i)
      if (!w.contains(img.row(i)))
        throw std::invalid_argument("sub: subspace is not invariant");
    gens.push_back(w.coordinates(img));
  }
  return GroupRep(a.field(), w.dim(), std::move(gens), a.group());
}

namespace
{
std::vector<int> non_pivots(Subspace const &w)
{
  std::vector<char> is_piv(w.ambient_dim(), 0);
  for (int p : w.pivots())
    is_piv[p] = 1;
  std::vector<int> cols;
  for (int c = 0; c < w.ambient_dim(); ++c)
    if (!is_piv[c])
      cols.push_back(c);
  return cols;
}
} // namespace

GroupRep quotient(GroupRep const &a, Subspace const &w)
{
  if (w.ambient_dim() != a.dim())
    throw std::invalid_argument("quotient: ambient mismatch");
  auto cols = non_pivots(w);
  int d = static_cast<int>(cols.size());
  std::vector<Mat> gens;
  for (auto const &g : a.gens()) {
    Mat img = w.basis() * g;
    for (int i = 0; i < img.rows(); ++i)
      if (!w.contains(img.row(i)))
        throw std::invalid_argument("quotient: subspace is not invariant");
    Mat q(a.field(), d, d);
    for (int i = 0; i < d; ++i) {
      auto r = w.reduce(g.row(cols[i]));
      for (int j = 0; j < d; ++j)
        q(i, j) = r[cols[j]];
    }
    gens.push_back(std::move(q));
  }
  return GroupRep(a.field(), d, std::move(gens), a.group());
}

Mat quotient_projection(Subspace const &w)
{
  auto cols = non_pivots(w);
  int n = w.ambient_dim(), d = static_cast<int>(cols.size());
  Mat p(w.field(), n, d);
  for (int j = 0; j < d; ++j)
    p(cols[j], j) = 1;
  Field const &f = *w.field();
  for (int r = 0; r < w.dim(); ++r)
    for (int j = 0; j < d; ++j)
      p(w.pivots()[r], j) = f.neg(w.basis()(r, cols[j]));
  return p;
}

GroupRep dual(GroupRep const &a)
{
  std::vector<Mat> gens;
  for (int g = 0; g < a.ngens(); ++g)
    gens.push_back(a.gen_inverse(g).transpose());
  return GroupRep(a.field(), a.dim(), std::move(gens), a.group());
}

GroupRep tensor(GroupRep const &a, GroupRep const &b)
{
  require_compatible(a, b, "tensor");
  std::vector<Mat> gens;
  for (int g = 0; g < a.ngens(); ++g)
    gens.push_back(kron(a.gen(g), b.gen(g)));
  return GroupRep(a.field(), a.dim() * b.dim(), std::move(gens), a.group());
}

GroupRep direct_sum(GroupRep const &a, GroupRep const &b)
{
  require_compatible(a, b, "direct_sum");
  std::vector<Mat> gens;
  for (int g = 0; g < a.ngens(); ++g)
    gens.push_back(direct_sum(a.gen(g), b.gen(g)));
  return GroupRep(a.field(), a.dim() + b.dim(), std::move(gens), a.group());
}

GroupRep conjugate(GroupRep const &a, Mat const &c)
{
  Mat ci = inverse(c);
  std::vector<Mat> gens;
  for (auto const &g : a.gens())
    gens.push_back(ci * g * c);
  return GroupRep(a.field(), a.dim(), std::move(gens), a.group());
}

SplitResult meataxe_split(GroupRep const &a, std::uint64_t seed)
{
  int const n = a.dim();
  if (n == 0)
    throw std::invalid_argument("meataxe_split: zero module");
  if (n == 1)
    return {true, {}};
  FieldPtr const &fp = a.field();
  Field const &f = *fp;
  std::mt19937_64 rng(seed);
  std::vector<Mat> pool = a.gens();
  if (pool.empty())
    pool.push_back(Mat::identity(fp, n));
  std::size_t const ngens = pool.size();
  std::size_t const pool_cap = ngens + 8;
  std::vector<Mat> transposed;
  for (auto const &g : a.gens())
    transposed.push_back(g.transpose());

  constexpr int kAttempts = 200;
  for (int attempt = 0; attempt < kAttempts; ++attempt) {
    Mat prod = pool[rng() % pool.size()] * pool[rng() % pool.size()];
    if (pool.size() < pool_cap)
      pool.push_back(std::move(prod));
    else
      pool[ngens + attempt % (pool_cap - ngens)] = std::move(prod);
    Mat theta(fp, n, n);
    for (auto const &m : pool) {
      Elem c = static_cast<Elem>(rng() % f.q());
      if (c != 0)
        f.axpy(theta.data(), m.data(), c);
    }
    auto factors = irreducible_factors(f, charpoly(theta), rng());
    for (auto const &fac : factors) {
      Mat nmat = poly_eval(fac, theta);
      Subspace ker = kernel(nmat);
      Subspace w = spin_mats(fp, n, a.gens(), ker.basis().slice(0, 1, 0, n));
      if (w.dim() < n)
        return {false, w};
      if (ker.dim() != poly_degree(fac))
        continue;
      Subspace kert = kernel(nmat.transpose());
      Subspace wt = spin_mats(fp, n, transposed, kert.basis().slice(0, 1, 0, n));
      if (wt.dim() < n)
        return {false, nullspace(wt.basis())};
      return {true, {}};
    }
  }
  throw std::runtime_error("meataxe: no usable algebra element found");
}

bool is_irreducible(GroupRep const &a, std::uint64_t seed) { return meataxe_split(a, seed).irreducible; }

bool is_absolutely_irreducible(GroupRep const &a, std::uint64_t seed)
{
  return is_irreducible(a, seed) && hom_g(a, a).size() == 1;
}

namespace
{
void chop_into(GroupRep const &a, std::mt19937_64 &rng, std::vector<GroupRep> &out)
{
  if (a.dim() == 0)
    return;
  auto s = meataxe_split(a, rng());
  if (s.irreducible) {
    out.push_back(a);
    return;
  }
  chop_into(sub(a, s.submodule), rng, out);
  chop_into(quotient(a, s.submodule), rng, out);
}
} // namespace

std::vector<Factor> chop(GroupRep const &a, std::uint64_t seed)
{
  std::mt19937_64 rng(seed);
  std::vector<GroupRep> pieces;
  chop_into(a, rng, pieces);
  std::vector<Factor> out;
  for (auto &p : pieces) {
    bool found = false;
    for (auto &fac : out)
      if (fac.module.dim() == p.dim() && iso_test(fac.module, p)) {
        ++fac.multiplicity;
        found = true;
        break;
      }
    if (!found)
      out.push_back({std::move(p), 1});
  }
  std::stable_sort(out.begin(), out.end(),
                   [](Factor const &x, Factor const &y) { return x.module.dim() < y.module.dim(); });
  return out;
}

Subspace radical(GroupRep const &a, std::vector<GroupRep> const &simples)
{
  std::vector<Mat> maps;
  for (auto const &s : simples) {
    auto h = hom_g(a, s);
    maps.insert(maps.end(), h.begin(), h.end());
  }
  if (maps.empty())
    return Subspace::full(a.field(), a.dim());
  Subspace rad = kernel(hstack(maps));

  // a / rad embeds in a semisimple module, so its dimension must be
  // accounted for by maps to the simples.
  GroupRep top = quotient(a, rad);
  int accounted = 0;
  for (auto const &s : simples) {
    auto end = hom_g(s, s).size();
    if (end == 0)
      throw std::runtime_error("radical: a listed simple module has no endomorphisms");
    auto h = hom_g(top, s).size();
    if (h % end != 0)
      throw std::runtime_error("radical: hom dimension not a multiple of the endomorphism dimension");
    accounted += static_cast<int>(h / end) * s.dim();
  }
  if (accounted != top.dim())
    throw std::runtime_error("radical: quotient is not semisimple over the listed simples");
  return rad;
}

std::optional<Mat> iso_test(GroupRep const &a, GroupRep const &b, std::uint64_t seed)
{
  require_compatible(a, b, "iso_test");
  if (a.dim() != b.dim())
    return std::nullopt;
  if (a.dim() == 0)
    return Mat(a.field(), 0, 0);
  auto h = hom_g(a, b);
  if (h.empty())
    return std::nullopt;
  for (auto const &m : h)
    if (invertible(m))
      return m;
  Field const &f = *a.field();
  auto combine = [&](std::vector<Elem> const &c) {
    Mat m(a.field(), a.dim(), b.dim());
    for (std::size_t i = 0; i < h.size(); ++i)
      if (c[i] != 0)
        f.axpy(m.data(), h[i].data(), c[i]);
    return m;
  };
  std::mt19937_64 rng(seed);
  constexpr int kRandomTries = 64;
  std::vector<Elem> c(h.size());
  for (int t = 0; t < kRandomTries; ++t) {
    for (auto &x : c)
      x = static_cast<Elem>(rng() % f.q());
    Mat m = combine(c);
    if (invertible(m))
      return m;
  }
  if (h.size() <= 3 && f.q() <= 9) {
    long long total = 1;
    for (std::size_t i = 0; i < h.size(); ++i)
      total *= f.q();
    for (long long code = 1; code < total; ++code) {
      long long x = code;
      for (auto &ci : c) {
        ci = static_cast<Elem>(x % f.q());
        x /= f.q();
      }
      Mat m = combine(c);
      if (invertible(m))
        return m;
    }
  }
  return std::nullopt;
}

void write_group_rep(std::ostream &os, GroupRep const &a)
{
  os << a.field()->header() << '\n' << a.dim() << ' ' << a.ngens() << '\n';
  for (auto const &g : a.gens())
    write_mat(os, g);
}

GroupRep read_group_rep(std::istream &is, std::string group)
{
  std::string header;
  while (std::getline(is, header) && header.find_first_not_of(" \t\r") == std::string::npos) {
  }
  FieldPtr field = Field::parse_header(header);
  int n, ngens;
  if (!(is >> n >> ngens) || n < 0 || ngens < 0)
    throw std::invalid_argument("bad module header");
  std::vector<Mat> gens;
  for (int i = 0; i < ngens; ++i) {
    Mat m = read_mat(is);
    if (!same_field(m.field(), field))
      throw std::invalid_argument("generator field differs from module field");
    gens.push_back(std::move(m));
  }
  return GroupRep(field, n, std::move(gens), std::move(group));
}

} // namespace brick
