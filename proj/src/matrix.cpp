#include "brick/matrix.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>

namespace brick
{

Mat::Mat(FieldPtr field, int rows, int cols)
  : field_(std::move(field)), rows_(rows), cols_(cols),
    data_(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols), 0)
{
  if (!field_)
    throw std::invalid_argument("matrix needs a field");
  if (rows < 0 || cols < 0)
    throw std::invalid_argument("negative matrix dimension");
}

Mat Mat::identity(FieldPtr field, int n)
{
  Mat m(std::move(field), n, n);
  for (int i = 0; i < n; ++i)
    m(i, i) = 1;
  return m;
}

Mat Mat::from_rows(FieldPtr field, std::vector<std::vector<int>> const &rows)
{
  int r = static_cast<int>(rows.size());
  int c = r == 0 ? 0 : static_cast<int>(rows[0].size());
  Mat m(field, r, c);
  for (int i = 0; i < r; ++i) {
    if (static_cast<int>(rows[i].size()) != c)
      throw std::invalid_argument("ragged row list");
    for (int j = 0; j < c; ++j) {
      int v = rows[i][j];
      if (v < 0 || v >= field->q())
        throw std::invalid_argument("matrix entry out of range");
      m(i, j) = static_cast<Elem>(v);
    }
  }
  return m;
}

Mat Mat::row_vector(FieldPtr field, std::span<Elem const> v)
{
  Mat m(std::move(field), 1, static_cast<int>(v.size()));
  std::copy(v.begin(), v.end(), m.data_.begin());
  return m;
}

bool Mat::is_zero() const
{
  return std::all_of(data_.begin(), data_.end(), [](Elem x) { return x == 0; });
}

bool Mat::is_identity() const
{
  if (rows_ != cols_)
    return false;
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j)
      if ((*this)(i, j) != (i == j ? 1 : 0))
        return false;
  return true;
}

void require_same_field(Mat const &a, Mat const &b, char const *what)
{
  if (!same_field(a.field(), b.field()))
    throw std::invalid_argument(std::string(what) + ": matrices over different fields");
}

Mat Mat::transpose() const
{
  Mat t(field_, cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j)
      t(j, i) = (*this)(i, j);
  return t;
}

Mat Mat::operator+(Mat const &o) const
{
  require_same_field(*this, o, "add");
  if (rows_ != o.rows_ || cols_ != o.cols_)
    throw std::invalid_argument("add: shape mismatch");
  Mat r = *this;
  field_->axpy(r.data_, o.data_, 1);
  return r;
}

Mat Mat::operator-(Mat const &o) const
{
  require_same_field(*this, o, "sub");
  if (rows_ != o.rows_ || cols_ != o.cols_)
    throw std::invalid_argument("sub: shape mismatch");
  Mat r = *this;
  field_->axpy(r.data_, o.data_, field_->neg(1));
  return r;
}

Mat Mat::operator*(Mat const &o) const
{
  require_same_field(*this, o, "mul");
  if (cols_ != o.rows_)
    throw std::invalid_argument("mul: inner dimension mismatch (" + std::to_string(rows_) + "x" +
                                std::to_string(cols_) + " * " + std::to_string(o.rows_) + "x" +
                                std::to_string(o.cols_) + ")");
  Mat r(field_, rows_, o.cols_);
  for (int i = 0; i < rows_; ++i) {
    auto dst = r.row(i);
    for (int k = 0; k < cols_; ++k) {
      Elem a = (*this)(i, k);
      if (a != 0)
        field_->axpy(dst, o.row(k), a);
    }
  }
  return r;
}

std::vector<Elem> vec_mul(std::span<Elem const> v, Mat const &m)
{
  if (static_cast<int>(v.size()) != m.rows())
    throw std::invalid_argument("vec_mul: length mismatch");
  std::vector<Elem> r(m.cols(), 0);
  for (int k = 0; k < m.rows(); ++k)
    if (v[k] != 0)
      m.f().axpy(r, m.row(k), v[k]);
  return r;
}

Mat Mat::operator-() const { return scaled(field_->neg(1)); }

Mat Mat::scaled(Elem c) const
{
  Mat r = *this;
  if (c == 0)
    std::fill(r.data_.begin(), r.data_.end(), Elem{0});
  else
    field_->scale(r.data_, c);
  return r;
}

Mat Mat::slice(int r0, int nr, int c0, int nc) const
{
  if (r0 < 0 || c0 < 0 || nr < 0 || nc < 0 || r0 + nr > rows_ || c0 + nc > cols_)
    throw std::out_of_range("slice out of range");
  Mat s(field_, nr, nc);
  for (int i = 0; i < nr; ++i)
    std::copy_n(data_.begin() + static_cast<std::ptrdiff_t>(idx(r0 + i, c0)), nc, s.row(i).begin());
  return s;
}

void Mat::paste(int r0, int c0, Mat const &b)
{
  require_same_field(*this, b, "paste");
  if (r0 < 0 || c0 < 0 || r0 + b.rows_ > rows_ || c0 + b.cols_ > cols_)
    throw std::out_of_range("paste out of range");
  for (int i = 0; i < b.rows_; ++i)
    std::copy(b.row(i).begin(), b.row(i).end(), row(r0 + i).begin() + c0);
}

bool Mat::operator==(Mat const &o) const
{
  return rows_ == o.rows_ && cols_ == o.cols_ && same_field(field_, o.field_) && data_ == o.data_;
}

namespace
{

RrefResult rref_gf2(Mat const &a)
{
  int const rows = a.rows(), cols = a.cols();
  int const words = (cols + 63) / 64;
  std::vector<std::uint64_t> bits(static_cast<std::size_t>(rows) * words, 0);
  auto wrow = [&](int i) { return bits.data() + static_cast<std::size_t>(i) * words; };
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j)
      if (a(i, j))
        wrow(i)[j / 64] |= std::uint64_t{1} << (j % 64);

  RrefResult res;
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int const w = c / 64;
    std::uint64_t const bit = std::uint64_t{1} << (c % 64);
    int piv = -1;
    for (int i = r; i < rows; ++i)
      if (wrow(i)[w] & bit) {
        piv = i;
        break;
      }
    if (piv < 0)
      continue;
    if (piv != r)
      std::swap_ranges(wrow(piv), wrow(piv) + words, wrow(r));
    std::uint64_t const *src = wrow(r);
    for (int i = 0; i < rows; ++i) {
      if (i == r || !(wrow(i)[w] & bit))
        continue;
      std::uint64_t *dst = wrow(i);
      for (int k = w; k < words; ++k)
        dst[k] ^= src[k];
    }
    res.pivots.push_back(c);
    ++r;
  }
  res.rank = r;
  res.form = Mat(a.field(), rows, cols);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < cols; ++j)
      res.form(i, j) = static_cast<Elem>((wrow(i)[j / 64] >> (j % 64)) & 1u);
  return res;
}

} // namespace

RrefResult rref_generic(Mat const &a)
{
  RrefResult res;
  res.form = a;
  Mat &m = res.form;
  Field const &f = a.f();
  int const rows = a.rows(), cols = a.cols();
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int piv = -1;
    for (int i = r; i < rows; ++i)
      if (m(i, c) != 0) {
        piv = i;
        break;
      }
    if (piv < 0)
      continue;
    if (piv != r)
      std::swap_ranges(m.row(piv).begin(), m.row(piv).end(), m.row(r).begin());
    auto prow = m.row(r).subspan(c);
    f.scale(prow, f.inv(prow[0]));
    for (int i = 0; i < rows; ++i) {
      if (i == r)
        continue;
      Elem x = m(i, c);
      if (x != 0)
        f.axpy(m.row(i).subspan(c), prow, f.neg(x));
    }
    res.pivots.push_back(c);
    ++r;
  }
  res.rank = r;
  return res;
}

RrefResult rref(Mat const &a)
{
  if (a.f().q() == 2)
    return rref_gf2(a);
  return rref_generic(a);
}

int rank(Mat const &a) { return rref(a).rank; }

Subspace Subspace::span(Mat const &rows)
{
  Subspace s;
  s.ambient_ = rows.cols();
  auto r = rref(rows);
  s.basis_ = r.form.slice(0, r.rank, 0, rows.cols());
  s.pivots_ = std::move(r.pivots);
  return s;
}

Subspace Subspace::zero(FieldPtr field, int ambient)
{
  Subspace s;
  s.ambient_ = ambient;
  s.basis_ = Mat(std::move(field), 0, ambient);
  return s;
}

Subspace Subspace::full(FieldPtr field, int ambient)
{
  Subspace s;
  s.ambient_ = ambient;
  s.basis_ = Mat::identity(std::move(field), ambient);
  for (int i = 0; i < ambient; ++i)
    s.pivots_.push_back(i);
  return s;
}

std::vector<Elem> Subspace::reduce(std::span<Elem const> v) const
{
  if (static_cast<int>(v.size()) != ambient_)
    throw std::invalid_argument("vector length does not match ambient dimension");
  std::vector<Elem> r(v.begin(), v.end());
  Field const &f = *field();
  for (int i = 0; i < dim(); ++i) {
    Elem c = r[pivots_[i]];
    if (c != 0)
      f.axpy(r, basis_.row(i), f.neg(c));
  }
  return r;
}

bool Subspace::contains(std::span<Elem const> v) const
{
  auto r = reduce(v);
  return std::all_of(r.begin(), r.end(), [](Elem x) { return x == 0; });
}

bool Subspace::contains(Subspace const &other) const
{
  if (other.ambient_ != ambient_)
    throw std::invalid_argument("ambient mismatch");
  for (int i = 0; i < other.dim(); ++i)
    if (!contains(other.basis_.row(i)))
      return false;
  return true;
}

std::optional<std::vector<Elem>> Subspace::coordinates(std::span<Elem const> v) const
{
  if (!contains(v))
    return std::nullopt;
  std::vector<Elem> c(dim());
  for (int i = 0; i < dim(); ++i)
    c[i] = v[pivots_[i]];
  return c;
}

Mat Subspace::coordinates(Mat const &m) const
{
  Mat out(field(), m.rows(), dim());
  for (int i = 0; i < m.rows(); ++i) {
    auto c = coordinates(m.row(i));
    if (!c)
      throw std::invalid_argument("vector outside subspace");
    std::copy(c->begin(), c->end(), out.row(i).begin());
  }
  return out;
}

Subspace nullspace(Mat const &a)
{
  auto r = rref(a);
  int const n = a.cols();
  std::vector<bool> is_pivot(n, false);
  for (int c : r.pivots)
    is_pivot[c] = true;
  Field const &f = a.f();
  Mat basis(a.field(), n - r.rank, n);
  int k = 0;
  for (int free = 0; free < n; ++free) {
    if (is_pivot[free])
      continue;
    basis(k, free) = 1;
    for (int i = 0; i < r.rank; ++i)
      basis(k, r.pivots[i]) = f.neg(r.form(i, free));
    ++k;
  }
  return Subspace::span(basis);
}

Subspace kernel(Mat const &a) { return nullspace(a.transpose()); }

Subspace image(Mat const &a) { return Subspace::span(a); }

std::optional<Mat> solve(Mat const &a, Mat const &b)
{
  require_same_field(a, b, "solve");
  if (a.cols() != b.cols())
    throw std::invalid_argument("solve: x*a = b needs a and b with equal column counts");
  int const n = a.rows();
  Mat aug = hstack({a.transpose(), b.transpose()});
  auto r = rref(aug);
  if (r.rank > 0 && r.pivots.back() >= n)
    return std::nullopt;
  Mat xt(a.field(), n, b.rows());
  for (int i = 0; i < r.rank; ++i)
    for (int j = 0; j < b.rows(); ++j)
      xt(r.pivots[i], j) = r.form(i, n + j);
  return xt.transpose();
}

std::optional<Mat> try_inverse(Mat const &a)
{
  if (!a.square())
    throw std::invalid_argument("inverse of a non-square matrix");
  int const n = a.rows();
  auto r = rref(hstack({a, Mat::identity(a.field(), n)}));
  if (r.rank < n || (n > 0 && r.pivots[n - 1] != n - 1))
    return std::nullopt;
  return r.form.slice(0, n, n, n);
}

Mat inverse(Mat const &a)
{
  auto inv = try_inverse(a);
  if (!inv)
    throw std::domain_error("matrix is singular");
  return *inv;
}

Mat power(Mat const &a, long long e)
{
  if (!a.square())
    throw std::invalid_argument("power of a non-square matrix");
  Mat base = e < 0 ? inverse(a) : a;
  if (e < 0)
    e = -e;
  Mat result = Mat::identity(a.field(), a.rows());
  while (e > 0) {
    if (e & 1)
      result = result * base;
    base = base * base;
    e >>= 1;
  }
  return result;
}

long long multiplicative_order(Mat const &a, long long bound)
{
  Mat cur = a;
  for (long long k = 1; k <= bound; ++k) {
    if (cur.is_identity())
      return k;
    cur = cur * a;
  }
  return 0;
}

Subspace sum(Subspace const &u, Subspace const &v)
{
  if (u.ambient_dim() != v.ambient_dim())
    throw std::invalid_argument("sum: ambient mismatch");
  return Subspace::span(vstack({u.basis(), v.basis()}));
}

Subspace intersect(Subspace const &u, Subspace const &v)
{
  if (u.ambient_dim() != v.ambient_dim())
    throw std::invalid_argument("intersect: ambient mismatch");
  int const n = u.ambient_dim();
  // Zassenhaus: rows (u | u) and (v | 0); rows with vanishing left half
  // carry the intersection on the right.
  FieldPtr field = u.basis().field();
  Mat z(field, u.dim() + v.dim(), 2 * n);
  z.paste(0, 0, u.basis());
  z.paste(0, n, u.basis());
  z.paste(u.dim(), 0, v.basis());
  auto r = rref(z);
  int first = 0;
  while (first < r.rank && r.pivots[first] < n)
    ++first;
  return Subspace::span(r.form.slice(first, r.rank - first, n, n));
}

Mat block(std::vector<std::vector<Mat>> const &grid)
{
  if (grid.empty() || grid[0].empty())
    throw std::invalid_argument("empty block grid");
  std::size_t const nc = grid[0].size();
  std::vector<int> heights, widths(nc, -1);
  FieldPtr field = grid[0][0].field();
  for (auto const &row : grid) {
    if (row.size() != nc)
      throw std::invalid_argument("ragged block grid");
    int h = row[0].rows();
    for (std::size_t j = 0; j < nc; ++j) {
      require_same_field(grid[0][0], row[j], "block");
      if (row[j].rows() != h)
        throw std::invalid_argument("ragged block grid: heights differ within a block row");
      if (widths[j] < 0)
        widths[j] = row[j].cols();
      else if (widths[j] != row[j].cols())
        throw std::invalid_argument("ragged block grid: widths differ within a block column");
    }
    heights.push_back(h);
  }
  int total_r = 0, total_c = 0;
  for (int h : heights)
    total_r += h;
  for (int w : widths)
    total_c += w;
  Mat out(field, total_r, total_c);
  int r0 = 0;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    int c0 = 0;
    for (std::size_t j = 0; j < nc; ++j) {
      out.paste(r0, c0, grid[i][j]);
      c0 += widths[j];
    }
    r0 += heights[i];
  }
  return out;
}

Mat kron(Mat const &a, Mat const &b)
{
  require_same_field(a, b, "kron");
  Field const &f = a.f();
  Mat out(a.field(), a.rows() * b.rows(), a.cols() * b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) {
      Elem x = a(i, j);
      if (x == 0)
        continue;
      for (int k = 0; k < b.rows(); ++k)
        for (int l = 0; l < b.cols(); ++l)
          out(i * b.rows() + k, j * b.cols() + l) = f.mul(x, b(k, l));
    }
  return out;
}

Mat direct_sum(Mat const &a, Mat const &b)
{
  require_same_field(a, b, "direct_sum");
  Mat out(a.field(), a.rows() + b.rows(), a.cols() + b.cols());
  out.paste(0, 0, a);
  out.paste(a.rows(), a.cols(), b);
  return out;
}

Mat hstack(std::vector<Mat> const &mats)
{
  if (mats.empty())
    throw std::invalid_argument("hstack of nothing");
  int cols = 0;
  for (auto const &m : mats) {
    require_same_field(mats[0], m, "hstack");
    if (m.rows() != mats[0].rows())
      throw std::invalid_argument("hstack: row counts differ");
    cols += m.cols();
  }
  Mat out(mats[0].field(), mats[0].rows(), cols);
  int c0 = 0;
  for (auto const &m : mats) {
    out.paste(0, c0, m);
    c0 += m.cols();
  }
  return out;
}

Mat vstack(std::vector<Mat> const &mats)
{
  if (mats.empty())
    throw std::invalid_argument("vstack of nothing");
  int rows = 0;
  for (auto const &m : mats) {
    require_same_field(mats[0], m, "vstack");
    if (m.cols() != mats[0].cols())
      throw std::invalid_argument("vstack: column counts differ");
    rows += m.rows();
  }
  Mat out(mats[0].field(), rows, mats[0].cols());
  int r0 = 0;
  for (auto const &m : mats) {
    out.paste(r0, 0, m);
    r0 += m.rows();
  }
  return out;
}

EchelonBasis::EchelonBasis(FieldPtr field, int ambient) : field_(std::move(field)), ambient_(ambient) {}

void EchelonBasis::reduce(std::vector<Elem> &v, std::vector<Elem> *coeffs) const
{
  Field const &f = *field_;
  if (coeffs)
    coeffs->assign(rows_.size(), 0);
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    Elem c = v[pivots_[i]];
    if (c == 0)
      continue;
    if (coeffs)
      (*coeffs)[i] = c;
    f.axpy(std::span<Elem>(v).subspan(pivots_[i]), std::span<Elem const>(rows_[i]).subspan(pivots_[i]),
           f.neg(c));
  }
}

Elem EchelonBasis::insert_reduced(std::vector<Elem> &v)
{
  auto it = std::find_if(v.begin(), v.end(), [](Elem x) { return x != 0; });
  if (it == v.end())
    return 0;
  int piv = static_cast<int>(it - v.begin());
  Elem lead = *it;
  std::vector<Elem> row = v;
  field_->scale(row, field_->inv(lead));
  rows_.push_back(std::move(row));
  pivots_.push_back(piv);
  return lead;
}

bool EchelonBasis::insert(std::vector<Elem> v)
{
  if (static_cast<int>(v.size()) != ambient_)
    throw std::invalid_argument("vector length does not match ambient dimension");
  reduce(v);
  return insert_reduced(v) != 0;
}

Mat EchelonBasis::matrix() const
{
  Mat m(field_, dim(), ambient_);
  for (int i = 0; i < dim(); ++i)
    std::copy(rows_[i].begin(), rows_[i].end(), m.row(i).begin());
  return m;
}

Subspace EchelonBasis::canonical() const { return Subspace::span(matrix()); }

SparseSystem::SparseSystem(FieldPtr field, int unknowns)
  : field_(std::move(field)), n_(unknowns), pivot_rows_(unknowns)
{
}

void SparseSystem::normalize(Row &row) const
{
  std::sort(row.begin(), row.end(), [](Term const &a, Term const &b) { return a.first < b.first; });
  Row out;
  out.reserve(row.size());
  for (auto const &t : row) {
    if (t.first < 0 || t.first >= n_)
      throw std::out_of_range("sparse equation refers to unknown out of range");
    if (!out.empty() && out.back().first == t.first)
      out.back().second = field_->add(out.back().second, t.second);
    else
      out.push_back(t);
    if (out.back().second == 0)
      out.pop_back();
  }
  row.swap(out);
}

void SparseSystem::add_equation(std::vector<Term> terms)
{
  Field const &f = *field_;
  normalize(terms);
  Row scratch;
  while (!terms.empty()) {
    int const lead = terms.front().first;
    Row const &piv = pivot_rows_[lead];
    if (piv.empty()) {
      Elem s = f.inv(terms.front().second);
      for (auto &t : terms)
        t.second = f.mul(t.second, s);
      pivot_rows_[lead] = std::move(terms);
      ++rank_;
      return;
    }
    // terms -= c * piv, where piv has a leading 1 at `lead`
    Elem const c = f.neg(terms.front().second);
    scratch.clear();
    std::size_t i = 1, j = 1;
    while (i < terms.size() || j < piv.size()) {
      if (j >= piv.size() || (i < terms.size() && terms[i].first < piv[j].first)) {
        scratch.push_back(terms[i++]);
      } else if (i >= terms.size() || piv[j].first < terms[i].first) {
        scratch.emplace_back(piv[j].first, f.mul(c, piv[j].second));
        ++j;
      } else {
        Elem v = f.add(terms[i].second, f.mul(c, piv[j].second));
        if (v != 0)
          scratch.emplace_back(terms[i].first, v);
        ++i;
        ++j;
      }
    }
    terms.swap(scratch);
  }
}

Subspace SparseSystem::nullspace() const
{
  Field const &f = *field_;
  int const nullity = n_ - rank_;
  Mat basis(field_, nullity, n_);
  int k = 0;
  std::vector<Elem> x(n_);
  for (int free = 0; free < n_; ++free) {
    if (!pivot_rows_[free].empty())
      continue;
    std::fill(x.begin(), x.end(), Elem{0});
    x[free] = 1;
    for (int c = std::min(free, n_ - 1); c >= 0; --c) {
      Row const &row = pivot_rows_[c];
      if (row.empty())
        continue;
      Elem acc = 0;
      for (std::size_t t = 1; t < row.size(); ++t)
        if (x[row[t].first] != 0)
          acc = f.add(acc, f.mul(row[t].second, x[row[t].first]));
      x[c] = f.neg(acc);
    }
    std::copy(x.begin(), x.end(), basis.row(k).begin());
    ++k;
  }
  return Subspace::span(basis);
}

void write_mat_body(std::ostream &os, Mat const &m)
{
  os << m.rows() << ' ' << m.cols() << '\n';
  for (int i = 0; i < m.rows(); ++i) {
    for (int j = 0; j < m.cols(); ++j) {
      if (j)
        os << ' ';
      os << m(i, j);
    }
    os << '\n';
  }
}

void write_mat(std::ostream &os, Mat const &m)
{
  os << m.f().header() << '\n';
  write_mat_body(os, m);
}

Mat read_mat_body(std::istream &is, FieldPtr field)
{
  long long rows = -1, cols = -1;
  if (!(is >> rows >> cols) || rows < 0 || cols < 0)
    throw std::invalid_argument("matrix: bad dimension line");
  Mat m(field, static_cast<int>(rows), static_cast<int>(cols));
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) {
      long long v;
      if (!(is >> v))
        throw std::invalid_argument("matrix: truncated entries");
      if (v < 0 || v >= field->q())
        throw std::invalid_argument("matrix: entry " + std::to_string(v) + " out of range");
      m(i, j) = static_cast<Elem>(v);
    }
  return m;
}

Mat read_mat(std::istream &is)
{
  std::string line;
  while (std::getline(is, line) && line.find_first_not_of(" \t\r") == std::string::npos) {
  }
  if (!is && line.empty())
    throw std::invalid_argument("matrix: missing field header");
  return read_mat_body(is, Field::parse_header(line));
}

} // namespace brick
