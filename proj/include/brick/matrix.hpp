#ifndef BRICK_MATRIX_HPP
#define BRICK_MATRIX_HPP

#include <iosfwd>
#include <optional>
#include <span>
#include <vector>

#include "brick/gf.hpp"

namespace brick
{

/**
 * Dense row-major matrix over a finite field.
 *
 * Convention used throughout the library: vectors are rows and maps act on
 * the right, v -> v * M. A map from an a-dimensional space to a
 * b-dimensional space is therefore an a x b matrix and composition reads
 * left to right.
 */
class Mat
{
public:
  Mat() = default;
  Mat(FieldPtr field, int rows, int cols);

  static Mat identity(FieldPtr field, int n);
  static Mat from_rows(FieldPtr field, std::vector<std::vector<int>> const &rows);
  /// Single row vector.
  static Mat row_vector(FieldPtr field, std::span<Elem const> v);

  FieldPtr const &field() const { return field_; }
  Field const &f() const { return *field_; }
  int rows() const { return rows_; }
  int cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  Elem operator()(int i, int j) const { return data_[idx(i, j)]; }
  Elem &operator()(int i, int j) { return data_[idx(i, j)]; }

  std::span<Elem> row(int i) { return {data_.data() + idx(i, 0), static_cast<std::size_t>(cols_)}; }
  std::span<Elem const> row(int i) const
  {
    return {data_.data() + idx(i, 0), static_cast<std::size_t>(cols_)};
  }
  std::vector<Elem> const &data() const { return data_; }
  std::vector<Elem> &data() { return data_; }

  bool is_zero() const;
  bool is_identity() const;

  Mat transpose() const;
  Mat operator+(Mat const &o) const;
  Mat operator-(Mat const &o) const;
  Mat operator*(Mat const &o) const;
  Mat operator-() const;
  Mat scaled(Elem c) const;

  /// Rows [r0, r0+nr) and columns [c0, c0+nc).
  Mat slice(int r0, int nr, int c0, int nc) const;
  void paste(int r0, int c0, Mat const &block);

  bool operator==(Mat const &o) const;

private:
  std::size_t idx(int i, int j) const { return static_cast<std::size_t>(i) * cols_ + j; }

  FieldPtr field_;
  int rows_ = 0;
  int cols_ = 0;
  std::vector<Elem> data_;
};

void require_same_field(Mat const &a, Mat const &b, char const *what);

/// Row vector times matrix.
std::vector<Elem> vec_mul(std::span<Elem const> v, Mat const &m);

struct RrefResult
{
  Mat form;
  std::vector<int> pivots;
  int rank = 0;
};

/// Reduced row echelon form. Deterministic: leftmost pivot column, topmost
/// available row. GF(2) goes through a bit-packed kernel.
RrefResult rref(Mat const &a);
/// Reference dense path regardless of field; kept callable so tests can pit
/// the packed GF(2) kernel against it.
RrefResult rref_generic(Mat const &a);
int rank(Mat const &a);

/**
 * Subspace of k^n with its canonical basis: the rows of the RREF matrix, so
 * equal subspaces have identical bases.
 */
class Subspace
{
public:
  Subspace() = default;
  static Subspace span(Mat const &rows);
  static Subspace zero(FieldPtr field, int ambient);
  static Subspace full(FieldPtr field, int ambient);

  int ambient_dim() const { return ambient_; }
  int dim() const { return basis_.rows(); }
  Mat const &basis() const { return basis_; }
  std::vector<int> const &pivots() const { return pivots_; }
  FieldPtr const &field() const { return basis_.field(); }

  bool contains(std::span<Elem const> v) const;
  bool contains(Subspace const &other) const;
  /// Coordinates of v in the canonical basis; std::nullopt when v is outside.
  std::optional<std::vector<Elem>> coordinates(std::span<Elem const> v) const;
  /// Coordinates of every row of m; throws if a row lies outside.
  Mat coordinates(Mat const &m) const;
  /// v minus its projection along the basis onto the pivot coordinates.
  std::vector<Elem> reduce(std::span<Elem const> v) const;

  bool operator==(Subspace const &o) const { return ambient_ == o.ambient_ && basis_ == o.basis_; }

private:
  int ambient_ = 0;
  Mat basis_;
  std::vector<int> pivots_;
};

/// {v : v * a^T = 0}; vectors of length a.cols(), dimension cols - rank.
Subspace nullspace(Mat const &a);
/// {v : v * a = 0}; the kernel of the map v -> v a.
Subspace kernel(Mat const &a);
/// Row space, i.e. the image of v -> v a.
Subspace image(Mat const &a);

/// Canonical particular solution of x * a = b (free variables zero), or
/// std::nullopt when inconsistent. Throws on dimension mismatch.
std::optional<Mat> solve(Mat const &a, Mat const &b);

std::optional<Mat> try_inverse(Mat const &a);
/// Throws std::domain_error when singular.
Mat inverse(Mat const &a);
Mat power(Mat const &a, long long e);
/// Smallest k >= 1 with a^k = 1, up to the given bound; 0 if not reached.
long long multiplicative_order(Mat const &a, long long bound = 1000000);

Subspace sum(Subspace const &u, Subspace const &v);
Subspace intersect(Subspace const &u, Subspace const &v);

Mat block(std::vector<std::vector<Mat>> const &grid);
Mat kron(Mat const &a, Mat const &b);
Mat direct_sum(Mat const &a, Mat const &b);
Mat hstack(std::vector<Mat> const &mats);
Mat vstack(std::vector<Mat> const &mats);

/**
 * Incremental semi-echelon basis. Each inserted vector is reduced against
 * the earlier rows and normalized to a leading 1, which is all spinning
 * needs; canonical() converts to the RREF Subspace.
 */
class EchelonBasis
{
public:
  EchelonBasis(FieldPtr field, int ambient);

  int dim() const { return static_cast<int>(rows_.size()); }
  int ambient_dim() const { return ambient_; }

  /// Reduce v in place. When coeffs is given, coeffs[i] receives the
  /// multiple of row i that was subtracted.
  void reduce(std::vector<Elem> &v, std::vector<Elem> *coeffs = nullptr) const;
  /// Insert the reduced v if non-zero. Returns the leading coefficient that
  /// was divided out, or 0 if v was dependent. v is left reduced.
  Elem insert_reduced(std::vector<Elem> &v);
  bool insert(std::vector<Elem> v);

  std::vector<Elem> const &row(int i) const { return rows_[i]; }
  int pivot(int i) const { return pivots_[i]; }
  Subspace canonical() const;
  Mat matrix() const;

private:
  FieldPtr field_;
  int ambient_;
  std::vector<std::vector<Elem>> rows_;
  std::vector<int> pivots_;
};

/**
 * Sparse homogeneous linear system in `unknowns` variables. Equations are
 * eliminated as they arrive into an echelon form with the leftmost pivot
 * rule; the nullspace comes back as a canonical Subspace.
 */
class SparseSystem
{
public:
  using Term = std::pair<int, Elem>;

  SparseSystem(FieldPtr field, int unknowns);

  /// Terms may repeat columns; they are merged.
  void add_equation(std::vector<Term> terms);
  int rank() const { return rank_; }
  int unknowns() const { return n_; }
  Subspace nullspace() const;

private:
  using Row = std::vector<Term>;
  void normalize(Row &row) const;

  FieldPtr field_;
  int n_;
  int rank_ = 0;
  std::vector<Row> pivot_rows_;  // indexed by pivot column; empty if free
};

// Text formats. Header line, then `rows cols`, then one row per line.
void write_mat(std::ostream &os, Mat const &m);
Mat read_mat(std::istream &is);
/// Body only (`rows cols` and entries), for files that carry one header.
void write_mat_body(std::ostream &os, Mat const &m);
Mat read_mat_body(std::istream &is, FieldPtr field);

} // namespace brick

#endif // BRICK_MATRIX_HPP
