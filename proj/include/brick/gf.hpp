#ifndef BRICK_GF_HPP
#define BRICK_GF_HPP

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

namespace brick
{

/// Packed field element: c0 + c1*p + ... + c_{m-1}*p^{m-1} for the residue
/// c0 + c1*x + ... of GF(p)[x]/(modulus).
using Elem = std::uint16_t;

class Field;
using FieldPtr = std::shared_ptr<const Field>;

/**
 * GF(p^m) for p^m <= 2^16.
 *
 * Immutable after construction. Multiplication, inversion and powers go
 * through log/antilog tables; for q <= 256 full addition and multiplication
 * tables are kept as well, since row operations dominate everything above.
 * Prime fields carry the placeholder modulus x (coefficients [0, 1]).
 */
class Field
{
public:
  static constexpr int kMaxOrder = 1 << 16;
  static constexpr int kFullTableOrder = 256;

  /// Field with the canonical modulus for (p, m). Instances are cached, so
  /// repeated calls return the same object.
  static FieldPtr make(int p, int m);

  /// Field with an explicit monic modulus (ascending coefficients). The
  /// modulus must be irreducible; extension fields additionally need x to be
  /// primitive, which every shipped modulus is.
  static FieldPtr with_modulus(int p, std::vector<int> modulus);

  int p() const { return p_; }
  int m() const { return m_; }
  int q() const { return q_; }
  std::vector<int> const &modulus() const { return modulus_; }

  bool prime_field() const { return m_ == 1; }

  Elem zero() const { return 0; }
  Elem one() const { return 1; }

  Elem add(Elem a, Elem b) const
  {
    if (p_ == 2)
      return static_cast<Elem>(a ^ b);
    if (m_ == 1) {
      int s = a + b;
      return static_cast<Elem>(s >= p_ ? s - p_ : s);
    }
    if (!add_.empty())
      return add_[static_cast<std::size_t>(a) * q_ + b];
    return add_slow(a, b);
  }

  Elem neg(Elem a) const { return neg_[a]; }
  Elem sub(Elem a, Elem b) const { return add(a, neg_[b]); }

  Elem mul(Elem a, Elem b) const
  {
    if (!mul_.empty())
      return mul_[static_cast<std::size_t>(a) * q_ + b];
    if (a == 0 || b == 0)
      return 0;
    return exp_[log_[a] + log_[b]];
  }

  /// Throws std::domain_error on zero.
  Elem inv(Elem a) const;
  Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }

  /// a^e; negative exponents need a != 0. 0^0 = 1.
  Elem pow(Elem a, long long e) const;

  /// Image of the integer n under Z -> GF(p) -> GF(q).
  Elem from_int(long long n) const;

  /// Fixed primitive element: the residue of x for extension fields, the
  /// least primitive root for prime fields.
  Elem primitive() const { return exp_[1]; }

  int log(Elem a) const;
  Elem exp(long long k) const;

  bool contains(Elem a) const { return a < q_; }

  /// Coefficients c0..c_{m-1} of the residue polynomial.
  std::vector<int> coefficients(Elem a) const;
  /// Inverse of coefficients(); throws on out-of-range digits.
  Elem from_coefficients(std::vector<int> const &c) const;

  /// dst[i] += c * src[i]
  void axpy(std::span<Elem> dst, std::span<Elem const> src, Elem c) const;
  /// row[i] *= c
  void scale(std::span<Elem> row, Elem c) const;

  /// `GF p m c0 ... cm`
  std::string header() const;

  /// Inverse of header(); returns the cached canonical field when the
  /// modulus is the canonical one.
  static FieldPtr parse_header(std::string const &line);

  bool operator==(Field const &o) const
  {
    return p_ == o.p_ && m_ == o.m_ && modulus_ == o.modulus_;
  }

  Field(int p, std::vector<int> modulus);

private:
  Elem add_slow(Elem a, Elem b) const;

  int p_;
  int m_;
  int q_;
  std::vector<int> modulus_;

  std::vector<Elem> exp_;  // 2(q-1) entries so log sums need no reduction
  std::vector<int> log_;   // log_[0] unused
  std::vector<Elem> neg_;
  std::vector<Elem> inv_;
  std::vector<Elem> add_;  // q*q, only for odd q <= kFullTableOrder
  std::vector<Elem> mul_;  // q*q, only for q <= kFullTableOrder
};

bool same_field(Field const &a, Field const &b);
inline bool same_field(FieldPtr const &a, FieldPtr const &b)
{
  return a == b || (a && b && *a == *b);
}

bool is_prime(long long n);

/// Exhaustive trial division by every monic polynomial of degree <= m/2.
bool is_irreducible_poly(int p, std::vector<int> const &coeffs);

/// Canonical modulus for GF(p^m): a Conway polynomial from the shipped table,
/// otherwise the first primitive polynomial in lexicographic coefficient order.
std::vector<int> canonical_modulus(int p, int m);

/**
 * Field element that knows its field. Convenient at API boundaries and in
 * tests; matrices store bare Elem values instead.
 */
class FieldElem
{
public:
  FieldElem(FieldPtr field, Elem value);

  FieldPtr const &field() const { return field_; }
  Elem value() const { return value_; }

  FieldElem operator+(FieldElem const &o) const;
  FieldElem operator-(FieldElem const &o) const;
  FieldElem operator*(FieldElem const &o) const;
  FieldElem operator-() const;
  FieldElem inv() const;
  FieldElem pow(long long e) const;

  bool operator==(FieldElem const &o) const
  {
    return same_field(field_, o.field_) && value_ == o.value_;
  }

private:
  void check_same(FieldElem const &o) const;

  FieldPtr field_;
  Elem value_;
};

} // namespace brick

#endif // BRICK_GF_HPP
