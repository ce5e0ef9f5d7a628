#include "brick/gf.hpp"

#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>

namespace brick
{

namespace
{

struct ConwayEntry
{
  int p;
  int m;
  std::vector<int> coeffs;
};

// Conway polynomials, ascending coefficients.
std::vector<ConwayEntry> const &conway_table()
{
  static std::vector<ConwayEntry> const table = {
    {2, 2, {1, 1, 1}},
    {2, 3, {1, 1, 0, 1}},
    {2, 4, {1, 1, 0, 0, 1}},
    {2, 5, {1, 0, 1, 0, 0, 1}},
    {2, 6, {1, 1, 0, 1, 1, 0, 1}},
    {2, 7, {1, 1, 0, 0, 0, 0, 0, 1}},
    {2, 8, {1, 0, 1, 1, 1, 0, 0, 0, 1}},
    {3, 2, {2, 2, 1}},
    {3, 3, {1, 2, 0, 1}},
    {3, 4, {2, 0, 0, 2, 1}},
    {5, 2, {2, 4, 1}},
    {5, 3, {3, 3, 0, 1}},
    {7, 2, {3, 6, 1}},
  };
  return table;
}

long long ipow(long long b, int e)
{
  long long r = 1;
  while (e-- > 0)
    r *= b;
  return r;
}

// Remainder of a by monic b over GF(p); both ascending, trailing zeros allowed.
std::vector<int> poly_mod(std::vector<int> a, std::vector<int> const &b, int p)
{
  int db = static_cast<int>(b.size()) - 1;
  for (int i = static_cast<int>(a.size()) - 1; i >= db; --i) {
    int c = a[i] % p;
    if (c == 0)
      continue;
    for (int j = 0; j <= db; ++j)
      a[i - db + j] = ((a[i - db + j] - c * b[j]) % p + p) % p;
  }
  a.resize(std::max(db, 0));
  return a;
}

// Multiplicative order of x modulo the monic polynomial, or 0 if x is not a
// unit or the order exceeds p^m - 1.
long long order_of_x(int p, std::vector<int> const &mod)
{
  int m = static_cast<int>(mod.size()) - 1;
  long long bound = ipow(p, m) - 1;
  if (mod[0] % p == 0)
    return 0;
  std::vector<int> cur(m, 0);
  cur[0] = 1;
  for (long long k = 1; k <= bound; ++k) {
    std::vector<int> next(m + 1, 0);
    for (int i = 0; i < m; ++i)
      next[i + 1] = cur[i];
    cur = poly_mod(next, mod, p);
    bool is_one = cur[0] == 1;
    for (int i = 1; is_one && i < m; ++i)
      is_one = cur[i] == 0;
    if (is_one)
      return k;
  }
  return 0;
}

void check_parameters(int p, int m)
{
  if (!is_prime(p))
    throw std::invalid_argument("field characteristic " + std::to_string(p) + " is not prime");
  if (m < 1)
    throw std::invalid_argument("field degree must be >= 1");
  if (ipow(p, m) > Field::kMaxOrder)
    throw std::invalid_argument("field order " + std::to_string(p) + "^" + std::to_string(m) +
                                " exceeds 2^16");
}

} // namespace

bool is_prime(long long n)
{
  if (n < 2)
    return false;
  for (long long d = 2; d * d <= n; ++d)
    if (n % d == 0)
      return false;
  return true;
}

bool is_irreducible_poly(int p, std::vector<int> const &coeffs)
{
  int m = static_cast<int>(coeffs.size()) - 1;
  if (m < 1 || coeffs.back() % p != 1)
    return false;
  if (m == 1)
    return true;
  for (int d = 1; d <= m / 2; ++d) {
    long long count = ipow(p, d);
    for (long long code = 0; code < count; ++code) {
      std::vector<int> div(d + 1);
      long long c = code;
      for (int i = 0; i < d; ++i) {
        div[i] = static_cast<int>(c % p);
        c /= p;
      }
      div[d] = 1;
      auto r = poly_mod(coeffs, div, p);
      bool zero = true;
      for (int v : r)
        zero = zero && v == 0;
      if (zero)
        return false;
    }
  }
  return true;
}

std::vector<int> canonical_modulus(int p, int m)
{
  check_parameters(p, m);
  if (m == 1)
    return {0, 1};
  for (auto const &e : conway_table())
    if (e.p == p && e.m == m)
      return e.coeffs;
  long long count = ipow(p, m);
  for (long long code = 1; code < count; ++code) {
    std::vector<int> c(m + 1);
    long long x = code;
    for (int i = 0; i < m; ++i) {
      c[i] = static_cast<int>(x % p);
      x /= p;
    }
    c[m] = 1;
    if (c[0] == 0)
      continue;
    if (order_of_x(p, c) == count - 1)
      return c;
  }
  throw std::logic_error("no primitive polynomial found");
}

Field::Field(int p, std::vector<int> modulus)
  : p_(p), m_(static_cast<int>(modulus.size()) - 1), modulus_(std::move(modulus))
{
  check_parameters(p_, m_);
  q_ = static_cast<int>(ipow(p_, m_));
  for (int &c : modulus_) {
    if (c < 0 || c >= p_)
      throw std::invalid_argument("modulus coefficient out of range");
  }
  if (modulus_.back() != 1)
    throw std::invalid_argument("modulus must be monic");

  exp_.assign(2 * static_cast<std::size_t>(q_ - 1), 0);
  log_.assign(q_, -1);

  if (m_ == 1) {
    if (modulus_ != std::vector<int>{0, 1})
      throw std::invalid_argument("prime field modulus must be x");
    int root = 1;
    for (int g = 1; g < p_; ++g) {
      long long v = 1;
      int ord = 0;
      do {
        v = v * g % p_;
        ++ord;
      } while (v != 1);
      if (ord == p_ - 1) {
        root = g;
        break;
      }
    }
    long long v = 1;
    for (int k = 0; k < q_ - 1; ++k) {
      exp_[k] = static_cast<Elem>(v);
      log_[v] = k;
      v = v * root % p_;
    }
  } else {
    if (!is_irreducible_poly(p_, modulus_))
      throw std::invalid_argument("modulus is reducible");
    if (order_of_x(p_, modulus_) != q_ - 1)
      throw std::invalid_argument("modulus is irreducible but x is not primitive");
    std::vector<int> cur(m_, 0);
    cur[0] = 1;
    for (int k = 0; k < q_ - 1; ++k) {
      long long code = 0;
      for (int i = m_ - 1; i >= 0; --i)
        code = code * p_ + cur[i];
      exp_[k] = static_cast<Elem>(code);
      log_[code] = k;
      std::vector<int> next(m_ + 1, 0);
      for (int i = 0; i < m_; ++i)
        next[i + 1] = cur[i];
      cur = poly_mod(next, modulus_, p_);
    }
  }
  for (int k = q_ - 1; k < 2 * (q_ - 1); ++k)
    exp_[k] = exp_[k - (q_ - 1)];

  neg_.resize(q_);
  inv_.assign(q_, 0);
  for (int a = 0; a < q_; ++a) {
    int digits = a, r = 0, place = 1;
    for (int i = 0; i < m_; ++i) {
      int d = digits % p_;
      digits /= p_;
      r += ((p_ - d) % p_) * place;
      place *= p_;
    }
    neg_[a] = static_cast<Elem>(r);
    if (a != 0)
      inv_[a] = exp_[(q_ - 1 - log_[a]) % (q_ - 1)];
  }

  if (q_ <= kFullTableOrder) {
    std::size_t qq = static_cast<std::size_t>(q_) * q_;
    mul_.resize(qq);
    if (p_ != 2)
      add_.resize(qq);
    for (int a = 0; a < q_; ++a) {
      for (int b = 0; b < q_; ++b) {
        std::size_t idx = static_cast<std::size_t>(a) * q_ + b;
        mul_[idx] = (a == 0 || b == 0) ? 0 : exp_[log_[a] + log_[b]];
        if (!add_.empty())
          add_[idx] = add_slow(static_cast<Elem>(a), static_cast<Elem>(b));
      }
    }
  }
}

Elem Field::add_slow(Elem a, Elem b) const
{
  int r = 0, place = 1;
  int x = a, y = b;
  for (int i = 0; i < m_; ++i) {
    int d = (x % p_ + y % p_) % p_;
    x /= p_;
    y /= p_;
    r += d * place;
    place *= p_;
  }
  return static_cast<Elem>(r);
}

FieldPtr Field::make(int p, int m)
{
  static std::mutex mutex;
  static std::map<std::pair<int, int>, FieldPtr> cache;
  check_parameters(p, m);
  std::lock_guard<std::mutex> lock(mutex);
  auto it = cache.find({p, m});
  if (it != cache.end())
    return it->second;
  auto f = std::make_shared<Field const>(p, canonical_modulus(p, m));
  cache.emplace(std::make_pair(p, m), f);
  return f;
}

FieldPtr Field::with_modulus(int p, std::vector<int> modulus)
{
  int m = static_cast<int>(modulus.size()) - 1;
  check_parameters(p, std::max(m, 1));
  if (m >= 1 && canonical_modulus(p, m) == modulus)
    return make(p, m);
  return std::make_shared<Field const>(p, std::move(modulus));
}

Elem Field::inv(Elem a) const
{
  if (a == 0)
    throw std::domain_error("inverse of zero");
  return inv_[a];
}

Elem Field::pow(Elem a, long long e) const
{
  if (a == 0) {
    if (e < 0)
      throw std::domain_error("negative power of zero");
    return e == 0 ? 1 : 0;
  }
  long long n = q_ - 1;
  long long k = (static_cast<long long>(log_[a]) * (e % n)) % n;
  if (k < 0)
    k += n;
  return exp_[k];
}

Elem Field::from_int(long long n) const
{
  long long r = n % p_;
  if (r < 0)
    r += p_;
  return static_cast<Elem>(r);
}

int Field::log(Elem a) const
{
  if (a == 0)
    throw std::domain_error("log of zero");
  return log_[a];
}

Elem Field::exp(long long k) const
{
  long long n = q_ - 1;
  k %= n;
  if (k < 0)
    k += n;
  return exp_[k];
}

std::vector<int> Field::coefficients(Elem a) const
{
  if (!contains(a))
    throw std::invalid_argument("element out of range");
  std::vector<int> c(m_);
  int x = a;
  for (int i = 0; i < m_; ++i) {
    c[i] = x % p_;
    x /= p_;
  }
  return c;
}

Elem Field::from_coefficients(std::vector<int> const &c) const
{
  if (static_cast<int>(c.size()) != m_)
    throw std::invalid_argument("coefficient vector has wrong length");
  int v = 0;
  for (int i = m_ - 1; i >= 0; --i) {
    if (c[i] < 0 || c[i] >= p_)
      throw std::invalid_argument("coefficient out of range");
    v = v * p_ + c[i];
  }
  return static_cast<Elem>(v);
}

void Field::axpy(std::span<Elem> dst, std::span<Elem const> src, Elem c) const
{
  std::size_t n = dst.size();
  if (c == 0)
    return;
  if (p_ == 2 && m_ == 1) {
    for (std::size_t i = 0; i < n; ++i)
      dst[i] ^= src[i];
    return;
  }
  if (!mul_.empty()) {
    Elem const *row = mul_.data() + static_cast<std::size_t>(c) * q_;
    if (p_ == 2) {
      for (std::size_t i = 0; i < n; ++i)
        dst[i] ^= row[src[i]];
    } else {
      Elem const *at = add_.data();
      for (std::size_t i = 0; i < n; ++i)
        dst[i] = at[static_cast<std::size_t>(dst[i]) * q_ + row[src[i]]];
    }
    return;
  }
  if (m_ == 1) {
    unsigned const pp = static_cast<unsigned>(p_);
    for (std::size_t i = 0; i < n; ++i)
      dst[i] = static_cast<Elem>((dst[i] + static_cast<unsigned>(c) * src[i]) % pp);
    return;
  }
  for (std::size_t i = 0; i < n; ++i)
    if (src[i] != 0)
      dst[i] = add(dst[i], mul(c, src[i]));
}

void Field::scale(std::span<Elem> row, Elem c) const
{
  if (c == 1)
    return;
  for (auto &x : row)
    x = mul(x, c);
}

std::string Field::header() const
{
  std::ostringstream os;
  os << "GF " << p_ << ' ' << m_;
  for (int c : modulus_)
    os << ' ' << c;
  return os.str();
}

FieldPtr Field::parse_header(std::string const &line)
{
  std::istringstream is(line);
  std::string tag;
  int p = 0, m = 0;
  if (!(is >> tag >> p >> m) || tag != "GF")
    throw std::invalid_argument("bad field header: '" + line + "'");
  if (m < 1 || m > 16)
    throw std::invalid_argument("bad field degree in header: '" + line + "'");
  std::vector<int> mod(m + 1);
  for (int &c : mod)
    if (!(is >> c))
      throw std::invalid_argument("truncated modulus in header: '" + line + "'");
  std::string extra;
  if (is >> extra)
    throw std::invalid_argument("trailing data in field header: '" + line + "'");
  if (m == 1) {
    if (mod != std::vector<int>{0, 1})
      throw std::invalid_argument("prime field header must use modulus 0 1");
    return make(p, 1);
  }
  return with_modulus(p, std::move(mod));
}

bool same_field(Field const &a, Field const &b) { return a == b; }

FieldElem::FieldElem(FieldPtr field, Elem value) : field_(std::move(field)), value_(value)
{
  if (!field_)
    throw std::invalid_argument("null field");
  if (!field_->contains(value_))
    throw std::invalid_argument("element out of range for " + field_->header());
}

void FieldElem::check_same(FieldElem const &o) const
{
  if (!same_field(field_, o.field_))
    throw std::invalid_argument("operands belong to different fields");
}

FieldElem FieldElem::operator+(FieldElem const &o) const
{
  check_same(o);
  return {field_, field_->add(value_, o.value_)};
}

FieldElem FieldElem::operator-(FieldElem const &o) const
{
  check_same(o);
  return {field_, field_->sub(value_, o.value_)};
}

FieldElem FieldElem::operator*(FieldElem const &o) const
{
  check_same(o);
  return {field_, field_->mul(value_, o.value_)};
}

FieldElem FieldElem::operator-() const { return {field_, field_->neg(value_)}; }
FieldElem FieldElem::inv() const { return {field_, field_->inv(value_)}; }
FieldElem FieldElem::pow(long long e) const { return {field_, field_->pow(value_, e)}; }

} // namespace brick
