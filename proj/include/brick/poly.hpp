#ifndef BRICK_POLY_HPP
#define BRICK_POLY_HPP

#include <cstdint>
#include <vector>

#include "brick/matrix.hpp"

namespace brick
{

/// Univariate polynomial, ascending coefficients, no trailing zeros. The zero
/// polynomial is the empty vector.
using Poly = std::vector<Elem>;

int poly_degree(Poly const &a);
void poly_trim(Poly &a);
Poly poly_add(Field const &f, Poly const &a, Poly const &b);
Poly poly_sub(Field const &f, Poly const &a, Poly const &b);
Poly poly_mul(Field const &f, Poly const &a, Poly const &b);
/// a = q*b + r with deg r < deg b. Throws std::domain_error if b is zero.
void poly_divmod(Field const &f, Poly const &a, Poly const &b, Poly &quot, Poly &rem);
Poly poly_mod(Field const &f, Poly const &a, Poly const &b);
Poly poly_monic(Field const &f, Poly a);
/// Monic gcd; gcd(0, 0) = 0.
Poly poly_gcd(Field const &f, Poly a, Poly b);
Poly poly_derivative(Field const &f, Poly const &a);
Poly poly_powmod(Field const &f, Poly base, std::uint64_t e, Poly const &mod);

/// det(xI - a) via reduction to Hessenberg form.
Poly charpoly(Mat const &a);

/// p(a) by Horner's rule.
Mat poly_eval(Poly const &p, Mat const &a);

/// Distinct monic irreducible factors of a non-zero polynomial, sorted by
/// degree and then coefficients. Equal-degree splitting draws from a
/// generator seeded with `seed`; the result does not depend on it.
std::vector<Poly> irreducible_factors(Field const &f, Poly const &a, std::uint64_t seed = 1);

} // namespace brick

#endif // BRICK_POLY_HPP
