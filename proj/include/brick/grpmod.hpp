#ifndef BRICK_GRPMOD_HPP
#define BRICK_GRPMOD_HPP

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "brick/matrix.hpp"
#include "brick/perm.hpp"
#include "brick/presentation.hpp"

namespace brick
{

/**
 * Module for a finitely generated group: one invertible matrix per abstract
 * generator, acting on row vectors from the right. `group` names the group
 * the generators belong to (a catalog id); modules with different tags are
 * never compared.
 */
class GroupRep
{
public:
  GroupRep() = default;
  /// Throws std::invalid_argument on a shape or field mismatch and when a
  /// generator matrix is singular.
  GroupRep(FieldPtr field, int dim, std::vector<Mat> gens, std::string group = {});

  FieldPtr const &field() const { return field_; }
  int dim() const { return dim_; }
  int ngens() const { return static_cast<int>(gens_.size()); }
  Mat const &gen(int i) const { return gens_[i]; }
  std::vector<Mat> const &gens() const { return gens_; }
  Mat const &gen_inverse(int i) const { return inverses_[i]; }
  std::string const &group() const { return group_; }
  void set_group(std::string group) { group_ = std::move(group); }

  /// Matrix of a word in the generators.
  Mat word(Word const &w) const;

private:
  FieldPtr field_;
  int dim_ = 0;
  std::vector<Mat> gens_;
  std::vector<Mat> inverses_;
  std::string group_;
};

/// Throws std::invalid_argument unless a and b share field, group tag and
/// generator count.
void require_compatible(GroupRep const &a, GroupRep const &b, char const *what);

GroupRep perm_to_rep(PermGroup const &g, FieldPtr field, std::string group = {});
GroupRep trivial_rep(FieldPtr field, int ngens, std::string group = {});

/// F is an intertwiner a -> b: F * rho_b(g) = rho_a(g) * F for every generator.
bool is_hom(GroupRep const &a, GroupRep const &b, Mat const &f);

/**
 * Canonical basis of Hom(a, b) as dim(a) x dim(b) matrices (RREF of the
 * flattened maps). Spins a from standard basis vectors, takes the images of
 * the spin seeds as unknowns and turns every closing relation into linear
 * equations on them.
 */
std::vector<Mat> hom_g(GroupRep const &a, GroupRep const &b);

/// Smallest invariant subspace containing the rows of `seeds`.
Subspace spin(GroupRep const &a, Mat const &seeds);

/// Action on an invariant subspace in its canonical basis. Throws
/// std::invalid_argument if the subspace is not invariant.
GroupRep sub(GroupRep const &a, Subspace const &w);
/// Action on a / w in the basis given by the non-pivot coordinates of w.
GroupRep quotient(GroupRep const &a, Subspace const &w);
/// dim(a) x (dim(a) - dim(w)) matrix of the projection a -> a / w.
Mat quotient_projection(Subspace const &w);
/// Generators replaced by their inverse transposes.
GroupRep dual(GroupRep const &a);
GroupRep tensor(GroupRep const &a, GroupRep const &b);
GroupRep direct_sum(GroupRep const &a, GroupRep const &b);
/// c^-1 * rho(g) * c for invertible c; c is then an isomorphism from a to
/// the result.
GroupRep conjugate(GroupRep const &a, Mat const &c);

struct SplitResult
{
  bool irreducible = false;
  Subspace submodule;  // proper non-zero invariant subspace when reducible
};

/// One MeatAxe step: a proper submodule or an irreducibility certificate via
/// Norton's test. Throws std::runtime_error if no usable algebra element
/// turns up within the attempt budget.
SplitResult meataxe_split(GroupRep const &a, std::uint64_t seed);

bool is_irreducible(GroupRep const &a, std::uint64_t seed = 1);
/// Irreducible with one-dimensional endomorphism algebra.
bool is_absolutely_irreducible(GroupRep const &a, std::uint64_t seed = 1);

struct Factor
{
  GroupRep module;
  int multiplicity = 0;
};

/// Composition factors up to isomorphism, sorted by dimension and then by
/// discovery order. Deterministic given the seed.
std::vector<Factor> chop(GroupRep const &a, std::uint64_t seed = 1);

/**
 * Intersection of the kernels of all maps from a to the given simple modules.
 * The list must contain every simple in the top of a. Throws
 * std::runtime_error if the quotient fails the semisimplicity re-check.
 */
Subspace radical(GroupRep const &a, std::vector<GroupRep> const &simples);

/// Isomorphism witness a -> b if one is found. Tries the hom basis, then
/// seeded random combinations, then every combination when the hom space
/// has dimension <= 3 over a field with at most 9 elements.
std::optional<Mat> iso_test(GroupRep const &a, GroupRep const &b, std::uint64_t seed = 1);

/// Field header; `n gens`; each generator in the matrix format.
void write_group_rep(std::ostream &os, GroupRep const &a);
GroupRep read_group_rep(std::istream &is, std::string group = {});

} // namespace brick

#endif // BRICK_GRPMOD_HPP
