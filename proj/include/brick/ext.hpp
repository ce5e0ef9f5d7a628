#ifndef BRICK_EXT_HPP
#define BRICK_EXT_HPP

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "brick/grpmod.hpp"
#include "brick/perm.hpp"
#include "brick/presentation.hpp"

namespace brick
{

class PresentationError : public std::runtime_error
{
public:
  using std::runtime_error::runtime_error;
};

/**
 * A presentation checked against a permutation group: every relator holds on
 * the permutation generators and coset enumeration over the trivial subgroup
 * finishes with index equal to the group order. Only verify() creates one,
 * so holding a VerifiedPresentation is the proof of that check.
 */
class VerifiedPresentation
{
public:
  /// Throws PresentationError when a relator fails, the enumeration
  /// overflows `cap`, or the index differs from the group order.
  static VerifiedPresentation verify(Presentation p, PermGroup const &g, long long cap = kDefaultCosetCap);

  Presentation const &presentation() const { return p_; }
  std::uint64_t order() const { return order_; }
  long long cosets_defined() const { return defined_; }

private:
  VerifiedPresentation() = default;
  Presentation p_;
  std::uint64_t order_ = 0;
  long long defined_ = 0;
};

/**
 * Extension 0 -> bottom -> E -> top -> 0 given by one dim(top) x dim(bottom)
 * block per generator. In the basis (top coordinates, bottom coordinates)
 * generator g of E acts by [[rho_top(g), d(g)], [0, rho_bottom(g)]], so the
 * bottom coordinates span the submodule.
 */
struct ExtClass
{
  GroupRep top;
  GroupRep bottom;
  std::vector<Mat> cocycle;
  std::string top_label;
  std::string bottom_label;

  /// Blocks concatenated in generator order, each row-major.
  std::vector<Elem> flatten() const;
  static ExtClass unflatten(GroupRep top, GroupRep bottom, std::span<Elem const> v);
};

/// Generator matrices of the extension module.
std::vector<Mat> extension_generators(ExtClass const &c);
/// Every relator evaluates to the identity on the block matrices.
bool is_cocycle(ExtClass const &c, Presentation const &p);

/**
 * Ext^1(top, bottom) in cocycle form: the solution space Z of the relator
 * equations, the coboundaries B, and canonical representatives of Z / B
 * (RREF of Z reduced modulo B).
 */
struct ExtSpace
{
  GroupRep top;
  GroupRep bottom;
  Subspace cocycles;
  Subspace coboundaries;
  Subspace classes;

  int dim() const { return classes.dim(); }
  std::vector<ExtClass> basis() const;
  /// Coordinates of a cocycle's class in the canonical basis. Throws
  /// std::invalid_argument if the blocks do not form a cocycle.
  std::vector<Elem> coordinates(ExtClass const &c) const;
  /// Cocycle sum_i coords[i] * basis()[i].
  ExtClass combination(std::span<Elem const> coords) const;
  /// Class of c is zero.
  bool is_split(ExtClass const &c) const;
};

struct ExtOptions
{
  /// Skip the absolute-irreducibility and non-isomorphism checks. Only for
  /// checking the method on examples outside its contract.
  bool unchecked = false;
};

/**
 * Ext^1(S, T) from the relator equations. Throws std::invalid_argument if
 * S or T is not absolutely irreducible, if they are isomorphic, or if either
 * fails a relator.
 */
ExtSpace ext1_cocycle(GroupRep const &s, GroupRep const &t, VerifiedPresentation const &p, ExtOptions opt = {});

/// Modules whose |G| * dim(T) exceeds this are refused by ext1_freehull.
constexpr long long kDefaultFreeHullCap = 20000;

/**
 * dim Ext^1(S, T) from the free hull 0 -> K -> kG -> S -> 0, with kG -> S
 * sending the identity to the first standard basis vector:
 * dim Hom(K, T) - dim T + dim Hom(S, T). Throws std::length_error past the
 * cap and std::invalid_argument on the same contract as ext1_cocycle.
 */
int ext1_freehull(GroupRep const &s, GroupRep const &t, PermGroup const &g, long long cap = kDefaultFreeHullCap,
                  ExtOptions opt = {});

struct ExtensionModule
{
  GroupRep module;
  Subspace bottom;  // the submodule, spanned by the trailing coordinates
  bool split = false;
};

/// The block module of a single class. A zero class gives the split
/// extension and sets `split`.
ExtensionModule extension_module(ExtClass const &c);

/// Index of the first class in the span of the earlier ones and the
/// coboundaries, or nullopt. All classes must share top and bottom.
std::optional<std::size_t> first_dependent_class(std::vector<ExtClass> const &classes);

struct StackedModule
{
  GroupRep module;
  Subspace bottom;
};

/**
 * Top S over the direct sum of the bottoms of `classes` (all with top S),
 * one cocycle block per class in the first block row. Classes with the same
 * bottom module must be linearly independent in Ext^1; otherwise
 * std::invalid_argument names the first dependent class. The result is
 * checked to have radical equal to the bottom.
 */
StackedModule stack_extensions(GroupRep const &s, std::vector<ExtClass> const &classes);

/// Field header; `top <label>`; `bottom <label>`; `gens <n>`; blocks.
void write_ext_class(std::ostream &os, ExtClass const &c);
ExtClass read_ext_class(std::istream &is, GroupRep top, GroupRep bottom);

} // namespace brick

#endif // BRICK_EXT_HPP
