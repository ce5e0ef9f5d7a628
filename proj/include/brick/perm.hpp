#ifndef BRICK_PERM_HPP
#define BRICK_PERM_HPP

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace brick
{

/// Permutation of {0..n-1} stored as its image list. Products apply the left
/// factor first, matching the right action of matrices on row vectors.
using Perm = std::vector<int>;

Perm perm_identity(int n);
Perm perm_mul(Perm const &a, Perm const &b);
Perm perm_inverse(Perm const &a);
bool perm_is_identity(Perm const &a);
bool perm_is_bijection(Perm const &a);
long long perm_order(Perm const &a);
/// From 1-based cycles, e.g. {{1,2,3,4,5}}.
Perm perm_from_cycles(int n, std::vector<std::vector<int>> const &cycles);

/**
 * Finite permutation group given by generators, with a stabiliser chain built
 * by the deterministic Schreier-Sims algorithm on first use.
 */
class PermGroup
{
public:
  PermGroup() = default;
  /// Throws std::invalid_argument if a generator is not a bijection of
  /// {0..degree-1}.
  PermGroup(int degree, std::vector<Perm> gens);

  int degree() const { return degree_; }
  int ngens() const { return static_cast<int>(gens_.size()); }
  std::vector<Perm> const &gens() const { return gens_; }
  Perm const &gen(int i) const { return gens_[i]; }

  std::uint64_t order() const { return order_; }
  bool contains(Perm const &g) const;
  std::vector<int> const &base() const { return base_; }

private:
  struct Level
  {
    int base;
    std::vector<Perm> gens;
    std::vector<int> orbit;
    std::vector<Perm> transversal;  // indexed by point; empty if not in orbit
  };

  void build_chain();
  void extend(std::size_t level, Perm const &g);
  void grow_orbit(Level &lv);
  // Residue of g after sifting from `level` on; sets `stop` to the level
  // where sifting stopped (chain size if it went through).
  Perm sift(Perm g, std::size_t level, std::size_t &stop) const;

  int degree_ = 0;
  std::vector<Perm> gens_;
  std::vector<Level> chain_;
  std::vector<int> base_;
  std::uint64_t order_ = 1;
};

/// `degree gens` then one line of 1-based images per generator.
PermGroup read_perm_group(std::istream &is);
void write_perm_group(std::ostream &os, PermGroup const &g);

/**
 * Elements of a group listed in breadth-first order from the identity along
 * right multiplication by generators. right_mul[i][j] is the index of
 * element i times generator j; parent/parent_gen give a spanning tree.
 */
struct ElementTable
{
  std::vector<Perm> elements;
  std::vector<std::vector<int>> right_mul;
  std::vector<int> parent;
  std::vector<int> parent_gen;
};

/// Throws std::length_error if the group has more than `cap` elements.
ElementTable enumerate_elements(PermGroup const &g, std::size_t cap);

} // namespace brick

#endif // BRICK_PERM_HPP
