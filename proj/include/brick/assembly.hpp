#ifndef BRICK_ASSEMBLY_HPP
#define BRICK_ASSEMBLY_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "brick/ext.hpp"
#include "brick/quiver.hpp"

namespace brick
{

/**
 * Which simple module sits at each quiver vertex and which extension class
 * each arrow carries. Top slots are v_1..v_m, bottom slots w_1..w_m; a slot
 * takes the simple of the vertex holding it.
 */
struct Blueprint
{
  MmShape shape;
  int m = 1;
  std::vector<std::string> vertex_simple;
  std::vector<std::string> arrow_class;

  /// Tags S, T and X, Y, Z; R, S, T and X, Y, Z; R, S1..Sr, T1..Tr and
  /// Y1..Yr, Z1..Zr, X, following the vertex and arrow order of build_mm.
  static Blueprint standard(MmShape shape, int m);
  Blueprint with_m(int m) const;
  std::string top_simple(int j) const;
  std::string bottom_simple(int j) const;
};

std::string case_name(MmShape shape);

struct Ingredients
{
  std::map<std::string, GroupRep> simples;
  std::map<std::string, ExtClass> classes;
  /// Simples handed to the radical computation; every composition factor of
  /// the top must be among them. Empty means the blueprint's simples.
  std::vector<GroupRep> radical_simples;
};

/**
 * Generator blocks: diagonal blocks run over the top slots then the bottom
 * slots; arrow action v_j -> w_k puts the class's cocycle block in the
 * (v_j, w_k) position. Throws std::invalid_argument on missing tags, class
 * tops or bottoms that differ from their slots, or dependent classes between
 * the same pair of simples.
 */
GroupRep build_group_mm(Blueprint const &b, Ingredients const &ing);

/// First row of slot v_j and of slot w_j in M_m.
int top_offset(Blueprint const &b, Ingredients const &ing, int j);
int bottom_offset(Blueprint const &b, Ingredients const &ing, int j);

struct VerificationReport
{
  std::string case_tag;
  int m = 0;
  int dim = 0;
  int expected_dim = 0;
  std::optional<std::string> failed_relator;
  int end_dim = -1;
  int radical_dim = -1;
  int expected_radical_dim = 0;
  bool radical_is_bottom = false;
  bool radical_semisimple = false;
  std::vector<std::pair<std::string, std::pair<int, int>>> radical_mult;  // tag -> (found, expected)
  std::vector<std::pair<std::string, std::pair<int, int>>> top_mult;
  std::string failure;  // empty on PASS

  bool pass() const { return failure.empty(); }
  /// `KEY: value` lines ending in `VERDICT: PASS` or `VERDICT: FAIL <reason>`.
  std::string render() const;
};

/// Rechecks M from scratch: relators, dimension, radical equal to the bottom
/// slots and semisimple with the expected factors, top factors, and
/// dim End = 1. The relators of p are checked first; the earliest failure is
/// recorded.
VerificationReport verify_mm(GroupRep const &m, Blueprint const &b, Ingredients const &ing,
                                     Presentation const &p);

/// Inclusion M_m -> M_{m+1} by slot names, as a dim M_m x dim M_{m+1} matrix.
Mat embed_group_mm(Blueprint const &b, Ingredients const &ing);

struct EmbeddingCheck
{
  bool intertwines = false;
  bool injective = false;
  bool radical_compatible = false;
  bool ok() const { return intertwines && injective && radical_compatible; }
};

/// Checks the inclusion from M_m into M_{m+1} built from the same
/// ingredients.
EmbeddingCheck check_embedding(Blueprint const &b, Ingredients const &ing);

struct CentraliserCertificate
{
  int commutant_dim = -1;
  bool commutant_scalar = false;
  int quotient_dim = 0;
  std::optional<Elem> lambda;
  std::string refusal;  // empty when certified

  bool ok() const { return refusal.empty(); }
  std::string render() const;
};

/// Largest module dimension accepted by the dense commutant solve.
constexpr int kCommutantCap = 64;

/**
 * Solves X rho(g) = rho(g) X over all matrices X, independently of hom_g.
 * When the commutant is the scalars, a scalar acting as the identity on the
 * quotient [q0, q0 + qdim) of the basis must be 1. Refuses non-scalar
 * commutants and an empty quotient; throws std::length_error past the cap.
 */
CentraliserCertificate centraliser_certificate(GroupRep const &m, int q0, int qdim, int cap = kCommutantCap);

/// The quotient used for M_m: the last top slot v_m.
CentraliserCertificate centraliser_certificate(GroupRep const &m, Blueprint const &b, Ingredients const &ing,
                                               int cap = kCommutantCap);

} // namespace brick

#endif // BRICK_ASSEMBLY_HPP
