#ifndef BRICK_QUIVER_HPP
#define BRICK_QUIVER_HPP

#include <iosfwd>
#include <utility>
#include <vector>

#include "brick/matrix.hpp"

namespace brick
{

struct Quiver
{
  int vertices = 0;
  std::vector<std::pair<int, int>> arrows;  // (source, target), repeats allowed

  bool operator==(Quiver const &) const = default;
};

/// One space per vertex and a dims[s] x dims[t] matrix per arrow s -> t,
/// acting on row vectors.
class QuiverRep
{
public:
  QuiverRep() = default;
  /// Throws std::invalid_argument on out-of-range vertices or shape mismatch.
  QuiverRep(Quiver q, FieldPtr field, std::vector<int> dims, std::vector<Mat> arrows);

  Quiver const &quiver() const { return q_; }
  FieldPtr const &field() const { return field_; }
  std::vector<int> const &dims() const { return dims_; }
  int dim(int v) const { return dims_[v]; }
  int total_dim() const;
  Mat const &arrow(int a) const { return arrows_[a]; }
  std::vector<Mat> const &arrows() const { return arrows_; }

private:
  Quiver q_;
  FieldPtr field_;
  std::vector<int> dims_;
  std::vector<Mat> arrows_;
};

/// One matrix per vertex, dims_a[v] x dims_b[v].
struct RepHom
{
  std::vector<Mat> maps;
};

/// maps[s] * B(a) == A(a) * maps[t] for every arrow a: s -> t.
bool is_rep_hom(QuiverRep const &a, QuiverRep const &b, RepHom const &h);
RepHom compose(RepHom const &f, RepHom const &g);
RepHom identity_hom(QuiverRep const &a);
int rank(RepHom const &h);

/// Canonical basis (RREF over the concatenated row-major vertex maps) of
/// the intertwiners a -> b. Throws std::invalid_argument if the quivers or
/// fields differ.
std::vector<RepHom> hom_space(QuiverRep const &a, QuiverRep const &b);

/// Arrow s -> t becomes c_s A c_t^-1, so the vertex maps c form an
/// isomorphism from the result to a.
QuiverRep change_basis(QuiverRep const &a, std::vector<Mat> const &c);

enum class MmCase
{
  one_vertex_pair,  // two vertices, three arrows X, Y, Z
  three_vertex,     // U, V, W; arrows X: U->W, Y, Z: V->W
  cycle,            // U, V_1..V_r, W_1..W_r; arrows Y_1..Y_r, Z_1..Z_r, X
};

struct MmShape
{
  MmCase kind = MmCase::one_vertex_pair;
  int r = 0;  // cycle length, cycle case only
};

/// Basis v_1..v_m, w_1..w_m with v_1 -> w_1 under X and, for i >= 2,
/// v_i -> w_i under Y and v_i -> w_{i-1} under Z.
QuiverRep build_mm_case1(FieldPtr field, int m);
/// U = <v_1>, V = <v_2..v_m>, W = <w_1..w_m>, same actions as case 1.
QuiverRep build_mm_case2(FieldPtr field, int m);
/// V_i spanned by v_j with 1 < j = i mod r, W_i by w_j with j = i mod r;
/// Y_i: v_j -> w_j, Z_i: V_i -> W_{i-1} (Z_1 lands in W_r): v_j -> w_{j-1}.
QuiverRep build_mm_case3(FieldPtr field, int r, int m);
QuiverRep build_mm(FieldPtr field, MmShape shape, int m);

/// One basis action: arrow `arrow` sends v_v to w_w. `kind` is 'X', 'Y' or 'Z'.
struct MmAction
{
  int arrow;
  int v;
  int w;
  char kind;
};

/// All actions of M_m, ordered by v then kind.
std::vector<MmAction> mm_actions(MmShape shape, int m);

/// Where basis vector v_j (j = 1..m) and w_j live: (vertex, index in vertex).
std::pair<int, int> mm_v_slot(MmShape shape, int m, int j);
std::pair<int, int> mm_w_slot(MmShape shape, int m, int j);

/// Coordinate inclusion M_m -> M_{m+1} sending each named basis vector to
/// the one with the same name.
RepHom embed_mm(FieldPtr field, MmShape shape, int m);

/// Field header; `vertices arrows`; dims; one `s t` line per arrow; then
/// each arrow matrix in the matrix format.
void write_quiver_rep(std::ostream &os, QuiverRep const &a);
QuiverRep read_quiver_rep(std::istream &is);

} // namespace brick

#endif // BRICK_QUIVER_HPP
