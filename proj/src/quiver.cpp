#include "brick/quiver.hpp"

#include <istream>
#include <numeric>
#include <ostream>
#include <stdexcept>
#include <string>

namespace brick
{

QuiverRep::QuiverRep(Quiver q, FieldPtr field, std::vector<int> dims, std::vector<Mat> arrows)
    : q_(std::move(q)), field_(std::move(field)), dims_(std::move(dims)), arrows_(std::move(arrows))
{
  if (!field_)
    throw std::invalid_argument("quiver rep needs a field");
  if (q_.vertices < 0 || static_cast<int>(dims_.size()) != q_.vertices)
    throw std::invalid_argument("quiver rep: one dimension per vertex");
  if (arrows_.size() != q_.arrows.size())
    throw std::invalid_argument("quiver rep: one matrix per arrow");
  for (int d : dims_)
    if (d < 0)
      throw std::invalid_argument("quiver rep: negative dimension");
  for (std::size_t a = 0; a < arrows_.size(); ++a) {
    auto [s, t] = q_.arrows[a];
    if (s < 0 || s >= q_.vertices || t < 0 || t >= q_.vertices)
      throw std::invalid_argument("quiver rep: arrow endpoint out of range");
    if (arrows_[a].rows() != dims_[s] || arrows_[a].cols() != dims_[t])
      throw std::invalid_argument("quiver rep: arrow " + std::to_string(a) + " has the wrong shape");
    if (!same_field(arrows_[a].field(), field_))
      throw std::invalid_argument("quiver rep: arrow over a different field");
  }
}

int QuiverRep::total_dim() const
{
  return std::accumulate(dims_.begin(), dims_.end(), 0);
}

namespace
{

void require_same_quiver(QuiverRep const &a, QuiverRep const &b)
{
  if (!(a.quiver() == b.quiver()))
    throw std::invalid_argument("quiver reps over different quivers");
  if (!same_field(a.field(), b.field()))
    throw std::invalid_argument("quiver reps over different fields");
}

} // namespace

bool is_rep_hom(QuiverRep const &a, QuiverRep const &b, RepHom const &h)
{
  require_same_quiver(a, b);
  int n = a.quiver().vertices;
  if (static_cast<int>(h.maps.size()) != n)
    return false;
  for (int v = 0; v < n; ++v)
    if (h.maps[v].rows() != a.dim(v) || h.maps[v].cols() != b.dim(v))
      return false;
  for (std::size_t x = 0; x < a.arrows().size(); ++x) {
    auto [s, t] = a.quiver().arrows[x];
    if (!(h.maps[s] * b.arrow(x) == a.arrow(x) * h.maps[t]))
      return false;
  }
  return true;
}

RepHom compose(RepHom const &f, RepHom const &g)
{
  if (f.maps.size() != g.maps.size())
    throw std::invalid_argument("compose: vertex count mismatch");
  RepHom h;
  for (std::size_t v = 0; v < f.maps.size(); ++v)
    h.maps.push_back(f.maps[v] * g.maps[v]);
  return h;
}

RepHom identity_hom(QuiverRep const &a)
{
  RepHom h;
  for (int d : a.dims())
    h.maps.push_back(Mat::identity(a.field(), d));
  return h;
}

int rank(RepHom const &h)
{
  int r = 0;
  for (auto const &m : h.maps)
    r += rank(m);
  return r;
}

std::vector<RepHom> hom_space(QuiverRep const &a, QuiverRep const &b)
{
  require_same_quiver(a, b);
  Field const &f = *a.field();
  int n = a.quiver().vertices;
  std::vector<int> offset(n + 1, 0);
  for (int v = 0; v < n; ++v)
    offset[v + 1] = offset[v] + a.dim(v) * b.dim(v);
  SparseSystem sys(a.field(), offset[n]);

  // For arrow s -> t, entry (i, j) of F_s B - A F_t.
  for (std::size_t x = 0; x < a.arrows().size(); ++x) {
    auto [s, t] = a.quiver().arrows[x];
    Mat const &am = a.arrow(x);
    Mat const &bm = b.arrow(x);
    int bs = b.dim(s), bt = b.dim(t);
    std::vector<std::vector<std::pair<int, Elem>>> bcol(bt), arow(a.dim(s));
    for (int k = 0; k < bm.rows(); ++k)
      for (int j = 0; j < bt; ++j)
        if (bm(k, j) != 0)
          bcol[j].emplace_back(k, bm(k, j));
    for (int i = 0; i < am.rows(); ++i)
      for (int l = 0; l < am.cols(); ++l)
        if (am(i, l) != 0)
          arow[i].emplace_back(l, am(i, l));
    for (int i = 0; i < a.dim(s); ++i)
      for (int j = 0; j < bt; ++j) {
        std::vector<SparseSystem::Term> eq;
        for (auto [k, c] : bcol[j])
          eq.emplace_back(offset[s] + i * bs + k, c);
        for (auto [l, c] : arow[i])
          eq.emplace_back(offset[t] + l * bt + j, f.neg(c));
        if (!eq.empty())
          sys.add_equation(std::move(eq));
      }
  }

  Subspace sol = sys.nullspace();
  std::vector<RepHom> out;
  for (int r = 0; r < sol.dim(); ++r) {
    auto row = sol.basis().row(r);
    RepHom h;
    for (int v = 0; v < n; ++v) {
      Mat m(a.field(), a.dim(v), b.dim(v));
      std::copy(row.begin() + offset[v], row.begin() + offset[v + 1], m.data().begin());
      h.maps.push_back(std::move(m));
    }
    out.push_back(std::move(h));
  }
  return out;
}

QuiverRep change_basis(QuiverRep const &a, std::vector<Mat> const &c)
{
  if (static_cast<int>(c.size()) != a.quiver().vertices)
    throw std::invalid_argument("change_basis: one matrix per vertex");
  std::vector<Mat> inv;
  for (auto const &m : c)
    inv.push_back(inverse(m));
  std::vector<Mat> arrows;
  for (std::size_t x = 0; x < a.arrows().size(); ++x) {
    auto [s, t] = a.quiver().arrows[x];
    arrows.push_back(c[s] * a.arrow(x) * inv[t]);
  }
  return QuiverRep(a.quiver(), a.field(), a.dims(), std::move(arrows));
}

namespace
{

void check_shape(MmShape shape, int m)
{
  if (m < 1)
    throw std::invalid_argument("M_m needs m >= 1");
  if (shape.kind == MmCase::cycle && shape.r < 2)
    throw std::invalid_argument("cycle case needs r >= 2");
}

// residue class of j in 1..r
int residue(int j, int r)
{
  return (j - 1) % r + 1;
}

Quiver mm_quiver(MmShape shape)
{
  Quiver q;
  switch (shape.kind) {
  case MmCase::one_vertex_pair:
    q.vertices = 2;
    q.arrows = {{0, 1}, {0, 1}, {0, 1}};
    break;
  case MmCase::three_vertex:
    q.vertices = 3;
    q.arrows = {{0, 2}, {1, 2}, {1, 2}};
    break;
  case MmCase::cycle: {
    int r = shape.r;
    q.vertices = 2 * r + 1;
    for (int i = 1; i <= r; ++i)
      q.arrows.emplace_back(i, r + i);
    for (int i = 1; i <= r; ++i)
      q.arrows.emplace_back(i, r + (i == 1 ? r : i - 1));
    q.arrows.emplace_back(0, r + 1);
    break;
  }
  }
  return q;
}

} // namespace

std::pair<int, int> mm_v_slot(MmShape shape, int m, int j)
{
  check_shape(shape, m);
  if (j < 1 || j > m)
    throw std::out_of_range("v index out of range");
  switch (shape.kind) {
  case MmCase::one_vertex_pair:
    return {0, j - 1};
  case MmCase::three_vertex:
    return j == 1 ? std::pair{0, 0} : std::pair{1, j - 2};
  case MmCase::cycle:
    return j == 1 ? std::pair{0, 0} : std::pair{residue(j, shape.r), (j - 2) / shape.r};
  }
  return {};
}

std::pair<int, int> mm_w_slot(MmShape shape, int m, int j)
{
  check_shape(shape, m);
  if (j < 1 || j > m)
    throw std::out_of_range("w index out of range");
  switch (shape.kind) {
  case MmCase::one_vertex_pair:
    return {1, j - 1};
  case MmCase::three_vertex:
    return {2, j - 1};
  case MmCase::cycle:
    return {shape.r + residue(j, shape.r), (j - 1) / shape.r};
  }
  return {};
}

std::vector<MmAction> mm_actions(MmShape shape, int m)
{
  check_shape(shape, m);
  int x = 0, y = 1, z = 2;
  if (shape.kind == MmCase::cycle)
    x = 2 * shape.r;
  std::vector<MmAction> out;
  out.push_back({x, 1, 1, 'X'});
  for (int j = 2; j <= m; ++j) {
    if (shape.kind == MmCase::cycle) {
      int i = residue(j, shape.r);
      y = i - 1;
      z = shape.r + i - 1;
    }
    out.push_back({y, j, j, 'Y'});
    out.push_back({z, j, j - 1, 'Z'});
  }
  return out;
}

QuiverRep build_mm(FieldPtr field, MmShape shape, int m)
{
  check_shape(shape, m);
  Quiver q = mm_quiver(shape);
  std::vector<int> dims(q.vertices, 0);
  for (int j = 1; j <= m; ++j) {
    ++dims[mm_v_slot(shape, m, j).first];
    ++dims[mm_w_slot(shape, m, j).first];
  }
  std::vector<Mat> arrows;
  for (auto [s, t] : q.arrows)
    arrows.emplace_back(field, dims[s], dims[t]);
  for (auto const &act : mm_actions(shape, m)) {
    auto [vs, vi] = mm_v_slot(shape, m, act.v);
    auto [ws, wi] = mm_w_slot(shape, m, act.w);
    if (q.arrows[act.arrow] != std::pair{vs, ws})
      throw std::logic_error("M_m action does not match its arrow");
    arrows[act.arrow](vi, wi) = 1;
  }
  return QuiverRep(std::move(q), std::move(field), std::move(dims), std::move(arrows));
}

QuiverRep build_mm_case1(FieldPtr field, int m)
{
  return build_mm(std::move(field), {MmCase::one_vertex_pair, 0}, m);
}

QuiverRep build_mm_case2(FieldPtr field, int m)
{
  return build_mm(std::move(field), {MmCase::three_vertex, 0}, m);
}

QuiverRep build_mm_case3(FieldPtr field, int r, int m)
{
  return build_mm(std::move(field), {MmCase::cycle, r}, m);
}

RepHom embed_mm(FieldPtr field, MmShape shape, int m)
{
  QuiverRep small = build_mm(field, shape, m);
  QuiverRep big = build_mm(field, shape, m + 1);
  RepHom h;
  for (int v = 0; v < small.quiver().vertices; ++v)
    h.maps.emplace_back(field, small.dim(v), big.dim(v));
  for (int j = 1; j <= m; ++j) {
    for (auto slot : {&mm_v_slot, &mm_w_slot}) {
      auto [v, i] = slot(shape, m, j);
      auto [v2, i2] = slot(shape, m + 1, j);
      if (v != v2)
        throw std::logic_error("embedding moves a basis vector between vertices");
      h.maps[v](i, i2) = 1;
    }
  }
  return h;
}

void write_quiver_rep(std::ostream &os, QuiverRep const &a)
{
  os << a.field()->header() << '\n';
  os << a.quiver().vertices << ' ' << a.quiver().arrows.size() << '\n';
  for (int v = 0; v < a.quiver().vertices; ++v)
    os << (v ? " " : "") << a.dim(v);
  os << '\n';
  for (auto [s, t] : a.quiver().arrows)
    os << s << ' ' << t << '\n';
  for (auto const &m : a.arrows())
    write_mat(os, m);
}

QuiverRep read_quiver_rep(std::istream &is)
{
  std::string header;
  while (std::getline(is, header) && header.find_first_not_of(" \t\r") == std::string::npos) {
  }
  FieldPtr field = Field::parse_header(header);
  Quiver q;
  int narrows = 0;
  if (!(is >> q.vertices >> narrows) || q.vertices < 0 || narrows < 0)
    throw std::invalid_argument("quiver rep file: bad `vertices arrows` line");
  std::vector<int> dims(q.vertices);
  for (auto &d : dims)
    if (!(is >> d))
      throw std::invalid_argument("quiver rep file: bad dimension line");
  for (int x = 0; x < narrows; ++x) {
    int s, t;
    if (!(is >> s >> t))
      throw std::invalid_argument("quiver rep file: bad arrow line");
    q.arrows.emplace_back(s, t);
  }
  std::vector<Mat> arrows;
  for (int x = 0; x < narrows; ++x) {
    arrows.push_back(read_mat(is));
    if (!same_field(arrows.back().field(), field))
      throw std::invalid_argument("quiver rep file: matrix over a different field");
  }
  return QuiverRep(std::move(q), std::move(field), std::move(dims), std::move(arrows));
}

} // namespace brick
