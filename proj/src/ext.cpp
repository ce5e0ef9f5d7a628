#include "brick/ext.hpp"

#include <istream>
#include <ostream>
#include <sstream>

namespace brick
{

VerifiedPresentation VerifiedPresentation::verify(Presentation p, PermGroup const &g, long long cap)
{
  if (p.ngens != g.ngens())
    throw PresentationError("presentation has " + std::to_string(p.ngens) + " generators, group has " +
                            std::to_string(g.ngens()));
  for (auto const &r : p.relators)
    if (!perm_is_identity(evaluate(r, g.gens())))
      throw PresentationError("relator " + word_text(r) + " does not hold in the group");
  auto res = coset_enumerate(p, {}, cap);
  if (res.overflow)
    throw PresentationError("presentation unverified: coset enumeration exceeded " + std::to_string(cap) +
                            " cosets");
  if (static_cast<std::uint64_t>(res.index) != g.order())
    throw PresentationError("presentation defines a group of order " + std::to_string(res.index) +
                            ", expected " + std::to_string(g.order()));
  VerifiedPresentation v;
  v.p_ = std::move(p);
  v.order_ = g.order();
  v.defined_ = res.defined;
  return v;
}

std::vector<Elem> ExtClass::flatten() const
{
  std::vector<Elem> v;
  for (auto const &m : cocycle)
    v.insert(v.end(), m.data().begin(), m.data().end());
  return v;
}

ExtClass ExtClass::unflatten(GroupRep top, GroupRep bottom, std::span<Elem const> v)
{
  int s = top.dim(), t = bottom.dim();
  std::size_t block = static_cast<std::size_t>(s) * t;
  if (v.size() != block * top.ngens())
    throw std::invalid_argument("cocycle vector has the wrong length");
  ExtClass c;
  for (int g = 0; g < top.ngens(); ++g) {
    Mat m(top.field(), s, t);
    std::copy(v.begin() + g * block, v.begin() + (g + 1) * block, m.data().begin());
    c.cocycle.push_back(std::move(m));
  }
  c.top = std::move(top);
  c.bottom = std::move(bottom);
  return c;
}

namespace
{

void check_class_shape(ExtClass const &c)
{
  require_compatible(c.top, c.bottom, "extension");
  if (static_cast<int>(c.cocycle.size()) != c.top.ngens())
    throw std::invalid_argument("cocycle needs one block per generator");
  for (auto const &m : c.cocycle)
    if (m.rows() != c.top.dim() || m.cols() != c.bottom.dim())
      throw std::invalid_argument("cocycle block has the wrong shape");
}

// Rows span the coboundaries d_F(g) = rho_S(g) F - F rho_T(g) as F runs over
// the matrix units, flattened like ExtClass::flatten.
Mat coboundary_matrix(GroupRep const &s, GroupRep const &t)
{
  int st = s.dim() * t.dim();
  std::vector<Mat> blocks;
  for (int g = 0; g < s.ngens(); ++g)
    blocks.push_back(kron(s.gen(g).transpose(), Mat::identity(s.field(), t.dim())) -
                     kron(Mat::identity(s.field(), s.dim()), t.gen(g)));
  if (blocks.empty())
    return Mat(s.field(), st, 0);
  return hstack(blocks);
}

void check_contract(GroupRep const &s, GroupRep const &t, ExtOptions const &opt)
{
  require_compatible(s, t, "ext");
  if (opt.unchecked)
    return;
  if (!is_absolutely_irreducible(s))
    throw std::invalid_argument("ext: top module is not absolutely irreducible");
  if (!is_absolutely_irreducible(t))
    throw std::invalid_argument("ext: bottom module is not absolutely irreducible");
  if (s.dim() == t.dim() && iso_test(s, t))
    throw std::invalid_argument("ext: modules are isomorphic");
}

} // namespace

std::vector<Mat> extension_generators(ExtClass const &c)
{
  check_class_shape(c);
  std::vector<Mat> gens;
  int s = c.top.dim(), t = c.bottom.dim();
  for (int g = 0; g < c.top.ngens(); ++g) {
    Mat m(c.top.field(), s + t, s + t);
    m.paste(0, 0, c.top.gen(g));
    m.paste(0, s, c.cocycle[g]);
    m.paste(s, s, c.bottom.gen(g));
    gens.push_back(std::move(m));
  }
  return gens;
}

bool is_cocycle(ExtClass const &c, Presentation const &p)
{
  auto gens = extension_generators(c);
  int n = c.top.dim() + c.bottom.dim();
  GroupRep e(c.top.field(), n, std::move(gens), c.top.group());
  for (auto const &r : p.relators)
    if (!e.word(r).is_identity())
      return false;
  return true;
}

std::vector<ExtClass> ExtSpace::basis() const
{
  std::vector<ExtClass> out;
  for (int i = 0; i < classes.dim(); ++i)
    out.push_back(ExtClass::unflatten(top, bottom, classes.basis().row(i)));
  return out;
}

ExtClass ExtSpace::combination(std::span<Elem const> coords) const
{
  if (static_cast<int>(coords.size()) != classes.dim())
    throw std::invalid_argument("combination: one coefficient per basis class");
  Field const &f = *top.field();
  std::vector<Elem> v(classes.ambient_dim(), 0);
  for (int i = 0; i < classes.dim(); ++i)
    f.axpy(v, classes.basis().row(i), coords[i]);
  return ExtClass::unflatten(top, bottom, v);
}

std::vector<Elem> ExtSpace::coordinates(ExtClass const &c) const
{
  auto v = c.flatten();
  if (static_cast<int>(v.size()) != cocycles.ambient_dim() || !cocycles.contains(v))
    throw std::invalid_argument("blocks do not form a cocycle");
  auto r = coboundaries.reduce(v);
  auto coords = classes.coordinates(r);
  if (!coords)
    throw std::logic_error("reduced cocycle outside the class space");
  return *coords;
}

bool ExtSpace::is_split(ExtClass const &c) const
{
  auto x = coordinates(c);
  return std::all_of(x.begin(), x.end(), [](Elem e) { return e == 0; });
}

ExtSpace ext1_cocycle(GroupRep const &s, GroupRep const &t, VerifiedPresentation const &vp, ExtOptions opt)
{
  Presentation const &p = vp.presentation();
  if (s.ngens() != p.ngens || t.ngens() != p.ngens)
    throw std::invalid_argument("ext1_cocycle: generator count differs from the presentation");
  check_contract(s, t, opt);
  for (auto const &r : p.relators) {
    if (!s.word(r).is_identity())
      throw std::invalid_argument("ext1_cocycle: top module fails relator " + word_text(r));
    if (!t.word(r).is_identity())
      throw std::invalid_argument("ext1_cocycle: bottom module fails relator " + word_text(r));
  }

  FieldPtr const &fp = s.field();
  Field const &f = *fp;
  int const sd = s.dim(), td = t.dim(), st = sd * td;
  int const unknowns = p.ngens * st;

  // For relator x_1..x_L the top-right block of the product is
  // sum_j P_j d(x_j) Q_j with P_j, Q_j the products of the diagonal blocks
  // before and after x_j; an inverse letter contributes
  // -P_{j+1} d(g) Q_{j-1} where the prefix and suffix now include it.
  EchelonBasis equations(fp, unknowns);
  for (auto const &r : p.relators) {
    int len = static_cast<int>(r.size());
    std::vector<Mat> suffix(len + 1);
    suffix[len] = Mat::identity(fp, td);
    for (int j = len - 1; j >= 0; --j) {
      int g = letter_gen(r[j]);
      suffix[j] = (letter_is_inverse(r[j]) ? t.gen_inverse(g) : t.gen(g)) * suffix[j + 1];
    }
    Mat coeff(fp, unknowns, st);
    Mat prefix = Mat::identity(fp, sd);
    for (int j = 0; j < len; ++j) {
      int g = letter_gen(r[j]);
      Mat term;
      if (!letter_is_inverse(r[j])) {
        term = kron(prefix.transpose(), suffix[j + 1]);
        prefix = prefix * s.gen(g);
      } else {
        prefix = prefix * s.gen_inverse(g);
        term = -kron(prefix.transpose(), suffix[j]);
      }
      for (int a = 0; a < st; ++a)
        f.axpy(coeff.row(g * st + a), term.row(a), 1);
    }
    Mat ct = coeff.transpose();
    for (int c = 0; c < st; ++c) {
      std::vector<Elem> eq(ct.row(c).begin(), ct.row(c).end());
      equations.reduce(eq);
      equations.insert_reduced(eq);
    }
  }

  ExtSpace e;
  e.top = s;
  e.bottom = t;
  e.cocycles = nullspace(equations.matrix());
  if (p.relators.empty())
    e.cocycles = Subspace::full(fp, unknowns);
  e.coboundaries = Subspace::span(coboundary_matrix(s, t));
  if (!e.cocycles.contains(e.coboundaries))
    throw std::logic_error("coboundaries are not cocycles");
  Mat reduced(fp, e.cocycles.dim(), unknowns);
  for (int i = 0; i < e.cocycles.dim(); ++i) {
    auto r = e.coboundaries.reduce(e.cocycles.basis().row(i));
    std::copy(r.begin(), r.end(), reduced.row(i).begin());
  }
  e.classes = Subspace::span(reduced);
  if (e.classes.dim() != e.cocycles.dim() - e.coboundaries.dim())
    throw std::logic_error("class space has the wrong dimension");
  return e;
}

int ext1_freehull(GroupRep const &s, GroupRep const &t, PermGroup const &g, long long cap, ExtOptions opt)
{
  if (s.ngens() != g.ngens())
    throw std::invalid_argument("ext1_freehull: generator count differs from the group");
  if (static_cast<long double>(g.order()) * t.dim() > static_cast<long double>(cap))
    throw std::length_error("free hull too large: |G| * dim T = " + std::to_string(g.order() * t.dim()) +
                            " exceeds cap " + std::to_string(cap));
  check_contract(s, t, opt);

  FieldPtr const &fp = s.field();
  auto table = enumerate_elements(g, static_cast<std::size_t>(g.order()));
  int const n = static_cast<int>(table.elements.size());

  std::vector<Mat> reg_gens;
  for (int j = 0; j < g.ngens(); ++j) {
    Mat m(fp, n, n);
    for (int h = 0; h < n; ++h)
      m(h, table.right_mul[h][j]) = 1;
    reg_gens.push_back(std::move(m));
  }
  GroupRep regular(fp, n, std::move(reg_gens), s.group());

  // e_h -> e_1 rho_S(h)
  Mat proj(fp, n, s.dim());
  proj(0, 0) = 1;
  for (int h = 1; h < n; ++h) {
    auto row = vec_mul(proj.row(table.parent[h]), s.gen(table.parent_gen[h]));
    std::copy(row.begin(), row.end(), proj.row(h).begin());
  }
  if (!is_hom(regular, s, proj))
    throw std::logic_error("free hull projection is not a module map");
  Subspace k = kernel(proj);
  GroupRep kmod = sub(regular, k);
  int hk = static_cast<int>(hom_g(kmod, t).size());
  int hst = static_cast<int>(hom_g(s, t).size());
  return hk - t.dim() + hst;
}

ExtensionModule extension_module(ExtClass const &c)
{
  auto gens = extension_generators(c);
  int s = c.top.dim(), t = c.bottom.dim();
  ExtensionModule e;
  e.module = GroupRep(c.top.field(), s + t, std::move(gens), c.top.group());
  Mat bottom(c.top.field(), t, s + t);
  for (int i = 0; i < t; ++i)
    bottom(i, s + i) = 1;
  e.bottom = Subspace::span(bottom);
  e.split = Subspace::span(coboundary_matrix(c.top, c.bottom)).contains(c.flatten());
  return e;
}

std::optional<std::size_t> first_dependent_class(std::vector<ExtClass> const &classes)
{
  if (classes.empty())
    return std::nullopt;
  GroupRep const &s = classes[0].top;
  GroupRep const &t = classes[0].bottom;
  for (auto const &c : classes) {
    check_class_shape(c);
    if (c.top.gens() != s.gens() || c.bottom.gens() != t.gens())
      throw std::invalid_argument("first_dependent_class: classes must share top and bottom");
  }
  Mat cob = coboundary_matrix(s, t);
  EchelonBasis span(s.field(), cob.cols());
  for (int i = 0; i < cob.rows(); ++i)
    span.insert(std::vector<Elem>(cob.row(i).begin(), cob.row(i).end()));
  for (std::size_t i = 0; i < classes.size(); ++i)
    if (!span.insert(classes[i].flatten()))
      return i;
  return std::nullopt;
}

StackedModule stack_extensions(GroupRep const &s, std::vector<ExtClass> const &classes)
{
  if (classes.empty())
    throw std::invalid_argument("stack_extensions: no classes");
  for (auto const &c : classes) {
    check_class_shape(c);
    if (c.top.gens() != s.gens())
      throw std::invalid_argument("stack_extensions: classes must share the top module");
  }
  // classes are grouped by identical bottom modules
  std::vector<int> group_of(classes.size(), -1);
  std::vector<int> reps;
  for (std::size_t i = 0; i < classes.size(); ++i) {
    for (std::size_t r = 0; r < reps.size(); ++r)
      if (classes[reps[r]].bottom.gens() == classes[i].bottom.gens()) {
        group_of[i] = static_cast<int>(r);
        break;
      }
    if (group_of[i] < 0) {
      for (int r : reps)
        if (iso_test(classes[r].bottom, classes[i].bottom))
          throw std::invalid_argument("stack_extensions: isomorphic bottoms must be given by identical matrices");
      group_of[i] = static_cast<int>(reps.size());
      reps.push_back(static_cast<int>(i));
    }
  }
  for (std::size_t r = 0; r < reps.size(); ++r) {
    std::vector<ExtClass> same;
    std::vector<std::size_t> index;
    for (std::size_t i = 0; i < classes.size(); ++i)
      if (group_of[i] == static_cast<int>(r)) {
        same.push_back(classes[i]);
        index.push_back(i);
      }
    if (auto dep = first_dependent_class(same))
      throw std::invalid_argument("stack_extensions: class " + std::to_string(index[*dep]) +
                                  " is dependent on the earlier classes with the same bottom in Ext^1");
  }

  int total = s.dim();
  for (auto const &c : classes)
    total += c.bottom.dim();
  std::vector<Mat> gens;
  for (int g = 0; g < s.ngens(); ++g) {
    Mat m(s.field(), total, total);
    m.paste(0, 0, s.gen(g));
    int off = s.dim();
    for (auto const &c : classes) {
      m.paste(0, off, c.cocycle[g]);
      m.paste(off, off, c.bottom.gen(g));
      off += c.bottom.dim();
    }
    gens.push_back(std::move(m));
  }
  StackedModule out;
  out.module = GroupRep(s.field(), total, std::move(gens), s.group());
  Mat bottom(s.field(), total - s.dim(), total);
  for (int i = 0; i < bottom.rows(); ++i)
    bottom(i, s.dim() + i) = 1;
  out.bottom = Subspace::span(bottom);

  std::vector<GroupRep> simples = {s};
  for (int r : reps)
    simples.push_back(classes[r].bottom);
  if (!(radical(out.module, simples) == out.bottom))
    throw std::logic_error("stacked module: radical differs from the bottom");
  return out;
}

void write_ext_class(std::ostream &os, ExtClass const &c)
{
  os << c.top.field()->header() << '\n';
  os << "top " << (c.top_label.empty() ? "-" : c.top_label) << '\n';
  os << "bottom " << (c.bottom_label.empty() ? "-" : c.bottom_label) << '\n';
  os << "gens " << c.cocycle.size() << '\n';
  for (auto const &m : c.cocycle)
    write_mat(os, m);
}

ExtClass read_ext_class(std::istream &is, GroupRep top, GroupRep bottom)
{
  std::string header;
  while (std::getline(is, header) && header.find_first_not_of(" \t\r") == std::string::npos) {
  }
  FieldPtr field = Field::parse_header(header);
  if (!same_field(field, top.field()))
    throw std::invalid_argument("class file field differs from the modules");
  std::string key, top_label, bottom_label;
  int ngens = -1;
  if (!(is >> key >> top_label) || key != "top")
    throw std::invalid_argument("class file: expected `top <label>`");
  if (!(is >> key >> bottom_label) || key != "bottom")
    throw std::invalid_argument("class file: expected `bottom <label>`");
  if (!(is >> key >> ngens) || key != "gens" || ngens != top.ngens())
    throw std::invalid_argument("class file: bad generator count");
  ExtClass c;
  for (int g = 0; g < ngens; ++g)
    c.cocycle.push_back(read_mat(is));
  c.top = std::move(top);
  c.bottom = std::move(bottom);
  c.top_label = top_label == "-" ? "" : top_label;
  c.bottom_label = bottom_label == "-" ? "" : bottom_label;
  check_class_shape(c);
  return c;
}

} // namespace brick
