#include "brick/assembly.hpp"

#include <set>
#include <sstream>
#include <stdexcept>

namespace brick
{

std::string case_name(MmShape shape)
{
  switch (shape.kind) {
  case MmCase::one_vertex_pair:
    return "i";
  case MmCase::three_vertex:
    return "ii";
  case MmCase::cycle:
    return "iii";
  }
  return "?";
}

Blueprint Blueprint::standard(MmShape shape, int m)
{
  Blueprint b;
  b.shape = shape;
  b.m = m;
  switch (shape.kind) {
  case MmCase::one_vertex_pair:
    b.vertex_simple = {"S", "T"};
    b.arrow_class = {"X", "Y", "Z"};
    break;
  case MmCase::three_vertex:
    b.vertex_simple = {"R", "S", "T"};
    b.arrow_class = {"X", "Y", "Z"};
    break;
  case MmCase::cycle:
    b.vertex_simple.push_back("R");
    for (int i = 1; i <= shape.r; ++i)
      b.vertex_simple.push_back("S" + std::to_string(i));
    for (int i = 1; i <= shape.r; ++i)
      b.vertex_simple.push_back("T" + std::to_string(i));
    for (int i = 1; i <= shape.r; ++i)
      b.arrow_class.push_back("Y" + std::to_string(i));
    for (int i = 1; i <= shape.r; ++i)
      b.arrow_class.push_back("Z" + std::to_string(i));
    b.arrow_class.push_back("X");
    break;
  }
  return b;
}

Blueprint Blueprint::with_m(int mm) const
{
  Blueprint b = *this;
  b.m = mm;
  return b;
}

std::string Blueprint::top_simple(int j) const
{
  return vertex_simple.at(mm_v_slot(shape, m, j).first);
}

std::string Blueprint::bottom_simple(int j) const
{
  return vertex_simple.at(mm_w_slot(shape, m, j).first);
}

namespace
{

GroupRep const &simple_of(Ingredients const &ing, std::string const &tag)
{
  auto it = ing.simples.find(tag);
  if (it == ing.simples.end())
    throw std::invalid_argument("blueprint names simple `" + tag + "` with no module");
  return it->second;
}

ExtClass const &class_of(Ingredients const &ing, std::string const &tag)
{
  auto it = ing.classes.find(tag);
  if (it == ing.classes.end())
    throw std::invalid_argument("blueprint names class `" + tag + "` with no cocycle");
  return it->second;
}

void check_blueprint(Blueprint const &b)
{
  QuiverRep shape = build_mm(Field::make(2, 1), b.shape, 1);
  if (static_cast<int>(b.vertex_simple.size()) != shape.quiver().vertices)
    throw std::invalid_argument("blueprint: one simple per vertex");
  if (b.arrow_class.size() != shape.quiver().arrows.size())
    throw std::invalid_argument("blueprint: one class per arrow");
  if (b.m < 1)
    throw std::invalid_argument("blueprint: m >= 1");
}

std::vector<GroupRep> blueprint_simples(Blueprint const &b, Ingredients const &ing)
{
  if (!ing.radical_simples.empty())
    return ing.radical_simples;
  std::vector<GroupRep> out;
  std::set<std::string> seen;
  for (auto const &tag : b.vertex_simple)
    if (seen.insert(tag).second && ing.simples.count(tag))
      out.push_back(ing.simples.at(tag));
  return out;
}

} // namespace

int top_offset(Blueprint const &b, Ingredients const &ing, int j)
{
  int off = 0;
  for (int i = 1; i < j; ++i)
    off += simple_of(ing, b.top_simple(i)).dim();
  return off;
}

int bottom_offset(Blueprint const &b, Ingredients const &ing, int j)
{
  int off = top_offset(b, ing, b.m + 1);
  for (int i = 1; i < j; ++i)
    off += simple_of(ing, b.bottom_simple(i)).dim();
  return off;
}

GroupRep build_group_mm(Blueprint const &b, Ingredients const &ing)
{
  check_blueprint(b);
  auto actions = mm_actions(b.shape, b.m);
  QuiverRep q = build_mm(Field::make(2, 1), b.shape, b.m);

  // classes must sit between their slots' simples, and classes between the
  // same pair of simples must be independent
  std::map<std::pair<std::string, std::string>, std::vector<int>> by_pair;
  std::set<int> used;
  for (auto const &act : actions)
    used.insert(act.arrow);
  for (int x : used) {
    auto [s, t] = q.quiver().arrows[x];
    std::string const &top = b.vertex_simple[s];
    std::string const &bottom = b.vertex_simple[t];
    ExtClass const &c = class_of(ing, b.arrow_class[x]);
    if (c.top.gens() != simple_of(ing, top).gens())
      throw std::invalid_argument("class `" + b.arrow_class[x] + "` does not have top `" + top + "`");
    if (c.bottom.gens() != simple_of(ing, bottom).gens())
      throw std::invalid_argument("class `" + b.arrow_class[x] + "` does not have bottom `" + bottom + "`");
    by_pair[{top, bottom}].push_back(x);
  }
  for (auto const &[pair, arrows] : by_pair) {
    std::vector<ExtClass> cls;
    for (int x : arrows)
      cls.push_back(class_of(ing, b.arrow_class[x]));
    if (auto dep = first_dependent_class(cls))
      throw std::invalid_argument("class `" + b.arrow_class[arrows[*dep]] + "` depends on the other classes from `" +
                                  pair.first + "` to `" + pair.second + "`");
  }

  GroupRep const &first = simple_of(ing, b.top_simple(1));
  FieldPtr field = first.field();
  int n = bottom_offset(b, ing, b.m + 1);
  std::vector<Mat> gens;
  for (int g = 0; g < first.ngens(); ++g) {
    Mat mat(field, n, n);
    for (int j = 1; j <= b.m; ++j) {
      GroupRep const &top = simple_of(ing, b.top_simple(j));
      GroupRep const &bottom = simple_of(ing, b.bottom_simple(j));
      require_compatible(first, top, "build_group_mm");
      require_compatible(first, bottom, "build_group_mm");
      mat.paste(top_offset(b, ing, j), top_offset(b, ing, j), top.gen(g));
      mat.paste(bottom_offset(b, ing, j), bottom_offset(b, ing, j), bottom.gen(g));
    }
    for (auto const &act : actions)
      mat.paste(top_offset(b, ing, act.v), bottom_offset(b, ing, act.w),
                class_of(ing, b.arrow_class[act.arrow]).cocycle[g]);
    gens.push_back(std::move(mat));
  }
  return GroupRep(field, n, std::move(gens), first.group());
}

std::string VerificationReport::render() const
{
  std::ostringstream os;
  auto yn = [](bool v) { return v ? "yes" : "no"; };
  os << "CASE: " << case_tag << '\n';
  os << "M: " << m << '\n';
  os << "DIM: " << dim << '\n';
  os << "EXPECTED_DIM: " << expected_dim << '\n';
  os << "RELATORS: " << (failed_relator ? "FAIL " + *failed_relator : std::string("ok")) << '\n';
  if (!failed_relator) {
    os << "RADICAL_DIM: " << radical_dim << '\n';
    os << "EXPECTED_RADICAL_DIM: " << expected_radical_dim << '\n';
    os << "RADICAL_IS_BOTTOM: " << yn(radical_is_bottom) << '\n';
    os << "RADICAL_SEMISIMPLE: " << yn(radical_semisimple) << '\n';
    for (auto const &[tag, v] : radical_mult)
      os << "RADICAL_MULT_" << tag << ": " << v.first << '/' << v.second << '\n';
    for (auto const &[tag, v] : top_mult)
      os << "TOP_MULT_" << tag << ": " << v.first << '/' << v.second << '\n';
    os << "END_DIM: " << end_dim << '\n';
  }
  os << "VERDICT: " << (pass() ? "PASS" : "FAIL " + failure) << '\n';
  return os.str();
}

VerificationReport verify_mm(GroupRep const &mod, Blueprint const &b, Ingredients const &ing,
                                     Presentation const &p)
{
  check_blueprint(b);
  VerificationReport r;
  r.case_tag = case_name(b.shape);
  if (b.shape.kind == MmCase::cycle)
    r.case_tag += " r=" + std::to_string(b.shape.r);
  r.m = b.m;
  r.dim = mod.dim();
  r.expected_dim = bottom_offset(b, ing, b.m + 1);
  r.expected_radical_dim = r.expected_dim - top_offset(b, ing, b.m + 1);
  auto fail = [&r](std::string const &why) {
    if (r.failure.empty())
      r.failure = why;
  };
  if (r.dim != r.expected_dim)
    fail("dimension " + std::to_string(r.dim) + " differs from the slot count " + std::to_string(r.expected_dim));

  for (auto const &rel : p.relators)
    if (!mod.word(rel).is_identity()) {
      r.failed_relator = word_text(rel);
      fail("relator " + word_text(rel) + " does not hold");
      return r;
    }

  std::map<std::string, int> bottom_count, top_count;
  for (int j = 1; j <= b.m; ++j) {
    ++top_count[b.top_simple(j)];
    ++bottom_count[b.bottom_simple(j)];
  }

  // (1) radical is the bottom, semisimple, with the blueprint's multiplicities
  Subspace rad;
  try {
    rad = radical(mod, blueprint_simples(b, ing));
  } catch (std::exception const &e) {
    fail(std::string("radical: ") + e.what());
    return r;
  }
  r.radical_dim = rad.dim();
  Mat bottom(mod.field(), r.expected_radical_dim, mod.dim());
  for (int i = 0; i < bottom.rows(); ++i)
    bottom(i, r.dim - r.expected_radical_dim + i) = 1;
  r.radical_is_bottom = r.dim == r.expected_dim && rad == Subspace::span(bottom);
  GroupRep rad_mod = sub(mod, rad);
  try {
    r.radical_semisimple = radical(rad_mod, blueprint_simples(b, ing)).dim() == 0;
  } catch (std::exception const &) {
    r.radical_semisimple = false;
  }
  int rad_accounted = 0;
  for (auto const &[tag, want] : bottom_count) {
    int got = static_cast<int>(hom_g(rad_mod, simple_of(ing, tag)).size());
    r.radical_mult.push_back({tag, {got, want}});
    rad_accounted += got * simple_of(ing, tag).dim();
    if (got != want)
      fail("radical has " + std::to_string(got) + " copies of " + tag + ", expected " + std::to_string(want));
  }
  if (r.radical_dim != r.expected_radical_dim)
    fail("radical dimension " + std::to_string(r.radical_dim) + ", expected " +
         std::to_string(r.expected_radical_dim));
  if (!r.radical_is_bottom)
    fail("radical is not the span of the bottom slots");
  if (!r.radical_semisimple || rad_accounted != r.radical_dim)
    fail("radical is not a direct sum of the bottom simples");

  // (2) top
  GroupRep top = quotient(mod, rad);
  int top_accounted = 0;
  for (auto const &[tag, want] : top_count) {
    int got = static_cast<int>(hom_g(top, simple_of(ing, tag)).size());
    r.top_mult.push_back({tag, {got, want}});
    top_accounted += got * simple_of(ing, tag).dim();
    if (got != want)
      fail("top has " + std::to_string(got) + " copies of " + tag + ", expected " + std::to_string(want));
  }
  if (top_accounted != top.dim())
    fail("top has composition factors outside the blueprint");

  // (3) endomorphisms
  r.end_dim = static_cast<int>(hom_g(mod, mod).size());
  if (r.end_dim != 1)
    fail("endomorphism ring has dimension " + std::to_string(r.end_dim));
  return r;
}

Mat embed_group_mm(Blueprint const &b, Ingredients const &ing)
{
  Blueprint next = b.with_m(b.m + 1);
  int rows = bottom_offset(b, ing, b.m + 1);
  int cols = bottom_offset(next, ing, next.m + 1);
  GroupRep const &first = simple_of(ing, b.top_simple(1));
  Mat f(first.field(), rows, cols);
  for (int j = 1; j <= b.m; ++j) {
    if (b.top_simple(j) != next.top_simple(j) || b.bottom_simple(j) != next.bottom_simple(j))
      throw std::invalid_argument("blueprints disagree on slot " + std::to_string(j));
    int td = simple_of(ing, b.top_simple(j)).dim();
    int bd = simple_of(ing, b.bottom_simple(j)).dim();
    f.paste(top_offset(b, ing, j), top_offset(next, ing, j), Mat::identity(f.field(), td));
    f.paste(bottom_offset(b, ing, j), bottom_offset(next, ing, j), Mat::identity(f.field(), bd));
  }
  return f;
}

EmbeddingCheck check_embedding(Blueprint const &b, Ingredients const &ing)
{
  GroupRep small = build_group_mm(b, ing);
  GroupRep big = build_group_mm(b.with_m(b.m + 1), ing);
  Mat f = embed_group_mm(b, ing);
  EmbeddingCheck c;
  c.intertwines = is_hom(small, big, f);
  c.injective = rank(f) == small.dim();
  auto simples = blueprint_simples(b, ing);
  Subspace rs = radical(small, simples);
  Subspace rb = radical(big, simples);
  c.radical_compatible = rs.dim() == 0 || rb.contains(Subspace::span(rs.basis() * f));
  return c;
}

std::string CentraliserCertificate::render() const
{
  std::ostringstream os;
  os << "COMMUTANT_DIM: " << commutant_dim << '\n';
  os << "COMMUTANT_SCALAR: " << (commutant_scalar ? "yes" : "no") << '\n';
  os << "QUOTIENT_DIM: " << quotient_dim << '\n';
  os << "LAMBDA: " << (lambda ? std::to_string(*lambda) : std::string("-")) << '\n';
  os << "CERTIFICATE: " << (ok() ? "trivial centraliser" : "REFUSED " + refusal) << '\n';
  return os.str();
}

CentraliserCertificate centraliser_certificate(GroupRep const &mod, int q0, int qdim, int cap)
{
  int n = mod.dim();
  if (n > cap)
    throw std::length_error("commutant solve refused: dimension " + std::to_string(n) + " exceeds cap " +
                            std::to_string(cap));
  FieldPtr const &fp = mod.field();
  Field const &f = *fp;
  CentraliserCertificate c;

  // vec(X rho) = vec(X) (I (x) rho), vec(rho X) = vec(X) (rho^T (x) I)
  std::vector<Mat> blocks;
  Mat id = Mat::identity(fp, n);
  for (auto const &g : mod.gens())
    blocks.push_back(kron(id, g) - kron(g.transpose(), id));
  Subspace comm = blocks.empty() ? Subspace::full(fp, n * n) : kernel(hstack(blocks));
  c.commutant_dim = comm.dim();
  c.commutant_scalar = comm.dim() == 1 && comm.contains(id.data());
  if (!c.commutant_scalar) {
    c.refusal = "commutant has dimension " + std::to_string(comm.dim());
    return c;
  }

  c.quotient_dim = qdim;
  if (qdim <= 0 || q0 < 0 || q0 + qdim > n) {
    c.refusal = "empty quotient";
    return c;
  }
  // the coordinates outside the quotient must span a submodule
  for (auto const &g : mod.gens())
    for (int i = 0; i < n; ++i) {
      if (i >= q0 && i < q0 + qdim)
        continue;
      for (int j = q0; j < q0 + qdim; ++j)
        if (g(i, j) != 0) {
          c.refusal = "complement of the quotient is not a submodule";
          return c;
        }
    }

  // z = t * B0 acts on the quotient as t * (B0 restricted); require identity
  Mat b0(fp, n, n);
  auto row = comm.basis().row(0);
  std::copy(row.begin(), row.end(), b0.data().begin());
  Mat restricted = b0.slice(q0, qdim, q0, qdim);
  Elem pivot = restricted(0, 0);
  if (pivot == 0) {
    c.refusal = "commutant vanishes on the quotient";
    return c;
  }
  Elem t = f.inv(pivot);
  if (!(restricted.scaled(t) == Mat::identity(fp, qdim))) {
    c.refusal = "no scalar acts as the identity on the quotient";
    return c;
  }
  Mat z = b0.scaled(t);
  c.lambda = z(0, 0);
  if (!z.is_identity())
    c.refusal = "forced central element is not the identity";
  return c;
}

CentraliserCertificate centraliser_certificate(GroupRep const &mod, Blueprint const &b, Ingredients const &ing,
                                               int cap)
{
  int q0 = top_offset(b, ing, b.m);
  int qdim = simple_of(ing, b.top_simple(b.m)).dim();
  return centraliser_certificate(mod, q0, qdim, cap);
}

} // namespace brick
