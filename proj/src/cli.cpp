#include "brick/cli.hpp"

#include <filesystem>
#include <fstream>
#include <map>
#include <memory>
#include <sstream>

#ifndef BRICK_VERSION
#define BRICK_VERSION "0.0.0"
#endif

namespace brick
{

std::string version()
{
  return BRICK_VERSION;
}

std::pair<int, int> parse_m_range(std::string const &text)
{
  auto to_m = [&text](std::string const &s) {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(s, &used);
    } catch (std::exception const &) {
      throw UsageError("bad m range `" + text + "`");
    }
    if (used != s.size())
      throw UsageError("bad m range `" + text + "`");
    if (v < 1)
      throw UsageError("m must be at least 1, got `" + text + "`");
    return v;
  };
  auto dots = text.find("..");
  int lo = to_m(dots == std::string::npos ? text : text.substr(0, dots));
  int hi = dots == std::string::npos ? lo : to_m(text.substr(dots + 2));
  if (lo > hi)
    throw UsageError("empty m range `" + text + "`");
  return {lo, hi};
}

std::pair<int, int> split_prime_power(int q)
{
  if (q < 2)
    throw UsageError("field order must be a prime power, got " + std::to_string(q));
  for (int p = 2; p <= q; ++p)
    if (q % p == 0) {
      int e = 0, rest = q;
      while (rest % p == 0) {
        rest /= p;
        ++e;
      }
      if (rest != 1)
        throw UsageError("field order must be a prime power, got " + std::to_string(q));
      return {p, e};
    }
  throw UsageError("bad field order");
}

namespace
{

class Refused : public std::runtime_error
{
public:
  using std::runtime_error::runtime_error;
};

MmShape shape_from(std::string const &tag, int r)
{
  if (tag == "i")
    return {MmCase::one_vertex_pair, 0};
  if (tag == "ii")
    return {MmCase::three_vertex, 0};
  if (tag == "iii") {
    if (r < 2)
      throw UsageError("case iii needs --r >= 2");
    return {MmCase::cycle, r};
  }
  throw UsageError("unknown case `" + tag + "`; expected i, ii or iii");
}

std::string case_label(MmShape s)
{
  return s.kind == MmCase::cycle ? "iii r=" + std::to_string(s.r) : case_name(s);
}

struct Report
{
  std::ostringstream os;
  std::string failure;

  template <class T> Report &line(std::string const &key, T const &value)
  {
    os << key << ": " << value << '\n';
    return *this;
  }
  void fail(std::string const &why)
  {
    if (failure.empty())
      failure = why;
  }
  CommandResult finish()
  {
    os << "VERDICT: " << (failure.empty() ? "PASS" : "FAIL " + failure) << '\n';
    return {os.str(), failure.empty() ? 0 : 1};
  }
};

void header(Report &rep, RunConfig const &cfg)
{
  rep.line("BRICK_VERSION", version());
  rep.line("COMMAND", cfg.command);
  rep.line("SEED", cfg.seed);
}

// Loads the entry and writes its part of the header. Metadata-only entries
// are always refused; stretch entries need allow_stretch.
CatalogEntry open_entry(Report &rep, RunConfig const &cfg)
{
  if (cfg.entry.empty())
    throw UsageError(cfg.command + " needs --entry");
  if (!std::filesystem::exists(std::filesystem::path(cfg.catalog_dir) / cfg.entry / "meta.txt"))
    throw UsageError("unknown catalog entry `" + cfg.entry + "`");
  auto e = load(cfg.entry, cfg.catalog_dir, cfg.coset_cap);
  rep.line("ENTRY", e.meta().name);
  rep.line("TIER", tier_name(e.meta().tier));
  if (!e.runnable())
    throw Refused("entry " + e.meta().name + " is metadata-only");
  if (e.meta().tier == Tier::stretch && !cfg.allow_stretch)
    throw Refused("entry " + e.meta().name + " is stretch tier; pass --allow-stretch");
  rep.line("FIELD", e.field()->header());
  rep.line("COSET_CAP", e.meta().coset_cap);
  rep.line("FREEHULL_CAP", cfg.freehull_cap.value_or(e.meta().freehull_cap));
  return e;
}

// Everything M_m needs, shared by build, verify and certify.
struct Pipeline
{
  CatalogEntry const &entry;
  std::vector<Simple> simples;
  ExtCache ext;
  RoleChoice roles;
  Ingredients ing;

  Pipeline(CatalogEntry const &e, RunConfig const &cfg)
      : entry(e), simples(discover_simples(e, cfg.seed)), ext(e), roles(choose_roles(e, simples, ext)),
        ing(make_ingredients(e, simples, roles, ext, cfg.basis_seed))
  {
  }

  void describe(Report &rep, RunConfig const &cfg) const
  {
    rep.line("BASIS_SEED", cfg.basis_seed ? std::to_string(*cfg.basis_seed) : std::string("canonical"));
    for (auto const &[role, dim] : entry.meta().roles)
      rep.line("ROLE_" + role, roles.label.at(role));
    for (auto const &n : roles.notes)
      rep.line("ROLE_SEARCH", n);
  }
};

MmShape entry_case(CatalogEntry const &e, RunConfig const &cfg)
{
  MmShape shape = entry_blueprint(e, 1).shape;
  if (!cfg.case_tag.empty()) {
    MmShape asked = shape_from(cfg.case_tag, cfg.case_tag == "iii" ? (cfg.r ? cfg.r : shape.r) : 0);
    if (asked.kind != shape.kind || asked.r != shape.r)
      throw UsageError("entry " + e.meta().name + " is case " + case_label(shape) + ", not " + case_label(asked));
  }
  return shape;
}

std::string without_verdict(std::string const &text)
{
  std::istringstream is(text);
  std::string out, l;
  while (std::getline(is, l))
    if (l.rfind("VERDICT:", 0) != 0)
      out += l + '\n';
  return out;
}

// Accepts a simple's label, a role tag of the entry, or dimN for the unique
// simple of dimension N.
Simple const &resolve_simple(std::string const &name, Pipeline const *pipe, std::vector<Simple> const &simples)
{
  if (name.empty())
    throw UsageError("ext needs --s and --t");
  if (name.rfind("dim", 0) == 0) {
    int d = 0;
    try {
      d = std::stoi(name.substr(3));
    } catch (std::exception const &) {
      throw UsageError("bad simple `" + name + "`");
    }
    Simple const *hit = nullptr;
    std::string labels;
    for (auto const &s : simples)
      if (s.module.dim() == d) {
        labels += " " + s.label;
        if (hit)
          throw UsageError("several simples of dimension " + std::to_string(d) + ":" + labels + "...");
        hit = &s;
      }
    if (!hit)
      throw UsageError("no simple of dimension " + std::to_string(d));
    return *hit;
  }
  for (auto const &s : simples)
    if (s.label == name)
      return s;
  if (pipe) {
    auto it = pipe->roles.label.find(name);
    if (it != pipe->roles.label.end())
      return find_simple(simples, it->second);
  }
  throw UsageError("no simple or role `" + name + "`");
}

// Metadata only; no group is loaded or verified.
CatalogMeta read_meta(RunConfig const &cfg, std::string const &name)
{
  std::ifstream in(std::filesystem::path(cfg.catalog_dir) / name / "meta.txt");
  if (!in)
    throw UsageError("unknown catalog entry `" + name + "`");
  return parse_meta(in);
}

void cmd_catalog(Report &rep, RunConfig const &cfg)
{
  for (auto const &n : catalog_names(cfg.catalog_dir)) {
    auto m = read_meta(cfg, n);
    rep.line("ENTRY", m.name + " " + m.group_name + " GF(" + std::to_string(m.p) + "^" + std::to_string(m.m) + ") " +
                          tier_name(m.tier) + (m.case_tag.empty() ? "" : " case " + m.case_tag) +
                          (m.r ? " " + std::to_string(m.r) : ""));
  }
}

void cmd_show(Report &rep, RunConfig const &cfg)
{
  if (cfg.entry.empty())
    throw UsageError("show needs --entry");
  auto m = read_meta(cfg, cfg.entry);
  rep.line("ENTRY", m.name);
  rep.line("GROUP", m.group_name);
  rep.line("ORDER", m.order);
  rep.line("FIELD_ORDER", std::to_string(m.p) + "^" + std::to_string(m.m));
  rep.line("TIER", tier_name(m.tier));
  if (!m.case_tag.empty())
    rep.line("CASE", m.case_tag + (m.r ? " " + std::to_string(m.r) : ""));
  for (auto const &[role, dim] : m.roles)
    rep.line("ROLE_" + role, dim);
  for (auto const &q : m.quiver)
    rep.line("QUIVER", q);
}

void cmd_field(Report &rep, RunConfig const &cfg)
{
  auto [p, e] = split_prime_power(cfg.field_order);
  auto f = Field::make(p, e);
  rep.line("FIELD", f->header());
  // a primitive element generates the multiplicative group
  Elem x = f->primitive();
  int order = 1;
  for (Elem y = x; y != 1; y = f->mul(y, x))
    ++order;
  rep.line("PRIMITIVE_ORDER", order);
  if (order != f->q() - 1)
    rep.fail("primitive element has order " + std::to_string(order));
}

void cmd_qend(Report &rep, RunConfig const &cfg)
{
  MmShape shape = shape_from(cfg.case_tag, cfg.r);
  auto [p, e] = split_prime_power(cfg.field_order);
  auto f = Field::make(p, e);
  rep.line("FIELD", f->header());
  rep.line("CASE", case_label(shape));
  rep.line("M_RANGE", std::to_string(cfg.m_lo) + ".." + std::to_string(cfg.m_hi));
  for (int m = cfg.m_lo; m <= cfg.m_hi; ++m) {
    auto mm = build_mm(f, shape, m);
    auto end = hom_space(mm, mm);
    rep.line("END_DIM_M" + std::to_string(m), end.size());
    if (end.size() != 1)
      rep.fail("End(M_" + std::to_string(m) + ") has dimension " + std::to_string(end.size()));
  }
}

void cmd_chop(Report &rep, RunConfig const &cfg)
{
  auto e = open_entry(rep, cfg);
  GroupRep mod;
  if (cfg.module == "perm")
    mod = perm_to_rep(e.group(), e.field(), e.group_tag());
  else if (cfg.module.rfind("seed", 0) == 0 && !std::filesystem::exists(cfg.module)) {
    std::size_t i = 0;
    try {
      i = std::stoul(cfg.module.substr(4));
    } catch (std::exception const &) {
      throw UsageError("bad module `" + cfg.module + "`");
    }
    if (i >= e.seeds().size())
      throw UsageError("entry has " + std::to_string(e.seeds().size()) + " seed modules");
    mod = e.seeds()[i];
  } else {
    std::ifstream in(cfg.module);
    if (!in)
      throw UsageError("cannot read module `" + cfg.module + "`");
    mod = read_group_rep(in, e.group_tag());
    if (!same_field(mod.field(), e.field()) || mod.ngens() != e.group().ngens())
      throw UsageError("module `" + cfg.module + "` does not match the entry");
  }
  rep.line("MODULE", cfg.module);
  rep.line("DIM", mod.dim());
  auto factors = chop(mod, cfg.seed);
  std::vector<int> dims;
  for (auto const &f : factors)
    for (int k = 0; k < f.multiplicity; ++k)
      dims.push_back(f.module.dim());
  std::string list;
  for (std::size_t i = 0; i < dims.size(); ++i)
    list += (i ? "," : "") + std::to_string(dims[i]);
  rep.line("FACTORS", list);
  for (std::size_t i = 0; i < factors.size(); ++i) {
    bool abs = is_absolutely_irreducible(factors[i].module, cfg.seed);
    rep.line("FACTOR_" + std::to_string(i + 1), "dim " + std::to_string(factors[i].module.dim()) + " mult " +
                                                     std::to_string(factors[i].multiplicity) +
                                                     (abs ? " absolutely irreducible" : " not absolutely irreducible"));
  }
}

void cmd_ext(Report &rep, RunConfig const &cfg)
{
  if (cfg.method != "cocycle" && cfg.method != "freehull" && cfg.method != "both")
    throw UsageError("unknown method `" + cfg.method + "`");
  auto e = open_entry(rep, cfg);
  auto simples = discover_simples(e, cfg.seed);
  bool wants_role = false;
  for (auto const &[role, dim] : e.meta().roles)
    wants_role = wants_role || role == cfg.s || role == cfg.t;
  std::unique_ptr<Pipeline> pipe;
  if (wants_role)
    pipe = std::make_unique<Pipeline>(e, cfg);
  auto const &s = resolve_simple(cfg.s, pipe.get(), simples);
  auto const &t = resolve_simple(cfg.t, pipe.get(), simples);
  rep.line("S", s.label + " (dim " + std::to_string(s.module.dim()) + ")");
  rep.line("T", t.label + " (dim " + std::to_string(t.module.dim()) + ")");
  std::optional<int> cocycle, freehull;
  if (cfg.method != "freehull") {
    cocycle = ext1_cocycle(s.module, t.module, e.presentation()).dim();
    rep.line("EXT1_DIM", *cocycle);
  }
  if (cfg.method != "cocycle") {
    freehull = ext1_freehull(s.module, t.module, e.group(), cfg.freehull_cap.value_or(e.meta().freehull_cap));
    rep.line(cocycle ? "EXT1_DIM_FREEHULL" : "EXT1_DIM", *freehull);
  }
  if (cocycle && freehull) {
    rep.line("METHODS_AGREE", *cocycle == *freehull ? "yes" : "no");
    if (*cocycle != *freehull)
      rep.fail("cocycle and free hull methods disagree");
  }
}

void cmd_build(Report &rep, RunConfig const &cfg)
{
  if (cfg.m_lo != cfg.m_hi)
    throw UsageError("build takes a single m");
  auto e = open_entry(rep, cfg);
  MmShape shape = entry_case(e, cfg);
  Pipeline pipe(e, cfg);
  pipe.describe(rep, cfg);
  auto b = entry_blueprint(e, cfg.m_lo);
  auto mod = build_group_mm(b, pipe.ing);
  rep.line("CASE", case_label(shape));
  rep.line("M", cfg.m_lo);
  rep.line("DIM", mod.dim());
  for (int j = 1; j <= b.m; ++j) {
    rep.line("SLOT_v" + std::to_string(j), b.top_simple(j) + " at " + std::to_string(top_offset(b, pipe.ing, j)));
    rep.line("SLOT_w" + std::to_string(j),
             b.bottom_simple(j) + " at " + std::to_string(bottom_offset(b, pipe.ing, j)));
  }
  if (!cfg.module_out.empty()) {
    std::ofstream out(cfg.module_out);
    if (!out)
      throw UsageError("cannot write `" + cfg.module_out + "`");
    write_group_rep(out, mod);
    rep.line("MODULE_FILE", cfg.module_out);
  }
}

void cmd_verify(Report &rep, RunConfig const &cfg, bool certify)
{
  auto e = open_entry(rep, cfg);
  if (certify)
    rep.line("COMMUTANT_CAP", cfg.commutant_cap);
  entry_case(e, cfg);
  Pipeline pipe(e, cfg);
  pipe.describe(rep, cfg);
  rep.line("M_RANGE", std::to_string(cfg.m_lo) + ".." + std::to_string(cfg.m_hi));
  for (int m = cfg.m_lo; m <= cfg.m_hi; ++m) {
    std::string stage;
    auto b = entry_blueprint(e, m);
    auto mod = build_group_mm(b, pipe.ing);
    auto v = verify_mm(mod, b, pipe.ing, e.raw_presentation());
    rep.os << without_verdict(v.render());
    if (!v.pass())
      stage = v.failure;
    auto emb = check_embedding(b, pipe.ing);
    rep.line("EMBEDDING", std::string(emb.intertwines ? "intertwines" : "does not intertwine") +
                              (emb.injective ? ", injective" : ", not injective") +
                              (emb.radical_compatible ? ", radical compatible" : ", radical incompatible"));
    if (!emb.ok() && stage.empty())
      stage = "embedding into M_" + std::to_string(m + 1);
    if (certify) {
      CentraliserCertificate cert;
      try {
        cert = centraliser_certificate(mod, b, pipe.ing, cfg.commutant_cap);
      } catch (std::length_error const &err) {
        cert.refusal = err.what();
      }
      rep.os << cert.render();
      if (!cert.ok() && stage.empty())
        stage = "certificate: " + cert.refusal;
    }
    rep.line("STAGE", std::to_string(m) + (stage.empty() ? " PASS" : " FAIL " + stage));
    if (!stage.empty())
      rep.fail("m = " + std::to_string(m) + ": " + stage);
  }
}

void cmd_check(Report &rep, RunConfig const &cfg)
{
  auto e = open_entry(rep, cfg);
  auto er = verify_entry(e, cfg.seed);
  rep.os << without_verdict(er.text);
  if (!er.pass) {
    auto at = er.text.rfind("VERDICT: FAIL ");
    rep.fail(er.text.substr(at + 14, er.text.size() - at - 15));
  }
}

// Case (i) needs dim Ext^1(S,T) >= 3 between non-isomorphic absolutely
// irreducible modules; this scans the discovered simples for such pairs.
void cmd_search(Report &rep, RunConfig const &cfg)
{
  auto e = open_entry(rep, cfg);
  auto simples = discover_simples(e, cfg.seed);
  ExtCache ext(e);
  int hits = 0;
  std::string labels;
  for (auto const &s : simples)
    labels += " " + s.label;
  rep.line("SIMPLES", labels.substr(1));
  for (auto const &s : simples)
    for (auto const &t : simples) {
      if (&s == &t)
        continue;
      int d = ext.dim(s, t);
      if (d == 0)
        continue;
      rep.line("EXT1_" + s.label + "_" + t.label, d);
      hits += d >= 3;
    }
  rep.line("CASE_I_PAIRS", hits);
}

} // namespace

CommandResult run_command(RunConfig const &cfg)
{
  using Command = void (*)(Report &, RunConfig const &);
  static std::map<std::string, Command> const commands = {
      {"catalog", cmd_catalog},
      {"show", cmd_show},
      {"field", cmd_field},
      {"qend", cmd_qend},
      {"chop", cmd_chop},
      {"ext", cmd_ext},
      {"build", cmd_build},
      {"verify", [](Report &r, RunConfig const &c) { cmd_verify(r, c, false); }},
      {"certify", [](Report &r, RunConfig const &c) { cmd_verify(r, c, true); }},
      {"check", cmd_check},
      {"search", cmd_search},
  };
  Report rep;
  try {
    auto it = commands.find(cfg.command);
    if (it == commands.end())
      throw UsageError("unknown command `" + cfg.command + "`");
    header(rep, cfg);
    it->second(rep, cfg);
    return rep.finish();
  } catch (UsageError const &err) {
    return {"ERROR: usage: " + std::string(err.what()) + '\n', 2};
  } catch (Refused const &err) {
    rep.os << "VERDICT: REFUSED " << err.what() << '\n';
    return {rep.os.str(), 3};
  } catch (std::exception const &err) {
    rep.failure = err.what();
    return rep.finish();
  }
}

} // namespace brick
