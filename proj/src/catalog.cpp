#include "brick/catalog.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <random>
#include <set>
#include <sstream>

#ifndef BRICK_CATALOG_DIR
#define BRICK_CATALOG_DIR "catalog"
#endif

namespace brick
{

std::string tier_name(Tier t)
{
  switch (t) {
  case Tier::required:
    return "required";
  case Tier::stretch:
    return "stretch";
  case Tier::metadata_only:
    return "metadata-only";
  }
  return "?";
}

namespace
{

std::string trim(std::string s)
{
  auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos)
    return "";
  auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> split_ws(std::string const &s)
{
  std::istringstream is(s);
  std::vector<std::string> out;
  std::string w;
  while (is >> w)
    out.push_back(w);
  return out;
}

int to_int(std::string const &s, std::string const &key)
{
  try {
    std::size_t used = 0;
    long long v = std::stoll(s, &used);
    if (used != s.size())
      throw std::invalid_argument(s);
    return static_cast<int>(v);
  } catch (std::exception const &) {
    throw std::invalid_argument("meta: bad integer `" + s + "` for " + key);
  }
}

} // namespace

CatalogMeta parse_meta(std::istream &is)
{
  CatalogMeta meta;
  std::string line;
  while (std::getline(is, line)) {
    line = trim(line);
    if (line.empty() || line[0] == '#')
      continue;
    auto colon = line.find(':');
    if (colon == std::string::npos)
      throw std::invalid_argument("meta: expected `key: value`, got `" + line + "`");
    std::string key = trim(line.substr(0, colon));
    std::string value = trim(line.substr(colon + 1));
    auto words = split_ws(value);
    if (key == "name")
      meta.name = value;
    else if (key == "group")
      meta.group_name = value;
    else if (key == "order")
      meta.order = std::stoull(value);
    else if (key == "field") {
      if (words.size() != 2)
        throw std::invalid_argument("meta: field needs `p m`");
      meta.p = to_int(words[0], key);
      meta.m = to_int(words[1], key);
    } else if (key == "tier") {
      if (value == "required")
        meta.tier = Tier::required;
      else if (value == "stretch")
        meta.tier = Tier::stretch;
      else if (value == "metadata-only")
        meta.tier = Tier::metadata_only;
      else
        throw std::invalid_argument("meta: unknown tier `" + value + "`");
    } else if (key == "case") {
      if (words.empty())
        throw std::invalid_argument("meta: empty case");
      meta.case_tag = words[0];
      if (meta.case_tag == "iii") {
        if (words.size() != 2)
          throw std::invalid_argument("meta: case iii needs the cycle length");
        meta.r = to_int(words[1], key);
      } else if (meta.case_tag != "i" && meta.case_tag != "ii" && meta.case_tag != "pair")
        throw std::invalid_argument("meta: unknown case `" + value + "`");
    } else if (key == "targets") {
      for (auto const &w : words)
        meta.targets.push_back(to_int(w, key));
    } else if (key == "roles") {
      for (auto const &w : words) {
        auto eq = w.find('=');
        if (eq == std::string::npos)
          throw std::invalid_argument("meta: role `" + w + "` needs tag=dim");
        meta.roles.emplace_back(w.substr(0, eq), to_int(w.substr(eq + 1), key));
      }
    } else if (key == "expect_ext") {
      if (words.size() != 3)
        throw std::invalid_argument("meta: expect_ext needs `top bottom dim`");
      ExtExpectation x;
      x.top = words[0];
      x.bottom = words[1];
      std::string d = words[2];
      if (d.rfind(">=", 0) == 0) {
        x.at_least = true;
        d = d.substr(2);
      }
      x.dim = to_int(d, key);
      meta.expect_ext.push_back(x);
    } else if (key == "seeds")
      meta.seeds = words;
    else if (key == "coset_cap")
      meta.coset_cap = std::stoll(value);
    else if (key == "freehull_cap")
      meta.freehull_cap = std::stoll(value);
    else if (key == "tensor_cap")
      meta.tensor_cap = to_int(value, key);
    else if (key == "quiver")
      meta.quiver.push_back(value);
    else
      throw std::invalid_argument("meta: unknown key `" + key + "`");
  }
  if (meta.name.empty())
    throw std::invalid_argument("meta: missing name");
  return meta;
}

void CatalogEntry::require_runnable() const
{
  if (!runnable())
    throw TierError("catalog entry " + meta_.name + " is metadata-only; pipeline runs are refused");
}

PermGroup const &CatalogEntry::group() const
{
  require_runnable();
  return *group_;
}

FieldPtr const &CatalogEntry::field() const
{
  require_runnable();
  return field_;
}

std::vector<GroupRep> const &CatalogEntry::seeds() const
{
  require_runnable();
  return seeds_;
}

Presentation const &CatalogEntry::raw_presentation() const
{
  require_runnable();
  return raw_;
}

VerifiedPresentation const &CatalogEntry::presentation() const
{
  require_runnable();
  if (!verified_)
    verified_ = VerifiedPresentation::verify(raw_, *group_, meta_.coset_cap);
  return *verified_;
}

std::string default_catalog_dir()
{
  return BRICK_CATALOG_DIR;
}

std::vector<std::string> catalog_names(std::string const &catalog_dir)
{
  std::vector<std::string> names;
  for (auto const &d : std::filesystem::directory_iterator(catalog_dir))
    if (d.is_directory() && std::filesystem::exists(d.path() / "meta.txt"))
      names.push_back(d.path().filename().string());
  std::sort(names.begin(), names.end());
  return names;
}

CatalogEntry load(std::string const &name, std::string const &catalog_dir, std::optional<long long> coset_cap)
{
  namespace fs = std::filesystem;
  fs::path dir = fs::path(catalog_dir) / name;
  std::ifstream meta_file(dir / "meta.txt");
  if (!meta_file)
    throw std::invalid_argument("unknown catalog entry `" + name + "` in " + catalog_dir);
  CatalogEntry e;
  e.meta_ = parse_meta(meta_file);
  e.dir_ = dir.string();
  if (e.meta_.name != name)
    throw std::runtime_error("catalog entry " + name + " names itself " + e.meta_.name);
  if (coset_cap)
    e.meta_.coset_cap = *coset_cap;
  if (!e.runnable())
    return e;

  e.field_ = Field::make(e.meta_.p, e.meta_.m);
  std::ifstream gf(dir / "group.perm");
  if (!gf)
    throw std::runtime_error("catalog entry " + name + " has no group.perm");
  e.group_ = read_perm_group(gf);
  if (e.group_->order() != e.meta_.order)
    throw std::runtime_error("catalog entry " + name + ": permutation group has order " +
                             std::to_string(e.group_->order()) + ", meta says " + std::to_string(e.meta_.order));
  std::ifstream pf(dir / "presentation.txt");
  if (!pf)
    throw std::runtime_error("catalog entry " + name + " has no presentation.txt");
  e.raw_ = read_presentation(pf);
  if (e.raw_.ngens != e.group_->ngens())
    throw PresentationError("catalog entry " + name + ": presentation and group differ in generator count");
  for (auto const &r : e.raw_.relators)
    if (!perm_is_identity(evaluate(r, e.group_->gens())))
      throw PresentationError("catalog entry " + name + ": relator " + word_text(r) +
                              " fails on the permutations");
  for (auto const &s : e.meta_.seeds) {
    std::ifstream sf(dir / s);
    if (!sf)
      throw std::runtime_error("catalog entry " + name + ": missing seed " + s);
    GroupRep rep = read_group_rep(sf, name);
    if (!same_field(rep.field(), e.field_))
      throw std::runtime_error("catalog entry " + name + ": seed " + s + " is over the wrong field");
    if (rep.ngens() != e.group_->ngens())
      throw std::runtime_error("catalog entry " + name + ": seed " + s + " has the wrong generator count");
    for (auto const &r : e.raw_.relators)
      if (!rep.word(r).is_identity())
        throw std::runtime_error("catalog entry " + name + ": seed " + s + " fails relator " + word_text(r));
    e.seeds_.push_back(std::move(rep));
  }
  if (e.meta_.tier == Tier::required)
    e.presentation();
  return e;
}

std::vector<Simple> discover_simples(CatalogEntry const &e, std::uint64_t seed)
{
  std::vector<GroupRep> found;
  auto consider = [&](GroupRep const &x) {
    for (auto const &y : found)
      if (y.dim() == x.dim() && iso_test(x, y))
        return;
    if (is_absolutely_irreducible(x))
      found.push_back(x);
  };
  std::map<int, int> want;
  for (int d : e.meta().targets)
    ++want[d];
  auto done = [&] {
    std::map<int, int> have;
    for (auto const &x : found)
      ++have[x.dim()];
    for (auto [d, k] : want)
      if (have[d] < k)
        return false;
    return true;
  };

  std::uint64_t round = seed;
  for (auto const &f : chop(perm_to_rep(e.group(), e.field(), e.group_tag()), round++))
    consider(f.module);
  for (auto const &s : e.seeds())
    for (auto const &f : chop(s, round++))
      consider(f.module);

  std::vector<bool> dual_done;
  std::set<std::pair<std::size_t, std::size_t>> tried;
  while (!done()) {
    dual_done.resize(found.size(), false);
    bool progress = false;
    for (std::size_t i = 0; i < dual_done.size() && !done(); ++i)
      if (!dual_done[i]) {
        dual_done[i] = true;
        consider(dual(found[i]));
        progress = true;
      }
    if (done())
      break;
    // smallest untried tensor product
    std::optional<std::pair<std::size_t, std::size_t>> best;
    long best_dim = 0;
    for (std::size_t i = 0; i < found.size(); ++i)
      for (std::size_t j = i; j < found.size(); ++j) {
        long d = static_cast<long>(found[i].dim()) * found[j].dim();
        if (found[i].dim() == 1 || found[j].dim() == 1 || d > e.meta().tensor_cap || tried.count({i, j}))
          continue;
        if (!best || d < best_dim) {
          best = std::pair{i, j};
          best_dim = d;
        }
      }
    if (best) {
      tried.insert(*best);
      for (auto const &f : chop(tensor(found[best->first], found[best->second]), round++))
        consider(f.module);
      progress = true;
    }
    if (!progress || (!best && dual_done.size() == found.size()))
      break;
  }
  if (!done()) {
    std::string have;
    for (auto const &x : found)
      have += " " + std::to_string(x.dim());
    throw std::runtime_error("discovery for " + e.meta().name + " stopped with dimensions" + have);
  }

  std::stable_sort(found.begin(), found.end(), [](GroupRep const &a, GroupRep const &b) { return a.dim() < b.dim(); });
  std::vector<Simple> out;
  for (std::size_t i = 0; i < found.size(); ++i) {
    int d = found[i].dim();
    std::size_t first = i, count = 0;
    while (first > 0 && found[first - 1].dim() == d)
      --first;
    for (auto const &x : found)
      count += x.dim() == d;
    std::string label = std::to_string(d);
    if (count > 1)
      label += static_cast<char>('a' + (i - first));
    out.push_back({label, found[i]});
  }
  return out;
}

Simple const &find_simple(std::vector<Simple> const &simples, std::string const &label)
{
  for (auto const &s : simples)
    if (s.label == label)
      return s;
  throw std::invalid_argument("no simple labelled `" + label + "`");
}

ExtSpace const &ExtCache::get(Simple const &top, Simple const &bottom)
{
  auto key = std::pair{top.label, bottom.label};
  auto it = cache_.find(key);
  if (it == cache_.end())
    it = cache_.emplace(key, ext1_cocycle(top.module, bottom.module, entry_.presentation())).first;
  return it->second;
}

namespace
{

MmShape entry_shape(CatalogMeta const &meta)
{
  if (meta.case_tag == "i")
    return {MmCase::one_vertex_pair, 0};
  if (meta.case_tag == "ii")
    return {MmCase::three_vertex, 0};
  if (meta.case_tag == "iii")
    return {MmCase::cycle, meta.r};
  throw std::invalid_argument("catalog entry " + meta.name + " has no M_m blueprint (case " + meta.case_tag + ")");
}

// arrow tags between each ordered pair of roles, in arrow order
std::map<std::pair<std::string, std::string>, std::vector<std::string>> arrow_pairs(Blueprint const &b)
{
  QuiverRep q = build_mm(Field::make(2, 1), b.shape, 1);
  std::map<std::pair<std::string, std::string>, std::vector<std::string>> out;
  for (std::size_t x = 0; x < q.quiver().arrows.size(); ++x) {
    auto [s, t] = q.quiver().arrows[x];
    auto &tags = out[{b.vertex_simple[s], b.vertex_simple[t]}];
    if (std::find(tags.begin(), tags.end(), b.arrow_class[x]) == tags.end())
      tags.push_back(b.arrow_class[x]);
  }
  return out;
}

} // namespace

Blueprint entry_blueprint(CatalogEntry const &e, int m)
{
  return Blueprint::standard(entry_shape(e.meta()), m);
}

RoleChoice choose_roles(CatalogEntry const &e, std::vector<Simple> const &simples, ExtCache &ext)
{
  auto const &roles = e.meta().roles;
  std::vector<std::vector<std::string>> cand(roles.size());
  for (std::size_t i = 0; i < roles.size(); ++i) {
    for (auto const &s : simples)
      if (s.module.dim() == roles[i].second)
        cand[i].push_back(s.label);
    if (cand[i].empty())
      throw std::runtime_error("no simple of dimension " + std::to_string(roles[i].second) + " for role " +
                               roles[i].first);
  }
  std::map<std::pair<std::string, std::string>, int> need;
  if (e.meta().case_tag != "pair")
    for (auto const &[pair, tags] : arrow_pairs(entry_blueprint(e, 1)))
      need[pair] = static_cast<int>(tags.size());

  RoleChoice choice;
  bool searched = std::any_of(cand.begin(), cand.end(), [](auto const &c) { return c.size() > 1; });
  std::vector<std::size_t> idx(roles.size(), 0);
  std::optional<std::map<std::string, std::string>> chosen;
  for (;;) {
    std::map<std::string, std::string> assign;
    std::set<std::string> used;
    bool distinct = true;
    for (std::size_t i = 0; i < roles.size(); ++i) {
      assign[roles[i].first] = cand[i][idx[i]];
      distinct = distinct && used.insert(cand[i][idx[i]]).second;
    }
    if (distinct) {
      bool ok = true;
      std::string line;
      for (auto const &[pair, k] : need) {
        int d = ext.dim(find_simple(simples, assign[pair.first]), find_simple(simples, assign[pair.second]));
        ok = ok && d >= k;
        line += " Ext(" + pair.first + "=" + assign[pair.first] + "," + pair.second + "=" + assign[pair.second] +
                ")=" + std::to_string(d) + (d >= k ? "" : "<" + std::to_string(k));
      }
      if (searched)
        choice.notes.push_back("candidate" + line + (ok ? " ok" : " rejected"));
      if (ok && !chosen)
        chosen = assign;
    }
    std::size_t i = 0;
    while (i < roles.size() && ++idx[i] == cand[i].size())
      idx[i++] = 0;
    if (i == roles.size())
      break;
  }
  if (!chosen)
    throw std::runtime_error("no assignment of simples to roles has the required Ext^1 dimensions");
  choice.label = *chosen;
  return choice;
}

Ingredients make_ingredients(CatalogEntry const &e, std::vector<Simple> const &simples, RoleChoice const &roles,
                             ExtCache &ext, std::optional<std::uint64_t> basis_seed)
{
  Ingredients ing;
  for (auto const &[role, label] : roles.label)
    ing.simples[role] = find_simple(simples, label).module;
  for (auto const &s : simples)
    ing.radical_simples.push_back(s.module);

  Blueprint b = entry_blueprint(e, 1);
  std::mt19937_64 rng(basis_seed.value_or(0));
  for (auto const &[pair, tags] : arrow_pairs(b)) {
    auto const &top = find_simple(simples, roles.label.at(pair.first));
    auto const &bottom = find_simple(simples, roles.label.at(pair.second));
    ExtSpace const &space = ext.get(top, bottom);
    int d = space.dim();
    if (d < static_cast<int>(tags.size()))
      throw std::runtime_error("Ext^1(" + top.label + "," + bottom.label + ") is too small for the blueprint");
    Mat change = Mat::identity(e.field(), d);
    if (basis_seed)
      do {
        for (auto &x : change.data())
          x = static_cast<Elem>(rng() % e.field()->q());
      } while (rank(change) != d || (d > 0 && change.is_identity()));
    for (std::size_t k = 0; k < tags.size(); ++k) {
      ExtClass c = space.combination(change.row(static_cast<int>(k)));
      c.top_label = top.label;
      c.bottom_label = bottom.label;
      ing.classes[tags[k]] = std::move(c);
    }
  }
  return ing;
}

EntryReport verify_entry(CatalogEntry const &e, std::uint64_t seed)
{
  if (!e.runnable())
    throw TierError("catalog entry " + e.meta().name + " is metadata-only; pipeline runs are refused");
  std::ostringstream os;
  std::string failure;
  auto fail = [&failure](std::string const &why) {
    if (failure.empty())
      failure = why;
  };
  auto const &meta = e.meta();
  os << "ENTRY: " << meta.name << '\n';
  os << "GROUP: " << meta.group_name << '\n';
  os << "TIER: " << tier_name(meta.tier) << '\n';
  os << "FIELD: " << e.field()->header() << '\n';
  os << "SEED: " << seed << '\n';
  os << "COSET_CAP: " << meta.coset_cap << '\n';
  os << "ORDER: " << e.group().order() << '/' << meta.order << '\n';
  if (e.group().order() != meta.order)
    fail("group order");
  try {
    auto const &vp = e.presentation();
    os << "PRESENTATION: verified index " << vp.order() << ", " << vp.cosets_defined() << " cosets defined\n";
  } catch (PresentationError const &err) {
    os << "PRESENTATION: FAIL " << err.what() << '\n';
    fail("presentation");
    os << "VERDICT: FAIL " << failure << '\n';
    return {os.str(), false};
  }

  std::vector<Simple> simples;
  try {
    simples = discover_simples(e, seed);
  } catch (std::exception const &err) {
    os << "SIMPLES: FAIL " << err.what() << '\n';
    fail("simple discovery");
    os << "VERDICT: FAIL " << failure << '\n';
    return {os.str(), false};
  }
  os << "SIMPLES:";
  for (auto const &s : simples)
    os << ' ' << s.label;
  os << '\n';
  for (auto const &s : simples) {
    int end = static_cast<int>(hom_g(s.module, s.module).size());
    os << "END_DIM_" << s.label << ": " << end << '\n';
    if (end != 1)
      fail("simple " + s.label + " is not absolutely irreducible");
  }
  os << "TARGETS:";
  for (int d : meta.targets)
    os << ' ' << d;
  os << " found\n";

  ExtCache ext(e);
  RoleChoice roles;
  try {
    roles = choose_roles(e, simples, ext);
  } catch (std::exception const &err) {
    os << "ROLES: FAIL " << err.what() << '\n';
    fail("roles");
    os << "VERDICT: FAIL " << failure << '\n';
    return {os.str(), false};
  }
  for (auto const &[role, dim] : meta.roles)
    os << "ROLE_" << role << ": " << roles.label[role] << '\n';
  for (auto const &n : roles.notes)
    os << "ROLE_SEARCH: " << n << '\n';
  for (auto const &x : meta.expect_ext) {
    auto const &top = find_simple(simples, roles.label.at(x.top));
    auto const &bottom = find_simple(simples, roles.label.at(x.bottom));
    int d = ext.dim(top, bottom);
    os << "EXT1_" << x.top << "_" << x.bottom << ": " << d << ' ' << (x.at_least ? ">=" : "==") << ' ' << x.dim
       << '\n';
    if (x.at_least ? d < x.dim : d != x.dim)
      fail("Ext^1(" + x.top + "," + x.bottom + ") = " + std::to_string(d));
  }
  os << "VERDICT: " << (failure.empty() ? "PASS" : "FAIL " + failure) << '\n';
  return {os.str(), failure.empty()};
}

} // namespace brick
