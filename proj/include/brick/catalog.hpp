#ifndef BRICK_CATALOG_HPP
#define BRICK_CATALOG_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "brick/assembly.hpp"

namespace brick
{

enum class Tier
{
  required,
  stretch,
  metadata_only,
};

std::string tier_name(Tier t);

/// Thrown when a pipeline step is asked of a metadata-only entry.
class TierError : public std::runtime_error
{
public:
  using std::runtime_error::runtime_error;
};

/// An expected Ext^1 dimension between two roles; `at_least` relaxes
/// equality to a lower bound.
struct ExtExpectation
{
  std::string top;
  std::string bottom;
  int dim = 0;
  bool at_least = false;
};

/// Contents of meta.txt: `key: value` lines, '#' comments.
struct CatalogMeta
{
  std::string name;
  std::string group_name;
  std::uint64_t order = 0;
  int p = 0;
  int m = 0;
  Tier tier = Tier::metadata_only;
  std::string case_tag;  // i, ii, iii or pair
  int r = 0;
  std::vector<int> targets;                // simple dimensions the discovery must find
  std::vector<std::pair<std::string, int>> roles;  // role tag -> dimension
  std::vector<ExtExpectation> expect_ext;
  std::vector<std::string> seeds;          // GroupRep files in the entry directory
  long long coset_cap = kDefaultCosetCap;
  long long freehull_cap = kDefaultFreeHullCap;
  int tensor_cap = 100;                    // largest tensor product tried in discovery
  std::vector<std::string> quiver;         // free text, metadata-only entries
};

CatalogMeta parse_meta(std::istream &is);

class CatalogEntry
{
public:
  CatalogMeta const &meta() const { return meta_; }
  std::string const &dir() const { return dir_; }
  bool runnable() const { return meta_.tier != Tier::metadata_only; }
  /// Throw TierError on metadata-only entries.
  PermGroup const &group() const;
  FieldPtr const &field() const;
  std::vector<GroupRep> const &seeds() const;
  Presentation const &raw_presentation() const;
  /// Coset enumeration runs on first use (at load for the required tier).
  VerifiedPresentation const &presentation() const;
  bool presentation_verified() const { return verified_.has_value(); }
  std::string const &group_tag() const { return meta_.name; }

private:
  friend CatalogEntry load(std::string const &name, std::string const &catalog_dir,
                           std::optional<long long> coset_cap);
  void require_runnable() const;

  CatalogMeta meta_;
  std::string dir_;
  std::optional<PermGroup> group_;
  FieldPtr field_;
  std::vector<GroupRep> seeds_;
  Presentation raw_;
  mutable std::optional<VerifiedPresentation> verified_;
};

/// Directory compiled in as the default catalog location.
std::string default_catalog_dir();
std::vector<std::string> catalog_names(std::string const &catalog_dir = default_catalog_dir());

/**
 * Reads an entry and checks it: the permutation group has the recorded order,
 * every relator holds on the permutations and on each seed module, and for
 * the required tier the presentation is verified by coset enumeration.
 * Throws std::invalid_argument for an unknown name and std::runtime_error
 * (PresentationError for the presentation) when a check fails. `coset_cap`
 * overrides the entry's cap.
 */
CatalogEntry load(std::string const &name, std::string const &catalog_dir = default_catalog_dir(),
                  std::optional<long long> coset_cap = std::nullopt);

struct Simple
{
  std::string label;  // dimension, with a, b, ... when a dimension repeats
  GroupRep module;
};

/**
 * Chops the permutation module and the seed modules, then closes under duals
 * and tensor products (up to tensor_cap) until the target dimensions are
 * found. Every kept module is absolutely irreducible; results are sorted by
 * dimension, then by order of discovery.
 */
std::vector<Simple> discover_simples(CatalogEntry const &e, std::uint64_t seed = 1);

Simple const &find_simple(std::vector<Simple> const &simples, std::string const &label);

/// Ext^1 dimensions are cached per ordered pair of labels.
class ExtCache
{
public:
  explicit ExtCache(CatalogEntry const &e) : entry_(e) {}
  ExtSpace const &get(Simple const &top, Simple const &bottom);
  int dim(Simple const &top, Simple const &bottom) { return get(top, bottom).dim(); }

private:
  CatalogEntry const &entry_;
  std::map<std::pair<std::string, std::string>, ExtSpace> cache_;
};

/// Role tag -> simple label, with one line per decision taken.
struct RoleChoice
{
  std::map<std::string, std::string> label;
  std::vector<std::string> notes;
};

/**
 * Assigns a discovered simple to every role of the entry's blueprint so that
 * each pair of roles joined by k arrows has dim Ext^1 >= k. Roles with one
 * candidate of their dimension are fixed; the rest are searched in label
 * order and every candidate tried is recorded in the notes. Throws
 * std::runtime_error if no assignment works.
 */
RoleChoice choose_roles(CatalogEntry const &e, std::vector<Simple> const &simples, ExtCache &ext);

/// The blueprint for the entry's case at this m.
Blueprint entry_blueprint(CatalogEntry const &e, int m);

/**
 * Simples by role and classes by arrow tag. Arrows between the same pair of
 * roles take the first classes of a basis of Ext^1: the canonical basis, or
 * with `basis_seed` its image under a seeded random invertible matrix.
 * radical_simples is every discovered simple.
 */
Ingredients make_ingredients(CatalogEntry const &e, std::vector<Simple> const &simples, RoleChoice const &roles,
                             ExtCache &ext, std::optional<std::uint64_t> basis_seed = std::nullopt);

/// `KEY: value` report of the entry checks, ending in a VERDICT line.
struct EntryReport
{
  std::string text;
  bool pass = false;
};

EntryReport verify_entry(CatalogEntry const &e, std::uint64_t seed = 1);

} // namespace brick

#endif // BRICK_CATALOG_HPP
