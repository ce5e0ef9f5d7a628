#include "doctest.h"

#include <sstream>

#include "brick/catalog.hpp"

using namespace brick;

TEST_CASE("parse_meta")
{
  std::istringstream is("# comment\n"
                        "name: x\n"
                        "group: G\n"
                        "order: 60\n"
                        "field: 3 2\n"
                        "tier: stretch\n"
                        "case: iii 3\n"
                        "targets: 1 4 4\n"
                        "roles: R=4 S1=1\n"
                        "expect_ext: R S1 >=2\n"
                        "expect_ext: S1 R 0\n"
                        "coset_cap: 500\n");
  auto m = parse_meta(is);
  CHECK(m.name == "x");
  CHECK(m.order == 60);
  CHECK(m.p == 3);
  CHECK(m.m == 2);
  CHECK(m.tier == Tier::stretch);
  CHECK(m.case_tag == "iii");
  CHECK(m.r == 3);
  CHECK(m.targets == std::vector<int>{1, 4, 4});
  REQUIRE(m.roles.size() == 2);
  CHECK(m.roles[0] == std::pair<std::string, int>{"R", 4});
  REQUIRE(m.expect_ext.size() == 2);
  CHECK(m.expect_ext[0].at_least);
  CHECK(m.expect_ext[0].dim == 2);
  CHECK_FALSE(m.expect_ext[1].at_least);
  CHECK(m.coset_cap == 500);

  std::istringstream bad_key("name: x\ncolour: red\n");
  CHECK_THROWS_AS(parse_meta(bad_key), std::invalid_argument);
  std::istringstream bad_case("name: x\ncase: iv\n");
  CHECK_THROWS_AS(parse_meta(bad_case), std::invalid_argument);
  std::istringstream no_name("order: 5\n");
  CHECK_THROWS_AS(parse_meta(no_name), std::invalid_argument);
}

TEST_CASE("catalog contents and tiers")
{
  auto names = catalog_names();
  for (auto const *n : {"a6_f9", "l25_f25", "l42_f2", "m12_f2", "hs_f3", "j1_f4", "psl35_f5"})
    CHECK(std::find(names.begin(), names.end(), n) != names.end());
  CHECK_THROWS_AS(load("no_such_group"), std::invalid_argument);

  for (auto const *n : {"hs_f3", "j1_f4", "psl35_f5"}) {
    auto e = load(n);
    CHECK_FALSE(e.runnable());
    CHECK(e.meta().tier == Tier::metadata_only);
    CHECK_FALSE(e.meta().quiver.empty());
    CHECK_THROWS_AS(e.group(), TierError);
    CHECK_THROWS_AS(e.presentation(), TierError);
    CHECK_THROWS_AS(verify_entry(e), TierError);
  }

  auto stretch = load("m12_f2");
  CHECK(stretch.meta().tier == Tier::stretch);
  CHECK_FALSE(stretch.presentation_verified());
}

TEST_CASE("required entries verify their presentation at load")
{
  auto e = load("a6_f9");
  CHECK(e.presentation_verified());
  CHECK(e.presentation().order() == 360);
  CHECK_THROWS_AS(load("a6_f9", default_catalog_dir(), 100), PresentationError);
}

TEST_CASE("A6 discovery and roles")
{
  auto e = load("a6_f9");
  auto simples = discover_simples(e);
  std::vector<int> dims;
  for (auto const &s : simples) {
    dims.push_back(s.module.dim());
    CHECK(hom_g(s.module, s.module).size() == 1);
  }
  // targets first; the closure may find more
  CHECK(std::vector<int>(dims.begin(), dims.begin() + 4) == std::vector<int>{1, 3, 3, 4});
  CHECK(simples[1].label == "3a");
  CHECK(simples[2].label == "3b");
  CHECK_THROWS_AS(find_simple(simples, "7"), std::invalid_argument);

  auto perm = chop(perm_to_rep(e.group(), e.field(), e.group_tag()));
  std::vector<std::pair<int, int>> profile;
  for (auto const &f : perm)
    profile.emplace_back(f.module.dim(), f.multiplicity);
  CHECK(profile == std::vector<std::pair<int, int>>{{1, 2}, {4, 1}});

  ExtCache ext(e);
  auto roles = choose_roles(e, simples, ext);
  CHECK(roles.label.at("S") == "1");
  CHECK(roles.label.at("T") == "4");
  CHECK((roles.label.at("R") == "3a" || roles.label.at("R") == "3b"));
  CHECK(roles.notes.size() == 2);
  CHECK(ext.dim(find_simple(simples, "1"), find_simple(simples, "4")) == 2);
}

TEST_CASE("verify_entry reports")
{
  auto a6 = verify_entry(load("a6_f9"));
  CHECK(a6.pass);
  CHECK(a6.text.find("EXT1_S_T: 2 == 2") != std::string::npos);
  CHECK(a6.text.find("ROLE_SEARCH: candidate") != std::string::npos);
  CHECK(a6.text.rfind("VERDICT: PASS") != std::string::npos);
  CHECK(verify_entry(load("a6_f9")).text == a6.text);

  auto l25 = verify_entry(load("l25_f25"));
  CHECK(l25.pass);
  CHECK(l25.text.find("FIELD: GF 5 2 2 4 1") != std::string::npos);
  CHECK(l25.text.find("EXT1_S_T: 2 == 2") != std::string::npos);
  CHECK(l25.text.find("EXT1_T_S: 2 == 2") != std::string::npos);
}
