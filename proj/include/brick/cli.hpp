#ifndef BRICK_CLI_HPP
#define BRICK_CLI_HPP

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>

#include "brick/catalog.hpp"

namespace brick
{

std::string version();

/// Bad flags or flag combinations; the command exits with code 2.
class UsageError : public std::invalid_argument
{
public:
  using std::invalid_argument::invalid_argument;
};

struct RunConfig
{
  std::string command;
  std::string entry;
  std::string catalog_dir = default_catalog_dir();
  std::string case_tag;  // i, ii or iii; must match the entry when both are given
  int r = 0;
  int m_lo = 1;
  int m_hi = 1;
  int field_order = 0;   // qend and field
  std::uint64_t seed = 1;
  std::optional<std::uint64_t> basis_seed;
  std::string module = "perm";  // chop: perm, seedN or a GroupRep file
  std::string s;                // ext: label, role tag or dimN
  std::string t;
  std::string method = "both";  // ext: cocycle, freehull or both
  std::optional<long long> coset_cap;
  std::optional<long long> freehull_cap;  // defaults to the entry's caps
  int commutant_cap = kCommutantCap;
  bool allow_stretch = false;
  std::string module_out;  // build: where to write M_m
};

/// "a..b" or "a"; both ends >= 1 and a <= b. Throws UsageError.
std::pair<int, int> parse_m_range(std::string const &text);

/// Prime power q as (p, e). Throws UsageError.
std::pair<int, int> split_prime_power(int q);

struct CommandResult
{
  std::string report;
  int exit_code = 0;  // 0 PASS, 1 FAIL, 2 usage, 3 refused by tier
};

/**
 * Runs one command: catalog, show, field, qend, chop, ext, build, verify,
 * certify, check or search. Reports are `KEY: value` lines opening with the
 * version, command, field, seed and caps and closing with a VERDICT line;
 * the same config gives the same bytes.
 */
CommandResult run_command(RunConfig const &cfg);

} // namespace brick

#endif // BRICK_CLI_HPP
