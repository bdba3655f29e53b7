#pragma once

// Front-end plumbing shared by the CLI tool and the tests: run
// configuration, label transliteration, table rendering (text and JSON)
// and the three subcommand drivers. Exit-code contract: 0 success,
// 1 verification mismatch, 2 usage error.

#include <iosfwd>
#include <string>
#include <vector>

#include "strtop/closed_form.hpp"
#include "strtop/gysin_solver.hpp"
#include "strtop/string_bracket.hpp"

namespace strtop {

struct RunConfig {
  int sphere = 0;
  long max_degree = -1;
  long winding = -1;  // required iff sphere == 1
  std::string format;  // "text", "json" or "" (fall back to STRTOP_FORMAT, then text)
  bool all = false;
  bool ascii = false;
  std::string out_path;
  int verbosity = 0;

  std::string validate() const;  // empty when valid
  SphereContext context() const;
  bool json_output() const;
};

// ASCII transliteration for pipelines: γ -> gamma, ⊗ -> (x), · -> *
std::string display_label(const std::string& label, bool ascii);
std::string group_to_string(const FgAbelianGroup& g, bool ascii);

int cmd_groups(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_bracket(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_verify(const RunConfig& cfg, std::ostream& out, std::ostream& err);

// bracket entries for a config; for the circle the table is solved at
// winding 2W so that products of cutoff-W generators stay in range, and
// the pair list is filtered back to |w| <= W
std::vector<BracketEntry> config_bracket_entries(const RunConfig& cfg, GroupTable& table_out);

std::string groups_json(const GroupTable& t, const RunConfig& cfg);
std::string bracket_json(const GroupTable& t, const std::vector<BracketEntry>& entries,
                         const RunConfig& cfg);

}  // namespace strtop
