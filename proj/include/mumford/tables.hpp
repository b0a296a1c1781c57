#pragma once

// Regeneration of the golden tables shipped under data/: the three segment
// tables of mu lower bounds, the (a, b) table of the case catalog, and the
// group counts feeding the census.  Regenerated values are diffed against
// the shipped files so the build can gate on them.

#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "mumford/rational.hpp"

namespace mumford::tables {

// data directory: MUMFORD_DATA_DIR env var when set, else the source tree
// default baked in at compile time
std::string data_dir();

// Recompute a table from first principles.  Names: "5.4.1", "5.4.2",
// "5.4.3" (segment mu tables), "6.3" (case (a,b) rows on the reference
// grid), "gnu" (group counts for the census window, by brute-force
// enumeration).
nlohmann::json regenerate(const std::string& name);

// Shipped golden content of the named table.
nlohmann::json load_golden(const std::string& name);

// Compare regenerated against golden; returns human-readable mismatch
// descriptions, empty when the table checks out.  Rows bounded below
// ("ge") pass when the recomputed minimum over the sampled parameters is
// at least the stated bound; exact rows ("eq") must match exactly.
std::vector<std::string> diff_table(const std::string& name);

// diff_table, throwing table_mismatch_error unless clean.
void check_table(const std::string& name);

// order -> number of groups of that order, for every order in the census
// window; read from the golden file, or recomputed when regen is set.
std::map<Int, long> gnu_counts(bool regen = false);
std::map<Int, long> nonsolvable_counts(bool regen = false);

}  // namespace mumford::tables
