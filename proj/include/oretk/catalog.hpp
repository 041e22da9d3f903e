#pragma once

#include "oretk/group.hpp"

#include <string>
#include <vector>

namespace oretk {

struct CatalogEntry {
    std::string name;
    GroupPtr group;
};

/// Builds a group from a catalog name. Supported names:
///   Cn (alias Z/n), Dn (dihedral of order 2n), Sn and An for n <= 7,
///   Q8, SL(2,3), and direct products joined with 'x', e.g. "C2xC2".
GroupPtr group_from_name(const std::string& name, int order_cap = kDefaultOrderCap);

/// The builtin verification catalog: S3, S4, A4, D4, Q8 and C2..C30.
std::vector<CatalogEntry> builtin_catalog(int order_cap = kDefaultOrderCap);

/// One group per line: `name; degree; generators`, e.g.
///   S4; 4; (0 1),(0 1 2 3)
/// '#' starts a comment, blank lines are skipped. An empty generator field
/// yields the trivial group of the stated degree.
std::vector<CatalogEntry> catalog_from_file(const std::string& path,
                                            int order_cap = kDefaultOrderCap);

/// FNV-1a hash over names, degrees and generator images, as 16 hex digits.
std::string catalog_hash(const std::vector<CatalogEntry>& catalog);

/// Subgroup spec inside a parent group: "e" (trivial), a generator list in
/// cycle notation such as "(0 1),(2 3)", or a catalog name whose element
/// set embeds verbatim (degree must match).
enum class SubgroupSpecKind { Auto, Trivial, Generators, Name };

Subgroup parse_subgroup_spec(const GroupPtr& parent, const std::string& spec,
                             SubgroupSpecKind kind = SubgroupSpecKind::Auto);

}  // namespace oretk
