#pragma once

#include <optional>
#include <string>
#include <vector>

namespace vknot {

struct CatalogEntry {
    std::string name;
    std::string code;
};

// Built-in named diagrams (unknot, trefoil, virtual_trefoil, kprime,
// kishino, figure_eight_E, hopf_link). Every entry parses.
const std::vector<CatalogEntry>& builtin_catalog();

// Loads a catalog file: one `name <whitespace> code` pair per line, '#'
// starts a comment. Every code is validated on load.
std::vector<CatalogEntry> load_catalog_file(const std::string& path);

// Parses catalog text (same format as the file form).
std::vector<CatalogEntry> parse_catalog(const std::string& text);

std::optional<std::string> catalog_lookup(const std::vector<CatalogEntry>& entries,
                                          const std::string& name);

// The active catalog: the file named by VKNOT_CATALOG when set, else the
// built-in entries.
std::vector<CatalogEntry> active_catalog();

}  // namespace vknot
