#include "vknot/catalog.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>

#include "vknot/gauss.hpp"

namespace vknot {

const std::vector<CatalogEntry>& builtin_catalog() {
    static const std::vector<CatalogEntry> entries = {
        {"unknot", "@"},
        {"trefoil", "O1+U2+O3+U1+O2+U3+"},
        {"virtual_trefoil", "O1+O2+U1+U2+"},
        {"kprime", "O1+O2+O3+O4+U3+U1+U4+U2+"},
        // Transcribed entry: connected sum of two trivial two-crossing
        // diagrams spliced at locking break points (each summand alone
        // cancels by one R2 move; the splice separates each tail pair).
        {"kishino", "O1+U2-U1+O2-O3-U4+U3-O4+"},
        // Transcribed entry: shadow abcbac; crossings a and b are odd and
        // carry +, the even crossing c does not affect the odd writhe.
        {"figure_eight_E", "O1+O2+O3-U2+U1+U3-"},
        {"hopf_link", "O1+U2+;U1+O2+"},
    };
    return entries;
}

std::vector<CatalogEntry> parse_catalog(const std::string& text) {
    std::vector<CatalogEntry> entries;
    std::istringstream in(text);
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream fields(line);
        std::string name, code, extra;
        if (!(fields >> name)) continue;  // blank or comment-only line
        if (!(fields >> code))
            throw Error("catalog line " + std::to_string(lineno) + ": missing code for '" +
                        name + "'");
        if (fields >> extra)
            throw Error("catalog line " + std::to_string(lineno) + ": trailing content");
        try {
            parse(code);
        } catch (const Error& e) {
            throw Error("catalog entry '" + name + "' does not validate: " + e.what());
        }
        entries.push_back(CatalogEntry{name, code});
    }
    return entries;
}

std::vector<CatalogEntry> load_catalog_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open catalog file '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_catalog(buffer.str());
}

std::optional<std::string> catalog_lookup(const std::vector<CatalogEntry>& entries,
                                          const std::string& name) {
    for (const CatalogEntry& e : entries)
        if (e.name == name) return e.code;
    return std::nullopt;
}

std::vector<CatalogEntry> active_catalog() {
    if (const char* path = std::getenv("VKNOT_CATALOG"); path && *path)
        return load_catalog_file(path);
    return builtin_catalog();
}

}  // namespace vknot
