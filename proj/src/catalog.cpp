#include "lattice_forge/catalog.hpp"

#include <cstdlib>
#include <fstream>

#include "lattice_forge/dsl.hpp"

namespace lattice_forge {

namespace {

CatalogAtom make_atom(const std::string& expr) {
    Lattice l = parse_lattice_expr(expr);
    Signature sig = signature(l);
    Int d = l.det();
    if (d < 0) d = -d;
    return CatalogAtom{expr, l, sig, d};
}

}  // namespace

Catalog default_catalog() {
    Catalog c;
    std::vector<std::string> exprs = {"U", "U(2)"};
    for (int n = 1; n <= 4; ++n) exprs.push_back("A" + std::to_string(n));
    for (int n = 4; n <= 8; ++n) exprs.push_back("D" + std::to_string(n));
    for (int n = 6; n <= 8; ++n) exprs.push_back("E" + std::to_string(n));
    for (int k = 1; k <= 30; ++k) {
        exprs.push_back("<" + std::to_string(2 * k) + ">");
        exprs.push_back("<-" + std::to_string(2 * k) + ">");
    }
    for (const auto& e : exprs) c.atoms.push_back(make_atom(e));
    return c;
}

Catalog load_catalog_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw domain_error("cannot open catalog file: " + path);
    Catalog c;
    std::string line;
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        std::size_t a = line.find_first_not_of(" \t\r");
        if (a == std::string::npos) continue;
        std::size_t b = line.find_last_not_of(" \t\r");
        c.atoms.push_back(make_atom(line.substr(a, b - a + 1)));
    }
    if (c.atoms.empty()) throw domain_error("catalog file has no entries: " + path);
    return c;
}

Catalog resolve_catalog(const std::string& explicit_path) {
    if (!explicit_path.empty()) return load_catalog_file(explicit_path);
    if (const char* env = std::getenv("LATTICE_FORGE_CATALOG"); env && *env)
        return load_catalog_file(env);
    return default_catalog();
}

}  // namespace lattice_forge
