#ifndef LATTICE_FORGE_CATALOG_HPP
#define LATTICE_FORGE_CATALOG_HPP

#include "lattice_forge/lattice.hpp"

namespace lattice_forge {

// Genus-realization catalog: a list of lattice expressions used as direct
// summands when searching for a lattice in a prescribed genus.
struct CatalogAtom {
    std::string expr;
    Lattice lattice;
    Signature sig;
    Int abs_det;
};

struct Catalog {
    std::vector<CatalogAtom> atoms;
};

// Built-in default: U, U(2), A1..A4, D4..D8, E6..E8, <2k> and <-2k> for k <= 30.
Catalog default_catalog();

// One DSL expression per line; '#' starts a comment.
Catalog load_catalog_file(const std::string& path);

// Resolution order: explicit path, LATTICE_FORGE_CATALOG env var, built-in.
Catalog resolve_catalog(const std::string& explicit_path = {});

}  // namespace lattice_forge

#endif
