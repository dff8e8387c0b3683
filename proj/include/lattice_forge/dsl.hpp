#ifndef LATTICE_FORGE_DSL_HPP
#define LATTICE_FORGE_DSL_HPP

#include "lattice_forge/lattice.hpp"

namespace lattice_forge {

struct ParseError : std::runtime_error {
    ParseError(std::size_t pos, const std::string& what)
        : std::runtime_error("parse error at position " + std::to_string(pos) + ": " + what),
          position(pos) {}
    std::size_t position;
};

// Grammar (ASCII):
//   expr := term ("+" term)*
//   term := atom ("^" INT)? ("(" INT ")")?
//   atom := "U" | "A" INT | "D" INT | "E" INT | "<" SIGNED_INT ">"
//         | "[" row (";" row)* "]"
//   row  := SIGNED_INT ("," SIGNED_INT)*
// "+" is orthogonal direct sum, "^n" the n-fold sum (n >= 1), "(k)" rescales
// the form by k, ADE lattices are negative definite, brackets give a raw Gram.
Lattice parse_lattice_expr(const std::string& text);

// Negative definite ADE root lattices (Gram = minus the Cartan matrix).
Lattice ade_lattice(char series, int n);
Lattice hyperbolic_plane();           // U = [[0,1],[1,0]]
Lattice rank_one(const Int& k);       // <k>, k even and nonzero

}  // namespace lattice_forge

#endif
