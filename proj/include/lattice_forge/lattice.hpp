#ifndef LATTICE_FORGE_LATTICE_HPP
#define LATTICE_FORGE_LATTICE_HPP

#include <optional>
#include <string>

#include "lattice_forge/ratmat.hpp"

namespace lattice_forge {

struct Signature {
    int plus = 0;
    int minus = 0;
    bool operator==(const Signature&) const = default;
    int rank() const { return plus + minus; }
    bool indefinite() const { return plus > 0 && minus > 0; }
};

// Even nondegenerate integral lattice, given by its Gram matrix in a fixed basis.
class Lattice {
public:
    explicit Lattice(IntMat gram, std::string label = {});

    int rank() const { return static_cast<int>(gram_.rows()); }
    const IntMat& gram() const { return gram_; }
    const std::string& label() const { return label_; }
    Lattice with_label(std::string label) const;

    const Int& det() const { return det_; }

    bool operator==(const Lattice& o) const { return gram_ == o.gram_; }

private:
    IntMat gram_;
    std::string label_;
    Int det_;
};

// x^T * gram * y.
Int inner(const Lattice& l, const IVec& x, const IVec& y);

// Exact signature by symmetric Gaussian elimination over Q.
Signature signature(const Lattice& l);
Signature signature_of_gram(const IntMat& gram);

// gcd of the pairings of a primitive nonzero vector against the whole lattice.
Int divisibility(const Lattice& l, const IVec& s);

Lattice direct_sum(const std::vector<Lattice>& parts);
Lattice rescale(const Lattice& l, const Int& k);

// Saturated orthogonal complement of the span of vs, with its basis in
// ambient coordinates (as columns).
struct Complement {
    Lattice lattice;
    IntMat basis;  // rank(l) x rank(complement)
};
Complement orthogonal_complement(const Lattice& l, const std::vector<IVec>& vs);

// Gram matrix of a set of vectors (as columns of basis) inside l.
IntMat gram_of(const Lattice& l, const IntMat& basis);

// Orthogonal block decomposition of the Gram matrix: connected components of
// the graph whose edges are nonzero off-diagonal entries.  Indices sorted.
std::vector<std::vector<std::size_t>> gram_blocks(const IntMat& gram);

}  // namespace lattice_forge

#endif
