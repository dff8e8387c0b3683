#ifndef LATTICE_FORGE_DISCFORM_HPP
#define LATTICE_FORGE_DISCFORM_HPP

#include <optional>

#include "lattice_forge/lattice.hpp"

namespace lattice_forge {

// Finite quadratic form (A, q) on A = Z/d1 x ... x Z/dk with d1 | d2 | ...,
// every di > 1, q valued in Q/2Z and its bilinear lift b in Q/Z.
// Elements are integer coefficient vectors on the generators.
class FiniteQuadraticForm {
public:
    FiniteQuadraticForm() = default;  // trivial group
    FiniteQuadraticForm(std::vector<Int> factors, RVec q_values, RatMat b_values);

    std::size_t ngens() const { return factors_.size(); }
    std::size_t length() const { return factors_.size(); }
    const std::vector<Int>& factors() const { return factors_; }
    const RVec& q_values() const { return q_values_; }
    const RatMat& b_values() const { return b_values_; }
    Int order() const;
    bool trivial() const { return factors_.empty(); }

    IVec reduce(const IVec& x) const;  // componentwise mod factors
    bool is_zero(const IVec& x) const;
    IVec add(const IVec& x, const IVec& y) const;
    IVec neg(const IVec& x) const;
    IVec scale(const Int& c, const IVec& x) const;
    Int element_order(const IVec& x) const;

    Rat q(const IVec& x) const;           // in [0, 2)
    Rat b(const IVec& x, const IVec& y) const;  // in [0, 1)

    FiniteQuadraticForm orthogonal_sum(const FiniteQuadraticForm& o) const;
    FiniteQuadraticForm negated() const;
    // Restriction to the maximal p-group.
    FiniteQuadraticForm p_part(const Int& p) const;
    // Generators of the p-part expressed in the coordinates of this form.
    std::vector<IVec> p_part_gens(const Int& p) const;

    // All elements as coefficient vectors; throws when order() > bound.
    std::vector<IVec> all_elements(const Int& bound = 100000) const;

    bool same_presentation(const FiniteQuadraticForm& o) const;

private:
    std::vector<Int> factors_;
    RVec q_values_;
    RatMat b_values_;
};

// Discriminant form A_L = L*/L with the induced Q/2Z-valued form.
FiniteQuadraticForm discriminant_form(const Lattice& l);

// Generators of A_L as rational vectors in the basis of L (one per invariant
// factor, matching discriminant_form(l)).
std::vector<RVec> discriminant_generators(const Lattice& l);

// Class of a rational vector x in A_L (x must lie in L*); coefficients on
// the generators returned by discriminant_generators.
IVec disc_class_of(const Lattice& l, const RVec& x);

// Equivalence of finite quadratic forms: p-part by p-part; cyclic p-parts by
// the square-class criterion, other p-parts by exhaustive isomorphism search
// (throws domain_error when the p-part order exceeds the bound).
bool forms_equivalent(const FiniteQuadraticForm& f1, const FiniteQuadraticForm& f2,
                      const Int& bound = 10000);

struct GenusDescriptor {
    Signature sig;
    FiniteQuadraticForm disc;
};

bool genus_equal(const GenusDescriptor& a, const GenusDescriptor& b, const Int& bound = 10000);

// Sufficient uniqueness-in-genus certificates.
enum class GenusCertificate {
    IndefiniteRankLength,  // indefinite, rank >= 3, rank >= length + 2
    HyperbolicSummand,     // L = U + L' with a structural U block
    TwoAdicPattern,        // indefinite, rank >= 3, invariant factors 2,2 / 2,4,d3=8k+4 / 4,4
};
std::string certificate_name(GenusCertificate c);

// Certificate from the Gram matrix alone (structural U detection only; the
// search-assisted variant lives with the embedding searches).
std::optional<GenusCertificate> genus_unique_certificate(const Lattice& l);

// True when some orthogonal block of the Gram matrix is exactly U.
bool has_structural_u_summand(const IntMat& gram);

}  // namespace lattice_forge

#endif
