#ifndef LATTICE_FORGE_GROUPS_HPP
#define LATTICE_FORGE_GROUPS_HPP

#include <functional>
#include <map>

#include "lattice_forge/discform.hpp"

namespace lattice_forge {

// A finite quadratic form presented on an arbitrary generating family:
// generator i has the given order, elements are integer coefficient vectors,
// q/b are evaluated by callbacks.  Used for product forms and subquotients
// whose presentation is not yet in invariant-factor shape.
struct FormView {
    std::vector<Int> orders;
    std::function<Rat(const IVec&)> q;
    std::function<Rat(const IVec&, const IVec&)> b;

    Int order() const {
        Int n = 1;
        for (const Int& d : orders) n *= d;
        return n;
    }
    IVec reduce(const IVec& x) const {
        IVec r(x.size());
        for (std::size_t i = 0; i < x.size(); ++i) r[i] = mod_floor(x[i], orders[i]);
        return r;
    }
    Int element_order(const IVec& x) const {
        Int o = 1;
        for (std::size_t i = 0; i < x.size(); ++i) {
            Int xi = mod_floor(x[i], orders[i]);
            if (xi != 0) o = lcm(o, exact_div(orders[i], gcd(xi, orders[i])));
        }
        return o;
    }
    std::vector<IVec> all_elements(const Int& bound) const;
};

FormView view_of(const FiniteQuadraticForm& f);
// q_a plus q_b on concatenated coordinates.
FormView product_view(const FiniteQuadraticForm& a, const FiniteQuadraticForm& b);

// Subquotient W/Gamma of the group underlying a FormView, with the induced
// quadratic form (the caller guarantees Gamma is isotropic and contained in
// the b-radical of W, as with Gamma inside its own orthogonal complement).
// Returns the canonical invariant-factor presentation plus lifts of the new
// generators to ambient coefficient vectors.
struct QuotientResult {
    FiniteQuadraticForm form;
    std::vector<IVec> gen_lifts;
};
QuotientResult quotient_form(const FormView& v, const std::vector<IVec>& w_gens,
                             const std::vector<IVec>& gamma_gens);

// Canonical invariant-factor presentation of a form given on arbitrary
// generators with orders `factors` (not necessarily a divisibility chain).
FiniteQuadraticForm normalize_presentation(const std::vector<Int>& factors, const RVec& q,
                                           const RatMat& b);

// Subgroup of a finite quadratic form, with its elements enumerated.
struct Subgroup {
    std::vector<IVec> gens;
    std::vector<IVec> elements;  // sorted by encoded index
    Int order() const { return Int(static_cast<unsigned long>(elements.size())); }
};

std::vector<Subgroup> all_subgroups(const FiniteQuadraticForm& f, const Int& bound);

// Elements of f orthogonal (w.r.t. b) to every generator in gens.
std::vector<IVec> orthogonal_elements(const FormView& v, const std::vector<IVec>& elements,
                                      const std::vector<IVec>& gens);

// All q- and b-preserving group isomorphisms from sub1 (inside f1) onto sub2
// (inside f2), returned as images of the canonical generators of sub1.
// canonical_gens receives the canonical generators (in f1 coordinates).
std::vector<std::vector<IVec>> subgroup_isometries(const FiniteQuadraticForm& f1,
                                                   const Subgroup& sub1,
                                                   const FiniteQuadraticForm& f2,
                                                   const Subgroup& sub2,
                                                   std::vector<IVec>* canonical_gens,
                                                   const Int& work_bound = 2000000);

// Mixed-radix code of a reduced element; usable as a dense key for small groups.
unsigned long encode_element(const FiniteQuadraticForm& f, const IVec& x);

// Form-preserving automorphisms of the whole group, as full element maps
// keyed by encode_element.
using AutoMap = std::map<unsigned long, IVec>;
std::vector<AutoMap> form_automorphism_maps(const FiniteQuadraticForm& f,
                                            const Int& work_bound = 2000000);

// Existence of a q/b-preserving isomorphism between two whole forms.
bool forms_isomorphic_bruteforce(const FiniteQuadraticForm& f1, const FiniteQuadraticForm& f2,
                                 const Int& bound);

}  // namespace lattice_forge

#endif
