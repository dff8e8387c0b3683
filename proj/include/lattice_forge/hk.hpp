#ifndef LATTICE_FORGE_HK_HPP
#define LATTICE_FORGE_HK_HPP

#include "lattice_forge/embed.hpp"

namespace lattice_forge {

// Known deformation types and their Beauville-Bogomolov lattices.
struct DeformationType {
    enum class Kind { K3n, Kumn, OG6, OG10 };
    Kind kind;
    int n = 0;  // for K3n / Kumn, n >= 2

    static DeformationType k3n(int n);
    static DeformationType kumn(int n);
    static DeformationType og6();
    static DeformationType og10();
    std::string name() const;
};
DeformationType parse_deformation_type(const std::string& text);

Lattice bb_lattice(const DeformationType& t);

// Period data: the deformation type together with an explicit primitive
// embedding of the Neron-Severi lattice into the corresponding BB lattice.
struct HKPeriod {
    DeformationType dtype;
    PrimitiveEmbedding ns_embedding;
};

// Mukai vectors (v0, v2, v4) with v2 in a declared NS lattice.
struct MukaiVector {
    Int v0;
    IVec v2;
    Int v4;
};

Int mukai_pairing(const MukaiVector& u, const MukaiVector& w, const Lattice& ns);

enum class SurfaceKind { K3, Abelian };
MukaiVector mukai_vector_of_sheaf(const Int& rank, const IVec& c1, const Int& c2,
                                  SurfaceKind surface, const Lattice& ns);

// Whether D spans a v-wall: (v0^2/4)(2 v0 v4 - (v0-1) v2.v2) < D.D < 0.
bool wall_test(const MukaiVector& v, const IVec& d, const Lattice& ns);

// Markman's P_n and the Kummer-side Q_n (with the sign convention -rs = n+1,
// so that (r,0,-s) has Mukai square -2(n+1); see the qn report metadata).
struct CoprimePair {
    Int r, s;
};
std::vector<CoprimePair> markman_P(int n);
std::vector<CoprimePair> kummer_Q(int n);

// Moduli criteria.  The witness class is searched in the embedded NS lattice
// with its divisibility computed in the ambient BB lattice.
Decision og6_moduli_criterion(const HKPeriod& p, const SearchOptions& opts = {});
Decision og10_moduli_criterion(const HKPeriod& p, const SearchOptions& opts = {});
Decision og10_lsv_criterion(const HKPeriod& p, const SearchOptions& opts = {});

// Shared engine: sigma in NS with given ambient square and ambient divisibility.
Decision ambient_class_search(const PrimitiveEmbedding& ns, const Int& square, const Int& div,
                              const SearchOptions& opts = {});

// Rank-3 classifications.
struct Rank3ClassReport {
    Int h_order;                  // glue order of the class
    IntMat ns_gram;               // canonical Gram of the NS lattice
    GenusDescriptor ns_genus;
    Decision moduli;
    bool is_sd = false;           // NS isometric to S_d = <2d> + <-2>^2
};
struct OG6Rank3Report {
    Int d;
    std::vector<Rank3ClassReport> classes;
    bool has_nonmoduli = false;
    std::optional<IntMat> nonmoduli_gram;  // [[2k,1,1],[1,-2,0],[1,0,-2]] when d = 4k+2
};
OG6Rank3Report og6_rank3_classify(const Int& d, const SearchOptions& opts = {});

struct OG10Rank3Report {
    Int d;
    bool exists_non_moduli = false;
    bool lsv_member = false;
    std::optional<Int> h;  // d = 3(3h+1) when non-moduli classes exist
};
OG10Rank3Report og10_rank3_classify(const Int& d);

// Orthogonal positive witness for a wall class a*u1 + b*u2 + c*x in U + <-4>
// (precondition c^2 - ab = 1); returns beta = (d, e, f) with b(alpha,beta)=0
// and q(beta) > 0.
IVec wall_orthogonal_witness(const Int& a, const Int& b, const Int& c);

// Gauss reduction of a positive definite even binary form [[2a,b],[b,2c]]:
// |b| <= a <= c with b >= 0 when |b| = a or a = c.
IntMat singular_k3_reduce(const IntMat& q);
bool binary_definite_isometric(const IntMat& q1, const IntMat& q2);

// B-field shift on Z*alpha + H2 + Z*beta with q(alpha)=q(beta)=0 and
// b(alpha,beta) = -1: (r, mu, s) -> (r, mu + r*lambda, s + b(lambda,mu) + r*q(lambda)/2).
struct ExtendedClass {
    Rat r;
    RVec mu;
    Rat s;
};
ExtendedClass bfield_transform(const RVec& lambda, const ExtendedClass& x, const Lattice& form);
Rat extended_q(const ExtendedClass& x, const Lattice& form);

// NS1 + U and NS2 + U isometric (equal signature and equivalent discriminant
// forms; a hyperbolic summand makes the genus a single class).
bool extended_lattices_isometric(const Lattice& ns1, const Lattice& ns2);

// Morrison-style test for T of signature (2,k), k <= 3, embedding primitively
// into U^3 (k<=1 always; k=2 iff T = U + T'; k=3 iff T = U^2 + T').
Decision morrison_abelian_check(const Lattice& t, const Catalog& catalog,
                                const SearchOptions& opts = {});
bool k3n_induced_unique(int rank_t);

// Census over reduced positive definite even binary forms by determinant.
struct CensusClassRow {
    Int h_order;
    GenusDescriptor ns_genus;
    std::optional<std::string> ns_name;  // catalog realization, when found
    Decision moduli;
};
struct CensusRow {
    Int det;
    IntMat form;  // reduced Gram [[2a,b],[b,2c]]
    std::vector<CensusClassRow> classes;
    bool has_nonmoduli = false;
};
struct CensusReport {
    std::vector<CensusRow> rows;            // sorted by (det, a, b, c)
    std::optional<IntMat> first_nonmoduli;  // first form with a non-moduli class
    std::optional<Int> first_nonmoduli_det;
    long undetermined_count = 0;
};
CensusReport census_smallest_nonmoduli(const DeformationType& t, const Int& max_det,
                                       const Catalog& catalog, const SearchOptions& opts = {});

// All reduced positive definite even binary forms with det(Gram) <= max_det,
// ordered by (det, a, |b|, c).
std::vector<IntMat> reduced_binary_forms(const Int& max_det);

}  // namespace lattice_forge

#endif
