#ifndef LATTICE_FORGE_EMBED_HPP
#define LATTICE_FORGE_EMBED_HPP

#include "lattice_forge/catalog.hpp"
#include "lattice_forge/groups.hpp"

namespace lattice_forge {

// Primitive embedding of `source` into `ambient`: images (columns) realize the
// source Gram and span a saturated sublattice.
struct PrimitiveEmbedding {
    Lattice source;
    Lattice ambient;
    IntMat images;  // rank(ambient) x rank(source)
};
PrimitiveEmbedding make_primitive_embedding(const Lattice& source, const Lattice& ambient,
                                            const IntMat& images);

// Tri-state result of semi-decidable searches.
struct Decision {
    enum class Verdict { Yes, No, Undetermined };
    Verdict verdict = Verdict::Undetermined;
    std::optional<IVec> witness;
    std::optional<IVec> witness2;  // second vector of a hyperbolic pair
    std::string obstruction;       // set for No
    std::optional<long> bound;     // search height for Undetermined

    bool yes() const { return verdict == Verdict::Yes; }
    bool no() const { return verdict == Verdict::No; }
    bool undetermined() const { return verdict == Verdict::Undetermined; }

    static Decision make_yes(IVec w);
    static Decision make_yes_pair(IVec e, IVec f);
    static Decision make_no(std::string obstruction);
    static Decision make_undetermined(long bound);
};
std::string verdict_name(Decision::Verdict v);

// Nikulin-style uniqueness of the primitive embedding of S into the even
// unimodular lattice of the given signature.
bool unimodular_embedding_unique(const Lattice& s, Signature ambient);

// One class of the classification data for primitive embeddings of S into M:
// subgroups H_S, H_M, a form-preserving isomorphism gamma between them, and
// the genus (signature difference, minus the graph quotient form) of the
// orthogonal complement.
struct EmbeddingData {
    std::vector<IVec> h_s_gens;   // canonical generators of H_S in A_S coords
    std::vector<IVec> h_m_gens;   // their gamma-images in A_M coords
    std::vector<unsigned long> h_s_key;  // sorted encoded elements of H_S
    Int h_order;                  // |H_S| (= divisibility of the image for rank-1 sources)
    GenusDescriptor complement_genus;
};
std::vector<EmbeddingData> enumerate_embedding_data(const Lattice& s, const Lattice& m,
                                                    const Int& bound = 10000);

// Even overlattice generated by L and rational lifts of an isotropic subgroup
// of A_L.  Generators are rational vectors in the basis of L.
Lattice glue_overlattice(const Lattice& l, const std::vector<RVec>& isotropic_gens);

struct SearchOptions {
    long height = 8;
    // Boxes larger than this many vectors switch the search to block-support
    // mode (deterministic, but no exhaustiveness claim at the given height).
    double exhaustive_budget = 5e7;
    int support_rank_cap = 12;
};

// Vector of given even square and divisibility: sound discriminant-form
// obstruction first, then a bounded search for a witness.
Decision find_vector(const Lattice& l, const Int& square, const Int& div,
                     const SearchOptions& opts = {});

// Hyperbolic pair e,f with q(e)=q(f)=0, b(e,f)=1.
Decision find_hyperbolic_pair(const Lattice& l, const SearchOptions& opts = {});

// First catalog lattice matching the genus, in deterministic catalog order.
std::optional<Lattice> realize_genus(const GenusDescriptor& g, const Catalog& catalog,
                                     int max_rank = 26, const Int& max_det = 100000);

// Certificate including the search-assisted detection of a hyperbolic summand.
std::optional<GenusCertificate> genus_unique_certificate_with_search(
    const Lattice& l, const SearchOptions& opts = {});

// Optional constraints for find_embedding_by_search.
struct EmbeddingTarget {
    std::optional<FiniteQuadraticForm> complement_disc;
    std::optional<std::vector<unsigned long>> h_s_key;  // matched against glue data
};
std::optional<PrimitiveEmbedding> find_embedding_by_search(const Lattice& s, const Lattice& m,
                                                           const SearchOptions& opts = {},
                                                           const EmbeddingTarget& target = {});

// Glue data of an explicit primitive embedding: the orthogonal complement and
// the subgroups of A_S realized by the embedding.
struct GlueData {
    Complement complement;
    std::vector<unsigned long> g_s_key;  // projection of the glue group to A_S
    std::vector<unsigned long> h_s_key;  // orthogonal complement of the above
    Int glue_order;                      // [M : S + T]
};
GlueData embedding_glue_data(const PrimitiveEmbedding& e, const Int& bound = 100000);
// Just the H_S key of the glue data (cheaper: no complement computation).
std::vector<unsigned long> embedding_h_s_key(const PrimitiveEmbedding& e, const Int& bound = 100000);

// Deterministic shell enumeration helpers (exposed for reuse in hk and tests).
// Calls fn on every vector with sup-norm exactly h, lexicographic order; when
// canonical_sign is set only vectors whose first nonzero entry is positive are
// visited.  fn returning true stops the walk; returns whether it stopped.
bool for_each_shell_vector(int dims, long h, bool canonical_sign,
                           const std::function<bool(const IVec&)>& fn);

}  // namespace lattice_forge

#endif
