#ifndef LATTICE_FORGE_JSON_IO_HPP
#define LATTICE_FORGE_JSON_IO_HPP

#include <json.hpp>

#include "lattice_forge/hk.hpp"

namespace lattice_forge {

using Json = nlohmann::json;

// All numbers are serialized exactly: integers as JSON integers when they fit
// in 64 bits (as strings otherwise), rationals always as "p/q" strings.
Json int_to_json(const Int& v);
Json rat_to_json(const Rat& v);
Json ivec_to_json(const IVec& v);
Json rvec_to_json(const RVec& v);
Json gram_to_json(const IntMat& m);
IntMat gram_from_json(const Json& j);
IVec ivec_from_json(const Json& j);
RVec rvec_from_json(const Json& j);

Json lattice_to_json(const Lattice& l);
Json form_to_json(const FiniteQuadraticForm& f);
Json signature_to_json(const Signature& s);
Json genus_to_json(const GenusDescriptor& g);
Json decision_to_json(const Decision& d);
Json embedding_to_json(const PrimitiveEmbedding& e);
Json embedding_data_to_json(const EmbeddingData& d);
Json census_to_json(const CensusReport& r);
Json og6_rank3_to_json(const OG6Rank3Report& r);
Json og10_rank3_to_json(const OG10Rank3Report& r);

// Embedding files: {"source": gram-or-expr, "ambient": gram-or-expr, "images": [[...], ...]}.
PrimitiveEmbedding embedding_from_json(const Json& j);

}  // namespace lattice_forge

#endif
