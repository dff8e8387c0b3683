#include "lattice_forge/json_io.hpp"

#include "lattice_forge/dsl.hpp"

namespace lattice_forge {

Json int_to_json(const Int& v) {
    if (v.fits_slong_p()) return Json(static_cast<long long>(v.get_si()));
    return Json(v.get_str());
}

Json rat_to_json(const Rat& v) {
    Rat c = v;
    c.canonicalize();
    if (c.get_den() == 1) return int_to_json(c.get_num());
    return Json(c.get_str());
}

Json ivec_to_json(const IVec& v) {
    Json a = Json::array();
    for (const Int& x : v) a.push_back(int_to_json(x));
    return a;
}

Json rvec_to_json(const RVec& v) {
    Json a = Json::array();
    for (const Rat& x : v) a.push_back(rat_to_json(x));
    return a;
}

Json gram_to_json(const IntMat& m) {
    Json a = Json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(int_to_json(m.at(i, j)));
        a.push_back(row);
    }
    return a;
}

namespace {

Int int_from_json(const Json& j) {
    if (j.is_number_integer()) return Int(static_cast<long>(j.get<long long>()));
    if (j.is_string()) return Int(j.get<std::string>());
    throw domain_error("expected integer");
}

Rat rat_from_json(const Json& j) {
    if (j.is_number_integer()) return Rat(static_cast<long>(j.get<long long>()));
    if (j.is_string()) {
        Rat r(j.get<std::string>());
        r.canonicalize();
        return r;
    }
    throw domain_error("expected rational");
}

}  // namespace

IntMat gram_from_json(const Json& j) {
    if (!j.is_array() || j.empty()) throw domain_error("expected Gram matrix array");
    std::size_t n = j.size();
    IntMat m(n, j[0].size());
    for (std::size_t i = 0; i < n; ++i) {
        if (j[i].size() != m.cols()) throw domain_error("ragged Gram matrix");
        for (std::size_t k = 0; k < m.cols(); ++k) m.at(i, k) = int_from_json(j[i][k]);
    }
    return m;
}

IVec ivec_from_json(const Json& j) {
    IVec v;
    for (const auto& e : j) v.push_back(int_from_json(e));
    return v;
}

RVec rvec_from_json(const Json& j) {
    RVec v;
    for (const auto& e : j) v.push_back(rat_from_json(e));
    return v;
}

Json lattice_to_json(const Lattice& l) {
    Json j;
    j["rank"] = l.rank();
    j["gram"] = gram_to_json(l.gram());
    j["det"] = int_to_json(l.det());
    if (!l.label().empty()) j["label"] = l.label();
    Signature s = signature(l);
    j["signature"] = signature_to_json(s);
    return j;
}

Json form_to_json(const FiniteQuadraticForm& f) {
    Json j;
    Json factors = Json::array();
    for (const Int& d : f.factors()) factors.push_back(int_to_json(d));
    j["factors"] = factors;
    Json q = Json::array();
    for (const Rat& v : f.q_values()) q.push_back(rat_to_string(v));
    j["q"] = q;
    Json b = Json::array();
    for (std::size_t i = 0; i < f.ngens(); ++i) {
        Json row = Json::array();
        for (std::size_t k = 0; k < f.ngens(); ++k)
            row.push_back(rat_to_string(f.b_values().at(i, k)));
        b.push_back(row);
    }
    j["b"] = b;
    j["order"] = int_to_json(f.order());
    return j;
}

Json signature_to_json(const Signature& s) { return Json::array({s.plus, s.minus}); }

Json genus_to_json(const GenusDescriptor& g) {
    Json j;
    j["signature"] = signature_to_json(g.sig);
    j["disc"] = form_to_json(g.disc);
    return j;
}

Json decision_to_json(const Decision& d) {
    Json j;
    j["verdict"] = verdict_name(d.verdict);
    if (d.witness) j["witness"] = ivec_to_json(*d.witness);
    if (d.witness2) j["witness2"] = ivec_to_json(*d.witness2);
    if (!d.obstruction.empty()) j["obstruction"] = d.obstruction;
    if (d.bound) j["bound"] = *d.bound;
    return j;
}

Json embedding_to_json(const PrimitiveEmbedding& e) {
    Json j;
    j["source"] = gram_to_json(e.source.gram());
    j["ambient"] = gram_to_json(e.ambient.gram());
    Json images = Json::array();
    for (std::size_t c = 0; c < e.images.cols(); ++c) images.push_back(ivec_to_json(e.images.column_vec(c)));
    j["images"] = images;
    return j;
}

Json embedding_data_to_json(const EmbeddingData& d) {
    Json j;
    j["h_order"] = int_to_json(d.h_order);
    Json hs = Json::array();
    for (const IVec& g : d.h_s_gens) hs.push_back(ivec_to_json(g));
    j["h_s_gens"] = hs;
    Json hm = Json::array();
    for (const IVec& g : d.h_m_gens) hm.push_back(ivec_to_json(g));
    j["h_m_gens"] = hm;
    j["complement_genus"] = genus_to_json(d.complement_genus);
    return j;
}

Json census_to_json(const CensusReport& r) {
    Json rows = Json::array();
    for (const auto& row : r.rows) {
        Json jr;
        jr["det"] = int_to_json(row.det);
        jr["form"] = gram_to_json(row.form);
        jr["has_nonmoduli"] = row.has_nonmoduli;
        Json classes = Json::array();
        for (const auto& c : row.classes) {
            Json jc;
            jc["h_order"] = int_to_json(c.h_order);
            jc["ns_genus"] = genus_to_json(c.ns_genus);
            if (c.ns_name) jc["ns_realization"] = *c.ns_name;
            jc["moduli"] = decision_to_json(c.moduli);
            classes.push_back(jc);
        }
        jr["classes"] = classes;
        rows.push_back(jr);
    }
    Json j;
    j["rows"] = rows;
    j["undetermined_count"] = r.undetermined_count;
    if (r.first_nonmoduli) {
        j["first_nonmoduli"] = gram_to_json(*r.first_nonmoduli);
        j["first_nonmoduli_det"] = int_to_json(*r.first_nonmoduli_det);
    }
    return j;
}

Json og6_rank3_to_json(const OG6Rank3Report& r) {
    Json j;
    j["d"] = int_to_json(r.d);
    j["has_nonmoduli"] = r.has_nonmoduli;
    if (r.nonmoduli_gram) j["nonmoduli_gram"] = gram_to_json(*r.nonmoduli_gram);
    Json classes = Json::array();
    for (const auto& c : r.classes) {
        Json jc;
        jc["h_order"] = int_to_json(c.h_order);
        jc["ns_gram"] = gram_to_json(c.ns_gram);
        jc["ns_genus"] = genus_to_json(c.ns_genus);
        jc["moduli"] = decision_to_json(c.moduli);
        jc["is_sd"] = c.is_sd;
        classes.push_back(jc);
    }
    j["classes"] = classes;
    return j;
}

Json og10_rank3_to_json(const OG10Rank3Report& r) {
    Json j;
    j["d"] = int_to_json(r.d);
    j["exists_non_moduli"] = r.exists_non_moduli;
    j["lsv_member"] = r.lsv_member;
    if (r.h) j["h"] = int_to_json(*r.h);
    return j;
}

PrimitiveEmbedding embedding_from_json(const Json& j) {
    auto lattice_of = [](const Json& spec) {
        if (spec.is_string()) return parse_lattice_expr(spec.get<std::string>());
        return Lattice(gram_from_json(spec));
    };
    Lattice source = lattice_of(j.at("source"));
    Lattice ambient = lattice_of(j.at("ambient"));
    const Json& images = j.at("images");
    std::vector<IVec> cols;
    for (const auto& im : images) cols.push_back(ivec_from_json(im));
    return make_primitive_embedding(source, ambient, from_columns(ambient.rank(), cols));
}

}  // namespace lattice_forge
