#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "lattice_forge/catalog.hpp"
#include "lattice_forge/dsl.hpp"
#include "lattice_forge/json_io.hpp"

namespace py = pybind11;
using namespace lattice_forge;

namespace {

// GMP integers/rationals cross the boundary as exact Python ints / "p/q" strings.
py::object to_py(const Int& v) {
    if (v.fits_slong_p()) return py::int_(v.get_si());
    return py::module_::import("builtins").attr("int")(v.get_str());
}
py::str rat_py(const Rat& v) { return py::str(rat_to_string(v)); }

Int int_from_py(const py::handle& v) { return Int(py::str(v).cast<std::string>()); }

IVec ivec_from_py(const py::sequence& seq) {
    IVec v;
    for (auto item : seq) v.push_back(int_from_py(item));
    return v;
}

py::list ivec_to_py(const IVec& v) {
    py::list out;
    for (const Int& x : v) out.append(to_py(x));
    return out;
}

IntMat gram_from_py(const py::sequence& rows) {
    std::size_t n = py::len(rows);
    if (n == 0) throw domain_error("empty Gram matrix");
    IntMat m(n, py::len(rows[0]));
    for (std::size_t i = 0; i < n; ++i) {
        py::sequence row = py::cast<py::sequence>(rows[i]);
        if (py::len(row) != m.cols()) throw domain_error("ragged Gram matrix");
        for (std::size_t j = 0; j < m.cols(); ++j)
            m.at(i, j) = int_from_py(row[j]);
    }
    return m;
}

py::list gram_to_py(const IntMat& m) {
    py::list rows;
    for (std::size_t i = 0; i < m.rows(); ++i) {
        py::list row;
        for (std::size_t j = 0; j < m.cols(); ++j) row.append(to_py(m.at(i, j)));
        rows.append(row);
    }
    return rows;
}

py::dict decision_to_py(const Decision& d) {
    py::dict out;
    out["verdict"] = verdict_name(d.verdict);
    if (d.witness) out["witness"] = ivec_to_py(*d.witness);
    if (d.witness2) out["witness2"] = ivec_to_py(*d.witness2);
    if (!d.obstruction.empty()) out["obstruction"] = d.obstruction;
    if (d.bound) out["bound"] = *d.bound;
    return out;
}

py::dict form_to_py(const FiniteQuadraticForm& f) {
    py::dict out;
    py::list factors;
    for (const Int& d : f.factors()) factors.append(to_py(d));
    out["factors"] = factors;
    py::list q;
    for (const Rat& v : f.q_values()) q.append(rat_py(v));
    out["q"] = q;
    py::list b;
    for (std::size_t i = 0; i < f.ngens(); ++i) {
        py::list row;
        for (std::size_t j = 0; j < f.ngens(); ++j) row.append(rat_py(f.b_values().at(i, j)));
        b.append(row);
    }
    out["b"] = b;
    return out;
}

SearchOptions opts_of(long height) {
    SearchOptions o;
    o.height = height;
    return o;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Exact-arithmetic computations with even integral lattices: discriminant "
              "forms, primitive embeddings, and hyperkaehler moduli criteria.";

    py::register_exception<domain_error>(m, "DomainError");
    py::register_exception<ParseError>(m, "LatticeParseError");

    py::class_<Lattice>(m, "Lattice")
        .def(py::init([](const py::sequence& gram) { return Lattice(gram_from_py(gram)); }),
             py::arg("gram"))
        .def_property_readonly("rank", &Lattice::rank)
        .def_property_readonly("gram", [](const Lattice& l) { return gram_to_py(l.gram()); })
        .def_property_readonly("det", [](const Lattice& l) { return to_py(l.det()); })
        .def_property_readonly("label", &Lattice::label)
        .def_property_readonly("signature",
                               [](const Lattice& l) {
                                   Signature s = signature(l);
                                   return py::make_tuple(s.plus, s.minus);
                               })
        .def("inner",
             [](const Lattice& l, const py::sequence& x, const py::sequence& y) {
                 return to_py(inner(l, ivec_from_py(x), ivec_from_py(y)));
             })
        .def("divisibility",
             [](const Lattice& l, const py::sequence& v) {
                 return to_py(divisibility(l, ivec_from_py(v)));
             })
        .def("__repr__", [](const Lattice& l) {
            return "<Lattice rank " + std::to_string(l.rank()) +
                   (l.label().empty() ? "" : " " + l.label()) + ">";
        });

    m.def("parse_lattice_expr", &parse_lattice_expr, py::arg("text"),
          "Parse a lattice expression such as 'U^3 + <-2>^2'.");
    m.def("direct_sum", [](const std::vector<Lattice>& parts) { return direct_sum(parts); });
    m.def("rescale",
          [](const Lattice& l, const py::int_& k) { return rescale(l, int_from_py(k)); });

    m.def("smith_normal_form", [](const py::sequence& mat) {
        SmithResult s = smith_normal_form(gram_from_py(mat));
        return py::make_tuple(gram_to_py(s.u), gram_to_py(s.d), gram_to_py(s.v));
    });

    m.def("orthogonal_complement", [](const Lattice& l, const py::sequence& vectors) {
        std::vector<IVec> vs;
        for (auto item : vectors) vs.push_back(ivec_from_py(py::cast<py::sequence>(item)));
        Complement c = orthogonal_complement(l, vs);
        return py::make_tuple(c.lattice, gram_to_py(c.basis));
    });

    m.def("discriminant_form",
          [](const Lattice& l) { return form_to_py(discriminant_form(l)); });
    m.def("forms_equivalent", [](const Lattice& l1, const Lattice& l2) {
        return forms_equivalent(discriminant_form(l1), discriminant_form(l2));
    });
    m.def("genus_unique_certificate", [](const Lattice& l) -> py::object {
        if (auto c = genus_unique_certificate(l)) return py::str(certificate_name(*c));
        return py::none();
    });

    m.def("unimodular_embedding_unique",
          [](const Lattice& s, int plus, int minus) {
              return unimodular_embedding_unique(s, Signature{plus, minus});
          });

    m.def("enumerate_embedding_data", [](const Lattice& s, const Lattice& ambient) {
        py::list out;
        for (const auto& d : enumerate_embedding_data(s, ambient)) {
            py::dict row;
            row["h_order"] = to_py(d.h_order);
            row["complement_signature"] = py::make_tuple(d.complement_genus.sig.plus,
                                                         d.complement_genus.sig.minus);
            row["complement_disc"] = form_to_py(d.complement_genus.disc);
            out.append(row);
        }
        return out;
    });

    m.def("glue_overlattice", [](const Lattice& l, const py::sequence& gens) {
        std::vector<RVec> gs;
        for (auto g : gens) {
            RVec v;
            for (auto x : py::cast<py::sequence>(g)) {
                Rat r(py::str(x).cast<std::string>());
                r.canonicalize();
                v.push_back(r);
            }
            gs.push_back(v);
        }
        return glue_overlattice(l, gs);
    });

    m.def(
        "find_vector",
        [](const Lattice& l, const py::int_& square, const py::int_& div, long height) {
            return decision_to_py(
                find_vector(l, int_from_py(square), int_from_py(div), opts_of(height)));
        },
        py::arg("lattice"), py::arg("square"), py::arg("div") = 1, py::arg("height") = 8);

    m.def(
        "find_hyperbolic_pair",
        [](const Lattice& l, long height) {
            return decision_to_py(find_hyperbolic_pair(l, opts_of(height)));
        },
        py::arg("lattice"), py::arg("height") = 8);

    m.def("bb_lattice", [](const std::string& type) {
        return bb_lattice(parse_deformation_type(type));
    });

    m.def(
        "mukai_pairing",
        [](const py::sequence& u, const py::sequence& w, const Lattice& ns) {
            IVec uu = ivec_from_py(u), ww = ivec_from_py(w);
            auto split = [&](const IVec& v) {
                if (static_cast<int>(v.size()) != ns.rank() + 2)
                    throw domain_error("Mukai vector needs rank(NS) + 2 entries");
                return MukaiVector{v.front(), IVec(v.begin() + 1, v.end() - 1), v.back()};
            };
            return to_py(mukai_pairing(split(uu), split(ww), ns));
        },
        py::arg("u"), py::arg("w"), py::arg("ns"));

    m.def(
        "mukai_vector_of_sheaf",
        [](const py::int_& rank, const py::sequence& c1, const py::int_& c2,
           const std::string& surface, const Lattice& ns) {
            SurfaceKind kind = surface == "k3" ? SurfaceKind::K3 : SurfaceKind::Abelian;
            MukaiVector v = mukai_vector_of_sheaf(int_from_py(rank), ivec_from_py(c1),
                                                  int_from_py(c2), kind, ns);
            py::list out;
            out.append(to_py(v.v0));
            out.append(ivec_to_py(v.v2));
            out.append(to_py(v.v4));
            return out;
        },
        py::arg("rank"), py::arg("c1"), py::arg("c2"), py::arg("surface"), py::arg("ns"));

    m.def("wall_test", [](const py::sequence& v, const py::sequence& d, const Lattice& ns) {
        IVec vv = ivec_from_py(v);
        if (static_cast<int>(vv.size()) != ns.rank() + 2)
            throw domain_error("Mukai vector needs rank(NS) + 2 entries");
        MukaiVector mv{vv.front(), IVec(vv.begin() + 1, vv.end() - 1), vv.back()};
        return wall_test(mv, ivec_from_py(d), ns);
    });

    m.def("markman_P", [](int n) {
        py::list out;
        for (const auto& p : markman_P(n)) out.append(py::make_tuple(to_py(p.r), to_py(p.s)));
        return out;
    });
    m.def("kummer_Q", [](int n) {
        py::list out;
        for (const auto& p : kummer_Q(n)) out.append(py::make_tuple(to_py(p.r), to_py(p.s)));
        return out;
    });

    m.def(
        "og6_rank3_classify",
        [](long d, long height) {
            OG6Rank3Report r = og6_rank3_classify(Int(d), opts_of(height));
            py::dict out;
            out["d"] = d;
            out["has_nonmoduli"] = r.has_nonmoduli;
            if (r.nonmoduli_gram) out["nonmoduli_gram"] = gram_to_py(*r.nonmoduli_gram);
            py::list classes;
            for (const auto& c : r.classes) {
                py::dict row;
                row["h_order"] = to_py(c.h_order);
                row["ns_gram"] = gram_to_py(c.ns_gram);
                row["moduli"] = decision_to_py(c.moduli);
                row["is_sd"] = c.is_sd;
                classes.append(row);
            }
            out["classes"] = classes;
            return out;
        },
        py::arg("d"), py::arg("height") = 8);

    m.def("og10_rank3_classify", [](long d) {
        OG10Rank3Report r = og10_rank3_classify(Int(d));
        py::dict out;
        out["d"] = d;
        out["exists_non_moduli"] = r.exists_non_moduli;
        out["lsv_member"] = r.lsv_member;
        return out;
    });

    m.def("singular_k3_reduce", [](const py::sequence& gram) {
        return gram_to_py(singular_k3_reduce(gram_from_py(gram)));
    });

    m.def(
        "census_smallest_nonmoduli",
        [](const std::string& type, long max_det, long height) {
            CensusReport r = census_smallest_nonmoduli(parse_deformation_type(type),
                                                       Int(max_det), resolve_catalog(),
                                                       opts_of(height));
            py::dict out;
            out["undetermined_count"] = r.undetermined_count;
            if (r.first_nonmoduli) {
                out["first_nonmoduli"] = gram_to_py(*r.first_nonmoduli);
                out["first_nonmoduli_det"] = to_py(*r.first_nonmoduli_det);
            }
            py::list rows;
            for (const auto& row : r.rows) {
                py::dict jr;
                jr["det"] = to_py(row.det);
                jr["form"] = gram_to_py(row.form);
                jr["has_nonmoduli"] = row.has_nonmoduli;
                rows.append(jr);
            }
            out["rows"] = rows;
            return out;
        },
        py::arg("type"), py::arg("max_det"), py::arg("height") = 8);

    m.attr("__version__") = "0.1.0";
}
