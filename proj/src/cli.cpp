#include "lattice_forge/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <ostream>
#include <sstream>

#include "lattice_forge/dsl.hpp"
#include "lattice_forge/json_io.hpp"

namespace lattice_forge::cli {

namespace {

struct CommonFlags {
    std::string format = "text";
    long height = 8;
    std::string catalog_path;
};

void add_format_flag(CLI::App* cmd, CommonFlags& flags) {
    cmd->add_option("--format", flags.format, "Output format: text|json (default text)")
        ->check(CLI::IsMember({"text", "json"}));
}

void add_height_flag(CLI::App* cmd, CommonFlags& flags) {
    cmd->add_option("--height", flags.height, "Search height, coordinate sup-norm (default 8)")
        ->check(CLI::PositiveNumber);
}

SearchOptions options_of(const CommonFlags& flags) {
    SearchOptions o;
    o.height = flags.height;
    return o;
}

IVec parse_int_vector(const std::string& text) {
    IVec v;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        std::size_t a = tok.find_first_not_of(" \t");
        std::size_t b = tok.find_last_not_of(" \t");
        if (a == std::string::npos) throw domain_error("empty vector entry");
        v.emplace_back(tok.substr(a, b - a + 1));
    }
    if (v.empty()) throw domain_error("empty vector");
    return v;
}

RVec parse_rat_vector(const std::string& text) {
    RVec v;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        std::size_t a = tok.find_first_not_of(" \t");
        std::size_t b = tok.find_last_not_of(" \t");
        if (a == std::string::npos) throw domain_error("empty vector entry");
        Rat r(tok.substr(a, b - a + 1));
        r.canonicalize();
        v.push_back(r);
    }
    if (v.empty()) throw domain_error("empty vector");
    return v;
}

std::vector<IVec> parse_int_vectors(const std::string& text) {
    std::vector<IVec> out;
    std::stringstream ss(text);
    std::string part;
    while (std::getline(ss, part, ';')) out.push_back(parse_int_vector(part));
    return out;
}

std::vector<RVec> parse_rat_vectors(const std::string& text) {
    std::vector<RVec> out;
    std::stringstream ss(text);
    std::string part;
    while (std::getline(ss, part, ';')) out.push_back(parse_rat_vector(part));
    return out;
}

// Accepts either the DSL bracket form "[4,2;2,4]" or JSON "[[4,2],[2,4]]".
IntMat parse_gram_argument(const std::string& text) {
    auto trimmed = text;
    if (!trimmed.empty() && trimmed.front() == '[' && trimmed.find("[[") == 0) {
        Json j = Json::parse(trimmed);
        return gram_from_json(j);
    }
    Lattice l = parse_lattice_expr(trimmed);
    return l.gram();
}

struct Report {
    Json doc;
    explicit Report(const std::string& verb) {
        doc["schema"] = 1;
        doc["verb"] = verb;
        doc["inputs_echo"] = Json::object();
        doc["diagnostics"] = Json::array();
    }
    void echo(const std::string& key, const Json& value) { doc["inputs_echo"][key] = value; }
    void diagnostic(const std::string& message) { doc["diagnostics"].push_back(message); }
    void result(const Json& value) { doc["result"] = value; }
    void flag_undetermined() { doc["undetermined"] = true; }
};

void render_text(const Json& j, std::ostream& out, int indent = 0) {
    std::string pad(indent, ' ');
    if (j.is_object()) {
        for (auto it = j.begin(); it != j.end(); ++it) {
            if (it.value().is_object() || it.value().is_array()) {
                out << pad << it.key() << ":\n";
                render_text(it.value(), out, indent + 2);
            } else {
                out << pad << it.key() << ": " << it.value().dump() << "\n";
            }
        }
    } else if (j.is_array()) {
        bool scalars = true;
        for (const auto& e : j)
            if (e.is_object() || e.is_array()) scalars = false;
        if (scalars) {
            out << pad << j.dump() << "\n";
        } else {
            for (const auto& e : j) {
                out << pad << "-\n";
                render_text(e, out, indent + 2);
            }
        }
    } else {
        out << pad << j.dump() << "\n";
    }
}

void emit(const Report& report, const CommonFlags& flags, std::ostream& out) {
    if (flags.format == "json") {
        out << report.doc.dump(2) << "\n";
    } else {
        render_text(report.doc, out);
    }
}

void attach_decision(Report& report, const Decision& d) {
    report.result(decision_to_json(d));
    if (d.undetermined()) report.flag_undetermined();
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"lattice-forge: exact lattice computations for even integral lattices "
                 "(discriminant forms, primitive embeddings, hyperkaehler criteria)"};
    app.require_subcommand(1);
    CommonFlags flags;

    // Deferred actions run after parsing so that usage errors exit 2 first.
    std::function<void()> action;
    Report report("none");

    // ---------------------------------------------------------------- latt
    auto* latt = app.add_subcommand("latt", "Core lattice operations");
    latt->require_subcommand(1);

    {
        auto* c = latt->add_subcommand("info",
                                       "Rank, signature, determinant and discriminant group "
                                       "of a lattice expression");
        auto expr = std::make_shared<std::string>();
        c->add_option("expr", *expr, "Lattice expression, e.g. \"U^3 + <-2>^2\"")->required();
        add_format_flag(c, flags);
        c->callback([&, expr] {
            action = [&, expr] {
                Report r("latt.info");
                r.echo("expr", *expr);
                Lattice l = parse_lattice_expr(*expr);
                Json res = lattice_to_json(l);
                FiniteQuadraticForm f = discriminant_form(l);
                res["disc"] = form_to_json(f);
                if (auto cert = genus_unique_certificate(l))
                    res["genus_unique_certificate"] = certificate_name(*cert);
                r.result(res);
                report = r;
            };
        });
    }
    {
        auto* c = latt->add_subcommand("disc", "Discriminant quadratic form A_L, q_L");
        auto expr = std::make_shared<std::string>();
        c->add_option("expr", *expr, "Lattice expression")->required();
        add_format_flag(c, flags);
        c->callback([&, expr] {
            action = [&, expr] {
                Report r("latt.disc");
                r.echo("expr", *expr);
                r.result(form_to_json(discriminant_form(parse_lattice_expr(*expr))));
                report = r;
            };
        });
    }
    {
        auto* c = latt->add_subcommand(
            "equiv", "Equivalence of the discriminant forms of two lattices (p-part by "
                     "p-part; cf. Nikulin 1979, sec. 1 and Miranda-Morrison IV.1.4)");
        auto e1 = std::make_shared<std::string>(), e2 = std::make_shared<std::string>();
        auto bound = std::make_shared<long>(10000);
        c->add_option("expr1", *e1)->required();
        c->add_option("expr2", *e2)->required();
        c->add_option("--bound", *bound, "Brute-force bound on p-part order (default 10000)");
        add_format_flag(c, flags);
        c->callback([&, e1, e2, bound] {
            action = [&, e1, e2, bound] {
                Report r("latt.equiv");
                r.echo("expr1", *e1);
                r.echo("expr2", *e2);
                bool eq = forms_equivalent(discriminant_form(parse_lattice_expr(*e1)),
                                           discriminant_form(parse_lattice_expr(*e2)),
                                           Int(*bound));
                r.result(Json{{"equivalent", eq}});
                report = r;
            };
        });
    }
    {
        auto* c = latt->add_subcommand("complement",
                                       "Saturated orthogonal complement of spanned vectors");
        auto expr = std::make_shared<std::string>();
        auto vecs = std::make_shared<std::string>();
        c->add_option("expr", *expr, "Ambient lattice expression")->required();
        c->add_option("--vectors", *vecs, "Vectors \"a,b,...;c,d,...\" in the ambient basis")
            ->required();
        add_format_flag(c, flags);
        c->callback([&, expr, vecs] {
            action = [&, expr, vecs] {
                Report r("latt.complement");
                r.echo("expr", *expr);
                r.echo("vectors", *vecs);
                Lattice l = parse_lattice_expr(*expr);
                Complement comp = orthogonal_complement(l, parse_int_vectors(*vecs));
                Json res;
                res["gram"] = gram_to_json(comp.lattice.gram());
                res["basis"] = gram_to_json(comp.basis);
                res["signature"] = signature_to_json(signature(comp.lattice));
                res["det"] = int_to_json(comp.lattice.det());
                res["disc"] = form_to_json(discriminant_form(comp.lattice));
                r.result(res);
                report = r;
            };
        });
    }
    {
        auto* c = latt->add_subcommand("find-vector",
                                       "Primitive vector of given square and divisibility "
                                       "(sound discriminant obstruction, bounded search)");
        auto expr = std::make_shared<std::string>();
        auto square = std::make_shared<std::string>();
        auto div = std::make_shared<std::string>("1");
        c->add_option("expr", *expr)->required();
        c->add_option("--square", *square, "Required even square")->required();
        c->add_option("--div", *div, "Required divisibility (default 1)");
        add_height_flag(c, flags);
        add_format_flag(c, flags);
        c->callback([&, expr, square, div] {
            action = [&, expr, square, div] {
                Report r("latt.find-vector");
                r.echo("expr", *expr);
                r.echo("square", *square);
                r.echo("div", *div);
                Decision d = find_vector(parse_lattice_expr(*expr), Int(*square), Int(*div),
                                         options_of(flags));
                attach_decision(r, d);
                report = r;
            };
        });
    }
    {
        auto* c = latt->add_subcommand("glue",
                                       "Even overlattice glued along an isotropic subgroup "
                                       "of the discriminant group");
        auto expr = std::make_shared<std::string>();
        auto gens = std::make_shared<std::string>();
        c->add_option("expr", *expr)->required();
        c->add_option("--gens", *gens, "Rational glue vectors \"1/2,1/2;...\"")->required();
        add_format_flag(c, flags);
        c->callback([&, expr, gens] {
            action = [&, expr, gens] {
                Report r("latt.glue");
                r.echo("expr", *expr);
                r.echo("gens", *gens);
                Lattice l = parse_lattice_expr(*expr);
                Lattice glued = glue_overlattice(l, parse_rat_vectors(*gens));
                Json res;
                res["gram"] = gram_to_json(glued.gram());
                res["det"] = int_to_json(glued.det());
                res["disc"] = form_to_json(discriminant_form(glued));
                r.result(res);
                report = r;
            };
        });
    }
    {
        auto* c = latt->add_subcommand("embed-search",
                                       "Explicit primitive embedding with prescribed Gram "
                                       "matrix, by bounded search");
        auto s_expr = std::make_shared<std::string>(), m_expr = std::make_shared<std::string>();
        c->add_option("source", *s_expr)->required();
        c->add_option("ambient", *m_expr)->required();
        add_height_flag(c, flags);
        add_format_flag(c, flags);
        c->callback([&, s_expr, m_expr] {
            action = [&, s_expr, m_expr] {
                Report r("latt.embed-search");
                r.echo("source", *s_expr);
                r.echo("ambient", *m_expr);
                auto emb = find_embedding_by_search(parse_lattice_expr(*s_expr),
                                                    parse_lattice_expr(*m_expr),
                                                    options_of(flags));
                if (emb) {
                    r.result(embedding_to_json(*emb));
                } else {
                    r.result(Json{{"found", false}});
                    r.flag_undetermined();
                }
                report = r;
            };
        });
    }

    // ------------------------------------------------------------------ hk
    auto* hk = app.add_subcommand("hk", "Hyperkaehler lattice procedures");
    hk->require_subcommand(1);

    {
        auto* c = hk->add_subcommand("bb",
                                     "Beauville-Bogomolov lattice of a deformation type "
                                     "(K3n/Kumn/OG6/OG10; Beauville 1983, Rapagnetta 2007/08)");
        auto type = std::make_shared<std::string>();
        c->add_option("--type", *type, "k3n(n)|kumn(n)|og6|og10")->required();
        add_format_flag(c, flags);
        c->callback([&, type] {
            action = [&, type] {
                Report r("hk.bb");
                r.echo("type", *type);
                Lattice l = bb_lattice(parse_deformation_type(*type));
                Json res = lattice_to_json(l);
                res["disc"] = form_to_json(discriminant_form(l));
                r.result(res);
                report = r;
            };
        });
    }
    {
        auto* c = hk->add_subcommand(
            "criterion", "Moduli-space criterion: a class of square -2, divisibility 2 (OG6) "
                         "or square -6, divisibility 3 (OG10) in the embedded NS lattice");
        auto type = std::make_shared<std::string>();
        auto file = std::make_shared<std::string>();
        c->add_option("--type", *type, "og6|og10")->required();
        c->add_option("--embedding", *file, "JSON file with the NS embedding")->required();
        add_height_flag(c, flags);
        add_format_flag(c, flags);
        c->callback([&, type, file] {
            action = [&, type, file] {
                Report r("hk.criterion");
                r.echo("type", *type);
                r.echo("embedding", *file);
                std::ifstream in(*file);
                if (!in) throw domain_error("cannot open embedding file: " + *file);
                Json j = Json::parse(in);
                PrimitiveEmbedding emb = embedding_from_json(j);
                DeformationType t = parse_deformation_type(*type);
                HKPeriod p{t, emb};
                Decision d = t.kind == DeformationType::Kind::OG6
                                 ? og6_moduli_criterion(p, options_of(flags))
                                 : og10_moduli_criterion(p, options_of(flags));
                attach_decision(r, d);
                report = r;
            };
        });
    }
    {
        auto* c = hk->add_subcommand("lsv",
                                     "Hyperbolic-plane test U <= NS for the intermediate-"
                                     "Jacobian (LSV) family of OG10 manifolds");
        auto file = std::make_shared<std::string>();
        c->add_option("--embedding", *file, "JSON file with the NS embedding")->required();
        add_height_flag(c, flags);
        add_format_flag(c, flags);
        c->callback([&, file] {
            action = [&, file] {
                Report r("hk.lsv");
                r.echo("embedding", *file);
                std::ifstream in(*file);
                if (!in) throw domain_error("cannot open embedding file: " + *file);
                PrimitiveEmbedding emb = embedding_from_json(Json::parse(in));
                HKPeriod p{DeformationType::og10(), emb};
                Decision d = og10_lsv_criterion(p, options_of(flags));
                attach_decision(r, d);
                r.diagnostic("the lattice condition U <= NS characterizes the family only "
                             "for very general periods");
                report = r;
            };
        });
    }
    {
        auto* c = hk->add_subcommand("rank3",
                                     "Classification of rank-3 periods with T = U^2 + <-2d> "
                                     "(embedding classes via Nikulin 1.15.1)");
        auto type = std::make_shared<std::string>("og6");
        auto d = std::make_shared<long>(0);
        c->add_option("--type", *type, "og6|og10");
        c->add_option("--d", *d, "Positive integer d")->required();
        add_height_flag(c, flags);
        add_format_flag(c, flags);
        c->callback([&, type, d] {
            action = [&, type, d] {
                Report r("hk.rank3");
                r.echo("type", *type);
                r.echo("d", *d);
                DeformationType t = parse_deformation_type(*type);
                if (t.kind == DeformationType::Kind::OG6) {
                    r.result(og6_rank3_to_json(og6_rank3_classify(Int(*d), options_of(flags))));
                } else if (t.kind == DeformationType::Kind::OG10) {
                    r.result(og10_rank3_to_json(og10_rank3_classify(Int(*d))));
                } else {
                    throw domain_error("rank3: type must be og6 or og10");
                }
                report = r;
            };
        });
    }
    {
        auto* c = hk->add_subcommand("rank3-og10",
                                     "Rank-3 OG10 classification: non-moduli classes exist "
                                     "iff d = 3(3h+1); LSV membership by form equivalence");
        auto d = std::make_shared<long>(0);
        c->add_option("--d", *d, "Positive integer d")->required();
        add_format_flag(c, flags);
        c->callback([&, d] {
            action = [&, d] {
                Report r("hk.rank3-og10");
                r.echo("d", *d);
                r.result(og10_rank3_to_json(og10_rank3_classify(Int(*d))));
                report = r;
            };
        });
    }
    {
        auto* c = hk->add_subcommand("census",
                                     "Census of rank-2 transcendental lattices by determinant "
                                     "(first one admitting a non-moduli period)");
        auto type = std::make_shared<std::string>();
        auto max_det = std::make_shared<long>(20);
        c->add_option("--type", *type, "og6|og10")->required();
        c->add_option("--max-det", *max_det, "Largest Gram determinant scanned")->required();
        c->add_option("--catalog", flags.catalog_path, "Genus-realization catalog file");
        add_height_flag(c, flags);
        add_format_flag(c, flags);
        c->callback([&, type, max_det] {
            action = [&, type, max_det] {
                Report r("hk.census");
                r.echo("type", *type);
                r.echo("max_det", *max_det);
                Catalog cat = resolve_catalog(flags.catalog_path);
                CensusReport rep = census_smallest_nonmoduli(parse_deformation_type(*type),
                                                             Int(*max_det), cat,
                                                             options_of(flags));
                r.result(census_to_json(rep));
                if (rep.undetermined_count > 0) r.flag_undetermined();
                report = r;
            };
        });
    }
    {
        auto* c = hk->add_subcommand("pn",
                                     "Markman's set P_n of coprime pairs (r,s), -s >= r > 0, "
                                     "-rs = n-1, indexing embedding orbits");
        auto n = std::make_shared<long>(0);
        c->add_option("--n", *n)->required()->check(CLI::Range(2L, 1000000L));
        add_format_flag(c, flags);
        c->callback([&, n] {
            action = [&, n] {
                Report r("hk.pn");
                r.echo("n", *n);
                Json pairs = Json::array();
                for (const auto& p : markman_P(static_cast<int>(*n))) {
                    Json jp;
                    jp["r"] = int_to_json(p.r);
                    jp["s"] = int_to_json(p.s);
                    jp["vector"] = Json::array({int_to_json(p.r), 0, int_to_json(p.s)});
                    pairs.push_back(jp);
                }
                r.result(Json{{"pairs", pairs}});
                report = r;
            };
        });
    }
    {
        auto* c = hk->add_subcommand("qn",
                                     "Kummer-side set Q_n (convention -rs = n+1, so the "
                                     "vector (r,0,-s) has Mukai square -2(n+1))");
        auto n = std::make_shared<long>(0);
        c->add_option("--n", *n)->required()->check(CLI::Range(2L, 1000000L));
        add_format_flag(c, flags);
        c->callback([&, n] {
            action = [&, n] {
                Report r("hk.qn");
                r.echo("n", *n);
                Json pairs = Json::array();
                for (const auto& p : kummer_Q(static_cast<int>(*n))) {
                    Json jp;
                    jp["r"] = int_to_json(p.r);
                    jp["s"] = int_to_json(p.s);
                    jp["vector"] = Json::array({int_to_json(p.r), 0, int_to_json(-p.s)});
                    pairs.push_back(jp);
                }
                Json res;
                res["pairs"] = pairs;
                res["sign_convention"] =
                    "-rs = n+1; the literature also states rs = n+1, which is incompatible "
                    "with the Mukai square -2(n+1) of (r,0,-s)";
                r.result(res);
                report = r;
            };
        });
    }
    {
        auto* c = hk->add_subcommand("walls",
                                     "Classes D in NS with (v0^2/4)(2 v0 v4 - (v0-1) v2^2) "
                                     "< D^2 < 0 (v-walls), up to the given height");
        auto v = std::make_shared<std::string>();
        auto ns_expr = std::make_shared<std::string>();
        c->add_option("--v", *v, "Mukai vector \"v0,v2...,v4\"")->required();
        c->add_option("--ns", *ns_expr, "NS lattice expression")->required();
        add_height_flag(c, flags);
        add_format_flag(c, flags);
        c->callback([&, v, ns_expr] {
            action = [&, v, ns_expr] {
                Report r("hk.walls");
                r.echo("v", *v);
                r.echo("ns", *ns_expr);
                Lattice ns = parse_lattice_expr(*ns_expr);
                IVec raw = parse_int_vector(*v);
                if (static_cast<int>(raw.size()) != ns.rank() + 2)
                    throw domain_error("walls: vector must have rank(NS) + 2 entries");
                MukaiVector mv{raw.front(), IVec(raw.begin() + 1, raw.end() - 1), raw.back()};
                Json walls = Json::array();
                for (long h = 1; h <= flags.height; ++h) {
                    for_each_shell_vector(ns.rank(), h, true, [&](const IVec& d) {
                        if (gcd_all(d) == 1 && wall_test(mv, d, ns))
                            walls.push_back(ivec_to_json(d));
                        return false;
                    });
                }
                r.result(Json{{"walls", walls}});
                report = r;
            };
        });
    }
    {
        auto* c = hk->add_subcommand("reduce",
                                     "Gauss reduction of a positive definite even binary "
                                     "form under SL2(Z)");
        auto form = std::make_shared<std::string>();
        c->add_option("--form", *form, "Gram matrix, e.g. \"[[4,2],[2,4]]\" or \"[4,2;2,4]\"")
            ->required();
        add_format_flag(c, flags);
        c->callback([&, form] {
            action = [&, form] {
                Report r("hk.reduce");
                r.echo("form", *form);
                IntMat m = parse_gram_argument(*form);
                r.result(Json{{"reduced", gram_to_json(singular_k3_reduce(m))}});
                report = r;
            };
        });
    }
    {
        auto* c = hk->add_subcommand("bfield",
                                     "B-field shift on Z*alpha + H2 + Z*beta "
                                     "(b(alpha,beta) = -1; Beckmann's extended lattice)");
        auto form = std::make_shared<std::string>();
        auto lambda = std::make_shared<std::string>();
        auto rpart = std::make_shared<std::string>();
        auto mu = std::make_shared<std::string>();
        auto spart = std::make_shared<std::string>();
        c->add_option("--form", *form, "H2 lattice expression")->required();
        c->add_option("--lambda", *lambda, "Shift vector (rationals allowed)")->required();
        c->add_option("--r", *rpart, "alpha coefficient")->required();
        c->add_option("--mu", *mu, "H2 component")->required();
        c->add_option("--s", *spart, "beta coefficient")->required();
        add_format_flag(c, flags);
        c->callback([&, form, lambda, rpart, mu, spart] {
            action = [&, form, lambda, rpart, mu, spart] {
                Report r("hk.bfield");
                r.echo("form", *form);
                r.echo("lambda", *lambda);
                Lattice l = parse_lattice_expr(*form);
                ExtendedClass x{Rat(*rpart), parse_rat_vector(*mu), Rat(*spart)};
                x.r.canonicalize();
                x.s.canonicalize();
                ExtendedClass y = bfield_transform(parse_rat_vector(*lambda), x, l);
                Json res;
                res["r"] = rat_to_json(y.r);
                res["mu"] = rvec_to_json(y.mu);
                res["s"] = rat_to_json(y.s);
                res["q_before"] = rat_to_json(extended_q(x, l));
                res["q_after"] = rat_to_json(extended_q(y, l));
                r.result(res);
                report = r;
            };
        });
    }
    {
        auto* c = hk->add_subcommand("morrison",
                                     "Primitive embedding of a signature-(2,k) lattice into "
                                     "U^3 (k <= 3; Morrison's transcendental criteria)");
        auto t_expr = std::make_shared<std::string>();
        c->add_option("--t", *t_expr, "Transcendental lattice expression")->required();
        c->add_option("--catalog", flags.catalog_path, "Genus-realization catalog file");
        add_height_flag(c, flags);
        add_format_flag(c, flags);
        c->callback([&, t_expr] {
            action = [&, t_expr] {
                Report r("hk.morrison");
                r.echo("t", *t_expr);
                Catalog cat = resolve_catalog(flags.catalog_path);
                Decision d = morrison_abelian_check(parse_lattice_expr(*t_expr), cat,
                                                    options_of(flags));
                attach_decision(r, d);
                report = r;
            };
        });
    }

    // ----------------------------------------------------------------- run
    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << "\n";
        return 2;
    }
    try {
        if (!action) {
            err << "usage error: no command\n";
            return 2;
        }
        action();
        emit(report, flags, out);
        return 0;
    } catch (const ParseError& e) {
        err << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const domain_error& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
}

}  // namespace lattice_forge::cli
