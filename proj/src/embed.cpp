#include "lattice_forge/embed.hpp"

#include <algorithm>
#include <set>

namespace lattice_forge {

Decision Decision::make_yes(IVec w) {
    Decision d;
    d.verdict = Verdict::Yes;
    d.witness = std::move(w);
    return d;
}

Decision Decision::make_yes_pair(IVec e, IVec f) {
    Decision d;
    d.verdict = Verdict::Yes;
    d.witness = std::move(e);
    d.witness2 = std::move(f);
    return d;
}

Decision Decision::make_no(std::string obstruction) {
    Decision d;
    d.verdict = Verdict::No;
    d.obstruction = std::move(obstruction);
    return d;
}

Decision Decision::make_undetermined(long bound) {
    Decision d;
    d.verdict = Verdict::Undetermined;
    d.bound = bound;
    return d;
}

std::string verdict_name(Decision::Verdict v) {
    switch (v) {
        case Decision::Verdict::Yes: return "yes";
        case Decision::Verdict::No: return "no";
        case Decision::Verdict::Undetermined: return "undetermined";
    }
    return "?";
}

PrimitiveEmbedding make_primitive_embedding(const Lattice& source, const Lattice& ambient,
                                            const IntMat& images) {
    if (images.rows() != static_cast<std::size_t>(ambient.rank()) ||
        images.cols() != static_cast<std::size_t>(source.rank()))
        throw domain_error("PrimitiveEmbedding: image shape mismatch");
    if (!(gram_of(ambient, images) == source.gram()))
        throw domain_error("PrimitiveEmbedding: images do not realize the source Gram matrix");
    if (!is_primitive_sublattice(images))
        throw domain_error("PrimitiveEmbedding: image sublattice not saturated");
    return PrimitiveEmbedding{source, ambient, images};
}

bool for_each_shell_vector(int dims, long h, bool canonical_sign,
                           const std::function<bool(const IVec&)>& fn) {
    if (h < 0) return false;
    std::vector<long> v(dims, -h);
    if (h == 0) {
        if (canonical_sign) return false;  // only the zero vector lives here
        return fn(IVec(dims, Int(0)));
    }
    for (;;) {
        long sup = 0;
        for (long c : v) sup = std::max(sup, std::labs(c));
        if (sup == h) {
            bool use = true;
            if (canonical_sign) {
                for (long c : v) {
                    if (c == 0) continue;
                    use = c > 0;
                    break;
                }
            }
            if (use) {
                IVec iv(dims);
                for (int i = 0; i < dims; ++i) iv[i] = v[i];
                if (fn(iv)) return true;
            }
        }
        int i = dims - 1;
        while (i >= 0) {
            if (v[i] < h) {
                ++v[i];
                break;
            }
            v[i] = -h;
            --i;
        }
        if (i < 0) return false;
    }
}

bool unimodular_embedding_unique(const Lattice& s, Signature ambient) {
    Signature ss = signature(s);
    if (!(ambient.plus > ss.plus && ambient.minus > ss.minus)) return false;
    FiniteQuadraticForm f = discriminant_form(s);
    // Unimodular S always splits off, and the complement is the unique even
    // unimodular indefinite lattice of the remaining signature.
    if (f.trivial()) return true;
    const int gap = ambient.rank() - s.rank();
    for (const Int& p : prime_factors(f.order())) {
        FiniteQuadraticForm fp = f.p_part(p);
        if (p != 2 && gap < 2 + static_cast<int>(fp.length())) return false;
        if (p == 2 && gap == 2 + static_cast<int>(fp.length())) {
            // Boundary case: q_S must split u_2 (values 0,0 with b=1/2) or
            // v_2 (values 1,1,1 with b=1/2).
            std::vector<IVec> elems = f.all_elements();
            bool split = false;
            for (std::size_t i = 0; i < elems.size() && !split; ++i) {
                if (f.element_order(elems[i]) != 2) continue;
                for (std::size_t j = i + 1; j < elems.size() && !split; ++j) {
                    if (f.element_order(elems[j]) != 2) continue;
                    if (f.b(elems[i], elems[j]) != Rat(1, 2)) continue;
                    Rat qi = f.q(elems[i]), qj = f.q(elems[j]);
                    if (qi == 0 && qj == 0) split = true;  // u_2
                    if (qi == 1 && qj == 1 && f.q(f.add(elems[i], elems[j])) == 1)
                        split = true;  // v_2
                }
            }
            if (!split) return false;
        }
    }
    return true;
}

std::vector<EmbeddingData> enumerate_embedding_data(const Lattice& s, const Lattice& m,
                                                    const Int& bound) {
    FiniteQuadraticForm fs = discriminant_form(s);
    FiniteQuadraticForm fm = discriminant_form(m);
    if (fs.order() * fm.order() > bound)
        throw domain_error("enumerate_embedding_data: discriminant groups exceed bound");
    Signature sig_s = signature(s), sig_m = signature(m);
    Signature sig_t{sig_m.plus - sig_s.plus, sig_m.minus - sig_s.minus};
    if (sig_t.plus < 0 || sig_t.minus < 0) return {};

    FiniteQuadraticForm fm_neg = fm.negated();
    FormView prod = product_view(fs, fm_neg);
    std::vector<IVec> prod_elems = prod.all_elements(bound);

    std::vector<Subgroup> subs_s = all_subgroups(fs, bound);
    std::vector<Subgroup> subs_m = all_subgroups(fm, bound);
    std::vector<AutoMap> oam = form_automorphism_maps(fm);

    struct RawClass {
        std::vector<IVec> hs_gens, hm_gens;
        std::vector<unsigned long> hs_key;
        Int h_order;
        FiniteQuadraticForm delta;
    };
    std::vector<RawClass> classes;

    for (const Subgroup& hs : subs_s) {
        std::vector<unsigned long> hs_key;
        for (const IVec& e : hs.elements) hs_key.push_back(encode_element(fs, e));
        std::sort(hs_key.begin(), hs_key.end());

        // Collected (gamma images) already claimed by an O(A_M)-orbit.
        std::set<std::vector<unsigned long>> claimed;
        auto iso_key = [&](const std::vector<IVec>& images) {
            std::vector<unsigned long> key;
            for (const IVec& im : images) key.push_back(encode_element(fm, im));
            return key;
        };

        for (const Subgroup& hm : subs_m) {
            if (hs.elements.size() != hm.elements.size()) continue;
            std::vector<IVec> gens;
            auto isos = subgroup_isometries(fs, hs, fm, hm, &gens);
            for (const auto& images : isos) {
                if (claimed.count(iso_key(images))) continue;
                // Claim the whole O(A_M)-orbit of this gamma.
                for (const AutoMap& xi : oam) {
                    std::vector<IVec> moved;
                    moved.reserve(images.size());
                    for (const IVec& im : images) moved.push_back(xi.at(encode_element(fm, im)));
                    claimed.insert(iso_key(moved));
                }
                // Graph of gamma inside q_S + (-q_M).
                std::vector<IVec> graph_gens;
                for (std::size_t i = 0; i < gens.size(); ++i) {
                    IVec g = gens[i];
                    g.insert(g.end(), images[i].begin(), images[i].end());
                    graph_gens.push_back(std::move(g));
                }
                std::vector<IVec> perp = orthogonal_elements(prod, prod_elems, graph_gens);
                FiniteQuadraticForm delta = quotient_form(prod, perp, graph_gens).form;
                // A complement lattice needs rank >= length of its form.
                if (sig_t.rank() < static_cast<int>(delta.length())) continue;
                if (sig_t.rank() == 0 && !delta.trivial()) continue;
                classes.push_back(RawClass{gens, images, hs_key,
                                           Int(static_cast<unsigned long>(hs.elements.size())),
                                           delta});
            }
        }
    }

    std::vector<EmbeddingData> out;
    for (auto& c : classes)
        out.push_back(EmbeddingData{c.hs_gens, c.hm_gens, c.hs_key, c.h_order,
                                    GenusDescriptor{sig_t, c.delta.negated()}});
    std::sort(out.begin(), out.end(), [](const EmbeddingData& a, const EmbeddingData& b) {
        if (a.h_order != b.h_order) return a.h_order < b.h_order;
        return a.h_s_key < b.h_s_key;
    });
    return out;
}

Lattice glue_overlattice(const Lattice& l, const std::vector<RVec>& isotropic_gens) {
    const int r = l.rank();
    RatMat g(l.gram());
    for (const RVec& h : isotropic_gens) {
        if (static_cast<int>(h.size()) != r) throw domain_error("glue_overlattice: bad vector length");
        RVec gh = g.mul(h);
        for (const Rat& e : gh)
            if (!is_integral(e)) throw domain_error("glue_overlattice: generator not in the dual lattice");
        Rat q = 0;
        for (int i = 0; i < r; ++i) q += h[i] * gh[i];
        if (mod_two(q) != 0)
            throw domain_error("glue_overlattice: generator not isotropic (q != 0 in Q/2Z)");
    }
    for (std::size_t a = 0; a < isotropic_gens.size(); ++a)
        for (std::size_t b = a + 1; b < isotropic_gens.size(); ++b) {
            RVec gh = g.mul(isotropic_gens[b]);
            Rat s = 0;
            for (int i = 0; i < r; ++i) s += isotropic_gens[a][i] * gh[i];
            if (!is_integral(s))
                throw domain_error("glue_overlattice: generators do not pair integrally");
        }
    // Common denominator D; basis of D*(L + sum Z h_i) inside Z^r.
    Int dlcm = 1;
    for (const RVec& h : isotropic_gens)
        for (const Rat& e : h) dlcm = lcm(dlcm, e.get_den());
    std::vector<IVec> cols;
    for (int i = 0; i < r; ++i) {
        IVec e(r, Int(0));
        e[i] = dlcm;
        cols.push_back(std::move(e));
    }
    for (const RVec& h : isotropic_gens) {
        IVec c(r);
        for (int i = 0; i < r; ++i) {
            Rat x = Rat(dlcm) * h[i];
            x.canonicalize();
            c[i] = x.get_num();
        }
        cols.push_back(std::move(c));
    }
    IntMat mat = from_columns(r, cols);
    SmithResult snf = smith_normal_form(mat);
    // Column span basis = u^-1 * diag(d); divide by D afterwards.
    IntMat uinv(r, r);
    for (int j = 0; j < r; ++j) {
        RVec rhs(r, Rat(0));
        rhs[j] = 1;
        RVec x = solve_rational(snf.u, rhs);
        for (int i = 0; i < r; ++i) uinv.at(i, j) = x[i].get_num();
    }
    RatMat basis(r, r);
    for (int j = 0; j < r; ++j)
        for (int i = 0; i < r; ++i) {
            basis.at(i, j) = Rat(uinv.at(i, j) * snf.d.at(j, j), dlcm);
            basis.at(i, j).canonicalize();
        }
    RatMat gram = basis.transpose() * RatMat(l.gram()) * basis;
    IntMat out(r, r);
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j) {
            if (!is_integral(gram.at(i, j)))
                throw domain_error("glue_overlattice: resulting form not integral");
            out.at(i, j) = gram.at(i, j).get_num();
        }
    return Lattice(out);
}

namespace {

double box_size(int dims, long height) {
    double s = 1;
    for (int i = 0; i < dims; ++i) {
        s *= static_cast<double>(2 * height + 1);
        if (s > 1e18) return 1e18;
    }
    return s;
}

// Deterministic enumeration of block-support sublattices of l (kernels of the
// coordinate rows outside a subset of Gram blocks), ordered by total rank
// then lexicographic block indices.  Calls fn(sub_basis) until it returns true.
bool for_each_block_support(const Lattice& l, int rank_cap,
                            const std::function<bool(const IntMat&)>& fn) {
    auto blocks = gram_blocks(l.gram());
    const std::size_t nb = blocks.size();
    if (nb <= 1) return false;
    std::vector<std::vector<std::size_t>> subsets;
    std::vector<std::size_t> cur;
    std::function<void(std::size_t)> rec = [&](std::size_t i) {
        if (!cur.empty()) subsets.push_back(cur);
        for (std::size_t j = i; j < nb; ++j) {
            cur.push_back(j);
            rec(j + 1);
            cur.pop_back();
        }
    };
    rec(0);
    std::stable_sort(subsets.begin(), subsets.end(),
                     [&](const auto& a, const auto& b) {
                         std::size_t ra = 0, rb = 0;
                         for (auto i : a) ra += blocks[i].size();
                         for (auto i : b) rb += blocks[i].size();
                         return ra < rb;
                     });
    for (const auto& subset : subsets) {
        std::size_t rank = 0;
        for (auto i : subset) rank += blocks[i].size();
        if (rank > static_cast<std::size_t>(rank_cap)) continue;
        std::vector<IVec> cols;
        for (auto bi : subset)
            for (auto coord : blocks[bi]) {
                IVec e(l.rank(), Int(0));
                e[coord] = 1;
                cols.push_back(std::move(e));
            }
        if (fn(from_columns(l.rank(), cols))) return true;
    }
    return false;
}

}  // namespace

Decision find_vector(const Lattice& l, const Int& square, const Int& div,
                     const SearchOptions& opts) {
    if (div < 1) throw domain_error("find_vector: divisibility must be positive");
    if (mod_floor(square, 2) != 0) throw domain_error("find_vector: square must be even");
    // Divisibility always divides the square of a primitive vector.
    if (square == 0 ? false : !divides(div, square))
        return Decision::make_no("divisibility does not divide the square");
    // Discriminant obstruction: sigma/d has order exactly d in A_L and
    // q = square/d^2 mod 2Z.
    FiniteQuadraticForm f = discriminant_form(l);
    if (div > 1) {
        Rat target = mod_two(Rat(square, div * div));
        bool possible = false;
        for (const IVec& x : f.all_elements())
            if (f.element_order(x) == div && f.q(x) == target) {
                possible = true;
                break;
            }
        if (!possible)
            return Decision::make_no(
                "no element of order " + div.get_str() + " with q = " +
                rat_to_string(Rat(square, div * div)) + " mod 2Z in the discriminant group");
    }
    // Congruence refinement: squares mod 8 and pairings mod div, checked over
    // (Z/lcm(4,div))^rank when that box is small enough.
    {
        Int m = lcm(Int(4), div);
        double total = 1;
        bool in_budget = m.fits_slong_p();
        for (int i = 0; i < l.rank() && in_budget; ++i) {
            total *= static_cast<double>(m.get_si());
            if (total > 5e6) in_budget = false;
        }
        if (in_budget) {
            bool solvable = false;
            long mm = m.get_si();
            std::vector<long> x(l.rank(), 0);
            Int target = mod_floor(square, 8);
            for (;;) {
                bool nonzero = false;
                for (long c : x) nonzero = nonzero || c != 0;
                if (nonzero) {
                    IVec xi(l.rank());
                    for (int i = 0; i < l.rank(); ++i) xi[i] = x[i];
                    IVec gx = l.gram().mul(xi);
                    Int sq = 0;
                    for (int i = 0; i < l.rank(); ++i) sq += xi[i] * gx[i];
                    if (mod_floor(sq, 8) == target) {
                        bool ok = true;
                        for (const Int& e : gx)
                            if (mod_floor(e, div) != 0) {
                                ok = false;
                                break;
                            }
                        if (ok) {
                            solvable = true;
                            break;
                        }
                    }
                }
                int i = 0;
                while (i < l.rank()) {
                    if (++x[i] < mm) break;
                    x[i] = 0;
                    ++i;
                }
                if (i == l.rank()) break;
            }
            if (!solvable)
                return Decision::make_no(
                    "no solution of the square and divisibility congruences modulo lcm(4, d)");
        }
    }

    auto check = [&](const IVec& v, const IntMat* basis) -> std::optional<IVec> {
        IVec w = basis ? basis->mul(v) : v;
        if (gcd_all(w) != 1) return std::nullopt;
        if (inner(l, w, w) != square) return std::nullopt;
        if (gcd_all(l.gram().mul(w)) != div) return std::nullopt;
        return w;
    };

    if (box_size(l.rank(), opts.height) <= opts.exhaustive_budget) {
        for (long h = 1; h <= opts.height; ++h) {
            std::optional<IVec> hit;
            for_each_shell_vector(l.rank(), h, true, [&](const IVec& v) {
                hit = check(v, nullptr);
                return hit.has_value();
            });
            if (hit) return Decision::make_yes(*hit);
        }
        return Decision::make_undetermined(opts.height);
    }

    // Block-support mode for large ranks.
    std::optional<IVec> hit;
    for_each_block_support(l, opts.support_rank_cap, [&](const IntMat& basis) {
        int dims = static_cast<int>(basis.cols());
        for (long h = 1; h <= opts.height; ++h) {
            if (box_size(dims, h) > opts.exhaustive_budget) break;
            for_each_shell_vector(dims, h, true, [&](const IVec& v) {
                hit = check(v, &basis);
                return hit.has_value();
            });
            if (hit) return true;
        }
        return false;
    });
    if (hit) return Decision::make_yes(*hit);
    return Decision::make_undetermined(opts.height);
}

Decision find_hyperbolic_pair(const Lattice& l, const SearchOptions& opts) {
    Signature sig = signature(l);
    if (sig.plus == 0 || sig.minus == 0)
        return Decision::make_no("definite lattice has no isotropic vectors");
    // Structural U block: immediate witness.
    for (const auto& block : gram_blocks(l.gram())) {
        if (block.size() != 2) continue;
        std::size_t i = block[0], j = block[1];
        if (l.gram().at(i, i) == 0 && l.gram().at(j, j) == 0) {
            const Int& p = l.gram().at(i, j);
            if (p == 1 || p == -1) {
                IVec e(l.rank(), Int(0)), f(l.rank(), Int(0));
                e[i] = 1;
                f[j] = (p == 1) ? 1 : -1;
                return Decision::make_yes_pair(e, f);
            }
        }
    }

    auto search_box = [&](const IntMat* basis, int dims, long height) -> std::optional<std::pair<IVec, IVec>> {
        std::optional<std::pair<IVec, IVec>> res;
        for (long he = 1; he <= height && !res; ++he) {
            for_each_shell_vector(dims, he, true, [&](const IVec& ve) {
                IVec e = basis ? basis->mul(ve) : ve;
                if (inner(l, e, e) != 0) return false;
                if (gcd_all(e) != 1) return false;
                IVec ge = l.gram().mul(e);
                if (gcd_all(ge) != 1) return false;  // need b(e,f)=1 for some f
                for (long hf = 1; hf <= height && !res; ++hf) {
                    for_each_shell_vector(dims, hf, false, [&](const IVec& vf) {
                        IVec f = basis ? basis->mul(vf) : vf;
                        Int ef = 0;
                        for (std::size_t k = 0; k < f.size(); ++k) ef += ge[k] * f[k];
                        if (ef != 1) return false;
                        if (inner(l, f, f) != 0) return false;
                        res = std::pair(e, f);
                        return true;
                    });
                }
                return res.has_value();
            });
        }
        return res;
    };

    if (box_size(l.rank(), opts.height) <= opts.exhaustive_budget) {
        auto res = search_box(nullptr, l.rank(), opts.height);
        if (res) return Decision::make_yes_pair(res->first, res->second);
        return Decision::make_undetermined(opts.height);
    }
    std::optional<std::pair<IVec, IVec>> found;
    for_each_block_support(l, opts.support_rank_cap, [&](const IntMat& basis) {
        int dims = static_cast<int>(basis.cols());
        long h = opts.height;
        while (h > 1 && box_size(dims, h) > opts.exhaustive_budget) --h;
        auto res = search_box(&basis, dims, h);
        if (res) {
            found = res;
            return true;
        }
        return false;
    });
    if (found) return Decision::make_yes_pair(found->first, found->second);
    return Decision::make_undetermined(opts.height);
}

std::optional<GenusCertificate> genus_unique_certificate_with_search(const Lattice& l,
                                                                     const SearchOptions& opts) {
    if (auto c = genus_unique_certificate(l)) return c;
    Decision d = find_hyperbolic_pair(l, opts);
    if (d.yes()) return GenusCertificate::HyperbolicSummand;
    return std::nullopt;
}

std::optional<Lattice> realize_genus(const GenusDescriptor& g, const Catalog& catalog,
                                     int max_rank, const Int& max_det) {
    const int rank = g.sig.rank();
    if (rank > max_rank) return std::nullopt;
    Int target_det = g.disc.order();
    if (target_det > max_det) return std::nullopt;
    // DFS over multisets of catalog atoms with matching rank, |det|, signature.
    std::vector<const CatalogAtom*> chosen;
    std::optional<Lattice> found;
    std::function<void(std::size_t, int, int, const Int&)> rec =
        [&](std::size_t start, int plus_left, int minus_left, const Int& det_left) {
            if (found) return;
            if (plus_left == 0 && minus_left == 0) {
                if (det_left != 1) return;
                std::vector<Lattice> parts;
                for (const auto* a : chosen) parts.push_back(a->lattice);
                if (parts.empty()) return;
                Lattice cand = direct_sum(parts);
                if (forms_equivalent(discriminant_form(cand), g.disc)) found = cand;
                return;
            }
            for (std::size_t i = start; i < catalog.atoms.size() && !found; ++i) {
                const CatalogAtom& a = catalog.atoms[i];
                if (a.sig.plus > plus_left || a.sig.minus > minus_left) continue;
                if (!divides(a.abs_det, det_left)) continue;
                chosen.push_back(&a);
                rec(i, plus_left - a.sig.plus, minus_left - a.sig.minus,
                    exact_div(det_left, a.abs_det));
                chosen.pop_back();
            }
        };
    rec(0, g.sig.plus, g.sig.minus, target_det);
    return found;
}

namespace {

struct GlueKeys {
    std::vector<unsigned long> gs_key, hs_key;
    Int glue_order;
};

GlueKeys glue_keys_of(const PrimitiveEmbedding& e, const Int& bound) {
    FiniteQuadraticForm fs = discriminant_form(e.source);
    // Projection of each ambient basis vector onto S (x) Q, in source coordinates:
    // coords = gram_S^-1 * images^T * gram_M * lambda.
    RatMat gs_inv = RatMat(e.source.gram()).inverse();
    RatMat proj = gs_inv * RatMat(e.images.transpose() * e.ambient.gram());
    std::vector<IVec> classes;
    for (int i = 0; i < e.ambient.rank(); ++i) {
        RVec col(e.source.rank());
        for (int r = 0; r < e.source.rank(); ++r) col[r] = proj.at(r, i);
        classes.push_back(fs.reduce(disc_class_of(e.source, col)));
    }
    // Closure of the projected classes: G_S = p_S of the glue group.
    std::set<unsigned long> gs_codes;
    std::vector<IVec> frontier{IVec(fs.ngens(), Int(0))};
    gs_codes.insert(encode_element(fs, frontier[0]));
    while (!frontier.empty()) {
        std::vector<IVec> next;
        for (const IVec& x : frontier)
            for (const IVec& c : classes) {
                IVec y = fs.add(x, c);
                if (gs_codes.insert(encode_element(fs, y)).second) next.push_back(y);
            }
        frontier = std::move(next);
    }
    // H_S = orthogonal complement of G_S inside A_S.
    std::vector<unsigned long> hs_key;
    for (const IVec& x : fs.all_elements(bound)) {
        bool ok = true;
        for (const IVec& g : classes)
            if (fs.b(x, g) != 0) {
                ok = false;
                break;
            }
        if (ok) hs_key.push_back(encode_element(fs, x));
    }
    std::sort(hs_key.begin(), hs_key.end());
    return GlueKeys{std::vector<unsigned long>(gs_codes.begin(), gs_codes.end()),
                    std::move(hs_key), Int(static_cast<unsigned long>(gs_codes.size()))};
}

}  // namespace

std::vector<unsigned long> embedding_h_s_key(const PrimitiveEmbedding& e, const Int& bound) {
    return glue_keys_of(e, bound).hs_key;
}

GlueData embedding_glue_data(const PrimitiveEmbedding& e, const Int& bound) {
    std::vector<IVec> image_cols;
    for (std::size_t j = 0; j < e.images.cols(); ++j) image_cols.push_back(e.images.column_vec(j));
    Complement comp = orthogonal_complement(e.ambient, image_cols);
    GlueKeys keys = glue_keys_of(e, bound);
    return GlueData{std::move(comp), std::move(keys.gs_key), std::move(keys.hs_key),
                    keys.glue_order};
}

std::optional<PrimitiveEmbedding> find_embedding_by_search(const Lattice& s, const Lattice& m,
                                                           const SearchOptions& opts,
                                                           const EmbeddingTarget& target) {
    if (s.rank() > m.rank()) throw domain_error("find_embedding_by_search: source rank too large");
    const int k = s.rank();

    // Candidate pools, one per required square value, collected once from
    // deterministic shells over the whole box (small rank) or block supports.
    std::vector<IntMat> supports;
    if (box_size(m.rank(), opts.height) <= opts.exhaustive_budget) {
        supports.push_back(IntMat::identity(m.rank()));
    } else {
        for_each_block_support(m, opts.support_rank_cap, [&](const IntMat& basis) {
            supports.push_back(basis);
            return false;
        });
    }
    std::vector<Int> squares;
    for (int i = 0; i < k; ++i) {
        Int sq = s.gram().at(i, i);
        if (std::find(squares.begin(), squares.end(), sq) == squares.end())
            squares.push_back(sq);
    }
    const std::size_t pool_cap = 200000;
    std::vector<IVec> images;
    std::optional<PrimitiveEmbedding> found;

    auto try_complete = [&]() {
        IntMat b = from_columns(m.rank(), images);
        if (!is_primitive_sublattice(b)) return false;
        PrimitiveEmbedding emb{s, m, b};
        if (target.h_s_key && embedding_h_s_key(emb) != *target.h_s_key) return false;
        if (target.complement_disc) {
            GlueData glue = embedding_glue_data(emb);
            if (!forms_equivalent(discriminant_form(glue.complement.lattice),
                                  *target.complement_disc))
                return false;
        }
        found = emb;
        return true;
    };

    // Stage the search by height so that small witnesses finish fast; the
    // candidate pools grow incrementally with the stage.
    std::map<Int, std::vector<IVec>> pool;
    for (const Int& sq : squares) pool[sq];
    std::set<std::string> seen;
    auto key_of = [](const IVec& v) {
        std::string key;
        for (const Int& c : v) key += c.get_str() + ",";
        return key;
    };
    for (long cap = 1; cap <= opts.height && !found; ++cap) {
        for (const IntMat& basis : supports) {
            int dims = static_cast<int>(basis.cols());
            if (box_size(dims, cap) > opts.exhaustive_budget) continue;
            for_each_shell_vector(dims, cap, true, [&](const IVec& v) {
                IVec w = basis.mul(v);
                Int sq = inner(m, w, w);
                auto it = pool.find(sq);
                if (it == pool.end()) return false;
                if (it->second.size() >= pool_cap) return false;
                if (supports.size() > 1 && !seen.insert(key_of(w)).second) return false;
                it->second.push_back(std::move(w));
                return false;
            });
        }
        std::function<void(int)> rec = [&](int depth) {
            if (found) return;
            if (depth == k) {
                try_complete();
                return;
            }
            // A global sign flip is an isometry of m, so the first image is
            // taken with canonical sign only; later images range over both.
            const std::vector<IVec>& cands = pool.at(s.gram().at(depth, depth));
            for (const IVec& c : cands) {
                for (int sign = 0; sign < (depth == 0 ? 1 : 2); ++sign) {
                    IVec w = c;
                    if (sign == 1)
                        for (Int& x : w) x = -x;
                    bool ok = true;
                    for (int j = 0; j < depth && ok; ++j)
                        ok = inner(m, images[j], w) == s.gram().at(j, depth);
                    if (!ok) continue;
                    images.push_back(w);
                    rec(depth + 1);
                    images.pop_back();
                    if (found) return;
                }
            }
        };
        rec(0);
    }
    return found;
}

}  // namespace lattice_forge
