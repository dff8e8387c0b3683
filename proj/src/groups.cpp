#include "lattice_forge/groups.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace lattice_forge {

std::vector<IVec> FormView::all_elements(const Int& bound) const {
    if (order() > bound) throw domain_error("FormView: group too large to enumerate");
    std::vector<IVec> out;
    out.push_back(IVec(orders.size(), Int(0)));
    for (std::size_t i = 0; i < orders.size(); ++i) {
        std::vector<IVec> next;
        next.reserve(out.size() * orders[i].get_ui());
        for (Int c = 0; c < orders[i]; ++c)
            for (const IVec& x : out) {
                IVec y = x;
                y[i] = c;
                next.push_back(std::move(y));
            }
        out = std::move(next);
    }
    return out;
}

FormView view_of(const FiniteQuadraticForm& f) {
    FormView v;
    v.orders = f.factors();
    v.q = [&f](const IVec& x) { return f.q(x); };
    v.b = [&f](const IVec& x, const IVec& y) { return f.b(x, y); };
    return v;
}

FormView product_view(const FiniteQuadraticForm& a, const FiniteQuadraticForm& b) {
    FormView v;
    v.orders = a.factors();
    v.orders.insert(v.orders.end(), b.factors().begin(), b.factors().end());
    const std::size_t ka = a.ngens();
    auto split = [ka, kb = b.ngens()](const IVec& x) {
        IVec xa(x.begin(), x.begin() + ka);
        IVec xb(x.begin() + ka, x.begin() + ka + kb);
        return std::pair(std::move(xa), std::move(xb));
    };
    v.q = [&a, &b, split](const IVec& x) {
        auto [xa, xb] = split(x);
        return mod_two(a.q(xa) + b.q(xb));
    };
    v.b = [&a, &b, split](const IVec& x, const IVec& y) {
        auto [xa, xb] = split(x);
        auto [ya, yb] = split(y);
        return mod_one(a.b(xa, ya) + b.b(xb, yb));
    };
    return v;
}

namespace {

// Basis matrix (columns) of the sublattice of Z^k spanned by the given
// columns together with diag(orders); k x k, full rank.
IntMat span_basis(const std::vector<Int>& orders, const std::vector<IVec>& gens) {
    const std::size_t k = orders.size();
    std::vector<IVec> cols = gens;
    for (std::size_t i = 0; i < k; ++i) {
        IVec e(k, Int(0));
        e[i] = orders[i];
        cols.push_back(std::move(e));
    }
    IntMat m = from_columns(k, cols);
    SmithResult s = smith_normal_form(m);
    // Column span of m equals the span of u^-1 * d; take the nonzero columns.
    IntMat uinv(k, k);
    for (std::size_t j = 0; j < k; ++j) {
        RVec rhs(k, Rat(0));
        rhs[j] = 1;
        RVec x = solve_rational(s.u, rhs);
        for (std::size_t i = 0; i < k; ++i) uinv.at(i, j) = x[i].get_num();
    }
    IntMat basis(k, k);
    for (std::size_t j = 0; j < k; ++j) {
        const Int& dj = s.d.at(j, j);
        if (dj == 0) throw domain_error("span_basis: rank deficient");
        for (std::size_t i = 0; i < k; ++i) basis.at(i, j) = uinv.at(i, j) * dj;
    }
    return basis;
}

}  // namespace

namespace {

// Greedy reduction of an element list to a small generating subset.
std::vector<IVec> generating_subset(const FormView& v, const std::vector<IVec>& elements) {
    if (elements.size() <= v.orders.size() + 2) return elements;
    auto encode = [&](const IVec& x) {
        unsigned long code = 0;
        IVec r = v.reduce(x);
        for (std::size_t i = 0; i < r.size(); ++i)
            code = code * v.orders[i].get_ui() + r[i].get_ui();
        return code;
    };
    std::vector<IVec> gens;
    std::set<unsigned long> closed;
    std::vector<IVec> all{IVec(v.orders.size(), Int(0))};
    closed.insert(encode(all[0]));
    auto close_with = [&](const IVec& g) {
        std::vector<IVec> frontier = all;
        while (!frontier.empty()) {
            std::vector<IVec> next;
            for (const IVec& x : frontier) {
                IVec y(x.size());
                for (std::size_t i = 0; i < x.size(); ++i)
                    y[i] = mod_floor(x[i] + g[i], v.orders[i]);
                if (closed.insert(encode(y)).second) {
                    next.push_back(y);
                    all.push_back(y);
                }
            }
            frontier = std::move(next);
        }
    };
    for (const IVec& e : elements) {
        if (closed.count(encode(e))) continue;
        gens.push_back(e);
        close_with(e);
    }
    return gens;
}

}  // namespace

QuotientResult quotient_form(const FormView& v, const std::vector<IVec>& w_gens_in,
                             const std::vector<IVec>& gamma_gens) {
    const std::size_t k = v.orders.size();
    if (k == 0) return QuotientResult{FiniteQuadraticForm(), {}};
    std::vector<IVec> w_gens = generating_subset(v, w_gens_in);
    IntMat bw = span_basis(v.orders, w_gens);
    IntMat bg = span_basis(v.orders, gamma_gens);
    // m = bw^-1 * bg, integral because span(bg) is contained in span(bw).
    IntMat m(k, k);
    for (std::size_t j = 0; j < k; ++j) {
        RVec rhs(k);
        for (std::size_t i = 0; i < k; ++i) rhs[i] = Rat(bg.at(i, j));
        RVec x = solve_rational(bw, rhs);
        for (std::size_t i = 0; i < k; ++i) {
            if (!is_integral(x[i]))
                throw domain_error("quotient_form: gamma not contained in w");
            m.at(i, j) = x[i].get_num();
        }
    }
    SmithResult s = smith_normal_form(m);
    // W/Gamma = Z^k b_w-coords modulo m; generators are columns of bw * u^-1.
    IntMat uinv(k, k);
    for (std::size_t j = 0; j < k; ++j) {
        RVec rhs(k, Rat(0));
        rhs[j] = 1;
        RVec x = solve_rational(s.u, rhs);
        for (std::size_t i = 0; i < k; ++i) uinv.at(i, j) = x[i].get_num();
    }
    IntMat lifts = bw * uinv;
    std::vector<Int> factors;
    std::vector<IVec> gen_lifts;
    RVec qv;
    std::vector<std::size_t> kept;
    for (std::size_t j = 0; j < k; ++j) {
        Int dj = s.d.at(j, j);
        if (dj <= 1) continue;
        factors.push_back(dj);
        kept.push_back(j);
        IVec g = v.reduce(lifts.column_vec(j));
        qv.push_back(v.q(g));
        gen_lifts.push_back(std::move(g));
    }
    RatMat bv(factors.size(), factors.size());
    for (std::size_t i = 0; i < gen_lifts.size(); ++i)
        for (std::size_t j = 0; j < gen_lifts.size(); ++j)
            bv.at(i, j) = v.b(gen_lifts[i], gen_lifts[j]);
    return QuotientResult{FiniteQuadraticForm(factors, qv, bv), gen_lifts};
}

FiniteQuadraticForm normalize_presentation(const std::vector<Int>& factors, const RVec& q,
                                           const RatMat& b) {
    FormView v;
    v.orders = factors;
    v.q = [&](const IVec& x) {
        Rat s = 0;
        IVec r = v.reduce(x);
        for (std::size_t i = 0; i < r.size(); ++i) {
            if (r[i] == 0) continue;
            s += Rat(r[i] * r[i]) * q[i];
            for (std::size_t j = i + 1; j < r.size(); ++j)
                if (r[j] != 0) s += 2 * Rat(r[i] * r[j]) * b.at(i, j);
        }
        return mod_two(s);
    };
    v.b = [&](const IVec& x, const IVec& y) {
        Rat s = 0;
        IVec rx = v.reduce(x), ry = v.reduce(y);
        for (std::size_t i = 0; i < rx.size(); ++i)
            for (std::size_t j = 0; j < ry.size(); ++j)
                if (rx[i] != 0 && ry[j] != 0) s += Rat(rx[i] * ry[j]) * b.at(i, j);
        return mod_one(s);
    };
    std::vector<IVec> unit_gens;
    for (std::size_t i = 0; i < factors.size(); ++i) {
        IVec e(factors.size(), Int(0));
        e[i] = 1;
        unit_gens.push_back(std::move(e));
    }
    return quotient_form(v, unit_gens, {}).form;
}

namespace {

unsigned long encode(const FiniteQuadraticForm& f, const IVec& x) {
    unsigned long code = 0;
    IVec r = f.reduce(x);
    for (std::size_t i = 0; i < r.size(); ++i)
        code = code * f.factors()[i].get_ui() + r[i].get_ui();
    return code;
}

}  // namespace

std::vector<Subgroup> all_subgroups(const FiniteQuadraticForm& f, const Int& bound) {
    std::vector<IVec> elems = f.all_elements(bound);
    std::map<std::vector<unsigned long>, Subgroup> found;

    auto closure = [&](const std::vector<IVec>& gens) {
        std::set<unsigned long> seen;
        std::vector<IVec> frontier{IVec(f.ngens(), Int(0))};
        seen.insert(encode(f, frontier[0]));
        std::vector<IVec> all = frontier;
        while (!frontier.empty()) {
            std::vector<IVec> next;
            for (const IVec& x : frontier)
                for (const IVec& g : gens) {
                    IVec y = f.add(x, g);
                    unsigned long c = encode(f, y);
                    if (seen.insert(c).second) {
                        next.push_back(y);
                        all.push_back(y);
                    }
                }
            frontier = std::move(next);
        }
        std::vector<unsigned long> key(seen.begin(), seen.end());
        return std::pair(key, all);
    };

    // Breadth-first closure over adding one element at a time.
    std::vector<Subgroup> queue;
    {
        Subgroup trivial;
        trivial.elements.push_back(IVec(f.ngens(), Int(0)));
        auto [key, all] = closure(trivial.gens);
        (void)all;
        found.emplace(key, trivial);
        queue.push_back(trivial);
    }
    while (!queue.empty()) {
        Subgroup current = queue.back();
        queue.pop_back();
        for (const IVec& g : elems) {
            if (f.is_zero(g)) continue;
            std::vector<IVec> gens = current.gens;
            gens.push_back(g);
            auto [key, all] = closure(gens);
            if (found.count(key)) continue;
            Subgroup sub;
            sub.gens = gens;
            sub.elements = all;
            std::sort(sub.elements.begin(), sub.elements.end(),
                      [&](const IVec& a, const IVec& b2) { return encode(f, a) < encode(f, b2); });
            found.emplace(key, sub);
            queue.push_back(sub);
        }
    }
    std::vector<Subgroup> out;
    out.reserve(found.size());
    for (auto& [key, sub] : found) out.push_back(sub);
    std::sort(out.begin(), out.end(), [](const Subgroup& a, const Subgroup& b) {
        return a.elements.size() < b.elements.size();
    });
    return out;
}

std::vector<IVec> orthogonal_elements(const FormView& v, const std::vector<IVec>& elements,
                                      const std::vector<IVec>& gens) {
    std::vector<IVec> out;
    for (const IVec& x : elements) {
        bool ok = true;
        for (const IVec& g : gens)
            if (v.b(x, g) != 0) {
                ok = false;
                break;
            }
        if (ok) out.push_back(x);
    }
    return out;
}

namespace {

struct IsoSearch {
    const FiniteQuadraticForm& f1;
    const FiniteQuadraticForm& f2;
    const std::vector<IVec>& gens;        // canonical generators in f1 coords
    const std::vector<Int>& gen_orders;   // orders of those generators
    const std::vector<IVec>& candidates;  // elements of the target subgroup
    std::size_t target_size;
    long work = 0;
    long work_bound;
    std::vector<std::vector<IVec>> results;
    bool first_only = false;

    bool generated_size_matches(const std::vector<IVec>& images) const {
        // Size of the subgroup generated by the images.
        std::set<std::string> seen;
        std::vector<IVec> frontier{IVec(f2.ngens(), Int(0))};
        auto key = [&](const IVec& x) {
            std::string s;
            for (const Int& c : f2.reduce(x)) s += c.get_str() + ",";
            return s;
        };
        seen.insert(key(frontier[0]));
        while (!frontier.empty()) {
            std::vector<IVec> next;
            for (const IVec& x : frontier)
                for (const IVec& g : images) {
                    IVec y = f2.add(x, g);
                    if (seen.insert(key(y)).second) next.push_back(y);
                }
            frontier = std::move(next);
        }
        return seen.size() == target_size;
    }

    void rec(std::size_t i, std::vector<IVec>& images) {
        if (++work > work_bound) throw domain_error("subgroup_isometries: work bound exceeded");
        if (i == gens.size()) {
            if (generated_size_matches(images)) results.push_back(images);
            return;
        }
        for (const IVec& cand : candidates) {
            if (f2.element_order(cand) != gen_orders[i]) continue;
            if (f2.q(cand) != f1.q(gens[i])) continue;
            bool ok = true;
            for (std::size_t j = 0; j < i; ++j)
                if (f2.b(images[j], cand) != f1.b(gens[j], gens[i])) {
                    ok = false;
                    break;
                }
            if (!ok) continue;
            images.push_back(cand);
            rec(i + 1, images);
            images.pop_back();
            if (first_only && !results.empty()) return;
        }
    }
};

}  // namespace

std::vector<std::vector<IVec>> subgroup_isometries(const FiniteQuadraticForm& f1,
                                                   const Subgroup& sub1,
                                                   const FiniteQuadraticForm& f2,
                                                   const Subgroup& sub2,
                                                   std::vector<IVec>* canonical_gens,
                                                   const Int& work_bound) {
    if (sub1.elements.size() != sub2.elements.size()) return {};
    // Canonical generators of sub1 via its invariant-factor presentation.
    QuotientResult pres = quotient_form(view_of(f1), sub1.elements, {});
    std::vector<Int> orders = pres.form.factors();
    if (canonical_gens) *canonical_gens = pres.gen_lifts;
    if (orders.empty()) {
        // Trivial subgroups: the unique empty map.
        return {std::vector<IVec>{}};
    }
    IsoSearch search{f1, f2, pres.gen_lifts, orders, sub2.elements,
                     sub2.elements.size(), 0, static_cast<long>(work_bound.get_si()),
                     {}, false};
    std::vector<IVec> images;
    search.rec(0, images);
    return search.results;
}

unsigned long encode_element(const FiniteQuadraticForm& f, const IVec& x) {
    return encode(f, x);
}

std::vector<AutoMap> form_automorphism_maps(const FiniteQuadraticForm& f,
                                            const Int& work_bound) {
    Subgroup whole;
    whole.elements = f.all_elements(Int(100000));
    std::vector<IVec> gens;
    auto isos = subgroup_isometries(f, whole, f, whole, &gens, work_bound);
    std::vector<AutoMap> out;
    const std::size_t t = gens.size();
    // Orders of the canonical generators.
    std::vector<Int> orders(t);
    for (std::size_t i = 0; i < t; ++i) orders[i] = f.element_order(gens[i]);
    for (const auto& iso : isos) {
        AutoMap m;
        // Enumerate all coefficient tuples on the canonical generators.
        std::vector<Int> coef(t, Int(0));
        for (;;) {
            IVec src(f.ngens(), Int(0)), dst(f.ngens(), Int(0));
            for (std::size_t i = 0; i < t; ++i) {
                src = f.add(src, f.scale(coef[i], gens[i]));
                dst = f.add(dst, f.scale(coef[i], iso[i]));
            }
            m[encode(f, src)] = dst;
            std::size_t i = 0;
            while (i < t) {
                coef[i] += 1;
                if (coef[i] < orders[i]) break;
                coef[i] = 0;
                ++i;
            }
            if (i == t) break;
            if (t == 0) break;
        }
        if (t == 0) m[encode(f, IVec(f.ngens(), Int(0)))] = IVec(f.ngens(), Int(0));
        out.push_back(std::move(m));
    }
    return out;
}

bool forms_isomorphic_bruteforce(const FiniteQuadraticForm& f1, const FiniteQuadraticForm& f2,
                                 const Int& bound) {
    if (f1.factors() != f2.factors()) return false;
    if (f1.trivial()) return true;
    Subgroup w1, w2;
    w1.elements = f1.all_elements(bound);
    w2.elements = f2.all_elements(bound);
    QuotientResult pres = quotient_form(view_of(f1), w1.elements, {});
    std::vector<Int> orders = pres.form.factors();
    IsoSearch search{f1, f2, pres.gen_lifts, orders, w2.elements, w2.elements.size(),
                     0, 50000000, {}, true};
    std::vector<IVec> images;
    search.rec(0, images);
    return !search.results.empty();
}

}  // namespace lattice_forge
