#include "lattice_forge/discform.hpp"

#include <algorithm>

#include "lattice_forge/groups.hpp"

namespace lattice_forge {

FiniteQuadraticForm::FiniteQuadraticForm(std::vector<Int> factors, RVec q_values, RatMat b_values)
    : factors_(std::move(factors)), q_values_(std::move(q_values)), b_values_(std::move(b_values)) {
    const std::size_t k = factors_.size();
    if (q_values_.size() != k || b_values_.rows() != k || b_values_.cols() != k)
        throw domain_error("FiniteQuadraticForm: shape mismatch");
    for (std::size_t i = 0; i < k; ++i) {
        if (factors_[i] <= 1) throw domain_error("FiniteQuadraticForm: factors must be > 1");
        if (i + 1 < k && !divides(factors_[i], factors_[i + 1]))
            throw domain_error("FiniteQuadraticForm: factors must form a divisibility chain");
        q_values_[i] = mod_two(q_values_[i]);
        for (std::size_t j = 0; j < k; ++j) b_values_.at(i, j) = mod_one(b_values_.at(i, j));
    }
    // b(x,x) = q(x) mod Z on generators (b is the Q/Z reduction of the pairing).
    for (std::size_t i = 0; i < k; ++i)
        if (mod_one(b_values_.at(i, i) - q_values_[i]) != 0)
            throw domain_error("FiniteQuadraticForm: b does not lift q");
}

Int FiniteQuadraticForm::order() const {
    Int n = 1;
    for (const Int& d : factors_) n *= d;
    return n;
}

IVec FiniteQuadraticForm::reduce(const IVec& x) const {
    if (x.size() != factors_.size()) throw domain_error("FiniteQuadraticForm: bad element length");
    IVec r(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) r[i] = mod_floor(x[i], factors_[i]);
    return r;
}

bool FiniteQuadraticForm::is_zero(const IVec& x) const {
    IVec r = reduce(x);
    return std::all_of(r.begin(), r.end(), [](const Int& v) { return v == 0; });
}

IVec FiniteQuadraticForm::add(const IVec& x, const IVec& y) const {
    IVec r(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) r[i] = mod_floor(x[i] + y[i], factors_[i]);
    return r;
}

IVec FiniteQuadraticForm::neg(const IVec& x) const {
    IVec r(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) r[i] = mod_floor(-x[i], factors_[i]);
    return r;
}

IVec FiniteQuadraticForm::scale(const Int& c, const IVec& x) const {
    IVec r(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) r[i] = mod_floor(c * x[i], factors_[i]);
    return r;
}

Int FiniteQuadraticForm::element_order(const IVec& x) const {
    Int o = 1;
    for (std::size_t i = 0; i < x.size(); ++i) {
        Int xi = mod_floor(x[i], factors_[i]);
        if (xi == 0) continue;
        Int oi = exact_div(factors_[i], gcd(xi, factors_[i]));
        o = lcm(o, oi);
    }
    return o;
}

Rat FiniteQuadraticForm::q(const IVec& x) const {
    IVec r = reduce(x);
    Rat s = 0;
    for (std::size_t i = 0; i < r.size(); ++i) {
        if (r[i] == 0) continue;
        s += Rat(r[i] * r[i]) * q_values_[i];
        for (std::size_t j = i + 1; j < r.size(); ++j)
            if (r[j] != 0) s += 2 * Rat(r[i] * r[j]) * b_values_.at(i, j);
    }
    return mod_two(s);
}

Rat FiniteQuadraticForm::b(const IVec& x, const IVec& y) const {
    IVec rx = reduce(x), ry = reduce(y);
    Rat s = 0;
    for (std::size_t i = 0; i < rx.size(); ++i)
        for (std::size_t j = 0; j < ry.size(); ++j)
            if (rx[i] != 0 && ry[j] != 0) s += Rat(rx[i] * ry[j]) * b_values_.at(i, j);
    return mod_one(s);
}

FiniteQuadraticForm FiniteQuadraticForm::orthogonal_sum(const FiniteQuadraticForm& o) const {
    // Concatenate generators, then renormalize to a divisibility chain.
    const std::size_t k1 = ngens(), k2 = o.ngens();
    std::vector<Int> factors = factors_;
    factors.insert(factors.end(), o.factors_.begin(), o.factors_.end());
    RVec q = q_values_;
    q.insert(q.end(), o.q_values_.begin(), o.q_values_.end());
    RatMat b(k1 + k2, k1 + k2);
    for (std::size_t i = 0; i < k1; ++i)
        for (std::size_t j = 0; j < k1; ++j) b.at(i, j) = b_values_.at(i, j);
    for (std::size_t i = 0; i < k2; ++i)
        for (std::size_t j = 0; j < k2; ++j) b.at(k1 + i, k1 + j) = o.b_values_.at(i, j);
    return normalize_presentation(factors, q, b);
}

FiniteQuadraticForm FiniteQuadraticForm::negated() const {
    RVec q = q_values_;
    for (Rat& v : q) v = mod_two(-v);
    RatMat b = b_values_;
    for (std::size_t i = 0; i < b.rows(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j) b.at(i, j) = mod_one(-b.at(i, j));
    return FiniteQuadraticForm(factors_, q, b);
}

std::vector<IVec> FiniteQuadraticForm::p_part_gens(const Int& p) const {
    std::vector<IVec> gens;
    for (std::size_t i = 0; i < factors_.size(); ++i) {
        Int pe = p_power_part(factors_[i], p);
        if (pe == 1) continue;
        IVec g(factors_.size(), Int(0));
        g[i] = exact_div(factors_[i], pe);
        gens.push_back(std::move(g));
    }
    return gens;
}

FiniteQuadraticForm FiniteQuadraticForm::p_part(const Int& p) const {
    if (!is_prime(p)) throw domain_error("p_part: p must be prime");
    std::vector<Int> factors;
    std::vector<IVec> gens = p_part_gens(p);
    for (std::size_t i = 0; i < factors_.size(); ++i) {
        Int pe = p_power_part(factors_[i], p);
        if (pe > 1) factors.push_back(pe);
    }
    RVec qv(gens.size());
    RatMat bv(gens.size(), gens.size());
    for (std::size_t i = 0; i < gens.size(); ++i) {
        qv[i] = q(gens[i]);
        for (std::size_t j = 0; j < gens.size(); ++j) bv.at(i, j) = b(gens[i], gens[j]);
    }
    return FiniteQuadraticForm(factors, qv, bv);
}

std::vector<IVec> FiniteQuadraticForm::all_elements(const Int& bound) const {
    if (order() > bound) throw domain_error("FiniteQuadraticForm: group too large to enumerate");
    std::vector<IVec> out;
    out.push_back(IVec(factors_.size(), Int(0)));
    for (std::size_t i = 0; i < factors_.size(); ++i) {
        std::vector<IVec> next;
        next.reserve(out.size() * factors_[i].get_ui());
        for (Int c = 0; c < factors_[i]; ++c)
            for (const IVec& x : out) {
                IVec y = x;
                y[i] = c;
                next.push_back(std::move(y));
            }
        out = std::move(next);
    }
    return out;
}

bool FiniteQuadraticForm::same_presentation(const FiniteQuadraticForm& o) const {
    return factors_ == o.factors_ && q_values_ == o.q_values_ && b_values_ == o.b_values_;
}

FiniteQuadraticForm discriminant_form(const Lattice& l) {
    std::vector<RVec> gens = discriminant_generators(l);
    std::vector<Int> factors;
    {
        std::vector<Int> d = snf_diagonal(l.gram());
        for (const Int& x : d)
            if (x > 1) factors.push_back(x);
    }
    RatMat g(l.gram());
    RVec qv(gens.size());
    RatMat bv(gens.size(), gens.size());
    for (std::size_t i = 0; i < gens.size(); ++i) {
        RVec gi = g.mul(gens[i]);
        for (std::size_t j = 0; j < gens.size(); ++j) {
            Rat s = 0;
            for (std::size_t k = 0; k < gi.size(); ++k) s += gens[j][k] * gi[k];
            if (i == j) qv[i] = mod_two(s);
            bv.at(i, j) = mod_one(s);
        }
    }
    return FiniteQuadraticForm(factors, qv, bv);
}

std::vector<RVec> discriminant_generators(const Lattice& l) {
    SmithResult s = smith_normal_form(l.gram());
    // gram = u^-1 d v^-1, dual basis columns v * d^-1; generator i is
    // (1/d_i) * v_i for every invariant factor d_i > 1.
    std::vector<RVec> gens;
    const std::size_t n = l.gram().rows();
    for (std::size_t i = 0; i < n; ++i) {
        const Int& di = s.d.at(i, i);
        if (di <= 1) continue;
        RVec g(n);
        for (std::size_t r = 0; r < n; ++r) {
            g[r] = Rat(s.v.at(r, i), di);
            g[r].canonicalize();
        }
        gens.push_back(std::move(g));
    }
    return gens;
}

IVec disc_class_of(const Lattice& l, const RVec& x) {
    // Solve x = sum c_i g_i + (lattice vector) for integer c_i mod d_i.
    // With g_i = v_i / d_i and v unimodular: write x = v * y, c_i = d_i * y_i.
    SmithResult s = smith_normal_form(l.gram());
    const std::size_t n = l.gram().rows();
    // Check x in L*: gram * x integral.
    RatMat g(l.gram());
    for (const Rat& e : g.mul(x))
        if (!is_integral(e)) throw domain_error("disc_class_of: vector not in the dual lattice");
    // y = v^-1 x via rational solve v y = x.
    RVec y = [&] {
        RVec rhs = x;
        return solve_rational(s.v, rhs);
    }();
    IVec cls;
    for (std::size_t i = 0; i < n; ++i) {
        const Int& di = s.d.at(i, i);
        Rat c = Rat(di) * y[i];
        c.canonicalize();
        if (!is_integral(c)) throw domain_error("disc_class_of: vector not in the dual lattice");
        if (di > 1) cls.push_back(mod_floor(c.get_num(), di));
    }
    return cls;
}

namespace {

// Square-class comparison of nondegenerate forms on a cyclic p-group.
// q(gen) = a / p^k mod 2Z; for odd p write a = 2c and compare Legendre(c, p);
// for p = 2 compare a modulo 4 (k = 1) or 8 (k >= 2).
bool cyclic_p_forms_equivalent(const FiniteQuadraticForm& f1, const FiniteQuadraticForm& f2,
                               const Int& p) {
    const Int n = f1.factors()[0];
    if (n != f2.factors()[0]) return false;
    auto lead = [&](const FiniteQuadraticForm& f) -> Int {
        Rat v = f.q_values()[0];
        // v = num/den mod 2Z with den | n; normalize to denominator n.
        Int den = v.get_den(), num = v.get_num();
        if (!divides(den, n)) throw domain_error("cyclic form: invalid denominator");
        return num * exact_div(n, den);  // value = a / n with a defined mod 2n
    };
    Int a1 = mod_floor(lead(f1), 2 * n);
    Int a2 = mod_floor(lead(f2), 2 * n);
    if (p == 2) {
        if (mod_floor(a1, 2) == 0 || mod_floor(a2, 2) == 0)
            throw domain_error("cyclic 2-form: degenerate leading coefficient");
        Int m = (n == 2) ? Int(4) : Int(8);
        Int r = mod_floor(a2 * inverse_mod(a1, 2 * n), m);
        return r == 1;
    }
    // Odd p: a = 2c with c a unit mod p.
    if (mod_floor(a1, 2) != 0 || mod_floor(a2, 2) != 0)
        throw domain_error("cyclic odd form: values must have even numerator");
    Int c1 = exact_div(a1, 2), c2 = exact_div(a2, 2);
    if (divides(p, c1) || divides(p, c2))
        throw domain_error("cyclic odd form: degenerate leading coefficient");
    return legendre(c1 * c2, p) == 1;
}

}  // namespace

bool forms_equivalent(const FiniteQuadraticForm& f1, const FiniteQuadraticForm& f2,
                      const Int& bound) {
    if (f1.factors() != f2.factors()) return false;
    if (f1.trivial()) return true;
    std::vector<Int> ps = prime_factors(f1.order());
    for (const Int& p : ps) {
        FiniteQuadraticForm p1 = f1.p_part(p), p2 = f2.p_part(p);
        if (p1.factors() != p2.factors()) return false;
        if (p1.ngens() == 1) {
            if (!cyclic_p_forms_equivalent(p1, p2, p)) return false;
            continue;
        }
        if (p1.order() > bound)
            throw domain_error("forms_equivalent: p-part exceeds brute-force bound");
        if (!forms_isomorphic_bruteforce(p1, p2, bound)) return false;
    }
    return true;
}

bool genus_equal(const GenusDescriptor& a, const GenusDescriptor& b, const Int& bound) {
    return a.sig == b.sig && forms_equivalent(a.disc, b.disc, bound);
}

std::string certificate_name(GenusCertificate c) {
    switch (c) {
        case GenusCertificate::IndefiniteRankLength:
            return "indefinite-rank-length";
        case GenusCertificate::HyperbolicSummand:
            return "hyperbolic-summand";
        case GenusCertificate::TwoAdicPattern:
            return "two-adic-pattern";
    }
    return "?";
}

bool has_structural_u_summand(const IntMat& gram) {
    for (const auto& block : gram_blocks(gram)) {
        if (block.size() != 2) continue;
        std::size_t i = block[0], j = block[1];
        if (gram.at(i, i) == 0 && gram.at(j, j) == 0 &&
            (gram.at(i, j) == 1 || gram.at(i, j) == -1))
            return true;
    }
    return false;
}

std::optional<GenusCertificate> genus_unique_certificate(const Lattice& l) {
    Signature sig = signature(l);
    FiniteQuadraticForm f = discriminant_form(l);
    if (sig.indefinite() && l.rank() >= 3 &&
        l.rank() >= static_cast<int>(f.length()) + 2)
        return GenusCertificate::IndefiniteRankLength;
    if (has_structural_u_summand(l.gram())) return GenusCertificate::HyperbolicSummand;
    if (sig.indefinite() && l.rank() >= 3) {
        const auto& d = f.factors();
        if (d.size() >= 2 && d[0] == 2 && d[1] == 2) return GenusCertificate::TwoAdicPattern;
        if (d.size() >= 3 && d[0] == 2 && d[1] == 4 && mod_floor(d[2], 8) == 4)
            return GenusCertificate::TwoAdicPattern;
        if (d.size() >= 2 && d[0] == 4 && d[1] == 4) return GenusCertificate::TwoAdicPattern;
    }
    return std::nullopt;
}

}  // namespace lattice_forge
