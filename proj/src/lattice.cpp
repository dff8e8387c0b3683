#include "lattice_forge/lattice.hpp"

#include <algorithm>

namespace lattice_forge {

Lattice::Lattice(IntMat gram, std::string label)
    : gram_(std::move(gram)), label_(std::move(label)) {
    if (gram_.rows() == 0 || gram_.rows() != gram_.cols())
        throw domain_error("Lattice: Gram matrix must be square and nonempty");
    if (!gram_.is_symmetric()) throw domain_error("Lattice: Gram matrix not symmetric");
    for (std::size_t i = 0; i < gram_.rows(); ++i)
        if (mod_floor(gram_.at(i, i), 2) != 0)
            throw domain_error("Lattice: odd diagonal entry (lattice must be even)");
    det_ = gram_.det();
    if (det_ == 0) throw domain_error("Lattice: degenerate Gram matrix");
}

Lattice Lattice::with_label(std::string label) const {
    Lattice l = *this;
    l.label_ = std::move(label);
    return l;
}

Int inner(const Lattice& l, const IVec& x, const IVec& y) {
    if (static_cast<int>(x.size()) != l.rank() || static_cast<int>(y.size()) != l.rank())
        throw domain_error("inner: dimension mismatch");
    IVec gy = l.gram().mul(y);
    Int s = 0;
    for (std::size_t i = 0; i < x.size(); ++i) s += x[i] * gy[i];
    return s;
}

Signature signature_of_gram(const IntMat& gram) {
    const std::size_t n = gram.rows();
    RatMat a(gram);
    Signature sig;
    std::vector<bool> done(n, false);
    for (std::size_t step = 0; step < n; ++step) {
        // Pick a nonzero diagonal pivot among the remaining indices.
        std::size_t piv = n;
        for (std::size_t i = 0; i < n; ++i)
            if (!done[i] && a.at(i, i) != 0) {
                piv = i;
                break;
            }
        if (piv == n) {
            // All remaining diagonal entries vanish; use the hyperbolic trick
            // a_ii=0, a_ij!=0: adding row/col j to i makes a_ii = 2a_ij != 0.
            std::size_t bi = n, bj = n;
            for (std::size_t i = 0; i < n && bi == n; ++i) {
                if (done[i]) continue;
                for (std::size_t j = 0; j < n; ++j) {
                    if (done[j] || j == i) continue;
                    if (a.at(i, j) != 0) {
                        bi = i;
                        bj = j;
                        break;
                    }
                }
            }
            if (bi == n) throw domain_error("signature: degenerate form");
            for (std::size_t k = 0; k < n; ++k) a.at(bi, k) += a.at(bj, k);
            for (std::size_t k = 0; k < n; ++k) a.at(k, bi) += a.at(k, bj);
            piv = bi;
        }
        Rat d = a.at(piv, piv);
        if (d > 0)
            ++sig.plus;
        else
            ++sig.minus;
        done[piv] = true;
        for (std::size_t i = 0; i < n; ++i) {
            if (done[i] || a.at(i, piv) == 0) continue;
            Rat f = a.at(i, piv) / d;
            for (std::size_t j = 0; j < n; ++j) a.at(i, j) -= f * a.at(piv, j);
            for (std::size_t j = 0; j < n; ++j) a.at(j, i) -= f * a.at(j, piv);
        }
    }
    return sig;
}

Signature signature(const Lattice& l) { return signature_of_gram(l.gram()); }

Int divisibility(const Lattice& l, const IVec& s) {
    if (static_cast<int>(s.size()) != l.rank()) throw domain_error("divisibility: dimension mismatch");
    Int g = gcd_all(s);
    if (g == 0) throw domain_error("divisibility: zero vector");
    if (g != 1) throw domain_error("divisibility: vector not primitive");
    return gcd_all(l.gram().mul(s));
}

Lattice direct_sum(const std::vector<Lattice>& parts) {
    if (parts.empty()) throw domain_error("direct_sum: no summands");
    std::vector<IntMat> grams;
    grams.reserve(parts.size());
    std::string label;
    for (const auto& p : parts) {
        grams.push_back(p.gram());
        if (!p.label().empty()) {
            if (!label.empty()) label += " + ";
            label += p.label();
        }
    }
    return Lattice(block_diag(grams), label);
}

Lattice rescale(const Lattice& l, const Int& k) {
    if (k == 0) throw domain_error("rescale: k must be nonzero");
    IntMat g = l.gram();
    for (std::size_t i = 0; i < g.rows(); ++i)
        for (std::size_t j = 0; j < g.cols(); ++j) g.at(i, j) *= k;
    std::string label = l.label().empty() ? "" : l.label() + "(" + k.get_str() + ")";
    return Lattice(g, label);
}

Complement orthogonal_complement(const Lattice& l, const std::vector<IVec>& vs) {
    if (vs.empty()) throw domain_error("orthogonal_complement: empty span");
    IntMat v = from_columns(l.rank(), vs);
    IntMat vg = gram_of(l, v);
    if (vg.det() == 0) throw domain_error("orthogonal_complement: degenerate span");
    // Pairing matrix rows: x -> v_i^T gram x.
    IntMat p = v.transpose() * l.gram();
    IntMat basis = kernel_basis(p);
    IntMat g = gram_of(l, basis);
    return Complement{Lattice(g), basis};
}

IntMat gram_of(const Lattice& l, const IntMat& basis) {
    return basis.transpose() * l.gram() * basis;
}

std::vector<std::vector<std::size_t>> gram_blocks(const IntMat& gram) {
    const std::size_t n = gram.rows();
    std::vector<int> comp(n, -1);
    int nc = 0;
    for (std::size_t i = 0; i < n; ++i) {
        if (comp[i] >= 0) continue;
        std::vector<std::size_t> stack{i};
        comp[i] = nc;
        while (!stack.empty()) {
            std::size_t x = stack.back();
            stack.pop_back();
            for (std::size_t j = 0; j < n; ++j)
                if (comp[j] < 0 && x != j && gram.at(x, j) != 0) {
                    comp[j] = nc;
                    stack.push_back(j);
                }
        }
        ++nc;
    }
    std::vector<std::vector<std::size_t>> blocks(nc);
    for (std::size_t i = 0; i < n; ++i) blocks[comp[i]].push_back(i);
    return blocks;
}

}  // namespace lattice_forge
