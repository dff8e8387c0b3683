#include "lattice_forge/intmat.hpp"

#include <algorithm>
#include <sstream>

namespace lattice_forge {

IntMat::IntMat(std::initializer_list<std::initializer_list<long>> rows) {
    rows_ = rows.size();
    cols_ = rows_ ? rows.begin()->size() : 0;
    a_.assign(rows_ * cols_, Int(0));
    std::size_t i = 0;
    for (const auto& row : rows) {
        if (row.size() != cols_) throw domain_error("IntMat: ragged initializer");
        std::size_t j = 0;
        for (long x : row) at(i, j++) = x;
        ++i;
    }
}

IntMat IntMat::identity(std::size_t n) {
    IntMat m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

IntMat IntMat::operator*(const IntMat& o) const {
    if (cols_ != o.rows_) throw domain_error("IntMat: dimension mismatch in *");
    IntMat r(rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Int& aik = at(i, k);
            if (aik == 0) continue;
            for (std::size_t j = 0; j < o.cols_; ++j)
                r.at(i, j) += aik * o.at(k, j);
        }
    return r;
}

IntMat IntMat::operator-() const {
    IntMat r(rows_, cols_);
    for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = -a_[i];
    return r;
}

IntMat IntMat::transpose() const {
    IntMat r(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
    return r;
}

bool IntMat::is_symmetric() const {
    if (rows_ != cols_) return false;
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = i + 1; j < cols_; ++j)
            if (at(i, j) != at(j, i)) return false;
    return true;
}

IVec IntMat::mul(const IVec& v) const {
    if (v.size() != cols_) throw domain_error("IntMat: dimension mismatch in mul");
    IVec r(rows_, Int(0));
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            if (at(i, j) != 0) r[i] += at(i, j) * v[j];
    return r;
}

IVec IntMat::mul_transposed(const IVec& v) const {
    if (v.size() != rows_) throw domain_error("IntMat: dimension mismatch in mul_transposed");
    IVec r(cols_, Int(0));
    for (std::size_t i = 0; i < rows_; ++i)
        if (v[i] != 0)
            for (std::size_t j = 0; j < cols_; ++j) r[j] += at(i, j) * v[i];
    return r;
}

IntMat IntMat::column(std::size_t j) const {
    IntMat c(rows_, 1);
    for (std::size_t i = 0; i < rows_; ++i) c.at(i, 0) = at(i, j);
    return c;
}

IVec IntMat::column_vec(std::size_t j) const {
    IVec c(rows_);
    for (std::size_t i = 0; i < rows_; ++i) c[i] = at(i, j);
    return c;
}

IntMat IntMat::with_columns(const std::vector<std::size_t>& idx) const {
    IntMat r(rows_, idx.size());
    for (std::size_t j = 0; j < idx.size(); ++j)
        for (std::size_t i = 0; i < rows_; ++i) r.at(i, j) = at(i, idx[j]);
    return r;
}

void IntMat::swap_rows(std::size_t i, std::size_t j) {
    for (std::size_t k = 0; k < cols_; ++k) std::swap(at(i, k), at(j, k));
}

void IntMat::swap_cols(std::size_t i, std::size_t j) {
    for (std::size_t k = 0; k < rows_; ++k) std::swap(at(k, i), at(k, j));
}

Int IntMat::det() const {
    if (rows_ != cols_) throw domain_error("IntMat::det: not square");
    std::size_t n = rows_;
    if (n == 0) return 1;
    IntMat m = *this;
    Int prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m.at(k, k) == 0) {
            std::size_t p = k + 1;
            while (p < n && m.at(p, k) == 0) ++p;
            if (p == n) return 0;
            m.swap_rows(k, p);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j) {
                Int t = m.at(i, j) * m.at(k, k) - m.at(i, k) * m.at(k, j);
                m.at(i, j) = exact_div(t, prev);
            }
        prev = m.at(k, k);
    }
    return sign > 0 ? m.at(n - 1, n - 1) : -m.at(n - 1, n - 1);
}

std::string IntMat::to_string() const {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < rows_; ++i) {
        if (i) os << "; ";
        for (std::size_t j = 0; j < cols_; ++j) {
            if (j) os << ",";
            os << at(i, j).get_str();
        }
    }
    os << "]";
    return os.str();
}

IntMat block_diag(const std::vector<IntMat>& blocks) {
    std::size_t r = 0, c = 0;
    for (const auto& b : blocks) {
        r += b.rows();
        c += b.cols();
    }
    IntMat m(r, c);
    std::size_t i0 = 0, j0 = 0;
    for (const auto& b : blocks) {
        for (std::size_t i = 0; i < b.rows(); ++i)
            for (std::size_t j = 0; j < b.cols(); ++j) m.at(i0 + i, j0 + j) = b.at(i, j);
        i0 += b.rows();
        j0 += b.cols();
    }
    return m;
}

IntMat from_columns(std::size_t rows, const std::vector<IVec>& cols) {
    IntMat m(rows, cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j) {
        if (cols[j].size() != rows) throw domain_error("from_columns: bad length");
        for (std::size_t i = 0; i < rows; ++i) m.at(i, j) = cols[j][i];
    }
    return m;
}

namespace {

// In-place row operation bookkeeping for SNF.
void add_row(IntMat& m, IntMat& u, std::size_t dst, std::size_t src, const Int& c) {
    for (std::size_t j = 0; j < m.cols(); ++j) m.at(dst, j) += c * m.at(src, j);
    for (std::size_t j = 0; j < u.cols(); ++j) u.at(dst, j) += c * u.at(src, j);
}

void add_col(IntMat& m, IntMat& v, std::size_t dst, std::size_t src, const Int& c) {
    for (std::size_t i = 0; i < m.rows(); ++i) m.at(i, dst) += c * m.at(i, src);
    for (std::size_t i = 0; i < v.rows(); ++i) v.at(i, dst) += c * v.at(i, src);
}

void negate_row(IntMat& m, IntMat& u, std::size_t i) {
    for (std::size_t j = 0; j < m.cols(); ++j) m.at(i, j) = -m.at(i, j);
    for (std::size_t j = 0; j < u.cols(); ++j) u.at(i, j) = -u.at(i, j);
}

}  // namespace

SmithResult smith_normal_form(const IntMat& m0) {
    IntMat m = m0;
    const std::size_t r = m.rows(), c = m.cols();
    IntMat u = IntMat::identity(r);
    IntMat v = IntMat::identity(c);
    std::size_t t = 0;
    const std::size_t steps = std::min(r, c);
    while (t < steps) {
        // Find a nonzero pivot with minimal absolute value in the remaining block.
        std::size_t pi = t, pj = t;
        bool found = false;
        Int best;
        for (std::size_t i = t; i < r; ++i)
            for (std::size_t j = t; j < c; ++j) {
                const Int& x = m.at(i, j);
                if (x == 0) continue;
                Int ax = abs(x);
                if (!found || ax < best) {
                    found = true;
                    best = ax;
                    pi = i;
                    pj = j;
                }
            }
        if (!found) break;
        if (pi != t) {
            m.swap_rows(t, pi);
            u.swap_rows(t, pi);
        }
        if (pj != t) {
            m.swap_cols(t, pj);
            v.swap_cols(t, pj);
        }
        if (m.at(t, t) < 0) negate_row(m, u, t);

        bool dirty = false;
        for (std::size_t i = t + 1; i < r; ++i) {
            if (m.at(i, t) == 0) continue;
            Int q;
            mpz_fdiv_q(q.get_mpz_t(), m.at(i, t).get_mpz_t(), m.at(t, t).get_mpz_t());
            add_row(m, u, i, t, -q);
            if (m.at(i, t) != 0) dirty = true;
        }
        for (std::size_t j = t + 1; j < c; ++j) {
            if (m.at(t, j) == 0) continue;
            Int q;
            mpz_fdiv_q(q.get_mpz_t(), m.at(t, j).get_mpz_t(), m.at(t, t).get_mpz_t());
            add_col(m, v, j, t, -q);
            if (m.at(t, j) != 0) dirty = true;
        }
        if (dirty) continue;  // re-pick a smaller pivot

        // Enforce divisibility d[t] | m[i][j] for the rest of the block.
        bool ok = true;
        for (std::size_t i = t + 1; i < r && ok; ++i)
            for (std::size_t j = t + 1; j < c && ok; ++j)
                if (!divides(m.at(t, t), m.at(i, j))) {
                    add_row(m, u, t, i, 1);
                    ok = false;
                }
        if (!ok) continue;
        ++t;
    }
    return SmithResult{u, m, v};
}

std::vector<Int> snf_diagonal(const IntMat& m) {
    SmithResult s = smith_normal_form(m);
    std::size_t n = std::min(m.rows(), m.cols());
    std::vector<Int> d(n);
    for (std::size_t i = 0; i < n; ++i) d[i] = s.d.at(i, i);
    return d;
}

IntMat kernel_basis(const IntMat& m) {
    SmithResult s = smith_normal_form(m);
    const std::size_t n = m.cols();
    std::vector<std::size_t> idx;
    const std::size_t steps = std::min(m.rows(), n);
    for (std::size_t j = 0; j < n; ++j) {
        if (j >= steps || s.d.at(j, j) == 0) idx.push_back(j);
    }
    return s.v.with_columns(idx);
}

IntMat saturate_columns(const IntMat& b) {
    // b = u^-1 d v^-1; the saturation is spanned by the first k columns of u^-1.
    SmithResult s = smith_normal_form(b);
    const std::size_t k = b.cols();
    for (std::size_t j = 0; j < k; ++j)
        if (s.d.at(j, j) == 0) throw domain_error("saturate_columns: columns not independent");
    // Solve u * x = e_i for the first k unit vectors: columns of u^-1.
    // u is unimodular, so inverse is integral; use rational solve and round.
    IntMat uinv(b.rows(), k);
    for (std::size_t j = 0; j < k; ++j) {
        RVec rhs(b.rows(), Rat(0));
        rhs[j] = 1;
        RVec x = solve_rational(s.u, rhs);
        for (std::size_t i = 0; i < b.rows(); ++i) {
            if (!is_integral(x[i])) throw domain_error("saturate_columns: non-unimodular u");
            uinv.at(i, j) = x[i].get_num();
        }
    }
    return uinv;
}

bool is_primitive_sublattice(const IntMat& b) {
    std::vector<Int> d = snf_diagonal(b);
    std::size_t k = b.cols();
    if (k > b.rows()) return false;
    for (std::size_t i = 0; i < k; ++i)
        if (d[i] != 1) return false;
    return true;
}

RVec solve_rational(const IntMat& m, const RVec& rhs) {
    if (m.rows() != m.cols() || rhs.size() != m.rows())
        throw domain_error("solve_rational: shape mismatch");
    const std::size_t n = m.rows();
    std::vector<RVec> a(n, RVec(n + 1));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) a[i][j] = Rat(m.at(i, j));
        a[i][n] = rhs[i];
    }
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t p = k;
        while (p < n && a[p][k] == 0) ++p;
        if (p == n) throw domain_error("solve_rational: singular matrix");
        std::swap(a[k], a[p]);
        Rat inv = 1 / a[k][k];
        for (std::size_t j = k; j <= n; ++j) a[k][j] *= inv;
        for (std::size_t i = 0; i < n; ++i) {
            if (i == k || a[i][k] == 0) continue;
            Rat f = a[i][k];
            for (std::size_t j = k; j <= n; ++j) a[i][j] -= f * a[k][j];
        }
    }
    RVec x(n);
    for (std::size_t i = 0; i < n; ++i) {
        x[i] = a[i][n];
        x[i].canonicalize();
    }
    return x;
}

}  // namespace lattice_forge
