#include "lattice_forge/ratmat.hpp"

namespace lattice_forge {

RatMat::RatMat(const IntMat& m) : rows_(m.rows()), cols_(m.cols()), a_(m.rows() * m.cols()) {
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) at(i, j) = Rat(m.at(i, j));
}

RatMat RatMat::operator*(const RatMat& o) const {
    if (cols_ != o.rows_) throw domain_error("RatMat: dimension mismatch in *");
    RatMat r(rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Rat& aik = at(i, k);
            if (aik == 0) continue;
            for (std::size_t j = 0; j < o.cols_; ++j) r.at(i, j) += aik * o.at(k, j);
        }
    r.canonicalize();
    return r;
}

RatMat RatMat::transpose() const {
    RatMat r(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
    return r;
}

RVec RatMat::mul(const RVec& v) const {
    if (v.size() != cols_) throw domain_error("RatMat: dimension mismatch in mul");
    RVec r(rows_, Rat(0));
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j)
            if (at(i, j) != 0) r[i] += at(i, j) * v[j];
        r[i].canonicalize();
    }
    return r;
}

RatMat RatMat::inverse() const {
    if (rows_ != cols_) throw domain_error("RatMat::inverse: not square");
    const std::size_t n = rows_;
    RatMat a = *this;
    RatMat inv(n, n);
    for (std::size_t i = 0; i < n; ++i) inv.at(i, i) = 1;
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t p = k;
        while (p < n && a.at(p, k) == 0) ++p;
        if (p == n) throw domain_error("RatMat::inverse: singular");
        if (p != k)
            for (std::size_t j = 0; j < n; ++j) {
                std::swap(a.at(k, j), a.at(p, j));
                std::swap(inv.at(k, j), inv.at(p, j));
            }
        Rat d = 1 / a.at(k, k);
        for (std::size_t j = 0; j < n; ++j) {
            a.at(k, j) *= d;
            inv.at(k, j) *= d;
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (i == k || a.at(i, k) == 0) continue;
            Rat f = a.at(i, k);
            for (std::size_t j = 0; j < n; ++j) {
                a.at(i, j) -= f * a.at(k, j);
                inv.at(i, j) -= f * inv.at(k, j);
            }
        }
    }
    inv.canonicalize();
    return inv;
}

void RatMat::canonicalize() {
    for (Rat& x : a_) x.canonicalize();
}

}  // namespace lattice_forge
