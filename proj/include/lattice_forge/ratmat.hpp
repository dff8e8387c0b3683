#ifndef LATTICE_FORGE_RATMAT_HPP
#define LATTICE_FORGE_RATMAT_HPP

#include "lattice_forge/intmat.hpp"

namespace lattice_forge {

// Dense matrix over exact rationals.
class RatMat {
public:
    RatMat() : rows_(0), cols_(0) {}
    RatMat(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), a_(rows * cols, Rat(0)) {}
    explicit RatMat(const IntMat& m);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rat& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const Rat& at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    bool operator==(const RatMat& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
    }

    RatMat operator*(const RatMat& o) const;
    RatMat transpose() const;

    RVec mul(const RVec& v) const;

    // Inverse of a square nonsingular matrix.
    RatMat inverse() const;

    void canonicalize();

private:
    std::size_t rows_, cols_;
    std::vector<Rat> a_;
};

}  // namespace lattice_forge

#endif
