#ifndef LATTICE_FORGE_INTMAT_HPP
#define LATTICE_FORGE_INTMAT_HPP

#include <cstddef>
#include <initializer_list>

#include "lattice_forge/numeric.hpp"

namespace lattice_forge {

// Dense matrix over arbitrary-precision integers.
class IntMat {
public:
    IntMat() : rows_(0), cols_(0) {}
    IntMat(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), a_(rows * cols, Int(0)) {}
    IntMat(std::initializer_list<std::initializer_list<long>> rows);

    static IntMat identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Int& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const Int& at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    bool operator==(const IntMat& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
    }

    IntMat operator*(const IntMat& o) const;
    IntMat operator-() const;
    IntMat transpose() const;
    bool is_symmetric() const;

    IVec mul(const IVec& v) const;                 // this * v
    IVec mul_transposed(const IVec& v) const;      // this^T * v

    IntMat column(std::size_t j) const;
    IVec column_vec(std::size_t j) const;
    IntMat with_columns(const std::vector<std::size_t>& idx) const;
    void swap_rows(std::size_t i, std::size_t j);
    void swap_cols(std::size_t i, std::size_t j);

    // Fraction-free determinant (Bareiss).  Square matrices only.
    Int det() const;

    std::string to_string() const;

private:
    std::size_t rows_, cols_;
    std::vector<Int> a_;
};

IntMat block_diag(const std::vector<IntMat>& blocks);
IntMat from_columns(std::size_t rows, const std::vector<IVec>& cols);

// Smith normal form: u * m * v = d, u and v unimodular, d diagonal with
// d[i] | d[i+1] and d[i] >= 0.
struct SmithResult {
    IntMat u, d, v;
};
SmithResult smith_normal_form(const IntMat& m);

// Diagonal entries of the SNF (all of them, including 0 and 1 entries).
std::vector<Int> snf_diagonal(const IntMat& m);

// Basis (as columns) of the integer kernel {x : m*x = 0}.  The returned
// basis spans a saturated sublattice of Z^cols.
IntMat kernel_basis(const IntMat& m);

// Given a rows x k matrix of full column rank whose columns span a
// sublattice, return a basis of its saturation (span_Q intersected with Z^rows).
IntMat saturate_columns(const IntMat& b);

// True when the columns span a saturated (primitive) sublattice.
bool is_primitive_sublattice(const IntMat& b);

// Solve m * x = rhs over the rationals; m square nonsingular.
RVec solve_rational(const IntMat& m, const RVec& rhs);

}  // namespace lattice_forge

#endif
