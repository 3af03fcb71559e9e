#pragma once

#include "heckehom/cyclotomic.hpp"

#include <optional>
#include <string>
#include <vector>

namespace heckehom {

/// Dense matrix over Q(ζ). Rank, nullspace and solving use exact Gaussian
/// elimination with deterministic first-nonzero pivoting, so results are
/// reproducible across runs and thread counts.
class ExactMatrix {
public:
    ExactMatrix() : rows_(0), cols_(0) {}
    ExactMatrix(int rows, int cols) : rows_(rows), cols_(cols), e_(static_cast<std::size_t>(rows) * cols) {}
    ExactMatrix(int rows, int cols, std::vector<Cyclotomic> entries);

    static ExactMatrix identity(int n);
    static ExactMatrix from_rows(const std::vector<std::vector<Cyclotomic>>& rows);
    static ExactMatrix column(const std::vector<Cyclotomic>& v);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    Cyclotomic& at(int i, int j) { return e_[static_cast<std::size_t>(i) * cols_ + j]; }
    const Cyclotomic& at(int i, int j) const { return e_[static_cast<std::size_t>(i) * cols_ + j]; }

    bool is_zero() const;
    ExactMatrix transpose() const;
    ExactMatrix operator-() const;
    friend ExactMatrix operator+(const ExactMatrix& a, const ExactMatrix& b);
    friend ExactMatrix operator-(const ExactMatrix& a, const ExactMatrix& b);
    friend ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b);
    ExactMatrix scaled(const Cyclotomic& c) const;
    friend bool operator==(const ExactMatrix& a, const ExactMatrix& b);
    friend bool operator!=(const ExactMatrix& a, const ExactMatrix& b) { return !(a == b); }
    friend bool operator<(const ExactMatrix& a, const ExactMatrix& b); // deterministic key order

    std::vector<Cyclotomic> apply(const std::vector<Cyclotomic>& v) const;
    ExactMatrix hstack(const ExactMatrix& right) const;
    ExactMatrix submatrix(const std::vector<int>& row_idx, const std::vector<int>& col_idx) const;
    std::vector<Cyclotomic> col(int j) const;

    /// Reduced row echelon form; pivots receives the pivot column indices.
    ExactMatrix rref(std::vector<int>* pivots = nullptr) const;
    int rank() const;
    /// Columns form a basis of {x : Ax = 0}; deterministic (free variables
    /// in ascending column order, pivot entries back-substituted).
    ExactMatrix nullspace() const;
    Cyclotomic determinant() const;
    std::optional<ExactMatrix> inverse() const;
    /// One exact solution of Ax = b, if consistent.
    std::optional<std::vector<Cyclotomic>> solve(const std::vector<Cyclotomic>& b) const;
    /// Exact solve AX = B for a matrix right-hand side.
    std::optional<ExactMatrix> solve_matrix(const ExactMatrix& B) const;

    /// True iff every column of B lies in the column span of *this.
    bool spans(const ExactMatrix& B) const;

    std::string str() const;

private:
    int rows_, cols_;
    std::vector<Cyclotomic> e_;
};

} // namespace heckehom
