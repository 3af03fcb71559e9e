#include "heckehom/matrix.hpp"

#include <sstream>

namespace heckehom {

ExactMatrix::ExactMatrix(int rows, int cols, std::vector<Cyclotomic> entries)
    : rows_(rows), cols_(cols), e_(std::move(entries)) {
    if (e_.size() != static_cast<std::size_t>(rows) * cols)
        throw DomainError("matrix entry count mismatch");
}

ExactMatrix ExactMatrix::identity(int n) {
    ExactMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = Cyclotomic(1);
    return m;
}

ExactMatrix ExactMatrix::from_rows(const std::vector<std::vector<Cyclotomic>>& rows) {
    if (rows.empty()) return ExactMatrix();
    ExactMatrix m(static_cast<int>(rows.size()), static_cast<int>(rows[0].size()));
    for (int i = 0; i < m.rows_; ++i) {
        if (rows[i].size() != static_cast<std::size_t>(m.cols_))
            throw DomainError("ragged matrix rows");
        for (int j = 0; j < m.cols_; ++j) m.at(i, j) = rows[i][j];
    }
    return m;
}

ExactMatrix ExactMatrix::column(const std::vector<Cyclotomic>& v) {
    ExactMatrix m(static_cast<int>(v.size()), 1);
    for (std::size_t i = 0; i < v.size(); ++i) m.at(static_cast<int>(i), 0) = v[i];
    return m;
}

bool ExactMatrix::is_zero() const {
    for (const auto& x : e_)
        if (!x.is_zero()) return false;
    return true;
}

ExactMatrix ExactMatrix::transpose() const {
    ExactMatrix m(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) m.at(j, i) = at(i, j);
    return m;
}

ExactMatrix ExactMatrix::operator-() const {
    ExactMatrix m = *this;
    for (auto& x : m.e_) x = -x;
    return m;
}

ExactMatrix operator+(const ExactMatrix& a, const ExactMatrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw DomainError("matrix shape mismatch");
    ExactMatrix m = a;
    for (std::size_t i = 0; i < m.e_.size(); ++i) m.e_[i] += b.e_[i];
    return m;
}

ExactMatrix operator-(const ExactMatrix& a, const ExactMatrix& b) { return a + (-b); }

ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b) {
    if (a.cols_ != b.rows_) throw DomainError("matrix shape mismatch in product");
    ExactMatrix m(a.rows_, b.cols_);
    for (int i = 0; i < a.rows_; ++i)
        for (int k = 0; k < a.cols_; ++k) {
            if (a.at(i, k).is_zero()) continue;
            for (int j = 0; j < b.cols_; ++j) {
                if (b.at(k, j).is_zero()) continue;
                m.at(i, j) += a.at(i, k) * b.at(k, j);
            }
        }
    return m;
}

ExactMatrix ExactMatrix::scaled(const Cyclotomic& c) const {
    ExactMatrix m = *this;
    for (auto& x : m.e_) x *= c;
    return m;
}

bool operator==(const ExactMatrix& a, const ExactMatrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) return false;
    for (std::size_t i = 0; i < a.e_.size(); ++i)
        if (a.e_[i] != b.e_[i]) return false;
    return true;
}

bool operator<(const ExactMatrix& a, const ExactMatrix& b) {
    if (a.rows_ != b.rows_) return a.rows_ < b.rows_;
    if (a.cols_ != b.cols_) return a.cols_ < b.cols_;
    for (std::size_t i = 0; i < a.e_.size(); ++i) {
        if (a.e_[i] != b.e_[i]) return a.e_[i] < b.e_[i];
    }
    return false;
}

std::vector<Cyclotomic> ExactMatrix::apply(const std::vector<Cyclotomic>& v) const {
    if (static_cast<int>(v.size()) != cols_) throw DomainError("matrix/vector shape mismatch");
    std::vector<Cyclotomic> out(rows_, Cyclotomic(0));
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j)
            if (!at(i, j).is_zero() && !v[j].is_zero()) out[i] += at(i, j) * v[j];
    return out;
}

ExactMatrix ExactMatrix::hstack(const ExactMatrix& right) const {
    if (rows_ != right.rows_) throw DomainError("hstack row mismatch");
    ExactMatrix m(rows_, cols_ + right.cols_);
    for (int i = 0; i < rows_; ++i) {
        for (int j = 0; j < cols_; ++j) m.at(i, j) = at(i, j);
        for (int j = 0; j < right.cols_; ++j) m.at(i, cols_ + j) = right.at(i, j);
    }
    return m;
}

ExactMatrix ExactMatrix::submatrix(const std::vector<int>& row_idx,
                                   const std::vector<int>& col_idx) const {
    ExactMatrix m(static_cast<int>(row_idx.size()), static_cast<int>(col_idx.size()));
    for (std::size_t i = 0; i < row_idx.size(); ++i)
        for (std::size_t j = 0; j < col_idx.size(); ++j)
            m.at(static_cast<int>(i), static_cast<int>(j)) = at(row_idx[i], col_idx[j]);
    return m;
}

std::vector<Cyclotomic> ExactMatrix::col(int j) const {
    std::vector<Cyclotomic> v(rows_);
    for (int i = 0; i < rows_; ++i) v[i] = at(i, j);
    return v;
}

ExactMatrix ExactMatrix::rref(std::vector<int>* pivots) const {
    ExactMatrix m = *this;
    if (pivots) pivots->clear();
    int r = 0;
    for (int c = 0; c < cols_ && r < rows_; ++c) {
        int pivot = -1;
        for (int i = r; i < rows_; ++i)
            if (!m.at(i, c).is_zero()) { pivot = i; break; } // first nonzero
        if (pivot < 0) continue;
        if (pivot != r)
            for (int j = 0; j < cols_; ++j) std::swap(m.at(pivot, j), m.at(r, j));
        Cyclotomic inv = m.at(r, c).inverse();
        for (int j = c; j < cols_; ++j) m.at(r, j) *= inv;
        for (int i = 0; i < rows_; ++i) {
            if (i == r || m.at(i, c).is_zero()) continue;
            Cyclotomic f = m.at(i, c);
            for (int j = c; j < cols_; ++j) m.at(i, j) -= f * m.at(r, j);
        }
        if (pivots) pivots->push_back(c);
        ++r;
    }
    return m;
}

int ExactMatrix::rank() const {
    std::vector<int> pivots;
    rref(&pivots);
    return static_cast<int>(pivots.size());
}

ExactMatrix ExactMatrix::nullspace() const {
    std::vector<int> pivots;
    ExactMatrix r = rref(&pivots);
    std::vector<bool> is_pivot(cols_, false);
    for (int c : pivots) is_pivot[c] = true;
    std::vector<int> free_cols;
    for (int c = 0; c < cols_; ++c)
        if (!is_pivot[c]) free_cols.push_back(c);
    ExactMatrix basis(cols_, static_cast<int>(free_cols.size()));
    for (std::size_t k = 0; k < free_cols.size(); ++k) {
        int fc = free_cols[k];
        basis.at(fc, static_cast<int>(k)) = Cyclotomic(1);
        for (std::size_t p = 0; p < pivots.size(); ++p)
            basis.at(pivots[p], static_cast<int>(k)) = -r.at(static_cast<int>(p), fc);
    }
    return basis;
}

Cyclotomic ExactMatrix::determinant() const {
    if (rows_ != cols_) throw DomainError("determinant of non-square matrix");
    ExactMatrix m = *this;
    Cyclotomic det(1);
    for (int c = 0; c < cols_; ++c) {
        int pivot = -1;
        for (int i = c; i < rows_; ++i)
            if (!m.at(i, c).is_zero()) { pivot = i; break; }
        if (pivot < 0) return Cyclotomic(0);
        if (pivot != c) {
            for (int j = 0; j < cols_; ++j) std::swap(m.at(pivot, j), m.at(c, j));
            det = -det;
        }
        det *= m.at(c, c);
        Cyclotomic inv = m.at(c, c).inverse();
        for (int i = c + 1; i < rows_; ++i) {
            if (m.at(i, c).is_zero()) continue;
            Cyclotomic f = m.at(i, c) * inv;
            for (int j = c; j < cols_; ++j) m.at(i, j) -= f * m.at(c, j);
        }
    }
    return det;
}

std::optional<ExactMatrix> ExactMatrix::inverse() const {
    if (rows_ != cols_) return std::nullopt;
    std::vector<int> pivots;
    ExactMatrix aug = hstack(identity(rows_)).rref(&pivots);
    if (static_cast<int>(pivots.size()) != rows_) return std::nullopt;
    ExactMatrix inv(rows_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < rows_; ++j) inv.at(i, j) = aug.at(i, cols_ + j);
    return inv;
}

std::optional<std::vector<Cyclotomic>> ExactMatrix::solve(const std::vector<Cyclotomic>& b) const {
    auto X = solve_matrix(column(b));
    if (!X) return std::nullopt;
    return X->col(0);
}

std::optional<ExactMatrix> ExactMatrix::solve_matrix(const ExactMatrix& B) const {
    if (B.rows_ != rows_) throw DomainError("solve: rhs row mismatch");
    std::vector<int> pivots;
    ExactMatrix aug = hstack(B).rref(&pivots);
    // Consistency: no pivot may fall in the rhs block.
    for (int c : pivots)
        if (c >= cols_) return std::nullopt;
    ExactMatrix X(cols_, B.cols_);
    for (std::size_t p = 0; p < pivots.size(); ++p)
        for (int j = 0; j < B.cols_; ++j)
            X.at(pivots[p], j) = aug.at(static_cast<int>(p), cols_ + j);
    // Rows of the rref beyond the pivot count must have zero rhs.
    for (int i = static_cast<int>(pivots.size()); i < rows_; ++i)
        for (int j = 0; j < B.cols_; ++j)
            if (!aug.at(i, cols_ + j).is_zero()) return std::nullopt;
    return X;
}

bool ExactMatrix::spans(const ExactMatrix& B) const {
    return solve_matrix(B).has_value();
}

std::string ExactMatrix::str() const {
    std::ostringstream os;
    for (int i = 0; i < rows_; ++i) {
        os << "[";
        for (int j = 0; j < cols_; ++j) {
            if (j) os << ", ";
            os << at(i, j).str();
        }
        os << "]";
        if (i + 1 < rows_) os << "\n";
    }
    return os.str();
}

} // namespace heckehom
