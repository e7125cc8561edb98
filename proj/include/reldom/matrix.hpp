#pragma once

#include <cassert>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

#include "reldom/errors.hpp"
#include "reldom/field.hpp"

namespace reldom {

// Dense row-major matrix over an exact field F.
template <class F>
class Matrix {
  public:
    using Elt = typename F::Elt;

    Matrix() = default;
    Matrix(F f, int rows, int cols)
        : f_(std::move(f)), rows_(rows), cols_(cols), e_(static_cast<size_t>(rows) * cols) {
        for (auto& x : e_) x = f_.zero();
    }

    static Matrix identity(const F& f, int n) {
        Matrix m(f, n, n);
        for (int i = 0; i < n; ++i) m.at(i, i) = f.one();
        return m;
    }

    static Matrix from_longs(const F& f, std::initializer_list<std::initializer_list<long>> rows) {
        int r = static_cast<int>(rows.size());
        int c = r ? static_cast<int>(rows.begin()->size()) : 0;
        Matrix m(f, r, c);
        int i = 0;
        for (auto& row : rows) {
            if (static_cast<int>(row.size()) != c) throw input_error("ragged matrix literal");
            int j = 0;
            for (long v : row) m.at(i, j++) = f.from_long(v);
            ++i;
        }
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    const F& field() const { return f_; }

    Elt& at(int i, int j) {
        assert(i >= 0 && i < rows_ && j >= 0 && j < cols_);
        return e_[static_cast<size_t>(i) * cols_ + j];
    }
    const Elt& at(int i, int j) const {
        assert(i >= 0 && i < rows_ && j >= 0 && j < cols_);
        return e_[static_cast<size_t>(i) * cols_ + j];
    }

    bool is_zero() const {
        for (const auto& x : e_)
            if (!f_.is_zero(x)) return false;
        return true;
    }

    bool equals(const Matrix& o) const {
        if (rows_ != o.rows_ || cols_ != o.cols_) return false;
        for (size_t k = 0; k < e_.size(); ++k)
            if (!f_.eq(e_[k], o.e_[k])) return false;
        return true;
    }

    Matrix transpose() const {
        Matrix t(f_, cols_, rows_);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
        return t;
    }

    Matrix mul(const Matrix& b) const {
        if (cols_ != b.rows_) throw input_error("matrix product shape mismatch");
        Matrix r(f_, rows_, b.cols_);
        for (int i = 0; i < rows_; ++i)
            for (int k = 0; k < cols_; ++k) {
                const Elt& a = at(i, k);
                if (f_.is_zero(a)) continue;
                for (int j = 0; j < b.cols_; ++j) {
                    const Elt& x = b.at(k, j);
                    if (f_.is_zero(x)) continue;
                    r.at(i, j) = f_.add(r.at(i, j), f_.mul(a, x));
                }
            }
        return r;
    }

    Matrix add(const Matrix& b) const {
        if (rows_ != b.rows_ || cols_ != b.cols_) throw input_error("matrix sum shape mismatch");
        Matrix r = *this;
        for (size_t k = 0; k < e_.size(); ++k) r.e_[k] = f_.add(r.e_[k], b.e_[k]);
        return r;
    }

    Matrix sub(const Matrix& b) const {
        if (rows_ != b.rows_ || cols_ != b.cols_)
            throw input_error("matrix difference shape mismatch");
        Matrix r = *this;
        for (size_t k = 0; k < e_.size(); ++k) r.e_[k] = f_.sub(r.e_[k], b.e_[k]);
        return r;
    }

    Matrix scale(const Elt& c) const {
        Matrix r = *this;
        for (auto& x : r.e_) x = f_.mul(x, c);
        return r;
    }

    Matrix neg() const {
        Matrix r = *this;
        for (auto& x : r.e_) x = f_.neg(x);
        return r;
    }

    // Stack b below this matrix.
    Matrix vstack(const Matrix& b) const {
        if (cols_ != b.cols_) throw input_error("vstack column mismatch");
        Matrix r(f_, rows_ + b.rows_, cols_);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) r.at(i, j) = at(i, j);
        for (int i = 0; i < b.rows_; ++i)
            for (int j = 0; j < cols_; ++j) r.at(rows_ + i, j) = b.at(i, j);
        return r;
    }

    // Put b to the right of this matrix.
    Matrix hstack(const Matrix& b) const {
        if (rows_ != b.rows_) throw input_error("hstack row mismatch");
        Matrix r(f_, rows_, cols_ + b.cols_);
        for (int i = 0; i < rows_; ++i) {
            for (int j = 0; j < cols_; ++j) r.at(i, j) = at(i, j);
            for (int j = 0; j < b.cols_; ++j) r.at(i, cols_ + j) = b.at(i, j);
        }
        return r;
    }

    Matrix columns(const std::vector<int>& idx) const {
        Matrix r(f_, rows_, static_cast<int>(idx.size()));
        for (int j = 0; j < static_cast<int>(idx.size()); ++j)
            for (int i = 0; i < rows_; ++i) r.at(i, j) = at(i, idx[j]);
        return r;
    }

    Matrix column(int j) const { return columns({j}); }

    std::string str() const {
        std::string s = "[";
        for (int i = 0; i < rows_; ++i) {
            s += "[";
            for (int j = 0; j < cols_; ++j) {
                s += f_.to_string(at(i, j));
                if (j + 1 < cols_) s += ",";
            }
            s += "]";
            if (i + 1 < rows_) s += ",";
        }
        return s + "]";
    }

  private:
    F f_;
    int rows_ = 0;
    int cols_ = 0;
    std::vector<Elt> e_;
};

template <class F>
struct RrefResult {
    Matrix<F> mat;            // reduced row echelon form
    std::vector<int> pivots;  // pivot column per nonzero row, ascending
    int rank = 0;
};

// Reduced row echelon form. Pivot choice is deterministic: scan columns left
// to right, take the topmost unprocessed row with a nonzero entry.
template <class F>
RrefResult<F> rref(Matrix<F> m) {
    const F& f = m.field();
    RrefResult<F> out;
    int row = 0;
    for (int col = 0; col < m.cols() && row < m.rows(); ++col) {
        int piv = -1;
        for (int i = row; i < m.rows(); ++i)
            if (!f.is_zero(m.at(i, col))) {
                piv = i;
                break;
            }
        if (piv < 0) continue;
        if (piv != row)
            for (int j = 0; j < m.cols(); ++j) std::swap(m.at(piv, j), m.at(row, j));
        auto s = f.inv(m.at(row, col));
        for (int j = col; j < m.cols(); ++j) m.at(row, j) = f.mul(m.at(row, j), s);
        for (int i = 0; i < m.rows(); ++i) {
            if (i == row) continue;
            auto c = m.at(i, col);
            if (f.is_zero(c)) continue;
            for (int j = col; j < m.cols(); ++j)
                m.at(i, j) = f.sub(m.at(i, j), f.mul(c, m.at(row, j)));
        }
        out.pivots.push_back(col);
        ++row;
    }
    out.rank = row;
    out.mat = std::move(m);
    return out;
}

template <class F>
int rank(const Matrix<F>& m) {
    return rref(m).rank;
}

// Basis of the null space {x : m x = 0}, one basis vector per column.
// Canonical: free coordinates carry an identity block.
template <class F>
Matrix<F> kernel_basis(const Matrix<F>& m) {
    const F& f = m.field();
    auto r = rref(m);
    std::vector<int> free_cols;
    {
        size_t pi = 0;
        for (int j = 0; j < m.cols(); ++j) {
            if (pi < r.pivots.size() && r.pivots[pi] == j)
                ++pi;
            else
                free_cols.push_back(j);
        }
    }
    Matrix<F> k(f, m.cols(), static_cast<int>(free_cols.size()));
    for (int t = 0; t < static_cast<int>(free_cols.size()); ++t) {
        int fc = free_cols[t];
        k.at(fc, t) = f.one();
        for (int i = 0; i < r.rank; ++i) k.at(r.pivots[i], t) = f.neg(r.mat.at(i, fc));
    }
    return k;
}

// Basis of the column space: the original columns at the pivot positions.
template <class F>
Matrix<F> image_basis(const Matrix<F>& m) {
    auto r = rref(m);
    return m.columns(r.pivots);
}

template <class F>
struct KernelImage {
    Matrix<F> kernel;  // columns span the null space
    Matrix<F> image;   // columns span the column space
};

template <class F>
KernelImage<F> kernel_image(const Matrix<F>& m) {
    return {kernel_basis(m), image_basis(m)};
}

// Solve basis * x = target for every column of target. Returns the
// coefficient matrix, or nullopt when some column lies outside the span.
template <class F>
std::optional<Matrix<F>> solve(const Matrix<F>& basis, const Matrix<F>& target) {
    if (basis.rows() != target.rows())
        throw input_error("solve: dimension mismatch between basis and target");
    const F& f = basis.field();
    auto r = rref(basis.hstack(target));
    for (int p : r.pivots)
        if (p >= basis.cols()) return std::nullopt;
    Matrix<F> x(f, basis.cols(), target.cols());
    for (int i = 0; i < r.rank; ++i)
        for (int j = 0; j < target.cols(); ++j)
            x.at(r.pivots[i], j) = r.mat.at(i, basis.cols() + j);
    return x;
}

// Single-vector convenience form of the membership solve.
template <class F>
std::optional<Matrix<F>> solve_membership(const Matrix<F>& basis, const Matrix<F>& target) {
    if (target.cols() != 1) throw input_error("solve_membership expects a column vector");
    return solve(basis, target);
}

template <class F>
std::optional<Matrix<F>> inverse(const Matrix<F>& m) {
    if (m.rows() != m.cols()) return std::nullopt;
    auto x = solve(m, Matrix<F>::identity(m.field(), m.rows()));
    return x;
}

template <class F>
bool is_invertible(const Matrix<F>& m) {
    return m.rows() == m.cols() && rank(m) == m.rows();
}

// Quotient of coordinate space k^n by the column span of `span`: a projection
// onto the free coordinates and a section picking representatives.
template <class F>
struct CoordQuotient {
    Matrix<F> proj;  // q x n
    Matrix<F> sect;  // n x q
};

template <class F>
CoordQuotient<F> coord_quotient(const Matrix<F>& span) {
    const F& f = span.field();
    int n = span.rows();
    auto rr = rref(span.transpose());
    std::vector<bool> piv(n, false);
    for (int p : rr.pivots) piv[p] = true;
    std::vector<int> freec;
    for (int j = 0; j < n; ++j)
        if (!piv[j]) freec.push_back(j);
    int q = static_cast<int>(freec.size());
    Matrix<F> P(f, q, n), S(f, n, q);
    for (int t = 0; t < q; ++t) {
        P.at(t, freec[t]) = f.one();
        for (int i = 0; i < rr.rank; ++i) {
            const auto& u = rr.mat.at(i, freec[t]);
            if (!f.is_zero(u)) P.at(t, rr.pivots[i]) = f.neg(u);
        }
        S.at(freec[t], t) = f.one();
    }
    return {std::move(P), std::move(S)};
}

// Row-major flattening of a matrix into a single column.
template <class F>
Matrix<F> vec(const Matrix<F>& m) {
    Matrix<F> v(m.field(), m.rows() * m.cols(), 1);
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) v.at(i * m.cols() + j, 0) = m.at(i, j);
    return v;
}

template <class F>
Matrix<F> unvec(const Matrix<F>& v, int rows, int cols, int col = 0) {
    Matrix<F> m(v.field(), rows, cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) m.at(i, j) = v.at(i * cols + j, col);
    return m;
}

}  // namespace reldom
