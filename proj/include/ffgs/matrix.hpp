#pragma once

// Dense exact matrices over a Ring.
//
// Convention used throughout the library: linear maps act on ROW vectors,
// f(v) = v * M, so a map from a rank-a module to a rank-b module is an a x b
// matrix and composition g o f corresponds to the product M_f * M_g.
// Tensor legs flatten row-major: basis vector e_i (x) e_j of V (x) W sits at
// index i*dim(W) + j, and kron(A, B) is the matrix of the map f (x) g.

#include "ffgs/ring.hpp"

#include <algorithm>
#include <cstddef>
#include <sstream>
#include <vector>

namespace ffgs {

class Mat {
public:
    Mat() : ring_(Ring::QQ()), rows_(0), cols_(0) {}

    Mat(Ring ring, int rows, int cols)
        : ring_(ring), rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols, Rat(0))
    {
        if (rows < 0 || cols < 0)
            throw std::invalid_argument("negative matrix dimension");
    }

    static Mat identity(Ring ring, int n)
    {
        Mat m(ring, n, n);
        for (int i = 0; i < n; ++i)
            m.at(i, i) = 1;
        return m;
    }

    static Mat from_rows(Ring ring, const std::vector<std::vector<Rat>>& rows)
    {
        int r = static_cast<int>(rows.size());
        int c = r == 0 ? 0 : static_cast<int>(rows[0].size());
        Mat m(ring, r, c);
        for (int i = 0; i < r; ++i) {
            if (static_cast<int>(rows[i].size()) != c)
                throw std::invalid_argument("ragged rows");
            for (int j = 0; j < c; ++j)
                m.at(i, j) = ring.normalize(rows[i][j]);
        }
        return m;
    }

    // Single row / single column helpers.
    static Mat row_vector(Ring ring, const std::vector<Rat>& v)
    {
        return from_rows(ring, {v});
    }
    static Mat col_vector(Ring ring, const std::vector<Rat>& v)
    {
        Mat m(ring, static_cast<int>(v.size()), 1);
        for (size_t i = 0; i < v.size(); ++i)
            m.at(static_cast<int>(i), 0) = ring.normalize(v[i]);
        return m;
    }

    const Ring& ring() const { return ring_; }
    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Rat& at(int i, int j) { return a_[static_cast<size_t>(i) * cols_ + j]; }
    const Rat& at(int i, int j) const { return a_[static_cast<size_t>(i) * cols_ + j]; }

    bool operator==(const Mat& o) const
    {
        return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
    }
    bool operator!=(const Mat& o) const { return !(*this == o); }

    bool is_zero() const
    {
        return std::all_of(a_.begin(), a_.end(), [](const Rat& x) { return x == 0; });
    }

    Mat transpose() const
    {
        Mat t(ring_, cols_, rows_);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j)
                t.at(j, i) = at(i, j);
        return t;
    }

    Mat operator+(const Mat& o) const
    {
        require_same_shape(o);
        Mat r(ring_, rows_, cols_);
        for (size_t k = 0; k < a_.size(); ++k)
            r.a_[k] = ring_.add(a_[k], o.a_[k]);
        return r;
    }

    Mat operator-(const Mat& o) const
    {
        require_same_shape(o);
        Mat r(ring_, rows_, cols_);
        for (size_t k = 0; k < a_.size(); ++k)
            r.a_[k] = ring_.sub(a_[k], o.a_[k]);
        return r;
    }

    Mat operator*(const Mat& o) const
    {
        if (cols_ != o.rows_)
            throw std::invalid_argument("matrix product shape mismatch");
        Mat r(ring_, rows_, o.cols_);
        for (int i = 0; i < rows_; ++i)
            for (int k = 0; k < cols_; ++k) {
                const Rat& x = at(i, k);
                if (x == 0)
                    continue;
                for (int j = 0; j < o.cols_; ++j) {
                    const Rat& y = o.at(k, j);
                    if (y == 0)
                        continue;
                    r.at(i, j) = ring_.add(r.at(i, j), ring_.mul(x, y));
                }
            }
        return r;
    }

    Mat scaled(const Rat& c) const
    {
        Mat r(ring_, rows_, cols_);
        for (size_t k = 0; k < a_.size(); ++k)
            r.a_[k] = ring_.mul(a_[k], c);
        return r;
    }

    // Kronecker product: the matrix of f (x) g under row-major leg flattening.
    Mat kron(const Mat& o) const
    {
        Mat r(ring_, rows_ * o.rows_, cols_ * o.cols_);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) {
                const Rat& x = at(i, j);
                if (x == 0)
                    continue;
                for (int k = 0; k < o.rows_; ++k)
                    for (int l = 0; l < o.cols_; ++l) {
                        const Rat& y = o.at(k, l);
                        if (y == 0)
                            continue;
                        r.at(i * o.rows_ + k, j * o.cols_ + l) = ring_.mul(x, y);
                    }
            }
        return r;
    }

    Mat row(int i) const
    {
        Mat r(ring_, 1, cols_);
        for (int j = 0; j < cols_; ++j)
            r.at(0, j) = at(i, j);
        return r;
    }

    std::vector<Rat> row_vec(int i) const
    {
        std::vector<Rat> v(cols_);
        for (int j = 0; j < cols_; ++j)
            v[j] = at(i, j);
        return v;
    }

    void set_row(int i, const Mat& r)
    {
        for (int j = 0; j < cols_; ++j)
            at(i, j) = r.at(0, j);
    }

    Mat take_rows(const std::vector<int>& idx) const
    {
        Mat r(ring_, static_cast<int>(idx.size()), cols_);
        for (size_t i = 0; i < idx.size(); ++i)
            for (int j = 0; j < cols_; ++j)
                r.at(static_cast<int>(i), j) = at(idx[i], j);
        return r;
    }

    Mat take_cols(const std::vector<int>& idx) const
    {
        Mat r(ring_, rows_, static_cast<int>(idx.size()));
        for (int i = 0; i < rows_; ++i)
            for (size_t j = 0; j < idx.size(); ++j)
                r.at(i, static_cast<int>(j)) = at(i, idx[j]);
        return r;
    }

    static Mat vstack(const Mat& top, const Mat& bottom)
    {
        if (top.cols_ != bottom.cols_)
            throw std::invalid_argument("vstack width mismatch");
        Mat r(top.ring_, top.rows_ + bottom.rows_, top.cols_);
        for (int i = 0; i < top.rows_; ++i)
            for (int j = 0; j < top.cols_; ++j)
                r.at(i, j) = top.at(i, j);
        for (int i = 0; i < bottom.rows_; ++i)
            for (int j = 0; j < top.cols_; ++j)
                r.at(top.rows_ + i, j) = bottom.at(i, j);
        return r;
    }

    static Mat hstack(const Mat& left, const Mat& right)
    {
        if (left.rows_ != right.rows_)
            throw std::invalid_argument("hstack height mismatch");
        Mat r(left.ring_, left.rows_, left.cols_ + right.cols_);
        for (int i = 0; i < left.rows_; ++i) {
            for (int j = 0; j < left.cols_; ++j)
                r.at(i, j) = left.at(i, j);
            for (int j = 0; j < right.cols_; ++j)
                r.at(i, left.cols_ + j) = right.at(i, j);
        }
        return r;
    }

    // Reinterpret over another ring (base change / fraction field views).
    Mat with_ring(Ring other) const
    {
        Mat r(other, rows_, cols_);
        for (size_t k = 0; k < a_.size(); ++k)
            r.a_[k] = other.normalize(a_[k]);
        return r;
    }

    // Permutation matrix of the leg swap V (x) W -> W (x) V.
    static Mat leg_swap(Ring ring, int dim_v, int dim_w)
    {
        Mat m(ring, dim_v * dim_w, dim_w * dim_v);
        for (int i = 0; i < dim_v; ++i)
            for (int j = 0; j < dim_w; ++j)
                m.at(i * dim_w + j, j * dim_v + i) = 1;
        return m;
    }

    std::string to_string() const
    {
        std::ostringstream os;
        os << "[";
        for (int i = 0; i < rows_; ++i) {
            os << (i ? ", [" : "[");
            for (int j = 0; j < cols_; ++j)
                os << (j ? "," : "") << rat_to_string(at(i, j));
            os << "]";
        }
        os << "]";
        return os.str();
    }

private:
    void require_same_shape(const Mat& o) const
    {
        if (rows_ != o.rows_ || cols_ != o.cols_)
            throw std::invalid_argument("matrix shape mismatch");
    }

    Ring ring_;
    int rows_, cols_;
    std::vector<Rat> a_;
};

// Exact determinant by Bareiss fraction-free elimination (valid over any
// integral domain; entries may be rationals).
inline Rat det(const Mat& m)
{
    if (m.rows() != m.cols())
        throw std::invalid_argument("det: matrix not square");
    int n = m.rows();
    if (n == 0)
        return Rat(1);
    const Ring& ring = m.ring();
    Mat w = m;
    Rat sign(1), prev(1);
    for (int k = 0; k + 1 < n; ++k) {
        if (w.at(k, k) == 0) {
            int piv = -1;
            for (int i = k + 1; i < n; ++i)
                if (w.at(i, k) != 0) {
                    piv = i;
                    break;
                }
            if (piv < 0)
                return Rat(0);
            for (int j = 0; j < n; ++j)
                std::swap(w.at(k, j), w.at(piv, j));
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j) {
                Rat num = ring.sub(ring.mul(w.at(i, j), w.at(k, k)),
                                   ring.mul(w.at(i, k), w.at(k, j)));
                w.at(i, j) = ring.div(num, prev);
            }
        prev = w.at(k, k);
    }
    return ring.mul(sign, w.at(n - 1, n - 1));
}

}  // namespace ffgs
