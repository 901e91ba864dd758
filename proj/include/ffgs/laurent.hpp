#pragma once

// Laurent polynomials R[u, u^-1] and matrices over them.
//
// Torsor total algebras live over one of two affine bases: the point
// (B = R) and the split torus line (B = R[u, u^-1]).  Both are handled with
// the same code by storing every torsor-side tensor entry as a Pol; point
// bases simply keep all entries concentrated in degree zero.
//
// Linear algebra over B is done through bounded-degree windows: a window
// [lo, hi] turns a free B-module of rank n into the free R-module of rank
// n * (hi - lo + 1) spanned by e_i * u^k, and a Pol matrix into the scalar
// matrix acting on those coefficients.  Kernels found inside a window are
// certified afterwards by rank checks (see torsor.hpp).

#include "ffgs/lattice.hpp"

#include <optional>
#include <vector>

namespace ffgs {

class Pol {
public:
    Pol() : off_(0) {}
    explicit Pol(const Rat& c) : off_(0)
    {
        if (c != 0)
            c_.push_back(c);
    }
    Pol(int off, std::vector<Rat> coeffs) : off_(off), c_(std::move(coeffs)) { trim(); }

    static Pol u_power(int k, const Rat& c = Rat(1)) { return Pol(k, {c}); }

    bool is_zero() const { return c_.empty(); }
    bool is_constant() const { return c_.empty() || (off_ == 0 && c_.size() == 1); }
    Rat constant_value() const
    {
        if (is_zero())
            return Rat(0);
        if (!is_constant())
            throw std::logic_error("Pol: not a constant");
        return c_[0];
    }

    int min_exp() const { return is_zero() ? 0 : off_; }
    int max_exp() const { return is_zero() ? 0 : off_ + static_cast<int>(c_.size()) - 1; }

    Rat coeff(int k) const
    {
        if (is_zero() || k < off_ || k > max_exp())
            return Rat(0);
        return c_[static_cast<size_t>(k - off_)];
    }

    Pol shifted(int k) const
    {
        if (is_zero())
            return *this;
        return Pol(off_ + k, c_);
    }

    friend Pol operator+(const Pol& a, const Pol& b)
    {
        if (a.is_zero())
            return b;
        if (b.is_zero())
            return a;
        int lo = std::min(a.off_, b.off_);
        int hi = std::max(a.max_exp(), b.max_exp());
        std::vector<Rat> c(static_cast<size_t>(hi - lo + 1), Rat(0));
        for (int k = lo; k <= hi; ++k)
            c[static_cast<size_t>(k - lo)] = a.coeff(k) + b.coeff(k);
        return Pol(lo, std::move(c));
    }

    friend Pol operator-(const Pol& a, const Pol& b) { return a + b.scaled(Rat(-1)); }

    friend Pol operator*(const Pol& a, const Pol& b)
    {
        if (a.is_zero() || b.is_zero())
            return Pol();
        std::vector<Rat> c(a.c_.size() + b.c_.size() - 1, Rat(0));
        for (size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i] == 0)
                continue;
            for (size_t j = 0; j < b.c_.size(); ++j)
                c[i + j] += a.c_[i] * b.c_[j];
        }
        return Pol(a.off_ + b.off_, std::move(c));
    }

    Pol scaled(const Rat& s) const
    {
        if (s == 0)
            return Pol();
        std::vector<Rat> c = c_;
        for (auto& x : c)
            x *= s;
        return Pol(off_, std::move(c));
    }

    bool operator==(const Pol& o) const { return off_ == o.off_ && c_ == o.c_; }
    bool operator!=(const Pol& o) const { return !(*this == o); }

    // Substitute u = value (used for evaluating at the base section u = 1).
    Rat eval(const Rat& value) const
    {
        Rat acc(0);
        for (int k = min_exp(); k <= max_exp(); ++k) {
            Rat term = coeff(k);
            if (term == 0)
                continue;
            Rat p(1);
            int e = k >= 0 ? k : -k;
            for (int i = 0; i < e; ++i)
                p *= value;
            acc += k >= 0 ? term * p : term / p;
        }
        return acc;
    }

    // Exact division in R[u, u^-1]; nullopt if the division is not exact
    // over the fraction field of coefficients.
    std::optional<Pol> divided_exact(const Pol& d) const
    {
        if (d.is_zero())
            return is_zero() ? std::optional<Pol>(Pol()) : std::nullopt;
        if (is_zero())
            return Pol();
        // ordinary polynomial long division after shifting to degree 0
        std::vector<Rat> num = c_, den = d.c_;
        int qn = static_cast<int>(num.size()) - static_cast<int>(den.size());
        if (qn < 0)
            return std::nullopt;
        std::vector<Rat> q(static_cast<size_t>(qn) + 1, Rat(0));
        for (int i = qn; i >= 0; --i) {
            Rat lead = num[static_cast<size_t>(i) + den.size() - 1];
            Rat f = lead / den.back();
            q[static_cast<size_t>(i)] = f;
            if (f == 0)
                continue;
            for (size_t j = 0; j < den.size(); ++j)
                num[static_cast<size_t>(i) + j] -= f * den[j];
        }
        for (const Rat& x : num)
            if (x != 0)
                return std::nullopt;
        return Pol(off_ - d.off_, std::move(q));
    }

    Pol normalized(const Ring& ring) const
    {
        std::vector<Rat> c = c_;
        for (auto& x : c)
            x = ring.normalize(x);
        return Pol(off_, std::move(c));
    }

    // Units of R[u, u^-1] are single terms with a unit coefficient.
    bool is_unit(const Ring& ring) const
    {
        return !is_zero() && c_.size() == 1 && ring.is_unit(c_[0]);
    }

    bool coefficients_in(const Ring& ring) const
    {
        for (const Rat& x : c_)
            if (!ring.contains(x))
                return false;
        return true;
    }

    std::string to_string() const
    {
        if (is_zero())
            return "0";
        std::string s;
        for (int k = min_exp(); k <= max_exp(); ++k) {
            Rat c = coeff(k);
            if (c == 0)
                continue;
            if (!s.empty())
                s += " + ";
            s += rat_to_string(c);
            if (k != 0)
                s += "*u^" + std::to_string(k);
        }
        return s;
    }

private:
    void trim()
    {
        size_t lead = 0;
        while (lead < c_.size() && c_[lead] == 0)
            ++lead;
        size_t tail = c_.size();
        while (tail > lead && c_[tail - 1] == 0)
            --tail;
        if (lead > 0 || tail < c_.size()) {
            std::vector<Rat> t(c_.begin() + static_cast<long>(lead),
                               c_.begin() + static_cast<long>(tail));
            off_ += static_cast<int>(lead);
            c_ = std::move(t);
        }
        if (c_.empty())
            off_ = 0;
    }

    int off_;
    std::vector<Rat> c_;
};

class PolMat {
public:
    PolMat() : rows_(0), cols_(0) {}
    PolMat(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols) {}

    static PolMat identity(int n)
    {
        PolMat m(n, n);
        for (int i = 0; i < n; ++i)
            m.at(i, i) = Pol(Rat(1));
        return m;
    }

    static PolMat from_scalar(const Mat& m)
    {
        PolMat r(m.rows(), m.cols());
        for (int i = 0; i < m.rows(); ++i)
            for (int j = 0; j < m.cols(); ++j)
                r.at(i, j) = Pol(m.at(i, j));
        return r;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    Pol& at(int i, int j) { return a_[static_cast<size_t>(i) * cols_ + j]; }
    const Pol& at(int i, int j) const { return a_[static_cast<size_t>(i) * cols_ + j]; }

    bool operator==(const PolMat& o) const
    {
        return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
    }
    bool operator!=(const PolMat& o) const { return !(*this == o); }

    bool is_zero() const
    {
        return std::all_of(a_.begin(), a_.end(), [](const Pol& p) { return p.is_zero(); });
    }

    bool is_constant() const
    {
        return std::all_of(a_.begin(), a_.end(), [](const Pol& p) { return p.is_constant(); });
    }

    Mat constant_part(Ring ring) const
    {
        Mat m(ring, rows_, cols_);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j)
                m.at(i, j) = ring.normalize(at(i, j).constant_value());
        return m;
    }

    Mat eval(Ring ring, const Rat& value) const
    {
        Mat m(ring, rows_, cols_);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j)
                m.at(i, j) = ring.normalize(at(i, j).eval(value));
        return m;
    }

    PolMat operator*(const PolMat& o) const
    {
        if (cols_ != o.rows_)
            throw std::invalid_argument("PolMat product shape mismatch");
        PolMat r(rows_, o.cols_);
        for (int i = 0; i < rows_; ++i)
            for (int k = 0; k < cols_; ++k) {
                const Pol& x = at(i, k);
                if (x.is_zero())
                    continue;
                for (int j = 0; j < o.cols_; ++j) {
                    const Pol& y = o.at(k, j);
                    if (y.is_zero())
                        continue;
                    r.at(i, j) = r.at(i, j) + x * y;
                }
            }
        return r;
    }

    PolMat operator+(const PolMat& o) const
    {
        PolMat r(rows_, cols_);
        for (size_t k = 0; k < a_.size(); ++k)
            r.a_[k] = a_[k] + o.a_[k];
        return r;
    }

    PolMat operator-(const PolMat& o) const
    {
        PolMat r(rows_, cols_);
        for (size_t k = 0; k < a_.size(); ++k)
            r.a_[k] = a_[k] - o.a_[k];
        return r;
    }

    PolMat kron(const PolMat& o) const
    {
        PolMat r(rows_ * o.rows_, cols_ * o.cols_);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) {
                const Pol& x = at(i, j);
                if (x.is_zero())
                    continue;
                for (int k = 0; k < o.rows_; ++k)
                    for (int l = 0; l < o.cols_; ++l) {
                        const Pol& y = o.at(k, l);
                        if (y.is_zero())
                            continue;
                        r.at(i * o.rows_ + k, j * o.cols_ + l) = x * y;
                    }
            }
        return r;
    }

    PolMat transpose() const
    {
        PolMat t(cols_, rows_);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j)
                t.at(j, i) = at(i, j);
        return t;
    }

    PolMat take_rows(const std::vector<int>& idx) const
    {
        PolMat r(static_cast<int>(idx.size()), cols_);
        for (size_t i = 0; i < idx.size(); ++i)
            for (int j = 0; j < cols_; ++j)
                r.at(static_cast<int>(i), j) = at(idx[i], j);
        return r;
    }

    static PolMat vstack(const PolMat& top, const PolMat& bottom)
    {
        if (top.cols_ != bottom.cols_)
            throw std::invalid_argument("PolMat vstack width mismatch");
        PolMat r(top.rows_ + bottom.rows_, top.cols_);
        for (int i = 0; i < top.rows_; ++i)
            for (int j = 0; j < top.cols_; ++j)
                r.at(i, j) = top.at(i, j);
        for (int i = 0; i < bottom.rows_; ++i)
            for (int j = 0; j < top.cols_; ++j)
                r.at(top.rows_ + i, j) = bottom.at(i, j);
        return r;
    }

    int min_exp() const
    {
        int e = 0;
        for (const Pol& p : a_)
            if (!p.is_zero())
                e = std::min(e, p.min_exp());
        return e;
    }

    int max_exp() const
    {
        int e = 0;
        for (const Pol& p : a_)
            if (!p.is_zero())
                e = std::max(e, p.max_exp());
        return e;
    }

    PolMat normalized(const Ring& ring) const
    {
        PolMat r(rows_, cols_);
        for (size_t k = 0; k < a_.size(); ++k)
            r.a_[k] = a_[k].normalized(ring);
        return r;
    }

    bool coefficients_in(const Ring& ring) const
    {
        return std::all_of(a_.begin(), a_.end(),
                           [&](const Pol& p) { return p.coefficients_in(ring); });
    }

private:
    int rows_, cols_;
    std::vector<Pol> a_;
};

// Exact determinant over R[u, u^-1] (Bareiss; divisions stay exact in the
// polynomial ring).
inline Pol pol_det(const PolMat& m)
{
    if (m.rows() != m.cols())
        throw std::invalid_argument("pol_det: not square");
    int n = m.rows();
    if (n == 0)
        return Pol(Rat(1));
    PolMat w = m;
    int sign = 1;
    Pol prev(Rat(1));
    for (int k = 0; k + 1 < n; ++k) {
        if (w.at(k, k).is_zero()) {
            int piv = -1;
            for (int i = k + 1; i < n; ++i)
                if (!w.at(i, k).is_zero()) {
                    piv = i;
                    break;
                }
            if (piv < 0)
                return Pol();
            for (int j = 0; j < n; ++j)
                std::swap(w.at(k, j), w.at(piv, j));
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j) {
                Pol num = w.at(i, j) * w.at(k, k) - w.at(i, k) * w.at(k, j);
                auto q = num.divided_exact(prev);
                if (!q)
                    throw std::logic_error("pol_det: inexact Bareiss division");
                w.at(i, j) = *q;
            }
        prev = w.at(k, k);
    }
    Pol r = w.at(n - 1, n - 1);
    return sign > 0 ? r : r.scaled(Rat(-1));
}

// Coefficient window [lo, hi]: flattening of vectors over B with entries
// supported in the window.  Element i * u^k sits at i * width + (k - lo).
struct Window {
    int lo = 0;
    int hi = 0;
    int width() const { return hi - lo + 1; }
};

// Scalar matrix of the map (coefficients in `domain` window) -> (coefficients
// in the induced image window) given by v -> v * m.
struct WindowedMap {
    Window domain;
    Window image;
    Mat scalar;  // (rows * domain.width()) x (cols * image.width())
};

inline WindowedMap window_map(const PolMat& m, Ring ring, Window domain)
{
    Window image{domain.lo + std::min(0, m.min_exp()), domain.hi + std::max(0, m.max_exp())};
    int wd = domain.width(), wi = image.width();
    Mat s(ring, m.rows() * wd, m.cols() * wi);
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) {
            const Pol& p = m.at(i, j);
            if (p.is_zero())
                continue;
            for (int k = domain.lo; k <= domain.hi; ++k)
                for (int e = p.min_exp(); e <= p.max_exp(); ++e) {
                    Rat c = p.coeff(e);
                    if (c == 0)
                        continue;
                    int l = k + e;
                    s.at(i * wd + (k - domain.lo), j * wi + (l - image.lo)) =
                        ring.normalize(c);
                }
        }
    return WindowedMap{domain, image, std::move(s)};
}

// Rebuild Pol rows from flattened window coordinates.
inline PolMat unflatten(const Mat& flat, int module_rank, Window w)
{
    int width = w.width();
    if (flat.cols() != module_rank * width)
        throw std::invalid_argument("unflatten: width mismatch");
    PolMat r(flat.rows(), module_rank);
    for (int i = 0; i < flat.rows(); ++i)
        for (int j = 0; j < module_rank; ++j) {
            std::vector<Rat> coeffs(static_cast<size_t>(width));
            for (int k = 0; k < width; ++k)
                coeffs[static_cast<size_t>(k)] = flat.at(i, j * width + k);
            r.at(i, j) = Pol(w.lo, std::move(coeffs));
        }
    return r;
}

inline Mat flatten_rows(const PolMat& m, Ring ring, Window w)
{
    int width = w.width();
    Mat flat(ring, m.rows(), m.cols() * width);
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) {
            const Pol& p = m.at(i, j);
            for (int e = p.min_exp(); e <= p.max_exp(); ++e) {
                if (p.coeff(e) == 0)
                    continue;
                if (e < w.lo || e > w.hi)
                    throw std::invalid_argument("flatten_rows: entry outside window");
                flat.at(i, j * width + (e - w.lo)) = ring.normalize(p.coeff(e));
            }
        }
    return flat;
}

// Rank of a Pol matrix over the fraction field K(u) by fraction-free
// elimination.
inline int pol_rank(const PolMat& m)
{
    PolMat w = m;
    int rank = 0;
    for (int col = 0; col < w.cols() && rank < w.rows(); ++col) {
        int piv = -1;
        for (int i = rank; i < w.rows(); ++i)
            if (!w.at(i, col).is_zero()) {
                piv = i;
                break;
            }
        if (piv < 0)
            continue;
        if (piv != rank)
            for (int j = 0; j < w.cols(); ++j)
                std::swap(w.at(rank, j), w.at(piv, j));
        for (int i = rank + 1; i < w.rows(); ++i) {
            if (w.at(i, col).is_zero())
                continue;
            Pol a = w.at(rank, col), b = w.at(i, col);
            for (int j = 0; j < w.cols(); ++j)
                w.at(i, j) = w.at(i, j) * a - w.at(rank, j) * b;
        }
        ++rank;
    }
    return rank;
}

}  // namespace ffgs
