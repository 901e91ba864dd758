#pragma once

// Echelon forms and submodules of free modules over the supported PIDs.
//
// hnf() produces the row-style Hermite normal form: pivots are canonical
// associates (positive integers over ZZ, powers of p over ZZ_(p), 1 over a
// field), entries above each pivot are canonical residues modulo the pivot,
// and zero rows sink to the bottom.  This makes the generator matrix of a
// Submodule a canonical form, so submodule equality is plain comparison.

#include "ffgs/matrix.hpp"

#include <optional>
#include <tuple>
#include <vector>

namespace ffgs {

struct HnfResult {
    Mat h;  // Hermite normal form, same shape as the input
    Mat u;  // unimodular transform with u * m = h
    std::vector<int> pivot_cols;  // pivot column of each nonzero row
};

namespace detail {

// Entries fed to HNF over a PID must lie in the ring.
inline void require_entries_in_ring(const Mat& m)
{
    const Ring& ring = m.ring();
    if (ring.is_field())
        return;
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j)
            if (!ring.contains(m.at(i, j)))
                throw std::invalid_argument("matrix entry outside base ring: " +
                                            rat_to_string(m.at(i, j)) + " over " +
                                            ring.to_string());
}

}  // namespace detail

inline HnfResult hnf(const Mat& m)
{
    detail::require_entries_in_ring(m);
    const Ring& ring = m.ring();
    Mat h = m;
    Mat u = Mat::identity(ring, m.rows());
    int rank = 0;
    std::vector<int> pivots;

    auto combine_rows = [&](Mat& w, int r1, int r2, const Rat& a, const Rat& b,
                            const Rat& c, const Rat& d) {
        // (row r1, row r2) <- (a*r1 + b*r2, c*r1 + d*r2)
        for (int j = 0; j < w.cols(); ++j) {
            Rat x = w.at(r1, j), y = w.at(r2, j);
            w.at(r1, j) = ring.add(ring.mul(a, x), ring.mul(b, y));
            w.at(r2, j) = ring.add(ring.mul(c, x), ring.mul(d, y));
        }
    };

    for (int col = 0; col < m.cols() && rank < m.rows(); ++col) {
        int piv = -1;
        for (int i = rank; i < m.rows(); ++i)
            if (h.at(i, col) != 0) {
                piv = i;
                break;
            }
        if (piv < 0)
            continue;
        if (piv != rank) {
            for (int j = 0; j < h.cols(); ++j)
                std::swap(h.at(rank, j), h.at(piv, j));
            for (int j = 0; j < u.cols(); ++j)
                std::swap(u.at(rank, j), u.at(piv, j));
        }
        // clear below the pivot; plain subtraction when the pivot divides the
        // entry (keeps the pivot row fixed), Bezout rotation otherwise
        for (int i = rank + 1; i < m.rows(); ++i) {
            if (h.at(i, col) == 0)
                continue;
            Rat a = h.at(rank, col), b = h.at(i, col);
            if (auto q = ring.divide_exact(b, a)) {
                combine_rows(h, rank, i, Rat(1), Rat(0), ring.neg(*q), Rat(1));
                combine_rows(u, rank, i, Rat(1), Rat(0), ring.neg(*q), Rat(1));
                continue;
            }
            Rat g, s, t;
            ring.xgcd(a, b, g, s, t);
            // [s t; -b/g a/g] is unimodular with determinant 1
            Rat bg = ring.div(b, g), ag = ring.div(a, g);
            combine_rows(h, rank, i, s, t, ring.neg(bg), ag);
            combine_rows(u, rank, i, s, t, ring.neg(bg), ag);
        }
        // normalize the pivot to its canonical associate
        {
            Rat piv_val = h.at(rank, col);
            Rat assoc = ring.canonical_associate(piv_val);
            if (assoc != piv_val) {
                Rat unit = ring.div(assoc, piv_val);
                for (int j = 0; j < h.cols(); ++j)
                    h.at(rank, j) = ring.mul(h.at(rank, j), unit);
                for (int j = 0; j < u.cols(); ++j)
                    u.at(rank, j) = ring.mul(u.at(rank, j), unit);
            }
        }
        // reduce entries above the pivot to canonical residues
        for (int i = 0; i < rank; ++i) {
            if (h.at(i, col) == 0)
                continue;
            Rat q, r;
            ring.div_canonical(h.at(i, col), h.at(rank, col), q, r);
            if (q == 0)
                continue;
            for (int j = 0; j < h.cols(); ++j)
                h.at(i, j) = ring.sub(h.at(i, j), ring.mul(q, h.at(rank, j)));
            for (int j = 0; j < u.cols(); ++j)
                u.at(i, j) = ring.sub(u.at(i, j), ring.mul(q, u.at(rank, j)));
        }
        pivots.push_back(col);
        ++rank;
    }
    return HnfResult{std::move(h), std::move(u), std::move(pivots)};
}

inline int rank_over_fraction_field(const Mat& m)
{
    Mat w = m.with_ring(m.ring().fraction_field());
    HnfResult r = hnf(w);
    return static_cast<int>(r.pivot_cols.size());
}

struct SnfResult {
    Mat d;  // diagonal with d_i | d_{i+1}
    Mat u;  // unimodular, u * m * v = d
    Mat v;  // unimodular
};

inline SnfResult snf(const Mat& m)
{
    detail::require_entries_in_ring(m);
    const Ring& ring = m.ring();
    Mat d = m;
    Mat u = Mat::identity(ring, m.rows());
    Mat v = Mat::identity(ring, m.cols());

    auto row_combine = [&](Mat& w, int r1, int r2, const Rat& a, const Rat& b,
                           const Rat& c, const Rat& dd) {
        for (int j = 0; j < w.cols(); ++j) {
            Rat x = w.at(r1, j), y = w.at(r2, j);
            w.at(r1, j) = ring.add(ring.mul(a, x), ring.mul(b, y));
            w.at(r2, j) = ring.add(ring.mul(c, x), ring.mul(dd, y));
        }
    };
    auto col_combine = [&](Mat& w, int c1, int c2, const Rat& a, const Rat& b,
                           const Rat& c, const Rat& dd) {
        for (int i = 0; i < w.rows(); ++i) {
            Rat x = w.at(i, c1), y = w.at(i, c2);
            w.at(i, c1) = ring.add(ring.mul(a, x), ring.mul(b, y));
            w.at(i, c2) = ring.add(ring.mul(c, x), ring.mul(dd, y));
        }
    };

    int n = std::min(d.rows(), d.cols());
    for (int k = 0; k < n; ++k) {
        // move a nonzero entry into (k, k)
        int pi = -1, pj = -1;
        for (int i = k; i < d.rows() && pi < 0; ++i)
            for (int j = k; j < d.cols(); ++j)
                if (d.at(i, j) != 0) {
                    pi = i;
                    pj = j;
                    break;
                }
        if (pi < 0)
            break;
        if (pi != k) {
            for (int j = 0; j < d.cols(); ++j) std::swap(d.at(k, j), d.at(pi, j));
            for (int j = 0; j < u.cols(); ++j) std::swap(u.at(k, j), u.at(pi, j));
        }
        if (pj != k) {
            for (int i = 0; i < d.rows(); ++i) std::swap(d.at(i, k), d.at(i, pj));
            for (int i = 0; i < v.rows(); ++i) std::swap(v.at(i, k), v.at(i, pj));
        }
        bool dirty = true;
        while (dirty) {
            dirty = false;
            for (int i = k + 1; i < d.rows(); ++i) {
                if (d.at(i, k) == 0)
                    continue;
                Rat a = d.at(k, k), b = d.at(i, k);
                if (auto q = ring.divide_exact(b, a)) {
                    row_combine(d, k, i, Rat(1), Rat(0), ring.neg(*q), Rat(1));
                    row_combine(u, k, i, Rat(1), Rat(0), ring.neg(*q), Rat(1));
                    continue;  // pivot row untouched, no new work created
                }
                Rat g, s, t;
                ring.xgcd(a, b, g, s, t);
                row_combine(d, k, i, s, t, ring.neg(ring.div(b, g)), ring.div(a, g));
                row_combine(u, k, i, s, t, ring.neg(ring.div(b, g)), ring.div(a, g));
                dirty = true;
            }
            for (int j = k + 1; j < d.cols(); ++j) {
                if (d.at(k, j) == 0)
                    continue;
                Rat a = d.at(k, k), b = d.at(k, j);
                if (auto q = ring.divide_exact(b, a)) {
                    col_combine(d, k, j, Rat(1), Rat(0), ring.neg(*q), Rat(1));
                    col_combine(v, k, j, Rat(1), Rat(0), ring.neg(*q), Rat(1));
                    continue;
                }
                Rat g, s, t;
                ring.xgcd(a, b, g, s, t);
                col_combine(d, k, j, s, t, ring.neg(ring.div(b, g)), ring.div(a, g));
                col_combine(v, k, j, s, t, ring.neg(ring.div(b, g)), ring.div(a, g));
                dirty = true;
            }
        }
        // enforce divisibility d_k | d_ij for the rest of the block
        for (int i = k + 1; i < d.rows(); ++i)
            for (int j = k + 1; j < d.cols(); ++j) {
                if (d.at(i, j) == 0)
                    continue;
                if (ring.divide_exact(d.at(i, j), d.at(k, k)))
                    continue;
                // fold row i into row k and restart this diagonal position
                for (int jj = 0; jj < d.cols(); ++jj)
                    d.at(k, jj) = ring.add(d.at(k, jj), d.at(i, jj));
                for (int jj = 0; jj < u.cols(); ++jj)
                    u.at(k, jj) = ring.add(u.at(k, jj), u.at(i, jj));
                --k;
                i = d.rows();
                break;
            }
        if (k >= 0 && k < n && d.at(k, k) != 0) {
            Rat assoc = ring.canonical_associate(d.at(k, k));
            if (assoc != d.at(k, k)) {
                Rat unit = ring.div(assoc, d.at(k, k));
                for (int j = 0; j < d.cols(); ++j)
                    d.at(k, j) = ring.mul(d.at(k, j), unit);
                for (int j = 0; j < u.cols(); ++j)
                    u.at(k, j) = ring.mul(u.at(k, j), unit);
            }
        }
    }
    return SnfResult{std::move(d), std::move(u), std::move(v)};
}

// A submodule of R^n presented by its canonical HNF generator matrix.
class Submodule {
public:
    Submodule() : ambient_(0) {}

    // Normalizes the given generators (rows) to HNF and drops zero rows.
    static Submodule from_generators(const Mat& gens)
    {
        HnfResult r = hnf(gens);
        int rank = static_cast<int>(r.pivot_cols.size());
        std::vector<int> keep(rank);
        for (int i = 0; i < rank; ++i)
            keep[i] = i;
        Submodule s;
        s.ambient_ = gens.cols();
        s.gens_ = r.h.take_rows(keep);
        s.pivot_cols_ = r.pivot_cols;
        return s;
    }

    static Submodule zero(Ring ring, int ambient)
    {
        Submodule s;
        s.ambient_ = ambient;
        s.gens_ = Mat(ring, 0, ambient);
        return s;
    }

    static Submodule full(Ring ring, int ambient)
    {
        return from_generators(Mat::identity(ring, ambient));
    }

    const Ring& ring() const { return gens_.ring(); }
    int ambient_rank() const { return ambient_; }
    int rank() const { return gens_.rows(); }
    const Mat& generators() const { return gens_; }
    const std::vector<int>& pivot_cols() const { return pivot_cols_; }

    bool operator==(const Submodule& o) const
    {
        return ambient_ == o.ambient_ && gens_ == o.gens_ && ring() == o.ring();
    }
    bool operator!=(const Submodule& o) const { return !(*this == o); }

private:
    int ambient_;
    Mat gens_;
    std::vector<int> pivot_cols_;
};

// Kernel over the base ring: { v in R^a : v * m = 0 }, computed by row-reducing
// [m | I] so the transform rows attached to zero rows of the HNF form a basis.
// Kernels of maps between free modules are saturated automatically.
// Column scaling does not change the kernel, so rational entries are cleared
// column-wise first when the ring is a PID.
inline Submodule kernel(const Mat& m)
{
    const Ring& ring = m.ring();
    Mat cleared = m;
    if (!ring.is_field()) {
        for (int j = 0; j < m.cols(); ++j) {
            Int l = 1;
            for (int i = 0; i < m.rows(); ++i)
                l = boost::multiprecision::lcm(l, rat_den(cleared.at(i, j)));
            if (l != 1)
                for (int i = 0; i < m.rows(); ++i)
                    cleared.at(i, j) *= Rat(l);
        }
    }
    HnfResult r = hnf(Mat::hstack(cleared, Mat::identity(ring, m.rows())));
    std::vector<int> zero_rows;
    for (int i = 0; i < m.rows(); ++i) {
        bool z = true;
        for (int j = 0; j < m.cols() && z; ++j)
            z = r.h.at(i, j) == 0;
        if (z)
            zero_rows.push_back(i);
    }
    std::vector<int> tail_cols(m.rows());
    for (int j = 0; j < m.rows(); ++j)
        tail_cols[j] = m.cols() + j;
    return Submodule::from_generators(r.h.take_rows(zero_rows).take_cols(tail_cols));
}

// Row span of m over the base ring (not saturated).
inline Submodule image(const Mat& m)
{
    detail::require_entries_in_ring(m);
    return Submodule::from_generators(m);
}

// Smallest submodule M' containing M with R^n / M' torsion free; equals
// (M (x) K) intersected with R^n.  The K-span yields linear conditions from
// the reduced echelon form, and the saturation is the R-kernel of those.
inline Submodule saturate(const Submodule& s)
{
    const Ring& ring = s.ring();
    if (ring.is_field())
        return s;
    Ring k = ring.fraction_field();
    HnfResult rref = hnf(s.generators().with_ring(k));
    int rank = static_cast<int>(rref.pivot_cols.size());
    int n = s.ambient_rank();
    if (rank == n)
        return Submodule::full(ring, n);
    if (rank == 0)
        return Submodule::zero(ring, n);
    // conditions: v_j = sum_i v_{p_i} * B[i, j] for every non-pivot column j
    std::vector<bool> is_pivot(n, false);
    for (int c : rref.pivot_cols)
        is_pivot[c] = true;
    Mat cond(k, n, n - rank);
    int cc = 0;
    for (int j = 0; j < n; ++j) {
        if (is_pivot[j])
            continue;
        cond.at(j, cc) = 1;
        for (int i = 0; i < rank; ++i)
            cond.at(rref.pivot_cols[i], cc) = -rref.h.at(i, j);
        ++cc;
    }
    return kernel(cond.with_ring(ring));
}

// Membership with coordinates: c with c * gens = v over the module's ring,
// or nullopt.  `over_fraction_field` answers the K-linear question instead.
inline std::optional<std::vector<Rat>> solve_membership(const std::vector<Rat>& v,
                                                        const Submodule& s,
                                                        bool over_fraction_field = false)
{
    if (static_cast<int>(v.size()) != s.ambient_rank())
        throw std::invalid_argument("solve_membership: ambient rank mismatch");
    Ring ring = over_fraction_field ? s.ring().fraction_field() : s.ring();
    const Mat& g = s.generators();
    std::vector<Rat> rem = v;
    for (auto& x : rem)
        x = ring.normalize(x);
    std::vector<Rat> coords(g.rows(), Rat(0));
    for (int i = 0; i < g.rows(); ++i) {
        int p = s.pivot_cols()[i];
        if (rem[p] == 0)
            continue;
        auto q = ring.divide_exact(rem[p], g.at(i, p));
        if (!q)
            return std::nullopt;
        coords[i] = *q;
        for (int j = 0; j < g.cols(); ++j)
            rem[j] = ring.sub(rem[j], ring.mul(*q, ring.normalize(g.at(i, j))));
    }
    for (const Rat& x : rem)
        if (x != 0)
            return std::nullopt;
    return coords;
}

inline bool contains(const Submodule& outer, const std::vector<Rat>& v)
{
    return solve_membership(v, outer).has_value();
}

inline bool contains(const Submodule& outer, const Submodule& inner)
{
    for (int i = 0; i < inner.rank(); ++i)
        if (!contains(outer, inner.generators().row_vec(i)))
            return false;
    return true;
}

inline Submodule sum(const Submodule& a, const Submodule& b)
{
    if (a.ambient_rank() != b.ambient_rank())
        throw std::invalid_argument("sum: ambient mismatch");
    return Submodule::from_generators(Mat::vstack(a.generators(), b.generators()));
}

// Solve X * b = v row-wise for a full-row-rank b; entries of X must lie in
// the ring of b (pass the fraction field view of b for K-solutions).
inline std::optional<Mat> solve_in_rowspan(const Mat& targets, const Submodule& span,
                                           bool over_fraction_field = false)
{
    Mat out(over_fraction_field ? span.ring().fraction_field() : span.ring(),
            targets.rows(), span.rank());
    for (int i = 0; i < targets.rows(); ++i) {
        auto c = solve_membership(targets.row_vec(i), span, over_fraction_field);
        if (!c)
            return std::nullopt;
        for (int j = 0; j < span.rank(); ++j)
            out.at(i, j) = (*c)[j];
    }
    return out;
}

// Completion of a saturated submodule to a basis of the ambient module:
// returns (proj, sec) with proj: R^n -> R^q the quotient-coordinate map and
// sec: R^q -> R^n a section, sec * proj = I_q and gens * proj = 0.
// Derived from the Smith form: the elementary divisors of a saturated
// submodule are units, so V^{-1}'s last rows complete the basis.
struct QuotientBasis {
    Mat proj;  // n x q
    Mat sec;   // q x n
};

inline std::optional<QuotientBasis> quotient_basis(const Submodule& s)
{
    const Ring& ring = s.ring();
    int n = s.ambient_rank();
    int r = s.rank();
    if (r == 0) {
        return QuotientBasis{Mat::identity(ring, n), Mat::identity(ring, n)};
    }
    SnfResult w = snf(s.generators());
    for (int i = 0; i < r; ++i)
        if (!ring.is_unit(w.d.at(i, i)))
            return std::nullopt;  // not saturated: quotient has torsion
    // scale V's first columns so u * gens * v = [I 0]
    Mat v = w.v;
    for (int i = 0; i < r; ++i) {
        Rat inv = ring.div(Rat(1), w.d.at(i, i));
        for (int row = 0; row < v.rows(); ++row)
            v.at(row, i) = ring.mul(v.at(row, i), inv);
    }
    std::vector<int> tail(n - r);
    for (int j = 0; j < n - r; ++j)
        tail[j] = r + j;
    Mat proj = v.take_cols(tail);
    // sec = last n-r rows of V^{-1}; recover V^{-1} by solving V * X = I
    Mat vinv = Mat::identity(ring, n);
    {
        // invert the unimodular v via HNF transform: hnf(v) = (I, U) => U = v^{-1}
        HnfResult h = hnf(v.with_ring(ring));
        if (static_cast<int>(h.pivot_cols.size()) != n)
            return std::nullopt;
        // h.h is identity up to unit pivots == 1 entries; adjust exactly
        Mat correction = h.h;  // correction * ? ; for unimodular v, h.h == I
        if (correction != Mat::identity(ring, n)) {
            // solve remaining triangular system: vinv = correction^{-1} * u
            // (correction is upper triangular with unit pivots)
            Mat c = correction, uu = h.u;
            for (int i = n - 1; i >= 0; --i) {
                Rat piv = c.at(i, i);
                if (!ring.is_unit(piv))
                    return std::nullopt;
                Rat inv = ring.div(Rat(1), piv);
                for (int j = 0; j < n; ++j) {
                    c.at(i, j) = ring.mul(c.at(i, j), inv);
                    uu.at(i, j) = ring.mul(uu.at(i, j), inv);
                }
                for (int k = 0; k < i; ++k) {
                    Rat f = c.at(k, i);
                    if (f == 0)
                        continue;
                    for (int j = 0; j < n; ++j) {
                        c.at(k, j) = ring.sub(c.at(k, j), ring.mul(f, c.at(i, j)));
                        uu.at(k, j) = ring.sub(uu.at(k, j), ring.mul(f, uu.at(i, j)));
                    }
                }
            }
            vinv = uu;
        } else {
            vinv = h.u;
        }
    }
    Mat sec = vinv.take_rows(tail);
    return QuotientBasis{std::move(proj), std::move(sec)};
}

// Invertibility over the ring (det a unit) with exact inverse.
inline std::optional<Mat> inverse(const Mat& m)
{
    if (m.rows() != m.cols())
        return std::nullopt;
    const Ring& ring = m.ring();
    int n = m.rows();
    Ring k = ring.fraction_field();
    Mat w = m.with_ring(k);
    Mat inv = Mat::identity(k, n);
    for (int col = 0; col < n; ++col) {
        int piv = -1;
        for (int i = col; i < n; ++i)
            if (w.at(i, col) != 0) {
                piv = i;
                break;
            }
        if (piv < 0)
            return std::nullopt;
        if (piv != col)
            for (int j = 0; j < n; ++j) {
                std::swap(w.at(col, j), w.at(piv, j));
                std::swap(inv.at(col, j), inv.at(piv, j));
            }
        Rat d = w.at(col, col);
        for (int j = 0; j < n; ++j) {
            w.at(col, j) = k.div(w.at(col, j), d);
            inv.at(col, j) = k.div(inv.at(col, j), d);
        }
        for (int i = 0; i < n; ++i) {
            if (i == col || w.at(i, col) == 0)
                continue;
            Rat f = w.at(i, col);
            for (int j = 0; j < n; ++j) {
                w.at(i, j) = k.sub(w.at(i, j), k.mul(f, w.at(col, j)));
                inv.at(i, j) = k.sub(inv.at(i, j), k.mul(f, inv.at(col, j)));
            }
        }
    }
    // entries (and hence the inverse map) must live in the base ring
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (!ring.contains(inv.at(i, j)))
                return std::nullopt;
    return inv.with_ring(ring);
}

inline bool is_invertible_over_ring(const Mat& m)
{
    return inverse(m).has_value();
}

}  // namespace ffgs
