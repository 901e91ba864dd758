#pragma once

// Test-only oracles, kept independent of the library code paths they check.
//
// The production routines compute kernels by HNF transform bookkeeping and
// saturation through rational linear conditions; the oracles here go through
// the Smith normal form (saturation) and cofactor expansion (determinants)
// instead, so agreement is a genuine two-route check.

#include "ffgs/lattice.hpp"

#include <random>

namespace ffgs::testing {

// Determinant by cofactor expansion along the first row.
inline Rat cofactor_det(const Mat& m)
{
    int n = m.rows();
    if (n != m.cols())
        throw std::invalid_argument("cofactor_det: not square");
    if (n == 0)
        return Rat(1);
    if (n == 1)
        return m.at(0, 0);
    const Ring& ring = m.ring();
    Rat acc(0);
    for (int j = 0; j < n; ++j) {
        if (m.at(0, j) == 0)
            continue;
        Mat minor(ring, n - 1, n - 1);
        for (int i = 1; i < n; ++i) {
            int cc = 0;
            for (int c = 0; c < n; ++c) {
                if (c == j)
                    continue;
                minor.at(i - 1, cc++) = m.at(i, c);
            }
        }
        Rat term = ring.mul(m.at(0, j), cofactor_det(minor));
        acc = (j % 2 == 0) ? ring.add(acc, term) : ring.sub(acc, term);
    }
    return acc;
}

// Saturation via the Smith normal form: with U*G*V = [D 0] and G of full row
// rank r, the saturation of rowspan(G) is spanned by the first r rows of
// V^{-1}.  Independent of the production conditions-matrix route.
inline Submodule snf_saturate(const Submodule& s)
{
    const Ring& ring = s.ring();
    if (ring.is_field())
        return s;
    if (s.rank() == 0)
        return s;
    SnfResult w = snf(s.generators());
    auto vinv = inverse(w.v);
    if (!vinv)
        throw std::logic_error("snf_saturate: V not invertible");
    std::vector<int> head(static_cast<size_t>(s.rank()));
    for (int i = 0; i < s.rank(); ++i)
        head[static_cast<size_t>(i)] = i;
    return Submodule::from_generators(vinv->take_rows(head));
}

// Shape checks for the canonical Hermite form.
inline bool is_canonical_hnf(const Mat& h, const std::vector<int>& pivots, const Ring& ring)
{
    int r = static_cast<int>(pivots.size());
    for (int i = 1; i < r; ++i)
        if (pivots[i] <= pivots[i - 1])
            return false;
    for (int i = 0; i < h.rows(); ++i)
        for (int j = 0; j < h.cols(); ++j) {
            bool below_rank = i >= r;
            bool left_of_pivot = i < r && j < pivots[static_cast<size_t>(i)];
            if ((below_rank || left_of_pivot) && h.at(i, j) != 0)
                return false;
        }
    for (int i = 0; i < r; ++i) {
        const Rat& piv = h.at(i, pivots[static_cast<size_t>(i)]);
        if (piv != ring.canonical_associate(piv))
            return false;
        for (int above = 0; above < i; ++above) {
            Rat q, rem;
            ring.div_canonical(h.at(above, pivots[static_cast<size_t>(i)]), piv, q, rem);
            if (q != 0)
                return false;  // entry above pivot not reduced
        }
    }
    return true;
}

inline bool is_unimodular(const Mat& u)
{
    Rat d = det(u);
    return u.ring().is_unit(d);
}

inline Mat random_int_matrix(std::mt19937& rng, Ring ring, int rows, int cols, int lo, int hi)
{
    std::uniform_int_distribution<int> dist(lo, hi);
    Mat m(ring, rows, cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j)
            m.at(i, j) = ring.normalize(Rat(dist(rng)));
    return m;
}

}  // namespace ffgs::testing
