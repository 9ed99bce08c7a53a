#pragma once

#include "germlab/rational.hpp"

#include <stdexcept>
#include <utility>
#include <vector>

namespace germlab {

using Mat = std::vector<std::vector<Rat>>;
using Vec = std::vector<Rat>;

inline Mat identity_matrix(int n)
{
    Mat m(static_cast<size_t>(n), Vec(static_cast<size_t>(n), Rat(0)));
    for (int i = 0; i < n; ++i) m[static_cast<size_t>(i)][static_cast<size_t>(i)] = 1;
    return m;
}

inline Mat mat_mul(const Mat& a, const Mat& b)
{
    const size_t n = a.size(), m = b[0].size(), k = b.size();
    Mat r(n, Vec(m, Rat(0)));
    for (size_t i = 0; i < n; ++i)
        for (size_t t = 0; t < k; ++t) {
            if (is_zero(a[i][t])) continue;
            for (size_t j = 0; j < m; ++j) r[i][j] += a[i][t] * b[t][j];
        }
    return r;
}

inline Vec mat_apply(const Mat& a, const Vec& v)
{
    Vec r(a.size(), Rat(0));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < v.size(); ++j) r[i] += a[i][j] * v[j];
    return r;
}

inline int rank(Mat a)
{
    if (a.empty()) return 0;
    const size_t rows = a.size(), cols = a[0].size();
    int r = 0;
    for (size_t col = 0; col < cols && static_cast<size_t>(r) < rows; ++col) {
        size_t piv = static_cast<size_t>(r);
        while (piv < rows && is_zero(a[piv][col])) ++piv;
        if (piv == rows) continue;
        std::swap(a[static_cast<size_t>(r)], a[piv]);
        const Rat inv = 1 / a[static_cast<size_t>(r)][col];
        for (size_t j = col; j < cols; ++j) a[static_cast<size_t>(r)][j] *= inv;
        for (size_t i = 0; i < rows; ++i) {
            if (i == static_cast<size_t>(r) || is_zero(a[i][col])) continue;
            const Rat f = a[i][col];
            for (size_t j = col; j < cols; ++j) a[i][j] -= f * a[static_cast<size_t>(r)][j];
        }
        ++r;
    }
    return r;
}

inline Mat invert_matrix(Mat a)
{
    const size_t n = a.size();
    Mat inv = identity_matrix(static_cast<int>(n));
    for (size_t col = 0; col < n; ++col) {
        size_t piv = col;
        while (piv < n && is_zero(a[piv][col])) ++piv;
        if (piv == n) throw std::invalid_argument("invert_matrix: singular matrix");
        std::swap(a[col], a[piv]);
        std::swap(inv[col], inv[piv]);
        const Rat d = 1 / a[col][col];
        for (size_t j = 0; j < n; ++j) {
            a[col][j] *= d;
            inv[col][j] *= d;
        }
        for (size_t i = 0; i < n; ++i) {
            if (i == col || is_zero(a[i][col])) continue;
            const Rat f = a[i][col];
            for (size_t j = 0; j < n; ++j) {
                a[i][j] -= f * a[col][j];
                inv[i][j] -= f * inv[col][j];
            }
        }
    }
    return inv;
}

inline Rat determinant(Mat a)
{
    const size_t n = a.size();
    Rat det(1);
    for (size_t col = 0; col < n; ++col) {
        size_t piv = col;
        while (piv < n && is_zero(a[piv][col])) ++piv;
        if (piv == n) return Rat(0);
        if (piv != col) {
            std::swap(a[col], a[piv]);
            det = -det;
        }
        det *= a[col][col];
        const Rat inv = 1 / a[col][col];
        for (size_t i = col + 1; i < n; ++i) {
            if (is_zero(a[i][col])) continue;
            const Rat f = a[i][col] * inv;
            for (size_t j = col; j < n; ++j) a[i][j] -= f * a[col][j];
        }
    }
    return det;
}

// Basis of the kernel of a (not necessarily square) matrix.
inline std::vector<Vec> kernel_basis(Mat a)
{
    if (a.empty()) return {};
    const size_t rows = a.size(), cols = a[0].size();
    std::vector<int> pivot_col;
    size_t r = 0;
    for (size_t col = 0; col < cols && r < rows; ++col) {
        size_t piv = r;
        while (piv < rows && is_zero(a[piv][col])) ++piv;
        if (piv == rows) continue;
        std::swap(a[r], a[piv]);
        const Rat inv = 1 / a[r][col];
        for (size_t j = col; j < cols; ++j) a[r][j] *= inv;
        for (size_t i = 0; i < rows; ++i) {
            if (i == r || is_zero(a[i][col])) continue;
            const Rat f = a[i][col];
            for (size_t j = col; j < cols; ++j) a[i][j] -= f * a[r][j];
        }
        pivot_col.push_back(static_cast<int>(col));
        ++r;
    }
    std::vector<bool> is_pivot(cols, false);
    for (int c : pivot_col) is_pivot[static_cast<size_t>(c)] = true;
    std::vector<Vec> basis;
    for (size_t free_col = 0; free_col < cols; ++free_col) {
        if (is_pivot[free_col]) continue;
        Vec v(cols, Rat(0));
        v[free_col] = 1;
        for (size_t i = 0; i < pivot_col.size(); ++i)
            v[static_cast<size_t>(pivot_col[i])] = -a[i][free_col];
        basis.push_back(std::move(v));
    }
    return basis;
}

struct CongruenceResult {
    Mat transform;          // invertible P with P^T A P diagonal
    Vec diagonal;           // the diagonal entries of P^T A P
    int positives = 0;
    int negatives = 0;
    int zeros = 0;
    int signature() const { return positives - negatives; }
};

// Diagonalizes a symmetric matrix by congruence over the rationals.
inline CongruenceResult congruence_diagonalize(Mat a)
{
    const size_t n = a.size();
    Mat p = identity_matrix(static_cast<int>(n));
    auto col_op = [&](size_t dst, size_t src, const Rat& f) {
        // column dst += f * column src, applied symmetrically to a, and to p
        for (size_t i = 0; i < n; ++i) a[i][dst] += f * a[i][src];
        for (size_t j = 0; j < n; ++j) a[dst][j] += f * a[src][j];
        for (size_t i = 0; i < n; ++i) p[i][dst] += f * p[i][src];
    };
    auto col_swap = [&](size_t i, size_t j) {
        for (size_t t = 0; t < n; ++t) std::swap(a[t][i], a[t][j]);
        for (size_t t = 0; t < n; ++t) std::swap(a[i][t], a[j][t]);
        for (size_t t = 0; t < n; ++t) std::swap(p[t][i], p[t][j]);
    };
    for (size_t k = 0; k < n; ++k) {
        if (is_zero(a[k][k])) {
            size_t j = k + 1;
            while (j < n && is_zero(a[j][j])) ++j;
            if (j < n) {
                col_swap(k, j);
            } else {
                j = k + 1;
                while (j < n && is_zero(a[k][j])) ++j;
                if (j == n) continue; // row/col k already clear
                col_op(k, j, Rat(1)); // a[k][k] becomes 2*a[k][j] != 0
            }
        }
        const Rat pivot = a[k][k];
        for (size_t j = k + 1; j < n; ++j) {
            if (is_zero(a[k][j])) continue;
            col_op(j, k, -a[k][j] / pivot);
        }
    }
    CongruenceResult res;
    res.transform = std::move(p);
    res.diagonal.resize(n);
    for (size_t i = 0; i < n; ++i) {
        res.diagonal[i] = a[i][i];
        const int s = sign(a[i][i]);
        if (s > 0)
            ++res.positives;
        else if (s < 0)
            ++res.negatives;
        else
            ++res.zeros;
    }
    return res;
}

// Fraction-free row echelon rank over the integers. Rational input rows are
// scaled to integers first; cross-multiplication keeps everything in Z and
// rows are divided by their content after each reduction step.
class IntEchelon {
public:
    explicit IntEchelon(size_t cols) : cols_(cols) {}

    // Returns true if the row enlarged the span.
    bool add_row(const Vec& rational_row)
    {
        std::vector<Int> row = scale_to_int(rational_row);
        return add_int_row(std::move(row));
    }

    bool add_int_row(std::vector<Int> row)
    {
        for (auto& [lead, pivot] : pivots_) {
            if (row[lead] == 0) continue;
            const Int a = pivot[lead];
            const Int b = row[lead];
            for (size_t j = 0; j < cols_; ++j) row[j] = row[j] * a - pivot[j] * b;
            normalize(row);
        }
        size_t lead = 0;
        while (lead < cols_ && row[lead] == 0) ++lead;
        if (lead == cols_) return false;
        normalize(row);
        pivots_.emplace_back(lead, std::move(row));
        std::sort(pivots_.begin(), pivots_.end(),
                  [](const auto& x, const auto& y) { return x.first < y.first; });
        return true;
    }

    // True iff the row already lies in the span of the added rows.
    bool in_span(const Vec& rational_row) const
    {
        std::vector<Int> row = scale_to_int(rational_row);
        for (const auto& [lead, pivot] : pivots_) {
            if (row[lead] == 0) continue;
            const Int a = pivot[lead];
            const Int b = row[lead];
            for (size_t j = 0; j < cols_; ++j) row[j] = row[j] * a - pivot[j] * b;
        }
        for (const auto& v : row)
            if (v != 0) return false;
        return true;
    }

    int rank() const { return static_cast<int>(pivots_.size()); }

private:
    std::vector<Int> scale_to_int(const Vec& row) const
    {
        if (row.size() != cols_) throw std::invalid_argument("IntEchelon: row arity mismatch");
        Int lcm(1);
        for (const auto& q : row) {
            Int den = q.get_den();
            Int g;
            mpz_gcd(g.get_mpz_t(), lcm.get_mpz_t(), den.get_mpz_t());
            lcm = lcm / g * den;
        }
        std::vector<Int> out(cols_);
        for (size_t j = 0; j < cols_; ++j) {
            Rat scaled = row[j] * Rat(lcm);
            out[j] = scaled.get_num(); // denominator is 1 by construction
        }
        return out;
    }

    static void normalize(std::vector<Int>& row)
    {
        Int g(0);
        for (const auto& v : row) {
            mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
            if (g == 1) break;
        }
        if (g > 1)
            for (auto& v : row) v /= g;
    }

    size_t cols_;
    std::vector<std::pair<size_t, std::vector<Int>>> pivots_;
};

} // namespace germlab
