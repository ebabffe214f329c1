#pragma once

// Exact linear algebra over cyclotomic fields.
//
// Rank, nullspace and solving are done by Gaussian elimination over the
// field with content normalization: every pivot row is rescaled by the
// rational content of its entries, which keeps coefficient growth close to
// the fraction-free (Bareiss) behaviour while staying division-exact.  No
// floating point is involved in any rank decision.

#include "cyclo.hpp"

#include <functional>
#include <optional>
#include <utility>
#include <vector>

namespace hopfcas {

/// Sparse row: sorted (column, value) pairs, zero values dropped.
using SparseRow = std::vector<std::pair<long, Cyclo>>;

inline void row_axpy(SparseRow& dst, const Cyclo& factor, const SparseRow& src) {
    SparseRow out;
    out.reserve(dst.size() + src.size());
    size_t i = 0, j = 0;
    while (i < dst.size() || j < src.size()) {
        if (j == src.size() || (i < dst.size() && dst[i].first < src[j].first)) {
            out.push_back(dst[i++]);
        } else if (i == dst.size() || src[j].first < dst[i].first) {
            Cyclo v = factor * src[j].second;
            if (!v.is_zero()) out.emplace_back(src[j].first, std::move(v));
            ++j;
        } else {
            Cyclo v = dst[i].second + factor * src[j].second;
            if (!v.is_zero()) out.emplace_back(dst[i].first, std::move(v));
            ++i, ++j;
        }
    }
    dst = std::move(out);
}

/// Divide the row by the rational content of its coefficients (gcd of all
/// numerators / lcm of all denominators across every cyclotomic coordinate).
inline void row_normalize_content(SparseRow& row) {
    if (row.empty()) return;
    Int g = 0, l = 1;
    for (const auto& [c, v] : row)
        for (const auto& q : v.coeffs()) {
            if (q == 0) continue;
            Int num = q.get_num();
            mpz_abs(num.get_mpz_t(), num.get_mpz_t());
            mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), num.get_mpz_t());
            mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q.get_den().get_mpz_t());
        }
    if (g == 0) return;
    Rat scale(l, g);
    scale.canonicalize();
    if (scale == 1) return;
    Cyclo s{scale};
    for (auto& [c, v] : row) v = s * v;
}

/// Row-echelon form in place.  Returns the rank; `pivots[r]` is the pivot
/// column of row r.  Rows end up normalized with pivot entry retained (not 1).
inline long echelonize(std::vector<SparseRow>& rows, std::vector<long>& pivots) {
    pivots.clear();
    long rank = 0;
    const long nrows = static_cast<long>(rows.size());
    for (auto& r : rows) row_normalize_content(r);
    while (true) {
        // choose the pivot among unprocessed rows: smallest leading column,
        // then fewest nonzeros (Markowitz-style, limits fill-in)
        long best = -1;
        for (long r = rank; r < nrows; ++r) {
            if (rows[r].empty()) continue;
            if (best < 0 || rows[r].front().first < rows[best].front().first ||
                (rows[r].front().first == rows[best].front().first &&
                 rows[r].size() < rows[best].size()))
                best = r;
        }
        if (best < 0) break;
        std::swap(rows[rank], rows[best]);
        const long col = rows[rank].front().first;
        for (long r = rank + 1; r < nrows; ++r) {
            if (!rows[r].empty() && rows[r].front().first == col) {
                Cyclo f = -(rows[r].front().second / rows[rank].front().second);
                row_axpy(rows[r], f, rows[rank]);
                row_normalize_content(rows[r]);
            }
        }
        pivots.push_back(col);
        ++rank;
    }
    rows.resize(rank);
    return rank;
}

inline long sparse_rank(std::vector<SparseRow> rows) {
    std::vector<long> pivots;
    return echelonize(rows, pivots);
}

/// Basis of the right nullspace of the (rows x cols) sparse matrix.
inline std::vector<std::vector<Cyclo>> sparse_nullspace(std::vector<SparseRow> rows, long cols) {
    std::vector<long> pivots;
    long rank = echelonize(rows, pivots);
    std::vector<bool> is_pivot(cols, false);
    for (long c : pivots) is_pivot[c] = true;
    std::vector<std::vector<Cyclo>> basis;
    for (long free_col = 0; free_col < cols; ++free_col) {
        if (is_pivot[free_col]) continue;
        std::vector<Cyclo> v(cols, Cyclo(0));
        v[free_col] = Cyclo(1);
        for (long r = rank - 1; r >= 0; --r) {
            // rows[r]: pivot * v[p] + sum_{c>p} a_c v[c] = 0
            Cyclo acc(0);
            for (const auto& [c, a] : rows[r])
                if (c != pivots[r] && !v[c].is_zero()) acc += a * v[c];
            v[pivots[r]] = -(acc / rows[r].front().second);
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

/// Dense matrix over the cyclotomic scalars.  Small sizes only; elimination
/// on anything large should go through the sparse routines.
class Mat {
public:
    Mat() : r_(0), c_(0) {}
    Mat(long r, long c) : r_(r), c_(c), a_(r, std::vector<Cyclo>(c, Cyclo(0))) {}

    static Mat identity(long n) {
        Mat m(n, n);
        for (long i = 0; i < n; ++i) m(i, i) = Cyclo(1);
        return m;
    }

    long rows() const { return r_; }
    long cols() const { return c_; }
    Cyclo& operator()(long i, long j) { return a_[i][j]; }
    const Cyclo& operator()(long i, long j) const { return a_[i][j]; }

    friend bool operator==(const Mat& x, const Mat& y) {
        if (x.r_ != y.r_ || x.c_ != y.c_) return false;
        for (long i = 0; i < x.r_; ++i)
            for (long j = 0; j < x.c_; ++j)
                if (x(i, j) != y(i, j)) return false;
        return true;
    }
    friend bool operator!=(const Mat& x, const Mat& y) { return !(x == y); }

    friend Mat operator*(const Mat& x, const Mat& y) {
        if (x.c_ != y.r_) throw std::invalid_argument("matrix product shape mismatch");
        Mat z(x.r_, y.c_);
        for (long i = 0; i < x.r_; ++i)
            for (long k = 0; k < x.c_; ++k) {
                if (x(i, k).is_zero()) continue;
                for (long j = 0; j < y.c_; ++j)
                    if (!y(k, j).is_zero()) z(i, j) += x(i, k) * y(k, j);
            }
        return z;
    }
    friend Mat operator+(const Mat& x, const Mat& y) {
        Mat z = x;
        for (long i = 0; i < z.r_; ++i)
            for (long j = 0; j < z.c_; ++j) z(i, j) += y(i, j);
        return z;
    }
    friend Mat operator-(const Mat& x, const Mat& y) {
        Mat z = x;
        for (long i = 0; i < z.r_; ++i)
            for (long j = 0; j < z.c_; ++j) z(i, j) -= y(i, j);
        return z;
    }
    friend Mat operator*(const Cyclo& s, const Mat& x) {
        Mat z = x;
        for (long i = 0; i < z.r_; ++i)
            for (long j = 0; j < z.c_; ++j) z(i, j) = s * z(i, j);
        return z;
    }

    Mat transpose() const {
        Mat t(c_, r_);
        for (long i = 0; i < r_; ++i)
            for (long j = 0; j < c_; ++j) t(j, i) = a_[i][j];
        return t;
    }

    bool is_zero() const {
        for (long i = 0; i < r_; ++i)
            for (long j = 0; j < c_; ++j)
                if (!a_[i][j].is_zero()) return false;
        return true;
    }

    bool is_diagonal() const {
        for (long i = 0; i < r_; ++i)
            for (long j = 0; j < c_; ++j)
                if (i != j && !a_[i][j].is_zero()) return false;
        return true;
    }

    std::vector<SparseRow> sparse_rows() const {
        std::vector<SparseRow> rows(r_);
        for (long i = 0; i < r_; ++i)
            for (long j = 0; j < c_; ++j)
                if (!a_[i][j].is_zero()) rows[i].emplace_back(j, a_[i][j]);
        return rows;
    }

    long rank() const { return sparse_rank(sparse_rows()); }

    Mat pow(long e) const {
        if (r_ != c_) throw std::invalid_argument("pow needs a square matrix");
        Mat acc = identity(r_), base = *this;
        if (e < 0) { base = base.inverse(); e = -e; }
        while (e > 0) {
            if (e & 1) acc = acc * base;
            base = base * base;
            e >>= 1;
        }
        return acc;
    }

    Mat inverse() const {
        if (r_ != c_) throw std::invalid_argument("inverse needs a square matrix");
        long n = r_;
        std::vector<std::vector<Cyclo>> w(n, std::vector<Cyclo>(2 * n, Cyclo(0)));
        for (long i = 0; i < n; ++i) {
            for (long j = 0; j < n; ++j) w[i][j] = a_[i][j];
            w[i][n + i] = Cyclo(1);
        }
        for (long col = 0; col < n; ++col) {
            long piv = -1;
            for (long r = col; r < n; ++r)
                if (!w[r][col].is_zero()) { piv = r; break; }
            if (piv < 0) throw std::domain_error("matrix is singular");
            std::swap(w[col], w[piv]);
            Cyclo inv = w[col][col].inverse();
            for (long j = 0; j < 2 * n; ++j)
                if (!w[col][j].is_zero()) w[col][j] *= inv;
            for (long r = 0; r < n; ++r) {
                if (r == col || w[r][col].is_zero()) continue;
                Cyclo f = w[r][col];
                for (long j = 0; j < 2 * n; ++j)
                    if (!w[col][j].is_zero()) w[r][j] -= f * w[col][j];
            }
        }
        Mat out(n, n);
        for (long i = 0; i < n; ++i)
            for (long j = 0; j < n; ++j) out(i, j) = w[i][n + j];
        return out;
    }

    Cyclo det() const {
        if (r_ != c_) throw std::invalid_argument("det needs a square matrix");
        std::vector<std::vector<Cyclo>> w = a_;
        Cyclo d(1);
        for (long col = 0; col < r_; ++col) {
            long piv = -1;
            for (long r = col; r < r_; ++r)
                if (!w[r][col].is_zero()) { piv = r; break; }
            if (piv < 0) return Cyclo(0);
            if (piv != col) { std::swap(w[col], w[piv]); d = -d; }
            d *= w[col][col];
            Cyclo inv = w[col][col].inverse();
            for (long r = col + 1; r < r_; ++r) {
                if (w[r][col].is_zero()) continue;
                Cyclo f = w[r][col] * inv;
                for (long j = col; j < r_; ++j)
                    if (!w[col][j].is_zero()) w[r][j] -= f * w[col][j];
            }
        }
        return d;
    }

    /// Kronecker (tensor) product.
    friend Mat kron(const Mat& x, const Mat& y) {
        Mat z(x.r_ * y.r_, x.c_ * y.c_);
        for (long i = 0; i < x.r_; ++i)
            for (long j = 0; j < x.c_; ++j) {
                if (x(i, j).is_zero()) continue;
                for (long k = 0; k < y.r_; ++k)
                    for (long l = 0; l < y.c_; ++l)
                        if (!y(k, l).is_zero()) z(i * y.r_ + k, j * y.c_ + l) = x(i, j) * y(k, l);
            }
        return z;
    }

    Cyclo trace() const {
        Cyclo t(0);
        for (long i = 0; i < std::min(r_, c_); ++i) t += a_[i][i];
        return t;
    }

    /// Direct sum (block diagonal).
    friend Mat block_diag(const Mat& x, const Mat& y) {
        Mat z(x.r_ + y.r_, x.c_ + y.c_);
        for (long i = 0; i < x.r_; ++i)
            for (long j = 0; j < x.c_; ++j) z(i, j) = x(i, j);
        for (long i = 0; i < y.r_; ++i)
            for (long j = 0; j < y.c_; ++j) z(x.r_ + i, x.c_ + j) = y(i, j);
        return z;
    }

    std::string to_string() const {
        std::string s;
        for (long i = 0; i < r_; ++i) {
            s += "[ ";
            for (long j = 0; j < c_; ++j) s += a_[i][j].to_string() + " ";
            s += "]\n";
        }
        return s;
    }

private:
    long r_, c_;
    std::vector<std::vector<Cyclo>> a_;
};

/// Solve A x = b exactly; returns std::nullopt when inconsistent.
/// A is given by columns (each a length-`rows` vector), matching the common
/// use of expressing b in terms of a spanning set.
inline std::optional<std::vector<Cyclo>> solve_columns(const std::vector<std::vector<Cyclo>>& columns,
                                                       const std::vector<Cyclo>& b) {
    const long cols = static_cast<long>(columns.size());
    const long rows = static_cast<long>(b.size());
    std::vector<SparseRow> m(rows);
    for (long r = 0; r < rows; ++r) {
        for (long c = 0; c < cols; ++c)
            if (!columns[c][r].is_zero()) m[r].emplace_back(c, columns[c][r]);
        if (!b[r].is_zero()) m[r].emplace_back(cols, b[r]);
    }
    std::vector<long> pivots;
    long rank = echelonize(m, pivots);
    std::vector<Cyclo> x(cols, Cyclo(0));
    for (long r = rank - 1; r >= 0; --r) {
        if (pivots[r] == cols) return std::nullopt; // pivot in the rhs column
        Cyclo acc(0);
        for (const auto& [c, a] : m[r]) {
            if (c == pivots[r]) continue;
            if (c == cols) acc -= a;
            else if (!x[c].is_zero()) acc += a * x[c];
        }
        x[pivots[r]] = -(acc / m[r].front().second);
    }
    return x;
}

/// Exact rank of a span of vectors; also echelonizes them in place
/// (the echelon basis replaces the input).
inline long echelon_basis(std::vector<std::vector<Cyclo>>& vecs) {
    if (vecs.empty()) return 0;
    const long cols = static_cast<long>(vecs[0].size());
    std::vector<SparseRow> rows(vecs.size());
    for (size_t i = 0; i < vecs.size(); ++i)
        for (long j = 0; j < cols; ++j)
            if (!vecs[i][j].is_zero()) rows[i].emplace_back(j, vecs[i][j]);
    std::vector<long> pivots;
    long rank = echelonize(rows, pivots);
    vecs.assign(rank, std::vector<Cyclo>(cols, Cyclo(0)));
    for (long r = 0; r < rank; ++r)
        for (const auto& [c, v] : rows[r]) vecs[r][c] = v;
    return rank;
}

} // namespace hopfcas
