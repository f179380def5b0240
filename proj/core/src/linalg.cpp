#include "qloop/linalg.hpp"

#include <stdexcept>

namespace qloop {

namespace {

// Least common multiple of denominators in a row, for clearing fractions.
IntPoly row_denominator(const ScalarVector& row) {
    IntPoly l(1);
    for (const Scalar& s : row) {
        const IntPoly& d = s.den();
        IntPoly g = IntPoly::gcd(l, d);
        l = l.div_exact(g) * d;
    }
    if (l.leading() < 0) l = -l;
    return l;
}

}  // namespace

Echelon::Echelon(const ScalarMatrix& a, const ScalarMatrix& b) {
    const size_t rows = a.size();
    a_cols_ = rows ? static_cast<int>(a[0].size()) : 0;
    const int b_cols = b.empty() ? 0 : static_cast<int>(b[0].size());
    total_cols_ = a_cols_ + b_cols;

    m_.assign(rows, std::vector<IntPoly>(total_cols_));
    for (size_t r = 0; r < rows; ++r) {
        ScalarVector full = a[r];
        if (b_cols) full.insert(full.end(), b[r].begin(), b[r].end());
        IntPoly denom = row_denominator(full);
        for (int c = 0; c < total_cols_; ++c)
            m_[r][c] = full[c].num() * denom.div_exact(full[c].den());
    }

    // Bareiss fraction-free elimination; every division is exact.
    IntPoly prev(1);
    int row = 0;
    for (int col = 0; col < a_cols_ && row < static_cast<int>(rows); ++col) {
        int piv = -1;
        for (int r = row; r < static_cast<int>(rows); ++r)
            if (!m_[r][col].is_zero()) {
                piv = r;
                break;
            }
        if (piv < 0) continue;
        std::swap(m_[row], m_[piv]);
        for (int r = row + 1; r < static_cast<int>(rows); ++r) {
            for (int c = col + 1; c < total_cols_; ++c)
                m_[r][c] = (m_[row][col] * m_[r][c] - m_[r][col] * m_[row][c]).div_exact(prev);
            m_[r][col] = IntPoly();
        }
        prev = m_[row][col];
        pivot_cols_.push_back(col);
        ++row;
    }
    rank_ = row;
}

ScalarVector Echelon::back_substitute(int rhs_col) const {
    // rhs_col indexes a column of the eliminated matrix; for kernel vectors
    // it is a free column of A, for solves a column of B.
    ScalarVector x(a_cols_, Scalar());
    for (int k = rank_ - 1; k >= 0; --k) {
        const int pc = pivot_cols_[k];
        Scalar acc = Scalar::from_fraction(m_[k][rhs_col], IntPoly(1));
        for (int j = pc + 1; j < a_cols_; ++j) {
            if (m_[k][j].is_zero() || x[j].is_zero()) continue;
            acc -= Scalar::from_fraction(m_[k][j], IntPoly(1)) * x[j];
        }
        x[pc] = acc / Scalar::from_fraction(m_[k][pc], IntPoly(1));
    }
    return x;
}

std::vector<ScalarVector> Echelon::kernel() const {
    std::vector<ScalarVector> basis;
    std::vector<bool> is_pivot(a_cols_, false);
    for (int pc : pivot_cols_) is_pivot[pc] = true;
    for (int f = 0; f < a_cols_; ++f) {
        if (is_pivot[f]) continue;
        // Solve A x = 0 with x[f] = 1, other free variables zero: move column
        // f to the right-hand side and back-substitute.
        ScalarVector x(a_cols_, Scalar());
        x[f] = Scalar(1);
        for (int k = rank_ - 1; k >= 0; --k) {
            const int pc = pivot_cols_[k];
            if (pc > f) continue;
            Scalar acc;
            for (int j = pc + 1; j < a_cols_; ++j) {
                if (m_[k][j].is_zero() || x[j].is_zero()) continue;
                acc -= Scalar::from_fraction(m_[k][j], IntPoly(1)) * x[j];
            }
            x[pc] = acc / Scalar::from_fraction(m_[k][pc], IntPoly(1));
        }
        basis.push_back(std::move(x));
    }
    return basis;
}

std::optional<ScalarMatrix> Echelon::solve() const {
    const int b_cols = total_cols_ - a_cols_;
    // Rows without a pivot must have vanished entirely.
    for (size_t r = rank_; r < m_.size(); ++r)
        for (int c = a_cols_; c < total_cols_; ++c)
            if (!m_[r][c].is_zero()) return std::nullopt;

    ScalarMatrix x(a_cols_, ScalarVector(b_cols, Scalar()));
    for (int c = 0; c < b_cols; ++c) {
        ScalarVector col = back_substitute(a_cols_ + c);
        for (int r = 0; r < a_cols_; ++r) x[r][c] = col[r];
    }
    return x;
}

int matrix_rank(const ScalarMatrix& a) { return Echelon(a).rank(); }

std::vector<ScalarVector> kernel_basis(const ScalarMatrix& a) { return Echelon(a).kernel(); }

ScalarMatrix matrix_inverse(const ScalarMatrix& a) {
    const size_t n = a.size();
    ScalarMatrix id(n, ScalarVector(n, Scalar()));
    for (size_t i = 0; i < n; ++i) id[i][i] = Scalar(1);
    Echelon e(a, id);
    if (e.rank() != static_cast<int>(n)) throw std::domain_error("matrix is singular");
    auto x = e.solve();
    if (!x) throw std::domain_error("matrix is singular");
    return *x;
}

ScalarMatrix matrix_product(const ScalarMatrix& a, const ScalarMatrix& b) {
    if (a.empty() || b.empty()) return {};
    const size_t n = a.size(), k = b.size(), m = b[0].size();
    ScalarMatrix r(n, ScalarVector(m, Scalar()));
    for (size_t i = 0; i < n; ++i)
        for (size_t t = 0; t < k; ++t) {
            if (a[i][t].is_zero()) continue;
            for (size_t j = 0; j < m; ++j) {
                if (b[t][j].is_zero()) continue;
                r[i][j] += a[i][t] * b[t][j];
            }
        }
    return r;
}

bool is_symmetric(const ScalarMatrix& a) {
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = i + 1; j < a.size(); ++j)
            if (!(a[i][j] == a[j][i])) return false;
    return true;
}

std::vector<int> symmetric_pivot_set(const ScalarMatrix& a) {
    if (!is_symmetric(a)) throw std::invalid_argument("symmetric_pivot_set: matrix not symmetric");
    const int n = static_cast<int>(a.size());
    ScalarMatrix w = a;
    std::vector<bool> active(n, true);
    std::vector<int> chosen;

    auto schur_update_1 = [&](int d) {
        const Scalar piv = w[d][d];
        for (int i = 0; i < n; ++i) {
            if (!active[i] || i == d) continue;
            for (int j = 0; j < n; ++j) {
                if (!active[j] || j == d) continue;
                w[i][j] -= w[i][d] * w[d][j] / piv;
            }
        }
        active[d] = false;
    };
    auto schur_update_2 = [&](int p, int q) {
        // Block [[0, s],[s, 0]] with s != 0; its inverse swaps the legs.
        const Scalar s = w[p][q];
        for (int i = 0; i < n; ++i) {
            if (!active[i] || i == p || i == q) continue;
            for (int j = 0; j < n; ++j) {
                if (!active[j] || j == p || j == q) continue;
                w[i][j] -= (w[i][p] * w[q][j] + w[i][q] * w[p][j]) / s;
            }
        }
        active[p] = active[q] = false;
    };

    while (true) {
        int d = -1;
        for (int i = 0; i < n && d < 0; ++i)
            if (active[i] && !w[i][i].is_zero()) d = i;
        if (d >= 0) {
            chosen.push_back(d);
            schur_update_1(d);
            continue;
        }
        int p = -1, q = -1;
        for (int i = 0; i < n && p < 0; ++i) {
            if (!active[i]) continue;
            for (int j = i + 1; j < n; ++j)
                if (active[j] && !w[i][j].is_zero()) {
                    p = i;
                    q = j;
                    break;
                }
        }
        if (p < 0) break;  // remaining block is zero
        chosen.push_back(p);
        chosen.push_back(q);
        schur_update_2(p, q);
    }
    std::sort(chosen.begin(), chosen.end());
    return chosen;
}

}  // namespace qloop
