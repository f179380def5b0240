#ifndef QLOOP_LINALG_HPP
#define QLOOP_LINALG_HPP

#include <optional>
#include <vector>

#include "qloop/scalar.hpp"

namespace qloop {

using ScalarMatrix = std::vector<std::vector<Scalar>>;
using ScalarVector = std::vector<Scalar>;

/// Row echelon form computed fraction-free: rows are cleared of denominators,
/// then eliminated Bareiss-style over Z[v]; divisions by Scalars happen only
/// in back substitution.
class Echelon {
public:
    /// Eliminates [A | B]; pivots are restricted to the columns of A.
    Echelon(const ScalarMatrix& a, const ScalarMatrix& b = {});

    int rank() const { return rank_; }
    const std::vector<int>& pivot_columns() const { return pivot_cols_; }

    /// Basis of the right kernel of A (free variables set to canonical units).
    std::vector<ScalarVector> kernel() const;
    /// Particular solution X of A X = B with free variables zero,
    /// or nullopt when the system is inconsistent.
    std::optional<ScalarMatrix> solve() const;

private:
    ScalarVector back_substitute(int rhs_col) const;
    std::vector<std::vector<IntPoly>> m_;
    std::vector<int> pivot_cols_;
    int rank_ = 0;
    int a_cols_ = 0;
    int total_cols_ = 0;
};

int matrix_rank(const ScalarMatrix& a);
std::vector<ScalarVector> kernel_basis(const ScalarMatrix& a);
/// Throws std::domain_error when the matrix is singular.
ScalarMatrix matrix_inverse(const ScalarMatrix& a);
ScalarMatrix matrix_product(const ScalarMatrix& a, const ScalarMatrix& b);
bool is_symmetric(const ScalarMatrix& a);

/// For symmetric A of rank r, a set S of r indices with A[S][S] invertible,
/// found by symmetric elimination with 1x1 and 2x2 pivots.
/// Throws std::invalid_argument when A is not symmetric.
std::vector<int> symmetric_pivot_set(const ScalarMatrix& a);

}  // namespace qloop

#endif
