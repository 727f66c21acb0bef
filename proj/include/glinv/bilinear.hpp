#pragma once

#include "glinv/matrix.hpp"

#include <cstdint>

namespace glinv {

struct TaitStructure;  // diagram.hpp

/// Signature by exact congruence diagonalization over the rationals.
/// sig(empty) = 0.
int signature(const SymIntMatrix& m);

/// Exact determinant (fraction-free Bareiss). det(empty) = 1.
Int determinant(const SymIntMatrix& m);

/// |det|.
Int det_invariant(const SymIntMatrix& m);

/// dim - rank over Q.
int nullity(const SymIntMatrix& m);

bool is_perfect_square(const Int& d);

/// Necessary condition for a totally isotropic subspace of dimension u_dim:
/// 2*u_dim <= dim - |sig| + nullity.
bool isotropy_bound_check(const SymIntMatrix& m, int u_dim);

/// Deterministic unimodular matrix (det = +-1) with small entries.
/// Test utility for congruence-invariance checks.
SquareIntMatrix random_unimodular(int n, std::uint64_t seed);

/// Goeritz matrix of a Tait structure: the full (n+1)x(n+1) matrix G' over
/// the white faces X_0..X_n has g_ij = -sum(eta_c) over crossings joining
/// X_i, X_j and zero row sums; the row/column `deleted` (default X_0) is
/// removed.
SymIntMatrix goeritz_matrix(const TaitStructure& t, int deleted = 0);

/// The undeleted matrix G'. Row sums are zero, det G' = 0.
SymIntMatrix goeritz_matrix_full(const TaitStructure& t);

}  // namespace glinv
