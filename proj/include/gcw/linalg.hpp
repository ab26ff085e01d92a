#pragma once

#include <cstdint>
#include <vector>

#include "gcw/field.hpp"

namespace gcw {

using Row = std::vector<int>;
using Matrix = std::vector<Row>;

// Reduced row echelon form with zero rows removed.
Matrix rref(const FiniteField& f, Matrix m);
int rank(const FiniteField& f, const Matrix& m);
// Basis of {x : m x^T = 0}, i.e. the right kernel, as rows.
Matrix kernel(const FiniteField& f, const Matrix& m);
Matrix multiply(const FiniteField& f, const Matrix& a, const Matrix& b);
Row vec_mat(const FiniteField& f, const Row& v, const Matrix& m);
int det(const FiniteField& f, Matrix m);
// Scale so the first nonzero entry is 1 (projective normal form).
Row normalize_projective(const FiniteField& f, Row v);

// All k-dimensional subspaces of GF(q)^d as RREF k x d matrices, sorted.
std::vector<Matrix> enumerate_subspaces(const FiniteField& f, int d, int k);
// Injective integer key of an RREF matrix (digits base q).
std::uint64_t subspace_key(const FiniteField& f, const Matrix& rref_rows);

}  // namespace gcw
