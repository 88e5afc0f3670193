#pragma once

#include <optional>
#include <vector>

#include "ringline/ring.hpp"

namespace ringline {

// Dense exact linear algebra over a field K (every nonzero element must be a
// unit).  Matrices are row-major vectors of rows.
using Row = std::vector<Elem>;
using Mat = std::vector<Row>;

Mat mat_identity(const RingPtr& K, int n);
Mat mat_mul(const Mat& a, const Mat& b);
Row mat_apply(const Mat& a, const Row& x);  // a * x (column vector)

// In-place reduced row echelon form; returns the rank and fills pivot
// column indices.
int rref(Mat& m, const RingPtr& K, std::vector<int>* pivots = nullptr);

int mat_rank(Mat m, const RingPtr& K);

// Any particular solution of A x = b, or nullopt when inconsistent.
std::optional<Row> solve(Mat A, Row b, const RingPtr& K);

// Basis of the right kernel {x : A x = 0}.
std::vector<Row> kernel_basis(Mat A, const RingPtr& K);

// Inverse of a square matrix, or nullopt when singular.
std::optional<Mat> mat_inverse(Mat A, const RingPtr& K);

// Coordinates of v in the span of `basis` (vectors of equal length), or
// nullopt when v lies outside the span.
std::optional<Row> in_span(const std::vector<Row>& basis, const Row& v, const RingPtr& K);

}  // namespace ringline
