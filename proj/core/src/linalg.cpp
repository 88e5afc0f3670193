#include "ringline/linalg.hpp"

namespace ringline {

Mat mat_identity(const RingPtr& K, int n) {
    Mat m(n, Row(n, K->zero()));
    for (int i = 0; i < n; ++i) m[i][i] = K->one();
    return m;
}

Mat mat_mul(const Mat& a, const Mat& b) {
    const auto rows = a.size(), inner = b.size(), cols = b.empty() ? 0 : b[0].size();
    const RingPtr& K = a[0][0].ring();
    Mat out(rows, Row(cols, K->zero()));
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t k = 0; k < inner; ++k) {
            if (a[i][k].is_zero()) continue;
            for (std::size_t j = 0; j < cols; ++j)
                out[i][j] = out[i][j] + a[i][k] * b[k][j];
        }
    return out;
}

Row mat_apply(const Mat& a, const Row& x) {
    const RingPtr& K = x.empty() ? a[0][0].ring() : x[0].ring();
    Row out(a.size(), K->zero());
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < x.size(); ++j)
            if (!a[i][j].is_zero() && !x[j].is_zero()) out[i] = out[i] + a[i][j] * x[j];
    return out;
}

int rref(Mat& m, const RingPtr& K, std::vector<int>* pivots) {
    if (pivots) pivots->clear();
    if (m.empty()) return 0;
    const int rows = static_cast<int>(m.size());
    const int cols = static_cast<int>(m[0].size());
    int rank = 0;
    for (int col = 0; col < cols && rank < rows; ++col) {
        int pivot = -1;
        for (int r = rank; r < rows; ++r)
            if (!m[r][col].is_zero()) { pivot = r; break; }
        if (pivot < 0) continue;
        std::swap(m[rank], m[pivot]);
        auto inv = m[rank][col].invert();
        if (!inv) throw Error("rref: non-invertible pivot; scalars must form a field");
        for (int j = col; j < cols; ++j) m[rank][j] = *inv * m[rank][j];
        for (int r = 0; r < rows; ++r) {
            if (r == rank || m[r][col].is_zero()) continue;
            Elem f = m[r][col];
            for (int j = col; j < cols; ++j) m[r][j] = m[r][j] - f * m[rank][j];
        }
        if (pivots) pivots->push_back(col);
        ++rank;
    }
    return rank;
}

int mat_rank(Mat m, const RingPtr& K) { return rref(m, K); }

std::optional<Row> solve(Mat A, Row b, const RingPtr& K) {
    const int rows = static_cast<int>(A.size());
    const int cols = rows ? static_cast<int>(A[0].size()) : 0;
    for (int i = 0; i < rows; ++i) A[i].push_back(b[i]);
    std::vector<int> pivots;
    rref(A, K, &pivots);
    // A pivot in the augmented column signals inconsistency.
    for (int p : pivots)
        if (p == cols) return std::nullopt;
    Row x(cols, K->zero());
    for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = A[r][cols];
    return x;
}

std::vector<Row> kernel_basis(Mat A, const RingPtr& K) {
    const int rows = static_cast<int>(A.size());
    const int cols = rows ? static_cast<int>(A[0].size()) : 0;
    std::vector<int> pivots;
    int rank = rref(A, K, &pivots);
    std::vector<bool> is_pivot(cols, false);
    for (int p : pivots) is_pivot[p] = true;
    std::vector<Row> basis;
    for (int free = 0; free < cols; ++free) {
        if (is_pivot[free]) continue;
        Row v(cols, K->zero());
        v[free] = K->one();
        for (int r = 0; r < rank; ++r) v[pivots[r]] = -A[r][free];
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<Mat> mat_inverse(Mat A, const RingPtr& K) {
    const int n = static_cast<int>(A.size());
    for (int i = 0; i < n; ++i) {
        Row id(n, K->zero());
        id[i] = K->one();
        A[i].insert(A[i].end(), id.begin(), id.end());
    }
    std::vector<int> pivots;
    int rank = rref(A, K, &pivots);
    if (rank < n) return std::nullopt;
    for (int p : pivots)
        if (p >= n) return std::nullopt;
    Mat inv(n, Row(n, K->zero()));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) inv[i][j] = A[i][n + j];
    return inv;
}

std::optional<Row> in_span(const std::vector<Row>& basis, const Row& v, const RingPtr& K) {
    if (basis.empty()) {
        for (const auto& c : v)
            if (!c.is_zero()) return std::nullopt;
        return Row{};
    }
    // Columns of A are the basis vectors; solve A c = v.
    const int dim = static_cast<int>(basis[0].size());
    const int m = static_cast<int>(basis.size());
    Mat A(dim, Row(m, K->zero()));
    for (int j = 0; j < m; ++j)
        for (int i = 0; i < dim; ++i) A[i][j] = basis[j][i];
    return solve(std::move(A), v, K);
}

}  // namespace ringline
