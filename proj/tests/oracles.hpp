#pragma once

// Independent oracles for the test suite.  Everything here recomputes
// expected values from first principles, without ProjectiveLine, SesquiForm,
// or the structure-constant machinery: plain integer row reduction over
// prime fields, exhaustive unimodular-pair counting, and closed formulas.

#include <cstdint>
#include <numeric>
#include <vector>

#include "ringline/ring.hpp"

namespace oracles {

// Row-reduced enumeration of all k-dimensional subspaces of F_p^n: each
// subspace appears exactly once as the row space of its unique RREF basis.
struct SubspaceEnumerator {
    int n, k;
    std::int64_t p;
    std::vector<std::vector<std::vector<int>>> bases;  // each k x n, entries mod p

    SubspaceEnumerator(int n_, int k_, std::int64_t p_) : n(n_), k(k_), p(p_) {
        std::vector<int> pivots;
        choose_pivots(0, pivots);
    }

private:
    void choose_pivots(int start, std::vector<int>& pivots) {
        if (static_cast<int>(pivots.size()) == k) {
            fill_free(pivots);
            return;
        }
        for (int c = start; c <= n - (k - static_cast<int>(pivots.size())); ++c) {
            pivots.push_back(c);
            choose_pivots(c + 1, pivots);
            pivots.pop_back();
        }
    }
    // Free entries: row r may be nonzero at columns right of pivots[r] that
    // are not pivot columns themselves.
    void fill_free(const std::vector<int>& pivots) {
        std::vector<std::pair<int, int>> free_cells;
        std::vector<bool> is_pivot(n, false);
        for (int c : pivots) is_pivot[c] = true;
        for (int r = 0; r < k; ++r)
            for (int c = pivots[r] + 1; c < n; ++c)
                if (!is_pivot[c]) free_cells.emplace_back(r, c);
        std::vector<std::vector<int>> m(k, std::vector<int>(n, 0));
        for (int r = 0; r < k; ++r) m[r][pivots[r]] = 1;
        std::uint64_t total = 1;
        for (std::size_t i = 0; i < free_cells.size(); ++i) total *= p;
        for (std::uint64_t code = 0; code < total; ++code) {
            std::uint64_t c = code;
            for (const auto& [r, col] : free_cells) {
                m[r][col] = static_cast<int>(c % p);
                c /= p;
            }
            bases.push_back(m);
        }
    }
};

// Gaussian binomial [n choose k]_q.
inline std::uint64_t gaussian_binomial(int n, int k, std::uint64_t q) {
    // prod_{i=0}^{k-1} (q^(n-i) - 1) / (q^(i+1) - 1), exact at every step
    std::uint64_t num = 1, den = 1;
    auto qpow = [&](int e) {
        std::uint64_t r = 1;
        while (e-- > 0) r *= q;
        return r;
    };
    for (int i = 0; i < k; ++i) {
        num *= qpow(n - i) - 1;
        den *= qpow(i + 1) - 1;
        std::uint64_t g = std::gcd(num, den);
        num /= g;
        den /= g;
    }
    return num / den;
}

// A subspace is isotropic for the bilinear form with matrix J (n x n, mod p)
// when every pair of basis rows pairs to zero.
inline bool isotropic_subspace(const std::vector<std::vector<int>>& basis,
                               const std::vector<std::vector<int>>& J, std::int64_t p) {
    int n = static_cast<int>(J.size());
    for (const auto& u : basis)
        for (const auto& v : basis) {
            std::int64_t s = 0;
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j) s += static_cast<std::int64_t>(u[i]) * J[i][j] * v[j];
            if (s % p != 0) return false;
        }
    return true;
}

// Points of the projective line over a finite ring, counted from scratch:
// generators are the pairs admitting a left inverse, and each point has
// exactly |units| generators.
inline std::uint64_t unimodular_point_count(const ringline::RingPtr& A) {
    using ringline::Elem;
    std::uint64_t n = A->element_count();
    std::vector<Elem> elems;
    elems.reserve(n);
    for (std::uint64_t i = 0; i < n; ++i) elems.push_back(A->element_at(i));
    std::uint64_t units = 0;
    for (const Elem& e : elems)
        if (e.is_unit()) ++units;
    Elem one = A->one();
    std::uint64_t unimodular = 0;
    for (const Elem& v1 : elems)
        for (const Elem& v2 : elems) {
            bool ok = false;
            for (const Elem& w1 : elems) {
                for (const Elem& w2 : elems)
                    if (A->eq(w1 * v1 + w2 * v2, one)) {
                        ok = true;
                        break;
                    }
                if (ok) break;
            }
            if (ok) ++unimodular;
        }
    return unimodular / units;
}

// Dedekind psi: |P^1(Z/n)| = n * prod_{p | n} (1 + 1/p).
inline std::uint64_t dedekind_psi(std::uint64_t n) {
    std::uint64_t result = n;
    for (std::uint64_t p = 2; p * p <= n; ++p)
        if (n % p == 0) {
            result = result / p * (p + 1);
            while (n % p == 0) n /= p;
        }
    if (n > 1) result = result / n * (n + 1);
    return result;
}

}  // namespace oracles
