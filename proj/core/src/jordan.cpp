#include "ringline/jordan.hpp"

#include <array>

#include "ringline/error.hpp"

namespace ringline {

namespace {

Elem half_of(const RingPtr& base) {
    auto h = base->from_int(2).invert();
    if (!h) throw CharacteristicError("2 is not invertible in " + base->str());
    return *h;
}

// Structure-constant slice c(i,j,*) as a coordinate vector.
ElemVec slice(const FiniteAlgebra& a, int i, int j) {
    ElemVec v;
    v.reserve(a.dim);
    for (int k = 0; k < a.dim; ++k) v.push_back(a.c(i, j, k));
    return v;
}

ElemVec tslice(const TripleSystem& t, int i, int j, int k) {
    ElemVec v;
    v.reserve(t.dim);
    for (int l = 0; l < t.dim; ++l) v.push_back(t.t(i, j, k, l));
    return v;
}

std::string witness(const ElemVec& lhs, const ElemVec& rhs) {
    return "lhs=" + vec_str(lhs) + " rhs=" + vec_str(rhs);
}

}  // namespace

Elem random_scalar(const RingPtr& base, std::mt19937_64& rng) {
    if (base->finite()) return base->element_at(rng() % base->element_count());
    long num = static_cast<long>(rng() % 19) - 9;
    switch (base->kind()) {
        case RingKind::Rationals: {
            long den = 1 + static_cast<long>(rng() % 3);
            return base->from_mpq(mpq_class(num, den));
        }
        case RingKind::Gaussian: {
            long im = static_cast<long>(rng() % 19) - 9;
            Elem i = *base->complex_unit();
            return base->from_int(num) + base->from_int(im) * i;
        }
        default: return base->from_int(num);
    }
}

ElemVec random_vector(const RingPtr& base, int dim, std::mt19937_64& rng) {
    ElemVec v;
    v.reserve(dim);
    for (int i = 0; i < dim; ++i) v.push_back(random_scalar(base, rng));
    return v;
}

CheckReport check_associative(const FiniteAlgebra& a) {
    CheckReport report;
    report.note("associativity");
    for (int i = 0; i < a.dim; ++i)
        for (int j = 0; j < a.dim; ++j)
            for (int k = 0; k < a.dim; ++k) {
                ElemVec lhs = a.mul(slice(a, i, j), a.basis(k));
                ElemVec rhs = a.mul(a.basis(i), slice(a, j, k));
                if (!vec_eq(lhs, rhs))
                    report.fail("associativity", {i, j, k}, witness(lhs, rhs));
            }
    return report;
}

CheckReport check_commutative(const FiniteAlgebra& a) {
    CheckReport report;
    report.note("commutativity");
    for (int i = 0; i < a.dim; ++i)
        for (int j = i + 1; j < a.dim; ++j)
            for (int k = 0; k < a.dim; ++k)
                if (a.c(i, j, k) != a.c(j, i, k))
                    report.fail("commutativity", {i, j},
                                witness(slice(a, i, j), slice(a, j, i)));
    return report;
}

CheckReport check_jordan(const FiniteAlgebra& a, std::uint64_t seed, int random_pairs) {
    CheckReport report;
    report.note("J1/commutativity");
    for (int i = 0; i < a.dim; ++i)
        for (int j = i + 1; j < a.dim; ++j)
            for (int k = 0; k < a.dim; ++k)
                if (a.c(i, j, k) != a.c(j, i, k))
                    report.fail("J1/commutativity", {i, j},
                                witness(slice(a, i, j), slice(a, j, i)));

    // Full linearization of x(x^2 y) = x^2 (xy) in the cubic slot: summed over
    // the six orderings of (x1,x2,x3), evaluated on every basis 4-tuple.
    report.note("J2/linearized");
    static constexpr std::array<std::array<int, 3>, 6> perms = {
        {{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}}};
    for (int x1 = 0; x1 < a.dim; ++x1)
        for (int x2 = 0; x2 < a.dim; ++x2)
            for (int x3 = 0; x3 < a.dim; ++x3)
                for (int y = 0; y < a.dim; ++y) {
                    std::array<int, 3> xs = {x1, x2, x3};
                    ElemVec acc = vec_zero(a.base, a.dim);
                    for (const auto& p : perms) {
                        ElemVec sq = slice(a, xs[p[1]], xs[p[2]]);
                        ElemVec lhs = a.mul(a.basis(xs[p[0]]), a.mul(sq, a.basis(y)));
                        ElemVec rhs = a.mul(sq, slice(a, xs[p[0]], y));
                        acc = vec_add(acc, vec_sub(lhs, rhs));
                    }
                    if (!vec_is_zero(acc))
                        report.fail("J2/linearized", {x1, x2, x3, y},
                                    "sum=" + vec_str(acc));
                }

    report.note("J2/direct");
    auto direct = [&](const ElemVec& x, const ElemVec& y, std::vector<int> where) {
        ElemVec sq = a.mul(x, x);
        ElemVec lhs = a.mul(x, a.mul(sq, y));
        ElemVec rhs = a.mul(sq, a.mul(x, y));
        if (!vec_eq(lhs, rhs)) report.fail("J2/direct", std::move(where), witness(lhs, rhs));
    };
    for (int i = 0; i < a.dim; ++i)
        for (int j = 0; j < a.dim; ++j) direct(a.basis(i), a.basis(j), {i, j});
    std::mt19937_64 rng(seed);
    for (int n = 0; n < random_pairs; ++n)
        direct(random_vector(a.base, a.dim, rng), random_vector(a.base, a.dim, rng), {n});
    return report;
}

FiniteAlgebra jordan_from_assoc(const FiniteAlgebra& assoc) {
    Elem half = half_of(assoc.base);
    CheckReport ok = check_associative(assoc);
    if (!ok.pass()) throw Error("input product is not associative: " + ok.str());
    FiniteAlgebra out = FiniteAlgebra::zero(assoc.base, assoc.dim);
    out.labels = assoc.labels;
    for (int i = 0; i < assoc.dim; ++i)
        for (int j = 0; j < assoc.dim; ++j)
            for (int k = 0; k < assoc.dim; ++k)
                out.c(i, j, k) = (assoc.c(i, j, k) + assoc.c(j, i, k)) * half;
    return out;
}

TripleSystem jts_from_jordan(const FiniteAlgebra& jordan) {
    Elem half = half_of(jordan.base);
    TripleSystem out = TripleSystem::zero(jordan.base, jordan.dim);
    out.labels = jordan.labels;
    for (int i = 0; i < jordan.dim; ++i)
        for (int j = 0; j < jordan.dim; ++j)
            for (int k = 0; k < jordan.dim; ++k) {
                ElemVec v = jordan.mul(jordan.basis(i), slice(jordan, j, k));
                v = vec_sub(v, jordan.mul(jordan.basis(j), slice(jordan, i, k)));
                v = vec_add(v, jordan.mul(slice(jordan, i, j), jordan.basis(k)));
                for (int l = 0; l < jordan.dim; ++l) out.t(i, j, k, l) = v[l] * half;
            }
    return out;
}

TripleSystem sandwich_triple(const FiniteAlgebra& assoc) {
    TripleSystem out = TripleSystem::zero(assoc.base, assoc.dim);
    out.labels = assoc.labels;
    for (int i = 0; i < assoc.dim; ++i)
        for (int j = 0; j < assoc.dim; ++j)
            for (int k = 0; k < assoc.dim; ++k) {
                ElemVec v = vec_add(assoc.mul(slice(assoc, i, j), assoc.basis(k)),
                                    assoc.mul(slice(assoc, k, j), assoc.basis(i)));
                for (int l = 0; l < assoc.dim; ++l) out.t(i, j, k, l) = v[l];
            }
    return out;
}

TripleSystem half_sandwich_triple(const FiniteAlgebra& assoc) {
    return scale_triple(sandwich_triple(assoc), half_of(assoc.base));
}

TripleSystem scale_triple(const TripleSystem& t, const Elem& scalar) {
    TripleSystem out = t;
    for (Elem& e : out.tensor) e = e * scalar;
    return out;
}

FiniteAlgebra scale_product(const FiniteAlgebra& a, const Elem& scalar) {
    FiniteAlgebra out = a;
    for (Elem& e : out.tensor) e = e * scalar;
    return out;
}

TripleSystem rect_triple(int p, int q, const RingPtr& base) {
    if (p < 1 || q < 1) throw Error("matrix shape must be positive");
    int dim = p * q;
    TripleSystem out = TripleSystem::zero(base, dim);
    Elem one = base->one();
    for (int a = 0; a < p; ++a)
        for (int b = 0; b < q; ++b) {
            out.labels.push_back("E" + std::to_string(a + 1) + std::to_string(b + 1));
            for (int c = 0; c < p; ++c)
                for (int d = 0; d < q; ++d)
                    for (int e = 0; e < p; ++e)
                        for (int f = 0; f < q; ++f) {
                            // E_ab (E_cd)^t E_ef + E_ef (E_cd)^t E_ab
                            int i = a * q + b, j = c * q + d, k = e * q + f;
                            if (b == d && c == e) {
                                Elem& s = out.t(i, j, k, a * q + f);
                                s = s + one;
                            }
                            if (d == f && c == a) {
                                Elem& s = out.t(i, j, k, e * q + b);
                                s = s + one;
                            }
                        }
        }
    return out;
}

CheckReport check_jts(const TripleSystem& t, std::uint64_t budget, std::uint64_t seed) {
    CheckReport report;
    report.note("JT1/outer-symmetry");
    for (int i = 0; i < t.dim; ++i)
        for (int j = 0; j < t.dim; ++j)
            for (int k = i + 1; k < t.dim; ++k)
                for (int l = 0; l < t.dim; ++l)
                    if (t.t(i, j, k, l) != t.t(k, j, i, l))
                        report.fail("JT1/outer-symmetry", {i, j, k},
                                    witness(tslice(t, i, j, k), tslice(t, k, j, i)));

    report.note("JT2/five-term");
    auto five = [&](const ElemVec& a, const ElemVec& b, const ElemVec& x, const ElemVec& y,
                    const ElemVec& z, std::vector<int> where) {
        ElemVec lhs = t.eval(a, b, t.eval(x, y, z));
        ElemVec rhs = t.eval(t.eval(a, b, x), y, z);
        rhs = vec_sub(rhs, t.eval(x, t.eval(b, a, y), z));
        rhs = vec_add(rhs, t.eval(x, y, t.eval(a, b, z)));
        if (!vec_eq(lhs, rhs)) report.fail("JT2/five-term", std::move(where), witness(lhs, rhs));
    };
    std::uint64_t d = t.dim, full = d * d * d * d * d;
    if (full <= budget) {
        for (int a = 0; a < t.dim; ++a)
            for (int b = 0; b < t.dim; ++b)
                for (int x = 0; x < t.dim; ++x)
                    for (int y = 0; y < t.dim; ++y)
                        for (int z = 0; z < t.dim; ++z)
                            five(t.basis(a), t.basis(b), t.basis(x), t.basis(y), t.basis(z),
                                 {a, b, x, y, z});
    } else {
        std::mt19937_64 rng(seed);
        for (int a = 0; a < t.dim; ++a)
            for (int b = 0; b < t.dim; ++b)
                for (int x = 0; x < t.dim; ++x)
                    five(t.basis(a), t.basis(b), t.basis(x),
                         random_vector(t.base, t.dim, rng), random_vector(t.base, t.dim, rng),
                         {a, b, x});
    }
    return report;
}

JordanPairData rect_pair(int p, int q, const RingPtr& base) {
    if (p < 1 || q < 1) throw Error("matrix shape must be positive");
    JordanPairData out;
    out.base = base;
    out.dim_plus = p * q;
    out.dim_minus = q * p;
    Elem zero = base->zero(), one = base->one();
    auto build = [&](int rows, int cols) {
        // V = M(rows,cols), W = M(cols,rows), T(x,y,z) = xyz + zyx in V.
        int dv = rows * cols;
        std::vector<Elem> tensor(static_cast<std::size_t>(dv) * dv * dv * dv, zero);
        auto at = [&](int i, int j, int k, int l) -> Elem& {
            return tensor[((static_cast<std::size_t>(i) * dv + j) * dv + k) * dv + l];
        };
        for (int a = 0; a < rows; ++a)
            for (int b = 0; b < cols; ++b)
                for (int c = 0; c < cols; ++c)
                    for (int d = 0; d < rows; ++d)
                        for (int e = 0; e < rows; ++e)
                            for (int f = 0; f < cols; ++f) {
                                // E_ab E_cd E_ef + E_ef E_cd E_ab with E_cd in W
                                int i = a * cols + b, j = c * rows + d, k = e * cols + f;
                                if (b == c && d == e) {
                                    Elem& s = at(i, j, k, a * cols + f);
                                    s = s + one;
                                }
                                if (f == c && d == a) {
                                    Elem& s = at(i, j, k, e * cols + b);
                                    s = s + one;
                                }
                            }
        return tensor;
    };
    out.t_plus = build(p, q);
    out.t_minus = build(q, p);
    return out;
}

JordanPairData jts_to_pair(const TripleSystem& t) {
    JordanPairData out;
    out.base = t.base;
    out.dim_plus = t.dim;
    out.dim_minus = t.dim;
    out.t_plus = t.tensor;
    out.t_minus = t.tensor;
    return out;
}

CheckReport check_jordan_pair(const JordanPairData& p, std::uint64_t budget,
                              std::uint64_t seed) {
    CheckReport report;
    const RingPtr& K = p.base;
    int dp = p.dim_plus, dm = p.dim_minus;
    report.note("LJP1/outer-symmetry");
    auto sym = [&](const std::vector<Elem>& tensor, int d1, int d2, const char* tag) {
        for (int i = 0; i < d1; ++i)
            for (int j = 0; j < d2; ++j)
                for (int k = i + 1; k < d1; ++k)
                    for (int l = 0; l < d1; ++l) {
                        const Elem& lhs =
                            tensor[((static_cast<std::size_t>(i) * d2 + j) * d1 + k) * d1 + l];
                        const Elem& rhs =
                            tensor[((static_cast<std::size_t>(k) * d2 + j) * d1 + i) * d1 + l];
                        if (lhs != rhs)
                            report.fail(tag, {i, j, k, l}, lhs.str() + " != " + rhs.str());
                    }
    };
    sym(p.t_plus, dp, dm, "LJP1/outer-symmetry");
    sym(p.t_minus, dm, dp, "LJP1/outer-symmetry");

    report.note("LJP2/five-term");
    // One sign of the identity; `flip` swaps the roles of the two modules.
    auto five = [&](bool flip, const ElemVec& a, const ElemVec& b, const ElemVec& x,
                    const ElemVec& y, const ElemVec& z, std::vector<int> where) {
        auto Tsame = [&](const ElemVec& u, const ElemVec& v, const ElemVec& w) {
            return flip ? p.eval_minus(u, v, w) : p.eval_plus(u, v, w);
        };
        auto Topp = [&](const ElemVec& u, const ElemVec& v, const ElemVec& w) {
            return flip ? p.eval_plus(u, v, w) : p.eval_minus(u, v, w);
        };
        ElemVec lhs = Tsame(a, b, Tsame(x, y, z));
        ElemVec rhs = Tsame(Tsame(a, b, x), y, z);
        rhs = vec_sub(rhs, Tsame(x, Topp(b, a, y), z));
        rhs = vec_add(rhs, Tsame(x, y, Tsame(a, b, z)));
        if (!vec_eq(lhs, rhs))
            report.fail("LJP2/five-term", std::move(where), witness(lhs, rhs));
    };
    std::mt19937_64 rng(seed);
    for (int sign = 0; sign < 2; ++sign) {
        bool flip = sign == 1;
        int d1 = flip ? dm : dp, d2 = flip ? dp : dm;
        std::uint64_t full = static_cast<std::uint64_t>(d1) * d2 * d1 * d2 * d1;
        if (full <= budget) {
            for (int a = 0; a < d1; ++a)
                for (int b = 0; b < d2; ++b)
                    for (int x = 0; x < d1; ++x)
                        for (int y = 0; y < d2; ++y)
                            for (int z = 0; z < d1; ++z)
                                five(flip, vec_basis(K, d1, a), vec_basis(K, d2, b),
                                     vec_basis(K, d1, x), vec_basis(K, d2, y),
                                     vec_basis(K, d1, z), {sign, a, b, x, y, z});
        } else {
            for (int a = 0; a < d1; ++a)
                for (int b = 0; b < d2; ++b)
                    for (int x = 0; x < d1; ++x)
                        five(flip, vec_basis(K, d1, a), vec_basis(K, d2, b),
                             vec_basis(K, d1, x), random_vector(K, d2, rng),
                             random_vector(K, d1, rng), {sign, a, b, x});
        }
    }
    return report;
}

}  // namespace ringline
