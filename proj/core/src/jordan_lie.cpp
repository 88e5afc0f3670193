#include "ringline/jordan_lie.hpp"

#include "ringline/error.hpp"

namespace ringline {

namespace {

ElemVec slice3(const RingPtr& base, const std::vector<Elem>& tensor, int dim, int i, int j) {
    (void)base;
    ElemVec v;
    v.reserve(dim);
    for (int k = 0; k < dim; ++k)
        v.push_back(tensor[(static_cast<std::size_t>(i) * dim + j) * dim + k]);
    return v;
}

ElemVec slice4(const std::vector<Elem>& tensor, int dim, int i, int j, int k) {
    ElemVec v;
    v.reserve(dim);
    for (int l = 0; l < dim; ++l)
        v.push_back(tensor[((static_cast<std::size_t>(i) * dim + j) * dim + k) * dim + l]);
    return v;
}

std::string witness(const ElemVec& lhs, const ElemVec& rhs) {
    return "lhs=" + vec_str(lhs) + " rhs=" + vec_str(rhs);
}

// Both sides of the flavor's coupling axiom on the basis triple (i,j,k).
struct CouplingSides {
    ElemVec lhs, rhs;
};

CouplingSides coupling_sides(const TwoProductAlgebra& v, const FiniteAlgebra& br,
                             const FiniteAlgebra& pr, int i, int j, int k) {
    if (v.flavor == Flavor::JordanLie) {
        ElemVec lhs = vec_sub(pr.mul(slice3(v.base, v.product, v.dim, i, j), pr.basis(k)),
                              pr.mul(pr.basis(i), slice3(v.base, v.product, v.dim, j, k)));
        ElemVec rhs = vec_sub(br.mul(br.basis(i), slice3(v.base, v.bracket, v.dim, j, k)),
                              br.mul(slice3(v.base, v.bracket, v.dim, i, j), br.basis(k)));
        return {std::move(lhs), std::move(rhs)};  // rhs = -([[x,y],z] - [x,[y,z]])
    }
    ElemVec lhs = vec_sub(slice4(v.triple, v.dim, i, j, k), slice4(v.triple, v.dim, j, i, k));
    ElemVec rhs = br.mul(slice3(v.base, v.bracket, v.dim, i, j), br.basis(k));
    return {std::move(lhs), std::move(rhs)};
}

void check_lie(CheckReport& report, const FiniteAlgebra& br, const char* tag_anti,
               const char* tag_jacobi) {
    report.note(tag_anti);
    for (int i = 0; i < br.dim; ++i)
        for (int j = i; j < br.dim; ++j)
            for (int k = 0; k < br.dim; ++k)
                if (br.c(i, j, k) != -br.c(j, i, k))
                    report.fail(tag_anti, {i, j}, br.c(i, j, k).str() + " vs " +
                                                      br.c(j, i, k).str());
    report.note(tag_jacobi);
    for (int i = 0; i < br.dim; ++i)
        for (int j = 0; j < br.dim; ++j)
            for (int k = 0; k < br.dim; ++k) {
                ElemVec s = br.mul(slice3(br.base, br.tensor, br.dim, i, j), br.basis(k));
                s = vec_add(s, br.mul(slice3(br.base, br.tensor, br.dim, j, k), br.basis(i)));
                s = vec_add(s, br.mul(slice3(br.base, br.tensor, br.dim, k, i), br.basis(j)));
                if (!vec_is_zero(s)) report.fail(tag_jacobi, {i, j, k}, "sum=" + vec_str(s));
            }
}

}  // namespace

FiniteAlgebra TwoProductAlgebra::bracket_algebra() const {
    FiniteAlgebra a = FiniteAlgebra::zero(base, dim);
    a.tensor = bracket;
    a.labels = labels;
    return a;
}

FiniteAlgebra TwoProductAlgebra::product_algebra() const {
    if (flavor != Flavor::JordanLie) throw Error("no bilinear product in this flavor");
    FiniteAlgebra a = FiniteAlgebra::zero(base, dim);
    a.tensor = product;
    a.labels = labels;
    return a;
}

TripleSystem TwoProductAlgebra::triple_system() const {
    if (flavor != Flavor::LieJordan) throw Error("no trilinear product in this flavor");
    TripleSystem t = TripleSystem::zero(base, dim);
    t.tensor = triple;
    t.labels = labels;
    return t;
}

std::string CouplingResult::str() const {
    switch (kind) {
        case Kind::Constant: return "C=" + value.str();
        case Kind::Inconsistent: return "inconsistent";
        case Kind::Indeterminate: return "indeterminate (C=0)";
    }
    return "";
}

CouplingResult detect_coupling(const TwoProductAlgebra& v) {
    FiniteAlgebra br = v.bracket_algebra();
    FiniteAlgebra pr =
        v.flavor == Flavor::JordanLie ? v.product_algebra() : FiniteAlgebra::zero(v.base, v.dim);
    std::optional<Elem> cand;
    for (int i = 0; i < v.dim && !cand; ++i)
        for (int j = 0; j < v.dim && !cand; ++j)
            for (int k = 0; k < v.dim && !cand; ++k) {
                CouplingSides s = coupling_sides(v, br, pr, i, j, k);
                for (int l = 0; l < v.dim; ++l) {
                    if (auto inv = s.rhs[l].invert()) {
                        cand = s.lhs[l] * *inv;
                        break;
                    }
                }
            }
    if (!cand) {
        // Right side vanished identically: any C works iff the left side does too.
        for (int i = 0; i < v.dim; ++i)
            for (int j = 0; j < v.dim; ++j)
                for (int k = 0; k < v.dim; ++k) {
                    CouplingSides s = coupling_sides(v, br, pr, i, j, k);
                    if (!vec_is_zero(s.lhs)) return {CouplingResult::Kind::Inconsistent, v.base->zero()};
                }
        return {CouplingResult::Kind::Indeterminate, v.base->zero()};
    }
    // Independent verification pass over every triple.
    for (int i = 0; i < v.dim; ++i)
        for (int j = 0; j < v.dim; ++j)
            for (int k = 0; k < v.dim; ++k) {
                CouplingSides s = coupling_sides(v, br, pr, i, j, k);
                if (!vec_eq(s.lhs, vec_scale(*cand, s.rhs)))
                    return {CouplingResult::Kind::Inconsistent, v.base->zero()};
            }
    return {CouplingResult::Kind::Constant, *cand};
}

CheckReport check_jordan_lie(const TwoProductAlgebra& v, const Elem& coupling,
                             std::uint64_t seed) {
    if (v.flavor != Flavor::JordanLie) throw Error("expected the Jordan-Lie flavor");
    CheckReport report;
    FiniteAlgebra br = v.bracket_algebra(), pr = v.product_algebra();
    check_lie(report, br, "JL1/antisymmetry", "JL1/jacobi");
    report.merge(check_jordan(pr, seed), "JL2/");
    report.note("JL3/derivation");
    for (int i = 0; i < v.dim; ++i)
        for (int j = 0; j < v.dim; ++j)
            for (int k = 0; k < v.dim; ++k) {
                ElemVec lhs = br.mul(br.basis(i), slice3(v.base, v.product, v.dim, j, k));
                ElemVec rhs = pr.mul(slice3(v.base, v.bracket, v.dim, i, j), pr.basis(k));
                rhs = vec_add(rhs, pr.mul(pr.basis(j), slice3(v.base, v.bracket, v.dim, i, k)));
                if (!vec_eq(lhs, rhs))
                    report.fail("JL3/derivation", {i, j, k}, witness(lhs, rhs));
            }
    report.note("JL4/coupling");
    for (int i = 0; i < v.dim; ++i)
        for (int j = 0; j < v.dim; ++j)
            for (int k = 0; k < v.dim; ++k) {
                CouplingSides s = coupling_sides(v, br, pr, i, j, k);
                ElemVec rhs = vec_scale(coupling, s.rhs);
                if (!vec_eq(s.lhs, rhs)) report.fail("JL4/coupling", {i, j, k}, witness(s.lhs, rhs));
            }
    return report;
}

CheckReport check_lie_jordan(const TwoProductAlgebra& v, const Elem& coupling,
                             std::uint64_t budget, std::uint64_t seed) {
    if (v.flavor != Flavor::LieJordan) throw Error("expected the Lie-Jordan flavor");
    CheckReport report;
    FiniteAlgebra br = v.bracket_algebra();
    TripleSystem ts = v.triple_system();
    check_lie(report, br, "LJ1/antisymmetry", "LJ1/jacobi");
    report.merge(check_jts(ts, budget, seed), "LJ2/");
    report.note("LJ3/derivation");
    auto derivation = [&](const ElemVec& x, const ElemVec& u, const ElemVec& w1,
                          const ElemVec& w2, std::vector<int> where) {
        ElemVec lhs = br.mul(x, ts.eval(u, w1, w2));
        ElemVec rhs = ts.eval(br.mul(x, u), w1, w2);
        rhs = vec_add(rhs, ts.eval(u, br.mul(x, w1), w2));
        rhs = vec_add(rhs, ts.eval(u, w1, br.mul(x, w2)));
        if (!vec_eq(lhs, rhs)) report.fail("LJ3/derivation", std::move(where), witness(lhs, rhs));
    };
    std::uint64_t d = v.dim, full = d * d * d * d;
    if (full <= budget) {
        for (int x = 0; x < v.dim; ++x)
            for (int u = 0; u < v.dim; ++u)
                for (int w1 = 0; w1 < v.dim; ++w1)
                    for (int w2 = 0; w2 < v.dim; ++w2)
                        derivation(br.basis(x), br.basis(u), br.basis(w1), br.basis(w2),
                                   {x, u, w1, w2});
    } else {
        std::mt19937_64 rng(seed);
        for (int x = 0; x < v.dim; ++x)
            for (int u = 0; u < v.dim; ++u)
                for (int w1 = 0; w1 < v.dim; ++w1)
                    derivation(br.basis(x), br.basis(u), br.basis(w1),
                               random_vector(v.base, v.dim, rng), {x, u, w1});
    }
    report.note("LJ4/coupling");
    FiniteAlgebra unused = FiniteAlgebra::zero(v.base, v.dim);
    for (int i = 0; i < v.dim; ++i)
        for (int j = 0; j < v.dim; ++j)
            for (int k = 0; k < v.dim; ++k) {
                CouplingSides s = coupling_sides(v, br, unused, i, j, k);
                ElemVec rhs = vec_scale(coupling, s.rhs);
                if (!vec_eq(s.lhs, rhs)) report.fail("LJ4/coupling", {i, j, k}, witness(s.lhs, rhs));
            }
    return report;
}

TwoProductAlgebra jordan_lie_from_assoc(const FiniteAlgebra& assoc) {
    FiniteAlgebra sym = jordan_from_assoc(assoc);  // validates associativity and 1/2
    TwoProductAlgebra v;
    v.base = assoc.base;
    v.dim = assoc.dim;
    v.flavor = Flavor::JordanLie;
    v.labels = assoc.labels;
    v.product = sym.tensor;
    v.bracket.reserve(sym.tensor.size());
    for (int i = 0; i < assoc.dim; ++i)
        for (int j = 0; j < assoc.dim; ++j)
            for (int k = 0; k < assoc.dim; ++k)
                v.bracket.push_back(assoc.c(i, j, k) - assoc.c(j, i, k));
    CouplingResult c = detect_coupling(v);
    v.coupling = c.value;
    return v;
}

namespace {

// Shared eigenspace extraction: returns the span context of {a : a* = sign a}.
SpanContext eigenspace(const AlgebraView& view, int sign) {
    const RingPtr& K = view.algebra.base;
    if (!K->two_invertible())
        throw CharacteristicError("eigenspace split needs 2 invertible in " + K->str());
    int d = view.algebra.dim;
    Mat m(d, Row(d, K->zero()));
    for (int col = 0; col < d; ++col)
        for (int row = 0; row < d; ++row) {
            m[row][col] = view.involution[col][row];
            if (row == col) m[row][col] = m[row][col] - K->from_int(sign);
        }
    SpanContext ctx;
    ctx.base = K;
    ctx.basis = kernel_basis(std::move(m), K);
    return ctx;
}

std::vector<std::string> span_labels(const AlgebraView& view, const SpanContext& ctx) {
    std::vector<std::string> labels;
    labels.reserve(ctx.basis.size());
    for (const auto& b : ctx.basis) labels.push_back(view.to_ring(b).str());
    return labels;
}

}  // namespace

TwoProductAlgebra lie_jordan_from_involution(const AlgebraView& view) {
    const RingPtr& K = view.algebra.base;
    SpanContext ctx = eigenspace(view, -1);
    int d = static_cast<int>(ctx.basis.size());
    TwoProductAlgebra v;
    v.base = K;
    v.dim = d;
    v.flavor = Flavor::LieJordan;
    v.labels = span_labels(view, ctx);
    v.bracket.reserve(static_cast<std::size_t>(d) * d * d);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) {
            ElemVec amb = vec_sub(view.algebra.mul(ctx.basis[i], ctx.basis[j]),
                                  view.algebra.mul(ctx.basis[j], ctx.basis[i]));
            ElemVec co = ctx.coords_of(amb, "commutator");
            for (int k = 0; k < d; ++k) v.bracket.push_back(co[k]);
        }
    v.triple.reserve(static_cast<std::size_t>(d) * d * d * d);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j)
            for (int k = 0; k < d; ++k) {
                ElemVec amb = vec_add(
                    view.algebra.mul(view.algebra.mul(ctx.basis[i], ctx.basis[j]), ctx.basis[k]),
                    view.algebra.mul(view.algebra.mul(ctx.basis[k], ctx.basis[j]), ctx.basis[i]));
                ElemVec co = ctx.coords_of(amb, "triple");
                for (int l = 0; l < d; ++l) v.triple.push_back(co[l]);
            }
    v.coupling = K->one();
    return v;
}

TwoProductAlgebra lie_jordan_from_involution(const RingPtr& ring) {
    return lie_jordan_from_involution(as_algebra(ring));
}

TwoProductAlgebra jordan_lie_from_hermitian(const AlgebraView& view) {
    const RingPtr& K = view.algebra.base;
    auto iu = view.ring->complex_unit();
    if (!iu) throw Error("ring has no designated complex unit: " + view.ring->str());
    ElemVec iv = view.to_coords(*iu);
    Elem half = *K->from_int(2).invert();
    SpanContext ctx = eigenspace(view, +1);
    int d = static_cast<int>(ctx.basis.size());
    TwoProductAlgebra v;
    v.base = K;
    v.dim = d;
    v.flavor = Flavor::JordanLie;
    v.labels = span_labels(view, ctx);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) {
            ElemVec xy = view.algebra.mul(ctx.basis[i], ctx.basis[j]);
            ElemVec yx = view.algebra.mul(ctx.basis[j], ctx.basis[i]);
            ElemVec co = ctx.coords_of(vec_scale(half, vec_add(xy, yx)), "jordan product");
            for (int k = 0; k < d; ++k) v.product.push_back(co[k]);
        }
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) {
            ElemVec xy = view.algebra.mul(ctx.basis[i], ctx.basis[j]);
            ElemVec yx = view.algebra.mul(ctx.basis[j], ctx.basis[i]);
            ElemVec co = ctx.coords_of(view.algebra.mul(iv, vec_sub(xy, yx)), "modified bracket");
            for (int k = 0; k < d; ++k) v.bracket.push_back(co[k]);
        }
    CouplingResult c = detect_coupling(v);
    v.coupling = c.value;
    return v;
}

TwoProductAlgebra jordan_lie_from_hermitian(const RingPtr& ring) {
    return jordan_lie_from_hermitian(as_algebra(ring));
}

TwoProductAlgebra to_lie_jordan(const TwoProductAlgebra& v) {
    if (v.flavor != Flavor::JordanLie) throw Error("expected the Jordan-Lie flavor");
    TwoProductAlgebra out;
    out.base = v.base;
    out.dim = v.dim;
    out.flavor = Flavor::LieJordan;
    out.bracket = v.bracket;
    out.triple = jts_from_jordan(v.product_algebra()).tensor;
    out.coupling = v.coupling;
    out.labels = v.labels;
    return out;
}

QuantizedAlgebra quantize(const TwoProductAlgebra& v, const Elem& coupling) {
    if (v.flavor != Flavor::JordanLie) throw Error("quantization expects the Jordan-Lie flavor");
    const RingPtr& K = v.base;
    int d = v.dim, d2 = 2 * d;
    QuantizedAlgebra q;
    q.coupling = coupling;
    q.algebra = FiniteAlgebra::zero(K, d2);
    auto put = [&](int i, int j, int k, const Elem& val) { q.algebra.c(i, j, k) = val; };
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j)
            for (int k = 0; k < d; ++k) {
                std::size_t idx3 = (static_cast<std::size_t>(i) * d + j) * d + k;
                const Elem& dot = v.product[idx3];
                const Elem& br = v.bracket[idx3];
                // (x)(y) = x.y + i[x,y]
                put(i, j, k, dot);
                put(i, j, d + k, br);
                // (x)(iy) = C[x,y] + i(x.y), and the same for (ix)(y)
                put(i, d + j, k, coupling * br);
                put(i, d + j, d + k, dot);
                put(d + i, j, k, coupling * br);
                put(d + i, j, d + k, dot);
                // (ix)(iy) = C(x.y) + iC[x,y]
                put(d + i, d + j, k, coupling * dot);
                put(d + i, d + j, d + k, coupling * br);
            }
    q.conjugation.reserve(d2);
    for (int k = 0; k < d2; ++k) {
        ElemVec col = vec_zero(K, d2);
        col[k] = k < d ? K->one() : -K->one();
        q.conjugation.push_back(std::move(col));
    }
    if (!v.labels.empty()) {
        q.algebra.labels = v.labels;
        for (int k = 0; k < d; ++k) q.algebra.labels.push_back("i*(" + v.labels[k] + ")");
    }
    CheckReport report = check_quantized(q);
    if (!report.pass())
        throw Error("quantized product failed verification: " + report.str());
    return q;
}

CheckReport check_quantized(const QuantizedAlgebra& q) {
    CheckReport report = check_associative(q.algebra);
    const FiniteAlgebra& a = q.algebra;
    auto conj = [&](const ElemVec& x) {
        ElemVec out = vec_zero(a.base, a.dim);
        for (int k = 0; k < a.dim; ++k)
            if (!x[k].is_zero()) out = vec_add(out, vec_scale(x[k], q.conjugation[k]));
        return out;
    };
    report.note("involution/order-2");
    for (int k = 0; k < a.dim; ++k) {
        ElemVec twice = conj(conj(a.basis(k)));
        if (!vec_eq(twice, a.basis(k)))
            report.fail("involution/order-2", {k}, vec_str(twice));
    }
    report.note("involution/antiautomorphism");
    for (int i = 0; i < a.dim; ++i)
        for (int j = 0; j < a.dim; ++j) {
            ElemVec lhs = conj(a.mul(a.basis(i), a.basis(j)));
            ElemVec rhs = a.mul(conj(a.basis(j)), conj(a.basis(i)));
            if (!vec_eq(lhs, rhs))
                report.fail("involution/antiautomorphism", {i, j}, witness(lhs, rhs));
        }
    return report;
}

SourceProbe jordan_source_probe(const TripleSystem& t) {
    // Operators M_xy : z -> T(x,y,z) + T(y,x,z) over basis pairs, flattened to
    // rows; a commutative source product forces M_xy = left multiplication by
    // x.y, so rank(span) <= dim.
    int d = t.dim;
    Mat rows;
    for (int i = 0; i < d; ++i)
        for (int j = i; j < d; ++j) {
            Row r;
            r.reserve(static_cast<std::size_t>(d) * d);
            for (int k = 0; k < d; ++k)
                for (int l = 0; l < d; ++l) r.push_back(t.t(i, j, k, l) + t.t(j, i, k, l));
            rows.push_back(std::move(r));
        }
    SourceProbe probe;
    probe.dim = d;
    probe.operator_rank = mat_rank(std::move(rows), t.base);
    probe.obstructed = probe.operator_rank > d;
    return probe;
}

}  // namespace ringline
