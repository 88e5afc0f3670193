#include <doctest.h>

#include <string>
#include <variant>

#include "ringline/error.hpp"
#include "ringline/jordan_lie.hpp"
#include "ringline/parse.hpp"

using namespace ringline;

namespace {

bool mentions(const CheckReport& report, const std::string& axiom) {
    for (const CheckFailure& f : report.failures)
        if (f.axiom.find(axiom) != std::string::npos) return true;
    return false;
}

bool only_mentions(const CheckReport& report, const std::string& axiom) {
    if (report.failures.empty()) return false;
    for (const CheckFailure& f : report.failures)
        if (f.axiom.find(axiom) == std::string::npos) return false;
    return true;
}

Elem lift_rational(const RingPtr& R, const Elem& q) {
    return R->from_mpq(std::get<mpq_class>(q.payload()));
}

}  // namespace

TEST_CASE("the symmetrized matrix algebra with commutator couples at 1/4") {
    TwoProductAlgebra v = jordan_lie_from_assoc(as_algebra(parse_ring("Mat(2,Q)")).algebra);
    CHECK(v.flavor == Flavor::JordanLie);
    CHECK(v.dim == 4);
    REQUIRE(v.coupling.has_value());
    CHECK(v.coupling->str() == "1/4");
    CouplingResult r = detect_coupling(v);
    CHECK(r.kind == CouplingResult::Kind::Constant);
    CHECK(r.str() == "C=1/4");
    CHECK(check_jordan_lie(v, *v.coupling).pass());
    // the same structure over F5, where 1/4 is the residue 4
    TwoProductAlgebra v5 = jordan_lie_from_assoc(as_algebra(parse_ring("Mat(2,F5)")).algebra);
    CHECK(detect_coupling(v5).value.str() == "4");
    CHECK(check_jordan_lie(v5, *v5.coupling).pass());
}

TEST_CASE("a wrong coupling constant fails exactly the coupling axiom") {
    TwoProductAlgebra v = jordan_lie_from_assoc(as_algebra(parse_ring("Mat(2,Q)")).algebra);
    CheckReport bad = check_jordan_lie(v, v.base->one());
    CHECK_FALSE(bad.pass());
    CHECK(only_mentions(bad, "JL4"));
    TwoProductAlgebra w = to_lie_jordan(v);
    CheckReport badw = check_lie_jordan(w, -*w.coupling);
    CHECK_FALSE(badw.pass());
    CHECK(only_mentions(badw, "LJ4"));
}

TEST_CASE("hermitian matrices with i(xy-yx) couple at -1/4") {
    TwoProductAlgebra v = jordan_lie_from_hermitian(parse_ring("Mat(2,Qi)"));
    CHECK(v.dim == 4);
    REQUIRE(v.coupling.has_value());
    CHECK(v.coupling->str() == "-1/4");
    CHECK(detect_coupling(v).str() == "C=-1/4");
    CHECK(check_jordan_lie(v, *v.coupling).pass());
    // the indefinite involution gives the same coupling
    TwoProductAlgebra w =
        jordan_lie_from_hermitian(apply_involution(parse_ring("Mat(2,Qi)"), "sign(1,1)"));
    CHECK(w.dim == 4);
    CHECK(detect_coupling(w).str() == "C=-1/4");
    CHECK(check_jordan_lie(w, *w.coupling).pass());
}

TEST_CASE("one-dimensional hermitian parts have indeterminate coupling") {
    TwoProductAlgebra v = jordan_lie_from_hermitian(parse_ring("Qi"));
    CHECK(v.dim == 1);
    CouplingResult r = detect_coupling(v);
    CHECK(r.kind == CouplingResult::Kind::Indeterminate);
    CHECK(r.str() == "indeterminate (C=0)");
    CHECK(r.value.is_zero());
    CHECK(check_jordan_lie(v, r.value).pass());
}

TEST_CASE("antihermitian matrices carry the sandwich triple with coupling 1") {
    // o(2): one-dimensional, everything brackets to zero
    TwoProductAlgebra o2 =
        lie_jordan_from_involution(apply_involution(parse_ring("Mat(2,Q)"), "transpose"));
    CHECK(o2.flavor == Flavor::LieJordan);
    CHECK(o2.dim == 1);
    REQUIRE(o2.coupling.has_value());
    CHECK(o2.coupling->str() == "1");
    CHECK(check_lie_jordan(o2, *o2.coupling).pass());
    CHECK(detect_coupling(o2).kind == CouplingResult::Kind::Indeterminate);

    // u(2): four-dimensional, the coupling is forced
    TwoProductAlgebra u2 = lie_jordan_from_involution(parse_ring("Mat(2,Qi)"));
    CHECK(u2.dim == 4);
    CHECK(check_lie_jordan(u2, *u2.coupling).pass());
    CouplingResult r = detect_coupling(u2);
    CHECK(r.kind == CouplingResult::Kind::Constant);
    CHECK(r.value.is_one());

    // o(3): three-dimensional; negating the triple negates the coupling
    TwoProductAlgebra o3 =
        lie_jordan_from_involution(apply_involution(parse_ring("Mat(3,Q)"), "transpose"));
    CHECK(o3.dim == 3);
    CHECK(check_lie_jordan(o3, *o3.coupling).pass());
    CHECK(detect_coupling(o3).value.is_one());
    TwoProductAlgebra neg = o3;
    for (Elem& e : neg.triple) e = -e;
    neg.coupling = -*o3.coupling;
    CHECK(check_lie_jordan(neg, *neg.coupling).pass());
    CHECK(detect_coupling(neg).value.str() == "-1");
}

TEST_CASE("coupling detection separates indeterminate from inconsistent") {
    // commutative product, zero bracket: both sides of the axiom vanish
    TwoProductAlgebra flat;
    FiniteAlgebra func = as_algebra(parse_ring("Func(2,Q)")).algebra;
    flat.base = func.base;
    flat.dim = func.dim;
    flat.product = func.tensor;
    flat.bracket = FiniteAlgebra::zero(func.base, func.dim).tensor;
    flat.flavor = Flavor::JordanLie;
    CouplingResult r = detect_coupling(flat);
    CHECK(r.kind == CouplingResult::Kind::Indeterminate);
    CHECK(check_jordan_lie(flat, r.value).pass());

    // perturbing one bracket entry of a genuine example leaves no constant
    TwoProductAlgebra v = jordan_lie_from_assoc(as_algebra(parse_ring("Mat(2,Q)")).algebra);
    v.bracket[5] = v.bracket[5] + v.base->one();
    CouplingResult broken = detect_coupling(v);
    CHECK(broken.kind == CouplingResult::Kind::Inconsistent);
    CHECK(broken.str() == "inconsistent");
}

TEST_CASE("the coupling is quadratically covariant under rescaling") {
    TwoProductAlgebra v = jordan_lie_from_assoc(as_algebra(parse_ring("Mat(2,Q)")).algebra);
    Elem two = v.base->from_int(2);
    // product -> 2 product: C -> 4 C = 1
    TwoProductAlgebra vp = v;
    for (Elem& e : vp.product) e = e * two;
    CHECK(detect_coupling(vp).value.str() == "1");
    // bracket -> 2 bracket: C -> C/4 = 1/16
    TwoProductAlgebra vb = v;
    for (Elem& e : vb.bracket) e = e * two;
    CHECK(detect_coupling(vb).value.str() == "1/16");
    // bracket -> 3 bracket on the Lie-Jordan side: C -> C/9
    TwoProductAlgebra w = lie_jordan_from_involution(parse_ring("Mat(2,Qi)"));
    Elem three = w.base->from_int(3);
    for (Elem& e : w.bracket) e = e * three;
    Elem expect = *(*w.coupling * three * three).invert();
    CHECK(detect_coupling(w).value == expect);
}

TEST_CASE("converting a Jordan-Lie algebra to Lie-Jordan keeps its coupling") {
    TwoProductAlgebra v = jordan_lie_from_assoc(as_algebra(parse_ring("Mat(2,Q)")).algebra);
    TwoProductAlgebra w = to_lie_jordan(v);
    CHECK(w.flavor == Flavor::LieJordan);
    CHECK(w.dim == v.dim);
    REQUIRE(w.coupling.has_value());
    CHECK(*w.coupling == *v.coupling);
    for (std::size_t i = 0; i < v.bracket.size(); ++i) CHECK(w.bracket[i] == v.bracket[i]);
    CHECK(check_lie_jordan(w, *w.coupling).pass());
    CHECK(detect_coupling(w).value.str() == "1/4");
    CHECK_THROWS_AS(to_lie_jordan(w), Error);
}

TEST_CASE("flavor mismatches are rejected") {
    TwoProductAlgebra v = jordan_lie_from_assoc(as_algebra(parse_ring("Mat(2,Q)")).algebra);
    CHECK_THROWS_AS(v.triple_system(), Error);
    CHECK(v.product_algebra().dim == v.dim);
    TwoProductAlgebra w = to_lie_jordan(v);
    CHECK_THROWS_AS(w.product_algebra(), Error);
    CHECK(w.triple_system().dim == w.dim);
    CHECK_THROWS_AS(check_jordan_lie(w, *w.coupling), Error);
    CHECK_THROWS_AS(check_lie_jordan(v, *v.coupling), Error);
}

TEST_CASE("residue characteristic 2 blocks the constructions that halve") {
    CHECK_THROWS_AS(jordan_lie_from_assoc(as_algebra(parse_ring("Mat(2,F2)")).algebra),
                    CharacteristicError);
    CHECK_THROWS_AS(lie_jordan_from_involution(parse_ring("Mat(2,F2)")),
                    CharacteristicError);
    // char 2 also rules out a complex unit (i = -i), which is caught first
    CHECK_THROWS_WITH_AS(jordan_lie_from_hermitian(parse_ring("Mat(2,Fq(2,2))")),
                         "ring has no designated complex unit: Mat(2,Fq(2,2))", Error);
}

TEST_CASE("quantization at C=1/4 splits by a pair of central idempotents") {
    TwoProductAlgebra v = jordan_lie_from_assoc(as_algebra(parse_ring("Mat(2,Q)")).algebra);
    QuantizedAlgebra q = quantize(v, *v.coupling);
    CHECK(q.algebra.dim == 8);
    CHECK(check_quantized(q).pass());
    RingPtr Q = q.algebra.base;
    Elem half = *Q->from_int(2).invert();
    // the ring unit of Mat(2,Q) is e0 + e3 in flattened coordinates
    ElemVec unit = vec_add(q.algebra.basis(0), q.algebra.basis(3));
    ElemVec iunit = vec_add(q.algebra.basis(4), q.algebra.basis(7));
    // u = 1/2 + i, v = 1/2 - i  (i^2 = 1/4)
    ElemVec u = vec_add(vec_scale(half, unit), iunit);
    ElemVec w = vec_sub(vec_scale(half, unit), iunit);
    CHECK(vec_eq(q.algebra.mul(u, u), u));
    CHECK(vec_eq(q.algebra.mul(w, w), w));
    CHECK(vec_is_zero(q.algebra.mul(u, w)));
    CHECK(vec_is_zero(q.algebra.mul(w, u)));
    // conjugation swaps the two idempotents
    auto conjugate = [&](const ElemVec& x) {
        ElemVec out = vec_zero(Q, q.algebra.dim);
        for (int k = 0; k < q.algebra.dim; ++k)
            out = vec_add(out, vec_scale(x[k], q.conjugation[k]));
        return out;
    };
    CHECK(vec_eq(conjugate(u), w));
    CHECK(vec_eq(conjugate(conjugate(u)), u));
}

TEST_CASE("quantization at C=-1/4 rebuilds the complex matrix algebra") {
    RingPtr M = parse_ring("Mat(2,Qi)");
    TwoProductAlgebra v = jordan_lie_from_hermitian(M);
    QuantizedAlgebra q = quantize(v, *v.coupling);
    CHECK(q.algebra.dim == 8);
    CHECK(check_quantized(q).pass());
    // Phi(a + ib) = a - (i/2) b is an algebra map onto Mat(2,Qi) over Q;
    // checking it on all 64 basis pairs pins the whole structure
    REQUIRE(static_cast<int>(v.labels.size()) == v.dim);
    std::vector<Elem> basis;
    for (const std::string& label : v.labels) basis.push_back(parse_element(M, label));
    Elem mihalf = *(M->from_int(2) * *M->complex_unit()).invert();  // 1/(2i) = -i/2
    CHECK(mihalf * mihalf == lift_rational(M, *v.coupling));        // squares to C
    auto phi = [&](const ElemVec& coords) {
        Elem out = M->zero();
        int d = v.dim;
        for (int k = 0; k < d; ++k) {
            out = out + basis[k] * lift_rational(M, coords[k]);
            out = out + mihalf * basis[k] * lift_rational(M, coords[d + k]);
        }
        return out;
    };
    for (int p = 0; p < q.algebra.dim; ++p)
        for (int r = 0; r < q.algebra.dim; ++r) {
            Elem lhs = phi(q.algebra.mul(q.algebra.basis(p), q.algebra.basis(r)));
            Elem rhs = phi(q.algebra.basis(p)) * phi(q.algebra.basis(r));
            CHECK(lhs == rhs);
        }
    // Phi is injective: the images of the doubled basis span an 8-dim space
    // over Q, which we certify by exhibiting that Phi(e_p) has the expected
    // flattened coordinates forming an invertible 8x8 matrix
    Mat rows;
    for (int p = 0; p < q.algebra.dim; ++p) {
        ElemVec flat = M->flatten(phi(q.algebra.basis(p)));
        rows.push_back(flat);
    }
    CHECK(mat_rank(rows, M->bottom()) == 8);
}

TEST_CASE("quantization at C=0 and over F5") {
    TwoProductAlgebra flat;
    FiniteAlgebra func = as_algebra(parse_ring("Func(2,Q)")).algebra;
    flat.base = func.base;
    flat.dim = func.dim;
    flat.product = func.tensor;
    flat.bracket = FiniteAlgebra::zero(func.base, func.dim).tensor;
    flat.flavor = Flavor::JordanLie;
    QuantizedAlgebra q0 = quantize(flat, flat.base->zero());
    CHECK(q0.algebra.dim == 4);
    CHECK(check_quantized(q0).pass());

    TwoProductAlgebra v5 = jordan_lie_from_assoc(as_algebra(parse_ring("Mat(2,F5)")).algebra);
    QuantizedAlgebra q5 = quantize(v5, *v5.coupling);
    CHECK(q5.algebra.dim == 8);
    CHECK(check_quantized(q5).pass());
}

TEST_CASE("quantization refuses a constant the structure does not satisfy") {
    TwoProductAlgebra v = jordan_lie_from_assoc(as_algebra(parse_ring("Mat(2,Q)")).algebra);
    CHECK_THROWS_AS(quantize(v, v.base->one()), Error);
    TwoProductAlgebra w = to_lie_jordan(v);
    CHECK_THROWS_AS(quantize(w, *w.coupling), Error);  // needs the product flavor
}

TEST_CASE("the operator-rank probe separates derived triples from genuinely Lie ones") {
    TwoProductAlgebra o3 =
        lie_jordan_from_involution(apply_involution(parse_ring("Mat(3,Q)"), "transpose"));
    SourceProbe probe = jordan_source_probe(o3.triple_system());
    CHECK(probe.dim == 3);
    CHECK(probe.operator_rank == 6);
    CHECK(probe.obstructed);

    TripleSystem derived =
        jts_from_jordan(jordan_from_assoc(as_algebra(parse_ring("Mat(2,Q)")).algebra));
    SourceProbe fine = jordan_source_probe(derived);
    CHECK(fine.dim == 4);
    CHECK(fine.operator_rank <= 4);
    CHECK_FALSE(fine.obstructed);
}
