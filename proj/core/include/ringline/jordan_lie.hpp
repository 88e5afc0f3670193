#pragma once

#include <optional>

#include "ringline/jordan.hpp"

namespace ringline {

enum class Flavor { JordanLie, LieJordan };

// A bracket plus either a commutative product (Jordan-Lie) or a trilinear
// triple (Lie-Jordan), with an optional stored coupling constant.
struct TwoProductAlgebra {
    RingPtr base;
    int dim = 0;
    std::vector<Elem> bracket;  // dim^3
    std::vector<Elem> product;  // dim^3 (Jordan-Lie flavor only)
    std::vector<Elem> triple;   // dim^4 (Lie-Jordan flavor only)
    Flavor flavor = Flavor::JordanLie;
    std::optional<Elem> coupling;
    std::vector<std::string> labels;

    FiniteAlgebra bracket_algebra() const;
    FiniteAlgebra product_algebra() const;
    TripleSystem triple_system() const;
};

struct CouplingResult {
    enum class Kind { Constant, Inconsistent, Indeterminate };
    Kind kind = Kind::Inconsistent;
    Elem value;  // the constant; canonical 0 when indeterminate
    std::string str() const;
};

// Solve the coupling axiom of the flavor for the scalar C over all basis
// triples, then verify the candidate on every triple independently:
//   Jordan-Lie: (xy)z - x(yz) = -C([[x,y],z] - [x,[y,z]])
//   Lie-Jordan: T(x,y,z) - T(y,x,z) = C[[x,y],z]
// Indeterminate means the right side vanishes identically (C = 0 canonical).
CouplingResult detect_coupling(const TwoProductAlgebra& v);

// (JL1) Lie, (JL2) Jordan, (JL3) bracket derives the product, (JL4) coupling.
CheckReport check_jordan_lie(const TwoProductAlgebra& v, const Elem& coupling,
                             std::uint64_t seed = 0);

// (LJ1) Lie, (LJ2) JTS, (LJ3) bracket derives the triple, (LJ4) coupling.
CheckReport check_lie_jordan(const TwoProductAlgebra& v, const Elem& coupling,
                             std::uint64_t budget = 1000000, std::uint64_t seed = 0);

// Associative algebra with (xy+yx)/2 and xy-yx; coupling detected (1/4 for
// the standard normalization).
TwoProductAlgebra jordan_lie_from_assoc(const FiniteAlgebra& assoc);

// -1-eigenspace of the involution with the commutator bracket and
// T(x,y,z) = xyz + zyx; stored coupling 1.
TwoProductAlgebra lie_jordan_from_involution(const AlgebraView& view);
TwoProductAlgebra lie_jordan_from_involution(const RingPtr& ring);

// Hermitian elements {a : a* = a} with (xy+yx)/2 and i(xy-yx) for the
// designated complex unit i; coupling detected (negative).
TwoProductAlgebra jordan_lie_from_hermitian(const AlgebraView& view);
TwoProductAlgebra jordan_lie_from_hermitian(const RingPtr& ring);

// Keep the bracket, replace the Jordan product by its derived triple; the
// same coupling passes the Lie-Jordan axioms.
TwoProductAlgebra to_lie_jordan(const TwoProductAlgebra& v);

// Scalar extension V + iV with i^2 = C and product xy = x.y + i[x,y],
// stored as a K-bilinear tensor on the doubled basis, with the conjugation
// a + ib -> a - ib as a linear map.
struct QuantizedAlgebra {
    FiniteAlgebra algebra;  // dim = 2 * dim(V)
    Elem coupling;
    std::vector<ElemVec> conjugation;  // column k = image of basis k
};

// Builds the extension and verifies associativity on all basis triples and
// that the conjugation is an order-2 antiautomorphism; throws on failure.
QuantizedAlgebra quantize(const TwoProductAlgebra& v, const Elem& coupling);
CheckReport check_quantized(const QuantizedAlgebra& q);

// Linear obstruction to writing T as the derived triple of a commutative
// product: every operator z -> T(x,y,z) + T(y,x,z) would be a left
// multiplication, so their span can have dimension at most dim.
struct SourceProbe {
    int operator_rank = 0;
    int dim = 0;
    bool obstructed = false;  // operator_rank > dim: no such product exists
};
SourceProbe jordan_source_probe(const TripleSystem& t);

}  // namespace ringline
