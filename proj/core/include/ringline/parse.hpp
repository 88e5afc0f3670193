#pragma once

#include <array>
#include <string>

#include "ringline/ring.hpp"

namespace ringline {

// RING := "Z" | "Q" | "Qi" | "F" INT | "Zmod(" INT ")" | "Fq(" INT "," INT ")"
//       | "Dual(" RING ")" | "Mat(" INT "," RING ")" | "Func(" INT "," RING ")"
//       | "Poly(" RING ")"
// Every node carries its natural involution (Qi: conjugation; Fq(p,2m):
// Frobenius; Dual: dualflip; Mat: conjtranspose; Func/Poly: pointwise).
RingPtr parse_ring(const std::string& spec);

// INVOLUTION := "id" | "transpose" | "conjtranspose" | "sign(" INT "," INT ")"
//             | "dualflip" | "pointwise(" INVOLUTION ")"
// Applied to the top ring node; `conjtranspose` on a base ring means its
// designated conjugation.  Empty spec keeps the natural involution.
RingPtr apply_involution(RingPtr ring, const std::string& inv_spec);

// Element literals, shaped per ring:
//   Z/Q/Fp/Zmod:  -3, 2/3        Qi: 1/2+3i, -i      Fq: 2t^2+t+1
//   Dual: 1+2eps, (t+1)+(2)eps   Mat: [[1,0],[0,1]]  Func: (1,2,3)
//   Poly: X^2+2X+1, (t+1)X+2
Elem parse_element(const RingPtr& ring, const std::string& text);

// point[(s);(r)] [@ RING] — `ring` may be null when the literal carries @.
struct PointLiteral {
    Elem v1, v2;
    RingPtr ring;
};
PointLiteral parse_point_literal(const std::string& text, RingPtr default_ring);

// [[a,b],[c,d]] [@ RING] — row-major group-element literal.
struct Matrix2Literal {
    std::array<Elem, 4> entries;
    RingPtr ring;
};
Matrix2Literal parse_matrix2_literal(const std::string& text, RingPtr default_ring);

}  // namespace ringline
