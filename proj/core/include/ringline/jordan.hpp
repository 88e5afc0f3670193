#pragma once

#include <cstdint>
#include <random>

#include "ringline/algebra.hpp"
#include "ringline/report.hpp"

namespace ringline {

// Deterministic scalar sampler shared by all randomized checkers.
Elem random_scalar(const RingPtr& base, std::mt19937_64& rng);
ElemVec random_vector(const RingPtr& base, int dim, std::mt19937_64& rng);

// Associativity (xy)z = x(yz) and commutativity xy = yx on all basis tuples.
CheckReport check_associative(const FiniteAlgebra& a);
CheckReport check_commutative(const FiniteAlgebra& a);

// Jordan axioms: commutativity on the tensor, the Jordan identity
// x(x^2 y) = x^2 (xy) via its full linearization on basis 4-tuples plus
// direct evaluations on basis pairs and seeded random pairs.
CheckReport check_jordan(const FiniteAlgebra& a, std::uint64_t seed = 0, int random_pairs = 500);

// Symmetrized product (xy + yx)/2 of an associative algebra; verifies the
// input and needs 2 invertible.
FiniteAlgebra jordan_from_assoc(const FiniteAlgebra& assoc);

// The triple T(x,y,z) = (x(yz) - y(xz) + (xy)z)/2 of a Jordan algebra.
TripleSystem jts_from_jordan(const FiniteAlgebra& jordan);

// Sandwich triples of an associative algebra: xyz + zyx, and its half.
TripleSystem sandwich_triple(const FiniteAlgebra& assoc);
TripleSystem half_sandwich_triple(const FiniteAlgebra& assoc);
TripleSystem scale_triple(const TripleSystem& t, const Elem& scalar);
FiniteAlgebra scale_product(const FiniteAlgebra& a, const Elem& scalar);

// Rectangular matrices M(p,q) with T(x,y,z) = x y^t z + z y^t x.
TripleSystem rect_triple(int p, int q, const RingPtr& base);

// Triple-system axioms: outer symmetry T(x,y,z) = T(z,y,x) on the tensor and
// the five-term identity
//   T(a,b,T(x,y,z)) = T(T(a,b,x),y,z) - T(x,T(b,a,y),z) + T(x,y,T(a,b,z))
// on all basis 5-tuples when dim^5 <= budget, else on all basis (a,b,x) with
// seeded random (y,z).
CheckReport check_jts(const TripleSystem& t, std::uint64_t budget = 1000000,
                      std::uint64_t seed = 0);

// (V+,V-) = (M(p,q), M(q,p)) with T(x,y,z) = xyz + zyx on both sides.
JordanPairData rect_pair(int p, int q, const RingPtr& base);
JordanPairData jts_to_pair(const TripleSystem& t);

// Pair axioms with superscript alternation: the middle term of the five-term
// identity uses the opposite map, T(x, T^opp(b,a,y), z).
CheckReport check_jordan_pair(const JordanPairData& p, std::uint64_t budget = 1000000,
                              std::uint64_t seed = 0);

}  // namespace ringline
