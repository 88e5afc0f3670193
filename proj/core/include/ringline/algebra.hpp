#pragma once

#include <string>
#include <vector>

#include "ringline/linalg.hpp"
#include "ringline/ring.hpp"

namespace ringline {

// Coordinate-vector helpers over a base field.
ElemVec vec_zero(const RingPtr& base, int dim);
ElemVec vec_basis(const RingPtr& base, int dim, int i);
ElemVec vec_add(const ElemVec& a, const ElemVec& b);
ElemVec vec_sub(const ElemVec& a, const ElemVec& b);
ElemVec vec_scale(const Elem& c, const ElemVec& a);
bool vec_is_zero(const ElemVec& a);
bool vec_eq(const ElemVec& a, const ElemVec& b);
std::string vec_str(const ElemVec& a);

// A finite-dimensional algebra over a base field, given by the structure
// constants of one bilinear product: ei * ej = sum_k c(i,j,k) ek.
struct FiniteAlgebra {
    RingPtr base;
    int dim = 0;
    std::vector<Elem> tensor;          // dim^3, index (i*dim + j)*dim + k
    std::vector<std::string> labels;   // optional basis labels (size dim or empty)

    static FiniteAlgebra zero(RingPtr base, int dim);
    const Elem& c(int i, int j, int k) const { return tensor[(i * dim + j) * dim + k]; }
    Elem& c(int i, int j, int k) { return tensor[(i * dim + j) * dim + k]; }
    ElemVec mul(const ElemVec& x, const ElemVec& y) const;
    ElemVec basis(int i) const { return vec_basis(base, dim, i); }
};

// A trilinear map on a finite-dimensional space:
// T(ei, ej, ek) = sum_l t(i,j,k,l) el.
struct TripleSystem {
    RingPtr base;
    int dim = 0;
    std::vector<Elem> tensor;  // dim^4
    std::vector<std::string> labels;

    static TripleSystem zero(RingPtr base, int dim);
    const Elem& t(int i, int j, int k, int l) const {
        return tensor[((i * dim + j) * dim + k) * dim + l];
    }
    Elem& t(int i, int j, int k, int l) { return tensor[((i * dim + j) * dim + k) * dim + l]; }
    ElemVec eval(const ElemVec& x, const ElemVec& y, const ElemVec& z) const;
    ElemVec basis(int i) const { return vec_basis(base, dim, i); }
};

// Two modules with paired trilinear maps
// T+ : V+ x V- x V+ -> V+ and T- : V- x V+ x V- -> V-.
struct JordanPairData {
    RingPtr base;
    int dim_plus = 0, dim_minus = 0;
    std::vector<Elem> t_plus;   // dp * dm * dp * dp
    std::vector<Elem> t_minus;  // dm * dp * dm * dm

    ElemVec eval_plus(const ElemVec& x, const ElemVec& y, const ElemVec& z) const;
    ElemVec eval_minus(const ElemVec& x, const ElemVec& y, const ElemVec& z) const;
};

// A finite-dimensional ring viewed as an algebra over its bottom field, with
// the ring involution as a linear map in the same coordinates.
struct AlgebraView {
    RingPtr ring;
    FiniteAlgebra algebra;
    std::vector<ElemVec> involution;  // column k = coordinates of (basis_k)^*

    Elem to_ring(const ElemVec& coords) const { return ring->unflatten(coords); }
    ElemVec to_coords(const Elem& a) const { return ring->flatten(a); }
};

AlgebraView as_algebra(const RingPtr& ring);

// Express ambient vectors in the span of `basis` (columns); throws when a
// vector leaves the span (closure failure in a restriction).
struct SpanContext {
    RingPtr base;
    std::vector<ElemVec> basis;  // linearly independent ambient vectors

    ElemVec coords_of(const ElemVec& ambient, const char* what) const;
    ElemVec to_ambient(const ElemVec& coords) const;
};

}  // namespace ringline
