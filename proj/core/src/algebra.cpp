#include "ringline/algebra.hpp"

#include "ringline/error.hpp"

namespace ringline {

ElemVec vec_zero(const RingPtr& base, int dim) { return ElemVec(dim, base->zero()); }

ElemVec vec_basis(const RingPtr& base, int dim, int i) {
    ElemVec v(dim, base->zero());
    v[i] = base->one();
    return v;
}

ElemVec vec_add(const ElemVec& a, const ElemVec& b) {
    ElemVec out;
    out.reserve(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out.push_back(a[i] + b[i]);
    return out;
}

ElemVec vec_sub(const ElemVec& a, const ElemVec& b) {
    ElemVec out;
    out.reserve(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out.push_back(a[i] - b[i]);
    return out;
}

ElemVec vec_scale(const Elem& c, const ElemVec& a) {
    ElemVec out;
    out.reserve(a.size());
    for (const Elem& x : a) out.push_back(c * x);
    return out;
}

bool vec_is_zero(const ElemVec& a) {
    for (const Elem& x : a)
        if (!x.is_zero()) return false;
    return true;
}

bool vec_eq(const ElemVec& a, const ElemVec& b) {
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] != b[i]) return false;
    return true;
}

std::string vec_str(const ElemVec& a) {
    std::string out = "(";
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (i) out += ",";
        out += a[i].str();
    }
    return out + ")";
}

FiniteAlgebra FiniteAlgebra::zero(RingPtr base, int dim) {
    FiniteAlgebra a;
    a.base = std::move(base);
    a.dim = dim;
    a.tensor.assign(static_cast<std::size_t>(dim) * dim * dim, a.base->zero());
    return a;
}

ElemVec FiniteAlgebra::mul(const ElemVec& x, const ElemVec& y) const {
    ElemVec out = vec_zero(base, dim);
    for (int i = 0; i < dim; ++i) {
        if (x[i].is_zero()) continue;
        for (int j = 0; j < dim; ++j) {
            if (y[j].is_zero()) continue;
            Elem xy = x[i] * y[j];
            for (int k = 0; k < dim; ++k) {
                const Elem& s = c(i, j, k);
                if (!s.is_zero()) out[k] = out[k] + xy * s;
            }
        }
    }
    return out;
}

TripleSystem TripleSystem::zero(RingPtr base, int dim) {
    TripleSystem t;
    t.base = std::move(base);
    t.dim = dim;
    t.tensor.assign(static_cast<std::size_t>(dim) * dim * dim * dim, t.base->zero());
    return t;
}

ElemVec TripleSystem::eval(const ElemVec& x, const ElemVec& y, const ElemVec& z) const {
    ElemVec out = vec_zero(base, dim);
    for (int i = 0; i < dim; ++i) {
        if (x[i].is_zero()) continue;
        for (int j = 0; j < dim; ++j) {
            if (y[j].is_zero()) continue;
            Elem xy = x[i] * y[j];
            for (int k = 0; k < dim; ++k) {
                if (z[k].is_zero()) continue;
                Elem xyz = xy * z[k];
                for (int l = 0; l < dim; ++l) {
                    const Elem& s = t(i, j, k, l);
                    if (!s.is_zero()) out[l] = out[l] + xyz * s;
                }
            }
        }
    }
    return out;
}

namespace {

ElemVec pair_eval(const RingPtr& base, const std::vector<Elem>& tensor, int d1, int d2,
                  int dout, const ElemVec& x, const ElemVec& y, const ElemVec& z) {
    ElemVec out = vec_zero(base, dout);
    for (int i = 0; i < d1; ++i) {
        if (x[i].is_zero()) continue;
        for (int j = 0; j < d2; ++j) {
            if (y[j].is_zero()) continue;
            Elem xy = x[i] * y[j];
            for (int k = 0; k < d1; ++k) {
                if (z[k].is_zero()) continue;
                Elem xyz = xy * z[k];
                for (int l = 0; l < dout; ++l) {
                    const Elem& s = tensor[((static_cast<std::size_t>(i) * d2 + j) * d1 + k) * dout + l];
                    if (!s.is_zero()) out[l] = out[l] + xyz * s;
                }
            }
        }
    }
    return out;
}

}  // namespace

ElemVec JordanPairData::eval_plus(const ElemVec& x, const ElemVec& y, const ElemVec& z) const {
    return pair_eval(base, t_plus, dim_plus, dim_minus, dim_plus, x, y, z);
}

ElemVec JordanPairData::eval_minus(const ElemVec& x, const ElemVec& y, const ElemVec& z) const {
    return pair_eval(base, t_minus, dim_minus, dim_plus, dim_minus, x, y, z);
}

AlgebraView as_algebra(const RingPtr& ring) {
    RingPtr base = ring->bottom();
    if (!base->is_field()) throw Error("algebra view requires a field of scalars");
    int dim = ring->scalar_dim();
    AlgebraView view;
    view.ring = ring;
    view.algebra = FiniteAlgebra::zero(base, dim);
    std::vector<Elem> basis;
    basis.reserve(dim);
    for (int i = 0; i < dim; ++i) {
        basis.push_back(ring->unflatten(vec_basis(base, dim, i)));
        view.algebra.labels.push_back(basis.back().str());
    }
    for (int i = 0; i < dim; ++i) {
        for (int j = 0; j < dim; ++j) {
            ElemVec prod = ring->flatten(basis[i] * basis[j]);
            for (int k = 0; k < dim; ++k) view.algebra.c(i, j, k) = prod[k];
        }
    }
    view.involution.reserve(dim);
    for (int i = 0; i < dim; ++i) view.involution.push_back(ring->flatten(basis[i].involve()));
    return view;
}

ElemVec SpanContext::coords_of(const ElemVec& ambient, const char* what) const {
    auto c = in_span(basis, ambient, base);
    if (!c) throw Error(std::string(what) + " leaves the spanned submodule");
    return *c;
}

ElemVec SpanContext::to_ambient(const ElemVec& coords) const {
    ElemVec out = vec_zero(base, basis.empty() ? 0 : static_cast<int>(basis[0].size()));
    for (std::size_t i = 0; i < basis.size(); ++i)
        out = vec_add(out, vec_scale(coords[i], basis[i]));
    return out;
}

}  // namespace ringline
