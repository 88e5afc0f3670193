#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <tuple>
#include <variant>
#include <vector>

#include <gmpxx.h>

#include "ringline/error.hpp"

namespace ringline {

class Ring;
using RingPtr = std::shared_ptr<const Ring>;

enum class RingKind {
    Integers,     // Z
    Rationals,    // Q
    Gaussian,     // Q(i)
    PrimeField,   // F_p
    Modular,      // Z/n
    FiniteField,  // F_{p^k} = F_p[t]/(m(t))
    Dual,         // R[eps], eps^2 = 0
    Matrix,       // n x n matrices over R
    Func,         // R^m componentwise
    Poly,         // R[X]
};

// How elements of a ring node are involved.  Composite kinds defer to the
// inner ring's own involution entrywise where applicable.
enum class InvolutionKind {
    Identity,       // x -> x (commutative rings only)
    Conjugate,      // designated conjugation of a base ring (Qi, Fq(p,2m))
    Transpose,      // matrices over a commutative inner ring, entries untouched
    ConjTranspose,  // transpose + entrywise inner involution
    Sign,           // X -> I_{p,q} X^{conj-t} I_{p,q}
    DualFlip,       // a + b eps -> a* - b* eps
    Pointwise,      // componentwise inner involution (Func, Poly coefficients)
};

struct GaussianValue {
    mpq_class re, im;
    bool operator==(const GaussianValue& o) const { return re == o.re && im == o.im; }
};

class Elem {
public:
    // Payload alternatives, by ring kind:
    //   Integers -> mpz_class; Rationals -> mpq_class; Gaussian -> GaussianValue;
    //   PrimeField / Modular -> int64_t residue in [0, n);
    //   FiniteField -> vector<int64_t> of exactly k coefficients, each in [0, p);
    //   Dual / Matrix / Func / Poly -> vector<Elem>
    //     (Dual: {a, b}; Matrix: n*n row-major; Func: m entries;
    //      Poly: ascending coefficients, no trailing zeros, empty = 0).
    using Payload = std::variant<mpz_class, mpq_class, GaussianValue, std::int64_t,
                                 std::vector<std::int64_t>, std::vector<Elem>>;

    Elem() = default;  // invalid; any operation throws
    Elem(RingPtr ring, Payload payload) : ring_(std::move(ring)), payload_(std::move(payload)) {}

    bool valid() const { return ring_ != nullptr; }
    const RingPtr& ring() const { return ring_; }
    const Payload& payload() const { return payload_; }

    Elem operator+(const Elem& o) const;
    Elem operator-(const Elem& o) const;
    Elem operator*(const Elem& o) const;
    Elem operator-() const;
    bool operator==(const Elem& o) const;
    bool operator!=(const Elem& o) const { return !(*this == o); }

    bool is_zero() const;
    bool is_one() const;
    Elem involve() const;
    std::optional<Elem> invert() const;
    bool is_unit() const { return invert().has_value(); }
    std::string str() const;

private:
    RingPtr ring_;
    Payload payload_;
};

using ElemVec = std::vector<Elem>;

class Ring : public std::enable_shared_from_this<Ring> {
public:
    // -- factories ------------------------------------------------------
    static RingPtr integers();
    static RingPtr rationals();
    static RingPtr gaussian_rationals();          // carries Conjugate
    static RingPtr prime_field(std::int64_t p);
    static RingPtr modular(std::int64_t n);
    static RingPtr finite_field(std::int64_t p, int k);  // Frobenius when k even
    static RingPtr dual(RingPtr inner);
    static RingPtr matrix(int n, RingPtr inner);  // natural: ConjTranspose
    static RingPtr func(int m, RingPtr inner);
    static RingPtr poly(RingPtr inner);

    // Same structure, different top-level involution.  Validates
    // admissibility (e.g. Identity requires a commutative ring).
    RingPtr with_involution(InvolutionKind kind, int sig_p = 0, int sig_q = 0) const;

    // -- descriptors ----------------------------------------------------
    RingKind kind() const { return kind_; }
    InvolutionKind involution() const { return inv_; }
    std::pair<int, int> signature() const { return {sig_p_, sig_q_}; }
    std::int64_t modulus() const { return modulus_; }     // p or n
    int degree() const { return degree_; }                // k, n, or m
    const std::vector<std::int64_t>& field_minpoly() const { return minpoly_; }
    const RingPtr& inner() const { return inner_; }

    bool commutative() const;
    bool finite() const;
    bool is_field() const;
    std::int64_t characteristic() const;
    bool two_invertible() const;
    static bool same(const Ring& a, const Ring& b);  // structural equality
    std::string str() const;                         // canonical spec spelling

    // -- elements -------------------------------------------------------
    Elem zero() const;
    Elem one() const;
    Elem from_int(long v) const;
    Elem from_mpq(const mpq_class& v) const;  // rings containing Q or via mod p

    Elem add(const Elem& a, const Elem& b) const;
    Elem sub(const Elem& a, const Elem& b) const;
    Elem mul(const Elem& a, const Elem& b) const;
    Elem neg(const Elem& a) const;
    bool eq(const Elem& a, const Elem& b) const;
    bool is_zero(const Elem& a) const;
    Elem involve(const Elem& a) const;
    std::optional<Elem> invert(const Elem& a) const;
    std::string to_string(const Elem& a) const;

    // -- enumeration (finite rings) --------------------------------------
    std::uint64_t element_count() const;
    Elem element_at(std::uint64_t index) const;
    void for_each_element(const std::function<void(const Elem&)>& fn) const;

    // -- linearization over the bottom scalar ring -----------------------
    // Every ring in the tower is a free module over its bottom base ring
    // (Q for Q/Qi bottoms, F_p for F_p/F_q bottoms, Z or Z/n for those).
    // Poly has unbounded rank and is excluded.
    RingPtr bottom() const;
    int scalar_dim() const;
    ElemVec flatten(const Elem& a) const;
    Elem unflatten(const ElemVec& coords) const;

    // Designated complex unit: an element i with i^2 = -1, i* = -i, i != -i.
    std::optional<Elem> complex_unit() const;

protected:
    Ring() = default;

private:
    std::optional<Elem> invert_matrix_commutative(const Elem& a) const;
    std::optional<Elem> invert_regular_rep(const Elem& a) const;
    Elem unflatten_from(const ElemVec& coords, std::size_t& pos) const;

    RingKind kind_ = RingKind::Integers;
    InvolutionKind inv_ = InvolutionKind::Identity;
    int sig_p_ = 0, sig_q_ = 0;
    std::int64_t modulus_ = 0;
    int degree_ = 0;
    std::vector<std::int64_t> minpoly_;  // FiniteField: monic, ascending, size k+1
    RingPtr inner_;

    static InvolutionKind natural_involution(RingKind kind, std::int64_t modulus, int degree);
    void check_involution() const;
    friend RingPtr make_ring(RingKind, InvolutionKind, int, int, std::int64_t, int,
                             std::vector<std::int64_t>, RingPtr);
};

// Throws if a and b live in structurally different rings.
void require_same_ring(const Elem& a, const Elem& b);

// Extended gcd in Z or Poly(field): returns (g, x, y) with x*a - y*b = g and
// g canonical (positive integer / monic polynomial).  Throws on (0, 0).
std::tuple<Elem, Elem, Elem> extended_gcd(const Elem& a, const Elem& b);

// Polynomial helpers (Poly rings).
int poly_degree(const Elem& p);          // -1 for zero
Elem poly_leading_coeff(const Elem& p);  // inner-ring element; zero poly -> 0

}  // namespace ringline
