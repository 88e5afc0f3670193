#include "ringline/ring.hpp"

#include <algorithm>
#include <sstream>

#include "ringline/linalg.hpp"

namespace ringline {

namespace {

// ---------------------------------------------------------------- int64 mod

std::int64_t mod_norm(std::int64_t v, std::int64_t n) {
    v %= n;
    return v < 0 ? v + n : v;
}

// Extended Euclid on machine integers: returns gcd, sets x with x*a = g (mod n)
// when called as inverse computation.
std::int64_t mod_inverse(std::int64_t a, std::int64_t n, bool& ok) {
    std::int64_t r0 = n, r1 = mod_norm(a, n), t0 = 0, t1 = 1;
    while (r1 != 0) {
        std::int64_t q = r0 / r1;
        std::int64_t r2 = r0 - q * r1, t2 = t0 - q * t1;
        r0 = r1; r1 = r2; t0 = t1; t1 = t2;
    }
    ok = (r0 == 1);
    return ok ? mod_norm(t0, n) : 0;
}

bool is_prime_i64(std::int64_t n) {
    if (n < 2) return false;
    for (std::int64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

// --------------------------------------------- F_p[t] on int64 coefficients

using IPoly = std::vector<std::int64_t>;  // ascending, not necessarily trimmed

void ipoly_trim(IPoly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

IPoly ipoly_mul(const IPoly& a, const IPoly& b, std::int64_t p) {
    if (a.empty() || b.empty()) return {};
    IPoly c(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            c[i + j] = mod_norm(c[i + j] + a[i] * b[j], p);
    ipoly_trim(c);
    return c;
}

// a mod m, m monic
IPoly ipoly_mod(IPoly a, const IPoly& m, std::int64_t p) {
    ipoly_trim(a);
    const std::size_t dm = m.size() - 1;
    while (a.size() > dm) {
        std::int64_t lead = a.back();
        std::size_t shift = a.size() - 1 - dm;
        for (std::size_t i = 0; i < m.size(); ++i)
            a[shift + i] = mod_norm(a[shift + i] - lead * m[i], p);
        ipoly_trim(a);
    }
    return a;
}

// Extended Euclid in F_p[t]: g = gcd(a, b) monic, u*a + v*b = g.
void ipoly_gcdext(IPoly a, IPoly b, std::int64_t p, IPoly& g, IPoly& u, IPoly& v) {
    IPoly r0 = std::move(a), r1 = std::move(b);
    ipoly_trim(r0); ipoly_trim(r1);
    IPoly u0{1}, u1{}, v0{}, v1{1};
    while (!r1.empty()) {
        // divide r0 by r1
        IPoly q;
        IPoly rem = r0;
        bool okinv = false;
        std::int64_t linv = mod_inverse(r1.back(), p, okinv);
        if (!okinv) throw Error("polynomial gcd needs field coefficients");
        while (rem.size() >= r1.size() && !rem.empty()) {
            std::size_t shift = rem.size() - r1.size();
            std::int64_t coef = mod_norm(rem.back() * linv, p);
            if (q.size() < shift + 1) q.resize(shift + 1, 0);
            q[shift] = coef;
            for (std::size_t i = 0; i < r1.size(); ++i)
                rem[shift + i] = mod_norm(rem[shift + i] - coef * r1[i], p);
            ipoly_trim(rem);
        }
        IPoly qu = ipoly_mul(q, u1, p), qv = ipoly_mul(q, v1, p);
        IPoly u2 = u0, v2 = v0;
        u2.resize(std::max(u2.size(), qu.size()), 0);
        for (std::size_t i = 0; i < qu.size(); ++i) u2[i] = mod_norm(u2[i] - qu[i], p);
        v2.resize(std::max(v2.size(), qv.size()), 0);
        for (std::size_t i = 0; i < qv.size(); ++i) v2[i] = mod_norm(v2[i] - qv[i], p);
        ipoly_trim(u2); ipoly_trim(v2);
        r0 = r1; r1 = rem; u0 = u1; u1 = u2; v0 = v1; v1 = v2;
    }
    // normalize monic
    if (!r0.empty() && r0.back() != 1) {
        bool ok = false;
        std::int64_t inv = mod_inverse(r0.back(), p, ok);
        for (auto& c : r0) c = mod_norm(c * inv, p);
        for (auto& c : u0) c = mod_norm(c * inv, p);
        for (auto& c : v0) c = mod_norm(c * inv, p);
    }
    g = std::move(r0); u = std::move(u0); v = std::move(v0);
}

bool ipoly_irreducible(const IPoly& f, std::int64_t p) {
    const int k = static_cast<int>(f.size()) - 1;
    if (k < 1) return false;
    for (int d = 1; 2 * d <= k; ++d) {
        // all monic divisor candidates of degree d
        std::uint64_t count = 1;
        for (int i = 0; i < d; ++i) count *= static_cast<std::uint64_t>(p);
        for (std::uint64_t idx = 0; idx < count; ++idx) {
            IPoly g(d + 1, 0);
            std::uint64_t rest = idx;
            for (int i = 0; i < d; ++i) { g[i] = static_cast<std::int64_t>(rest % p); rest /= p; }
            g[d] = 1;
            if (ipoly_mod(f, g, p).empty()) return false;
        }
    }
    return true;
}

IPoly find_minpoly(std::int64_t p, int k) {
    if (k == 1) return IPoly{0, 1};  // t, i.e. F_p itself with t = 0... unused
    std::uint64_t count = 1;
    for (int i = 0; i < k; ++i) count *= static_cast<std::uint64_t>(p);
    for (std::uint64_t idx = 0; idx < count; ++idx) {
        IPoly f(k + 1, 0);
        std::uint64_t rest = idx;
        for (int i = 0; i < k; ++i) { f[i] = static_cast<std::int64_t>(rest % p); rest /= p; }
        f[k] = 1;
        if (ipoly_irreducible(f, p)) return f;
    }
    throw Error("no irreducible polynomial found");
}

// -------------------------------------------------------- payload accessors

const mpz_class& as_z(const Elem& e) { return std::get<mpz_class>(e.payload()); }
const mpq_class& as_q(const Elem& e) { return std::get<mpq_class>(e.payload()); }
const GaussianValue& as_g(const Elem& e) { return std::get<GaussianValue>(e.payload()); }
std::int64_t as_res(const Elem& e) { return std::get<std::int64_t>(e.payload()); }
const std::vector<std::int64_t>& as_ff(const Elem& e) {
    return std::get<std::vector<std::int64_t>>(e.payload());
}
const ElemVec& as_vec(const Elem& e) { return std::get<ElemVec>(e.payload()); }

bool simple_numeral(const std::string& s) {
    for (std::size_t i = 0; i < s.size(); ++i) {
        char c = s[i];
        if (c >= '0' && c <= '9') continue;
        if (c == '-' && i == 0) continue;
        if (c == '/') continue;
        return false;
    }
    return !s.empty();
}

std::string wrap_composite(const std::string& s) {
    return simple_numeral(s) ? s : "(" + s + ")";
}

}  // namespace

// ------------------------------------------------------------- construction

RingPtr make_ring(RingKind kind, InvolutionKind inv, int sig_p, int sig_q,
                  std::int64_t modulus, int degree, std::vector<std::int64_t> minpoly,
                  RingPtr inner) {
    struct Concrete : Ring {};
    auto r = std::make_shared<Concrete>();
    Ring* b = r.get();
    b->kind_ = kind;
    b->inv_ = inv;
    b->sig_p_ = sig_p;
    b->sig_q_ = sig_q;
    b->modulus_ = modulus;
    b->degree_ = degree;
    b->minpoly_ = std::move(minpoly);
    b->inner_ = std::move(inner);
    b->check_involution();
    return r;
}

InvolutionKind Ring::natural_involution(RingKind kind, std::int64_t, int degree) {
    switch (kind) {
        case RingKind::Gaussian: return InvolutionKind::Conjugate;
        case RingKind::FiniteField:
            return degree % 2 == 0 ? InvolutionKind::Conjugate : InvolutionKind::Identity;
        case RingKind::Dual: return InvolutionKind::DualFlip;
        case RingKind::Matrix: return InvolutionKind::ConjTranspose;
        case RingKind::Func:
        case RingKind::Poly: return InvolutionKind::Pointwise;
        default: return InvolutionKind::Identity;
    }
}

RingPtr Ring::integers() {
    return make_ring(RingKind::Integers, InvolutionKind::Identity, 0, 0, 0, 0, {}, nullptr);
}
RingPtr Ring::rationals() {
    return make_ring(RingKind::Rationals, InvolutionKind::Identity, 0, 0, 0, 0, {}, nullptr);
}
RingPtr Ring::gaussian_rationals() {
    return make_ring(RingKind::Gaussian, InvolutionKind::Conjugate, 0, 0, 0, 0, {}, nullptr);
}
RingPtr Ring::prime_field(std::int64_t p) {
    if (!is_prime_i64(p)) throw Error("F" + std::to_string(p) + ": modulus must be prime");
    if (p > (1 << 30)) throw Error("prime too large");
    return make_ring(RingKind::PrimeField, InvolutionKind::Identity, 0, 0, p, 0, {}, nullptr);
}
RingPtr Ring::modular(std::int64_t n) {
    if (n < 2) throw Error("Zmod(n) needs n >= 2");
    if (n > (1 << 30)) throw Error("modulus too large");
    return make_ring(RingKind::Modular, InvolutionKind::Identity, 0, 0, n, 0, {}, nullptr);
}
RingPtr Ring::finite_field(std::int64_t p, int k) {
    if (!is_prime_i64(p)) throw Error("Fq(p,k): p must be prime");
    if (k < 1 || k > 12) throw Error("Fq(p,k): k out of range");
    double size = 1;
    for (int i = 0; i < k; ++i) size *= static_cast<double>(p);
    if (size > 1e9) throw Error("Fq(p,k): field too large");
    return make_ring(RingKind::FiniteField, natural_involution(RingKind::FiniteField, p, k),
                     0, 0, p, k, find_minpoly(p, k), nullptr);
}
RingPtr Ring::dual(RingPtr inner) {
    return make_ring(RingKind::Dual, InvolutionKind::DualFlip, 0, 0, 0, 0, {}, std::move(inner));
}
RingPtr Ring::matrix(int n, RingPtr inner) {
    if (n < 1 || n > 6) throw Error("Mat(n, R): n out of range");
    return make_ring(RingKind::Matrix, InvolutionKind::ConjTranspose, 0, 0, 0, n, {},
                     std::move(inner));
}
RingPtr Ring::func(int m, RingPtr inner) {
    if (m < 1 || m > 64) throw Error("Func(m, R): m out of range");
    return make_ring(RingKind::Func, InvolutionKind::Pointwise, 0, 0, 0, m, {},
                     std::move(inner));
}
RingPtr Ring::poly(RingPtr inner) {
    return make_ring(RingKind::Poly, InvolutionKind::Pointwise, 0, 0, 0, 0, {},
                     std::move(inner));
}

RingPtr Ring::with_involution(InvolutionKind kind, int sig_p, int sig_q) const {
    return make_ring(kind_, kind, sig_p, sig_q, modulus_, degree_, minpoly_, inner_);
}

void Ring::check_involution() const {
    switch (inv_) {
        case InvolutionKind::Identity:
            if (!commutative())
                throw Error("identity involution is only admitted on commutative rings");
            break;
        case InvolutionKind::Conjugate:
            if (kind_ == RingKind::Gaussian) break;
            if (kind_ == RingKind::FiniteField && degree_ % 2 == 0) break;
            throw Error("conjugation needs Qi or Fq(p, 2m)");
        case InvolutionKind::Transpose:
            if (kind_ != RingKind::Matrix || !inner_->commutative())
                throw Error("plain transpose needs Mat(n, commutative)");
            break;
        case InvolutionKind::ConjTranspose:
            if (kind_ != RingKind::Matrix) throw Error("conjtranspose needs a Mat(n, R) ring");
            break;
        case InvolutionKind::Sign:
            if (kind_ != RingKind::Matrix || sig_p_ < 0 || sig_q_ < 0 ||
                sig_p_ + sig_q_ != degree_)
                throw Error("sign(p,q) needs Mat(p+q, R)");
            break;
        case InvolutionKind::DualFlip:
            if (kind_ != RingKind::Dual) throw Error("dualflip needs a Dual(R) ring");
            break;
        case InvolutionKind::Pointwise:
            if (kind_ != RingKind::Func && kind_ != RingKind::Poly)
                throw Error("pointwise involution needs Func(m, R) or Poly(R)");
            break;
    }
}

// -------------------------------------------------------------- descriptors

bool Ring::commutative() const {
    switch (kind_) {
        case RingKind::Matrix: return degree_ == 1 && inner_->commutative();
        case RingKind::Dual:
        case RingKind::Func:
        case RingKind::Poly: return inner_->commutative();
        default: return true;
    }
}

bool Ring::finite() const {
    switch (kind_) {
        case RingKind::PrimeField:
        case RingKind::Modular:
        case RingKind::FiniteField: return true;
        case RingKind::Dual:
        case RingKind::Matrix:
        case RingKind::Func: return inner_->finite();
        default: return false;
    }
}

bool Ring::is_field() const {
    switch (kind_) {
        case RingKind::Rationals:
        case RingKind::Gaussian:
        case RingKind::PrimeField:
        case RingKind::FiniteField: return true;
        default: return false;
    }
}

std::int64_t Ring::characteristic() const {
    switch (kind_) {
        case RingKind::Integers:
        case RingKind::Rationals:
        case RingKind::Gaussian: return 0;
        case RingKind::PrimeField:
        case RingKind::FiniteField: return modulus_;
        case RingKind::Modular: return modulus_;
        default: return inner_->characteristic();
    }
}

bool Ring::two_invertible() const { return from_int(2).is_unit(); }

bool Ring::same(const Ring& a, const Ring& b) {
    if (&a == &b) return true;
    if (a.kind_ != b.kind_ || a.inv_ != b.inv_ || a.sig_p_ != b.sig_p_ ||
        a.sig_q_ != b.sig_q_ || a.modulus_ != b.modulus_ || a.degree_ != b.degree_ ||
        a.minpoly_ != b.minpoly_)
        return false;
    if (!a.inner_ != !b.inner_) return false;
    return !a.inner_ || same(*a.inner_, *b.inner_);
}

std::string Ring::str() const {
    std::string base;
    switch (kind_) {
        case RingKind::Integers: base = "Z"; break;
        case RingKind::Rationals: base = "Q"; break;
        case RingKind::Gaussian: base = "Qi"; break;
        case RingKind::PrimeField: base = "F" + std::to_string(modulus_); break;
        case RingKind::Modular: base = "Zmod(" + std::to_string(modulus_) + ")"; break;
        case RingKind::FiniteField:
            base = "Fq(" + std::to_string(modulus_) + "," + std::to_string(degree_) + ")";
            break;
        case RingKind::Dual: base = "Dual(" + inner_->str() + ")"; break;
        case RingKind::Matrix:
            base = "Mat(" + std::to_string(degree_) + "," + inner_->str() + ")";
            break;
        case RingKind::Func:
            base = "Func(" + std::to_string(degree_) + "," + inner_->str() + ")";
            break;
        case RingKind::Poly: base = "Poly(" + inner_->str() + ")"; break;
    }
    return base;
}

// ----------------------------------------------------------------- elements

void require_same_ring(const Elem& a, const Elem& b) {
    if (!a.valid() || !b.valid()) throw Error("operation on invalid element");
    if (!Ring::same(*a.ring(), *b.ring()))
        throw Error("elements of different rings: " + a.ring()->str() + " vs " +
                    b.ring()->str());
}

Elem Ring::zero() const {
    auto self = shared_from_this();
    switch (kind_) {
        case RingKind::Integers: return Elem(self, mpz_class(0));
        case RingKind::Rationals: return Elem(self, mpq_class(0));
        case RingKind::Gaussian: return Elem(self, GaussianValue{mpq_class(0), mpq_class(0)});
        case RingKind::PrimeField:
        case RingKind::Modular: return Elem(self, std::int64_t{0});
        case RingKind::FiniteField:
            return Elem(self, std::vector<std::int64_t>(degree_, 0));
        case RingKind::Dual: return Elem(self, ElemVec{inner_->zero(), inner_->zero()});
        case RingKind::Matrix: {
            ElemVec v(static_cast<std::size_t>(degree_) * degree_, inner_->zero());
            return Elem(self, std::move(v));
        }
        case RingKind::Func: return Elem(self, ElemVec(degree_, inner_->zero()));
        case RingKind::Poly: return Elem(self, ElemVec{});
    }
    throw Error("unreachable");
}

Elem Ring::one() const { return from_int(1); }

Elem Ring::from_int(long v) const { return from_mpq(mpq_class(v)); }

Elem Ring::from_mpq(const mpq_class& raw) const {
    auto self = shared_from_this();
    mpq_class v(raw);
    v.canonicalize();  // GMP comparisons require canonical form
    switch (kind_) {
        case RingKind::Integers:
            if (v.get_den() != 1) throw Error("not an integer: " + v.get_str());
            return Elem(self, mpz_class(v.get_num()));
        case RingKind::Rationals: return Elem(self, std::move(v));
        case RingKind::Gaussian: return Elem(self, GaussianValue{mpq_class(v), mpq_class(0)});
        case RingKind::PrimeField:
        case RingKind::Modular:
        case RingKind::FiniteField: {
            std::int64_t p = modulus_;
            mpz_class nummod = v.get_num() % p;
            mpz_class denmod = v.get_den() % p;
            std::int64_t num = mod_norm(nummod.get_si(), p);
            std::int64_t den = mod_norm(denmod.get_si(), p);
            bool ok = false;
            std::int64_t deninv = mod_inverse(den, p, ok);
            if (!ok) throw Error("denominator not invertible mod " + std::to_string(p));
            std::int64_t r = mod_norm(num * deninv, p);
            if (kind_ == RingKind::FiniteField) {
                std::vector<std::int64_t> c(degree_, 0);
                c[0] = r;
                return Elem(self, std::move(c));
            }
            return Elem(self, r);
        }
        case RingKind::Dual:
            return Elem(self, ElemVec{inner_->from_mpq(v), inner_->zero()});
        case RingKind::Matrix: {
            ElemVec m(static_cast<std::size_t>(degree_) * degree_, inner_->zero());
            for (int i = 0; i < degree_; ++i) m[i * degree_ + i] = inner_->from_mpq(v);
            return Elem(self, std::move(m));
        }
        case RingKind::Func: return Elem(self, ElemVec(degree_, inner_->from_mpq(v)));
        case RingKind::Poly: {
            Elem c = inner_->from_mpq(v);
            if (c.is_zero()) return Elem(self, ElemVec{});
            return Elem(self, ElemVec{std::move(c)});
        }
    }
    throw Error("unreachable");
}

Elem Ring::add(const Elem& a, const Elem& b) const {
    require_same_ring(a, b);
    auto self = shared_from_this();
    switch (kind_) {
        case RingKind::Integers: return Elem(self, mpz_class(as_z(a) + as_z(b)));
        case RingKind::Rationals: return Elem(self, mpq_class(as_q(a) + as_q(b)));
        case RingKind::Gaussian:
            return Elem(self, GaussianValue{as_g(a).re + as_g(b).re, as_g(a).im + as_g(b).im});
        case RingKind::PrimeField:
        case RingKind::Modular:
            return Elem(self, mod_norm(as_res(a) + as_res(b), modulus_));
        case RingKind::FiniteField: {
            std::vector<std::int64_t> c(degree_);
            for (int i = 0; i < degree_; ++i) c[i] = mod_norm(as_ff(a)[i] + as_ff(b)[i], modulus_);
            return Elem(self, std::move(c));
        }
        case RingKind::Dual:
        case RingKind::Matrix:
        case RingKind::Func: {
            const auto& va = as_vec(a);
            const auto& vb = as_vec(b);
            ElemVec c;
            c.reserve(va.size());
            for (std::size_t i = 0; i < va.size(); ++i) c.push_back(va[i] + vb[i]);
            return Elem(self, std::move(c));
        }
        case RingKind::Poly: {
            const auto& va = as_vec(a);
            const auto& vb = as_vec(b);
            ElemVec c;
            const std::size_t n = std::max(va.size(), vb.size());
            c.reserve(n);
            for (std::size_t i = 0; i < n; ++i) {
                if (i < va.size() && i < vb.size()) c.push_back(va[i] + vb[i]);
                else if (i < va.size()) c.push_back(va[i]);
                else c.push_back(vb[i]);
            }
            while (!c.empty() && c.back().is_zero()) c.pop_back();
            return Elem(self, std::move(c));
        }
    }
    throw Error("unreachable");
}

Elem Ring::neg(const Elem& a) const {
    auto self = shared_from_this();
    switch (kind_) {
        case RingKind::Integers: return Elem(self, mpz_class(-as_z(a)));
        case RingKind::Rationals: return Elem(self, mpq_class(-as_q(a)));
        case RingKind::Gaussian:
            return Elem(self, GaussianValue{-as_g(a).re, -as_g(a).im});
        case RingKind::PrimeField:
        case RingKind::Modular: return Elem(self, mod_norm(-as_res(a), modulus_));
        case RingKind::FiniteField: {
            std::vector<std::int64_t> c(degree_);
            for (int i = 0; i < degree_; ++i) c[i] = mod_norm(-as_ff(a)[i], modulus_);
            return Elem(self, std::move(c));
        }
        default: {
            const auto& va = as_vec(a);
            ElemVec c;
            c.reserve(va.size());
            for (const auto& x : va) c.push_back(-x);
            return Elem(self, std::move(c));
        }
    }
}

Elem Ring::sub(const Elem& a, const Elem& b) const { return add(a, neg(b)); }

Elem Ring::mul(const Elem& a, const Elem& b) const {
    require_same_ring(a, b);
    auto self = shared_from_this();
    switch (kind_) {
        case RingKind::Integers: return Elem(self, mpz_class(as_z(a) * as_z(b)));
        case RingKind::Rationals: return Elem(self, mpq_class(as_q(a) * as_q(b)));
        case RingKind::Gaussian: {
            const auto& x = as_g(a);
            const auto& y = as_g(b);
            return Elem(self, GaussianValue{x.re * y.re - x.im * y.im,
                                            x.re * y.im + x.im * y.re});
        }
        case RingKind::PrimeField:
        case RingKind::Modular:
            return Elem(self, mod_norm(as_res(a) * as_res(b), modulus_));
        case RingKind::FiniteField: {
            IPoly prod = ipoly_mul(as_ff(a), as_ff(b), modulus_);
            prod = ipoly_mod(std::move(prod), minpoly_, modulus_);
            prod.resize(degree_, 0);
            return Elem(self, std::move(prod));
        }
        case RingKind::Dual: {
            // (a0 + a1 eps)(b0 + b1 eps) = a0 b0 + (a0 b1 + a1 b0) eps
            const auto& x = as_vec(a);
            const auto& y = as_vec(b);
            return Elem(self, ElemVec{x[0] * y[0], x[0] * y[1] + x[1] * y[0]});
        }
        case RingKind::Matrix: {
            const int n = degree_;
            const auto& x = as_vec(a);
            const auto& y = as_vec(b);
            ElemVec c(static_cast<std::size_t>(n) * n, inner_->zero());
            for (int i = 0; i < n; ++i)
                for (int k = 0; k < n; ++k) {
                    if (x[i * n + k].is_zero()) continue;
                    for (int j = 0; j < n; ++j)
                        c[i * n + j] = c[i * n + j] + x[i * n + k] * y[k * n + j];
                }
            return Elem(self, std::move(c));
        }
        case RingKind::Func: {
            const auto& x = as_vec(a);
            const auto& y = as_vec(b);
            ElemVec c;
            c.reserve(x.size());
            for (std::size_t i = 0; i < x.size(); ++i) c.push_back(x[i] * y[i]);
            return Elem(self, std::move(c));
        }
        case RingKind::Poly: {
            const auto& x = as_vec(a);
            const auto& y = as_vec(b);
            if (x.empty() || y.empty()) return zero();
            ElemVec c(x.size() + y.size() - 1, inner_->zero());
            for (std::size_t i = 0; i < x.size(); ++i)
                for (std::size_t j = 0; j < y.size(); ++j)
                    c[i + j] = c[i + j] + x[i] * y[j];
            while (!c.empty() && c.back().is_zero()) c.pop_back();
            return Elem(self, std::move(c));
        }
    }
    throw Error("unreachable");
}

bool Ring::eq(const Elem& a, const Elem& b) const {
    require_same_ring(a, b);
    return a.payload() == b.payload();
}

bool Ring::is_zero(const Elem& a) const {
    switch (kind_) {
        case RingKind::Integers: return as_z(a) == 0;
        case RingKind::Rationals: return as_q(a) == 0;
        case RingKind::Gaussian: return as_g(a).re == 0 && as_g(a).im == 0;
        case RingKind::PrimeField:
        case RingKind::Modular: return as_res(a) == 0;
        case RingKind::FiniteField:
            return std::all_of(as_ff(a).begin(), as_ff(a).end(),
                               [](std::int64_t c) { return c == 0; });
        case RingKind::Poly: return as_vec(a).empty();
        default:
            return std::all_of(as_vec(a).begin(), as_vec(a).end(),
                               [](const Elem& e) { return e.is_zero(); });
    }
}

// --------------------------------------------------------------- involution

Elem Ring::involve(const Elem& a) const {
    auto self = shared_from_this();
    switch (inv_) {
        case InvolutionKind::Identity: return a;
        case InvolutionKind::Conjugate: {
            if (kind_ == RingKind::Gaussian) {
                const auto& g = as_g(a);
                return Elem(self, GaussianValue{g.re, -g.im});
            }
            // Frobenius x -> x^(p^(k/2)), applied as k/2 powers of x -> x^p.
            Elem x = a;
            for (int step = 0; step < degree_ / 2; ++step) {
                Elem acc = one();
                Elem base = x;
                std::int64_t e = modulus_;
                while (e > 0) {
                    if (e & 1) acc = mul(acc, base);
                    base = mul(base, base);
                    e >>= 1;
                }
                x = acc;
            }
            return x;
        }
        case InvolutionKind::Transpose:
        case InvolutionKind::ConjTranspose:
        case InvolutionKind::Sign: {
            const int n = degree_;
            const auto& v = as_vec(a);
            ElemVec c(static_cast<std::size_t>(n) * n, inner_->zero());
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j) {
                    Elem entry = v[j * n + i];
                    if (inv_ != InvolutionKind::Transpose) entry = entry.involve();
                    if (inv_ == InvolutionKind::Sign) {
                        bool si = i < sig_p_, sj = j < sig_p_;
                        if (si != sj) entry = -entry;
                    }
                    c[i * n + j] = std::move(entry);
                }
            return Elem(self, std::move(c));
        }
        case InvolutionKind::DualFlip: {
            const auto& v = as_vec(a);
            return Elem(self, ElemVec{v[0].involve(), -(v[1].involve())});
        }
        case InvolutionKind::Pointwise: {
            const auto& v = as_vec(a);
            ElemVec c;
            c.reserve(v.size());
            for (const auto& x : v) c.push_back(x.involve());
            return Elem(self, std::move(c));
        }
    }
    throw Error("unreachable");
}

// ------------------------------------------------------------------- invert

std::optional<Elem> Ring::invert(const Elem& a) const {
    auto self = shared_from_this();
    switch (kind_) {
        case RingKind::Integers: {
            if (as_z(a) == 1 || as_z(a) == -1) return a;
            return std::nullopt;
        }
        case RingKind::Rationals: {
            if (as_q(a) == 0) return std::nullopt;
            return Elem(self, mpq_class(1 / as_q(a)));
        }
        case RingKind::Gaussian: {
            const auto& g = as_g(a);
            mpq_class norm = g.re * g.re + g.im * g.im;
            if (norm == 0) return std::nullopt;
            return Elem(self, GaussianValue{g.re / norm, -g.im / norm});
        }
        case RingKind::PrimeField:
        case RingKind::Modular: {
            bool ok = false;
            std::int64_t inv = mod_inverse(as_res(a), modulus_, ok);
            if (!ok) return std::nullopt;
            return Elem(self, inv);
        }
        case RingKind::FiniteField: {
            if (is_zero(a)) return std::nullopt;
            IPoly g, u, v;
            ipoly_gcdext(as_ff(a), minpoly_, modulus_, g, u, v);
            if (g.size() != 1 || g[0] != 1) return std::nullopt;
            u = ipoly_mod(std::move(u), minpoly_, modulus_);
            u.resize(degree_, 0);
            return Elem(self, std::move(u));
        }
        case RingKind::Dual: {
            // (a0 + a1 eps)^{-1} = a0^{-1} - a0^{-1} a1 a0^{-1} eps
            const auto& v = as_vec(a);
            auto i0 = v[0].invert();
            if (!i0) return std::nullopt;
            return Elem(self, ElemVec{*i0, -(*i0 * v[1] * *i0)});
        }
        case RingKind::Func: {
            const auto& v = as_vec(a);
            ElemVec c;
            c.reserve(v.size());
            for (const auto& x : v) {
                auto ix = x.invert();
                if (!ix) return std::nullopt;
                c.push_back(std::move(*ix));
            }
            return Elem(self, std::move(c));
        }
        case RingKind::Poly: {
            const auto& v = as_vec(a);
            if (v.size() != 1) return std::nullopt;
            auto ic = v[0].invert();
            if (!ic) return std::nullopt;
            return Elem(self, ElemVec{std::move(*ic)});
        }
        case RingKind::Matrix: {
            if (inner_->commutative()) return invert_matrix_commutative(a);
            return invert_regular_rep(a);
        }
    }
    throw Error("unreachable");
}

namespace {
// Laplace expansion determinant of an n x n block held in `v` over a
// commutative ring; `rows`/`cols` select the active minor.
Elem minor_det(const ElemVec& v, int n, std::vector<int> rows, std::vector<int> cols) {
    const RingPtr& R = v[0].ring();
    if (rows.size() == 1) return v[rows[0] * n + cols[0]];
    Elem acc = R->zero();
    std::vector<int> subrows(rows.begin() + 1, rows.end());
    for (std::size_t j = 0; j < cols.size(); ++j) {
        const Elem& pivot = v[rows[0] * n + cols[j]];
        if (pivot.is_zero()) continue;
        std::vector<int> subcols;
        for (std::size_t t = 0; t < cols.size(); ++t)
            if (t != j) subcols.push_back(cols[t]);
        Elem term = pivot * minor_det(v, n, subrows, subcols);
        acc = (j % 2 == 0) ? acc + term : acc - term;
    }
    return acc;
}
}  // namespace

std::optional<Elem> Ring::invert_matrix_commutative(const Elem& a) const {
    const int n = degree_;
    const auto& v = as_vec(a);
    std::vector<int> all(n);
    for (int i = 0; i < n; ++i) all[i] = i;
    Elem det = minor_det(v, n, all, all);
    auto det_inv = det.invert();
    if (!det_inv) return std::nullopt;
    ElemVec adj(static_cast<std::size_t>(n) * n, inner_->zero());
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            // adj[i][j] = (-1)^{i+j} det(minor with row j, col i removed)
            std::vector<int> rows, cols;
            for (int r = 0; r < n; ++r)
                if (r != j) rows.push_back(r);
            for (int c = 0; c < n; ++c)
                if (c != i) cols.push_back(c);
            Elem cof = n == 1 ? inner_->one() : minor_det(v, n, rows, cols);
            if ((i + j) % 2 == 1) cof = -cof;
            adj[i * n + j] = cof * *det_inv;
        }
    return Elem(shared_from_this(), std::move(adj));
}

std::optional<Elem> Ring::invert_regular_rep(const Elem& a) const {
    // Left-regular representation over the bottom field: solve L_a x = 1.
    RingPtr K = bottom();
    if (!K->is_field())
        throw Error("invertibility over " + str() + " needs a field bottom scalar");
    const int D = scalar_dim();
    Mat L(D, Row(D, K->zero()));
    for (int j = 0; j < D; ++j) {
        ElemVec unit(D, K->zero());
        unit[j] = K->one();
        Elem bj = unflatten(unit);
        ElemVec col = flatten(mul(a, bj));
        for (int i = 0; i < D; ++i) L[i][j] = col[i];
    }
    auto x = solve(L, flatten(one()), K);
    if (!x) return std::nullopt;
    Elem inv = unflatten(*x);
    if (!eq(mul(a, inv), one()) || !eq(mul(inv, a), one())) return std::nullopt;
    return inv;
}

// -------------------------------------------------------------- enumeration

std::uint64_t Ring::element_count() const {
    if (!finite()) throw Error(str() + " is not finite");
    RingPtr K = bottom();
    std::uint64_t base = static_cast<std::uint64_t>(K->modulus());
    if (K->kind() == RingKind::FiniteField) {
        base = 1;
        for (int i = 0; i < K->degree(); ++i) base *= K->modulus();
    }
    unsigned __int128 total = 1;
    for (int i = 0; i < scalar_dim(); ++i) {
        total *= base;
        if (total > (static_cast<unsigned __int128>(1) << 62))
            throw Error(str() + ": too many elements to enumerate");
    }
    return static_cast<std::uint64_t>(total);
}

Elem Ring::element_at(std::uint64_t index) const {
    RingPtr K = bottom();
    const std::uint64_t base = K->element_count();
    const int d = scalar_dim();
    ElemVec coords;
    coords.reserve(d);
    for (int i = 0; i < d; ++i) {
        std::uint64_t digit = index % base;
        index /= base;
        // bottom kinds are PrimeField / Modular here (FiniteField bottoms out
        // at its prime field)
        coords.push_back(Elem(K, static_cast<std::int64_t>(digit)));
    }
    return unflatten(coords);
}

void Ring::for_each_element(const std::function<void(const Elem&)>& fn) const {
    const std::uint64_t n = element_count();
    for (std::uint64_t i = 0; i < n; ++i) fn(element_at(i));
}

// ------------------------------------------------------------ linearization

RingPtr Ring::bottom() const {
    switch (kind_) {
        case RingKind::Integers:
        case RingKind::Rationals:
        case RingKind::PrimeField:
        case RingKind::Modular: return shared_from_this();
        case RingKind::Gaussian: return rationals();
        case RingKind::FiniteField: return prime_field(modulus_);
        case RingKind::Dual:
        case RingKind::Matrix:
        case RingKind::Func: return inner_->bottom();
        case RingKind::Poly: throw Error("Poly(R) has unbounded rank");
    }
    throw Error("unreachable");
}

int Ring::scalar_dim() const {
    switch (kind_) {
        case RingKind::Integers:
        case RingKind::Rationals:
        case RingKind::PrimeField:
        case RingKind::Modular: return 1;
        case RingKind::Gaussian: return 2;
        case RingKind::FiniteField: return degree_;
        case RingKind::Dual: return 2 * inner_->scalar_dim();
        case RingKind::Matrix: return degree_ * degree_ * inner_->scalar_dim();
        case RingKind::Func: return degree_ * inner_->scalar_dim();
        case RingKind::Poly: throw Error("Poly(R) has unbounded rank");
    }
    throw Error("unreachable");
}

ElemVec Ring::flatten(const Elem& a) const {
    switch (kind_) {
        case RingKind::Integers:
        case RingKind::Rationals:
        case RingKind::PrimeField:
        case RingKind::Modular: return {a};
        case RingKind::Gaussian: {
            RingPtr Q = rationals();
            return {Elem(Q, as_g(a).re), Elem(Q, as_g(a).im)};
        }
        case RingKind::FiniteField: {
            RingPtr Fp = prime_field(modulus_);
            ElemVec out;
            out.reserve(degree_);
            for (std::int64_t c : as_ff(a)) out.push_back(Elem(Fp, c));
            return out;
        }
        case RingKind::Dual:
        case RingKind::Matrix:
        case RingKind::Func: {
            ElemVec out;
            out.reserve(scalar_dim());
            for (const auto& x : as_vec(a)) {
                ElemVec part = inner_->flatten(x);
                out.insert(out.end(), part.begin(), part.end());
            }
            return out;
        }
        case RingKind::Poly: throw Error("Poly(R) has unbounded rank");
    }
    throw Error("unreachable");
}

Elem Ring::unflatten(const ElemVec& coords) const {
    std::size_t pos = 0;
    Elem out = unflatten_from(coords, pos);
    if (pos != coords.size()) throw Error("unflatten: wrong coordinate count");
    return out;
}

Elem Ring::unflatten_from(const ElemVec& coords, std::size_t& pos) const {
    auto take = [&]() -> const Elem& {
        if (pos >= coords.size()) throw Error("unflatten: too few coordinates");
        return coords[pos++];
    };
    auto self = shared_from_this();
    switch (kind_) {
        case RingKind::Integers:
        case RingKind::Rationals:
        case RingKind::PrimeField:
        case RingKind::Modular: return Elem(self, take().payload());
        case RingKind::Gaussian: {
            mpq_class re = as_q(take());
            mpq_class im = as_q(take());
            return Elem(self, GaussianValue{std::move(re), std::move(im)});
        }
        case RingKind::FiniteField: {
            std::vector<std::int64_t> c(degree_);
            for (int i = 0; i < degree_; ++i) c[i] = as_res(take());
            return Elem(self, std::move(c));
        }
        case RingKind::Dual: {
            Elem a = inner_->unflatten_from(coords, pos);
            Elem b = inner_->unflatten_from(coords, pos);
            return Elem(self, ElemVec{std::move(a), std::move(b)});
        }
        case RingKind::Matrix:
        case RingKind::Func: {
            const int cnt = kind_ == RingKind::Matrix ? degree_ * degree_ : degree_;
            ElemVec v;
            v.reserve(cnt);
            for (int i = 0; i < cnt; ++i) v.push_back(inner_->unflatten_from(coords, pos));
            return Elem(self, std::move(v));
        }
        case RingKind::Poly: throw Error("Poly(R) has unbounded rank");
    }
    throw Error("unreachable");
}

// ------------------------------------------------------------- complex unit

std::optional<Elem> Ring::complex_unit() const {
    auto verify = [this](const Elem& c) {
        return eq(mul(c, c), neg(one())) && eq(involve(c), neg(c)) && !eq(c, neg(c));
    };
    switch (kind_) {
        case RingKind::Gaussian: {
            Elem i(shared_from_this(), GaussianValue{mpq_class(0), mpq_class(1)});
            if (verify(i)) return i;
            return std::nullopt;
        }
        case RingKind::FiniteField: {
            const std::uint64_t n = element_count();
            for (std::uint64_t idx = 0; idx < n; ++idx) {
                Elem c = element_at(idx);
                if (verify(c)) return c;
            }
            return std::nullopt;
        }
        case RingKind::Dual:
        case RingKind::Matrix:
        case RingKind::Func: {
            auto ii = inner_->complex_unit();
            if (!ii) return std::nullopt;
            Elem lifted = zero();
            auto self = shared_from_this();
            ElemVec v = as_vec(lifted);
            if (kind_ == RingKind::Dual) v[0] = *ii;
            else if (kind_ == RingKind::Func) std::fill(v.begin(), v.end(), *ii);
            else
                for (int i = 0; i < degree_; ++i) v[i * degree_ + i] = *ii;
            Elem cand(self, std::move(v));
            if (verify(cand)) return cand;
            return std::nullopt;
        }
        default: return std::nullopt;
    }
}

// ---------------------------------------------------------------- to_string

std::string Ring::to_string(const Elem& a) const {
    switch (kind_) {
        case RingKind::Integers: return as_z(a).get_str();
        case RingKind::Rationals: return as_q(a).get_str();
        case RingKind::Gaussian: {
            const auto& g = as_g(a);
            if (g.im == 0) return g.re.get_str();
            mpq_class mag = abs(g.im);
            std::string imabs = mag == 1 ? "i" : mag.get_str() + "i";
            std::string imstr = (g.im < 0 ? "-" : "") + imabs;
            if (g.re == 0) return imstr;
            return g.re.get_str() + (g.im < 0 ? "-" : "+") + imabs;
        }
        case RingKind::PrimeField:
        case RingKind::Modular: return std::to_string(as_res(a));
        case RingKind::FiniteField: {
            const auto& c = as_ff(a);
            std::string out;
            for (int d = degree_ - 1; d >= 0; --d) {
                if (c[d] == 0) continue;
                if (!out.empty()) out += "+";
                if (d == 0) out += std::to_string(c[d]);
                else {
                    if (c[d] != 1) out += std::to_string(c[d]);
                    out += d == 1 ? "t" : "t^" + std::to_string(d);
                }
            }
            return out.empty() ? "0" : out;
        }
        case RingKind::Dual: {
            const auto& v = as_vec(a);
            if (v[1].is_zero()) return v[0].str();
            std::string epart = v[1].is_one() ? "eps" : wrap_composite(v[1].str()) + "eps";
            if (v[0].is_zero()) return epart;
            return wrap_composite(v[0].str()) + "+" + epart;
        }
        case RingKind::Matrix: {
            const int n = degree_;
            const auto& v = as_vec(a);
            std::string out = "[";
            for (int i = 0; i < n; ++i) {
                out += i ? ",[" : "[";
                for (int j = 0; j < n; ++j) out += (j ? "," : "") + v[i * n + j].str();
                out += "]";
            }
            return out + "]";
        }
        case RingKind::Func: {
            const auto& v = as_vec(a);
            std::string out = "(";
            for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + v[i].str();
            return out + ")";
        }
        case RingKind::Poly: {
            const auto& v = as_vec(a);
            if (v.empty()) return "0";
            std::string out;
            for (int d = static_cast<int>(v.size()) - 1; d >= 0; --d) {
                if (v[d].is_zero()) continue;
                if (!out.empty()) out += "+";
                std::string cs = v[d].str();
                if (d == 0) out += wrap_composite(cs);
                else {
                    if (!v[d].is_one()) out += wrap_composite(cs);
                    out += d == 1 ? "X" : "X^" + std::to_string(d);
                }
            }
            return out.empty() ? "0" : out;
        }
    }
    throw Error("unreachable");
}

// ----------------------------------------------------------- Elem operators

Elem Elem::operator+(const Elem& o) const { return ring_->add(*this, o); }
Elem Elem::operator-(const Elem& o) const { return ring_->sub(*this, o); }
Elem Elem::operator*(const Elem& o) const { return ring_->mul(*this, o); }
Elem Elem::operator-() const { return ring_->neg(*this); }
bool Elem::operator==(const Elem& o) const { return ring_->eq(*this, o); }
bool Elem::is_zero() const { return ring_->is_zero(*this); }
bool Elem::is_one() const { return ring_->eq(*this, ring_->one()); }
Elem Elem::involve() const { return ring_->involve(*this); }
std::optional<Elem> Elem::invert() const { return ring_->invert(*this); }
std::string Elem::str() const { return ring_->to_string(*this); }

// ------------------------------------------------------------- extended gcd

std::tuple<Elem, Elem, Elem> extended_gcd(const Elem& a, const Elem& b) {
    require_same_ring(a, b);
    const RingPtr& R = a.ring();
    if (a.is_zero() && b.is_zero()) throw Error("extended_gcd(0, 0) is undefined");
    if (R->kind() == RingKind::Integers) {
        mpz_class g, s, t;
        mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(),
                   as_z(a).get_mpz_t(), as_z(b).get_mpz_t());
        // g = s*a + t*b, g > 0; convention here is x*a - y*b = g.
        return {Elem(R, g), Elem(R, s), Elem(R, mpz_class(-t))};
    }
    if (R->kind() == RingKind::Poly && R->inner()->is_field()) {
        // classic Euclid with Bezout tracking: u*a + v*b = g
        Elem r0 = a, r1 = b;
        Elem u0 = R->one(), u1 = R->zero(), v0 = R->zero(), v1 = R->one();
        while (!r1.is_zero()) {
            // divide r0 by r1
            Elem q = R->zero(), rem = r0;
            Elem lead = poly_leading_coeff(r1);
            Elem linv = *lead.invert();
            while (!rem.is_zero() && poly_degree(rem) >= poly_degree(r1)) {
                int shift = poly_degree(rem) - poly_degree(r1);
                Elem coef = poly_leading_coeff(rem) * linv;
                ElemVec mono(shift + 1, R->inner()->zero());
                mono[shift] = coef;
                Elem m(R, std::move(mono));
                q = q + m;
                rem = rem - m * r1;
            }
            Elem u2 = u0 - q * u1, v2 = v0 - q * v1;
            r0 = r1; r1 = rem; u0 = u1; u1 = u2; v0 = v1; v1 = v2;
        }
        Elem lead = poly_leading_coeff(r0);
        Elem linv = Elem(R, ElemVec{*lead.invert()});
        // convention x*a - y*b = g
        return {linv * r0, linv * u0, -(linv * v0)};
    }
    throw Error("extended_gcd needs Z or Poly(field), got " + R->str());
}

int poly_degree(const Elem& p) {
    if (p.ring()->kind() != RingKind::Poly) throw Error("poly_degree on non-polynomial");
    return static_cast<int>(std::get<ElemVec>(p.payload()).size()) - 1;
}

Elem poly_leading_coeff(const Elem& p) {
    const auto& v = std::get<ElemVec>(p.payload());
    if (v.empty()) return p.ring()->inner()->zero();
    return v.back();
}

}  // namespace ringline
