#include "ringline/projline.hpp"

#include <utility>

#include "ringline/error.hpp"

namespace ringline {

namespace {

void require_ring(const RingPtr& ring, const Elem& v) {
    if (!v.valid() || !Ring::same(*ring, *v.ring()))
        throw Error("element does not belong to the expected ring");
}

bool poly_over_field(const Ring& r) {
    return r.kind() == RingKind::Poly && r.inner()->is_field();
}

}  // namespace

ProjectiveLine::ProjectiveLine(RingPtr ring) : ring_(std::move(ring)) {
    if (!ring_) throw Error("projective line requires a ring");
    mat_ = Ring::matrix(2, ring_);
}

Mat2 ProjectiveLine::mat2(Elem a, Elem b, Elem c, Elem d) const {
    require_ring(ring_, a);
    require_ring(ring_, b);
    require_ring(ring_, c);
    require_ring(ring_, d);
    return {std::move(a), std::move(b), std::move(c), std::move(d)};
}

Mat2 ProjectiveLine::identity2() const {
    return {ring_->one(), ring_->zero(), ring_->zero(), ring_->one()};
}

Mat2 ProjectiveLine::swap2() const {
    return {ring_->zero(), ring_->one(), ring_->one(), ring_->zero()};
}

Mat2 ProjectiveLine::mul(const Mat2& x, const Mat2& y) const {
    return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d,
            x.c * y.a + x.d * y.c, x.c * y.b + x.d * y.d};
}

Mat2 ProjectiveLine::add(const Mat2& x, const Mat2& y) const {
    return {x.a + y.a, x.b + y.b, x.c + y.c, x.d + y.d};
}

Mat2 ProjectiveLine::neg(const Mat2& x) const { return {-x.a, -x.b, -x.c, -x.d}; }

bool ProjectiveLine::eq(const Mat2& x, const Mat2& y) const {
    return x.a == y.a && x.b == y.b && x.c == y.c && x.d == y.d;
}

bool ProjectiveLine::is_invertible(const Mat2& x) const { return invert(x).has_value(); }

std::optional<Mat2> ProjectiveLine::invert(const Mat2& x) const {
    auto inv = mat_->invert(to_matrix_elem(x));
    if (!inv) return std::nullopt;
    return from_matrix_elem(*inv);
}

Mat2 ProjectiveLine::dagger(const Mat2& x) const {
    return {x.a.involve(), x.c.involve(), x.b.involve(), x.d.involve()};
}

Elem ProjectiveLine::to_matrix_elem(const Mat2& x) const {
    return Elem(mat_, Elem::Payload(ElemVec{x.a, x.b, x.c, x.d}));
}

Mat2 ProjectiveLine::from_matrix_elem(const Elem& e) const {
    const auto& v = std::get<ElemVec>(e.payload());
    return {v[0], v[1], v[2], v[3]};
}

std::string ProjectiveLine::str(const Mat2& x) const {
    return "[[" + x.a.str() + "," + x.b.str() + "],[" + x.c.str() + "," + x.d.str() + "]]";
}

GroupElement ProjectiveLine::group_element(const Mat2& m) const {
    auto inv = invert(m);
    if (!inv) throw Error("matrix is not invertible over " + ring_->str());
    return {m, *inv};
}

GroupElement ProjectiveLine::group_element(const Mat2& m, const Mat2& known_inverse) const {
    return {m, known_inverse};
}

Point ProjectiveLine::point_from_frame(const Mat2& frame) const {
    auto g = group_element(frame);
    return {g.m, g.inv};
}

Point ProjectiveLine::o_plus() const { return {identity2(), identity2()}; }

Point ProjectiveLine::o_minus() const { return {swap2(), swap2()}; }

std::optional<Point> ProjectiveLine::point_from_vector(const Elem& v1, const Elem& v2) const {
    require_ring(ring_, v1);
    require_ring(ring_, v2);
    // Unit pivot: the complement column and the inverse are closed forms.
    if (auto d = v2.invert()) {
        Mat2 frame = {ring_->one(), v1, ring_->zero(), v2};
        Mat2 finv = {ring_->one(), -(v1 * *d), ring_->zero(), *d};
        return Point{frame, finv};
    }
    if (auto d = v1.invert()) {
        Mat2 frame = {ring_->zero(), v1, ring_->one(), v2};
        Mat2 finv = {-(v2 * *d), ring_->one(), *d, ring_->zero()};
        return Point{frame, finv};
    }
    if (ring_->finite()) {
        std::uint64_t n = ring_->element_count();
        for (std::uint64_t i = 0; i < n; ++i) {
            Elem w1 = ring_->element_at(i);
            for (std::uint64_t j = 0; j < n; ++j) {
                Mat2 cand = {w1, v1, ring_->element_at(j), v2};
                if (auto inv = invert(cand)) return Point{cand, *inv};
            }
        }
        return std::nullopt;
    }
    if (ring_->kind() == RingKind::Integers || poly_over_field(*ring_)) {
        if (v1.is_zero() && v2.is_zero()) return std::nullopt;
        auto [g, x, y] = extended_gcd(v2, v1);  // x*v2 - y*v1 = g
        auto gi = g.invert();
        if (!gi) return std::nullopt;
        Elem w1 = *gi * x, w2 = *gi * y;
        Mat2 frame = {w1, v1, w2, v2};
        // Commutative with determinant 1, so the adjugate is the inverse.
        Mat2 finv = {v2, -v1, -w2, w1};
        return Point{frame, finv};
    }
    throw Error("cannot decide completion of a vector over " + ring_->str());
}

bool ProjectiveLine::point_eq(const Point& x, const Point& y) const {
    // Same class iff frame(x)^-1 frame(y) preserves the second coordinate
    // line, i.e. its upper-right entry vanishes.
    Elem t = x.inv.a * y.frame.b + x.inv.b * y.frame.d;
    return t.is_zero();
}

bool ProjectiveLine::transversal(const Point& x, const Point& y) const {
    return is_invertible({x.v1(), y.v1(), x.v2(), y.v2()});
}

Point ProjectiveLine::act(const GroupElement& g, const Point& x) const {
    return {mul(g.m, x.frame), mul(x.inv, g.inv)};
}

std::optional<Elem> ProjectiveLine::affine_coord(const Point& x) const {
    auto d = x.frame.d.invert();
    if (!d) return std::nullopt;
    return x.frame.b * *d;
}

std::optional<Elem> ProjectiveLine::affine_coord(const Point& x, const Point& chart) const {
    // Move the chart point to o- and read the standard coordinate there.
    GroupElement g{mul(swap2(), chart.inv), mul(chart.frame, swap2())};
    return affine_coord(act(g, x));
}

std::vector<Point> ProjectiveLine::all_points() const {
    if (!ring_->finite()) throw Error("point enumeration requires a finite ring");
    std::vector<Point> points;
    std::uint64_t n = ring_->element_count();
    for (std::uint64_t i = 0; i < n; ++i) {
        Elem v1 = ring_->element_at(i);
        for (std::uint64_t j = 0; j < n; ++j) {
            Elem v2 = ring_->element_at(j);
            if (v1.is_zero() && v2.is_zero()) continue;
            auto cand = point_from_vector(v1, v2);
            if (!cand) continue;
            bool fresh = true;
            for (const Point& p : points) {
                if (point_eq(p, *cand)) {
                    fresh = false;
                    break;
                }
            }
            if (fresh) points.push_back(*cand);
        }
    }
    return points;
}

std::string ProjectiveLine::point_str(const Point& x) const {
    return "point[(" + x.v1().str() + ");(" + x.v2().str() + ")]";
}

Elem exact_div(const Elem& a, const Elem& b) {
    require_same_ring(a, b);
    const RingPtr& R = a.ring();
    if (b.is_zero()) throw Error("division by zero");
    if (R->kind() == RingKind::Integers) {
        const auto& za = std::get<mpz_class>(a.payload());
        const auto& zb = std::get<mpz_class>(b.payload());
        mpz_class q, r;
        mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), za.get_mpz_t(), zb.get_mpz_t());
        if (r != 0) throw Error("inexact division over Z");
        return Elem(R, Elem::Payload(q));
    }
    if (poly_over_field(*R)) {
        const RingPtr& K = R->inner();
        ElemVec rem = std::get<ElemVec>(a.payload());
        const ElemVec& den = std::get<ElemVec>(b.payload());
        ElemVec quot(rem.size() > den.size() ? rem.size() - den.size() + 1 : 1, K->zero());
        Elem lead_inv = *den.back().invert();
        while (rem.size() >= den.size() && !(rem.size() == 1 && rem[0].is_zero())) {
            Elem coeff = rem.back() * lead_inv;
            std::size_t shift = rem.size() - den.size();
            quot[shift] = coeff;
            for (std::size_t i = 0; i < den.size(); ++i)
                rem[shift + i] = rem[shift + i] - coeff * den[i];
            while (rem.size() > 1 && rem.back().is_zero()) rem.pop_back();
            if (rem.size() < den.size()) break;
        }
        for (const Elem& c : rem)
            if (!c.is_zero()) throw Error("inexact polynomial division");
        while (quot.size() > 1 && quot.back().is_zero()) quot.pop_back();
        return Elem(R, Elem::Payload(std::move(quot)));
    }
    throw Error("exact division is only defined over Z and polynomials over a field");
}

Fraction make_fraction(Elem num, Elem den) {
    require_same_ring(num, den);
    RingPtr R = num.ring();
    bool over_z = R->kind() == RingKind::Integers;
    if (!over_z && !poly_over_field(*R))
        throw Error("fractions require Z or polynomials over a field");
    if (den.is_zero()) {
        if (num.is_zero()) throw Error("fraction 0/0 is undefined");
        return {R->one(), R->zero()};
    }
    if (num.is_zero()) return {R->zero(), R->one()};
    auto [g, x, y] = extended_gcd(num, den);
    (void)x;
    (void)y;
    num = exact_div(num, g);
    den = exact_div(den, g);
    if (over_z) {
        if (std::get<mpz_class>(den.payload()) < 0) {
            num = -num;
            den = -den;
        }
    } else {
        Elem scale(R, Elem::Payload(ElemVec{*poly_leading_coeff(den).invert()}));
        num = num * scale;
        den = den * scale;
    }
    return {std::move(num), std::move(den)};
}

Fraction fraction_infinity(const RingPtr& ring) { return {ring->one(), ring->zero()}; }

bool fraction_is_infinity(const Fraction& f) { return f.den.is_zero(); }

std::string fraction_str(const Fraction& f) {
    if (fraction_is_infinity(f)) return "infinity";
    if (f.den.is_one()) return f.num.str();
    if (f.num.ring()->kind() == RingKind::Integers) return f.num.str() + "/" + f.den.str();
    return "(" + f.num.str() + ")/(" + f.den.str() + ")";
}

Point pid_from_fraction(const ProjectiveLine& line, const Fraction& f) {
    auto p = line.point_from_vector(f.num, f.den);
    if (!p) throw Error("fraction is not reduced");
    return *p;
}

Fraction pid_to_fraction(const ProjectiveLine& line, const Point& x) {
    (void)line;
    return make_fraction(x.v1(), x.v2());
}

}  // namespace ringline
