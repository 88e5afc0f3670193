#include "ringline/hermline.hpp"

#include <algorithm>
#include <utility>

#include "ringline/error.hpp"

namespace ringline {

namespace {

// Generator of the right-module kernel of the row (r1, r2); needs a unit entry.
Point row_kernel_point(const ProjectiveLine& line, const Elem& r1, const Elem& r2) {
    if (auto inv = r1.invert()) {
        auto p = line.point_from_vector(line.ring()->zero() - *inv * r2, line.ring()->one());
        return *p;
    }
    if (auto inv = r2.invert()) {
        auto p = line.point_from_vector(line.ring()->one(), line.ring()->zero() - *inv * r1);
        return *p;
    }
    throw Error("form needs a unit entry in its bottom row to seed orthocomplements");
}

}  // namespace

SesquiForm::SesquiForm(ProjectiveLine line, Mat2 matrix)
    : line_(std::move(line)),
      b_(std::move(matrix)),
      binv_(line_.identity2()),
      flavor_(FormFlavor::Hermitian),
      seed_(line_.o_plus()) {
    auto inv = line_.invert(b_);
    if (!inv) throw Error("form matrix must be invertible");
    binv_ = *inv;
    Mat2 dag = line_.dagger(b_);
    if (line_.eq(dag, b_))
        flavor_ = FormFlavor::Hermitian;
    else if (line_.eq(dag, line_.neg(b_)))
        flavor_ = FormFlavor::Skew;
    else
        throw Error("form matrix must be hermitian or skew-hermitian");
    seed_ = row_kernel_point(line_, b_.c, b_.d);
}

SesquiForm SesquiForm::symplectic(const ProjectiveLine& line) {
    const RingPtr& A = line.ring();
    return SesquiForm(line, line.mat2(A->zero(), A->one(), -A->one(), A->zero()));
}

SesquiForm SesquiForm::hyperbolic(const ProjectiveLine& line) {
    const RingPtr& A = line.ring();
    return SesquiForm(line, line.mat2(A->zero(), A->one(), A->one(), A->zero()));
}

SesquiForm SesquiForm::diagonal(const ProjectiveLine& line) {
    const RingPtr& A = line.ring();
    return SesquiForm(line, line.mat2(A->one(), A->zero(), A->zero(), -A->one()));
}

SesquiForm SesquiForm::named(const ProjectiveLine& line, const std::string& token) {
    if (token == "omega") return symplectic(line);
    if (token == "theta") return hyperbolic(line);
    if (token == "sigma") return diagonal(line);
    throw Error("unknown form name: " + token + " (expected omega, theta, or sigma)");
}

Elem SesquiForm::eval(const Elem& v1, const Elem& v2, const Elem& w1, const Elem& w2) const {
    Elem a = v1.involve(), b = v2.involve();
    return a * (b_.a * w1 + b_.b * w2) + b * (b_.c * w1 + b_.d * w2);
}

Elem SesquiForm::eval(const Point& x, const Point& y) const {
    return eval(x.v1(), x.v2(), y.v1(), y.v2());
}

bool SesquiForm::isotropic(const Point& x) const { return eval(x, x).is_zero(); }

Mat2 SesquiForm::adjoint(const Mat2& g) const {
    return line_.mul(binv_, line_.mul(line_.dagger(g), b_));
}

GroupElement SesquiForm::adjoint(const GroupElement& g) const {
    return {adjoint(g.m), adjoint(g.inv)};
}

bool SesquiForm::is_isometry(const Mat2& g) const {
    return line_.eq(line_.mul(adjoint(g), g), line_.identity2());
}

Point SesquiForm::orthocomplement(const Point& x) const {
    // adjoint is an antihomomorphism, so adjoint(frame)^-1 = adjoint(inverse).
    return {line_.mul(adjoint(x.inv), seed_.frame), line_.mul(seed_.inv, adjoint(x.frame))};
}

bool SesquiForm::fixed(const Point& x) const { return line_.point_eq(orthocomplement(x), x); }

std::vector<Point> SesquiForm::fixed_points() const {
    std::vector<Point> out;
    for (const Point& p : line_.all_points())
        if (fixed(p)) out.push_back(p);
    return out;
}

std::vector<GroupElement> SesquiForm::isometry_group() const {
    const RingPtr& M = line_.matrix_ring();
    if (!M->finite()) throw Error("isometry enumeration requires a finite ring");
    std::vector<GroupElement> out;
    std::uint64_t n = M->element_count();
    for (std::uint64_t i = 0; i < n; ++i) {
        Mat2 g = line_.from_matrix_elem(M->element_at(i));
        Mat2 adj = adjoint(g);
        if (line_.eq(line_.mul(adj, g), line_.identity2()) &&
            line_.eq(line_.mul(g, adj), line_.identity2()))
            out.push_back({g, adj});
    }
    return out;
}

std::vector<Elem> hermitian_elements(const RingPtr& ring) {
    if (!ring->finite()) throw Error("hermitian enumeration requires a finite ring");
    std::vector<Elem> out;
    ring->for_each_element([&](const Elem& a) {
        if (a.involve() == a) out.push_back(a);
    });
    return out;
}

std::vector<Elem> antihermitian_elements(const RingPtr& ring) {
    if (!ring->finite()) throw Error("antihermitian enumeration requires a finite ring");
    std::vector<Elem> out;
    ring->for_each_element([&](const Elem& a) {
        if (a.involve() == -a) out.push_back(a);
    });
    return out;
}

std::vector<Elem> unitary_elements(const RingPtr& ring) {
    if (!ring->finite()) throw Error("unitary enumeration requires a finite ring");
    std::vector<Elem> out;
    ring->for_each_element([&](const Elem& a) {
        Elem s = a.involve();
        if ((s * a).is_one() && (a * s).is_one()) out.push_back(a);
    });
    return out;
}

Point unitary_embed(const ProjectiveLine& line, const Elem& a) {
    Elem s = a.involve();
    if (!(s * a).is_one() || !(a * s).is_one())
        throw Error("unitary embedding requires a a^* = a^* a = 1");
    return *line.point_from_vector(line.ring()->one(), a);
}

GroupElement complex_type_frame(const ProjectiveLine& line) {
    const RingPtr& A = line.ring();
    auto i = A->complex_unit();
    if (!i) throw Error("ring has no designated complex unit: " + A->str());
    Mat2 m = line.mat2(*i, A->zero(), A->zero(), A->one());
    Mat2 inv = line.mat2(-*i, A->zero(), A->zero(), A->one());
    return {m, inv};
}

std::optional<std::pair<Mat2, Elem>> find_form_equivalence(const SesquiForm& from,
                                                           const SesquiForm& to) {
    const ProjectiveLine& line = from.line();
    const RingPtr& A = line.ring();
    if (!Ring::same(*A, *to.line().ring()))
        throw Error("form equivalence requires forms over the same ring");
    if (!A->finite()) throw Error("form-equivalence search requires a finite ring");
    std::vector<Elem> units;
    A->for_each_element([&](const Elem& u) {
        if (u.is_unit()) units.push_back(u);
    });
    const RingPtr& M = line.matrix_ring();
    std::uint64_t n = M->element_count();
    for (std::uint64_t i = 0; i < n; ++i) {
        Mat2 h = line.from_matrix_elem(M->element_at(i));
        if (!line.is_invertible(h)) continue;
        Mat2 c = line.mul(line.dagger(h), line.mul(from.matrix(), h));
        for (const Elem& u : units) {
            const Mat2& t = to.matrix();
            Mat2 scaled = line.mat2(u * t.a, u * t.b, u * t.c, u * t.d);
            if (line.eq(c, scaled)) return std::make_pair(h, u);
        }
    }
    return std::nullopt;
}

bool form_equivalent_by(const SesquiForm& from, const SesquiForm& to, const Mat2& h,
                        const Elem& unit) {
    const ProjectiveLine& line = from.line();
    if (!unit.is_unit() || !line.is_invertible(h)) return false;
    Mat2 c = line.mul(line.dagger(h), line.mul(from.matrix(), h));
    const Mat2& t = to.matrix();
    return line.eq(c, line.mat2(unit * t.a, unit * t.b, unit * t.c, unit * t.d));
}

std::vector<Point> group_orbit(const ProjectiveLine& line,
                               const std::vector<GroupElement>& group, const Point& seed) {
    std::vector<Point> orbit{seed};
    for (std::size_t k = 0; k < orbit.size(); ++k) {
        for (const GroupElement& g : group) {
            Point q = line.act(g, orbit[k]);
            bool fresh = true;
            for (const Point& p : orbit) {
                if (line.point_eq(p, q)) {
                    fresh = false;
                    break;
                }
            }
            if (fresh) orbit.push_back(q);
        }
    }
    return orbit;
}

std::vector<std::vector<std::size_t>> group_orbits(const ProjectiveLine& line,
                                                   const std::vector<GroupElement>& group,
                                                   const std::vector<Point>& points) {
    std::vector<std::vector<std::size_t>> orbits;
    std::vector<bool> seen(points.size(), false);
    auto index_of = [&](const Point& p) -> std::size_t {
        for (std::size_t i = 0; i < points.size(); ++i)
            if (line.point_eq(points[i], p)) return i;
        throw Error("orbit left the supplied point list");
    };
    for (std::size_t start = 0; start < points.size(); ++start) {
        if (seen[start]) continue;
        std::vector<std::size_t> orbit{start};
        seen[start] = true;
        for (std::size_t k = 0; k < orbit.size(); ++k) {
            for (const GroupElement& g : group) {
                std::size_t j = index_of(line.act(g, points[orbit[k]]));
                if (!seen[j]) {
                    seen[j] = true;
                    orbit.push_back(j);
                }
            }
        }
        std::sort(orbit.begin(), orbit.end());
        orbits.push_back(std::move(orbit));
    }
    return orbits;
}

}  // namespace ringline
