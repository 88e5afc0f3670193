#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "ringline/projline.hpp"

namespace ringline {

enum class FormFlavor { Hermitian, Skew };

// Nondegenerate sesquilinear form beta(v, w) = sum_{i,j} v_i^* B_ij w_j on A^2
// with B invertible and B-dagger = B (hermitian) or -B (skew-hermitian).
class SesquiForm {
public:
    SesquiForm(ProjectiveLine line, Mat2 matrix);

    // The three standard forms: [[0,1],[-1,0]] (skew), [[0,1],[1,0]] and
    // [[1,0],[0,-1]] (hermitian).  In the CLI these are omega/theta/sigma.
    static SesquiForm symplectic(const ProjectiveLine& line);
    static SesquiForm hyperbolic(const ProjectiveLine& line);
    static SesquiForm diagonal(const ProjectiveLine& line);
    static SesquiForm named(const ProjectiveLine& line, const std::string& token);

    const ProjectiveLine& line() const { return line_; }
    const Mat2& matrix() const { return b_; }
    FormFlavor flavor() const { return flavor_; }

    Elem eval(const Elem& v1, const Elem& v2, const Elem& w1, const Elem& w2) const;
    Elem eval(const Point& x, const Point& y) const;  // on canonical generators
    bool isotropic(const Point& x) const;             // beta(v, v) = 0, class-invariant

    // The form-adjoint g -> B^-1 g-dagger B; an antihomomorphism.
    Mat2 adjoint(const Mat2& g) const;
    GroupElement adjoint(const GroupElement& g) const;
    bool is_isometry(const Mat2& g) const;  // adjoint(g) g = 1

    // Orthocomplement of a point; its frame is adjoint(frame)^-1 * seed frame,
    // where the seed is the kernel of the bottom row of B.
    const Point& seed() const { return seed_; }
    Point orthocomplement(const Point& x) const;
    bool fixed(const Point& x) const;  // x = x-perp

    std::vector<Point> fixed_points() const;           // finite rings
    std::vector<GroupElement> isometry_group() const;  // finite rings

private:
    ProjectiveLine line_;
    Mat2 b_, binv_;
    FormFlavor flavor_;
    Point seed_;
};

// All a with a a^* = a^* a = 1, in enumeration order (finite rings).
std::vector<Elem> unitary_elements(const RingPtr& ring);

// The point of the class of (1, a) for a unitary; lands in the fixed set of
// the diagonal form.
Point unitary_embed(const ProjectiveLine& line, const Elem& a);

// diag(i, 1) for a ring with a designated complex unit; conjugates the
// skew geometry into the hyperbolic one.
GroupElement complex_type_frame(const ProjectiveLine& line);

// Exhaustive search (finite rings) for h and a unit u with
// h-dagger B_from h = u B_to.
std::optional<std::pair<Mat2, Elem>> find_form_equivalence(const SesquiForm& from,
                                                           const SesquiForm& to);
// Verify one explicit witness of the same identity.
bool form_equivalent_by(const SesquiForm& from, const SesquiForm& to, const Mat2& h,
                        const Elem& unit);

// Orbit of a single point under a list of group elements, in breadth-first
// discovery order.
std::vector<Point> group_orbit(const ProjectiveLine& line,
                               const std::vector<GroupElement>& group, const Point& seed);

// Partition points into orbits under a list of group elements; each orbit
// lists point indices in increasing order, orbits ordered by smallest index.
std::vector<std::vector<std::size_t>> group_orbits(const ProjectiveLine& line,
                                                   const std::vector<GroupElement>& group,
                                                   const std::vector<Point>& points);

// All a with a^* = a, resp. a^* = -a, in enumeration order (finite rings).
std::vector<Elem> hermitian_elements(const RingPtr& ring);
std::vector<Elem> antihermitian_elements(const RingPtr& ring);

}  // namespace ringline
