#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ringline/ring.hpp"

namespace ringline {

// 2x2 matrix [[a,b],[c,d]] over the base ring of a projective line.
struct Mat2 {
    Elem a, b, c, d;
};

// Invertible frame together with its cached inverse.
struct GroupElement {
    Mat2 m, inv;
};

// A point of the projective line: the class of the right submodule generated
// by the second column of an invertible frame; the first column witnesses the
// complement.  The frame inverse is cached for O(1) comparisons and actions.
struct Point {
    Mat2 frame, inv;
    const Elem& v1() const { return frame.b; }
    const Elem& v2() const { return frame.d; }
};

class ProjectiveLine {
public:
    explicit ProjectiveLine(RingPtr ring);

    const RingPtr& ring() const { return ring_; }
    const RingPtr& matrix_ring() const { return mat_; }

    // -- 2x2 matrix helpers ----------------------------------------------
    Mat2 mat2(Elem a, Elem b, Elem c, Elem d) const;
    Mat2 identity2() const;
    Mat2 swap2() const;  // [[0,1],[1,0]]
    Mat2 mul(const Mat2& x, const Mat2& y) const;
    Mat2 add(const Mat2& x, const Mat2& y) const;
    Mat2 neg(const Mat2& x) const;
    bool eq(const Mat2& x, const Mat2& y) const;
    bool is_invertible(const Mat2& x) const;
    std::optional<Mat2> invert(const Mat2& x) const;
    Mat2 dagger(const Mat2& x) const;  // entrywise involution + transpose
    Elem to_matrix_elem(const Mat2& x) const;
    Mat2 from_matrix_elem(const Elem& e) const;
    std::string str(const Mat2& x) const;

    // -- group elements and points ---------------------------------------
    GroupElement group_element(const Mat2& m) const;           // throws if singular
    GroupElement group_element(const Mat2& m, const Mat2& known_inverse) const;
    GroupElement group_inverse(const GroupElement& g) const { return {g.inv, g.m}; }
    Point point_from_frame(const Mat2& frame) const;           // throws if singular
    Point o_plus() const;   // class of (0,1)
    Point o_minus() const;  // class of (1,0)

    // Completion search: pivot shortcut, exhaustive scan on finite rings,
    // extended gcd on Z and Poly(field).  Absent when (v1,v2) generates no
    // complemented free rank-1 submodule.
    std::optional<Point> point_from_vector(const Elem& v1, const Elem& v2) const;

    bool point_eq(const Point& x, const Point& y) const;
    bool transversal(const Point& x, const Point& y) const;
    Point act(const GroupElement& g, const Point& x) const;

    // Affine coordinate in the chart of points transversal to `chart`
    // (default o-): absent when x is not transversal to the chart.
    std::optional<Elem> affine_coord(const Point& x) const;
    std::optional<Elem> affine_coord(const Point& x, const Point& chart) const;

    // All points, deduplicated in the element-enumeration order of A^2; the
    // first vector encountered for each class is its canonical representative.
    std::vector<Point> all_points() const;

    std::string point_str(const Point& x) const;  // point[(v1);(v2)]

private:
    RingPtr ring_, mat_;
};

// Reduced fraction over a PID (Z or Poly(field)); (1, 0) encodes infinity.
// Canonical form: gcd(num, den) = 1 and den positive (Z) / monic (Poly).
struct Fraction {
    Elem num, den;
};

Fraction make_fraction(Elem num, Elem den);
Fraction fraction_infinity(const RingPtr& ring);
bool fraction_is_infinity(const Fraction& f);
std::string fraction_str(const Fraction& f);

// The bijection between F_A + {infinity} and the projective line over a PID:
// s/r corresponds to the class of (s, r); 0 -> (0,1), infinity -> (1,0).
Point pid_from_fraction(const ProjectiveLine& line, const Fraction& f);
Fraction pid_to_fraction(const ProjectiveLine& line, const Point& x);

// Exact division helper for Z and Poly(field); throws when not divisible.
Elem exact_div(const Elem& a, const Elem& b);

}  // namespace ringline
