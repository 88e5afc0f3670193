// ringline: enumerations, checks, and constructions over involutive rings.
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "ringline/error.hpp"
#include "ringline/hermline.hpp"
#include "ringline/io.hpp"
#include "ringline/jordan.hpp"
#include "ringline/jordan_lie.hpp"
#include "ringline/parse.hpp"

using namespace ringline;

namespace {

struct Options {
    std::string ring;
    std::string involution;
    std::string form;
    std::string format = "human";
    std::string input;
    std::string coupling;
    std::uint64_t seed = 0;
    std::uint64_t budget = 1000000;
};

bool lines_mode(const Options& o) { return o.format == "lines"; }

RingPtr make_ring(const Options& o) {
    if (o.ring.empty()) throw Error("this command needs --ring");
    RingPtr r = parse_ring(o.ring);
    if (!o.involution.empty()) r = apply_involution(r, o.involution);
    return r;
}

SesquiForm make_form(const ProjectiveLine& line, const Options& o) {
    if (o.form.empty()) throw Error("this command needs --form");
    if (o.form == "omega" || o.form == "theta" || o.form == "sigma")
        return SesquiForm::named(line, o.form);
    Matrix2Literal lit = parse_matrix2_literal(o.form, line.ring());
    return SesquiForm(line, line.mat2(lit.entries[0], lit.entries[1], lit.entries[2],
                                      lit.entries[3]));
}

std::string read_input(const Options& o) {
    if (o.input.empty()) throw Error("this command needs --input");
    if (o.input == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        return ss.str();
    }
    return read_text_file(o.input);
}

AlgebraFile load_file(const Options& o) {
    return parse_algebra_json(read_input(o), o.input == "-" ? "<stdin>" : o.input);
}

// "infinity" | NUM | NUM/NUM | (POLY)/(POLY); element literals of the ring.
Fraction parse_fraction(const RingPtr& ring, const std::string& text) {
    if (text == "infinity") return fraction_infinity(ring);
    int depth = 0;
    std::size_t split = std::string::npos;
    for (std::size_t i = 0; i < text.size(); ++i) {
        char c = text[i];
        if (c == '(' || c == '[') ++depth;
        if (c == ')' || c == ']') --depth;
        if (c == '/' && depth == 0) {
            if (split != std::string::npos)
                throw ParseError("more than one top-level '/' in \"" + text + "\"");
            split = i;
        }
    }
    auto strip_parens = [](std::string s) {
        while (!s.empty() && s.front() == ' ') s.erase(s.begin());
        while (!s.empty() && s.back() == ' ') s.pop_back();
        if (s.size() >= 2 && s.front() == '(' && s.back() == ')') {
            int d = 0;
            bool wraps = true;
            for (std::size_t i = 0; i + 1 < s.size(); ++i) {
                if (s[i] == '(') ++d;
                if (s[i] == ')') --d;
                if (d == 0) { wraps = false; break; }
            }
            if (wraps) return s.substr(1, s.size() - 2);
        }
        return s;
    };
    if (split == std::string::npos)
        return make_fraction(parse_element(ring, strip_parens(text)), ring->one());
    return make_fraction(parse_element(ring, strip_parens(text.substr(0, split))),
                         parse_element(ring, strip_parens(text.substr(split + 1))));
}

// ---------------------------------------------------------------- verbs

int cmd_enumerate(const Options& o) {
    ProjectiveLine line(make_ring(o));
    std::vector<Point> pts = line.all_points();
    if (lines_mode(o))
        for (const Point& x : pts) std::cout << "point " << line.point_str(x) << "\n";
    else
        std::cout << "points: " << pts.size() << "\n";
    return 0;
}

int cmd_fixed_line(const Options& o) {
    ProjectiveLine line(make_ring(o));
    SesquiForm form = make_form(line, o);
    std::vector<Point> pts = form.fixed_points();
    if (lines_mode(o))
        for (const Point& x : pts) std::cout << "point " << line.point_str(x) << "\n";
    else
        std::cout << "points: " << pts.size() << "\n";
    return 0;
}

int cmd_chart(const Options& o) {
    ProjectiveLine line(make_ring(o));
    std::vector<Point> pts =
        o.form.empty() ? line.all_points() : make_form(line, o).fixed_points();
    std::vector<Elem> coords;
    for (const Point& x : pts)
        if (line.transversal(x, line.o_minus())) {
            auto c = line.affine_coord(x);
            if (!c) throw Error("transversal point without affine coordinate: " +
                                line.point_str(x));
            coords.push_back(*c);
        }
    if (lines_mode(o)) {
        for (const Elem& c : coords) std::cout << "coord " << c.str() << "\n";
    } else {
        std::cout << "chart points: " << coords.size() << "\n";
        for (const Elem& c : coords) std::cout << "  " << c.str() << "\n";
    }
    return 0;
}

int cmd_orbit(const Options& o) {
    ProjectiveLine line(make_ring(o));
    SesquiForm form = make_form(line, o);
    std::vector<Point> fixed = form.fixed_points();
    std::vector<GroupElement> group = form.isometry_group();
    std::vector<std::vector<std::size_t>> orbits = group_orbits(line, group, fixed);

    // Base pair: o+ / o- for the two standard isotropic geometries, the
    // classes of (1, 1) and (1, -1) for the diagonal one.
    Point base_plus = line.o_plus(), base_minus = line.o_minus();
    if (o.form == "sigma") {
        base_plus = *line.point_from_vector(line.ring()->one(), line.ring()->one());
        base_minus = *line.point_from_vector(line.ring()->one(), -line.ring()->one());
    }
    auto orbit_of = [&](const Point& p) -> long {
        for (std::size_t i = 0; i < fixed.size(); ++i)
            if (line.point_eq(fixed[i], p))
                for (std::size_t k = 0; k < orbits.size(); ++k)
                    for (std::size_t idx : orbits[k])
                        if (idx == i) return static_cast<long>(k);
        return -1;  // not a fixed point
    };
    long op = orbit_of(base_plus), om = orbit_of(base_minus);
    auto size_str = [&](long k) {
        return k < 0 ? std::string("not fixed") : std::to_string(orbits[k].size());
    };
    bool coincide = op >= 0 && op == om;
    bool transitive = orbits.size() <= 1;
    if (lines_mode(o)) {
        std::cout << "fixed " << fixed.size() << "\n";
        std::cout << "isometries " << group.size() << "\n";
        std::cout << "orbit+ " << size_str(op) << "\n";
        std::cout << "orbit- " << size_str(om) << "\n";
        std::cout << "coincide " << (coincide ? "yes" : "no") << "\n";
        std::cout << "transitive " << (transitive ? "yes" : "no") << "\n";
    } else {
        std::cout << "fixed points: " << fixed.size() << "\n";
        std::cout << "isometries: " << group.size() << "\n";
        std::cout << "orbit(base+): " << size_str(op) << "\n";
        std::cout << "orbit(base-): " << size_str(om) << "\n";
        std::cout << "orbits coincide: " << (coincide ? "yes" : "no") << "\n";
        std::cout << "transitive: " << (transitive ? "yes" : "no") << "\n";
    }
    return 0;
}

int cmd_orthocomplement(const Options& o, const std::string& point_text) {
    ProjectiveLine line(make_ring(o));
    SesquiForm form = make_form(line, o);
    PointLiteral lit = parse_point_literal(point_text, line.ring());
    auto x = line.point_from_vector(lit.v1, lit.v2);
    if (!x) throw Error("not a point of the line: " + point_text);
    Point perp = form.orthocomplement(*x);
    if (lines_mode(o))
        std::cout << "point " << line.point_str(perp) << "\n";
    else
        std::cout << "orthocomplement: " << line.point_str(perp) << "\n";
    return 0;
}

int cmd_transversal(const Options& o, const std::string& a, const std::string& b) {
    ProjectiveLine line(make_ring(o));
    PointLiteral la = parse_point_literal(a, line.ring());
    PointLiteral lb = parse_point_literal(b, line.ring());
    auto x = line.point_from_vector(la.v1, la.v2);
    auto y = line.point_from_vector(lb.v1, lb.v2);
    if (!x) throw Error("not a point of the line: " + a);
    if (!y) throw Error("not a point of the line: " + b);
    bool t = line.transversal(*x, *y);
    std::cout << (lines_mode(o) ? "transversal " : "transversal: ") << (t ? "yes" : "no")
              << "\n";
    return 0;
}

int cmd_pid(const Options& o, const std::string& to_point, const std::string& to_fraction) {
    RingPtr ring = make_ring(o);
    ProjectiveLine line(ring);
    if (!to_point.empty()) {
        Fraction f = parse_fraction(ring, to_point);
        Point x = pid_from_fraction(line, f);
        Elem det = x.frame.a * x.frame.d - x.frame.b * x.frame.c;
        if (lines_mode(o)) {
            std::cout << "point " << line.point_str(x) << "\n";
            std::cout << "frame " << line.str(x.frame) << "\n";
            std::cout << "det " << det.str() << "\n";
        } else {
            std::cout << "point: " << line.point_str(x) << "\n";
            std::cout << "frame: " << line.str(x.frame) << "\n";
            std::cout << "det: " << det.str() << "\n";
        }
        return 0;
    }
    PointLiteral lit = parse_point_literal(to_fraction, ring);
    auto x = line.point_from_vector(lit.v1, lit.v2);
    if (!x) throw Error("not a point of the line: " + to_fraction);
    Fraction f = pid_to_fraction(line, *x);
    std::cout << (lines_mode(o) ? "fraction " : "fraction: ") << fraction_str(f) << "\n";
    return 0;
}

// Coupling priority: --coupling flag, then the file value, then detection.
Elem resolve_coupling(const Options& o, const AlgebraFile& f, const TwoProductAlgebra& v,
                      std::string& how) {
    if (!o.coupling.empty()) {
        how = "flag";
        return parse_element(f.base, o.coupling);
    }
    if (f.coupling) {
        how = "file";
        return *f.coupling;
    }
    CouplingResult r = detect_coupling(v);
    if (r.kind == CouplingResult::Kind::Inconsistent)
        throw Error("coupling detection is inconsistent; no scalar satisfies the axiom");
    how = r.kind == CouplingResult::Kind::Indeterminate ? "detected (indeterminate)"
                                                        : "detected";
    return r.value;
}

int cmd_check(const Options& o) {
    AlgebraFile f = load_file(o);
    CheckReport report;
    std::string coupling_note;
    if (!f.flavor.empty()) {
        TwoProductAlgebra v = f.as_two_product();
        Elem c = resolve_coupling(o, f, v, coupling_note);
        std::cout << "coupling: " << c.str() << " [" << coupling_note << "]\n";
        if (v.flavor == Flavor::JordanLie)
            report.merge(check_jordan_lie(v, c, o.seed), "");
        else
            report.merge(check_lie_jordan(v, c, o.budget, o.seed), "");
    } else if (!f.involution.empty()) {
        report.merge(check_quantized(f.as_quantized()), "");
    } else {
        if (f.has_bilinear("product"))
            report.merge(check_jordan(f.as_algebra("product"), o.seed), "product/");
        if (f.has_trilinear("triple"))
            report.merge(check_jts(f.as_triple("triple"), o.budget, o.seed), "triple/");
        if (report.checked.empty())
            throw Error("nothing to check: no flavor, involution, product, or triple");
    }
    std::cout << report.str() << "\n";
    if (report.pass()) {
        std::cout << "result: pass\n";
        return 0;
    }
    std::cout << "result: fail (" << report.failure_count << " failures)\n";
    return 1;
}

int cmd_detect_coupling(const Options& o) {
    AlgebraFile f = load_file(o);
    TwoProductAlgebra v = f.as_two_product();
    CouplingResult r = detect_coupling(v);
    std::cout << "coupling: " << r.str() << "\n";
    return r.kind == CouplingResult::Kind::Inconsistent ? 1 : 0;
}

int cmd_quantize(const Options& o) {
    AlgebraFile f = load_file(o);
    TwoProductAlgebra v = f.as_two_product();
    if (v.flavor != Flavor::JordanLie)
        throw Error("quantization expects a file of flavor \"jordan-lie\"");
    std::string how;
    Elem c = resolve_coupling(o, f, v, how);
    try {
        std::cout << quantized_to_json(quantize(v, c));
    } catch (const Error& e) {
        std::cerr << "check failed: " << e.what() << "\n";
        return 1;
    }
    return 0;
}

int cmd_construct(const Options& o, const std::string& kind) {
    RingPtr ring = make_ring(o);
    if (kind == "jordan-lie")
        std::cout << two_product_to_json(jordan_lie_from_assoc(as_algebra(ring).algebra));
    else if (kind == "lie-jordan")
        std::cout << two_product_to_json(lie_jordan_from_involution(ring));
    else if (kind == "hermitian")
        std::cout << two_product_to_json(jordan_lie_from_hermitian(ring));
    else if (kind == "jordan")
        std::cout << algebra_to_json(jordan_from_assoc(as_algebra(ring).algebra));
    else
        throw Error("unknown construction \"" + kind +
                    "\" (expected jordan-lie, lie-jordan, hermitian, or jordan)");
    return 0;
}

void add_common(CLI::App* cmd, Options& o) {
    cmd->add_option("--ring", o.ring, "ring spec, e.g. Mat(2,F2)");
    cmd->add_option("--involution", o.involution,
                    "involution spec applied to the ring (id, transpose, conjtranspose, "
                    "sign(p,q), dualflip, pointwise(...))");
    cmd->add_option("--form", o.form, "omega | theta | sigma | [[a,b],[c,d]]");
    cmd->add_option("--seed", o.seed, "seed for randomized checker instances");
    cmd->add_option("--budget", o.budget, "evaluation budget for exhaustive sweeps");
    cmd->add_option("--format", o.format, "human | lines")
        ->check(CLI::IsMember({"human", "lines"}));
    cmd->add_option("--input", o.input, "structure-constant file (- for stdin)");
    cmd->add_option("--coupling", o.coupling, "coupling scalar, overrides file/detection");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact geometry of projective lines over involutive rings"};
    app.set_version_flag("--version", "ringline 1.0.0");
    app.require_subcommand(1);
    Options o;

    CLI::App* enumerate = app.add_subcommand("enumerate", "count or list the points of the line");
    add_common(enumerate, o);
    CLI::App* fixed = app.add_subcommand("fixed-line", "points fixed by the orthocomplement");
    add_common(fixed, o);
    CLI::App* chart =
        app.add_subcommand("chart", "affine coordinates of points transversal to o-");
    add_common(chart, o);
    CLI::App* orbit = app.add_subcommand("orbit", "isometry orbits on the fixed line");
    add_common(orbit, o);

    std::string point_arg, point_a, point_b;
    CLI::App* perp = app.add_subcommand("orthocomplement", "orthocomplement of a point");
    add_common(perp, o);
    perp->add_option("point", point_arg, "point literal point[(v1);(v2)]")->required();
    CLI::App* trans = app.add_subcommand("transversal", "test two points for transversality");
    add_common(trans, o);
    trans->add_option("first", point_a, "point literal")->required();
    trans->add_option("second", point_b, "point literal")->required();

    std::string to_point, to_fraction;
    CLI::App* pid = app.add_subcommand("pid", "fraction/point dictionary over Z or Poly");
    add_common(pid, o);
    pid->add_option("--to-point", to_point, "reduced fraction, e.g. 3/2 or infinity");
    pid->add_option("--to-fraction", to_fraction, "point literal");

    CLI::App* check = app.add_subcommand("check", "run the axiom checkers on a file");
    add_common(check, o);
    CLI::App* detect = app.add_subcommand("detect-coupling", "solve for the coupling scalar");
    add_common(detect, o);
    CLI::App* quant = app.add_subcommand("quantize", "scalar-extend by i with i^2 = C");
    add_common(quant, o);

    std::string kind;
    CLI::App* construct = app.add_subcommand("construct", "emit a named construction as a file");
    add_common(construct, o);
    construct->add_option("kind", kind, "jordan-lie | lie-jordan | hermitian | jordan")
        ->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);
        app.exit(e);
        return 2;
    }

    try {
        if (app.got_subcommand(enumerate)) return cmd_enumerate(o);
        if (app.got_subcommand(fixed)) return cmd_fixed_line(o);
        if (app.got_subcommand(chart)) return cmd_chart(o);
        if (app.got_subcommand(orbit)) return cmd_orbit(o);
        if (app.got_subcommand(perp)) return cmd_orthocomplement(o, point_arg);
        if (app.got_subcommand(trans)) return cmd_transversal(o, point_a, point_b);
        if (app.got_subcommand(pid)) {
            if (to_point.empty() == to_fraction.empty())
                throw Error("pid needs exactly one of --to-point and --to-fraction");
            return cmd_pid(o, to_point, to_fraction);
        }
        if (app.got_subcommand(check)) return cmd_check(o);
        if (app.got_subcommand(detect)) return cmd_detect_coupling(o);
        if (app.got_subcommand(quant)) return cmd_quantize(o);
        if (app.got_subcommand(construct)) return cmd_construct(o, kind);
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
