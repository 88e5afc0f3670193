#include "ringline/parse.hpp"

#include <cctype>

namespace ringline {

namespace {

struct Cursor {
    const std::string& s;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    bool done() {
        skip_ws();
        return pos >= s.size();
    }
    char peek() {
        skip_ws();
        return pos < s.size() ? s[pos] : '\0';
    }
    bool try_consume(char c) {
        skip_ws();
        if (pos < s.size() && s[pos] == c) { ++pos; return true; }
        return false;
    }
    void expect(char c) {
        if (!try_consume(c))
            throw ParseError(std::string("expected '") + c + "' in \"" + s + "\"",
                             static_cast<long>(pos));
    }
    bool try_keyword(const std::string& kw) {
        skip_ws();
        if (s.compare(pos, kw.size(), kw) != 0) return false;
        pos += kw.size();
        return true;
    }
    std::int64_t parse_uint() {
        skip_ws();
        if (pos >= s.size() || !std::isdigit(static_cast<unsigned char>(s[pos])))
            throw ParseError("expected a number in \"" + s + "\"", static_cast<long>(pos));
        std::int64_t v = 0;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
            v = v * 10 + (s[pos] - '0');
            if (v > (std::int64_t{1} << 40))
                throw ParseError("number too large", static_cast<long>(pos));
            ++pos;
        }
        return v;
    }
    // [+-] digits [/ digits], arbitrary precision
    mpq_class parse_rational() {
        skip_ws();
        std::size_t start = pos;
        if (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) ++pos;
        std::size_t digits = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos == digits)
            throw ParseError("expected a number in \"" + s + "\"", static_cast<long>(pos));
        std::string num = s.substr(start, pos - start);
        if (try_consume('/')) {
            skip_ws();
            std::size_t dstart = pos;
            while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
            if (pos == dstart)
                throw ParseError("expected a denominator", static_cast<long>(pos));
            num += "/" + s.substr(dstart, pos - dstart);
        }
        mpq_class q(num);
        q.canonicalize();
        return q;
    }
    bool at_digit_or_sign() {
        skip_ws();
        if (pos >= s.size()) return false;
        char c = s[pos];
        if (std::isdigit(static_cast<unsigned char>(c))) return true;
        if ((c == '+' || c == '-') && pos + 1 < s.size() &&
            std::isdigit(static_cast<unsigned char>(s[pos + 1])))
            return true;
        return false;
    }
};

RingPtr parse_ring_at(Cursor& c);

RingPtr parse_ring_at(Cursor& c) {
    c.skip_ws();
    if (c.try_keyword("Zmod")) {
        c.expect('(');
        std::int64_t n = c.parse_uint();
        c.expect(')');
        return Ring::modular(n);
    }
    if (c.try_keyword("Z")) return Ring::integers();
    if (c.try_keyword("Qi")) return Ring::gaussian_rationals();
    if (c.try_keyword("Q")) return Ring::rationals();
    if (c.try_keyword("Fq")) {
        c.expect('(');
        std::int64_t p = c.parse_uint();
        c.expect(',');
        std::int64_t k = c.parse_uint();
        c.expect(')');
        return Ring::finite_field(p, static_cast<int>(k));
    }
    if (c.try_keyword("Func")) {
        c.expect('(');
        std::int64_t m = c.parse_uint();
        c.expect(',');
        RingPtr inner = parse_ring_at(c);
        c.expect(')');
        return Ring::func(static_cast<int>(m), std::move(inner));
    }
    if (c.try_keyword("F")) return Ring::prime_field(c.parse_uint());
    if (c.try_keyword("Dual")) {
        c.expect('(');
        RingPtr inner = parse_ring_at(c);
        c.expect(')');
        return Ring::dual(std::move(inner));
    }
    if (c.try_keyword("Mat")) {
        c.expect('(');
        std::int64_t n = c.parse_uint();
        c.expect(',');
        RingPtr inner = parse_ring_at(c);
        c.expect(')');
        return Ring::matrix(static_cast<int>(n), std::move(inner));
    }
    if (c.try_keyword("Poly")) {
        c.expect('(');
        RingPtr inner = parse_ring_at(c);
        c.expect(')');
        return Ring::poly(std::move(inner));
    }
    throw ParseError("unknown ring in \"" + c.s + "\"", static_cast<long>(c.pos));
}

RingPtr apply_involution_at(RingPtr ring, Cursor& c) {
    c.skip_ws();
    if (c.try_keyword("idempotent"))  // guard against prefix confusion
        throw ParseError("unknown involution", static_cast<long>(c.pos));
    if (c.try_keyword("id")) return ring->with_involution(InvolutionKind::Identity);
    if (c.try_keyword("transpose")) return ring->with_involution(InvolutionKind::Transpose);
    if (c.try_keyword("conjtranspose")) {
        if (ring->kind() == RingKind::Matrix)
            return ring->with_involution(InvolutionKind::ConjTranspose);
        return ring->with_involution(InvolutionKind::Conjugate);
    }
    if (c.try_keyword("sign")) {
        c.expect('(');
        std::int64_t p = c.parse_uint();
        c.expect(',');
        std::int64_t q = c.parse_uint();
        c.expect(')');
        return ring->with_involution(InvolutionKind::Sign, static_cast<int>(p),
                                     static_cast<int>(q));
    }
    if (c.try_keyword("dualflip")) return ring->with_involution(InvolutionKind::DualFlip);
    if (c.try_keyword("pointwise")) {
        c.expect('(');
        if (ring->kind() != RingKind::Func && ring->kind() != RingKind::Poly)
            throw Error("pointwise involution needs Func(m, R) or Poly(R)");
        RingPtr inner = apply_involution_at(ring->inner(), c);
        c.expect(')');
        RingPtr rebuilt = ring->kind() == RingKind::Func
                              ? Ring::func(ring->degree(), std::move(inner))
                              : Ring::poly(std::move(inner));
        return rebuilt->with_involution(InvolutionKind::Pointwise);
    }
    throw ParseError("unknown involution in \"" + c.s + "\"", static_cast<long>(c.pos));
}

Elem parse_element_at(const RingPtr& ring, Cursor& c);

// shared sum-of-terms parser for Qi (unit "i"), Fq (unit "t"), Poly (unit "X")
// and Dual (unit "eps").  `unit_pow` maps an exponent to the unit element.
Elem parse_linear_combo(const RingPtr& ring, Cursor& c, const std::string& unit_name,
                        bool allow_power, bool coeff_parens,
                        const std::function<Elem(int)>& unit_pow,
                        const std::function<Elem(const mpq_class&)>& scalar) {
    Elem acc = ring->zero();
    bool first = true;
    while (true) {
        c.skip_ws();
        if (c.done()) break;
        char ch = c.peek();
        int sign = 1;
        if (ch == '+' || ch == '-') {
            c.pos++;
            if (ch == '-') sign = -1;
        } else if (!first) {
            break;  // delimiter of an enclosing construct
        }
        c.skip_ws();
        // coefficient
        bool have_coeff = false;
        Elem coeff = ring->one();
        if (coeff_parens && c.peek() == '(') {
            c.expect('(');
            coeff = parse_element_at(ring->kind() == RingKind::Dual ||
                                             ring->kind() == RingKind::Poly
                                         ? ring->inner()
                                         : ring,
                                     c);
            // lift an inner-ring coefficient into this ring as a constant
            if (ring->kind() == RingKind::Dual)
                coeff = Elem(ring, ElemVec{coeff, ring->inner()->zero()});
            else if (ring->kind() == RingKind::Poly)
                coeff = coeff.is_zero() ? ring->zero() : Elem(ring, ElemVec{coeff});
            c.expect(')');
            have_coeff = true;
        } else if (c.at_digit_or_sign()) {
            coeff = scalar(c.parse_rational());
            have_coeff = true;
        }
        // unit part
        Elem term = coeff;
        c.skip_ws();
        if (c.try_keyword(unit_name)) {
            int power = 1;
            if (allow_power && c.try_consume('^'))
                power = static_cast<int>(c.parse_uint());
            term = coeff * unit_pow(power);
        } else if (!have_coeff) {
            throw ParseError("expected a term in \"" + c.s + "\"", static_cast<long>(c.pos));
        }
        acc = sign > 0 ? acc + term : acc - term;
        first = false;
    }
    if (first) throw ParseError("empty element literal", static_cast<long>(c.pos));
    return acc;
}

Elem parse_element_at(const RingPtr& ring, Cursor& c) {
    switch (ring->kind()) {
        case RingKind::Integers:
        case RingKind::Rationals:
        case RingKind::PrimeField:
        case RingKind::Modular:
            return ring->from_mpq(c.parse_rational());
        case RingKind::Gaussian: {
            auto unit = [&](int) {
                return Elem(ring, GaussianValue{mpq_class(0), mpq_class(1)});
            };
            auto scalar = [&](const mpq_class& q) { return ring->from_mpq(q); };
            return parse_linear_combo(ring, c, "i", false, false, unit, scalar);
        }
        case RingKind::FiniteField: {
            auto unit = [&](int power) {
                std::vector<std::int64_t> coeffs(ring->degree(), 0);
                Elem t = ring->zero();
                if (ring->degree() > 1) {
                    coeffs[1] = 1;
                    t = Elem(ring, std::move(coeffs));
                } else {
                    t = ring->zero();  // Fq(p,1): t == 0
                }
                Elem acc = ring->one();
                for (int i = 0; i < power; ++i) acc = acc * t;
                return acc;
            };
            auto scalar = [&](const mpq_class& q) { return ring->from_mpq(q); };
            return parse_linear_combo(ring, c, "t", true, false, unit, scalar);
        }
        case RingKind::Dual: {
            auto unit = [&](int) {
                return Elem(ring, ElemVec{ring->inner()->zero(), ring->inner()->one()});
            };
            auto scalar = [&](const mpq_class& q) { return ring->from_mpq(q); };
            return parse_linear_combo(ring, c, "eps", false, true, unit, scalar);
        }
        case RingKind::Poly: {
            auto unit = [&](int power) {
                ElemVec coeffs(power + 1, ring->inner()->zero());
                coeffs[power] = ring->inner()->one();
                return Elem(ring, std::move(coeffs));
            };
            auto scalar = [&](const mpq_class& q) { return ring->from_mpq(q); };
            Elem out = parse_linear_combo(ring, c, "X", true, true, unit, scalar);
            return out;
        }
        case RingKind::Matrix: {
            const int n = ring->degree();
            ElemVec entries;
            entries.reserve(static_cast<std::size_t>(n) * n);
            c.expect('[');
            for (int i = 0; i < n; ++i) {
                if (i) c.expect(',');
                c.expect('[');
                for (int j = 0; j < n; ++j) {
                    if (j) c.expect(',');
                    entries.push_back(parse_element_at(ring->inner(), c));
                }
                c.expect(']');
            }
            c.expect(']');
            return Elem(ring, std::move(entries));
        }
        case RingKind::Func: {
            const int m = ring->degree();
            ElemVec entries;
            entries.reserve(m);
            c.expect('(');
            for (int i = 0; i < m; ++i) {
                if (i) c.expect(',');
                entries.push_back(parse_element_at(ring->inner(), c));
            }
            c.expect(')');
            return Elem(ring, std::move(entries));
        }
    }
    throw ParseError("unsupported ring for element literal", 0);
}

RingPtr parse_ring_suffix(Cursor& c, RingPtr default_ring, const std::string& ctx) {
    if (c.try_consume('@')) {
        RingPtr r = parse_ring_at(c);
        if (!c.done()) throw ParseError("trailing input after ring in " + ctx,
                                        static_cast<long>(c.pos));
        return r;
    }
    if (!c.done()) throw ParseError("trailing input in " + ctx, static_cast<long>(c.pos));
    if (!default_ring) throw ParseError(ctx + " needs an explicit ring (use @ RING or --ring)");
    return default_ring;
}

}  // namespace

RingPtr parse_ring(const std::string& spec) {
    Cursor c{spec};
    RingPtr r = parse_ring_at(c);
    if (!c.done())
        throw ParseError("trailing input after ring \"" + spec + "\"",
                         static_cast<long>(c.pos));
    return r;
}

RingPtr apply_involution(RingPtr ring, const std::string& inv_spec) {
    if (inv_spec.empty()) return ring;
    Cursor c{inv_spec};
    RingPtr r = apply_involution_at(std::move(ring), c);
    if (!c.done())
        throw ParseError("trailing input after involution \"" + inv_spec + "\"",
                         static_cast<long>(c.pos));
    return r;
}

Elem parse_element(const RingPtr& ring, const std::string& text) {
    Cursor c{text};
    Elem e = parse_element_at(ring, c);
    if (!c.done())
        throw ParseError("trailing input in element \"" + text + "\"",
                         static_cast<long>(c.pos));
    return e;
}

PointLiteral parse_point_literal(const std::string& text, RingPtr default_ring) {
    Cursor c{text};
    if (!c.try_keyword("point")) throw ParseError("expected point[...] literal", 0);
    c.expect('[');
    // probe for @ first so the element parser knows its ring
    std::size_t body_start = c.pos;
    int depth = 1;
    std::size_t scan = c.pos;
    while (scan < text.size() && depth > 0) {
        if (text[scan] == '[') ++depth;
        if (text[scan] == ']') --depth;
        ++scan;
    }
    if (depth != 0) throw ParseError("unbalanced point literal", static_cast<long>(scan));
    Cursor tail{text, scan};
    RingPtr ring = parse_ring_suffix(tail, std::move(default_ring), "point literal");
    c.pos = body_start;
    c.expect('(');
    Elem v1 = parse_element_at(ring, c);
    c.expect(')');
    c.expect(';');
    c.expect('(');
    Elem v2 = parse_element_at(ring, c);
    c.expect(')');
    c.expect(']');
    return PointLiteral{std::move(v1), std::move(v2), std::move(ring)};
}

Matrix2Literal parse_matrix2_literal(const std::string& text, RingPtr default_ring) {
    Cursor c{text};
    // probe for @ after the balanced [[...],[...]]
    c.skip_ws();
    if (c.peek() != '[') throw ParseError("expected [[a,b],[c,d]] literal", 0);
    std::size_t scan = c.pos + 1;
    int depth = 1;
    while (scan < text.size() && depth > 0) {
        if (text[scan] == '[') ++depth;
        if (text[scan] == ']') --depth;
        ++scan;
    }
    if (depth != 0) throw ParseError("unbalanced matrix literal", static_cast<long>(scan));
    Cursor tail{text, scan};
    RingPtr ring = parse_ring_suffix(tail, std::move(default_ring), "matrix literal");
    std::array<Elem, 4> e{ring->zero(), ring->zero(), ring->zero(), ring->zero()};
    c.expect('[');
    c.expect('[');
    e[0] = parse_element_at(ring, c);
    c.expect(',');
    e[1] = parse_element_at(ring, c);
    c.expect(']');
    c.expect(',');
    c.expect('[');
    e[2] = parse_element_at(ring, c);
    c.expect(',');
    e[3] = parse_element_at(ring, c);
    c.expect(']');
    c.expect(']');
    return Matrix2Literal{std::move(e), std::move(ring)};
}

}  // namespace ringline
