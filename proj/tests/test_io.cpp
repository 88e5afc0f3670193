#include <doctest.h>

#include <string>

#include "ringline/error.hpp"
#include "ringline/io.hpp"
#include "ringline/parse.hpp"

using namespace ringline;

namespace {

bool tensors_equal(const std::vector<Elem>& a, const std::vector<Elem>& b) {
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i].str() != b[i].str()) return false;
    return true;
}

}  // namespace

TEST_CASE("plain algebra files round-trip byte for byte") {
    for (const char* spec : {"Mat(2,Q)", "Mat(2,F5)", "Func(3,Q)", "Mat(2,Qi)"}) {
        CAPTURE(spec);
        FiniteAlgebra a = as_algebra(parse_ring(spec)).algebra;
        std::string text = algebra_to_json(a);
        AlgebraFile f = parse_algebra_json(text, "mem");
        CHECK(f.dim == a.dim);
        CHECK(f.base->str() == a.base->str());
        REQUIRE(f.has_bilinear("product"));
        FiniteAlgebra back = f.as_algebra();
        CHECK(tensors_equal(back.tensor, a.tensor));
        CHECK(algebra_to_json(back) == text);
    }
}

TEST_CASE("triple-system files round-trip byte for byte") {
    TripleSystem t = rect_triple(2, 2, parse_ring("Q"));
    std::string text = triple_to_json(t);
    AlgebraFile f = parse_algebra_json(text, "mem");
    REQUIRE(f.has_trilinear("triple"));
    TripleSystem back = f.as_triple();
    CHECK(back.dim == t.dim);
    CHECK(tensors_equal(back.tensor, t.tensor));
    CHECK(triple_to_json(back) == text);
}

TEST_CASE("two-product files carry flavor, coupling, and both tensors") {
    TwoProductAlgebra v = jordan_lie_from_assoc(as_algebra(parse_ring("Mat(2,Q)")).algebra);
    std::string text = two_product_to_json(v);
    CHECK(text.find("\"flavor\": \"jordan-lie\"") != std::string::npos);
    CHECK(text.find("\"coupling\": \"1/4\"") != std::string::npos);
    AlgebraFile f = parse_algebra_json(text, "mem");
    TwoProductAlgebra back = f.as_two_product();
    CHECK(back.flavor == Flavor::JordanLie);
    REQUIRE(back.coupling.has_value());
    CHECK(back.coupling->str() == "1/4");
    CHECK(tensors_equal(back.bracket, v.bracket));
    CHECK(tensors_equal(back.product, v.product));
    CHECK(two_product_to_json(back) == text);

    TwoProductAlgebra w = to_lie_jordan(v);
    std::string wtext = two_product_to_json(w);
    CHECK(wtext.find("\"flavor\": \"lie-jordan\"") != std::string::npos);
    AlgebraFile g = parse_algebra_json(wtext, "mem");
    TwoProductAlgebra wback = g.as_two_product();
    CHECK(wback.flavor == Flavor::LieJordan);
    CHECK(tensors_equal(wback.triple, w.triple));
    CHECK(two_product_to_json(wback) == wtext);
}

TEST_CASE("quantized files carry the involution matrix") {
    TwoProductAlgebra v = jordan_lie_from_assoc(as_algebra(parse_ring("Mat(2,Q)")).algebra);
    QuantizedAlgebra q = quantize(v, *v.coupling);
    std::string text = quantized_to_json(q);
    CHECK(text.find("\"involution\"") != std::string::npos);
    AlgebraFile f = parse_algebra_json(text, "mem");
    QuantizedAlgebra back = f.as_quantized();
    CHECK(back.algebra.dim == q.algebra.dim);
    CHECK(back.coupling.str() == q.coupling.str());
    REQUIRE(back.conjugation.size() == q.conjugation.size());
    for (std::size_t k = 0; k < q.conjugation.size(); ++k)
        CHECK(vec_eq(back.conjugation[k], q.conjugation[k]));
    CHECK(check_quantized(back).pass());
    CHECK(quantized_to_json(back) == text);
}

TEST_CASE("scalar literals survive the trip for every base kind") {
    for (const char* spec : {"Q", "Qi", "F5", "Fq(3,2)", "F2"}) {
        CAPTURE(spec);
        RingPtr R = parse_ring(spec);
        std::uint64_t n = R->finite() ? R->element_count() : 0;
        if (n != 0) {
            for (std::uint64_t i = 0; i < n; ++i) {
                Elem e = R->element_at(i);
                CHECK(parse_element(R, e.str()) == e);
            }
        } else {
            for (long num = -12; num <= 12; ++num)
                for (long den = 1; den <= 4; ++den) {
                    Elem e = R->from_mpq(mpq_class(num, den));
                    if (auto i = R->complex_unit())
                        e = e + *i * R->from_mpq(mpq_class(den, num == 0 ? 1 : num));
                    CHECK(parse_element(R, e.str()) == e);
                }
        }
    }
}

TEST_CASE("parse errors name the source and position") {
    CHECK_THROWS_AS(parse_algebra_json("{ not json", "bad.json"), ParseError);
    try {
        parse_algebra_json("{ \"base\": \"Q\" ", "bad.json");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        std::string what = e.what();
        CHECK(what.find("bad.json") != std::string::npos);
        CHECK(what.find("byte") != std::string::npos);
    }
    // structurally valid JSON with missing or malformed fields
    CHECK_THROWS_AS(parse_algebra_json("{}", "m"), ParseError);
    CHECK_THROWS_AS(parse_algebra_json(R"({"base":"Q","dim":1})", "m"), ParseError);
    CHECK_THROWS_AS(
        parse_algebra_json(
            R"({"base":"NOPE","dim":1,"bilinear":{},"trilinear":{},"coupling":null})", "m"),
        ParseError);
    CHECK_THROWS_AS(
        parse_algebra_json(
            R"({"base":"Q","dim":0,"bilinear":{},"trilinear":{},"coupling":null})", "m"),
        ParseError);
    CHECK_THROWS_AS(
        parse_algebra_json(
            R"({"base":"Q","dim":1,"bilinear":{"product":[[["1","2"]]]},"trilinear":{},"coupling":null})",
            "m"),
        ParseError);
    CHECK_THROWS_WITH_AS(read_algebra_file("/nonexistent/algebra.json"),
                         "cannot open /nonexistent/algebra.json", Error);
}

TEST_CASE("file writing and reading round-trips through the filesystem") {
    TwoProductAlgebra v = jordan_lie_from_assoc(as_algebra(parse_ring("Mat(2,F5)")).algebra);
    std::string text = two_product_to_json(v);
    std::string path = "two_product_roundtrip.json";
    write_text_file(path, text);
    CHECK(read_text_file(path) == text);
    AlgebraFile f = read_algebra_file(path);
    CHECK(two_product_to_json(f.as_two_product()) == text);
}

TEST_CASE("a missing tensor is reported by name") {
    FiniteAlgebra a = as_algebra(parse_ring("Func(2,Q)")).algebra;
    AlgebraFile f = parse_algebra_json(algebra_to_json(a), "mem");
    CHECK_THROWS_AS(f.as_triple(), Error);
    CHECK_THROWS_AS(f.as_two_product(), Error);
    CHECK_THROWS_AS(f.as_quantized(), Error);
}
