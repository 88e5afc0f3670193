#pragma once

#include <map>
#include <string>

#include "ringline/jordan_lie.hpp"

namespace ringline {

// Structure-constant files: UTF-8 JSON with the fixed field order
//   { "base": ring spec, "dim": d,
//     "bilinear":  { name: [[[entry]]] },   entry[i][j][k], dim^3
//     "trilinear": { name: [[[[entry]]]] }, entry[i][j][k][l], dim^4
//     "coupling": "c" | null,
//     "flavor": "jordan-lie" | "lie-jordan"   (two-product files only),
//     "involution": [[entry]] }               (quantized output only).
// Every scalar is an exact element literal of the base ring ("2/3", "2t+1").

std::string algebra_to_json(const FiniteAlgebra& a);
std::string triple_to_json(const TripleSystem& t);
std::string two_product_to_json(const TwoProductAlgebra& v);
std::string quantized_to_json(const QuantizedAlgebra& q);

struct AlgebraFile {
    RingPtr base;
    int dim = 0;
    std::map<std::string, std::vector<Elem>> bilinear;   // name -> dim^3 tensor
    std::map<std::string, std::vector<Elem>> trilinear;  // name -> dim^4 tensor
    std::optional<Elem> coupling;
    std::string flavor;                // empty when absent
    std::vector<ElemVec> involution;   // column k = image of basis k; empty when absent

    bool has_bilinear(const std::string& name) const { return bilinear.count(name) != 0; }
    bool has_trilinear(const std::string& name) const { return trilinear.count(name) != 0; }
    FiniteAlgebra as_algebra(const std::string& name = "product") const;
    TripleSystem as_triple(const std::string& name = "triple") const;
    TwoProductAlgebra as_two_product() const;  // needs "flavor"
    QuantizedAlgebra as_quantized() const;     // needs "involution" and "coupling"
};

// Both throw ParseError naming the path (and byte offset when known).
AlgebraFile parse_algebra_json(const std::string& text, const std::string& where);
AlgebraFile read_algebra_file(const std::string& path);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

}  // namespace ringline
