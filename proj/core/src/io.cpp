#include "ringline/io.hpp"

#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "ringline/error.hpp"
#include "ringline/parse.hpp"

namespace ringline {

using ordered_json = nlohmann::ordered_json;

namespace {

ordered_json tensor3_json(const RingPtr&, const std::vector<Elem>& t, int dim) {
    ordered_json out = ordered_json::array();
    for (int i = 0; i < dim; ++i) {
        ordered_json plane = ordered_json::array();
        for (int j = 0; j < dim; ++j) {
            ordered_json row = ordered_json::array();
            for (int k = 0; k < dim; ++k)
                row.push_back(t[(static_cast<std::size_t>(i) * dim + j) * dim + k].str());
            plane.push_back(std::move(row));
        }
        out.push_back(std::move(plane));
    }
    return out;
}

ordered_json tensor4_json(const std::vector<Elem>& t, int dim) {
    ordered_json out = ordered_json::array();
    for (int i = 0; i < dim; ++i) {
        ordered_json cube = ordered_json::array();
        for (int j = 0; j < dim; ++j) {
            ordered_json plane = ordered_json::array();
            for (int k = 0; k < dim; ++k) {
                ordered_json row = ordered_json::array();
                for (int l = 0; l < dim; ++l)
                    row.push_back(
                        t[((static_cast<std::size_t>(i) * dim + j) * dim + k) * dim + l].str());
                plane.push_back(std::move(row));
            }
            cube.push_back(std::move(plane));
        }
        out.push_back(std::move(cube));
    }
    return out;
}

ordered_json skeleton(const RingPtr& base, int dim) {
    ordered_json j;
    j["base"] = base->str();
    j["dim"] = dim;
    j["bilinear"] = ordered_json::object();
    j["trilinear"] = ordered_json::object();
    j["coupling"] = nullptr;
    return j;
}

std::string dump(const ordered_json& j) { return j.dump(2) + "\n"; }

}  // namespace

std::string algebra_to_json(const FiniteAlgebra& a) {
    ordered_json j = skeleton(a.base, a.dim);
    j["bilinear"]["product"] = tensor3_json(a.base, a.tensor, a.dim);
    return dump(j);
}

std::string triple_to_json(const TripleSystem& t) {
    ordered_json j = skeleton(t.base, t.dim);
    j["trilinear"]["triple"] = tensor4_json(t.tensor, t.dim);
    return dump(j);
}

std::string two_product_to_json(const TwoProductAlgebra& v) {
    ordered_json j = skeleton(v.base, v.dim);
    j["bilinear"]["bracket"] = tensor3_json(v.base, v.bracket, v.dim);
    if (v.flavor == Flavor::JordanLie)
        j["bilinear"]["product"] = tensor3_json(v.base, v.product, v.dim);
    else
        j["trilinear"]["triple"] = tensor4_json(v.triple, v.dim);
    if (v.coupling) j["coupling"] = v.coupling->str();
    j["flavor"] = v.flavor == Flavor::JordanLie ? "jordan-lie" : "lie-jordan";
    return dump(j);
}

std::string quantized_to_json(const QuantizedAlgebra& q) {
    const FiniteAlgebra& a = q.algebra;
    ordered_json j = skeleton(a.base, a.dim);
    j["bilinear"]["product"] = tensor3_json(a.base, a.tensor, a.dim);
    j["coupling"] = q.coupling.str();
    ordered_json inv = ordered_json::array();
    for (int r = 0; r < a.dim; ++r) {
        ordered_json row = ordered_json::array();
        for (int c = 0; c < a.dim; ++c) row.push_back(q.conjugation[c][r].str());
        inv.push_back(std::move(row));
    }
    j["involution"] = std::move(inv);
    return dump(j);
}

namespace {

[[noreturn]] void bad(const std::string& where, const std::string& what) {
    throw ParseError(where + ": " + what);
}

std::vector<Elem> read_tensor3(const RingPtr& base, const ordered_json& t, int dim,
                               const std::string& where, const std::string& name) {
    std::vector<Elem> out;
    out.reserve(static_cast<std::size_t>(dim) * dim * dim);
    if (!t.is_array() || static_cast<int>(t.size()) != dim)
        bad(where, "bilinear \"" + name + "\" must be a " + std::to_string(dim) + "-cube");
    for (const auto& plane : t) {
        if (!plane.is_array() || static_cast<int>(plane.size()) != dim)
            bad(where, "bilinear \"" + name + "\" must be a " + std::to_string(dim) + "-cube");
        for (const auto& row : plane) {
            if (!row.is_array() || static_cast<int>(row.size()) != dim)
                bad(where, "bilinear \"" + name + "\" must be a " + std::to_string(dim) + "-cube");
            for (const auto& cell : row) {
                if (!cell.is_string())
                    bad(where, "entries must be exact scalar strings in \"" + name + "\"");
                out.push_back(parse_element(base, cell.get<std::string>()));
            }
        }
    }
    return out;
}

std::vector<Elem> read_tensor4(const RingPtr& base, const ordered_json& t, int dim,
                               const std::string& where, const std::string& name) {
    std::vector<Elem> out;
    out.reserve(static_cast<std::size_t>(dim) * dim * dim * dim);
    auto shape = [&] {
        bad(where, "trilinear \"" + name + "\" must be a rank-4 " + std::to_string(dim) + "-cube");
    };
    if (!t.is_array() || static_cast<int>(t.size()) != dim) shape();
    for (const auto& cube : t) {
        if (!cube.is_array() || static_cast<int>(cube.size()) != dim) shape();
        for (const auto& plane : cube) {
            if (!plane.is_array() || static_cast<int>(plane.size()) != dim) shape();
            for (const auto& row : plane) {
                if (!row.is_array() || static_cast<int>(row.size()) != dim) shape();
                for (const auto& cell : row) {
                    if (!cell.is_string())
                        bad(where, "entries must be exact scalar strings in \"" + name + "\"");
                    out.push_back(parse_element(base, cell.get<std::string>()));
                }
            }
        }
    }
    return out;
}

}  // namespace

AlgebraFile parse_algebra_json(const std::string& text, const std::string& where) {
    ordered_json j;
    try {
        j = ordered_json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(where + ": " + e.what(), static_cast<long>(e.byte));
    }
    if (!j.is_object()) bad(where, "top level must be an object");
    for (const char* field : {"base", "dim", "bilinear", "trilinear", "coupling"})
        if (!j.contains(field)) bad(where, std::string("missing field \"") + field + "\"");

    AlgebraFile f;
    if (!j["base"].is_string()) bad(where, "\"base\" must be a ring spec string");
    try {
        f.base = parse_ring(j["base"].get<std::string>());
    } catch (const ParseError& e) {
        bad(where, std::string("in \"base\": ") + e.what());
    }
    if (!j["dim"].is_number_unsigned() || j["dim"].get<std::uint64_t>() == 0 ||
        j["dim"].get<std::uint64_t>() > 1024)
        bad(where, "\"dim\" must be a positive integer");
    f.dim = j["dim"].get<int>();

    if (!j["bilinear"].is_object()) bad(where, "\"bilinear\" must be an object");
    for (const auto& [name, tensor] : j["bilinear"].items())
        f.bilinear.emplace(name, read_tensor3(f.base, tensor, f.dim, where, name));
    if (!j["trilinear"].is_object()) bad(where, "\"trilinear\" must be an object");
    for (const auto& [name, tensor] : j["trilinear"].items())
        f.trilinear.emplace(name, read_tensor4(f.base, tensor, f.dim, where, name));

    if (!j["coupling"].is_null()) {
        if (!j["coupling"].is_string()) bad(where, "\"coupling\" must be null or a scalar string");
        f.coupling = parse_element(f.base, j["coupling"].get<std::string>());
    }
    if (j.contains("flavor")) {
        if (!j["flavor"].is_string()) bad(where, "\"flavor\" must be a string");
        f.flavor = j["flavor"].get<std::string>();
        if (f.flavor != "jordan-lie" && f.flavor != "lie-jordan")
            bad(where, "\"flavor\" must be \"jordan-lie\" or \"lie-jordan\"");
    }
    if (j.contains("involution")) {
        const auto& inv = j["involution"];
        if (!inv.is_array() || static_cast<int>(inv.size()) != f.dim)
            bad(where, "\"involution\" must be a dim x dim matrix");
        f.involution.assign(f.dim, vec_zero(f.base, f.dim));
        int r = 0;
        for (const auto& row : inv) {
            if (!row.is_array() || static_cast<int>(row.size()) != f.dim)
                bad(where, "\"involution\" must be a dim x dim matrix");
            for (int c = 0; c < f.dim; ++c) {
                if (!row[c].is_string())
                    bad(where, "entries must be exact scalar strings in \"involution\"");
                f.involution[c][r] = parse_element(f.base, row[c].get<std::string>());
            }
            ++r;
        }
    }
    return f;
}

AlgebraFile read_algebra_file(const std::string& path) {
    return parse_algebra_json(read_text_file(path), path);
}

FiniteAlgebra AlgebraFile::as_algebra(const std::string& name) const {
    auto it = bilinear.find(name);
    if (it == bilinear.end()) throw Error("no bilinear tensor named \"" + name + "\"");
    FiniteAlgebra a = FiniteAlgebra::zero(base, dim);
    a.tensor = it->second;
    return a;
}

TripleSystem AlgebraFile::as_triple(const std::string& name) const {
    auto it = trilinear.find(name);
    if (it == trilinear.end()) throw Error("no trilinear tensor named \"" + name + "\"");
    TripleSystem t = TripleSystem::zero(base, dim);
    t.tensor = it->second;
    return t;
}

TwoProductAlgebra AlgebraFile::as_two_product() const {
    if (flavor.empty()) throw Error("file carries no \"flavor\" field");
    TwoProductAlgebra v;
    v.base = base;
    v.dim = dim;
    v.coupling = coupling;
    auto br = bilinear.find("bracket");
    if (br == bilinear.end()) throw Error("no bilinear tensor named \"bracket\"");
    v.bracket = br->second;
    if (flavor == "jordan-lie") {
        v.flavor = Flavor::JordanLie;
        auto pr = bilinear.find("product");
        if (pr == bilinear.end()) throw Error("no bilinear tensor named \"product\"");
        v.product = pr->second;
    } else {
        v.flavor = Flavor::LieJordan;
        auto tr = trilinear.find("triple");
        if (tr == trilinear.end()) throw Error("no trilinear tensor named \"triple\"");
        v.triple = tr->second;
    }
    return v;
}

QuantizedAlgebra AlgebraFile::as_quantized() const {
    if (involution.empty()) throw Error("file carries no \"involution\" field");
    if (!coupling) throw Error("file carries no coupling scalar");
    QuantizedAlgebra q{as_algebra("product"), *coupling, involution};
    return q;
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot open " + path + " for writing");
    out << text;
    if (!out) throw Error("failed writing " + path);
}

}  // namespace ringline
