#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace ringline {

// One failed identity instance: the axiom tag, the basis/sample tuple it
// failed on, and a printable witness (left and right values).
struct CheckFailure {
    std::string axiom;
    std::vector<int> where;
    std::string detail;
};

struct CheckReport {
    std::vector<std::string> checked;    // axiom tags evaluated, in order
    std::vector<CheckFailure> failures;  // capped; failure_count is the true total
    std::uint64_t failure_count = 0;

    static constexpr std::size_t kMaxWitnesses = 16;

    bool pass() const { return failure_count == 0; }
    void note(std::string axiom);
    void fail(const std::string& axiom, std::vector<int> where, std::string detail);
    void merge(const CheckReport& other, const std::string& prefix);
    std::string str() const;
};

}  // namespace ringline
