#include "ringline/report.hpp"

namespace ringline {

void CheckReport::note(std::string axiom) { checked.push_back(std::move(axiom)); }

void CheckReport::fail(const std::string& axiom, std::vector<int> where, std::string detail) {
    ++failure_count;
    if (failures.size() < kMaxWitnesses)
        failures.push_back({axiom, std::move(where), std::move(detail)});
}

void CheckReport::merge(const CheckReport& other, const std::string& prefix) {
    for (const auto& tag : other.checked) checked.push_back(prefix + tag);
    for (const auto& f : other.failures) {
        if (failures.size() < kMaxWitnesses)
            failures.push_back({prefix + f.axiom, f.where, f.detail});
    }
    failure_count += other.failure_count;
}

std::string CheckReport::str() const {
    std::string out = pass() ? "pass" : "fail";
    out += " [";
    for (std::size_t i = 0; i < checked.size(); ++i) {
        if (i) out += " ";
        out += checked[i];
    }
    out += "]";
    if (!pass()) {
        out += " failures=" + std::to_string(failure_count);
        for (const auto& f : failures) {
            out += "\n  " + f.axiom + " at (";
            for (std::size_t i = 0; i < f.where.size(); ++i) {
                if (i) out += ",";
                out += std::to_string(f.where[i]);
            }
            out += "): " + f.detail;
        }
    }
    return out;
}

}  // namespace ringline
