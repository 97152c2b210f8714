#pragma once

#include <string>
#include <utility>
#include <vector>

#include "generator.hpp"

namespace drinfeld {

/// One failing index tuple of a verification, with its nonzero residual.
struct Violation {
    std::vector<std::string> indices;
    /// (term label, coefficient) pairs of the exact residual.
    std::vector<std::pair<std::string, Scalar>> residual;
    /// Largest absolute entry for floating-point checks, 0 otherwise.
    double magnitude = 0.0;
};

/// Outcome of a verification. Failures are entries, never exceptions.
struct Report {
    std::string check;
    std::size_t checked = 0;
    std::vector<Violation> violations;

    bool pass() const { return violations.empty(); }

    std::string summary() const
    {
        return std::string(pass() ? "PASS " : "FAIL ") + check + " checked=" + std::to_string(checked) +
               " violations=" + std::to_string(violations.size());
    }

    void merge(Report other)
    {
        checked += other.checked;
        for (auto& v : other.violations) violations.push_back(std::move(v));
    }
};

template <class Key, class LabelFn>
std::vector<std::pair<std::string, Scalar>> residual_terms(const LinearCombination<Key>& r, LabelFn&& label)
{
    std::vector<std::pair<std::string, Scalar>> out;
    out.reserve(r.size());
    for (const auto& [k, v] : r) out.emplace_back(label(k), v);
    return out;
}

inline std::vector<std::pair<std::string, Scalar>> residual_terms(const Element& e)
{
    return residual_terms(e, [](const GeneratorId& g) { return g.label(); });
}

}  // namespace drinfeld
