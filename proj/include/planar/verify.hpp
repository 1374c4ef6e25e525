#pragma once

#include "planar/field_context.hpp"
#include "planar/function.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace planar {

inline constexpr std::uint64_t kDefaultSeed = 20240607;

struct VerifyCheck {
    std::string name;
    bool passed = false;
    /// Not applicable to this f; counts as passed.
    bool skipped = false;
    /// First failure, or why the check was skipped.
    std::string detail;
};

struct VerifyReport {
    std::vector<VerifyCheck> checks;
    bool all_passed() const;
};

struct VerifyOptions {
    /// Drives the random transversal of the invariance check.
    std::uint64_t seed = kDefaultSeed;
    int threads = 0;
};

/// Runs every structural, character-sum and geometric check on f and reports
/// each by name. Checks that throw are recorded as failed with the message.
VerifyReport verify_all(const FieldContext& ctx, const FiniteFunction& f, const VerifyOptions& options = {});

/// T with every monic representative scaled by a random element of F_p^*.
std::vector<Element> random_transversal(const FieldContext& ctx, std::uint64_t seed);

} // namespace planar
