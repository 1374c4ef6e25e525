#pragma once

#include "planar/field_context.hpp"
#include "planar/function.hpp"

#include <chrono>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace planar {

/// Homogeneous functions over F_{p^2} with f(1) = 1, f(beta) = beta^2 and
/// f(gamma) = gamma^2, parameterized by their values on the transversal T.
struct SearchProblem {
    FieldContext ctx;
    /// (T slot, value at that representative)
    std::vector<std::pair<std::size_t, Element>> fixed;
    /// Remaining T slots, in the order the search assigns them.
    std::vector<std::size_t> free_slots;

    /// Translates the three prescribed values onto their representatives via
    /// f(lambda y) = lambda^2 f(y).
    static SearchProblem normalized(const FieldContext& ctx);
};

struct SearchLimits {
    std::uint64_t node_cap = 1'000'000'000;
    std::optional<std::chrono::duration<double>> wall_cap;
};

struct SearchResult {
    /// Sorted by table.
    std::vector<FiniteFunction> solutions;
    /// Candidate (rep, value) assignments examined, fixed ones included.
    std::uint64_t nodes = 0;
    double seconds = 0.0;
};

/// Node or wall cap hit; carries what was found and the unexplored top-level values.
class SearchLimitExceeded : public std::runtime_error {
public:
    SearchLimitExceeded(const std::string& what, SearchResult partial, std::vector<Element> frontier)
        : std::runtime_error(what), partial_(std::move(partial)), frontier_(std::move(frontier))
    {
    }
    const SearchResult& partial() const noexcept { return partial_; }
    /// Values of the first free representative whose subtrees were not finished.
    const std::vector<Element>& frontier() const noexcept { return frontier_; }

private:
    SearchResult partial_;
    std::vector<Element> frontier_;
};

/// Depth-first search over values on the free representatives with
/// coset-multiplicity and incremental difference pruning; complete assignments
/// are re-verified with is_planar and detect_homogeneity. Branches on the first
/// free representative run in parallel (threads == 0: runtime default).
SearchResult enumerate(const SearchProblem& problem, int threads = 0, const SearchLimits& limits = {});
/// The same search on one thread, no OpenMP.
SearchResult enumerate_serial(const SearchProblem& problem, const SearchLimits& limits = {});

/// True iff the solution set is exactly {x^2}.
bool verify_theorem(const FieldContext& ctx, const SearchResult& result);

} // namespace planar
