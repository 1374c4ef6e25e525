#include "planar/search.hpp"

#include "planar/errors.hpp"
#include "planar/planarity.hpp"

#include <algorithm>
#include <atomic>
#include <set>

#include <omp.h>

namespace planar {

SearchProblem SearchProblem::normalized(const FieldContext& ctx)
{
    const Field& field = ctx.field();
    SearchProblem problem{ctx, {}, {}};
    std::set<std::size_t> taken;
    for (const Element x : {field.one(), ctx.beta(), ctx.gamma()}) {
        const auto cr = ctx.coset_rep(x);
        const Element fx = field.mul(x, x);
        const Residue lambda_sq = static_cast<Residue>(std::uint64_t{cr.scalar} * cr.scalar % field.p());
        const Element value = field.div(fx, field.from_prime(lambda_sq));
        if (!taken.insert(cr.slot).second)
            throw ContractViolation("prescribed points share a coset");
        problem.fixed.emplace_back(cr.slot, value);
    }
    for (std::size_t slot = 0; slot < ctx.transversal().size(); ++slot)
        if (!taken.count(slot))
            problem.free_slots.push_back(slot);
    return problem;
}

namespace {

using Clock = std::chrono::steady_clock;

struct SharedControl {
    std::atomic<std::uint64_t> nodes{0};
    std::atomic<bool> abort{false};
    SearchLimits limits;
    Clock::time_point start;
};

// Backtracking state for one thread. Values live on the set D of points
// reachable from assigned representatives; D is closed under F_p^* scaling.
class Searcher {
public:
    Searcher(const SearchProblem& problem, SharedControl& control)
        : problem_(problem), ctx_(problem.ctx), field_(ctx_.field()), control_(control), p_(field_.p()), q_(field_.q()),
          val_(q_, 0), depth_of_(q_, kAbsent), used_((std::size_t(p_) + 1) * q_, 0), coset_count_(p_ + 1, 0),
          coset_first_scalar_(p_ + 1, 0), rep_values_(p_ + 1, field_.zero())
    {
        for (Residue l = 1; l < p_; ++l) {
            scalars_.push_back(field_.from_prime(l));
            scalar_squares_.push_back(field_.from_prime(static_cast<Residue>(std::uint64_t{l} * l % p_)));
        }
        coset_slot_.assign(q_, 0);
        coset_scalar_.assign(q_, 0);
        for (std::uint32_t x = 1; x < q_; ++x) {
            const auto cr = ctx_.coset_rep({x});
            coset_slot_[x] = static_cast<std::uint32_t>(cr.slot);
            coset_scalar_[x] = cr.scalar;
        }
        depth_of_[0] = 0;
        members_.push_back(0);
    }

    // Assigns the fixed representatives; false if they already conflict.
    bool seed()
    {
        for (const auto& [slot, value] : problem_.fixed) {
            if (!assign(slot, value))
                return false;
        }
        return true;
    }

    // Explores all completions below the current state.
    void explore(std::size_t k)
    {
        if (control_.abort.load(std::memory_order_relaxed)) {
            cut_ = true;
            return;
        }
        if (k == problem_.free_slots.size()) {
            record_solution();
            return;
        }
        const std::size_t slot = problem_.free_slots[k];
        for (std::uint32_t v = 1; v < q_; ++v) {
            if (!try_value(slot, {v}))
                continue;
            explore(k + 1);
            unassign();
            if (aborted_) {
                cut_ = true;
                return;
            }
        }
    }

    // One candidate, with node accounting. On success the assignment stays in place.
    bool try_value(std::size_t slot, Element v)
    {
        ++local_nodes_;
        if ((local_nodes_ & 0xFFF) == 0)
            flush_nodes();
        return assign(slot, v);
    }

    void unassign()
    {
        const Frame frame = frames_.back();
        frames_.pop_back();
        while (undo_.size() > frame.undo_mark) {
            used_[undo_.back()] = 0;
            undo_.pop_back();
        }
        while (members_.size() > frame.member_mark) {
            depth_of_[members_.back()] = kAbsent;
            members_.pop_back();
        }
        --coset_count_[frame.value_coset];
        assigned_slots_.pop_back();
    }

    void flush_nodes()
    {
        const auto total = control_.nodes.fetch_add(local_nodes_ - flushed_nodes_) + (local_nodes_ - flushed_nodes_);
        flushed_nodes_ = local_nodes_;
        bool over = total > control_.limits.node_cap;
        if (control_.limits.wall_cap && Clock::now() - control_.start > *control_.limits.wall_cap)
            over = true;
        if (over)
            control_.abort.store(true);
        aborted_ = control_.abort.load();
    }

    std::uint64_t nodes() const noexcept { return local_nodes_; }
    /// True if some subtree was abandoned because of a limit.
    bool cut() const noexcept { return cut_; }
    std::vector<std::vector<Element>>& solutions() noexcept { return solutions_; }

private:
    static constexpr std::uint32_t kAbsent = 0xFFFFFFFFU;

    struct Frame {
        std::size_t undo_mark;
        std::size_t member_mark;
        std::uint32_t value_coset;
    };

    Element value_at(std::uint32_t x) const noexcept { return {val_[x]}; }

    // Records Delta_a f(x) for the representative a in `slot`; false on a repeat.
    bool mark(std::size_t slot, std::uint32_t a, std::uint32_t x, std::uint32_t xa)
    {
        const Element d = field_.sub(field_.sub(value_at(xa), value_at(x)), value_at(a));
        const std::size_t key = slot * q_ + d.index;
        if (used_[key])
            return false;
        used_[key] = 1;
        undo_.push_back(key);
        return true;
    }

    bool assign(std::size_t slot, Element v)
    {
        if (v == field_.zero())
            return false;
        // a coset of values holds at most two, with nonsquare ratio
        const std::uint32_t vc = coset_slot_[v.index];
        if (coset_count_[vc] >= 2)
            return false;
        if (coset_count_[vc] == 1) {
            const Residue ratio =
                static_cast<Residue>(std::uint64_t{coset_scalar_[v.index]} * mod_inv(coset_first_scalar_[vc], p_) % p_);
            if (legendre(ratio, p_) == 1)
                return false;
        } else {
            coset_first_scalar_[vc] = coset_scalar_[v.index];
        }

        const std::uint32_t depth = static_cast<std::uint32_t>(frames_.size()) + 1;
        frames_.push_back({undo_.size(), members_.size(), vc});
        ++coset_count_[vc];
        assigned_slots_.push_back(slot);
        rep_values_[slot] = v;

        const Element y = ctx_.transversal()[slot];
        const std::size_t first_new = members_.size();
        for (std::size_t i = 0; i < scalars_.size(); ++i) {
            const std::uint32_t x = field_.mul(scalars_[i], y).index;
            val_[x] = field_.mul(scalar_squares_[i], v).index;
            depth_of_[x] = depth;
            members_.push_back(x);
        }

        if (!check_new(slot, y.index, depth, first_new)) {
            unassign();
            return false;
        }
        return true;
    }

    bool check_new(std::size_t new_slot, std::uint32_t a_new, std::uint32_t depth, std::size_t first_new)
    {
        // shift = the new representative, x anywhere in D
        for (const std::uint32_t x : members_) {
            const std::uint32_t xa = field_.add({x}, {a_new}).index;
            if (depth_of_[xa] != kAbsent && !mark(new_slot, a_new, x, xa))
                return false;
        }
        // shift = an older representative; x new, or x old with x + a new
        for (std::size_t r = 0; r + 1 < assigned_slots_.size(); ++r) {
            const std::size_t slot = assigned_slots_[r];
            const std::uint32_t a = ctx_.transversal()[slot].index;
            for (std::size_t m = first_new; m < members_.size(); ++m) {
                const std::uint32_t x = members_[m];
                const std::uint32_t xa = field_.add({x}, {a}).index;
                if (depth_of_[xa] != kAbsent && !mark(slot, a, x, xa))
                    return false;
                const std::uint32_t back = field_.sub({x}, {a}).index;
                if (depth_of_[back] != kAbsent && depth_of_[back] != depth && !mark(slot, a, back, x))
                    return false;
            }
        }
        return true;
    }

    void record_solution()
    {
        std::vector<Element> values(ctx_.transversal().size());
        for (std::size_t slot = 0; slot < values.size(); ++slot)
            values[slot] = rep_values_[slot];
        solutions_.push_back(std::move(values));
    }

    const SearchProblem& problem_;
    const FieldContext& ctx_;
    const Field& field_;
    SharedControl& control_;
    Residue p_;
    std::uint32_t q_;

    std::vector<Element> scalars_;
    std::vector<Element> scalar_squares_;
    std::vector<std::uint32_t> coset_slot_;
    std::vector<Residue> coset_scalar_;

    std::vector<std::uint32_t> val_;
    std::vector<std::uint32_t> depth_of_;
    std::vector<std::uint32_t> members_;
    std::vector<std::uint8_t> used_;
    std::vector<std::size_t> undo_;
    std::vector<std::uint32_t> coset_count_;
    std::vector<Residue> coset_first_scalar_;
    std::vector<Element> rep_values_;
    std::vector<std::size_t> assigned_slots_;
    std::vector<Frame> frames_;

    std::vector<std::vector<Element>> solutions_;
    std::uint64_t local_nodes_ = 0;
    std::uint64_t flushed_nodes_ = 0;
    bool aborted_ = false;
    bool cut_ = false;
};

struct Branch {
    std::vector<std::vector<Element>> solutions;
    std::uint64_t nodes = 0;
    bool finished = false;
};

void validate(const SearchProblem& problem)
{
    const std::size_t slots = problem.ctx.transversal().size();
    std::vector<int> seen(slots, 0);
    for (const auto& [slot, value] : problem.fixed) {
        if (slot >= slots || value.index >= problem.ctx.q())
            throw ParameterError("search problem: fixed assignment out of range");
        ++seen[slot];
    }
    for (auto slot : problem.free_slots) {
        if (slot >= slots)
            throw ParameterError("search problem: free slot out of range");
        ++seen[slot];
    }
    if (std::any_of(seen.begin(), seen.end(), [](int c) { return c != 1; }))
        throw ParameterError("search problem: every representative must be fixed or free exactly once");
}

bool is_valid_solution(const SearchProblem& problem, const FiniteFunction& f)
{
    const FieldContext& ctx = problem.ctx;
    const Field& field = ctx.field();
    if (!is_planar_serial(field, f).is_planar)
        return false;
    if (!detect_homogeneity(field, f).is_homogeneous)
        return false;
    // for the normalized problem these are f(1) = 1, f(beta) = beta^2, f(gamma) = gamma^2 moved onto T
    return std::all_of(problem.fixed.begin(), problem.fixed.end(),
                       [&](const auto& fv) { return f(ctx.transversal()[fv.first]) == fv.second; });
}

SearchResult run_search(const SearchProblem& problem, int threads, const SearchLimits& limits, bool parallel)
{
    validate(problem);
    SharedControl control;
    control.limits = limits;
    control.start = Clock::now();

    Searcher seeded(problem, control);
    const bool consistent = seeded.seed();
    const std::uint32_t q = problem.ctx.q();
    std::vector<Branch> branches;

    if (consistent && problem.free_slots.empty()) {
        seeded.explore(0);
        branches.push_back({std::move(seeded.solutions()), 0, true});
    } else if (consistent) {
        branches.resize(q - 1);
        const std::size_t first = problem.free_slots.front();
        auto body = [&](std::uint32_t v) {
            Branch& branch = branches[v - 1];
            if (control.abort.load())
                return;
            Searcher s = seeded;
            if (s.try_value(first, {v})) {
                s.explore(1);
                s.unassign();
            }
            s.flush_nodes();
            branch.nodes = s.nodes();
            branch.solutions = std::move(s.solutions());
            branch.finished = !s.cut();
        };
        const auto count = static_cast<std::int64_t>(q);
        if (parallel) {
#pragma omp parallel for schedule(dynamic, 1) num_threads(threads > 0 ? threads : omp_get_max_threads())
            for (std::int64_t v = 1; v < count; ++v)
                body(static_cast<std::uint32_t>(v));
        } else {
            for (std::int64_t v = 1; v < count; ++v)
                body(static_cast<std::uint32_t>(v));
        }
    }

    SearchResult result;
    result.nodes = problem.fixed.size();
    std::vector<Element> frontier;
    for (std::size_t i = 0; i < branches.size(); ++i) {
        auto& branch = branches[i];
        result.nodes += branch.nodes;
        if (!branch.finished)
            frontier.push_back({static_cast<std::uint32_t>(i + 1)});
        for (auto& values : branch.solutions) {
            FiniteFunction f = from_transversal_values(problem.ctx, values, "search");
            if (is_valid_solution(problem, f))
                result.solutions.push_back(std::move(f));
        }
    }
    std::sort(result.solutions.begin(), result.solutions.end());
    result.seconds = std::chrono::duration<double>(Clock::now() - control.start).count();
    if (control.abort.load())
        throw SearchLimitExceeded("search stopped at a resource limit after " + std::to_string(result.nodes) + " nodes",
                                  std::move(result), std::move(frontier));
    return result;
}

} // namespace

SearchResult enumerate(const SearchProblem& problem, int threads, const SearchLimits& limits)
{
    return run_search(problem, threads, limits, true);
}

SearchResult enumerate_serial(const SearchProblem& problem, const SearchLimits& limits)
{
    return run_search(problem, 1, limits, false);
}

bool verify_theorem(const FieldContext& ctx, const SearchResult& result)
{
    return result.solutions.size() == 1 && result.solutions.front() == from_monomial(ctx.field(), 2);
}

} // namespace planar
