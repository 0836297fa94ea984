#pragma once

#include "tpfill/forest.hpp"
#include "tpfill/slim.hpp"

#include <limits>

namespace tpfill {

enum class FillTarget { TriviallyPerfect, Chordal };

struct FillSearchResult {
    std::size_t min_fill = 0;
    std::vector<Edge> witness;  // lexicographically first minimum fill set
    std::uint64_t explored = 0;
};

class OracleTooLarge : public std::runtime_error {
public:
    OracleTooLarge(std::size_t n, std::size_t cap);
};

class FillCapExceeded : public std::runtime_error {
public:
    FillCapExceeded(std::size_t lower_bound, std::uint64_t explored);
    std::size_t lower_bound() const { return lower_bound_; }
    std::uint64_t explored() const { return explored_; }

private:
    std::size_t lower_bound_;
    std::uint64_t explored_;
};

// 8, or the value of TPFILL_ORACLE_CAP when set.
std::size_t default_oracle_cap();

FillSearchResult brute_min_fill(const Graph& g, FillTarget target,
                                std::size_t max_fill = std::numeric_limits<std::size_t>::max(),
                                std::size_t vertex_cap = default_oracle_cap());

// Exhaustive search over 4-vertex subsets.
std::optional<Obstruction> find_p4_or_c4(const Graph& g);
bool has_long_induced_cycle(const Graph& g);  // exhaustive, n <= 12

std::int64_t enumerate_merges(std::span<const RootedTree> trees, std::size_t cap = 8);
std::size_t enumerate_slim(const SlimProblem& p, std::size_t cap = 7);

// Minimum chordal fill via the true-twin quotient and a subset DP over elimination orders.
std::size_t exact_chordal_fill(const Graph& g, std::size_t quotient_cap = 20);

}  // namespace tpfill
