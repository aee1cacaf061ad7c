#pragma once

#include <cstdint>

#include "ttp/instances.hpp"
#include "ttp/schedule.hpp"

namespace ttp {

struct ExactResult {
    double optimum = 0.0;
    Schedule schedule;  // teams are original indices + 1
    std::uint64_t nodes_explored = 0;
};

struct ExactOptions {
    int k = 2;
    std::uint64_t node_limit = 200'000'000;
    bool prune = true;           // cost-bound pruning; off gives plain enumeration
    bool break_symmetry = true;  // keep one of each time-reversed pair
};

// Depth-first day-by-day search. Throws DomainError for odd n, n < 4 or n > 8,
// LimitError when node_limit is exceeded.
ExactResult solve_exact(const DistanceMatrix& d, const ExactOptions& opt = {});

}  // namespace ttp
