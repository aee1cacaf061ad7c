#pragma once

#include <string>
#include <vector>

#include "ttp/graph.hpp"
#include "ttp/instances.hpp"

namespace ttp {

struct DegreeSums {
    std::vector<double> D;  // D[i] = sum_j d(i, j)
    double delta = 0.0;     // sum_i D[i]
};

DegreeSums degree_sums(const DistanceMatrix& d);

// Labels run 1..n. Super-team u_i consists of labels 2i-1 and 2i.
struct TeamNumbering {
    int n = 0;
    int m = 0;
    std::vector<int> label_of;     // original index (0-based) -> label
    std::vector<int> original_of;  // label -> original index; entry 0 unused

    // distance matrix re-indexed by label - 1
    DistanceMatrix labeled(const DistanceMatrix& d) const;
    std::string dump() const;  // "original label" lines, 1-based originals
};

// Throws DomainError if M is not perfect on all teams or C is not a tour of them.
TeamNumbering assign_numbering(const DistanceMatrix& d, const Matching& M, const Tour& C);

struct NumberingDiagnostics {
    double ineq3_lhs = 0, ineq3_rhs = 0;
    double ineq4_lhs = 0, ineq4_rhs = 0;
    bool ineq3_holds = false;
    bool ineq4_holds = false;
};

constexpr double kRelTol = 1e-9;

// a <= b up to a relative tolerance on the magnitude of the operands
bool leq_rel(double a, double b, double rel = kRelTol);

// sum of d over the even labels 2, 4, ..., n-4 taken as a closed cycle
double even_cycle_weight(const DistanceMatrix& d, const TeamNumbering& num);

NumberingDiagnostics numbering_diagnostics(const TeamNumbering& num, const DistanceMatrix& d,
                                           const Matching& M, const SpanningTree& T, const Tour& C);

}  // namespace ttp
