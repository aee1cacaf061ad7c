#pragma once

#include <utility>
#include <vector>

#include "ttp/instances.hpp"

namespace ttp {

using Edge = std::pair<int, int>;  // stored with first < second

struct SpanningTree {
    std::vector<Edge> edges;
    double weight = 0.0;
};

struct Matching {
    std::vector<Edge> pairs;  // sorted
    double weight = 0.0;
    int mate(int v) const;    // -1 if v is not covered
};

struct Tour {
    std::vector<int> order;
    double weight = 0.0;
};

// Sum of d over the edges, accumulated in sorted edge order.
double edge_weight(const DistanceMatrix& d, std::vector<Edge>& edges);
double tour_weight(const DistanceMatrix& d, const std::vector<int>& order);

// Prim on the complete graph; on equal keys the lower vertex index is attached first.
SpanningTree minimum_spanning_tree(const DistanceMatrix& d);

// Minimum-weight perfect matching of the complete graph induced by subset.
// Throws DomainError if subset has odd size or repeats a vertex.
Matching min_weight_perfect_matching(const DistanceMatrix& d, const std::vector<int>& subset);

// Maximum-weight matching over a dense symmetric weight matrix (w[i*k+j]),
// restricted to maximum cardinality. Returns mate[] with -1 for exposed vertices.
std::vector<int> max_weight_matching_dense(const std::vector<double>& w, int k, bool max_cardinality);

struct ChristofidesParts {
    SpanningTree tree;
    Matching odd_matching;
    std::vector<int> euler;  // closed walk, first vertex repeated at the end
    Tour tour;
};

ChristofidesParts christofides(const DistanceMatrix& d);
Tour christofides_tour(const DistanceMatrix& d);

}  // namespace ttp
