#pragma once

#include <map>
#include <string>
#include <vector>

#include "ttp/graph.hpp"
#include "ttp/instances.hpp"
#include "ttp/numbering.hpp"
#include "ttp/schedule.hpp"

namespace ttp {

struct Itinerary {
    std::vector<int> venues;  // home, one venue per day, home
    double distance = 0.0;
};

// d is indexed like the schedule's teams (team t -> row t-1).
Itinerary team_itinerary(const Schedule& s, const DistanceMatrix& d, int team);

struct LowerBounds {
    double lb1 = 0.0;  // sum of D + n d(M)
    double lb2 = 0.0;  // n (d(T) + d(M))
};

LowerBounds lower_bounds(const DistanceMatrix& d, const Matching& M, const SpanningTree& T);

// Delta + (four largest-label D) + 5 * even-label cycle + (n + 4) d(M)
double analytic_upper_bound(const DistanceMatrix& d, const TeamNumbering& num, const Matching& M);

struct TravelReport {
    std::vector<double> per_team;  // by label, entry 0 unused
    double total = 0.0;
    double lb1 = 0.0, lb2 = 0.0;
    double analytic_upper = 0.0;
    double ratio_lb1 = 1.0;
    double target_ratio = 0.0;
    bool ineq4_holds = false;
};

// sched on labels, d on original indices. Throws DegenerateError if lb1 = 0 < total.
TravelReport travel_totals(const Schedule& sched, const DistanceMatrix& d, const TeamNumbering& num,
                           const Matching& M, const SpanningTree& T);

// Super-team groups used for the per-category extra-travel report.
std::string category_of(int label, int n);

struct ExtraBreakdown {
    std::vector<double> per_team;  // by label: itinerary - (D(team) + partner distance)
    std::map<std::string, double> by_category;
    double sum = 0.0;
};

ExtraBreakdown extra_travel_breakdown(const Schedule& sched, const DistanceMatrix& d, const TeamNumbering& num);

// Legs a team travels beyond its ideal multiset {team-j for every j} + {2i-1 - 2i for every i}.
// Schedule must be on labels. Legs are (smaller, larger) label pairs.
struct LegSurplus {
    std::vector<std::vector<Edge>> extra;   // by label
    std::vector<std::vector<Edge>> unused;  // ideal legs never travelled, by label
};

LegSurplus surplus_legs(const Schedule& sched);

}  // namespace ttp
