#include <cmath>
#include <numeric>

#include "doctest.h"
#include "ttp/analysis.hpp"
#include "ttp/construction.hpp"
#include "ttp/errors.hpp"

using namespace ttp;

namespace {

DistanceMatrix uniform(int n)
{
    DistanceMatrix d(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            d.at(i, j) = i == j ? 0.0 : 1.0;
    return d;
}

std::vector<int> all(int n)
{
    std::vector<int> v(n);
    std::iota(v.begin(), v.end(), 0);
    return v;
}

}  // namespace

TEST_CASE("itineraries")
{
    DistanceMatrix d(4);
    const double x[4] = {0, 1, 3, 7};
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            d.at(i, j) = std::fabs(x[i] - x[j]);

    Schedule home;
    home.n = 4;
    home.days = 3;
    home.games = {{1, 1, 2}, {2, 1, 3}, {3, 1, 4}};
    auto it = team_itinerary(home, d, 1);
    CHECK(it.distance == 0.0);
    CHECK(it.venues == std::vector<int>{1, 1, 1, 1, 1});

    // AA block at 2 then 3, then home
    Schedule away;
    away.n = 4;
    away.days = 3;
    away.games = {{1, 2, 1}, {2, 3, 1}, {3, 1, 4}};
    auto a = team_itinerary(away, d, 1);
    CHECK(a.distance == d(0, 1) + d(1, 2) + d(2, 0));
    CHECK(a.venues == std::vector<int>{1, 2, 3, 1, 1});

    // ends away: returns home after the last day
    Schedule last;
    last.n = 4;
    last.days = 2;
    last.games = {{1, 1, 2}, {2, 4, 1}};
    CHECK(team_itinerary(last, d, 1).distance == 2 * d(0, 3));
}

TEST_CASE("lower bounds")
{
    auto d = uniform(6);
    auto M = min_weight_perfect_matching(d, all(6));
    auto T = minimum_spanning_tree(d);
    CHECK(M.weight == 3.0);
    CHECK(T.weight == 5.0);
    auto lb = lower_bounds(d, M, T);
    CHECK(lb.lb1 == 48.0);
    CHECK(lb.lb2 == 48.0);

    DistanceMatrix z(6);
    auto lz = lower_bounds(z, min_weight_perfect_matching(z, all(6)), minimum_spanning_tree(z));
    CHECK(lz.lb1 == 0.0);
    CHECK(lz.lb2 == 0.0);

    for (auto kind : {InstanceKind::Euclidean, InstanceKind::Circle, InstanceKind::RandomMetric})
        for (std::uint64_t seed = 1; seed <= 10; ++seed) {
            auto g = generate_instance(kind, 14, seed);
            auto b = lower_bounds(g, min_weight_perfect_matching(g, all(14)), minimum_spanning_tree(g));
            CHECK(b.lb2 <= b.lb1 * (1 + 1e-12));
        }
}

TEST_CASE("analytic upper bound on a uniform metric")
{
    auto d = uniform(10);
    auto M = min_weight_perfect_matching(d, all(10));
    auto num = assign_numbering(d, M, christofides_tour(d));
    // 90 + 36 + 5 * 3 + 14 * 5; the even-label cycle 2-4-6-2 has three edges
    CHECK(analytic_upper_bound(d, num, M) == 211.0);

    DistanceMatrix z(10);
    auto Mz = min_weight_perfect_matching(z, all(10));
    CHECK(analytic_upper_bound(z, assign_numbering(z, Mz, christofides_tour(z)), Mz) == 0.0);
}

TEST_CASE("zero metric travel report")
{
    DistanceMatrix z(10);
    auto c = construct_schedule(z);
    auto r = travel_totals(c.labeled, z, c.numbering, c.matching, c.tree);
    CHECK(r.total == 0.0);
    CHECK(r.ratio_lb1 == 1.0);
    CHECK(r.target_ratio == 1.9);
}

TEST_CASE("positive travel against a zero bound is reported")
{
    auto d = uniform(10);
    auto c = construct_schedule(d);
    // a corrupted matching weight that cancels delta
    Matching M0 = c.matching;
    M0.weight = -9.0;
    CHECK_THROWS_AS(travel_totals(c.labeled, d, c.numbering, M0, c.tree), DegenerateError);
}

TEST_CASE("travel report identities on generated instances")
{
    for (auto kind : {InstanceKind::Euclidean, InstanceKind::Circle, InstanceKind::RandomMetric})
        for (int n : {10, 14, 26})
            for (std::uint64_t seed = 1; seed <= 5; ++seed) {
                auto d = generate_instance(kind, n, seed);
                auto c = construct_schedule(d);
                auto r = travel_totals(c.labeled, d, c.numbering, c.matching, c.tree);
                double sum = 0.0;
                for (int t = 1; t <= n; ++t)
                    sum += r.per_team[t];
                CHECK(sum == r.total);

                // the same schedule in original indices travels the same
                double orig = 0.0;
                for (int t = 1; t <= n; ++t)
                    orig += team_itinerary(c.original, d, t).distance;
                CHECK(orig == doctest::Approx(r.total).epsilon(1e-12));

                CHECK(r.lb2 <= r.lb1 * (1 + 1e-12));
                CHECK(r.total <= r.analytic_upper * (1 + 1e-9));
                if (r.ineq4_holds) {
                    CHECK(r.ratio_lb1 <= r.target_ratio * (1 + 1e-9));
                    CHECK(r.analytic_upper <= ((1 + 4.0 / n) * r.lb1 + 5.0 / n * r.lb2) * (1 + 1e-9));
                }

                auto br = extra_travel_breakdown(c.labeled, d, c.numbering);
                auto delta = degree_sums(d).delta;
                const double dm = c.matching.weight;
                CHECK(br.sum + delta + 2 * dm == doctest::Approx(r.total).epsilon(1e-10));
                CHECK(leq_rel(r.total, br.sum + delta + (n - 2) * dm, 1e-6));
                double cats = 0.0;
                for (const auto& [k, v] : br.by_category)
                    cats += v;
                CHECK(cats == doctest::Approx(br.sum).epsilon(1e-10).scale(1.0));
                // no category III super-teams when m = 5
                CHECK(br.by_category.size() == (n == 10 ? 5u : 6u));
            }
}

TEST_CASE("categories")
{
    const int n = 18;  // m = 9
    CHECK(category_of(1, n) == "I");
    CHECK(category_of(2, n) == "I");
    CHECK(category_of(3, n) == "II");
    CHECK(category_of(5, n) == "III");
    CHECK(category_of(8, n) == "II");
    CHECK(category_of(9, n) == "III");
    CHECK(category_of(11, n) == "II");
    CHECK(category_of(13, n) == "IV");
    CHECK(category_of(15, n) == "V");
    CHECK(category_of(18, n) == "VI");
}

TEST_CASE("u_m never travels its own matching edge")
{
    for (int n : {10, 14, 18, 22}) {
        auto sur = surplus_legs(build_labeled_schedule(n));
        for (int t : {n - 1, n}) {
            bool unused = false;
            for (auto e : sur.unused[t])
                unused = unused || e == Edge{n - 1, n};
            CHECK(unused);
        }
    }
}
