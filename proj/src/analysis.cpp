#include "ttp/analysis.hpp"

#include <algorithm>

#include "ttp/errors.hpp"

namespace ttp {

Itinerary team_itinerary(const Schedule& s, const DistanceMatrix& d, int team)
{
    std::vector<int> at(s.days + 1, 0);
    for (const auto& g : s.games) {
        if (g.day < 1 || g.day > s.days || at[g.day])
            continue;
        if (g.home == team || g.away == team)
            at[g.day] = g.home;
    }
    Itinerary it;
    it.venues.push_back(team);
    int pos = team;
    for (int day = 1; day <= s.days; ++day) {
        int v = at[day] ? at[day] : pos;
        if (v != pos)
            it.distance += d(pos - 1, v - 1);
        pos = v;
        it.venues.push_back(v);
    }
    if (pos != team)
        it.distance += d(pos - 1, team - 1);
    it.venues.push_back(team);
    return it;
}

LowerBounds lower_bounds(const DistanceMatrix& d, const Matching& M, const SpanningTree& T)
{
    LowerBounds b;
    const double n = d.n();
    b.lb1 = degree_sums(d).delta + n * M.weight;
    b.lb2 = n * (T.weight + M.weight);
    return b;
}

double analytic_upper_bound(const DistanceMatrix& d, const TeamNumbering& num, const Matching& M)
{
    auto ds = degree_sums(d);
    const int n = num.n;
    double top4 = 0.0;
    for (int l = n - 3; l <= n; ++l)
        top4 += ds.D[num.original_of[l]];
    return ds.delta + top4 + 5.0 * even_cycle_weight(d, num) + (n + 4) * M.weight;
}

TravelReport travel_totals(const Schedule& sched, const DistanceMatrix& d, const TeamNumbering& num,
                           const Matching& M, const SpanningTree& T)
{
    TravelReport r;
    const int n = d.n();
    auto ld = num.labeled(d);
    r.per_team.assign(n + 1, 0.0);
    for (int t = 1; t <= n; ++t) {
        r.per_team[t] = team_itinerary(sched, ld, t).distance;
        r.total += r.per_team[t];
    }
    auto lb = lower_bounds(d, M, T);
    r.lb1 = lb.lb1;
    r.lb2 = lb.lb2;
    r.analytic_upper = analytic_upper_bound(d, num, M);
    r.target_ratio = 1.0 + 9.0 / n;
    if (r.lb1 > 0)
        r.ratio_lb1 = r.total / r.lb1;
    else if (r.total > 0)
        throw DegenerateError("positive travel against a zero lower bound");
    else
        r.ratio_lb1 = 1.0;
    r.ineq4_holds = leq_rel(even_cycle_weight(d, num), T.weight + M.weight);
    return r;
}

std::string category_of(int label, int n)
{
    const int m = n / 2;
    const int x = (label + 1) / 2;
    if (x == 1)
        return "I";
    if (x == m - 2)
        return "IV";
    if (x == m - 1)
        return "V";
    if (x == m)
        return "VI";
    return x % 2 == 0 ? "II" : "III";
}

ExtraBreakdown extra_travel_breakdown(const Schedule& sched, const DistanceMatrix& d, const TeamNumbering& num)
{
    const int n = num.n;
    auto ld = num.labeled(d);
    auto ds = degree_sums(ld);
    ExtraBreakdown b;
    b.per_team.assign(n + 1, 0.0);
    for (int t = 1; t <= n; ++t) {
        int partner = t % 2 ? t + 1 : t - 1;
        double e = team_itinerary(sched, ld, t).distance - (ds.D[t - 1] + ld(t - 1, partner - 1));
        b.per_team[t] = e;
        b.by_category[category_of(t, n)] += e;
        b.sum += e;
    }
    return b;
}

LegSurplus surplus_legs(const Schedule& sched)
{
    const int n = sched.n;
    LegSurplus out;
    out.extra.assign(n + 1, {});
    out.unused.assign(n + 1, {});
    auto key = [](int a, int b) { return Edge{std::min(a, b), std::max(a, b)}; };
    for (int t = 1; t <= n; ++t) {
        std::vector<std::vector<int>> left(n + 1, std::vector<int>(n + 1, 0));
        for (int j = 1; j <= n; ++j)
            if (j != t)
                ++left[std::min(t, j)][std::max(t, j)];
        for (int i = 1; 2 * i <= n; ++i)
            ++left[2 * i - 1][2 * i];
        std::vector<int> at(sched.days + 1, 0);
        for (const auto& g : sched.games)
            if ((g.home == t || g.away == t) && g.day >= 1 && g.day <= sched.days && !at[g.day])
                at[g.day] = g.home;
        int pos = t;
        auto leg = [&](int a, int b) {
            auto k = key(a, b);
            if (left[k.first][k.second] > 0)
                --left[k.first][k.second];
            else
                out.extra[t].push_back(k);
        };
        for (int day = 1; day <= sched.days; ++day) {
            int v = at[day] ? at[day] : pos;
            if (v != pos)
                leg(pos, v);
            pos = v;
        }
        if (pos != t)
            leg(pos, t);
        for (int a = 1; a <= n; ++a)
            for (int b = a + 1; b <= n; ++b)
                for (int c = 0; c < left[a][b]; ++c)
                    out.unused[t].push_back({a, b});
        std::sort(out.extra[t].begin(), out.extra[t].end());
    }
    return out;
}

}  // namespace ttp
