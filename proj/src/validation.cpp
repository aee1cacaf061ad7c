#include "ttp/validation.hpp"

namespace ttp {

const char* kind_name(Violation::Kind k)
{
    switch (k) {
    case Violation::FixedGameTime: return "FixedGameTime";
    case Violation::NoRepeat: return "NoRepeat";
    case Violation::BoundedByK: return "BoundedByK";
    case Violation::DoubleRoundRobin: return "DoubleRoundRobin";
    case Violation::DayRange: return "DayRange";
    }
    return "?";
}

std::vector<Violation> validate_schedule(const Schedule& s, int k, int expected_days)
{
    const int n = s.n;
    std::vector<Violation> out;
    // per team, per day: opponents and venues (1 = home)
    std::vector<std::vector<std::vector<int>>> opp(n + 1, std::vector<std::vector<int>>(expected_days + 2));
    std::vector<std::vector<std::vector<char>>> venue(n + 1, std::vector<std::vector<char>>(expected_days + 2));
    std::vector<std::vector<int>> count(n + 1, std::vector<int>(n + 1, 0));

    for (const auto& g : s.games) {
        if (g.home < 1 || g.home > n || g.away < 1 || g.away > n || g.home == g.away) {
            out.push_back({Violation::DoubleRoundRobin, {g.home, g.away}, {g.day},
                           "invalid pairing " + std::to_string(g.home) + " vs " + std::to_string(g.away)});
            continue;
        }
        ++count[g.home][g.away];
        if (g.day < 1 || g.day > expected_days) {
            out.push_back({Violation::DayRange, {g.home, g.away}, {g.day},
                           "game on day " + std::to_string(g.day) + " outside 1.." +
                               std::to_string(expected_days)});
            continue;
        }
        opp[g.home][g.day].push_back(g.away);
        opp[g.away][g.day].push_back(g.home);
        venue[g.home][g.day].push_back(1);
        venue[g.away][g.day].push_back(0);
    }

    for (int t = 1; t <= n; ++t)
        for (int d = 1; d <= expected_days; ++d) {
            size_t c = opp[t][d].size();
            if (c != 1)
                out.push_back({Violation::FixedGameTime, {t}, {d},
                               "team " + std::to_string(t) + " plays " + std::to_string(c) +
                                   " games on day " + std::to_string(d)});
        }

    for (int t = 1; t <= n; ++t)
        for (int d = 1; d < expected_days; ++d)
            for (int a : opp[t][d])
                for (int b : opp[t][d + 1])
                    if (a == b)
                        out.push_back({Violation::NoRepeat, {t, a}, {d, d + 1},
                                       "team " + std::to_string(t) + " meets " + std::to_string(a) +
                                           " on days " + std::to_string(d) + " and " +
                                           std::to_string(d + 1)});

    for (int t = 1; t <= n; ++t) {
        int run = 0, start = 0, kind = -1;
        auto close = [&](int end_day) {
            if (run > k)
                out.push_back({Violation::BoundedByK, {t}, {start, end_day},
                               "team " + std::to_string(t) + " has " + std::to_string(run) +
                                   (kind == 1 ? " consecutive home" : " consecutive away") +
                                   " games on days " + std::to_string(start) + ".." +
                                   std::to_string(end_day)});
        };
        for (int d = 1; d <= expected_days; ++d) {
            int v = venue[t][d].size() == 1 ? venue[t][d][0] : -1;
            if (v >= 0 && v == kind) {
                ++run;
                continue;
            }
            close(d - 1);
            kind = v;
            run = v >= 0 ? 1 : 0;
            start = d;
        }
        close(expected_days);
    }

    for (int h = 1; h <= n; ++h)
        for (int a = 1; a <= n; ++a) {
            if (h == a || count[h][a] == 1)
                continue;
            out.push_back({Violation::DoubleRoundRobin, {h, a}, {},
                           "team " + std::to_string(h) + " hosts " + std::to_string(a) + " " +
                               std::to_string(count[h][a]) + " times"});
        }
    return out;
}

}  // namespace ttp
