#include "ttp/schedule.hpp"

#include <algorithm>
#include <charconv>
#include <set>
#include <sstream>

#include "ttp/errors.hpp"

namespace ttp {

std::vector<std::vector<int>> Schedule::grid() const
{
    std::vector<std::vector<int>> g(days, std::vector<int>(n, 0));
    for (const auto& x : games) {
        if (x.day < 1 || x.day > days || x.home < 1 || x.home > n || x.away < 1 || x.away > n)
            continue;
        auto& h = g[x.day - 1][x.home - 1];
        auto& a = g[x.day - 1][x.away - 1];
        if (h == 0)
            h = x.away;
        if (a == 0)
            a = -x.home;
    }
    return g;
}

void Schedule::sort() { std::sort(games.begin(), games.end()); }

Schedule relabel(const Schedule& s, const std::vector<int>& map)
{
    Schedule out = s;
    for (auto& g : out.games) {
        g.home = map[g.home];
        g.away = map[g.away];
    }
    out.sort();
    return out;
}

std::string format_timetable(const Schedule& s)
{
    std::string out;
    for (const auto& row : s.grid()) {
        for (size_t i = 0; i < row.size(); ++i) {
            if (i)
                out += ' ';
            if (row[i] > 0)
                out += '+';
            out += std::to_string(row[i]);
        }
        out += '\n';
    }
    return out;
}

Schedule parse_timetable(std::string_view text)
{
    std::vector<std::vector<int>> rows;
    std::istringstream in{std::string(text)};
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::istringstream ls(line);
        std::string tok;
        std::vector<int> row;
        while (ls >> tok) {
            int v = 0;
            const char* b = tok.data();
            const char* e = b + tok.size();
            if (*b == '+')
                ++b;
            auto [ptr, ec] = std::from_chars(b, e, v);
            if (ec != std::errc() || ptr != e)
                throw ParseError("timetable line " + std::to_string(line_no) + ": bad entry '" + tok + "'");
            row.push_back(v);
        }
        if (!row.empty())
            rows.push_back(std::move(row));
    }
    if (rows.empty())
        throw ParseError("empty timetable");
    Schedule s;
    s.n = static_cast<int>(rows[0].size());
    s.days = static_cast<int>(rows.size());
    std::set<Game> games;
    for (int d = 0; d < s.days; ++d) {
        if (static_cast<int>(rows[d].size()) != s.n)
            throw ParseError("timetable row " + std::to_string(d + 1) + " has " +
                             std::to_string(rows[d].size()) + " entries, expected " + std::to_string(s.n));
        for (int t = 0; t < s.n; ++t) {
            int v = rows[d][t];
            if (v == 0)
                continue;
            int o = v > 0 ? v : -v;
            if (o > s.n)
                throw ParseError("timetable row " + std::to_string(d + 1) + ": team " +
                                 std::to_string(o) + " out of range");
            if (v > 0)
                games.insert({d + 1, t + 1, o});
            else
                games.insert({d + 1, o, t + 1});
        }
    }
    s.games.assign(games.begin(), games.end());
    return s;
}

}  // namespace ttp
