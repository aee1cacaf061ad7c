#include <map>
#include <set>
#include <string>

#include "ttp/construction.hpp"
#include "ttp/errors.hpp"

namespace ttp {

namespace {

// Six-day gadgets; each row lists "host>guest" games on one day, letters are
// bound to labels per instance.
struct Gadget {
    const char* days[6];
};

const Gadget kDiamond = {{"b>d e>c", "d>c", "c>b e>d", "d>b c>e", "b>c d>e", "c>d"}};
const Gadget kEnd = {{"p>r y>q z>x", "r>q y>x", "q>p x>r z>y", "r>p q>y x>z", "p>q r>x y>z", "q>r x>y"}};
const Gadget kBridge = {{"", "b>e", "", "", "", "e>b"}};
const Gadget kSpecial = {{"w>v z>y", "v>z y>w", "v>y z>w", "z>v w>y", "y>v w>z", "v>w y>z"}};

void emit(std::vector<Game>& out, int d0, const Gadget& g, const std::map<char, int>& bind)
{
    for (int k = 0; k < 6; ++k) {
        std::string row = g.days[k];
        for (size_t i = 0; i + 2 < row.size(); i += 4)
            out.push_back({d0 + k, bind.at(row[i]), bind.at(row[i + 2])});
    }
}

}  // namespace

std::vector<Game> build_last_slot(int n, const std::vector<std::vector<char>>& played)
{
    const int m = n / 2;
    const int d0 = 2 * n - 7;
    std::vector<Game> out;
    // rotating super-teams with odd index 3..m-4 swap games with their neighbours
    for (int i = 3; i <= m - 4; i += 2)
        emit(out, d0, kDiamond, {{'b', 2 * i - 2}, {'c', 2 * i - 1}, {'d', 2 * i}, {'e', 2 * i + 1}});
    emit(out, d0, kEnd,
         {{'p', n - 6}, {'q', n - 5}, {'r', n - 4}, {'x', 1}, {'y', 2}, {'z', 3}});
    // even-index super-teams only have the partner game left
    for (int j = 2; j <= m - 3; j += 2)
        emit(out, d0, kBridge, {{'e', 2 * j - 1}, {'b', 2 * j}});
    emit(out, d0, kSpecial, {{'v', n - 3}, {'w', n - 2}, {'y', n - 1}, {'z', n}});

    std::set<std::pair<int, int>> open;
    for (int h = 1; h <= n; ++h)
        for (int a = 1; a <= n; ++a)
            if (h != a && !played[h][a])
                open.insert({h, a});
    std::set<std::pair<int, int>> planned;
    for (const auto& g : out)
        planned.insert({g.home, g.away});
    if (open != planned || planned.size() != out.size()) {
        for (const auto& p : open)
            if (!planned.count(p))
                throw LedgerError("team " + std::to_string(p.first) + " still has to host " +
                                  std::to_string(p.second) + " but the last slot does not schedule it");
        for (const auto& p : planned)
            if (!open.count(p))
                throw LedgerError("teams " + std::to_string(p.first) + " and " + std::to_string(p.second) +
                                  " already played the game the last slot needs");
        throw LedgerError("last slot schedules a game twice");
    }
    return out;
}

}  // namespace ttp
