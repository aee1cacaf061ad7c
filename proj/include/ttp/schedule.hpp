#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace ttp {

// Teams are 1-based in games and timetables.
struct Game {
    int day;
    int home;
    int away;
    bool operator==(const Game&) const = default;
    auto operator<=>(const Game&) const = default;
};

struct Schedule {
    int n = 0;
    int days = 0;
    std::vector<Game> games;

    // entry for (team, day): +j hosts j, -j plays at j, 0 no game (first game if several)
    std::vector<std::vector<int>> grid() const;
    void sort();
};

// Rewrites team ids through map (map[old] = new, both 1-based; map[0] unused).
Schedule relabel(const Schedule& s, const std::vector<int>& map);

// days rows, n whitespace-separated entries each
std::string format_timetable(const Schedule& s);

// Each +j / -j entry contributes the game it names; duplicates collapse.
// Throws ParseError on malformed text or ragged rows.
Schedule parse_timetable(std::string_view text);

}  // namespace ttp
