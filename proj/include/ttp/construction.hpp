#pragma once

#include <array>
#include <string>
#include <vector>

#include "ttp/graph.hpp"
#include "ttp/instances.hpp"
#include "ttp/numbering.hpp"
#include "ttp/schedule.hpp"

namespace ttp {

// Everything here works on labels 1..n; super-team u_i = {2i-1, 2i}.

enum class GameKind { Normal, Left, SpecialLeft, Right };
enum class LeftVariant { Consecutive, SingleTrip };

// R1..R4, optionally with every venue reversed
struct DayType {
    int r;
    bool reversed;
    bool operator==(const DayType&) const = default;
};

std::string to_string(DayType t);

struct SuperGame {
    GameKind kind;
    // Normal: {tail, head}. Left / SpecialLeft: {u_x, u_{m-1}}. Right: {A, B, m} with A = u_{i-1}, B = u_i.
    std::vector<int> participants;
    LeftVariant variant = LeftVariant::Consecutive;  // Left only
    bool forward = false;                              // Right only: A is the head super-team
    std::array<DayType, 4> daytypes{};                 // Right only
};

struct SlotPlan {
    int s;
    std::vector<SuperGame> supergames;
};

// Whether super-team x (1..m-2) is the tail of its normal game in slot s.
bool is_tail(int x, int s, int m);

// Throws DomainError for even m, m < 5, or n_mod_8 not in {2, 6}.
std::vector<SlotPlan> build_slot_plans(int m, int n_mod_8);

// Throws DomainError if s is outside 1..m-2.
std::array<DayType, 4> right_daytypes(int s, int m, bool forward);

std::vector<Game> expand_normal(int tail, int head, int s);
std::vector<Game> expand_left(int x, int s, int m, LeftVariant variant);
std::vector<Game> expand_special_left(int m);
// Throws ValidationError if the emitted block repeats an opponent on consecutive days.
std::vector<Game> expand_right(int a, int b, int m, const std::array<DayType, 4>& daytypes, int s);

struct SuperGameCounts {
    int normal = 0, left = 0, special_left = 0, right = 0;
    bool operator==(const SuperGameCounts&) const = default;
};

// Participation per super-team (index 1..m). For u_{m-1} the special left
// game counts as a left game.
std::vector<SuperGameCounts> supergame_counts(const std::vector<SlotPlan>& plans, int m);

std::vector<Game> expand_slot(const SlotPlan& plan, int m);

// played[h][a] is true when h already hosted a (1-based, size n+1).
// Throws LedgerError when the open games are not the expected last-slot set.
std::vector<Game> build_last_slot(int n, const std::vector<std::vector<char>>& played);

// Schedule on labels, all 2(n-1) days. Throws UnsupportedError unless n = 2 mod 4 and n >= 10.
Schedule build_labeled_schedule(int n);

struct Construction {
    Matching matching;
    SpanningTree tree;
    Tour tour;
    TeamNumbering numbering;
    std::vector<SlotPlan> plans;
    Schedule labeled;   // teams are labels
    Schedule original;  // teams are original indices + 1
};

Construction construct_schedule(const DistanceMatrix& d);

}  // namespace ttp
