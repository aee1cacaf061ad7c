#include "ttp/construction.hpp"

#include <algorithm>

#include "ttp/errors.hpp"

namespace ttp {

namespace {

int odd(int x) { return 2 * x - 1; }
int even(int x) { return 2 * x; }

// Roles inside a right super-game: members of A = u_{i-1}, B = u_i, and the
// two members of u_m.
enum Role { AO, AE, BO, BE, G1, G2 };

struct RGame {
    Role home, away;
};

// One day of a right super-game: a cross game between A and B plus two games
// against u_m members.
const RGame kRight[4][3] = {
    {{G2, AO}, {BE, AE}, {BO, G1}},  // R1
    {{BE, AO}, {G1, AE}, {BO, G2}},  // R2
    {{BO, AO}, {G1, AE}, {BE, G2}},  // R3
    {{BE, AO}, {G2, AE}, {BO, G1}},  // R4
};

// day 3 mirrors day 1 and day 4 mirrors day 2
void mirror(std::vector<Game>& out, int d0, const Game (&day1)[2], const Game (&day2)[2])
{
    for (const auto& g : day1) {
        out.push_back({d0, g.home, g.away});
        out.push_back({d0 + 2, g.away, g.home});
    }
    for (const auto& g : day2) {
        out.push_back({d0 + 1, g.home, g.away});
        out.push_back({d0 + 3, g.away, g.home});
    }
}

}  // namespace

std::string to_string(DayType t)
{
    return std::string(t.reversed ? "~R" : "R") + std::to_string(t.r);
}

bool is_tail(int x, int s, int m)
{
    int corner = m - 1 - x;  // slot in which x sits next to u_{m-1}
    if (s < corner)
        return x % 2 == 1;
    return x % 2 == 0;
}

std::array<DayType, 4> right_daytypes(int s, int m, bool forward)
{
    if (s < 1 || s > m - 2)
        throw DomainError("slot " + std::to_string(s) + " outside 1.." + std::to_string(m - 2));
    const int K = (m - 3) / 2;
    if (s <= K) {
        if (forward)
            return {DayType{4, false}, {3, false}, {4, true}, {3, true}};
        return {DayType{2, true}, {1, true}, {2, false}, {1, false}};
    }
    if (s == K + 1)
        return {DayType{1, false}, {3, false}, {1, true}, {3, true}};
    if (forward)
        return {DayType{1, false}, {2, false}, {1, true}, {2, true}};
    return {DayType{3, true}, {4, true}, {3, false}, {4, false}};
}

std::vector<SlotPlan> build_slot_plans(int m, int n_mod_8)
{
    if (m < 5 || m % 2 == 0)
        throw DomainError("super-team count must be odd and at least 5, got " + std::to_string(m));
    if (n_mod_8 != 2 && n_mod_8 != 6)
        throw DomainError("n mod 8 must be 2 or 6");
    if ((2 * m) % 8 != n_mod_8)
        throw DomainError("n mod 8 does not match m");
    const int P = m - 2;  // rotating super-teams
    const int K = (m - 3) / 2;
    std::vector<SlotPlan> plans;
    for (int s = 1; s <= m - 2; ++s) {
        std::vector<int> at(P);
        for (int x = 1; x <= P; ++x)
            at[(x + s - 1) % P] = x;
        SlotPlan plan{s, {}};

        int x0 = at[0];
        if (s == 1) {
            plan.supergames.push_back({GameKind::Normal, {m - 1, x0}});
        } else if (s == m - 2) {
            plan.supergames.push_back({GameKind::SpecialLeft, {x0, m - 1}});
        } else {
            SuperGame g{GameKind::Left, {x0, m - 1}};
            g.variant = s % 2 == 0 ? LeftVariant::Consecutive : LeftVariant::SingleTrip;
            plan.supergames.push_back(g);
        }
        for (int k = 1; k < K; ++k) {
            int a = at[k], b = at[P - k];
            if (is_tail(a, s, m) == is_tail(b, s, m))
                throw DomainError("inconsistent normal-game roles");
            if (is_tail(a, s, m))
                plan.supergames.push_back({GameKind::Normal, {a, b}});
            else
                plan.supergames.push_back({GameKind::Normal, {b, a}});
        }
        SuperGame r{GameKind::Right, {at[K], at[K + 1], m}};
        r.forward = !is_tail(at[K], s, m);
        r.daytypes = right_daytypes(s, m, r.forward);
        plan.supergames.push_back(r);
        plans.push_back(std::move(plan));
    }
    return plans;
}

std::vector<Game> expand_normal(int tail, int head, int s)
{
    const int d0 = 4 * s - 3;
    std::vector<Game> out;
    const int a1 = odd(tail), a2 = even(tail), b1 = odd(head), b2 = even(head);
    mirror(out, d0, {{0, a1, b1}, {0, a2, b2}}, {{0, a1, b2}, {0, a2, b1}});
    return out;
}

std::vector<Game> expand_left(int x, int s, int m, LeftVariant variant)
{
    const int d0 = 4 * s - 3;
    // p plays HAAH, q plays AHHA
    int p = variant == LeftVariant::Consecutive ? m - 1 : x;
    int q = variant == LeftVariant::Consecutive ? x : m - 1;
    std::vector<Game> out;
    mirror(out, d0, {{0, odd(p), odd(q)}, {0, even(p), even(q)}},
           {{0, even(q), odd(p)}, {0, odd(q), even(p)}});
    return out;
}

std::vector<Game> expand_special_left(int m)
{
    const int d0 = 4 * (m - 2) - 3;
    const int a1 = odd(1), a2 = even(1), b1 = odd(m - 1), b2 = even(m - 1);
    return {
        {d0, a1, b1},     {d0, a2, b2},
        {d0 + 1, b2, a1}, {d0 + 1, a2, b1},
        {d0 + 2, b1, a1}, {d0 + 2, b2, a2},
        {d0 + 3, b1, a2}, {d0 + 3, a1, b2},
    };
}

std::vector<Game> expand_right(int a, int b, int m, const std::array<DayType, 4>& daytypes, int s)
{
    const int d0 = 4 * s - 3;
    const int team[6] = {odd(a), even(a), odd(b), even(b), odd(m), even(m)};
    std::vector<Game> out;
    for (int k = 0; k < 4; ++k) {
        const auto& t = daytypes[k];
        for (const auto& g : kRight[t.r - 1]) {
            int h = team[g.home], w = team[g.away];
            if (t.reversed)
                std::swap(h, w);
            out.push_back({d0 + k, h, w});
        }
    }
    for (int k = 0; k + 1 < 4; ++k)
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) {
                const auto& x = out[3 * k + i];
                const auto& y = out[3 * (k + 1) + j];
                if ((x.home == y.home && x.away == y.away) || (x.home == y.away && x.away == y.home))
                    throw ValidationError("right super-game repeats a pairing on days " +
                                          std::to_string(d0 + k) + "-" + std::to_string(d0 + k + 1));
            }
    return out;
}

std::vector<SuperGameCounts> supergame_counts(const std::vector<SlotPlan>& plans, int m)
{
    std::vector<SuperGameCounts> c(m + 1);
    for (const auto& plan : plans)
        for (const auto& g : plan.supergames)
            for (int x : g.participants) {
                switch (g.kind) {
                case GameKind::Normal: ++c[x].normal; break;
                case GameKind::Left: ++c[x].left; break;
                case GameKind::SpecialLeft:
                    if (x == m - 1)
                        ++c[x].left;
                    else
                        ++c[x].special_left;
                    break;
                case GameKind::Right: ++c[x].right; break;
                }
            }
    return c;
}

std::vector<Game> expand_slot(const SlotPlan& plan, int m)
{
    std::vector<Game> out;
    for (const auto& g : plan.supergames) {
        std::vector<Game> part;
        switch (g.kind) {
        case GameKind::Normal:
            part = expand_normal(g.participants[0], g.participants[1], plan.s);
            break;
        case GameKind::Left:
            part = expand_left(g.participants[0], plan.s, m, g.variant);
            break;
        case GameKind::SpecialLeft:
            part = expand_special_left(m);
            break;
        case GameKind::Right:
            part = expand_right(g.participants[0], g.participants[1], m, g.daytypes, plan.s);
            break;
        }
        out.insert(out.end(), part.begin(), part.end());
    }
    return out;
}

Schedule build_labeled_schedule(int n)
{
    if (n % 4 != 2 || n < 10)
        throw UnsupportedError("construction needs n = 2 mod 4 and n >= 10, got " + std::to_string(n));
    const int m = n / 2;
    Schedule s;
    s.n = n;
    s.days = 2 * (n - 1);
    std::vector<std::vector<char>> played(n + 1, std::vector<char>(n + 1, 0));
    for (const auto& plan : build_slot_plans(m, n % 8)) {
        for (const auto& g : expand_slot(plan, m)) {
            if (played[g.home][g.away])
                throw LedgerError("game " + std::to_string(g.home) + " vs " + std::to_string(g.away) +
                                  " emitted twice");
            played[g.home][g.away] = 1;
            s.games.push_back(g);
        }
    }
    auto last = build_last_slot(n, played);
    s.games.insert(s.games.end(), last.begin(), last.end());
    s.sort();
    return s;
}

Construction construct_schedule(const DistanceMatrix& d)
{
    const int n = d.n();
    if (n % 4 != 2 || n < 10)
        throw UnsupportedError("construction needs n = 2 mod 4 and n >= 10, got " + std::to_string(n));
    Construction c;
    std::vector<int> all(n);
    for (int i = 0; i < n; ++i)
        all[i] = i;
    c.matching = min_weight_perfect_matching(d, all);
    auto parts = christofides(d);
    c.tree = std::move(parts.tree);
    c.tour = std::move(parts.tour);
    c.numbering = assign_numbering(d, c.matching, c.tour);
    c.plans = build_slot_plans(n / 2, n % 8);
    c.labeled = build_labeled_schedule(n);
    std::vector<int> map(n + 1, 0);
    for (int l = 1; l <= n; ++l)
        map[l] = c.numbering.original_of[l] + 1;
    c.original = relabel(c.labeled, map);
    return c;
}

}  // namespace ttp
