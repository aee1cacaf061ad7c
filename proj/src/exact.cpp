#include "ttp/exact.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <vector>

#include "ttp/analysis.hpp"
#include "ttp/errors.hpp"

namespace ttp {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

class Search {
public:
    Search(const DistanceMatrix& d, const ExactOptions& opt)
        : d_(d), opt_(opt), n_(d.n()), days_(2 * (d.n() - 1)), k_(opt.k)
    {
        full_ = (1u << n_) - 1;
        table_.assign(static_cast<size_t>(n_) * n_ * (1u << n_) * (k_ + 1), -1.0);
        pos_.resize(n_);
        run_.assign(n_, 0);
        last_.assign(n_, -1);
        away_.resize(n_);
        home_left_.assign(n_, n_ - 1);
        played_.assign(n_ * n_, 0);
        today_.assign(n_, 0);
        first_opp0_ = -1;
        for (int t = 0; t < n_; ++t) {
            pos_[t] = t;
            away_[t] = full_ & ~(1u << t);
        }
        double scale = 0.0;
        for (double v : d.values())
            scale = std::max(scale, v);
        eps_ = 1e-9 * std::max(scale, 1e-300) * n_ * n_;
        plan_.resize(days_);
        for (int t = 0; t < n_; ++t)
            bound_ += remaining(t);
    }

    void run()
    {
        dfs(0, 0);
    }

    double best_cost() const { return best_; }
    const std::vector<Game>& best_games() const { return best_games_; }
    std::uint64_t nodes() const { return nodes_; }

private:
    // cheapest way for team t, standing at p with c more away games allowed in
    // the current trip, to visit every venue in R and return home
    double cost_to_finish(int t, int p, unsigned R, int c)
    {
        if (p == t)
            c = k_;
        size_t idx = ((static_cast<size_t>(t) * n_ + p) * (1u << n_) + R) * (k_ + 1) + c;
        double& memo = table_[idx];
        if (memo >= 0)
            return memo;
        double best = kInf;
        if (p == t) {
            if (R == 0)
                best = 0.0;
            for (int v = 0; v < n_; ++v)
                if (R & (1u << v))
                    best = std::min(best, d_(t, v) + cost_to_finish(t, v, R & ~(1u << v), k_ - 1));
        } else {
            best = d_(p, t) + cost_to_finish(t, t, R, k_);
            if (c > 0)
                for (int v = 0; v < n_; ++v)
                    if (R & (1u << v))
                        best = std::min(best, d_(p, v) + cost_to_finish(t, v, R & ~(1u << v), c - 1));
        }
        memo = best;
        return best;
    }

    double remaining(int t)
    {
        int c = run_[t] < 0 ? k_ + run_[t] : k_;
        return cost_to_finish(t, pos_[t], away_[t], c);
    }

    bool counts_ok(int t) const
    {
        int h = home_left_[t];
        int a = std::popcount(away_[t]);
        return a <= k_ * (h + 1) && h <= k_ * (a + 1);
    }

    struct Move {
        int t, u;
        bool t_home;
        double bound;
    };

    struct Saved {
        int pos_t, pos_u, run_t, run_u, last_t, last_u;
        unsigned away_t, away_u;
        double cost, bound;
    };

    Saved apply(int t, int u, bool t_home)
    {
        Saved sv{pos_[t], pos_[u], run_[t], run_[u], last_[t], last_[u], away_[t], away_[u], cost_, bound_};
        int h = t_home ? t : u, a = t_home ? u : t;
        bound_ -= remaining(t) + remaining(u);
        cost_ += d_(pos_[h], h) + d_(pos_[a], h);
        pos_[h] = h;
        pos_[a] = h;
        run_[h] = run_[h] > 0 ? run_[h] + 1 : 1;
        run_[a] = run_[a] < 0 ? run_[a] - 1 : -1;
        last_[t] = u;
        last_[u] = t;
        away_[a] &= ~(1u << h);
        --home_left_[h];
        played_[h * n_ + a] = 1;
        today_[t] = today_[u] = 1;
        bound_ += remaining(t) + remaining(u);
        return sv;
    }

    void undo(int t, int u, bool t_home, const Saved& sv)
    {
        int h = t_home ? t : u, a = t_home ? u : t;
        played_[h * n_ + a] = 0;
        ++home_left_[h];
        pos_[t] = sv.pos_t;
        pos_[u] = sv.pos_u;
        run_[t] = sv.run_t;
        run_[u] = sv.run_u;
        last_[t] = sv.last_t;
        last_[u] = sv.last_u;
        away_[t] = sv.away_t;
        away_[u] = sv.away_u;
        cost_ = sv.cost;
        bound_ = sv.bound;
        today_[t] = today_[u] = 0;
    }

    bool allowed(int t, int u, bool t_home, int day) const
    {
        int h = t_home ? t : u, a = t_home ? u : t;
        if (played_[h * n_ + a])
            return false;
        if (last_[t] == u)
            return false;
        if (run_[h] >= k_ || run_[a] <= -k_)
            return false;
        if (opt_.break_symmetry && t == 0 && day == days_ - 1 && u < first_opp0_)
            return false;
        return true;
    }

    void dfs(int day, int slot)
    {
        if (day == days_) {
            double total = cost_;
            for (int t = 0; t < n_; ++t)
                total += d_(pos_[t], t);
            if (total < best_ - eps_ || best_ == kInf) {
                best_ = total;
                best_games_.clear();
                for (int dd = 0; dd < days_; ++dd)
                    for (const auto& g : plan_[dd])
                        best_games_.push_back(g);
            }
            return;
        }
        if (slot == n_ / 2) {
            std::fill(today_.begin(), today_.end(), 0);
            dfs(day + 1, 0);
            for (const auto& g : plan_[day])
                today_[g.home - 1] = today_[g.away - 1] = 1;
            return;
        }
        int t = 0;
        while (today_[t])
            ++t;
        std::vector<Move> moves;
        for (int u = t + 1; u < n_; ++u) {
            if (today_[u])
                continue;
            for (int side = 0; side < 2; ++side) {
                bool t_home = side == 0;
                if (!allowed(t, u, t_home, day))
                    continue;
                if (++nodes_ > opt_.node_limit)
                    throw LimitError("exact search exceeded node limit of " + std::to_string(opt_.node_limit));
                auto sv = apply(t, u, t_home);
                bool ok = counts_ok(t) && counts_ok(u);
                double b = cost_ + bound_;
                undo(t, u, t_home, sv);
                if (ok)
                    moves.push_back({t, u, t_home, b});
            }
        }
        std::stable_sort(moves.begin(), moves.end(),
                         [](const Move& a, const Move& b) { return a.bound < b.bound; });
        for (const auto& mv : moves) {
            if (opt_.prune && best_ != kInf && mv.bound >= best_ - eps_ / 2)
                break;
            auto sv = apply(mv.t, mv.u, mv.t_home);
            int saved_first = first_opp0_;
            if (day == 0 && mv.t == 0)
                first_opp0_ = mv.u;
            int h = mv.t_home ? mv.t : mv.u, a = mv.t_home ? mv.u : mv.t;
            plan_[day].push_back({day + 1, h + 1, a + 1});
            dfs(day, slot + 1);
            plan_[day].pop_back();
            first_opp0_ = saved_first;
            undo(mv.t, mv.u, mv.t_home, sv);
            today_[mv.t] = today_[mv.u] = 0;
        }
    }

    const DistanceMatrix& d_;
    ExactOptions opt_;
    int n_, days_, k_;
    unsigned full_;
    std::vector<double> table_;
    std::vector<int> pos_, run_, last_, home_left_;
    std::vector<unsigned> away_;
    std::vector<char> played_, today_;
    std::vector<std::vector<Game>> plan_;
    int first_opp0_;
    double cost_ = 0.0, bound_ = 0.0, best_ = kInf, eps_ = 0.0;
    std::uint64_t nodes_ = 0;
    std::vector<Game> best_games_;
};

}  // namespace

ExactResult solve_exact(const DistanceMatrix& d, const ExactOptions& opt)
{
    const int n = d.n();
    if (n < 4 || n % 2 != 0 || n > 8)
        throw DomainError("exact search supports even n in 4..8, got " + std::to_string(n));
    if (opt.k < 1)
        throw DomainError("bound k must be at least 1");
    Search s(d, opt);
    s.run();
    ExactResult r;
    r.nodes_explored = s.nodes();
    if (s.best_games().empty())
        throw DomainError("no feasible schedule exists for n = " + std::to_string(n) +
                          ", k = " + std::to_string(opt.k));
    r.schedule.n = n;
    r.schedule.days = 2 * (n - 1);
    r.schedule.games = s.best_games();
    r.schedule.sort();
    for (int t = 1; t <= n; ++t)
        r.optimum += team_itinerary(r.schedule, d, t).distance;
    return r;
}

}  // namespace ttp
