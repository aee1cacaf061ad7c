#include "ttp/numbering.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "ttp/errors.hpp"
#include "ttp/kernels.hpp"

namespace ttp {

DegreeSums degree_sums(const DistanceMatrix& d)
{
    const auto& kt = kernels::active();
    DegreeSums s;
    s.D.resize(d.n());
    for (int i = 0; i < d.n(); ++i)
        s.D[i] = kt.row_sum(d.row(i), static_cast<size_t>(d.n()));
    s.delta = kt.row_sum(s.D.data(), s.D.size());
    return s;
}

DistanceMatrix TeamNumbering::labeled(const DistanceMatrix& d) const
{
    std::vector<int> perm(n);
    for (int l = 1; l <= n; ++l)
        perm[l - 1] = original_of[l];
    return d.permuted(perm);
}

std::string TeamNumbering::dump() const
{
    std::ostringstream os;
    for (int i = 0; i < n; ++i)
        os << i + 1 << ' ' << label_of[i] << '\n';
    return os.str();
}

TeamNumbering assign_numbering(const DistanceMatrix& d, const Matching& M, const Tour& C)
{
    const int n = d.n();
    if (static_cast<int>(M.pairs.size()) * 2 != n)
        throw DomainError("matching is not perfect on all teams");
    if (static_cast<int>(C.order.size()) != n)
        throw DomainError("tour does not visit all teams");
    std::vector<int> mate(n, -1);
    for (auto [a, b] : M.pairs) {
        if (mate[a] != -1 || mate[b] != -1)
            throw DomainError("matching covers a team twice");
        mate[a] = b;
        mate[b] = a;
    }
    std::vector<int> pos(n, -1);
    for (int i = 0; i < n; ++i) {
        int v = C.order[i];
        if (v < 0 || v >= n || pos[v] != -1)
            throw DomainError("tour is not a permutation of the teams");
        pos[v] = i;
    }
    auto D = degree_sums(d).D;

    struct PairInfo {
        int lo, hi;
        double sum;
    };
    std::vector<PairInfo> pairs;
    for (auto [a, b] : M.pairs)
        pairs.push_back({std::min(a, b), std::max(a, b), D[a] + D[b]});
    std::sort(pairs.begin(), pairs.end(), [](const PairInfo& x, const PairInfo& y) {
        if (x.sum != y.sum)
            return x.sum < y.sum;
        return x.lo < y.lo;
    });

    TeamNumbering num;
    num.n = n;
    num.m = n / 2;
    num.label_of.assign(n, 0);
    num.original_of.assign(n + 1, -1);
    auto give = [&](const PairInfo& p, int i) {
        num.label_of[p.lo] = 2 * i - 1;
        num.label_of[p.hi] = 2 * i;
        num.original_of[2 * i - 1] = p.lo;
        num.original_of[2 * i] = p.hi;
    };
    give(pairs[0], num.m);
    if (num.m >= 2)
        give(pairs[1], num.m - 1);

    // remaining pairs in the order their larger-index member appears along C,
    // reading C from its lowest-index vertex
    int start = static_cast<int>(std::min_element(C.order.begin(), C.order.end()) - C.order.begin());
    auto along = [&](int v) { return (pos[v] - start + n) % n; };
    std::vector<PairInfo> rest(pairs.begin() + std::min<size_t>(2, pairs.size()), pairs.end());
    std::sort(rest.begin(), rest.end(),
              [&](const PairInfo& x, const PairInfo& y) { return along(x.hi) < along(y.hi); });
    for (size_t i = 0; i < rest.size(); ++i)
        give(rest[i], static_cast<int>(i) + 1);
    return num;
}

bool leq_rel(double a, double b, double rel)
{
    double scale = std::max({std::fabs(a), std::fabs(b), 1e-300});
    return a <= b + rel * scale;
}

double even_cycle_weight(const DistanceMatrix& d, const TeamNumbering& num)
{
    std::vector<int> ev;
    for (int l = 2; l <= num.n - 4; l += 2)
        ev.push_back(num.original_of[l]);
    if (ev.size() < 2)
        return 0.0;
    return tour_weight(d, ev);
}

NumberingDiagnostics numbering_diagnostics(const TeamNumbering& num, const DistanceMatrix& d,
                                           const Matching& M, const SpanningTree& T, const Tour& C)
{
    (void)C;
    NumberingDiagnostics r;
    auto ds = degree_sums(d);
    const int n = num.n;
    for (int l = n - 3; l <= n; ++l)
        r.ineq3_lhs += ds.D[num.original_of[l]];
    r.ineq3_rhs = 4.0 * ds.delta / n;
    r.ineq4_lhs = even_cycle_weight(d, num);
    r.ineq4_rhs = T.weight + M.weight;
    r.ineq3_holds = leq_rel(r.ineq3_lhs, r.ineq3_rhs);
    r.ineq4_holds = leq_rel(r.ineq4_lhs, r.ineq4_rhs);
    return r;
}

}  // namespace ttp
