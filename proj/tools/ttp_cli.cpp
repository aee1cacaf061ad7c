#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "ttp/analysis.hpp"
#include "ttp/construction.hpp"
#include "ttp/errors.hpp"
#include "ttp/exact.hpp"
#include "ttp/instances.hpp"
#include "ttp/numbering.hpp"
#include "ttp/validation.hpp"

using json = nlohmann::ordered_json;

namespace {

struct Config {
    std::string instance;
    int n = 10;
    std::uint64_t seed = 1;
    std::string kind = "euclidean";
    std::string format = "headered";
    std::string out;
    std::string report;
    std::string timetable;
    int k = 2;
    int days = 0;
    double eps_tri = ttp::kDefaultTriangleEps;
    std::uint64_t node_limit = 200'000'000;
    bool no_prune = false;
    int n_min = 10, n_max = 50, n_step = 4, seeds = 20;
    std::uint64_t seed_start = 1;
};

std::string read_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw ttp::ParseError("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_output(const std::string& path, const std::string& text)
{
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw ttp::ParseError("cannot write " + path);
    out << text;
}

ttp::DistanceMatrix load_or_generate(const Config& c)
{
    if (!c.instance.empty())
        return ttp::load_instance(read_file(c.instance), ttp::parse_format(c.format), c.eps_tri);
    return ttp::generate_instance(ttp::parse_kind(c.kind), c.n, c.seed);
}

json report_json(const Config& c, const ttp::DistanceMatrix& d, std::uint64_t seed, const std::string& kind,
                 const ttp::Construction& con, size_t violations)
{
    auto r = ttp::travel_totals(con.labeled, d, con.numbering, con.matching, con.tree);
    json j;
    j["n"] = d.n();
    if (c.instance.empty())
        j["seed"] = seed;
    else
        j["seed"] = nullptr;
    j["kind"] = kind;
    j["total"] = r.total;
    j["lb1"] = r.lb1;
    j["lb2"] = r.lb2;
    j["ratio"] = r.ratio_lb1;
    j["target"] = r.target_ratio;
    j["analytic_upper"] = r.analytic_upper;
    j["ineq4_holds"] = r.ineq4_holds;
    j["violations"] = violations;
    return j;
}

int cmd_gen(const Config& c)
{
    auto d = ttp::generate_instance(ttp::parse_kind(c.kind), c.n, c.seed);
    write_output(c.out, ttp::serialize_instance(d, ttp::parse_format(c.format)));
    return 0;
}

int cmd_solve(const Config& c)
{
    auto d = load_or_generate(c);
    auto con = ttp::construct_schedule(d);
    auto v = ttp::validate_schedule(con.original, c.k, 2 * (d.n() - 1));
    auto j = report_json(c, d, c.seed, c.instance.empty() ? c.kind : "file", con, v.size());
    write_output(c.out, ttp::format_timetable(con.original));
    std::string line = j.dump() + "\n";
    if (!c.report.empty())
        write_output(c.report, line);
    else if (c.out.empty() || c.out == "-")
        std::cerr << line;
    else
        std::cout << line;
    return v.empty() ? 0 : 1;
}

int cmd_validate(const Config& c)
{
    auto s = ttp::parse_timetable(read_file(c.timetable));
    std::optional<ttp::DistanceMatrix> d;
    if (!c.instance.empty()) {
        d = ttp::load_instance(read_file(c.instance), ttp::parse_format(c.format), c.eps_tri);
        if (d->n() != s.n)
            throw ttp::ShapeError("timetable has " + std::to_string(s.n) + " teams, instance has " +
                                  std::to_string(d->n()));
    }
    int days = c.days > 0 ? c.days : 2 * (s.n - 1);
    auto v = ttp::validate_schedule(s, c.k, days);
    for (const auto& x : v)
        std::cout << ttp::kind_name(x.kind) << ": " << x.detail << "\n";
    json j;
    j["n"] = s.n;
    j["days"] = s.days;
    j["violations"] = v.size();
    if (d && v.empty()) {
        double total = 0.0;
        for (int t = 1; t <= s.n; ++t)
            total += ttp::team_itinerary(s, *d, t).distance;
        j["total"] = total;
    }
    std::cout << j.dump() << "\n";
    return v.empty() ? 0 : 1;
}

int cmd_bounds(const Config& c)
{
    auto d = load_or_generate(c);
    std::vector<int> all(d.n());
    for (int i = 0; i < d.n(); ++i)
        all[i] = i;
    auto M = ttp::min_weight_perfect_matching(d, all);
    auto parts = ttp::christofides(d);
    auto num = ttp::assign_numbering(d, M, parts.tour);
    auto lb = ttp::lower_bounds(d, M, parts.tree);
    auto diag = ttp::numbering_diagnostics(num, d, M, parts.tree, parts.tour);
    json j;
    j["n"] = d.n();
    j["lb1"] = lb.lb1;
    j["lb2"] = lb.lb2;
    j["analytic_upper"] = ttp::analytic_upper_bound(d, num, M);
    j["ineq3_lhs"] = diag.ineq3_lhs;
    j["ineq3_rhs"] = diag.ineq3_rhs;
    j["ineq3_holds"] = diag.ineq3_holds;
    j["ineq4_lhs"] = diag.ineq4_lhs;
    j["ineq4_rhs"] = diag.ineq4_rhs;
    j["ineq4_holds"] = diag.ineq4_holds;
    std::cout << j.dump() << "\n";
    return diag.ineq3_holds ? 0 : 1;
}

int cmd_exact(const Config& c)
{
    auto d = load_or_generate(c);
    ttp::ExactOptions opt;
    opt.k = c.k;
    opt.node_limit = c.node_limit;
    opt.prune = !c.no_prune;
    auto r = ttp::solve_exact(d, opt);
    std::vector<int> all(d.n());
    for (int i = 0; i < d.n(); ++i)
        all[i] = i;
    auto M = ttp::min_weight_perfect_matching(d, all);
    auto T = ttp::minimum_spanning_tree(d);
    auto lb = ttp::lower_bounds(d, M, T);
    if (!c.out.empty())
        write_output(c.out, ttp::format_timetable(r.schedule));
    json j;
    j["n"] = d.n();
    j["optimum"] = r.optimum;
    j["nodes"] = r.nodes_explored;
    j["lb1"] = lb.lb1;
    j["lb2"] = lb.lb2;
    std::cout << j.dump() << "\n";
    return 0;
}

int cmd_bench(const Config& c)
{
    auto kind = ttp::parse_kind(c.kind);
    int bad = 0;
    for (int n = c.n_min; n <= c.n_max; n += c.n_step)
        for (int i = 0; i < c.seeds; ++i) {
            std::uint64_t seed = c.seed_start + static_cast<std::uint64_t>(i);
            auto d = ttp::generate_instance(kind, n, seed);
            auto con = ttp::construct_schedule(d);
            auto v = ttp::validate_schedule(con.original, c.k, 2 * (n - 1));
            Config gen = c;
            gen.instance.clear();
            std::cout << report_json(gen, d, seed, c.kind, con, v.size()).dump() << "\n";
            bad += !v.empty();
        }
    return bad ? 1 : 0;
}

void add_source(CLI::App* sub, Config& c)
{
    sub->add_option("--instance", c.instance, "instance file (otherwise generated)");
    sub->add_option("--n", c.n, "team count for a generated instance");
    sub->add_option("--seed", c.seed, "generator seed");
    sub->add_option("--kind", c.kind, "euclidean | circle | random-metric");
    sub->add_option("--format", c.format, "headered | bare");
    sub->add_option("--eps-tri", c.eps_tri, "triangle inequality tolerance");
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Double round-robin schedules with bounded home/away runs"};
    app.require_subcommand(1);
    Config c;

    auto* gen = app.add_subcommand("gen", "write a generated instance");
    gen->add_option("--n", c.n, "team count");
    gen->add_option("--seed", c.seed, "generator seed");
    gen->add_option("--kind", c.kind, "euclidean | circle | random-metric");
    gen->add_option("--format", c.format, "headered | bare");
    gen->add_option("--out", c.out, "output path");

    auto* solve = app.add_subcommand("solve", "build a schedule and report its travel");
    add_source(solve, c);
    solve->add_option("--k", c.k, "run bound used for validation");
    solve->add_option("--out", c.out, "timetable output path");
    solve->add_option("--report", c.report, "report output path");

    auto* validate = app.add_subcommand("validate", "check a timetable");
    validate->add_option("--timetable", c.timetable, "timetable file")->required();
    validate->add_option("--instance", c.instance, "instance file for travel totals");
    validate->add_option("--format", c.format, "headered | bare");
    validate->add_option("--eps-tri", c.eps_tri, "triangle inequality tolerance");
    validate->add_option("--k", c.k, "run bound");
    validate->add_option("--days", c.days, "expected day count (default 2(n-1))");

    auto* bounds = app.add_subcommand("bounds", "print lower and analytic upper bounds");
    add_source(bounds, c);

    auto* exact = app.add_subcommand("exact", "optimal schedule for n <= 8");
    add_source(exact, c);
    exact->add_option("--k", c.k, "run bound");
    exact->add_option("--node-limit", c.node_limit, "search node budget");
    exact->add_flag("--no-prune", c.no_prune, "disable cost-bound pruning");
    exact->add_option("--out", c.out, "timetable output path");

    auto* bench = app.add_subcommand("bench", "sweep n and seeds, one report per line");
    bench->add_option("--n-min", c.n_min);
    bench->add_option("--n-max", c.n_max);
    bench->add_option("--n-step", c.n_step);
    bench->add_option("--seeds", c.seeds);
    bench->add_option("--seed-start", c.seed_start);
    bench->add_option("--kind", c.kind);
    bench->add_option("--k", c.k);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (*gen)
            return cmd_gen(c);
        if (*solve)
            return cmd_solve(c);
        if (*validate)
            return cmd_validate(c);
        if (*bounds)
            return cmd_bounds(c);
        if (*exact)
            return cmd_exact(c);
        if (*bench)
            return cmd_bench(c);
    } catch (const ttp::ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const ttp::ShapeError& e) {
        std::cerr << "shape error: " << e.what() << "\n";
        return 2;
    } catch (const ttp::MetricError& e) {
        std::cerr << "metric error: " << e.what() << "\n";
        return 2;
    } catch (const ttp::DomainError& e) {
        std::cerr << "domain error: " << e.what() << "\n";
        return 2;
    } catch (const ttp::UnsupportedError& e) {
        std::cerr << "unsupported: " << e.what() << "\n";
        return 2;
    } catch (const ttp::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
