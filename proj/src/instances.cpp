#include "ttp/instances.hpp"

#include <charconv>
#include <cmath>
#include <numbers>
#include <random>
#include <sstream>

#include "ttp/errors.hpp"
#include "ttp/kernels.hpp"

namespace ttp {

DistanceMatrix::DistanceMatrix(int n) : n_(n), d_(static_cast<size_t>(n) * n, 0.0) {}

DistanceMatrix::DistanceMatrix(int n, std::vector<double> values) : n_(n), d_(std::move(values))
{
    if (d_.size() != static_cast<size_t>(n) * n)
        throw ShapeError("matrix value count does not match n*n");
}

DistanceMatrix DistanceMatrix::permuted(const std::vector<int>& perm) const
{
    DistanceMatrix out(n_);
    for (int a = 0; a < n_; ++a)
        for (int b = 0; b < n_; ++b)
            out.at(a, b) = (*this)(perm[a], perm[b]);
    return out;
}

MatrixFormat parse_format(std::string_view s)
{
    if (s == "headered" || s == "headered-matrix")
        return MatrixFormat::Headered;
    if (s == "bare" || s == "bare-matrix")
        return MatrixFormat::Bare;
    throw ParseError("unknown matrix format: " + std::string(s));
}

InstanceKind parse_kind(std::string_view s)
{
    if (s == "euclidean")
        return InstanceKind::Euclidean;
    if (s == "circle")
        return InstanceKind::Circle;
    if (s == "random-metric")
        return InstanceKind::RandomMetric;
    throw ParseError("unknown instance kind: " + std::string(s));
}

const char* kind_name(InstanceKind k)
{
    switch (k) {
    case InstanceKind::Euclidean: return "euclidean";
    case InstanceKind::Circle: return "circle";
    case InstanceKind::RandomMetric: return "random-metric";
    }
    return "?";
}

std::string MetricViolation::describe() const
{
    std::ostringstream os;
    os.precision(17);
    switch (kind) {
    case NonFinite: os << "non-finite entry at (" << i + 1 << "," << j + 1 << ")"; break;
    case Negative: os << "negative entry at (" << i + 1 << "," << j + 1 << ")"; break;
    case Diagonal: os << "nonzero diagonal at (" << i + 1 << "," << i + 1 << ")"; break;
    case Asymmetry:
        os << "asymmetric cell (" << i + 1 << "," << j + 1 << "), difference " << excess;
        break;
    case Triangle:
        os << "triangle violation (" << i + 1 << "," << k + 1 << "," << j + 1 << ") by " << excess;
        break;
    }
    return os.str();
}

namespace {

std::vector<std::vector<double>> read_rows(std::string_view content)
{
    std::vector<std::vector<double>> rows;
    size_t pos = 0;
    int line_no = 0;
    while (pos <= content.size()) {
        size_t eol = content.find('\n', pos);
        if (eol == std::string_view::npos)
            eol = content.size();
        std::string_view line = content.substr(pos, eol - pos);
        ++line_no;
        std::vector<double> row;
        size_t p = 0;
        while (p < line.size()) {
            while (p < line.size() && std::isspace(static_cast<unsigned char>(line[p])))
                ++p;
            if (p >= line.size())
                break;
            size_t q = p;
            while (q < line.size() && !std::isspace(static_cast<unsigned char>(line[q])))
                ++q;
            double v;
            const char* b = line.data() + p;
            const char* e = line.data() + q;
            if (*b == '+')
                ++b;
            auto [ptr, ec] = std::from_chars(b, e, v);
            if (ec != std::errc() || ptr != e)
                throw ParseError("line " + std::to_string(line_no) + ": bad number '" +
                                 std::string(line.substr(p, q - p)) + "'");
            row.push_back(v);
            p = q;
        }
        if (!row.empty())
            rows.push_back(std::move(row));
        pos = eol + 1;
    }
    return rows;
}

}  // namespace

DistanceMatrix load_instance(std::string_view content, MatrixFormat format, double eps_tri)
{
    auto rows = read_rows(content);
    if (rows.empty())
        throw ParseError("empty instance");
    size_t first = 0;
    int n;
    if (format == MatrixFormat::Headered) {
        if (rows[0].size() != 1 || rows[0][0] != std::floor(rows[0][0]) || rows[0][0] < 0)
            throw ParseError("header line must hold a single nonnegative integer n");
        n = static_cast<int>(rows[0][0]);
        first = 1;
        if (rows.size() - 1 != static_cast<size_t>(n))
            throw ShapeError("expected " + std::to_string(n) + " rows, found " +
                             std::to_string(rows.size() - 1));
    } else {
        n = static_cast<int>(rows.size());
    }
    std::vector<double> vals;
    vals.reserve(static_cast<size_t>(n) * n);
    for (size_t r = first; r < rows.size(); ++r) {
        if (rows[r].size() != static_cast<size_t>(n))
            throw ShapeError("row " + std::to_string(r - first + 1) + " has " +
                             std::to_string(rows[r].size()) + " entries, expected " +
                             std::to_string(n));
        vals.insert(vals.end(), rows[r].begin(), rows[r].end());
    }
    if (n % 2 != 0)
        throw ShapeError("team count must be even, got " + std::to_string(n));
    if (n < 4)
        throw ShapeError("team count must be at least 4, got " + std::to_string(n));
    DistanceMatrix d(n, std::move(vals));
    auto bad = validate_metric(d, eps_tri);
    if (!bad.empty())
        throw MetricError(bad.front().describe(), bad.front().i, bad.front().j, bad.front().k);
    return d;
}

std::string serialize_instance(const DistanceMatrix& d, MatrixFormat format)
{
    std::string out;
    if (format == MatrixFormat::Headered)
        out += std::to_string(d.n()) + "\n";
    char buf[64];
    for (int i = 0; i < d.n(); ++i) {
        for (int j = 0; j < d.n(); ++j) {
            auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, d(i, j));
            (void)ec;
            if (j)
                out += ' ';
            out.append(buf, ptr);
        }
        out += '\n';
    }
    return out;
}

namespace {

// 53-bit uniform in [0, 1); avoids distribution differences between standard libraries
double uniform01(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

}  // namespace

void metric_closure(DistanceMatrix& d)
{
    const auto& kt = kernels::active();
    const int n = d.n();
    for (int k = 0; k < n; ++k)
        for (int i = 0; i < n; ++i)
            if (i != k)
                kt.minplus_relax(d.row(i), d.row(k), d(i, k), static_cast<size_t>(n));
}

DistanceMatrix generate_instance(InstanceKind kind, int n, std::uint64_t seed)
{
    if (n < 4 || n % 2 != 0)
        throw DomainError("generator needs even n >= 4, got " + std::to_string(n));
    std::mt19937_64 rng(seed);
    DistanceMatrix d(n);
    switch (kind) {
    case InstanceKind::Euclidean: {
        std::vector<double> x(n), y(n);
        for (int i = 0; i < n; ++i) {
            x[i] = uniform01(rng);
            y[i] = uniform01(rng);
        }
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) {
                double dx = x[i] - x[j], dy = y[i] - y[j];
                d.at(i, j) = d.at(j, i) = std::sqrt(dx * dx + dy * dy);
            }
        break;
    }
    case InstanceKind::Circle: {
        // seed only shuffles which team sits at which point
        std::vector<int> slot(n);
        for (int i = 0; i < n; ++i)
            slot[i] = i;
        for (int i = n - 1; i > 0; --i) {
            int r = static_cast<int>(rng() % static_cast<std::uint64_t>(i + 1));
            std::swap(slot[i], slot[r]);
        }
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) {
                int gap = std::abs(slot[i] - slot[j]);
                d.at(i, j) = d.at(j, i) = 2.0 * std::sin(std::numbers::pi * gap / n);
            }
        break;
    }
    case InstanceKind::RandomMetric: {
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                d.at(i, j) = d.at(j, i) = uniform01(rng);
        metric_closure(d);
        break;
    }
    }
    return d;
}

std::vector<MetricViolation> validate_metric(const DistanceMatrix& d, double eps_tri)
{
    std::vector<MetricViolation> out;
    const int n = d.n();
    bool finite = true;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            double v = d(i, j);
            if (!std::isfinite(v)) {
                out.push_back({MetricViolation::NonFinite, i, j, -1, 0.0});
                finite = false;
            } else if (v < 0) {
                out.push_back({MetricViolation::Negative, i, j, -1, -v});
            }
        }
    for (int i = 0; i < n; ++i)
        if (d(i, i) != 0.0 && std::isfinite(d(i, i)))
            out.push_back({MetricViolation::Diagonal, i, i, -1, std::fabs(d(i, i))});
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            double diff = std::fabs(d(i, j) - d(j, i));
            if (diff > eps_tri)
                out.push_back({MetricViolation::Asymmetry, i, j, -1, diff});
        }
    if (!finite)
        return out;
    const auto& kt = kernels::active();
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k) {
            if (k == i)
                continue;
            size_t first;
            size_t cnt = kt.triangle_scan(d.row(i), d.row(k), d(i, k), eps_tri,
                                          static_cast<size_t>(n), &first);
            if (!cnt)
                continue;
            for (size_t j = first; j < static_cast<size_t>(n); ++j) {
                double ex = d(i, j) - (d(i, k) + d(k, j));
                if (ex > eps_tri)
                    out.push_back({MetricViolation::Triangle, i, static_cast<int>(j), k, ex});
            }
        }
    return out;
}

}  // namespace ttp
