#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace ttp {

// Dense symmetric distance matrix between home venues. Indices are 0-based.
class DistanceMatrix {
public:
    DistanceMatrix() = default;
    explicit DistanceMatrix(int n);
    DistanceMatrix(int n, std::vector<double> values);

    int n() const { return n_; }
    double operator()(int i, int j) const { return d_[static_cast<size_t>(i) * n_ + j]; }
    double& at(int i, int j) { return d_[static_cast<size_t>(i) * n_ + j]; }
    const double* row(int i) const { return d_.data() + static_cast<size_t>(i) * n_; }
    double* row(int i) { return d_.data() + static_cast<size_t>(i) * n_; }
    const std::vector<double>& values() const { return d_; }

    // matrix with rows/columns reordered: result(a, b) = (*this)(perm[a], perm[b])
    DistanceMatrix permuted(const std::vector<int>& perm) const;

    bool operator==(const DistanceMatrix&) const = default;

private:
    int n_ = 0;
    std::vector<double> d_;
};

enum class MatrixFormat { Headered, Bare };
enum class InstanceKind { Euclidean, Circle, RandomMetric };

MatrixFormat parse_format(std::string_view s);
InstanceKind parse_kind(std::string_view s);
const char* kind_name(InstanceKind k);

constexpr double kDefaultTriangleEps = 1e-9;

struct MetricViolation {
    enum Kind { NonFinite, Negative, Diagonal, Asymmetry, Triangle };
    Kind kind;
    int i, j, k;    // k = -1 unless Triangle
    double excess;  // amount by which the axiom fails
    std::string describe() const;  // 1-based indices
};

// Throws ParseError, ShapeError, MetricError.
DistanceMatrix load_instance(std::string_view content, MatrixFormat format,
                             double eps_tri = kDefaultTriangleEps);
std::string serialize_instance(const DistanceMatrix& d, MatrixFormat format = MatrixFormat::Headered);

// Throws DomainError for odd n or n < 4.
DistanceMatrix generate_instance(InstanceKind kind, int n, std::uint64_t seed);

std::vector<MetricViolation> validate_metric(const DistanceMatrix& d, double eps_tri = kDefaultTriangleEps);

// all-pairs shortest path closure, in place
void metric_closure(DistanceMatrix& d);

}  // namespace ttp
