#include "ttp/kernels.hpp"

#include <cstdlib>
#include <limits>

namespace ttp::kernels {

namespace detail {
const Table* avx2_table();
}

namespace {

double row_sum_scalar(const double* x, size_t n)
{
    double acc[4] = {0.0, 0.0, 0.0, 0.0};
    size_t j = 0;
    for (; j + 4 <= n; j += 4) {
        acc[0] += x[j];
        acc[1] += x[j + 1];
        acc[2] += x[j + 2];
        acc[3] += x[j + 3];
    }
    double s = (acc[0] + acc[1]) + (acc[2] + acc[3]);
    for (; j < n; ++j)
        s += x[j];
    return s;
}

void minplus_relax_scalar(double* row, const double* krow, double dik, size_t n)
{
    for (size_t j = 0; j < n; ++j) {
        double c = dik + krow[j];
        if (c < row[j])
            row[j] = c;
    }
}

size_t triangle_scan_scalar(const double* row_ij, const double* krow, double dik, double eps,
                            size_t n, size_t* first)
{
    size_t count = 0;
    *first = n;
    for (size_t j = 0; j < n; ++j) {
        if (row_ij[j] - (dik + krow[j]) > eps) {
            if (count == 0)
                *first = j;
            ++count;
        }
    }
    return count;
}

void prim_update_scalar(double* key, int* parent, const unsigned char* in_tree, const double* w,
                        int u, size_t n)
{
    for (size_t j = 0; j < n; ++j) {
        if (!in_tree[j] && w[j] < key[j]) {
            key[j] = w[j];
            parent[j] = u;
        }
    }
}

size_t prim_argmin_scalar(const double* key, const unsigned char* in_tree, size_t n)
{
    size_t best = n;
    double bv = std::numeric_limits<double>::infinity();
    for (size_t j = 0; j < n; ++j) {
        if (in_tree[j])
            continue;
        if (best == n || key[j] < bv) {
            best = j;
            bv = key[j];
        }
    }
    return best;
}

const Table kScalar = {"scalar", row_sum_scalar, minplus_relax_scalar, triangle_scan_scalar,
                       prim_update_scalar, prim_argmin_scalar};

}  // namespace

const Table& scalar() { return kScalar; }

bool avx2_supported()
{
#if defined(__x86_64__) || defined(__i386__)
    static const bool ok = __builtin_cpu_supports("avx2");
    return ok;
#else
    return false;
#endif
}

const Table& avx2() { return *detail::avx2_table(); }

const Table& active()
{
    static const Table* t = [] {
        const char* force = std::getenv("TTP_FORCE_SCALAR");
        if (force && *force && *force != '0')
            return &kScalar;
        return avx2_supported() ? detail::avx2_table() : &kScalar;
    }();
    return *t;
}

}  // namespace ttp::kernels
