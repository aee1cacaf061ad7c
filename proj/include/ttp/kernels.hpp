#pragma once

#include <cstddef>

// Row kernels used by the metric and graph code. Every entry has a scalar
// reference and an AVX2 variant; both produce bit-identical results.
namespace ttp::kernels {

struct Table {
    const char* name;
    // sum of x[0..n) accumulated in four interleaved lanes
    double (*row_sum)(const double* x, size_t n);
    // row[j] = min(row[j], dik + krow[j])
    void (*minplus_relax)(double* row, const double* krow, double dik, size_t n);
    // number of j with row_ij - (dik + krow[j]) > eps; first such j in *first (n if none)
    size_t (*triangle_scan)(const double* row_ij, const double* krow, double dik, double eps,
                            size_t n, size_t* first);
    // for j with in_tree[j] == 0 and w[j] < key[j]: key[j] = w[j], parent[j] = u
    void (*prim_update)(double* key, int* parent, const unsigned char* in_tree, const double* w,
                        int u, size_t n);
    // lowest index j with in_tree[j] == 0 minimizing key[j]; n if none
    size_t (*prim_argmin)(const double* key, const unsigned char* in_tree, size_t n);
};

const Table& scalar();
const Table& avx2();        // only valid when avx2_supported()
bool avx2_supported();
const Table& active();      // AVX2 when available unless TTP_FORCE_SCALAR is set

}  // namespace ttp::kernels
