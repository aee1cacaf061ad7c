#include "ttp/kernels.hpp"

#include <cstring>
#include <limits>

#if defined(__x86_64__) || defined(__i386__)
#include <immintrin.h>
#define TTP_HAVE_AVX2 1
#else
#define TTP_HAVE_AVX2 0
#endif

namespace ttp::kernels {

#if TTP_HAVE_AVX2
namespace {

double row_sum_avx2(const double* x, size_t n)
{
    __m256d acc = _mm256_setzero_pd();
    size_t j = 0;
    for (; j + 4 <= n; j += 4)
        acc = _mm256_add_pd(acc, _mm256_loadu_pd(x + j));
    alignas(32) double lane[4];
    _mm256_store_pd(lane, acc);
    double s = (lane[0] + lane[1]) + (lane[2] + lane[3]);
    for (; j < n; ++j)
        s += x[j];
    return s;
}

void minplus_relax_avx2(double* row, const double* krow, double dik, size_t n)
{
    const __m256d vd = _mm256_set1_pd(dik);
    size_t j = 0;
    for (; j + 4 <= n; j += 4) {
        __m256d r = _mm256_loadu_pd(row + j);
        __m256d c = _mm256_add_pd(vd, _mm256_loadu_pd(krow + j));
        __m256d lt = _mm256_cmp_pd(c, r, _CMP_LT_OQ);
        _mm256_storeu_pd(row + j, _mm256_blendv_pd(r, c, lt));
    }
    for (; j < n; ++j) {
        double c = dik + krow[j];
        if (c < row[j])
            row[j] = c;
    }
}

size_t triangle_scan_avx2(const double* row_ij, const double* krow, double dik, double eps,
                          size_t n, size_t* first)
{
    const __m256d vd = _mm256_set1_pd(dik);
    const __m256d ve = _mm256_set1_pd(eps);
    size_t count = 0;
    *first = n;
    size_t j = 0;
    for (; j + 4 <= n; j += 4) {
        __m256d diff = _mm256_sub_pd(_mm256_loadu_pd(row_ij + j),
                                     _mm256_add_pd(vd, _mm256_loadu_pd(krow + j)));
        int bits = _mm256_movemask_pd(_mm256_cmp_pd(diff, ve, _CMP_GT_OQ));
        if (bits) {
            if (count == 0)
                *first = j + static_cast<size_t>(__builtin_ctz(bits));
            count += static_cast<size_t>(__builtin_popcount(bits));
        }
    }
    for (; j < n; ++j) {
        if (row_ij[j] - (dik + krow[j]) > eps) {
            if (count == 0)
                *first = j;
            ++count;
        }
    }
    return count;
}

inline __m256d free_mask(const unsigned char* in_tree)
{
    int packed;
    std::memcpy(&packed, in_tree, 4);
    __m256i t = _mm256_cvtepu8_epi64(_mm_cvtsi32_si128(packed));
    return _mm256_castsi256_pd(_mm256_cmpeq_epi64(t, _mm256_setzero_si256()));
}

void prim_update_avx2(double* key, int* parent, const unsigned char* in_tree, const double* w,
                      int u, size_t n)
{
    size_t j = 0;
    for (; j + 4 <= n; j += 4) {
        __m256d k = _mm256_loadu_pd(key + j);
        __m256d x = _mm256_loadu_pd(w + j);
        __m256d m = _mm256_and_pd(_mm256_cmp_pd(x, k, _CMP_LT_OQ), free_mask(in_tree + j));
        int bits = _mm256_movemask_pd(m);
        if (!bits)
            continue;
        _mm256_storeu_pd(key + j, _mm256_blendv_pd(k, x, m));
        for (int b = 0; b < 4; ++b)
            if (bits & (1 << b))
                parent[j + b] = u;
    }
    for (; j < n; ++j) {
        if (!in_tree[j] && w[j] < key[j]) {
            key[j] = w[j];
            parent[j] = u;
        }
    }
}

size_t prim_argmin_avx2(const double* key, const unsigned char* in_tree, size_t n)
{
    const double inf = std::numeric_limits<double>::infinity();
    const __m256d vinf = _mm256_set1_pd(inf);
    __m256d vmin = vinf;
    size_t j = 0;
    for (; j + 4 <= n; j += 4) {
        __m256d k = _mm256_blendv_pd(vinf, _mm256_loadu_pd(key + j), free_mask(in_tree + j));
        vmin = _mm256_min_pd(vmin, k);
    }
    alignas(32) double lane[4];
    _mm256_store_pd(lane, vmin);
    double mn = lane[0];
    for (int b = 1; b < 4; ++b)
        if (lane[b] < mn)
            mn = lane[b];
    for (; j < n; ++j)
        if (!in_tree[j] && key[j] < mn)
            mn = key[j];
    for (size_t t = 0; t < n; ++t)
        if (!in_tree[t] && key[t] == mn)
            return t;
    return n;
}

const Table kAvx2 = {"avx2", row_sum_avx2, minplus_relax_avx2, triangle_scan_avx2,
                     prim_update_avx2, prim_argmin_avx2};

}  // namespace

namespace detail {
const Table* avx2_table() { return &kAvx2; }
}  // namespace detail

#else

namespace detail {
const Table* avx2_table() { return &scalar(); }
}  // namespace detail

#endif

}  // namespace ttp::kernels
