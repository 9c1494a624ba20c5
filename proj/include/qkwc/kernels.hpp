#ifndef QKWC_KERNELS_HPP
#define QKWC_KERNELS_HPP

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

#include "qkwc/ringcore.hpp"

namespace qkwc::kernels {

// Sorts by monomial, merges equal monomials, drops zeros and truncated terms.
void normalize(const RingSpec &spec, std::vector<Term> &terms);

// Reference product kernel. Kept for testing and benchmarking.
std::vector<Term> multiply_serial(const RingSpec &spec, std::span<const Term> a, std::span<const Term> b);

// OpenMP product kernel: rows of `a` are split across threads, each thread
// reduces its block, and blocks are merged in a fixed order.
std::vector<Term> multiply_parallel(const RingSpec &spec, std::span<const Term> a, std::span<const Term> b);

// Products with at least this many term pairs use the parallel kernel when
// more than one thread is available.
inline constexpr std::size_t kParallelThreshold = 4096;

// Thread cap: QKWC_THREADS if set, else the OpenMP default.
int max_threads();

// Runs body(i) for i in [0, n), in parallel when allowed. Results must be
// written to per-index slots so the outcome does not depend on scheduling.
void parallel_for(std::size_t n, const std::function<void(std::size_t)> &body);

} // namespace qkwc::kernels

#endif
