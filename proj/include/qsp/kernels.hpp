#pragma once

#include <cstdint>
#include <span>

#include "qsp/types.hpp"

namespace qsp::kernels {

/// Statevectors below this size are processed serially; the OpenMP fork/join
/// overhead dominates for tiny registers.
inline constexpr size_t kParallelThreshold = size_t{1} << 12;

// All kernels act on a full amplitude array of length 2^n.  An amplitude at
// index i participates only when (i & cmask) == cval; pass cmask = 0 to act
// unconditionally.  Control masks never include the target bits.

void apply_1q(std::span<cplx> amps, int target, const cplx m[4], uint64_t cmask, uint64_t cval);

/// Diagonal one-qubit gate diag(d0, d1) (RZ, S, SDG fast path).
void apply_diag1(std::span<cplx> amps, int target, cplx d0, cplx d1, uint64_t cmask,
                 uint64_t cval);

void apply_x(std::span<cplx> amps, int target, uint64_t cmask, uint64_t cval);

void apply_swap(std::span<cplx> amps, int q1, int q2, uint64_t cmask, uint64_t cval);

/// Multiplies every participating amplitude by `factor`.
void apply_phase(std::span<cplx> amps, cplx factor, uint64_t cmask, uint64_t cval);

/// Generic dense k-qubit gate; matrix is row-major (2^k x 2^k) and
/// targets[0] addresses the least significant matrix index bit.
void apply_dense(std::span<cplx> amps, std::span<const int> targets, std::span<const cplx> m,
                 uint64_t cmask, uint64_t cval);

/// Sum of |amplitude|^2 over indices with (i & mask) == val.  The reduction
/// runs over fixed-size chunks whose partial sums are combined in index
/// order, so the result does not depend on the number of threads.
double norm_squared_where(std::span<const cplx> amps, uint64_t mask, uint64_t val);

}  // namespace qsp::kernels
