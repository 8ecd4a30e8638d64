#include "qsp/kernels.hpp"

#include <vector>

namespace qsp::kernels {

namespace {

// Index with target bit cleared, enumerated by a compact counter:
// spread the low bits of i around the target position.
inline uint64_t insert_zero_bit(uint64_t i, uint64_t lo_mask, uint64_t hi_mask) {
  return ((i & hi_mask) << 1) | (i & lo_mask);
}

}  // namespace

void apply_1q(std::span<cplx> amps, int target, const cplx m[4], uint64_t cmask, uint64_t cval) {
  const uint64_t tbit = uint64_t{1} << target;
  const uint64_t lo_mask = tbit - 1;
  const uint64_t hi_mask = ~lo_mask;
  const int64_t pairs = static_cast<int64_t>(amps.size() >> 1);
  const cplx m00 = m[0], m01 = m[1], m10 = m[2], m11 = m[3];

#pragma omp parallel for schedule(static) if (amps.size() >= kParallelThreshold)
  for (int64_t i = 0; i < pairs; ++i) {
    const uint64_t i0 = insert_zero_bit(static_cast<uint64_t>(i), lo_mask, hi_mask);
    if ((i0 & cmask) != cval) continue;
    const uint64_t i1 = i0 | tbit;
    const cplx a0 = amps[i0];
    const cplx a1 = amps[i1];
    amps[i0] = m00 * a0 + m01 * a1;
    amps[i1] = m10 * a0 + m11 * a1;
  }
}

void apply_diag1(std::span<cplx> amps, int target, cplx d0, cplx d1, uint64_t cmask,
                 uint64_t cval) {
  const uint64_t tbit = uint64_t{1} << target;
  const int64_t size = static_cast<int64_t>(amps.size());

#pragma omp parallel for schedule(static) if (amps.size() >= kParallelThreshold)
  for (int64_t i = 0; i < size; ++i) {
    const uint64_t idx = static_cast<uint64_t>(i);
    if ((idx & cmask) != cval) continue;
    amps[idx] *= (idx & tbit) ? d1 : d0;
  }
}

void apply_x(std::span<cplx> amps, int target, uint64_t cmask, uint64_t cval) {
  const uint64_t tbit = uint64_t{1} << target;
  const uint64_t lo_mask = tbit - 1;
  const uint64_t hi_mask = ~lo_mask;
  const int64_t pairs = static_cast<int64_t>(amps.size() >> 1);

#pragma omp parallel for schedule(static) if (amps.size() >= kParallelThreshold)
  for (int64_t i = 0; i < pairs; ++i) {
    const uint64_t i0 = insert_zero_bit(static_cast<uint64_t>(i), lo_mask, hi_mask);
    if ((i0 & cmask) != cval) continue;
    std::swap(amps[i0], amps[i0 | tbit]);
  }
}

void apply_swap(std::span<cplx> amps, int q1, int q2, uint64_t cmask, uint64_t cval) {
  const uint64_t b1 = uint64_t{1} << q1;
  const uint64_t b2 = uint64_t{1} << q2;
  const int64_t size = static_cast<int64_t>(amps.size());

  // Exchange amplitudes between the |..0..1..> and |..1..0..> sectors.
#pragma omp parallel for schedule(static) if (amps.size() >= kParallelThreshold)
  for (int64_t i = 0; i < size; ++i) {
    const uint64_t idx = static_cast<uint64_t>(i);
    if ((idx & b1) || !(idx & b2)) continue;
    if ((idx & cmask) != cval) continue;
    std::swap(amps[idx], amps[(idx | b1) & ~b2]);
  }
}

void apply_phase(std::span<cplx> amps, cplx factor, uint64_t cmask, uint64_t cval) {
  const int64_t size = static_cast<int64_t>(amps.size());

#pragma omp parallel for schedule(static) if (amps.size() >= kParallelThreshold)
  for (int64_t i = 0; i < size; ++i) {
    const uint64_t idx = static_cast<uint64_t>(i);
    if ((idx & cmask) != cval) continue;
    amps[idx] *= factor;
  }
}

void apply_dense(std::span<cplx> amps, std::span<const int> targets, std::span<const cplx> m,
                 uint64_t cmask, uint64_t cval) {
  const int k = static_cast<int>(targets.size());
  const uint64_t sub = uint64_t{1} << k;
  uint64_t tmask = 0;
  for (int q : targets) tmask |= uint64_t{1} << q;
  const int64_t groups = static_cast<int64_t>(amps.size() >> k);

#pragma omp parallel for schedule(static) if (amps.size() >= kParallelThreshold)
  for (int64_t g = 0; g < groups; ++g) {
    // Deposit the counter bits into the non-target positions.
    uint64_t base = 0;
    uint64_t rest = static_cast<uint64_t>(g);
    for (uint64_t bit = 1; rest != 0; bit <<= 1) {
      if (bit & tmask) continue;
      if (rest & 1) base |= bit;
      rest >>= 1;
    }
    if ((base & cmask) != cval) continue;

    uint64_t idx[1 << kMaxUnitaryQubits];
    cplx in[1 << kMaxUnitaryQubits];
    for (uint64_t j = 0; j < sub; ++j) {
      uint64_t full = base;
      for (int b = 0; b < k; ++b) {
        if (j & (uint64_t{1} << b)) full |= uint64_t{1} << targets[b];
      }
      idx[j] = full;
      in[j] = amps[full];
    }
    for (uint64_t r = 0; r < sub; ++r) {
      cplx acc{0.0, 0.0};
      const cplx* row = m.data() + r * sub;
      for (uint64_t c = 0; c < sub; ++c) acc += row[c] * in[c];
      amps[idx[r]] = acc;
    }
  }
}

double norm_squared_where(std::span<const cplx> amps, uint64_t mask, uint64_t val) {
  constexpr size_t kChunk = 4096;
  const size_t n = amps.size();
  const size_t num_chunks = (n + kChunk - 1) / kChunk;
  std::vector<double> partial(num_chunks, 0.0);

#pragma omp parallel for schedule(static) if (n >= kParallelThreshold)
  for (int64_t c = 0; c < static_cast<int64_t>(num_chunks); ++c) {
    const size_t begin = static_cast<size_t>(c) * kChunk;
    const size_t end = std::min(begin + kChunk, n);
    double s = 0.0;
    for (size_t i = begin; i < end; ++i) {
      if ((i & mask) != val) continue;
      s += std::norm(amps[i]);
    }
    partial[c] = s;
  }

  double total = 0.0;
  for (double s : partial) total += s;
  return total;
}

}  // namespace qsp::kernels
