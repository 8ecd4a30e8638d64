#pragma once

#include <cmath>

#include "qsp/types.hpp"

namespace qsp::synth {

// ZYZ factorisation u = e^{i alpha} RZ(beta) RY(gamma) RZ(delta), with
// gamma in [0, pi].
struct Zyz {
  double alpha = 0.0;
  double beta = 0.0;
  double gamma = 0.0;
  double delta = 0.0;
};

inline Zyz zyz_decompose(const CMatrix& u) {
  const cplx det = u.at(0, 0) * u.at(1, 1) - u.at(0, 1) * u.at(1, 0);
  Zyz z;
  z.alpha = std::arg(det) / 2.0;
  const cplx unphase = std::polar(1.0, -z.alpha);
  const cplx v00 = u.at(0, 0) * unphase;
  const cplx v10 = u.at(1, 0) * unphase;
  const cplx v11 = u.at(1, 1) * unphase;
  z.gamma = 2.0 * std::atan2(std::abs(v10), std::abs(v00));
  if (std::abs(v10) < 1e-13) {
    z.beta = 2.0 * std::arg(v11);
    z.delta = 0.0;
  } else if (std::abs(v00) < 1e-13) {
    z.beta = 2.0 * std::arg(v10);
    z.delta = 0.0;
  } else {
    z.beta = std::arg(v11) + std::arg(v10);
    z.delta = std::arg(v11) - std::arg(v10);
  }
  return z;
}

}  // namespace qsp::synth
