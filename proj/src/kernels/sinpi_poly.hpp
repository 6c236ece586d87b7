#pragma once

#include <cmath>

// Shared polynomial core for the trig kernels.  sin(pi*m) = m * P(m^2) on
// m in [-1/2, 1/2]; coefficients are a Chebyshev fit rounded to double,
// max relative error 2.4e-16 when evaluated by FMA Horner.  Every backend
// (scalar, AVX2, NEON) must evaluate this polynomial with the identical
// operation order so that results are bit-identical across backends.

namespace flatorus::kernels::detail {

inline constexpr double kSinPiCoeffs[9] = {
    3.141592653589793,       -5.167712780049969,     2.5501640398773007,
    -0.5992645293189447,     0.0821458865731029,     -0.007370430505916944,
    0.0004662998161898394,   -2.1903497074626018e-05, 7.697826768224191e-07,
};

// sin(pi*m) for m in [-1/2, 1/2].
inline double sin_pi_reduced(double m) {
  const double w = m * m;
  double p = kSinPiCoeffs[8];
  p = std::fma(p, w, kSinPiCoeffs[7]);
  p = std::fma(p, w, kSinPiCoeffs[6]);
  p = std::fma(p, w, kSinPiCoeffs[5]);
  p = std::fma(p, w, kSinPiCoeffs[4]);
  p = std::fma(p, w, kSinPiCoeffs[3]);
  p = std::fma(p, w, kSinPiCoeffs[2]);
  p = std::fma(p, w, kSinPiCoeffs[1]);
  p = std::fma(p, w, kSinPiCoeffs[0]);
  return p * m;
}

// 1 - cos(2*pi*theta) = 2*sin^2(pi*(theta - round(theta))).
inline double one_minus_cos_2pi_scalar(double theta) {
  const double m = theta - std::nearbyint(theta);
  const double s = sin_pi_reduced(m);
  const double ss = s * s;
  return ss + ss;
}

}  // namespace flatorus::kernels::detail
