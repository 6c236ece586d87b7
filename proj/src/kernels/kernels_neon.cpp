// NEON variant of the phase-term accumulator for aarch64.  Same
// polynomial and FMA order as the scalar reference; vrndnq rounds to
// nearest-even like nearbyint in the default mode, so results match the
// scalar path bit for bit.

#if defined(__aarch64__)

#include <arm_neon.h>

#include <cmath>
#include <span>

#include "flatorus/kernels.hpp"
#include "sinpi_poly.hpp"

namespace flatorus::kernels::detail {

namespace {

inline float64x2_t sin_pi_reduced_f64(float64x2_t m) {
  const float64x2_t w = vmulq_f64(m, m);
  float64x2_t p = vdupq_n_f64(kSinPiCoeffs[8]);
  p = vfmaq_f64(vdupq_n_f64(kSinPiCoeffs[7]), p, w);
  p = vfmaq_f64(vdupq_n_f64(kSinPiCoeffs[6]), p, w);
  p = vfmaq_f64(vdupq_n_f64(kSinPiCoeffs[5]), p, w);
  p = vfmaq_f64(vdupq_n_f64(kSinPiCoeffs[4]), p, w);
  p = vfmaq_f64(vdupq_n_f64(kSinPiCoeffs[3]), p, w);
  p = vfmaq_f64(vdupq_n_f64(kSinPiCoeffs[2]), p, w);
  p = vfmaq_f64(vdupq_n_f64(kSinPiCoeffs[1]), p, w);
  p = vfmaq_f64(vdupq_n_f64(kSinPiCoeffs[0]), p, w);
  return vmulq_f64(p, m);
}

inline float64x2_t one_minus_cos_2pi_f64(float64x2_t theta) {
  const float64x2_t m = vsubq_f64(theta, vrndnq_f64(theta));
  const float64x2_t s = sin_pi_reduced_f64(m);
  const float64x2_t ss = vmulq_f64(s, s);
  return vaddq_f64(ss, ss);
}

}  // namespace

void accumulate_phase_terms_neon(std::span<const double> xs, std::span<const double> ys,
                                 std::span<const PhaseTerm> terms, std::span<double> out) {
  const std::size_t n = xs.size();
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    const float64x2_t x = vld1q_f64(xs.data() + i);
    const float64x2_t y = vld1q_f64(ys.data() + i);
    float64x2_t acc = vdupq_n_f64(0.0);
    for (const PhaseTerm& t : terms) {
      const float64x2_t phase =
          vfmaq_f64(vmulq_f64(vdupq_n_f64(t.ay), y), vdupq_n_f64(t.ax), x);
      const float64x2_t q = one_minus_cos_2pi_f64(phase);
      acc = vfmaq_f64(acc, vdupq_n_f64(t.weight), q);
    }
    vst1q_f64(out.data() + i, acc);
  }
  for (; i < n; ++i) {
    const double x = xs[i];
    const double y = ys[i];
    double acc = 0.0;
    for (const PhaseTerm& t : terms) {
      const double phase = std::fma(t.ax, x, t.ay * y);
      acc = std::fma(t.weight, one_minus_cos_2pi_scalar(phase), acc);
    }
    out[i] = acc;
  }
}

}  // namespace flatorus::kernels::detail

#endif  // aarch64
