// AVX2 + FMA variant of the phase-term accumulator.  Mirrors the scalar
// reference operation-for-operation (same polynomial, same FMA order),
// so outputs are bit-identical to the scalar path.  Compiled with
// -mavx2 -mfma for this translation unit only; callers dispatch at
// runtime after a cpuid check.

#if defined(__x86_64__) || defined(_M_X64)

#include <immintrin.h>

#include <cmath>
#include <span>

#include "flatorus/kernels.hpp"
#include "sinpi_poly.hpp"

namespace flatorus::kernels::detail {

namespace {

inline __m256d sin_pi_reduced_pd(__m256d m) {
  const __m256d w = _mm256_mul_pd(m, m);
  __m256d p = _mm256_set1_pd(kSinPiCoeffs[8]);
  p = _mm256_fmadd_pd(p, w, _mm256_set1_pd(kSinPiCoeffs[7]));
  p = _mm256_fmadd_pd(p, w, _mm256_set1_pd(kSinPiCoeffs[6]));
  p = _mm256_fmadd_pd(p, w, _mm256_set1_pd(kSinPiCoeffs[5]));
  p = _mm256_fmadd_pd(p, w, _mm256_set1_pd(kSinPiCoeffs[4]));
  p = _mm256_fmadd_pd(p, w, _mm256_set1_pd(kSinPiCoeffs[3]));
  p = _mm256_fmadd_pd(p, w, _mm256_set1_pd(kSinPiCoeffs[2]));
  p = _mm256_fmadd_pd(p, w, _mm256_set1_pd(kSinPiCoeffs[1]));
  p = _mm256_fmadd_pd(p, w, _mm256_set1_pd(kSinPiCoeffs[0]));
  return _mm256_mul_pd(p, m);
}

inline __m256d one_minus_cos_2pi_pd(__m256d theta) {
  const __m256d r =
      _mm256_round_pd(theta, _MM_FROUND_TO_NEAREST_INT | _MM_FROUND_NO_EXC);
  const __m256d m = _mm256_sub_pd(theta, r);
  const __m256d s = sin_pi_reduced_pd(m);
  const __m256d ss = _mm256_mul_pd(s, s);
  return _mm256_add_pd(ss, ss);
}

}  // namespace

void accumulate_phase_terms_avx2(std::span<const double> xs, std::span<const double> ys,
                                 std::span<const PhaseTerm> terms, std::span<double> out) {
  const std::size_t n = xs.size();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d x = _mm256_loadu_pd(xs.data() + i);
    const __m256d y = _mm256_loadu_pd(ys.data() + i);
    __m256d acc = _mm256_setzero_pd();
    for (const PhaseTerm& t : terms) {
      const __m256d phase =
          _mm256_fmadd_pd(_mm256_set1_pd(t.ax), x, _mm256_mul_pd(_mm256_set1_pd(t.ay), y));
      const __m256d q = one_minus_cos_2pi_pd(phase);
      acc = _mm256_fmadd_pd(_mm256_set1_pd(t.weight), q, acc);
    }
    _mm256_storeu_pd(out.data() + i, acc);
  }
  // Tail elements replay the scalar sequence, which matches bitwise.
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

#endif  // x86_64
