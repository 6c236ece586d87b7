#include "flatorus/kernels.hpp"

#include <cmath>
#include <cstdlib>

#include "flatorus/error.hpp"
#include "sinpi_poly.hpp"

namespace flatorus::kernels {

namespace detail {

void accumulate_phase_terms_scalar(std::span<const double> xs, std::span<const double> ys,
                                   std::span<const PhaseTerm> terms, std::span<double> out) {
  const std::size_t n = xs.size();
  for (std::size_t i = 0; i < n; ++i) {
    const double x = xs[i];
    const double y = ys[i];
    double acc = 0.0;
    for (const PhaseTerm& t : terms) {
      const double phase = std::fma(t.ax, x, t.ay * y);
      const double q = one_minus_cos_2pi_scalar(phase);
      acc = std::fma(t.weight, q, acc);
    }
    out[i] = acc;
  }
}

#if defined(__x86_64__) || defined(_M_X64)
void accumulate_phase_terms_avx2(std::span<const double> xs, std::span<const double> ys,
                                 std::span<const PhaseTerm> terms, std::span<double> out);
#endif
#if defined(__aarch64__)
void accumulate_phase_terms_neon(std::span<const double> xs, std::span<const double> ys,
                                 std::span<const PhaseTerm> terms, std::span<double> out);
#endif

}  // namespace detail

namespace {

using KernelFn = void (*)(std::span<const double>, std::span<const double>,
                          std::span<const PhaseTerm>, std::span<double>);

struct Dispatch {
  Backend backend;
  KernelFn fn;
};

Dispatch pick_default() {
#if defined(__x86_64__) || defined(_M_X64)
  if (__builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma")) {
    return {Backend::avx2, &detail::accumulate_phase_terms_avx2};
  }
#endif
#if defined(__aarch64__)
  return {Backend::neon, &detail::accumulate_phase_terms_neon};
#endif
  return {Backend::scalar, &detail::accumulate_phase_terms_scalar};
}

Dispatch& dispatch() {
  static Dispatch d = pick_default();
  return d;
}

}  // namespace

Backend active_backend() { return dispatch().backend; }

bool backend_supported(Backend backend) {
  switch (backend) {
    case Backend::scalar:
      return true;
    case Backend::avx2:
#if defined(__x86_64__) || defined(_M_X64)
      return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
      return false;
#endif
    case Backend::neon:
#if defined(__aarch64__)
      return true;
#else
      return false;
#endif
  }
  return false;
}

bool set_backend(Backend backend) {
  if (!backend_supported(backend)) return false;
  switch (backend) {
    case Backend::scalar:
      dispatch() = {Backend::scalar, &detail::accumulate_phase_terms_scalar};
      return true;
    case Backend::avx2:
#if defined(__x86_64__) || defined(_M_X64)
      dispatch() = {Backend::avx2, &detail::accumulate_phase_terms_avx2};
      return true;
#else
      return false;
#endif
    case Backend::neon:
#if defined(__aarch64__)
      dispatch() = {Backend::neon, &detail::accumulate_phase_terms_neon};
      return true;
#else
      return false;
#endif
  }
  return false;
}

const char* backend_name(Backend backend) {
  switch (backend) {
    case Backend::scalar: return "scalar";
    case Backend::avx2: return "avx2";
    case Backend::neon: return "neon";
  }
  return "unknown";
}

double one_minus_cos_2pi(double theta) { return detail::one_minus_cos_2pi_scalar(theta); }

double sin_pi(double t) {
  // Reduce to [-1, 1] (period 2), then fold into [-1/2, 1/2].
  double r = t - 2.0 * std::nearbyint(0.5 * t);
  if (r > 0.5) {
    r = 1.0 - r;
  } else if (r < -0.5) {
    r = -1.0 - r;
  }
  return detail::sin_pi_reduced(r);
}

double cos_pi(double t) { return 1.0 - detail::one_minus_cos_2pi_scalar(0.5 * t); }

void accumulate_phase_terms(std::span<const double> xs, std::span<const double> ys,
                            std::span<const PhaseTerm> terms, std::span<double> out) {
  if (xs.size() != ys.size() || xs.size() != out.size()) {
    raise(ErrorCode::dimension_mismatch, "phase-term batch spans must have equal length");
  }
  dispatch().fn(xs, ys, terms, out);
}

}  // namespace flatorus::kernels
