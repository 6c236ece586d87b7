#pragma once

#include <cstddef>
#include <span>

// Trigonometric inner-loop kernels.
//
// Everything here evaluates sums of the form
//
//   out[i] = sum_k w_k * (1 - cos(2*pi * (ax_k * x[i] + ay_k * y[i])))
//
// which is the workhorse behind positive-type function evaluation,
// distortion-ratio grids and contour export.  The phase is reduced
// exactly (theta - round(theta) is exact in binary floating point) and
// 1 - cos(2*pi*theta) is computed as 2*sin^2(pi*m), so values near the
// lattice (where the sum vanishes) keep full relative accuracy instead
// of suffering cancellation in 1 - cos.
//
// The scalar reference path and the SIMD paths evaluate the same
// polynomial with the same operation order (FMA throughout), so all
// backends produce bit-identical results.  Backend selection happens at
// runtime; AVX2 and NEON variants are compiled only on their native
// architectures.

namespace flatorus::kernels {

enum class Backend { scalar, avx2, neon };

Backend active_backend();
bool backend_supported(Backend backend);
// Force a backend (used by the equivalence tests). Returns false and
// leaves the dispatch unchanged if the backend is not available.
bool set_backend(Backend backend);
const char* backend_name(Backend backend);

// 1 - cos(2*pi*theta), computed as 2*sin^2(pi*(theta - round(theta))).
double one_minus_cos_2pi(double theta);

// sin(pi*t) and cos(pi*t) with exact period-2 argument reduction.
double sin_pi(double t);
double cos_pi(double t);

struct PhaseTerm {
  double ax;
  double ay;
  double weight;
};

// out[i] = sum over terms of weight * (1 - cos(2*pi*(ax*xs[i] + ay*ys[i]))).
// xs, ys and out must have equal lengths.
void accumulate_phase_terms(std::span<const double> xs, std::span<const double> ys,
                            std::span<const PhaseTerm> terms, std::span<double> out);

}  // namespace flatorus::kernels
