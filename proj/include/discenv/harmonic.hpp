#pragma once

#include "discenv/common.hpp"

#include <span>
#include <vector>

namespace discenv {

struct HarmonicPair {
  std::vector<double> u; // harmonic extension at r * t_j
  std::vector<double> v; // conjugate at r * t_j, normalized v(0) = 0
};

/// Harmonic extension of equispaced boundary data g and its conjugate,
/// evaluated on the circle of radius r, via Fourier multipliers r^|k| and
/// -i sign(k). Throws ConfigError unless 0 <= r < 1.
HarmonicPair harmonic_extension_and_conjugate(std::span<const double> g, double r);

/// Power-series coefficients a_k of the holomorphic function u + i v whose
/// real part on |t| = r matches the harmonic extension of g, i.e.
/// (u + i v)(r t) = sum_k a_k t^k with a_0 = mean(g), a_k = 2 ghat_k r^k.
std::vector<Complex> holomorphic_extension_coeffs(std::span<const double> g, double r);

/// Discrete Fourier coefficients ghat_k = (1/N) sum_j g_j e^{-2 pi i jk/N}.
std::vector<Complex> fourier_coefficients(std::span<const Complex> g);

} // namespace discenv
