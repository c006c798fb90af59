#include "discenv/harmonic.hpp"

#include <unsupported/Eigen/FFT>

#include <cmath>

namespace discenv {

std::vector<Complex> fourier_coefficients(std::span<const Complex> g) {
  Eigen::FFT<double> fft;
  std::vector<Complex> in(g.begin(), g.end());
  std::vector<Complex> out;
  fft.fwd(out, in);
  const double scale = 1.0 / static_cast<double>(g.size());
  for (auto& c : out) c *= scale;
  return out;
}

namespace {

void check_radius(double r) {
  if (!(r >= 0.0 && r < 1.0)) throw ConfigError("harmonic extension radius must lie in [0, 1)");
}

std::vector<Complex> real_coefficients(std::span<const double> g) {
  if (g.empty()) throw ConfigError("harmonic extension of empty data");
  std::vector<Complex> c(g.size());
  for (std::size_t j = 0; j < g.size(); ++j) {
    if (!std::isfinite(g[j])) throw ConfigError("harmonic extension needs finite boundary data");
    c[j] = g[j];
  }
  return fourier_coefficients(c);
}

} // namespace

HarmonicPair harmonic_extension_and_conjugate(std::span<const double> g, double r) {
  check_radius(r);
  const std::vector<Complex> ghat = real_coefficients(g);
  const std::size_t n = ghat.size();
  std::vector<Complex> uhat(n), vhat(n);
  for (std::size_t k = 0; k < n; ++k) {
    // signed frequency of bin k
    const long long kk = (2 * k <= n) ? static_cast<long long>(k) : static_cast<long long>(k) - static_cast<long long>(n);
    const bool nyquist = (2 * k == n);
    const double damp = std::pow(r, static_cast<double>(kk < 0 ? -kk : kk));
    uhat[k] = ghat[k] * damp;
    if (kk == 0 || nyquist)
      vhat[k] = 0.0;
    else
      vhat[k] = Complex{0.0, kk > 0 ? -1.0 : 1.0} * uhat[k];
  }
  Eigen::FFT<double> fft;
  std::vector<Complex> u_t, v_t;
  for (auto& c : uhat) c *= static_cast<double>(n);
  for (auto& c : vhat) c *= static_cast<double>(n);
  fft.inv(u_t, uhat);
  fft.inv(v_t, vhat);
  HarmonicPair out;
  out.u.resize(n);
  out.v.resize(n);
  for (std::size_t j = 0; j < n; ++j) {
    out.u[j] = u_t[j].real();
    out.v[j] = v_t[j].real();
  }
  return out;
}

std::vector<Complex> holomorphic_extension_coeffs(std::span<const double> g, double r) {
  check_radius(r);
  const std::vector<Complex> ghat = real_coefficients(g);
  const std::size_t n = ghat.size();
  const std::size_t kmax = (n - 1) / 2; // strictly below Nyquist
  std::vector<Complex> a(kmax + 1);
  a[0] = ghat[0].real();
  double rk = 1.0;
  for (std::size_t k = 1; k <= kmax; ++k) {
    rk *= r;
    a[k] = 2.0 * ghat[k] * rk;
  }
  return a;
}

} // namespace discenv
