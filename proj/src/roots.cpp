#include "discenv/roots.hpp"

#include "discenv/disc.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>

namespace discenv {

namespace {

constexpr double kClusterTol = 1e-7;

std::vector<Complex> trimmed(const std::vector<Complex>& p) {
  double scale = 0.0;
  for (const auto& c : p) scale = std::max(scale, std::abs(c));
  if (scale == 0.0) throw ConfigError("polynomial is identically zero");
  std::vector<Complex> q = p;
  while (q.size() > 1 && std::abs(q.back()) <= 1e-15 * scale) q.pop_back();
  return q;
}

Complex derivative_at(const std::vector<Complex>& p, Complex t) {
  Complex acc{0.0, 0.0};
  for (std::size_t k = p.size(); k-- > 1;) acc = acc * t + p[k] * static_cast<double>(k);
  return acc;
}

} // namespace

int RootReport::total_multiplicity() const {
  int n = 0;
  for (const auto& r : roots) n += r.multiplicity;
  return n;
}

std::vector<Root> polynomial_roots(const std::vector<Complex>& p_in) {
  const std::vector<Complex> p = trimmed(p_in);
  const int n = static_cast<int>(p.size()) - 1;
  if (n == 0) return {};

  // zeros at the origin are split off exactly
  int zero_mult = 0;
  while (zero_mult < n && p[static_cast<std::size_t>(zero_mult)] == Complex{0.0, 0.0}) ++zero_mult;
  const std::vector<Complex> q(p.begin() + zero_mult, p.end());
  const int nq = n - zero_mult;

  std::vector<Complex> raw;
  if (nq > 0) {
    CMat companion = CMat::Zero(nq, nq);
    const Complex lead = q.back();
    for (int i = 1; i < nq; ++i) companion(i, i - 1) = 1.0;
    for (int i = 0; i < nq; ++i) companion(i, nq - 1) = -q[static_cast<std::size_t>(i)] / lead;
    Eigen::ComplexEigenSolver<CMat> es(companion, false);
    if (es.info() != Eigen::Success) throw NumericalError("companion eigenvalue solver failed");
    for (int i = 0; i < nq; ++i) raw.push_back(es.eigenvalues()(i));
  }

  // cluster nearby eigenvalues into multiple roots
  std::vector<Root> out;
  std::vector<bool> used(raw.size(), false);
  for (std::size_t i = 0; i < raw.size(); ++i) {
    if (used[i]) continue;
    Complex sum = raw[i];
    int count = 1;
    used[i] = true;
    for (std::size_t j = i + 1; j < raw.size(); ++j) {
      if (!used[j] && std::abs(raw[j] - raw[i]) < kClusterTol * std::max(1.0, std::abs(raw[i]))) {
        used[j] = true;
        sum += raw[j];
        ++count;
      }
    }
    Complex root = sum / static_cast<double>(count);
    if (count == 1) {
      const Complex d = derivative_at(q, root);
      if (std::abs(d) > 0.0) {
        const Complex polished = root - horner(q, root) / d;
        if (std::isfinite(polished.real()) && std::isfinite(polished.imag()) &&
            std::abs(horner(q, polished)) <= std::abs(horner(q, root)))
          root = polished;
      }
    }
    out.push_back({root, count});
  }
  if (zero_mult > 0) out.push_back({Complex{0.0, 0.0}, zero_mult});
  return out;
}

RootReport roots_in_unit_disc(const std::vector<Complex>& p, double boundary_margin) {
  RootReport report;
  const std::vector<Complex> q = trimmed(p);
  report.centre_on_hyperplane = (q.front() == Complex{0.0, 0.0});
  for (const auto& r : polynomial_roots(q)) {
    const double mod = std::abs(r.value);
    if (std::abs(mod - 1.0) <= boundary_margin)
      throw InfeasibleError("boundary zero: polynomial vanishes on the unit circle");
    if (mod < 1.0) report.roots.push_back(r);
  }
  std::sort(report.roots.begin(), report.roots.end(), [](const Root& a, const Root& b) {
    const double ma = std::abs(a.value);
    const double mb = std::abs(b.value);
    if (ma != mb) return ma < mb;
    return std::arg(a.value) < std::arg(b.value);
  });
  return report;
}

int winding_number(const std::vector<Complex>& p, int samples) {
  double total = 0.0;
  Complex prev = horner(p, Complex{1.0, 0.0});
  for (int j = 1; j <= samples; ++j) {
    const Complex cur = horner(p, std::polar(1.0, 2.0 * kPi * j / samples));
    total += std::arg(cur / prev);
    prev = cur;
  }
  return static_cast<int>(std::lround(total / (2.0 * kPi)));
}

} // namespace discenv
