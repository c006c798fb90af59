#pragma once

#include <Eigen/Dense>

#include <complex>
#include <cstdint>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>

namespace discenv {

using Complex = std::complex<double>;
using CVec = Eigen::VectorXcd;
using CMat = Eigen::MatrixXcd;

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kInf = std::numeric_limits<double>::infinity();

// Error classes map onto CLI exit codes: config = 1, infeasible = 2, numerical = 3.
class ConfigError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

class InfeasibleError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

class NumericalError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Hermitian inner product, linear in the first argument: <a, b> = sum a_i conj(b_i).
inline Complex hdot(const CVec& a, const CVec& b) { return b.dot(a); }

/// Mixes a seed with a stream index (SplitMix64 finalizer). Used to derive
/// independent generator seeds for restarts and directions.
inline std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream) {
  std::uint64_t z = seed + 0x9E3779B97F4A7C15ull * (stream + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

} // namespace discenv
