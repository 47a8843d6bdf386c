#pragma once

#include <algorithm>
#include <cmath>
#include <complex>

namespace testing_util {

inline double rel_err(double got, double want) {
  if (want == 0.0) return std::abs(got);
  return std::abs(got - want) / std::abs(want);
}

inline double rel_err(std::complex<double> got, std::complex<double> want) {
  if (want == std::complex<double>{}) return std::abs(got);
  return std::abs(got - want) / std::abs(want);
}

}  // namespace testing_util
