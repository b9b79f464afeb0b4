#pragma once

#include <functional>
#include <string>

namespace qrv {

/// Deterministic real function of one eigenvalue, e.g. G in B = G(A).
struct ScalarFunction1 {
  std::function<double(double)> fn;
  std::string label;

  double operator()(double a) const { return fn(a); }
};

/// Deterministic real function of an eigenvalue pair, e.g. F in C = F(A, B).
struct ScalarFunction2 {
  std::function<double(double, double)> fn;
  std::string label;

  double operator()(double a, double b) const { return fn(a, b); }
};

}  // namespace qrv
