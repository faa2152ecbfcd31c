#include "dualcat/dual.hpp"

#include <cmath>
#include <sstream>
#include <utility>

#include "dualcat/error.hpp"

namespace dualcat {

DualScalar div(DualScalar num, DualScalar den, double guard) {
  if (!(std::abs(den.re) >= guard)) {
    std::ostringstream msg;
    msg << "dual division by a number with real part " << den.re;
    throw Error(ErrorKind::ZeroRealPart, msg.str());
  }
  const double q = num.re / den.re;
  return {q, (num.du - q * den.du) / den.re};
}

DualScalar dual_norm(const DualVec2& a) {
  const double n = norm(a.re);
  if (n == 0.0) {
    throw Error(ErrorKind::ZeroRealPart, "dual norm of a vector with zero real part");
  }
  return {n, dot(a.re, a.du) / n};
}

DualScalar lift(const SmoothFunction& f, DualScalar x) {
  if (f.in_domain && !f.in_domain(x.re)) {
    std::ostringstream msg;
    msg << f.name << " is not defined (with derivative) at " << x.re;
    throw Error(ErrorKind::DomainError, msg.str());
  }
  return {f.value(x.re), x.du * f.derivative(x.re)};
}

SmoothFunction compose(SmoothFunction f, SmoothFunction g) {
  SmoothFunction out;
  out.name = f.name + "∘" + g.name;
  out.value = [f, g](double x) { return f.value(g.value(x)); };
  out.derivative = [f, g](double x) { return f.derivative(g.value(x)) * g.derivative(x); };
  out.in_domain = [f = std::move(f), g = std::move(g)](double x) {
    if (g.in_domain && !g.in_domain(x)) return false;
    return !f.in_domain || f.in_domain(g.value(x));
  };
  return out;
}

namespace smooth {

namespace {
bool everywhere(double x) { return std::isfinite(x); }
}  // namespace

SmoothFunction cosh() {
  return {"cosh", [](double x) { return std::cosh(x); }, [](double x) { return std::sinh(x); },
          everywhere};
}

SmoothFunction sinh() {
  return {"sinh", [](double x) { return std::sinh(x); }, [](double x) { return std::cosh(x); },
          everywhere};
}

SmoothFunction tanh() {
  return {"tanh", [](double x) { return std::tanh(x); },
          [](double x) {
            const double s = 1.0 / std::cosh(x);
            return s * s;
          },
          everywhere};
}

SmoothFunction sech() {
  return {"sech", [](double x) { return 1.0 / std::cosh(x); },
          [](double x) { return -std::tanh(x) / std::cosh(x); }, everywhere};
}

SmoothFunction exp() {
  return {"exp", [](double x) { return std::exp(x); }, [](double x) { return std::exp(x); },
          everywhere};
}

SmoothFunction sqrt() {
  return {"sqrt", [](double x) { return std::sqrt(x); },
          [](double x) { return 0.5 / std::sqrt(x); }, [](double x) { return x > 0.0; }};
}

SmoothFunction arcsin() {
  return {"arcsin", [](double x) { return std::asin(x); },
          [](double x) { return 1.0 / std::sqrt(1.0 - x * x); },
          [](double x) { return x > -1.0 && x < 1.0; }};
}

SmoothFunction pow_alpha(double alpha) {
  const bool integral = std::isfinite(alpha) && std::floor(alpha) == alpha;
  SmoothFunction f;
  f.name = "pow_alpha(" + std::to_string(alpha) + ")";
  f.value = [alpha](double x) { return std::pow(x, alpha); };
  f.derivative = [alpha](double x) {
    return alpha == 0.0 ? 0.0 : alpha * std::pow(x, alpha - 1.0);
  };
  f.in_domain = [alpha, integral](double x) {
    if (!std::isfinite(x)) return false;
    if (!integral) return x > 0.0;
    if (alpha == 0.0 || alpha >= 1.0) return true;
    return x != 0.0;
  };
  return f;
}

}  // namespace smooth

DualScalar cosh(DualScalar x) { return lift(smooth::cosh(), x); }
DualScalar sinh(DualScalar x) { return lift(smooth::sinh(), x); }
DualScalar tanh(DualScalar x) { return lift(smooth::tanh(), x); }
DualScalar sech(DualScalar x) { return lift(smooth::sech(), x); }
DualScalar exp(DualScalar x) { return lift(smooth::exp(), x); }
DualScalar sqrt(DualScalar x) { return lift(smooth::sqrt(), x); }
DualScalar asin(DualScalar x) { return lift(smooth::arcsin(), x); }
DualScalar pow(DualScalar x, double alpha) { return lift(smooth::pow_alpha(alpha), x); }

}  // namespace dualcat
