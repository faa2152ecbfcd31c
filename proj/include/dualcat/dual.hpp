#pragma once

// Dual numbers a + εb (ε² = 0) and dual 2-vectors ū + εv̄.
//
// Everything here is a value type; operations are pure.

#include <cmath>
#include <functional>
#include <string>

namespace dualcat {

/// Default guard for dual division: only a literal (or underflowed) zero
/// real part is rejected.
inline constexpr double kDivisionGuard = 1e-300;

struct DualScalar {
  double re{0.0};
  double du{0.0};

  constexpr DualScalar() = default;
  constexpr DualScalar(double real) : re(real) {}  // NOLINT: implicit lift of reals
  constexpr DualScalar(double real, double dual) : re(real), du(dual) {}

  constexpr bool operator==(const DualScalar&) const = default;
};

constexpr DualScalar operator+(DualScalar a, DualScalar b) { return {a.re + b.re, a.du + b.du}; }
constexpr DualScalar operator-(DualScalar a, DualScalar b) { return {a.re - b.re, a.du - b.du}; }
constexpr DualScalar operator-(DualScalar a) { return {-a.re, -a.du}; }

// (a + εb)(c + εd) = ac + ε(ad + bc)
constexpr DualScalar operator*(DualScalar a, DualScalar b) {
  return {a.re * b.re, a.re * b.du + a.du * b.re};
}

constexpr DualScalar scale(double s, DualScalar a) { return {s * a.re, s * a.du}; }

/// (a + εb)/(c + εd) = a/c + ε(bc − ad)/c². Throws ZeroRealPart when
/// |c| < guard.
DualScalar div(DualScalar num, DualScalar den, double guard = kDivisionGuard);

inline DualScalar operator/(DualScalar a, DualScalar b) { return div(a, b); }

inline DualScalar& operator+=(DualScalar& a, DualScalar b) { return a = a + b; }
inline DualScalar& operator-=(DualScalar& a, DualScalar b) { return a = a - b; }
inline DualScalar& operator*=(DualScalar& a, DualScalar b) { return a = a * b; }

/// Unit dual number ε.
inline constexpr DualScalar kEps{0.0, 1.0};

struct Vec2 {
  double x{0.0};
  double y{0.0};

  constexpr bool operator==(const Vec2&) const = default;
};

constexpr Vec2 operator+(Vec2 a, Vec2 b) { return {a.x + b.x, a.y + b.y}; }
constexpr Vec2 operator-(Vec2 a, Vec2 b) { return {a.x - b.x, a.y - b.y}; }
constexpr Vec2 operator-(Vec2 a) { return {-a.x, -a.y}; }
constexpr Vec2 operator*(double s, Vec2 a) { return {s * a.x, s * a.y}; }
constexpr double dot(Vec2 a, Vec2 b) { return a.x * b.x + a.y * b.y; }
inline double norm(Vec2 a) { return std::hypot(a.x, a.y); }

/// Element ū + εv̄ of the dual plane.
struct DualVec2 {
  Vec2 re;
  Vec2 du;

  constexpr bool operator==(const DualVec2&) const = default;
};

constexpr DualVec2 operator+(const DualVec2& a, const DualVec2& b) { return {a.re + b.re, a.du + b.du}; }
constexpr DualVec2 operator-(const DualVec2& a, const DualVec2& b) { return {a.re - b.re, a.du - b.du}; }

// (s + εt)(ū + εv̄) = sū + ε(sv̄ + tū)
constexpr DualVec2 operator*(DualScalar s, const DualVec2& a) {
  return {s.re * a.re, s.re * a.du + s.du * a.re};
}

/// ⟨ū,w̄⟩ + ε(⟨ū,w̄_du⟩ + ⟨u_du,w̄⟩)
constexpr DualScalar dual_dot(const DualVec2& a, const DualVec2& b) {
  return {dot(a.re, b.re), dot(a.re, b.du) + dot(a.du, b.re)};
}

/// |ū| + ε⟨ū,v̄⟩/|ū|. Throws ZeroRealPart when ū = 0.
DualScalar dual_norm(const DualVec2& a);

/// The normalized direction u = (0,1) + ε(v,0): a unit dual vector whose
/// real part is orthogonal to its dual part.
struct DirectionSpec {
  double v{0.0};

  constexpr DualVec2 vector() const { return {{0.0, 1.0}, {v, 0.0}}; }
};

/// A smooth real function together with its hand-coded derivative.
struct SmoothFunction {
  std::string name;
  std::function<double(double)> value;
  std::function<double(double)> derivative;
  // Points where value and derivative are both defined.
  std::function<bool(double)> in_domain;
};

/// First-order dual Taylor lift: f(x + εy) = f(x) + εy f′(x).
/// Throws DomainError when x.re is outside f's domain.
DualScalar lift(const SmoothFunction& f, DualScalar x);

/// f∘g with chain-rule derivative f′(g(x))·g′(x).
SmoothFunction compose(SmoothFunction f, SmoothFunction g);

namespace smooth {

SmoothFunction cosh();
SmoothFunction sinh();
SmoothFunction tanh();
SmoothFunction sech();
SmoothFunction exp();
SmoothFunction sqrt();
SmoothFunction arcsin();

/// x ↦ x^α. Non-integer α needs x > 0; integer α < 1 needs x ≠ 0.
SmoothFunction pow_alpha(double alpha);

}  // namespace smooth

// Convenience overloads built on `lift`.
DualScalar cosh(DualScalar x);
DualScalar sinh(DualScalar x);
DualScalar tanh(DualScalar x);
DualScalar sech(DualScalar x);
DualScalar exp(DualScalar x);
DualScalar sqrt(DualScalar x);
DualScalar asin(DualScalar x);
DualScalar pow(DualScalar x, double alpha);

}  // namespace dualcat
