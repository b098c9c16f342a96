/*
 * Copyright (c) 2026
 *
 * SPDX-License-Identifier: Apache-2.0
 */

#pragma once

#include <cmath>

namespace absfsim {

struct Vec2 {
  double x = 0.0;
  double y = 0.0;

  Vec2 operator+(const Vec2& o) const { return {x + o.x, y + o.y}; }
  Vec2 operator-(const Vec2& o) const { return {x - o.x, y - o.y}; }
  Vec2 operator*(double s) const { return {x * s, y * s}; }
  bool operator==(const Vec2& o) const { return x == o.x && y == o.y; }

  double norm() const { return std::hypot(x, y); }
};

inline double distance(const Vec2& a, const Vec2& b) { return (a - b).norm(); }

/// Largest t in [0, 1] such that |p + t*v| <= radius, assuming |p| <= radius.
/// Used to shorten a displacement so it stays inside a disc centered at the
/// origin. Returns 1 when the full displacement fits.
inline double clip_to_disc(const Vec2& p, const Vec2& v, double radius) {
  const double a = v.x * v.x + v.y * v.y;
  if (a == 0.0) return 1.0;
  const double b = 2.0 * (p.x * v.x + p.y * v.y);
  const double c = p.x * p.x + p.y * p.y - radius * radius;
  if (c > 0.0) return 0.0;  // already outside; do not move further out
  const double disc = b * b - 4.0 * a * c;
  const double t = (-b + std::sqrt(std::max(0.0, disc))) / (2.0 * a);
  if (t < 0.0) return 0.0;
  return std::min(1.0, t);
}

}  // namespace absfsim
