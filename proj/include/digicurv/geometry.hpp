#pragma once

#include <cmath>

namespace digicurv {

/// Point / vector in the plane. Used interchangeably for positions and
/// displacements; all pipeline geometry is done in double precision.
struct Point {
    double x = 0.0;
    double y = 0.0;
};

using Vec2 = Point;

inline Point operator+(Point a, Point b) { return {a.x + b.x, a.y + b.y}; }
inline Point operator-(Point a, Point b) { return {a.x - b.x, a.y - b.y}; }
inline Point operator*(double s, Point p) { return {s * p.x, s * p.y}; }
inline Point operator*(Point p, double s) { return {s * p.x, s * p.y}; }

inline double dot(Point a, Point b) { return a.x * b.x + a.y * b.y; }

/// z-component of the 3-d cross product of (b-a) and (c-a).
inline double cross(Point a, Point b, Point c) {
    return (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x);
}

inline double squared_norm(Point p) { return p.x * p.x + p.y * p.y; }
inline double norm(Point p) { return std::hypot(p.x, p.y); }
inline double distance(Point a, Point b) { return norm(a - b); }
inline double squared_distance(Point a, Point b) { return squared_norm(a - b); }

/// Counterclockwise rotation by 90 degrees.
inline Vec2 perp(Vec2 v) { return {-v.y, v.x}; }

}  // namespace digicurv
