// dtcsim — digital twin channel link-level simulator
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <algorithm>
#include <cmath>

namespace dtcsim {

struct Vec3 {
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;

    Vec3 operator+(const Vec3& o) const { return {x + o.x, y + o.y, z + o.z}; }
    Vec3 operator-(const Vec3& o) const { return {x - o.x, y - o.y, z - o.z}; }
    Vec3 operator*(double s) const { return {x * s, y * s, z * s}; }
    bool operator==(const Vec3& o) const { return x == o.x && y == o.y && z == o.z; }

    double dot(const Vec3& o) const { return x * o.x + y * o.y + z * o.z; }
    double norm2() const { return dot(*this); }
    double norm() const { return std::sqrt(norm2()); }
};

inline double distance(const Vec3& a, const Vec3& b) { return (a - b).norm(); }

inline double horizontal_distance(const Vec3& a, const Vec3& b) {
    return std::hypot(a.x - b.x, a.y - b.y);
}

/// Axis-aligned box, lo <= hi componentwise.
struct Aabb {
    Vec3 lo;
    Vec3 hi;

    Vec3 center() const { return {(lo.x + hi.x) * 0.5, (lo.y + hi.y) * 0.5, (lo.z + hi.z) * 0.5}; }

    bool contains_closed(const Vec3& p) const {
        return p.x >= lo.x && p.x <= hi.x && p.y >= lo.y && p.y <= hi.y && p.z >= lo.z &&
               p.z <= hi.z;
    }
};

/// Slab test against the OPEN interior of a box: grazing contact with a face,
/// edge, or corner does not count as an intersection. Returns true iff the
/// segment a-b spends a positive-length interval strictly inside the box.
inline bool segment_intersects_interior(const Aabb& box, const Vec3& a, const Vec3& b) {
    const double av[3] = {a.x, a.y, a.z};
    const double bv[3] = {b.x, b.y, b.z};
    const double lo[3] = {box.lo.x, box.lo.y, box.lo.z};
    const double hi[3] = {box.hi.x, box.hi.y, box.hi.z};

    double t0 = 0.0, t1 = 1.0;
    for (int i = 0; i < 3; ++i) {
        double d = bv[i] - av[i];
        if (d == 0.0) {
            // parallel to this slab: must sit strictly inside it
            if (av[i] <= lo[i] || av[i] >= hi[i]) return false;
        } else {
            double u = (lo[i] - av[i]) / d;
            double v = (hi[i] - av[i]) / d;
            if (u > v) std::swap(u, v);
            t0 = std::max(t0, u);
            t1 = std::min(t1, v);
            if (t0 >= t1) return false;
        }
    }
    return t1 > t0;
}

/// Entry/exit parameters of segment a-b through the open interior, valid only
/// when segment_intersects_interior() holds.
inline void interior_interval(const Aabb& box, const Vec3& a, const Vec3& b, double& t0,
                              double& t1) {
    const double av[3] = {a.x, a.y, a.z};
    const double bv[3] = {b.x, b.y, b.z};
    const double lo[3] = {box.lo.x, box.lo.y, box.lo.z};
    const double hi[3] = {box.hi.x, box.hi.y, box.hi.z};
    t0 = 0.0;
    t1 = 1.0;
    for (int i = 0; i < 3; ++i) {
        double d = bv[i] - av[i];
        if (d == 0.0) continue;
        double u = (lo[i] - av[i]) / d;
        double v = (hi[i] - av[i]) / d;
        if (u > v) std::swap(u, v);
        t0 = std::max(t0, u);
        t1 = std::min(t1, v);
    }
}

}  // namespace dtcsim
