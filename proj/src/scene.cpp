// dtcsim — digital twin channel link-level simulator
// SPDX-License-Identifier: Apache-2.0

#include "dtcsim/scene.hpp"

#include <cmath>
#include <stdexcept>

namespace dtcsim {

int los_blocked(const Scene& scene, const Vec3& a, const Vec3& b) {
    if (a == b) throw std::invalid_argument("los_blocked: degenerate segment (a == b)");
    for (const auto& s : scene.scatterers) {
        if (segment_intersects_interior(s.box, a, b)) return 1;
    }
    return 0;
}

std::vector<ScattererClass> classify_scatterers(const Scene& scene, const Vec3& tx,
                                                const Vec3& rx, double ellipsoid_factor) {
    if (tx == rx) throw std::invalid_argument("classify_scatterers: tx == rx");
    if (!(ellipsoid_factor > 1.0))
        throw std::invalid_argument("classify_scatterers: ellipsoid_factor must be > 1");

    const double major = ellipsoid_factor * distance(tx, rx);
    std::vector<ScattererClass> out;
    out.reserve(scene.scatterers.size());
    for (const auto& s : scene.scatterers) {
        if (segment_intersects_interior(s.box, tx, rx)) {
            out.push_back(ScattererClass::obstructing);
            continue;
        }
        const Vec3 c = s.box.center();
        // prolate ellipsoid membership: sum of focal distances vs major axis
        if (distance(c, tx) + distance(c, rx) <= major) {
            out.push_back(ScattererClass::effective);
        } else {
            out.push_back(ScattererClass::background);
        }
    }
    return out;
}

std::vector<Vec3> build_grid(const Scene& scene, const ReceiverGrid& grid) {
    if (grid.count_x < 1 || grid.count_y < 1)
        throw std::invalid_argument("build_grid: counts must be >= 1");
    if (!(grid.spacing_x > 0.0) || !(grid.spacing_y > 0.0))
        throw std::invalid_argument("build_grid: spacings must be > 0");

    const Vec3 far = grid.cell_position(grid.count_x - 1, grid.count_y - 1);
    if (!scene.inside(grid.origin) || !scene.inside(far))
        throw std::invalid_argument("build_grid: grid exceeds scene bounds");

    std::vector<Vec3> points;
    points.reserve(static_cast<size_t>(grid.num_cells()));
    for (int iy = 0; iy < grid.count_y; ++iy)
        for (int ix = 0; ix < grid.count_x; ++ix) points.push_back(grid.cell_position(ix, iy));
    return points;
}

void validate_scene(const Scene& scene) {
    if (!(scene.length_m > 0.0) || !(scene.width_m > 0.0) || !(scene.height_m > 0.0))
        throw std::invalid_argument("scene: dimensions must be positive");
    if (!(scene.wavelength_m > 0.0))
        throw std::invalid_argument("scene: carrier wavelength must be positive");
    if (scene.base_stations.empty())
        throw std::invalid_argument("scene: at least one base station required");
    for (const auto& bs : scene.base_stations) {
        if (!scene.inside(bs.position))
            throw std::invalid_argument("scene: base station outside bounds");
        if (bs.num_antennas < 1) throw std::invalid_argument("scene: antenna count must be >= 1");
        if (!(bs.antenna_spacing_m > 0.0))
            throw std::invalid_argument("scene: antenna spacing must be > 0");
    }
    for (const auto& s : scene.scatterers) {
        if (s.box.lo.x > s.box.hi.x || s.box.lo.y > s.box.hi.y || s.box.lo.z > s.box.hi.z)
            throw std::invalid_argument("scene: scatterer corners out of order");
        if (s.reflection_coefficient < 0.0 || s.reflection_coefficient > 1.0)
            throw std::invalid_argument("scene: reflection coefficient outside [0,1]");
        if (!scene.inside(s.box.lo) || !scene.inside(s.box.hi))
            throw std::invalid_argument("scene: scatterer outside bounds");
    }
}

}  // namespace dtcsim
