// dtcsim — digital twin channel link-level simulator
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>
#include <vector>

#include "dtcsim/geometry.hpp"

namespace dtcsim {

/// Box scatterer with a scalar reflection-coefficient magnitude in [0, 1].
struct Scatterer {
    Aabb box;
    double reflection_coefficient = 0.5;
    std::string label;
};

struct BaseStation {
    Vec3 position;
    int num_antennas = 1;
    double antenna_spacing_m = 0.0;  // element spacing of the horizontal ULA
    double boresight_rad = 0.0;      // array orientation; 0 = +x axis
};

/// Static 3D environment: workshop shell, base stations, box scatterers.
/// Immutable after construction; all queries are read-only.
struct Scene {
    double length_m = 0.0;  // x extent
    double width_m = 0.0;   // y extent
    double height_m = 0.0;  // z extent
    double wavelength_m = 0.0;
    std::vector<BaseStation> base_stations;
    std::vector<Scatterer> scatterers;

    bool inside(const Vec3& p) const {
        return p.x >= 0.0 && p.x <= length_m && p.y >= 0.0 && p.y <= width_m && p.z >= 0.0 &&
               p.z <= height_m;
    }
};

/// Regular horizontal receiver grid at a fixed height (origin.z).
struct ReceiverGrid {
    Vec3 origin;              // first grid point; origin.z is the receiver height
    double spacing_x = 1.0;   // horizontal spacing along x
    double spacing_y = 1.0;   // spacing between rows (y)
    int count_x = 1;
    int count_y = 1;

    int num_cells() const { return count_x * count_y; }
    double height() const { return origin.z; }

    Vec3 cell_position(int ix, int iy) const {
        return {origin.x + spacing_x * ix, origin.y + spacing_y * iy, origin.z};
    }
    Vec3 cell_position(int index) const {
        return cell_position(index % count_x, index / count_x);
    }
};

enum class ScattererClass { effective, obstructing, background };

/// Blockage indicator z for the open segment a-b: 1 iff some scatterer's
/// interior intersects it. Grazing contact with a face does not block.
/// Throws std::invalid_argument on a degenerate segment (a == b).
int los_blocked(const Scene& scene, const Vec3& a, const Vec3& b);

/// Ellipsoid-based scatterer classification for the tx-rx pair: boxes that
/// intersect the segment are obstructing; otherwise a box is effective iff its
/// centroid lies inside the prolate ellipsoid with foci tx, rx and major axis
/// ellipsoid_factor * |tx-rx|; everything else is background.
std::vector<ScattererClass> classify_scatterers(const Scene& scene, const Vec3& tx,
                                                const Vec3& rx, double ellipsoid_factor);

/// Row-major receiver positions (x fastest). Throws if the grid leaves the
/// scene bounds.
std::vector<Vec3> build_grid(const Scene& scene, const ReceiverGrid& grid);

/// Validates scene invariants (positions in bounds, N_t >= 1, d > 0, boxes
/// ordered, reflection coefficients in [0,1]); throws on violation.
void validate_scene(const Scene& scene);

}  // namespace dtcsim
