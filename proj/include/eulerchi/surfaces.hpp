#pragma once

#include "eulerchi/planar.hpp"

#include <string>
#include <vector>

namespace eulerchi::surfaces {

// Canonical identified-polygon models at resolution r >= 3 (each identified
// boundary arc gets r edges). Names accepted:
//   sphere_square, sphere_bigon, torus, klein_bottle, projective_plane,
//   pinched_torus, genus_<g> (g >= 2)
// Throws Error("UnknownSurface") for anything else and
// Error("ResolutionTooSmall") for r < 3.
planar::PlanarPolygon make_surface(const std::string& name, int r);

// The catalog names in canonical order (genus_g listed for g = 2, 3).
std::vector<std::string> catalog_names();

}  // namespace eulerchi::surfaces
