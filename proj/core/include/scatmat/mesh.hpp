#pragma once

#include <array>
#include <filesystem>
#include <vector>

#include "scatmat/types.hpp"

namespace scatmat {

// Closed triangulated surface with consistent outward orientation.
// Derived panel data is filled by build(); meshes are immutable afterwards.
struct SurfaceMesh {
  std::vector<Vec3> vertices;
  std::vector<std::array<int, 3>> panels;

  // derived
  std::vector<double> panel_areas;
  std::vector<Vec3> panel_centroids;
  std::vector<Vec3> panel_normals;  // unit, outward
  double diameter = 0.0;            // max vertex pair distance

  // Validates closedness, orientation, and panel quality; fills derived
  // fields. Throws InvalidMeshError.
  static SurfaceMesh build(std::vector<Vec3> vertices,
                           std::vector<std::array<int, 3>> panels);

  int panel_count() const { return static_cast<int>(panels.size()); }
};

// Latitude/longitude sphere; `refinement` latitude bands, 2*refinement
// longitude segments, 2*refinement*(refinement-1)+... triangles total.
SurfaceMesh make_sphere_mesh(double radius, int refinement);

// Axis-aligned cube centered at the origin; each face split into
// refinement^2 quads, two triangles each.
SurfaceMesh make_cube_mesh(double side, int refinement);

SurfaceMesh scaled_mesh(const SurfaceMesh& mesh, double factor);

// OFF text format. Faces with more than three vertices are fan-triangulated.
SurfaceMesh load_off(const std::filesystem::path& path);
void save_off(const SurfaceMesh& mesh, const std::filesystem::path& path);

}  // namespace scatmat
