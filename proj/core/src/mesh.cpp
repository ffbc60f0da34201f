#include "scatmat/mesh.hpp"

#include <cmath>
#include <cstdint>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "scatmat/errors.hpp"

namespace scatmat {

namespace {

double triangle_area(const Vec3& a, const Vec3& b, const Vec3& c) {
  return 0.5 * (b - a).cross(c - a).norm();
}

}  // namespace

SurfaceMesh SurfaceMesh::build(std::vector<Vec3> vertices,
                               std::vector<std::array<int, 3>> panels) {
  SurfaceMesh mesh;
  mesh.vertices = std::move(vertices);
  mesh.panels = std::move(panels);

  const int nv = static_cast<int>(mesh.vertices.size());
  if (nv < 4 || mesh.panels.size() < 4)
    throw InvalidMeshError("mesh too small to bound a volume");

  for (const auto& p : mesh.panels) {
    for (int idx : p)
      if (idx < 0 || idx >= nv)
        throw InvalidMeshError("panel references vertex out of range");
    if (p[0] == p[1] || p[1] == p[2] || p[0] == p[2])
      throw InvalidMeshError("panel with repeated vertex");
  }

  // Closed + orientable: each undirected edge in exactly two panels, each
  // directed edge exactly once.
  std::map<std::pair<int, int>, int> undirected;
  std::set<std::pair<int, int>> directed;
  for (const auto& p : mesh.panels) {
    for (int e = 0; e < 3; ++e) {
      const int i = p[e], j = p[(e + 1) % 3];
      undirected[{std::min(i, j), std::max(i, j)}]++;
      if (!directed.insert({i, j}).second)
        throw InvalidMeshError("inconsistent panel orientation (duplicate directed edge)");
    }
  }
  for (const auto& [edge, count] : undirected)
    if (count != 2)
      throw InvalidMeshError("mesh is not closed (edge shared by " +
                             std::to_string(count) + " panels)");

  mesh.panel_areas.reserve(mesh.panels.size());
  mesh.panel_centroids.reserve(mesh.panels.size());
  mesh.panel_normals.reserve(mesh.panels.size());

  double scale = 0.0;
  for (const auto& v : mesh.vertices) scale = std::max(scale, v.norm());

  double signed_volume = 0.0;
  for (const auto& p : mesh.panels) {
    const Vec3 &a = mesh.vertices[p[0]], &b = mesh.vertices[p[1]],
               &c = mesh.vertices[p[2]];
    const Vec3 n = (b - a).cross(c - a);
    const double area = 0.5 * n.norm();
    if (area <= 1e-14 * scale * scale)
      throw InvalidMeshError("degenerate panel (zero area)");
    mesh.panel_areas.push_back(area);
    mesh.panel_centroids.push_back((a + b + c) / 3.0);
    mesh.panel_normals.push_back(n.normalized());
    signed_volume += a.dot(b.cross(c)) / 6.0;
  }
  if (signed_volume <= 0.0)
    throw InvalidMeshError("panel orientation is inward (negative volume)");

  double diam2 = 0.0;
  for (size_t i = 0; i < mesh.vertices.size(); ++i)
    for (size_t j = i + 1; j < mesh.vertices.size(); ++j)
      diam2 = std::max(diam2, (mesh.vertices[i] - mesh.vertices[j]).squaredNorm());
  mesh.diameter = std::sqrt(diam2);
  if (mesh.diameter <= 0.0) throw InvalidMeshError("mesh has zero diameter");

  return mesh;
}

SurfaceMesh make_sphere_mesh(double radius, int refinement) {
  if (radius <= 0.0) throw InvalidMeshError("sphere radius must be positive");
  const int n_lat = std::max(refinement, 3);
  const int n_lon = 2 * n_lat;

  std::vector<Vec3> verts;
  // poles + (n_lat-1) interior rings of n_lon vertices
  verts.emplace_back(0.0, 0.0, radius);
  for (int i = 1; i < n_lat; ++i) {
    const double theta = kPi * i / n_lat;
    for (int j = 0; j < n_lon; ++j) {
      const double phi = 2.0 * kPi * j / n_lon;
      verts.emplace_back(radius * std::sin(theta) * std::cos(phi),
                         radius * std::sin(theta) * std::sin(phi),
                         radius * std::cos(theta));
    }
  }
  verts.emplace_back(0.0, 0.0, -radius);
  const int south = static_cast<int>(verts.size()) - 1;
  auto ring = [&](int i, int j) { return 1 + (i - 1) * n_lon + (j % n_lon); };

  std::vector<std::array<int, 3>> panels;
  for (int j = 0; j < n_lon; ++j)
    panels.push_back({0, ring(1, j), ring(1, j + 1)});
  for (int i = 1; i + 1 < n_lat; ++i) {
    for (int j = 0; j < n_lon; ++j) {
      const int a = ring(i, j), b = ring(i, j + 1), c = ring(i + 1, j),
                d = ring(i + 1, j + 1);
      panels.push_back({a, c, d});
      panels.push_back({a, d, b});
    }
  }
  for (int j = 0; j < n_lon; ++j)
    panels.push_back({south, ring(n_lat - 1, j + 1), ring(n_lat - 1, j)});

  return SurfaceMesh::build(std::move(verts), std::move(panels));
}

SurfaceMesh make_cube_mesh(double side, int refinement) {
  if (side <= 0.0) throw InvalidMeshError("cube side must be positive");
  const int n = std::max(refinement, 1);

  // Vertices on the boundary lattice of an n^3 voxel cube, welded by index.
  std::map<std::array<int, 3>, int> vertex_of;
  std::vector<Vec3> verts;
  auto vertex = [&](int ix, int iy, int iz) {
    auto [it, inserted] = vertex_of.try_emplace({ix, iy, iz}, static_cast<int>(verts.size()));
    if (inserted)
      verts.emplace_back(side * (double(ix) / n - 0.5), side * (double(iy) / n - 0.5),
                         side * (double(iz) / n - 0.5));
    return it->second;
  };

  std::vector<std::array<int, 3>> panels;
  // face(origin fixed-axis value, axes u,v): emit quads with outward CCW order
  auto face = [&](int axis, int fixed, bool flip) {
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        std::array<int, 3> p00{}, p10{}, p01{}, p11{};
        auto set = [&](std::array<int, 3>& p, int u, int v) {
          p[axis] = fixed;
          p[(axis + 1) % 3] = u;
          p[(axis + 2) % 3] = v;
        };
        set(p00, i, j); set(p10, i + 1, j); set(p01, i, j + 1); set(p11, i + 1, j + 1);
        int a = vertex(p00[0], p00[1], p00[2]);
        int b = vertex(p10[0], p10[1], p10[2]);
        int c = vertex(p11[0], p11[1], p11[2]);
        int d = vertex(p01[0], p01[1], p01[2]);
        if (flip) std::swap(b, d);
        panels.push_back({a, b, c});
        panels.push_back({a, c, d});
      }
    }
  };
  // +axis faces keep (u,v) handedness, -axis faces flip
  face(0, n, false); face(0, 0, true);
  face(1, n, false); face(1, 0, true);
  face(2, n, false); face(2, 0, true);

  return SurfaceMesh::build(std::move(verts), std::move(panels));
}

SurfaceMesh scaled_mesh(const SurfaceMesh& mesh, double factor) {
  if (factor <= 0.0) throw InvalidMeshError("scale factor must be positive");
  std::vector<Vec3> verts = mesh.vertices;
  for (auto& v : verts) v *= factor;
  return SurfaceMesh::build(std::move(verts), mesh.panels);
}

SurfaceMesh load_off(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InvalidMeshError("cannot open mesh file: " + path.string());

  auto next_token_line = [&](std::string& line) {
    while (std::getline(in, line)) {
      const auto pos = line.find_first_not_of(" \t\r\n");
      if (pos == std::string::npos) continue;
      if (line[pos] == '#') continue;
      line = line.substr(pos);
      return true;
    }
    return false;
  };

  std::string line;
  if (!next_token_line(line)) throw InvalidMeshError("empty OFF file");
  if (line.rfind("OFF", 0) != 0) throw InvalidMeshError("missing OFF header");
  line = line.substr(3);

  long nv = -1, nf = -1, ne = -1;
  {
    std::istringstream ss(line);
    if (!(ss >> nv >> nf >> ne)) {
      if (!next_token_line(line)) throw InvalidMeshError("truncated OFF header");
      std::istringstream ss2(line);
      if (!(ss2 >> nv >> nf >> ne)) throw InvalidMeshError("bad OFF counts");
    }
  }
  if (nv <= 0 || nf <= 0) throw InvalidMeshError("bad OFF counts");

  std::vector<Vec3> verts;
  verts.reserve(nv);
  for (long i = 0; i < nv; ++i) {
    if (!next_token_line(line)) throw InvalidMeshError("truncated OFF vertices");
    std::istringstream ss(line);
    double x, y, z;
    if (!(ss >> x >> y >> z)) throw InvalidMeshError("bad OFF vertex line");
    verts.emplace_back(x, y, z);
  }

  std::vector<std::array<int, 3>> panels;
  panels.reserve(nf);
  for (long i = 0; i < nf; ++i) {
    if (!next_token_line(line)) throw InvalidMeshError("truncated OFF faces");
    std::istringstream ss(line);
    int count;
    if (!(ss >> count) || count < 3) throw InvalidMeshError("bad OFF face line");
    std::vector<int> idx(count);
    for (int& v : idx)
      if (!(ss >> v)) throw InvalidMeshError("bad OFF face indices");
    for (int t = 1; t + 1 < count; ++t)
      panels.push_back({idx[0], idx[t], idx[t + 1]});
  }

  return SurfaceMesh::build(std::move(verts), std::move(panels));
}

void save_off(const SurfaceMesh& mesh, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write mesh file: " + path.string());
  out << "OFF\n" << mesh.vertices.size() << ' ' << mesh.panels.size() << " 0\n";
  char buf[128];
  for (const auto& v : mesh.vertices) {
    std::snprintf(buf, sizeof(buf), "%.17g %.17g %.17g\n", v.x(), v.y(), v.z());
    out << buf;
  }
  for (const auto& p : mesh.panels)
    out << "3 " << p[0] << ' ' << p[1] << ' ' << p[2] << '\n';
}

}  // namespace scatmat
