#include "qsteer/mesh.hpp"

#include <cmath>

namespace qsteer {

namespace {

constexpr double kPi = 3.14159265358979323846;

// Semiaxis lengths below this are treated as collapsed dimensions.
constexpr double kRankTol = 1e-7;

}  // namespace

TriMesh unit_sphere_mesh(int lon, int lat) {
  TriMesh mesh;
  mesh.vertices.push_back({0, 0, 1});
  for (int i = 1; i < lat; ++i) {
    const double theta = kPi * i / lat;
    const double st = std::sin(theta), ct = std::cos(theta);
    for (int j = 0; j < lon; ++j) {
      const double phi = 2.0 * kPi * j / lon;
      mesh.vertices.push_back({st * std::cos(phi), st * std::sin(phi), ct});
    }
  }
  mesh.vertices.push_back({0, 0, -1});
  const int south = static_cast<int>(mesh.vertices.size()) - 1;
  const auto ring = [&](int i, int j) { return 1 + (i - 1) * lon + (j % lon); };
  for (int j = 0; j < lon; ++j)
    mesh.faces.push_back({0, ring(1, j), ring(1, j + 1)});
  for (int i = 1; i < lat - 1; ++i)
    for (int j = 0; j < lon; ++j) {
      mesh.faces.push_back({ring(i, j), ring(i + 1, j), ring(i + 1, j + 1)});
      mesh.faces.push_back({ring(i, j), ring(i + 1, j + 1), ring(i, j + 1)});
    }
  for (int j = 0; j < lon; ++j)
    mesh.faces.push_back({south, ring(lat - 1, j + 1), ring(lat - 1, j)});
  return mesh;
}

MeshScene build_mesh_scene(const EllipsoidRep& e, int lon, int lat) {
  MeshScene scene;
  scene.sphere = unit_sphere_mesh(lon, lat);

  const auto axes = semiaxes(e);
  int rank = 0;
  for (const Semiaxis& ax : axes)
    if (ax.length > kRankTol) ++rank;

  if (e.singular_b || rank == 0) {
    scene.primitive = "point";
    scene.ellipsoid.vertices.push_back(e.c);
    return scene;
  }

  if (rank == 1) {
    scene.primitive = "segment";
    const Vec3 d = axes[0].direction * axes[0].length;
    scene.ellipsoid.vertices.push_back(e.c - d);
    scene.ellipsoid.vertices.push_back(e.c + d);
    scene.ellipsoid.segments.push_back({0, 1});
    return scene;
  }

  if (rank == 2) {
    // Filled ellipse in the support plane: centre fan plus ring quads.
    scene.primitive = "disc";
    TriMesh& m = scene.ellipsoid;
    const int rings = std::max(2, lat / 2);
    const Vec3 u = axes[0].direction * axes[0].length;
    const Vec3 v = axes[1].direction * axes[1].length;
    m.vertices.push_back(e.c);
    for (int i = 1; i <= rings; ++i) {
      const double rr = static_cast<double>(i) / rings;
      for (int j = 0; j < lon; ++j) {
        const double phi = 2.0 * kPi * j / lon;
        m.vertices.push_back(e.c + u * (rr * std::cos(phi)) +
                             v * (rr * std::sin(phi)));
      }
    }
    const auto ring = [&](int i, int j) { return 1 + (i - 1) * lon + (j % lon); };
    for (int j = 0; j < lon; ++j)
      m.faces.push_back({0, ring(1, j), ring(1, j + 1)});
    for (int i = 1; i < rings; ++i)
      for (int j = 0; j < lon; ++j) {
        m.faces.push_back({ring(i, j), ring(i + 1, j), ring(i + 1, j + 1)});
        m.faces.push_back({ring(i, j), ring(i + 1, j + 1), ring(i, j + 1)});
      }
    return scene;
  }

  scene.primitive = "ellipsoid";
  scene.ellipsoid = unit_sphere_mesh(lon, lat);
  for (Vec3& v : scene.ellipsoid.vertices) v = e.c + e.T_tilde * v;
  return scene;
}

}  // namespace qsteer
