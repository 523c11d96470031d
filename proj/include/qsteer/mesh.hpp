#pragma once

#include <array>
#include <string>
#include <vector>

#include "qsteer/ellipsoid.hpp"

// Triangulated geometry for external viewers: the operator's ellipsoid
// (or its degenerate disc/segment/point form) together with a reference
// unit sphere.

namespace qsteer {

struct TriMesh {
  std::vector<Vec3> vertices;
  std::vector<std::array<int, 3>> faces;
  std::vector<std::array<int, 2>> segments;  // used by the segment primitive
};

struct MeshScene {
  TriMesh ellipsoid;
  TriMesh sphere;
  std::string primitive;  // "ellipsoid", "disc", "segment" or "point"
};

/// UV sphere: `lon` slices around the axis, `lat` stacks pole to pole.
TriMesh unit_sphere_mesh(int lon, int lat);

/// Ellipsoid surface as the image of the unit sphere under nu -> c + T~ nu;
/// rank-deficient shapes emit a disc, segment or point primitive instead.
MeshScene build_mesh_scene(const EllipsoidRep& e, int lon = 64, int lat = 32);

}  // namespace qsteer
