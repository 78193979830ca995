#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "geom/vec3.hpp"

namespace pvu {

struct PointCloud {
    std::vector<Vec3> points;

    std::size_t size() const { return points.size(); }
    bool empty() const { return points.empty(); }
};

// Faces may be non-manifold and non-watertight; open surfaces are first-class.
struct TriangleMesh {
    std::vector<Vec3> vertices;
    std::vector<std::array<int, 3>> faces;

    std::size_t vertex_count() const { return vertices.size(); }
    std::size_t face_count() const { return faces.size(); }
};

// Uniform scale about a center: normalized = (p - offset) * scale.
struct NormalizeTransform {
    double scale = 1.0;
    Vec3 offset{};

    Vec3 apply(const Vec3& p) const { return (p - offset) * scale; }
    Vec3 invert(const Vec3& q) const { return q / scale + offset; }
};

Box3 bounds(const PointCloud& cloud);
Box3 bounds(const TriangleMesh& mesh);

double triangle_area(const Vec3& a, const Vec3& b, const Vec3& c);

// Drops zero-area faces and faces with repeated vertex indices.
// Returns the number of faces removed.
std::size_t drop_degenerate_faces(TriangleMesh& mesh, double area_eps = 1e-14);

// Scales the longest bounding-box axis to length 1, centered at the origin,
// so every coordinate lands in [-0.5, 0.5]. Throws DataError on empty or
// zero-extent input.
NormalizeTransform normalize_to_unit_cube(PointCloud& cloud);
NormalizeTransform normalize_to_unit_cube(TriangleMesh& mesh);

// Applies a precomputed transform (used to put input clouds into the frame of
// their normalized mesh).
void apply_transform(PointCloud& cloud, const NormalizeTransform& t);

bool is_unit_cube_normalized(const PointCloud& cloud, double eps = 1e-9);

// Open-surface probe: counts edges used by exactly one face.
std::size_t boundary_edge_count(const TriangleMesh& mesh);

}  // namespace pvu
