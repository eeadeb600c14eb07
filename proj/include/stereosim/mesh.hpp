#pragma once

#include <array>
#include <filesystem>
#include <string>
#include <vector>

#include "stereosim/camera.hpp"

namespace stereosim {

struct TriangleMesh {
  std::vector<Vec3> vertices;
  std::vector<std::array<int, 3>> faces;
};

// Per-object normalization mapping mesh coordinates into [0,1]^3:
// nocs = (p - center) / extent + 0.5, with extent the AABB diagonal.
struct NocsFrame {
  Vec3 center = Vec3::Zero();
  double extent = 1.0;

  Vec3 to_nocs(const Vec3& mesh_point) const {
    return (mesh_point - center) / extent + Vec3::Constant(0.5);
  }
  Vec3 from_nocs(const Vec3& nocs) const {
    return (nocs - Vec3::Constant(0.5)) * extent + center;
  }
};

enum class ShapeKind { TriMesh, AnalyticSphere };

struct MeshEntry {
  std::string name;
  std::string category;
  ShapeKind kind = ShapeKind::TriMesh;
  TriangleMesh mesh;       // empty for the analytic sphere
  double sphere_radius = 0.0;
  Vec3 aabb_min = Vec3::Zero();
  Vec3 aabb_max = Vec3::Zero();
  Vec3 mean_color = Vec3(0.8, 0.8, 0.8);  // stand-in for texture maps

  Vec3 aabb_center() const { return 0.5 * (aabb_min + aabb_max); }
  Vec3 aabb_size() const { return aabb_max - aabb_min; }
  double bounding_radius() const;  // about the AABB center, mesh units
  NocsFrame nocs_frame() const {
    return {aabb_center(), aabb_size().norm()};
  }
};

// Built-in primitives plus any OBJ meshes loaded from a directory.
class MeshLibrary {
 public:
  // "sphere" (analytic, radius 0.5), "box" (unit cube), "cylinder"
  // (radius 0.5, height 1).
  static MeshLibrary builtin();

  void add(MeshEntry entry);
  void load_obj_directory(const std::filesystem::path& dir);
  void load_obj_file(const std::filesystem::path& file);

  bool empty() const { return entries_.empty(); }
  std::size_t size() const { return entries_.size(); }
  bool contains(const std::string& name) const;
  const MeshEntry& by_name(const std::string& name) const;
  const MeshEntry& at(std::size_t i) const { return entries_[i]; }
  const std::vector<MeshEntry>& entries() const { return entries_; }

 private:
  std::vector<MeshEntry> entries_;
};

TriangleMesh make_box_mesh(const Vec3& half_extents = Vec3(0.5, 0.5, 0.5));
TriangleMesh make_cylinder_mesh(double radius = 0.5, double height = 1.0,
                                int segments = 48);
TriangleMesh load_obj(const std::filesystem::path& file);

}  // namespace stereosim
