#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "stereosim/camera.hpp"
#include "stereosim/material.hpp"
#include "stereosim/mesh.hpp"
#include "stereosim/rng.hpp"

namespace stereosim {

struct SceneObject {
  std::string mesh_id;
  RigidPose pose;          // object -> world
  double scale = 1.0;
  Material material;
  std::string category_label;
  int instance_id = 0;     // positive, unique within a scene
  NocsFrame nocs_frame;
};

struct EnvironmentLight {
  Vec3 color = Vec3(1.0, 1.0, 1.0);
  double intensity = 1.0;
};

struct FloorSpec {
  bool enabled = true;
  Material material;
};

struct SceneDescription {
  std::vector<SceneObject> objects;
  EnvironmentLight env_light;
  FloorSpec floor;
  std::uint64_t rng_seed = 0;
};

struct CameraRanges {
  Interval distance{0.7, 1.1};        // meters from the scene centroid
  Interval elevation_deg{25.0, 65.0}; // above the horizontal plane
  Interval azimuth_deg{0.0, 360.0};
};

struct RandomizationConfig {
  Interval object_count{6, 10};
  Interval scale{0.08, 0.16};
  std::vector<MaterialTemplate> specular_palette = default_specular_palette();
  std::vector<MaterialTemplate> transparent_palette =
      default_transparent_palette();
  std::vector<MaterialTemplate> diffuse_palette = default_diffuse_palette();
  // Probabilities for {specular, transparent, diffuse}; must sum to 1.
  std::array<double, 3> material_kind_weights{0.4, 0.2, 0.4};
  Interval env_intensity{0.4, 1.2};
  Vec3 env_color_lo = Vec3(0.85, 0.85, 0.85);
  Vec3 env_color_hi = Vec3(1.0, 1.0, 1.0);
  CameraRanges camera;
  std::vector<MaterialTemplate> floor_palette = default_floor_palette();
  double placement_radius = 0.35;  // meters around the scene origin
  Interval texture_mix{0.0, 0.6};
  int max_place_attempts = 1000;
  std::vector<std::string> mesh_ids;  // empty = whole library
  std::string mesh_directory;         // extra OBJ meshes, optional

  const std::vector<MaterialTemplate>& palette(MaterialKind kind) const;
  void validate() const;  // throws ConfigError
};

// Draws one material from the kind's palette, jittering every parameter
// within its template interval.
Material sample_material(const RandomizationConfig& config, MaterialKind kind,
                         RngStream& rng);

// Blends the object's texture mean color into the palette material:
// base_color = mix * texture_mean + (1 - mix) * material.base_color.
SceneObject assign_material(SceneObject obj, const Material& m, double mix,
                            const Vec3& texture_mean_color);

// Deterministic scene draw: object set, materials, resting poses with
// bounding-sphere rejection, floor and lighting.
SceneDescription sample_scene(const RandomizationConfig& config,
                              const MeshLibrary& library, std::uint64_t seed);

// Camera looks at `target` from a randomized distance/elevation/azimuth.
RigidPose sample_camera(const CameraRanges& ranges, const Vec3& target,
                        RngStream& rng);

Vec3 scene_centroid(const SceneDescription& scene);

// World-space bounding sphere of a placed object.
struct BoundingSphere {
  Vec3 center;
  double radius;
};
BoundingSphere object_bounding_sphere(const SceneObject& obj,
                                      const MeshEntry& entry);

// Similarity transform taking NOCS coordinates of `obj` to world space.
// Used as the ground-truth pose for category-level evaluation.
struct NocsToWorld {
  double scale;
  Mat3 rotation;
  Vec3 translation;
  Vec3 extents;  // box dimensions in NOCS units
};
NocsToWorld nocs_to_world(const SceneObject& obj, const MeshEntry& entry);

}  // namespace stereosim
