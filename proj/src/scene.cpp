#include "stereosim/scene.hpp"

#include <algorithm>
#include <cmath>

#include "stereosim/errors.hpp"

namespace stereosim {

namespace {

constexpr double kDeg2Rad = 0.017453292519943295;

Mat3 rot_z(double angle) {
  const double c = std::cos(angle), s = std::sin(angle);
  Mat3 r;
  r << c, -s, 0, s, c, 0, 0, 0, 1;
  return r;
}

Mat3 rot_x(double angle) {
  const double c = std::cos(angle), s = std::sin(angle);
  Mat3 r;
  r << 1, 0, 0, 0, c, -s, 0, s, c;
  return r;
}

// Lowest point of the scaled, rotated shape; exact for the analytic sphere
// and for mesh vertices.
double resting_height(const MeshEntry& entry, const Mat3& rotation,
                      double scale) {
  if (entry.kind == ShapeKind::AnalyticSphere) {
    const Vec3 c = rotation * entry.aabb_center();
    return -(c.z() - entry.sphere_radius) * scale;
  }
  double min_z = std::numeric_limits<double>::infinity();
  for (const Vec3& v : entry.mesh.vertices) {
    min_z = std::min(min_z, (rotation * v).z());
  }
  return -min_z * scale;
}

}  // namespace

const std::vector<MaterialTemplate>& RandomizationConfig::palette(
    MaterialKind kind) const {
  switch (kind) {
    case MaterialKind::Specular:
      return specular_palette;
    case MaterialKind::Transparent:
      return transparent_palette;
    case MaterialKind::Diffuse:
      return diffuse_palette;
  }
  return diffuse_palette;
}

void RandomizationConfig::validate() const {
  if (!object_count.ordered() || object_count.lo < 0) {
    throw ConfigError("object_count range invalid");
  }
  if (!scale.ordered() || scale.lo <= 0) {
    throw ConfigError("scale range invalid");
  }
  const double wsum = material_kind_weights[0] + material_kind_weights[1] +
                      material_kind_weights[2];
  if (std::abs(wsum - 1.0) > 1e-9) {
    throw ConfigError("material_kind_weights must sum to 1");
  }
  for (double w : material_kind_weights) {
    if (w < 0) throw ConfigError("material_kind_weights must be >= 0");
  }
  if (!env_intensity.ordered() || env_intensity.lo < 0) {
    throw ConfigError("env_intensity range invalid");
  }
  if (!camera.distance.ordered() || camera.distance.lo <= 0 ||
      !camera.elevation_deg.ordered() || !camera.azimuth_deg.ordered()) {
    throw ConfigError("camera ranges invalid");
  }
  if (placement_radius <= 0) throw ConfigError("placement_radius must be > 0");
  if (!texture_mix.ordered() || texture_mix.lo < 0 || texture_mix.hi > 1) {
    throw ConfigError("texture_mix range invalid");
  }
}

Material sample_material(const RandomizationConfig& config, MaterialKind kind,
                         RngStream& rng) {
  const auto& palette = config.palette(kind);
  if (palette.empty()) {
    throw EmptyPalette(std::string("no material templates for kind ") +
                       to_string(kind));
  }
  const auto& tmpl = palette[rng.uniform_index(palette.size())];
  Material m = tmpl.sample(rng);

  // Enforce type invariants regardless of template content.
  for (int i = 0; i < 3; ++i) {
    m.base_color[i] = std::clamp(m.base_color[i], 0.0, 1.0);
  }
  m.roughness = std::clamp(m.roughness, 0.0, 1.0);
  m.metallic = std::clamp(m.metallic, 0.0, 1.0);
  m.specular_weight = std::clamp(m.specular_weight, 0.0, 1.0);
  m.transmission = std::clamp(m.transmission, 0.0, 1.0);
  m.ior = std::clamp(m.ior, 1.0 + 1e-6, 3.0);
  if (kind == MaterialKind::Diffuse) {
    m.transmission = 0.0;
    m.metallic = std::min(m.metallic, 0.2);
  }
  if (kind == MaterialKind::Transparent && m.transmission <= 0.0) {
    m.transmission = 0.5;
  }
  return m;
}

SceneObject assign_material(SceneObject obj, const Material& m, double mix,
                            const Vec3& texture_mean_color) {
  obj.material = m;
  obj.material.base_color = mix * texture_mean_color + (1.0 - mix) * m.base_color;
  obj.material.texture_mix_ratio = mix;
  return obj;
}

BoundingSphere object_bounding_sphere(const SceneObject& obj,
                                      const MeshEntry& entry) {
  BoundingSphere s;
  s.center = obj.pose.apply(obj.scale * entry.aabb_center());
  s.radius = obj.scale * entry.bounding_radius();
  return s;
}

NocsToWorld nocs_to_world(const SceneObject& obj, const MeshEntry& entry) {
  const NocsFrame frame = obj.nocs_frame;
  NocsToWorld out;
  out.scale = obj.scale * frame.extent;
  out.rotation = obj.pose.rotation;
  out.translation =
      obj.pose.translation +
      obj.scale * (obj.pose.rotation *
                   (frame.center - Vec3::Constant(0.5 * frame.extent)));
  out.extents = entry.aabb_size() / frame.extent;
  return out;
}

Vec3 scene_centroid(const SceneDescription& scene) {
  if (scene.objects.empty()) return Vec3::Zero();
  Vec3 c = Vec3::Zero();
  for (const auto& o : scene.objects) c += o.pose.translation;
  return c / static_cast<double>(scene.objects.size());
}

SceneDescription sample_scene(const RandomizationConfig& config,
                              const MeshLibrary& library, std::uint64_t seed) {
  config.validate();
  if (library.empty()) {
    throw MeshLoadError("sample_scene: mesh library is empty");
  }

  std::vector<const MeshEntry*> pool;
  if (config.mesh_ids.empty()) {
    for (const auto& e : library.entries()) pool.push_back(&e);
  } else {
    for (const auto& id : config.mesh_ids) pool.push_back(&library.by_name(id));
  }

  RngStream rng(hash_combine(seed, 0x5343454e45763141ull));

  SceneDescription scene;
  scene.rng_seed = seed;

  const int n_target =
      rng.uniform_int(static_cast<int>(config.object_count.lo),
                      static_cast<int>(config.object_count.hi));

  struct Placed {
    BoundingSphere sphere;
  };
  std::vector<Placed> placed;

  for (int i = 0; i < n_target; ++i) {
    const MeshEntry& entry = *pool[rng.uniform_index(pool.size())];
    const double scale = config.scale.sample(rng);

    const double u = rng.uniform();
    MaterialKind kind;
    if (u < config.material_kind_weights[0])
      kind = MaterialKind::Specular;
    else if (u < config.material_kind_weights[0] + config.material_kind_weights[1])
      kind = MaterialKind::Transparent;
    else
      kind = MaterialKind::Diffuse;

    const Material mat = sample_material(config, kind, rng);
    const double mix = config.texture_mix.sample(rng);

    SceneObject obj;
    obj.mesh_id = entry.name;
    obj.scale = scale;
    obj.category_label = entry.category;
    obj.instance_id = static_cast<int>(scene.objects.size()) + 1;
    obj.nocs_frame = entry.nocs_frame();
    obj = assign_material(std::move(obj), mat, mix, entry.mean_color);

    bool ok = false;
    for (int attempt = 0; attempt < config.max_place_attempts; ++attempt) {
      const double yaw = rng.uniform(0.0, 2.0 * M_PI);
      const bool face_down = rng.uniform() < 0.3;
      Mat3 rot = rot_z(yaw);
      if (face_down) rot = rot * rot_x(M_PI);

      const double rr = config.placement_radius * std::sqrt(rng.uniform());
      const double theta = rng.uniform(0.0, 2.0 * M_PI);
      Vec3 t(rr * std::cos(theta), rr * std::sin(theta),
             resting_height(entry, rot, scale));

      obj.pose.rotation = rot;
      obj.pose.translation = t;

      const BoundingSphere sphere = object_bounding_sphere(obj, entry);
      bool collides = false;
      for (const Placed& p : placed) {
        const double min_dist =
            sphere.radius + p.sphere.radius -
            0.1 * std::min(sphere.radius, p.sphere.radius);
        if ((sphere.center - p.sphere.center).norm() < min_dist) {
          collides = true;
          break;
        }
      }
      if (!collides) {
        placed.push_back({sphere});
        ok = true;
        break;
      }
    }
    if (ok) {
      scene.objects.push_back(std::move(obj));
    }
    // Unplaceable objects are dropped; the scene just ends up smaller.
  }

  if (scene.objects.empty() && n_target > 0) {
    throw PlacementOverflow("sample_scene: no object could be placed");
  }

  scene.env_light.intensity = config.env_intensity.sample(rng);
  for (int i = 0; i < 3; ++i) {
    scene.env_light.color[i] =
        Interval(config.env_color_lo[i], config.env_color_hi[i]).sample(rng);
  }

  if (config.floor_palette.empty()) {
    scene.floor.enabled = false;
  } else {
    scene.floor.enabled = true;
    const auto& tmpl =
        config.floor_palette[rng.uniform_index(config.floor_palette.size())];
    scene.floor.material = tmpl.sample(rng);
  }
  return scene;
}

RigidPose sample_camera(const CameraRanges& ranges, const Vec3& target,
                        RngStream& rng) {
  const double d = ranges.distance.sample(rng);
  const double elev = ranges.elevation_deg.sample(rng) * kDeg2Rad;
  const double azim = ranges.azimuth_deg.sample(rng) * kDeg2Rad;

  const Vec3 offset(d * std::cos(elev) * std::cos(azim),
                    d * std::cos(elev) * std::sin(azim), d * std::sin(elev));
  const Vec3 position = target + offset;
  const Vec3 forward = (target - position).normalized();

  // x right, y down, z forward, with world +z as "up".
  Vec3 x_axis = forward.cross(Vec3(0, 0, 1));
  if (x_axis.norm() < 1e-9) x_axis = Vec3(1, 0, 0);
  x_axis.normalize();
  const Vec3 y_axis = forward.cross(x_axis).normalized();

  RigidPose pose;
  pose.rotation.col(0) = x_axis;
  pose.rotation.col(1) = y_axis;
  pose.rotation.col(2) = forward;
  pose.translation = position;
  return pose;
}

}  // namespace stereosim
