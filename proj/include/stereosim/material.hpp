#pragma once

#include <string>
#include <vector>

#include "stereosim/camera.hpp"
#include "stereosim/rng.hpp"

namespace stereosim {

enum class MaterialKind { Diffuse, Specular, Transparent };

const char* to_string(MaterialKind kind);
MaterialKind material_kind_from_string(const std::string& s);

// Three-lobe surface description: Lambertian diffuse, GGX-style specular
// (roughness/metallic/specular_weight), Fresnel-weighted transmission (ior).
struct Material {
  MaterialKind kind = MaterialKind::Diffuse;
  Vec3 base_color = Vec3(0.8, 0.8, 0.8);
  double roughness = 0.5;
  double metallic = 0.0;
  double specular_weight = 0.3;
  double ior = 1.45;
  double transmission = 0.0;
  double texture_mix_ratio = 0.0;
  double checker_scale = 0.0;  // 0 = no procedural checker

  bool valid() const;
};

struct Interval {
  double lo = 0.0;
  double hi = 0.0;

  Interval() = default;
  Interval(double l, double h) : lo(l), hi(h) {}

  bool ordered() const { return lo <= hi; }
  bool contains(double v) const { return v >= lo && v <= hi; }
  double sample(RngStream& rng) const {
    return lo == hi ? lo : rng.uniform(lo, hi);
  }
};

// A palette entry: every BSDF parameter carries its own jitter interval.
struct MaterialTemplate {
  std::string name;
  MaterialKind kind = MaterialKind::Diffuse;
  Vec3 base_color_lo = Vec3(0.8, 0.8, 0.8);
  Vec3 base_color_hi = Vec3(0.8, 0.8, 0.8);
  Interval roughness{0.5, 0.5};
  Interval metallic{0.0, 0.0};
  Interval specular_weight{0.3, 0.3};
  Interval ior{1.45, 1.45};
  Interval transmission{0.0, 0.0};
  double checker_scale = 0.0;

  Material sample(RngStream& rng) const;
};

// Built-in palettes: 27 specular, 4 transparent, 36 diffuse templates.
std::vector<MaterialTemplate> default_specular_palette();
std::vector<MaterialTemplate> default_transparent_palette();
std::vector<MaterialTemplate> default_diffuse_palette();
std::vector<MaterialTemplate> default_floor_palette();

}  // namespace stereosim
