#include "stereosim/material.hpp"

#include <algorithm>

#include "stereosim/errors.hpp"

namespace stereosim {

const char* to_string(MaterialKind kind) {
  switch (kind) {
    case MaterialKind::Diffuse:
      return "diffuse";
    case MaterialKind::Specular:
      return "specular";
    case MaterialKind::Transparent:
      return "transparent";
  }
  return "diffuse";
}

MaterialKind material_kind_from_string(const std::string& s) {
  if (s == "diffuse") return MaterialKind::Diffuse;
  if (s == "specular") return MaterialKind::Specular;
  if (s == "transparent") return MaterialKind::Transparent;
  throw ConfigError("unknown material kind: " + s);
}

bool Material::valid() const {
  auto in01 = [](double v) { return v >= 0.0 && v <= 1.0; };
  for (int i = 0; i < 3; ++i) {
    if (!in01(base_color[i])) return false;
  }
  if (!in01(roughness) || !in01(metallic) || !in01(specular_weight) ||
      !in01(transmission) || !in01(texture_mix_ratio))
    return false;
  if (!(ior > 1.0 && ior <= 3.0)) return false;
  if (kind == MaterialKind::Transparent && !(transmission > 0.0)) return false;
  if (kind == MaterialKind::Diffuse &&
      (transmission != 0.0 || metallic > 0.2))
    return false;
  return true;
}

Material MaterialTemplate::sample(RngStream& rng) const {
  Material m;
  m.kind = kind;
  for (int i = 0; i < 3; ++i) {
    m.base_color[i] = Interval(base_color_lo[i], base_color_hi[i]).sample(rng);
  }
  m.roughness = roughness.sample(rng);
  m.metallic = metallic.sample(rng);
  m.specular_weight = specular_weight.sample(rng);
  m.ior = ior.sample(rng);
  m.transmission = transmission.sample(rng);
  m.checker_scale = checker_scale;
  return m;
}

namespace {

MaterialTemplate make_template(std::string name, MaterialKind kind,
                               Vec3 color_lo, Vec3 color_hi,
                               Interval roughness, Interval metallic,
                               Interval specular_weight,
                               Interval ior = {1.45, 1.45},
                               Interval transmission = {0.0, 0.0},
                               double checker_scale = 0.0) {
  MaterialTemplate t;
  t.name = std::move(name);
  t.kind = kind;
  t.base_color_lo = color_lo;
  t.base_color_hi = color_hi;
  t.roughness = roughness;
  t.metallic = metallic;
  t.specular_weight = specular_weight;
  t.ior = ior;
  t.transmission = transmission;
  t.checker_scale = checker_scale;
  return t;
}

}  // namespace

std::vector<MaterialTemplate> default_specular_palette() {
  std::vector<MaterialTemplate> p;
  auto metal = [&](std::string name, Vec3 lo, Vec3 hi, Interval rough) {
    p.push_back(make_template(std::move(name), MaterialKind::Specular, lo, hi,
                              rough, {0.85, 1.0}, {0.8, 1.0}));
  };
  // Metals.
  metal("aluminum", {0.85, 0.86, 0.88}, {0.93, 0.94, 0.96}, {0.05, 0.25});
  metal("steel", {0.60, 0.60, 0.62}, {0.72, 0.72, 0.75}, {0.05, 0.30});
  metal("chrome", {0.88, 0.89, 0.90}, {0.96, 0.97, 0.98}, {0.0, 0.08});
  metal("copper", {0.88, 0.48, 0.34}, {0.98, 0.58, 0.44}, {0.05, 0.30});
  metal("brass", {0.83, 0.68, 0.30}, {0.93, 0.78, 0.42}, {0.08, 0.30});
  metal("gold", {0.95, 0.72, 0.26}, {1.0, 0.82, 0.40}, {0.05, 0.25});
  metal("titanium", {0.54, 0.50, 0.46}, {0.66, 0.62, 0.58}, {0.10, 0.35});
  metal("brushed_nickel", {0.62, 0.60, 0.58}, {0.74, 0.72, 0.70},
        {0.25, 0.45});
  metal("tin", {0.70, 0.72, 0.74}, {0.80, 0.82, 0.84}, {0.15, 0.40});

  auto glossy = [&](std::string name, Vec3 lo, Vec3 hi,
                    Interval rough = {0.03, 0.18}) {
    p.push_back(make_template(std::move(name), MaterialKind::Specular, lo, hi,
                              rough, {0.0, 0.1}, {0.7, 1.0}));
  };
  // Porcelain and ceramics.
  glossy("porcelain_white", {0.88, 0.88, 0.86}, {0.98, 0.98, 0.96});
  glossy("porcelain_cream", {0.90, 0.86, 0.74}, {0.98, 0.94, 0.84});
  glossy("ceramic_blue", {0.16, 0.28, 0.60}, {0.28, 0.42, 0.78});
  glossy("ceramic_black", {0.03, 0.03, 0.04}, {0.10, 0.10, 0.12});
  glossy("ceramic_red", {0.55, 0.08, 0.08}, {0.75, 0.18, 0.16});
  // Clean plastic.
  glossy("plastic_white", {0.85, 0.85, 0.85}, {0.97, 0.97, 0.97});
  glossy("plastic_red", {0.60, 0.05, 0.05}, {0.85, 0.15, 0.15});
  glossy("plastic_green", {0.05, 0.45, 0.10}, {0.15, 0.70, 0.25});
  glossy("plastic_blue", {0.05, 0.12, 0.50}, {0.15, 0.30, 0.80});
  glossy("plastic_yellow", {0.80, 0.65, 0.05}, {0.95, 0.85, 0.18});
  glossy("plastic_orange", {0.85, 0.38, 0.04}, {0.97, 0.52, 0.12});
  // Paint and coated surfaces.
  glossy("paint_gloss_white", {0.86, 0.87, 0.88}, {0.96, 0.97, 0.98});
  glossy("paint_gloss_black", {0.02, 0.02, 0.02}, {0.08, 0.08, 0.09});
  glossy("car_paint_red", {0.48, 0.04, 0.06}, {0.70, 0.12, 0.16});
  glossy("car_paint_blue", {0.04, 0.10, 0.42}, {0.12, 0.22, 0.66});
  glossy("lacquer_wood", {0.35, 0.20, 0.08}, {0.55, 0.34, 0.16},
         {0.08, 0.22});
  glossy("enamel_teal", {0.04, 0.38, 0.40}, {0.12, 0.54, 0.58});
  glossy("glazed_tile", {0.70, 0.74, 0.78}, {0.86, 0.90, 0.94});
  return p;  // 27 templates
}

std::vector<MaterialTemplate> default_transparent_palette() {
  std::vector<MaterialTemplate> p;
  auto glass = [&](std::string name, Vec3 lo, Vec3 hi, Interval ior,
                   Interval transmission, Interval rough = {0.0, 0.04}) {
    p.push_back(make_template(std::move(name), MaterialKind::Transparent, lo,
                              hi, rough, {0.0, 0.0}, {0.5, 1.0}, ior,
                              transmission));
  };
  glass("clear_glass", {0.92, 0.94, 0.95}, {1.0, 1.0, 1.0}, {1.45, 1.55},
        {0.9, 1.0});
  glass("clear_plastic", {0.90, 0.92, 0.92}, {1.0, 1.0, 1.0}, {1.30, 1.50},
        {0.85, 1.0});
  glass("tinted_glass", {0.55, 0.70, 0.62}, {0.80, 0.92, 0.85}, {1.45, 1.55},
        {0.75, 0.95});
  glass("frosted_glass", {0.88, 0.90, 0.92}, {0.98, 1.0, 1.0}, {1.40, 1.55},
        {0.7, 0.9}, {0.08, 0.25});
  return p;  // 4 templates
}

std::vector<MaterialTemplate> default_diffuse_palette() {
  std::vector<MaterialTemplate> p;
  auto matte = [&](std::string name, Vec3 lo, Vec3 hi,
                   Interval rough = {0.55, 0.95}, double checker = 0.0) {
    p.push_back(make_template(std::move(name), MaterialKind::Diffuse, lo, hi,
                              rough, {0.0, 0.0}, {0.0, 0.15}, {1.45, 1.45},
                              {0.0, 0.0}, checker));
  };
  // Rubber.
  matte("rubber_black", {0.02, 0.02, 0.02}, {0.08, 0.08, 0.08});
  matte("rubber_gray", {0.25, 0.25, 0.26}, {0.45, 0.45, 0.46});
  matte("rubber_red", {0.40, 0.05, 0.05}, {0.60, 0.12, 0.12});
  // Leather.
  matte("leather_brown", {0.28, 0.16, 0.08}, {0.45, 0.28, 0.16});
  matte("leather_black", {0.03, 0.03, 0.03}, {0.10, 0.09, 0.09});
  matte("leather_tan", {0.55, 0.40, 0.24}, {0.72, 0.56, 0.38});
  // Wood.
  matte("wood_pine", {0.62, 0.48, 0.30}, {0.78, 0.64, 0.44}, {0.5, 0.85});
  matte("wood_oak", {0.48, 0.34, 0.20}, {0.64, 0.48, 0.32}, {0.5, 0.85});
  matte("wood_walnut", {0.28, 0.18, 0.10}, {0.42, 0.28, 0.18}, {0.5, 0.85});
  matte("wood_birch", {0.72, 0.62, 0.46}, {0.86, 0.76, 0.60}, {0.5, 0.85});
  // Fabric.
  matte("fabric_canvas", {0.60, 0.56, 0.46}, {0.78, 0.74, 0.64});
  matte("fabric_denim", {0.12, 0.20, 0.38}, {0.22, 0.32, 0.54});
  matte("fabric_felt_green", {0.06, 0.30, 0.10}, {0.14, 0.44, 0.20});
  matte("fabric_wool_gray", {0.38, 0.38, 0.40}, {0.56, 0.56, 0.58});
  matte("fabric_red", {0.48, 0.08, 0.10}, {0.66, 0.16, 0.20});
  // Coarse plastic.
  matte("plastic_matte_white", {0.78, 0.78, 0.78}, {0.92, 0.92, 0.92});
  matte("plastic_matte_black", {0.03, 0.03, 0.03}, {0.10, 0.10, 0.10});
  matte("plastic_matte_blue", {0.08, 0.16, 0.45}, {0.18, 0.30, 0.65});
  matte("plastic_matte_green", {0.08, 0.40, 0.14}, {0.18, 0.58, 0.26});
  matte("plastic_matte_yellow", {0.75, 0.62, 0.10}, {0.90, 0.78, 0.22});
  // Paper and cardboard.
  matte("paper_white", {0.82, 0.82, 0.80}, {0.95, 0.95, 0.93});
  matte("paper_kraft", {0.58, 0.44, 0.28}, {0.74, 0.60, 0.42});
  matte("cardboard", {0.50, 0.38, 0.24}, {0.66, 0.52, 0.36});
  matte("newsprint", {0.68, 0.68, 0.66}, {0.82, 0.82, 0.80});
  // Clay, stone, misc.
  matte("clay_terracotta", {0.58, 0.30, 0.18}, {0.74, 0.44, 0.30});
  matte("clay_gray", {0.42, 0.42, 0.40}, {0.58, 0.58, 0.56});
  matte("stone_granite", {0.34, 0.34, 0.35}, {0.52, 0.52, 0.54});
  matte("stone_sand", {0.66, 0.58, 0.42}, {0.82, 0.74, 0.58});
  matte("chalk_white", {0.84, 0.84, 0.84}, {0.96, 0.96, 0.96});
  matte("cork", {0.56, 0.42, 0.26}, {0.70, 0.56, 0.40});
  matte("sponge_yellow", {0.78, 0.68, 0.18}, {0.92, 0.82, 0.32});
  matte("foam_gray", {0.30, 0.30, 0.32}, {0.48, 0.48, 0.50});
  // Checkered variants for extra high-frequency texture.
  matte("checker_paper", {0.70, 0.70, 0.70}, {0.92, 0.92, 0.92},
        {0.55, 0.95}, 80.0);
  matte("checker_cloth_red", {0.50, 0.10, 0.10}, {0.70, 0.20, 0.20},
        {0.55, 0.95}, 60.0);
  matte("checker_cloth_blue", {0.10, 0.16, 0.48}, {0.20, 0.28, 0.66},
        {0.55, 0.95}, 60.0);
  matte("checker_wood", {0.52, 0.38, 0.22}, {0.68, 0.54, 0.36},
        {0.5, 0.85}, 40.0);
  return p;  // 36 templates
}

std::vector<MaterialTemplate> default_floor_palette() {
  std::vector<MaterialTemplate> p;
  auto floor = [&](std::string name, Vec3 lo, Vec3 hi, Interval rough,
                   Interval spec, double checker) {
    p.push_back(make_template(std::move(name), MaterialKind::Diffuse, lo, hi,
                              rough, {0.0, 0.0}, spec, {1.45, 1.45},
                              {0.0, 0.0}, checker));
  };
  floor("floor_wood", {0.48, 0.34, 0.20}, {0.70, 0.54, 0.36}, {0.4, 0.8},
        {0.05, 0.2}, 12.0);
  floor("floor_marble", {0.70, 0.70, 0.72}, {0.90, 0.90, 0.92}, {0.15, 0.4},
        {0.1, 0.3}, 8.0);
  floor("floor_tiles", {0.55, 0.58, 0.60}, {0.78, 0.80, 0.84}, {0.2, 0.5},
        {0.05, 0.25}, 16.0);
  floor("floor_concrete", {0.40, 0.40, 0.42}, {0.60, 0.60, 0.62}, {0.6, 0.95},
        {0.0, 0.1}, 6.0);
  floor("floor_linoleum", {0.52, 0.46, 0.36}, {0.72, 0.66, 0.54}, {0.35, 0.7},
        {0.05, 0.2}, 10.0);
  floor("floor_carpet", {0.30, 0.26, 0.24}, {0.50, 0.46, 0.42}, {0.7, 1.0},
        {0.0, 0.05}, 0.0);
  return p;
}

}  // namespace stereosim
