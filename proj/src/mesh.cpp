#include "stereosim/mesh.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

#include "stereosim/errors.hpp"

namespace stereosim {

double MeshEntry::bounding_radius() const {
  if (kind == ShapeKind::AnalyticSphere) return sphere_radius;
  const Vec3 c = aabb_center();
  double r2 = 0.0;
  for (const Vec3& v : mesh.vertices) {
    r2 = std::max(r2, (v - c).squaredNorm());
  }
  return std::sqrt(r2);
}

namespace {

void compute_aabb(MeshEntry& entry) {
  if (entry.kind == ShapeKind::AnalyticSphere) {
    entry.aabb_min = Vec3::Constant(-entry.sphere_radius);
    entry.aabb_max = Vec3::Constant(entry.sphere_radius);
    return;
  }
  Vec3 lo = Vec3::Constant(std::numeric_limits<double>::infinity());
  Vec3 hi = -lo;
  for (const Vec3& v : entry.mesh.vertices) {
    lo = lo.cwiseMin(v);
    hi = hi.cwiseMax(v);
  }
  entry.aabb_min = lo;
  entry.aabb_max = hi;
}

}  // namespace

TriangleMesh make_box_mesh(const Vec3& h) {
  TriangleMesh m;
  for (int ix = 0; ix < 2; ++ix)
    for (int iy = 0; iy < 2; ++iy)
      for (int iz = 0; iz < 2; ++iz)
        m.vertices.push_back(Vec3((ix ? h.x() : -h.x()),
                                  (iy ? h.y() : -h.y()),
                                  (iz ? h.z() : -h.z())));
  // Vertex index: ix*4 + iy*2 + iz. Two triangles per face, outward winding.
  const int faces[6][4] = {
      {0, 1, 3, 2},  // -x
      {4, 6, 7, 5},  // +x
      {0, 4, 5, 1},  // -y
      {2, 3, 7, 6},  // +y
      {0, 2, 6, 4},  // -z
      {1, 5, 7, 3},  // +z
  };
  for (const auto& q : faces) {
    m.faces.push_back({q[0], q[1], q[2]});
    m.faces.push_back({q[0], q[2], q[3]});
  }
  return m;
}

TriangleMesh make_cylinder_mesh(double radius, double height, int segments) {
  TriangleMesh m;
  const double hz = height * 0.5;
  for (int i = 0; i < segments; ++i) {
    const double a = 2.0 * M_PI * i / segments;
    const double x = radius * std::cos(a);
    const double y = radius * std::sin(a);
    m.vertices.push_back(Vec3(x, y, -hz));
    m.vertices.push_back(Vec3(x, y, hz));
  }
  const int bottom_center = static_cast<int>(m.vertices.size());
  m.vertices.push_back(Vec3(0, 0, -hz));
  const int top_center = bottom_center + 1;
  m.vertices.push_back(Vec3(0, 0, hz));

  for (int i = 0; i < segments; ++i) {
    const int j = (i + 1) % segments;
    const int b0 = 2 * i, t0 = 2 * i + 1, b1 = 2 * j, t1 = 2 * j + 1;
    m.faces.push_back({b0, b1, t1});
    m.faces.push_back({b0, t1, t0});
    m.faces.push_back({bottom_center, b1, b0});
    m.faces.push_back({top_center, t0, t1});
  }
  return m;
}

TriangleMesh load_obj(const std::filesystem::path& file) {
  std::ifstream in(file);
  if (!in) {
    throw MeshLoadError("cannot open OBJ file: " + file.string());
  }
  TriangleMesh mesh;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ss(line);
    std::string tag;
    ss >> tag;
    if (tag == "v") {
      Vec3 v;
      if (!(ss >> v.x() >> v.y() >> v.z())) {
        throw MeshLoadError("malformed vertex in " + file.string() +
                            " at line " + std::to_string(line_no));
      }
      mesh.vertices.push_back(v);
    } else if (tag == "f") {
      std::vector<int> idx;
      std::string tok;
      while (ss >> tok) {
        // "i", "i/t", "i/t/n", "i//n"; negative indices are relative.
        const std::string first = tok.substr(0, tok.find('/'));
        long v = 0;
        try {
          v = std::stol(first);
        } catch (const std::exception&) {
          throw MeshLoadError("malformed face in " + file.string() +
                              " at line " + std::to_string(line_no));
        }
        if (v < 0) v = static_cast<long>(mesh.vertices.size()) + v + 1;
        if (v < 1 || v > static_cast<long>(mesh.vertices.size())) {
          throw MeshLoadError("face index out of range in " + file.string() +
                              " at line " + std::to_string(line_no));
        }
        idx.push_back(static_cast<int>(v - 1));
      }
      if (idx.size() < 3) {
        throw MeshLoadError("face with fewer than 3 vertices in " +
                            file.string() + " at line " +
                            std::to_string(line_no));
      }
      for (std::size_t k = 2; k < idx.size(); ++k) {
        mesh.faces.push_back({idx[0], idx[static_cast<int>(k) - 1],
                              idx[static_cast<int>(k)]});
      }
    }
    // vt/vn/usemtl/etc. are ignored.
  }
  if (mesh.vertices.empty() || mesh.faces.empty()) {
    throw MeshLoadError("OBJ file has no triangles: " + file.string());
  }
  return mesh;
}

MeshLibrary MeshLibrary::builtin() {
  MeshLibrary lib;

  MeshEntry sphere;
  sphere.name = "sphere";
  sphere.category = "sphere";
  sphere.kind = ShapeKind::AnalyticSphere;
  sphere.sphere_radius = 0.5;
  compute_aabb(sphere);
  lib.add(std::move(sphere));

  MeshEntry box;
  box.name = "box";
  box.category = "box";
  box.mesh = make_box_mesh();
  compute_aabb(box);
  lib.add(std::move(box));

  MeshEntry cyl;
  cyl.name = "cylinder";
  cyl.category = "cylinder";
  cyl.mesh = make_cylinder_mesh();
  compute_aabb(cyl);
  lib.add(std::move(cyl));

  return lib;
}

void MeshLibrary::add(MeshEntry entry) {
  entries_.push_back(std::move(entry));
}

void MeshLibrary::load_obj_file(const std::filesystem::path& file) {
  MeshEntry entry;
  entry.name = file.stem().string();
  entry.category = entry.name;
  entry.mesh = load_obj(file);
  compute_aabb(entry);
  add(std::move(entry));
}

void MeshLibrary::load_obj_directory(const std::filesystem::path& dir) {
  if (!std::filesystem::is_directory(dir)) {
    throw MeshLoadError("mesh directory does not exist: " + dir.string());
  }
  std::vector<std::filesystem::path> files;
  for (const auto& e : std::filesystem::directory_iterator(dir)) {
    if (e.is_regular_file() && e.path().extension() == ".obj") {
      files.push_back(e.path());
    }
  }
  std::sort(files.begin(), files.end());
  for (const auto& f : files) load_obj_file(f);
}

bool MeshLibrary::contains(const std::string& name) const {
  for (const auto& e : entries_) {
    if (e.name == name) return true;
  }
  return false;
}

const MeshEntry& MeshLibrary::by_name(const std::string& name) const {
  for (const auto& e : entries_) {
    if (e.name == name) return e;
  }
  throw MeshLoadError("mesh not found in library: " + name);
}

}  // namespace stereosim
