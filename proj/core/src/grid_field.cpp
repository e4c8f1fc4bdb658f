#include "rcbf/grid_field.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <cstring>
#include <fstream>

#include "rcbf/errors.hpp"

static_assert(std::endian::native == std::endian::little,
              "field files are little-endian");

namespace rcbf {

namespace {
constexpr char kMagic[8] = {'R', 'C', 'B', 'F', 'P', 'S', 'F', '1'};
constexpr std::uint32_t kVersion = 1;
}  // namespace

bool GridField::contains(const Eigen::Vector2d& p, double margin) const {
  return p.x() >= extent_x_min() + margin && p.x() <= extent_x_max() - margin &&
         p.y() >= extent_y_min() + margin && p.y() <= extent_y_max() - margin;
}

double sample(const GridField& f, const Eigen::Vector2d& p) {
  if (!f.contains(p))
    throw NumericalError("out of field: point (" + std::to_string(p.x()) +
                         ", " + std::to_string(p.y()) + ")");
  const double fx = (p.x() - f.origin.x()) / f.spacing;
  const double fy = (p.y() - f.origin.y()) / f.spacing;
  const int ix = std::clamp(static_cast<int>(std::floor(fx)), 0, f.nx - 2);
  const int iy = std::clamp(static_cast<int>(std::floor(fy)), 0, f.ny - 2);
  const double tx = fx - ix;
  const double ty = fy - iy;
  return (1.0 - tx) * (1.0 - ty) * f.at(ix, iy) +
         tx * (1.0 - ty) * f.at(ix + 1, iy) +
         (1.0 - tx) * ty * f.at(ix, iy + 1) + tx * ty * f.at(ix + 1, iy + 1);
}

Eigen::Vector2d gradient(const GridField& f, const Eigen::Vector2d& p) {
  const double s = f.spacing;
  if (!f.contains(p, s))
    throw NumericalError("out of field: too close to grid edge for gradient");
  const double gx =
      (sample(f, {p.x() + s, p.y()}) - sample(f, {p.x() - s, p.y()})) / (2.0 * s);
  const double gy =
      (sample(f, {p.x(), p.y() + s}) - sample(f, {p.x(), p.y() - s})) / (2.0 * s);
  return {gx, gy};
}

Eigen::Matrix2d hessian(const GridField& f, const Eigen::Vector2d& p) {
  const double s = f.spacing;
  if (!f.contains(p, s))
    throw NumericalError("out of field: too close to grid edge for hessian");
  const double c = sample(f, p);
  const double xp = sample(f, {p.x() + s, p.y()});
  const double xm = sample(f, {p.x() - s, p.y()});
  const double yp = sample(f, {p.x(), p.y() + s});
  const double ym = sample(f, {p.x(), p.y() - s});
  const double pp = sample(f, {p.x() + s, p.y() + s});
  const double pm = sample(f, {p.x() + s, p.y() - s});
  const double mp = sample(f, {p.x() - s, p.y() + s});
  const double mm = sample(f, {p.x() - s, p.y() - s});
  const double hxx = (xp - 2.0 * c + xm) / (s * s);
  const double hyy = (yp - 2.0 * c + ym) / (s * s);
  const double hxy = (pp - pm - mp + mm) / (4.0 * s * s);
  Eigen::Matrix2d H;
  H << hxx, hxy, hxy, hyy;
  return H;
}

void save_field(const GridField& f, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ConfigError("cannot open field file for writing: " + path);
  out.write(kMagic, sizeof(kMagic));
  auto put = [&out](const auto& v) {
    out.write(reinterpret_cast<const char*>(&v), sizeof(v));
  };
  put(kVersion);
  put(f.origin.x());
  put(f.origin.y());
  put(f.spacing);
  put(static_cast<std::uint32_t>(f.nx));
  put(static_cast<std::uint32_t>(f.ny));
  out.write(reinterpret_cast<const char*>(f.values.data()),
            static_cast<std::streamsize>(f.values.size() * sizeof(double)));
  if (!out) throw ConfigError("short write to field file: " + path);
}

GridField load_field(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot open field file: " + path);
  char magic[8];
  in.read(magic, sizeof(magic));
  if (!in || std::memcmp(magic, kMagic, sizeof(kMagic)) != 0)
    throw ConfigError("not a field file: " + path);
  auto get = [&in](auto& v) {
    in.read(reinterpret_cast<char*>(&v), sizeof(v));
  };
  std::uint32_t version = 0;
  get(version);
  if (version != kVersion)
    throw ConfigError("unsupported field file version in " + path);
  GridField f;
  std::uint32_t nx = 0, ny = 0;
  get(f.origin.x());
  get(f.origin.y());
  get(f.spacing);
  get(nx);
  get(ny);
  if (!in || nx == 0 || ny == 0 || f.spacing <= 0.0)
    throw ConfigError("corrupt field header in " + path);
  f.nx = static_cast<int>(nx);
  f.ny = static_cast<int>(ny);
  f.values.resize(static_cast<std::size_t>(f.nx) * f.ny);
  in.read(reinterpret_cast<char*>(f.values.data()),
          static_cast<std::streamsize>(f.values.size() * sizeof(double)));
  if (!in) throw ConfigError("truncated field file: " + path);
  return f;
}

}  // namespace rcbf
