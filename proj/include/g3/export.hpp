#pragma once

// Meshes, polylines and tables to OBJ, CSV, SVG and JSON.

#include <array>
#include <iosfwd>
#include <string>
#include <vector>

#include "json.hpp"

#include "g3/isophote.hpp"

namespace g3 {

struct TriMesh {
  std::vector<Vec> vertices;
  std::vector<std::array<std::size_t, 3>> faces;  // 0-based
  std::size_t n1 = 0, n2 = 0;
};

/// (n1+1) x (n2+1) vertices, row-major in u1, two triangles per cell.
/// Grid points with expression errors are reported with their (u1, u2).
TriMesh tessellate(const SurfaceSpec& surface, std::size_t n1, std::size_t n2);

/// Face indices in range and pairwise distinct.
bool is_valid(const TriMesh& mesh);

void write_obj(std::ostream& out, const TriMesh& mesh);
void write_obj(std::ostream& out, const std::vector<Polyline>& polylines);

struct ObjData {
  std::vector<Vec> vertices;
  std::vector<std::array<std::size_t, 3>> faces;  // 0-based
  std::vector<std::vector<std::size_t>> lines;    // 0-based
};

/// Reads v, f and l records; f entries may carry /vt/vn suffixes. Throws Io.
ObjData parse_obj(std::istream& in);

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;
};

void write_csv(std::ostream& out, const Table& table);

Table frenet_table(const std::vector<FrenetSample>& samples);
Table darboux_table(const std::vector<DarbouxSample>& samples);

/// Parameter-domain plot: u2 across, u1 down, fixed 800 x 800 viewBox.
void write_svg(std::ostream& out, const IsophoteSet& set);

nlohmann::json to_json(const IsophoteSet& set);

/// 17 significant digits, enough to round-trip a double.
std::string format_double(double v);

}  // namespace g3
