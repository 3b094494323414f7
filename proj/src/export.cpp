#include "g3/export.hpp"

#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>

namespace g3 {

std::string format_double(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

TriMesh tessellate(const SurfaceSpec& surface, std::size_t n1, std::size_t n2) {
  if (n1 < 1 || n2 < 1) throw Error(ErrorCode::Precondition, "tessellation needs at least one cell per direction");
  const auto u1s = linspace(surface.u1, n1 + 1);
  const auto u2s = linspace(surface.u2, n2 + 1);
  TriMesh mesh;
  mesh.n1 = n1;
  mesh.n2 = n2;
  mesh.vertices.resize(u1s.size() * u2s.size());
  parallel_for(u1s.size(), [&](std::size_t i) {
    for (std::size_t j = 0; j < u2s.size(); ++j) {
      try {
        mesh.vertices[i * u2s.size() + j] = surface.point(u1s[i], u2s[j]);
      } catch (const Error& e) {
        throw Error(e.code(), std::string(e.what()) + " at (u1, u2) = (" + format_double(u1s[i]) + ", " +
                                  format_double(u2s[j]) + ")");
      }
    }
  });
  mesh.faces.reserve(2 * n1 * n2);
  const std::size_t row = n2 + 1;
  for (std::size_t i = 0; i < n1; ++i) {
    for (std::size_t j = 0; j < n2; ++j) {
      const std::size_t a = i * row + j, b = (i + 1) * row + j, c = (i + 1) * row + j + 1, d = i * row + j + 1;
      mesh.faces.push_back({a, b, c});
      mesh.faces.push_back({a, c, d});
    }
  }
  return mesh;
}

bool is_valid(const TriMesh& mesh) {
  for (const auto& f : mesh.faces) {
    for (std::size_t k : f)
      if (k >= mesh.vertices.size()) return false;
    if (f[0] == f[1] || f[1] == f[2] || f[0] == f[2]) return false;
  }
  return true;
}

namespace {

void write_vertex(std::ostream& out, const Vec& p) {
  out << "v " << format_double(p.x()) << ' ' << format_double(p.y()) << ' ' << format_double(p.z()) << '\n';
}

}  // namespace

void write_obj(std::ostream& out, const TriMesh& mesh) {
  out << "# g3 mesh " << mesh.n1 << 'x' << mesh.n2 << '\n';
  for (const auto& v : mesh.vertices) write_vertex(out, v);
  for (const auto& f : mesh.faces) out << "f " << f[0] + 1 << ' ' << f[1] + 1 << ' ' << f[2] + 1 << '\n';
  if (!out) throw Error(ErrorCode::Io, "failed writing OBJ");
}

void write_obj(std::ostream& out, const std::vector<Polyline>& polylines) {
  out << "# g3 polylines " << polylines.size() << '\n';
  for (const auto& line : polylines)
    for (const auto& p : line.points) write_vertex(out, p.p);
  std::size_t base = 1;
  for (const auto& line : polylines) {
    if (line.points.empty()) continue;
    out << 'l';
    for (std::size_t k = 0; k < line.points.size(); ++k) out << ' ' << base + k;
    if (line.closed) out << ' ' << base;
    out << '\n';
    base += line.points.size();
  }
  if (!out) throw Error(ErrorCode::Io, "failed writing OBJ");
}

ObjData parse_obj(std::istream& in) {
  ObjData data;
  std::string line;
  std::size_t lineno = 0;
  auto index = [&](const std::string& token) {
    const std::string head = token.substr(0, token.find('/'));
    std::size_t used = 0;
    long k = 0;
    try {
      k = std::stol(head, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != head.size() || head.empty() || k < 1)
      throw Error(ErrorCode::Io, "bad OBJ index '" + token + "' on line " + std::to_string(lineno));
    return static_cast<std::size_t>(k - 1);
  };
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream ss(line);
    std::string tag;
    if (!(ss >> tag) || tag[0] == '#') continue;
    if (tag == "v") {
      double x, y, z;
      if (!(ss >> x >> y >> z)) throw Error(ErrorCode::Io, "bad OBJ vertex on line " + std::to_string(lineno));
      data.vertices.emplace_back(x, y, z);
    } else if (tag == "f") {
      std::vector<std::size_t> idx;
      std::string tok;
      while (ss >> tok) idx.push_back(index(tok));
      if (idx.size() != 3) throw Error(ErrorCode::Io, "only triangles are supported (line " + std::to_string(lineno) + ")");
      data.faces.push_back({idx[0], idx[1], idx[2]});
    } else if (tag == "l") {
      std::vector<std::size_t> idx;
      std::string tok;
      while (ss >> tok) idx.push_back(index(tok));
      if (idx.size() < 2) throw Error(ErrorCode::Io, "line element needs two vertices (line " + std::to_string(lineno) + ")");
      data.lines.push_back(std::move(idx));
    }
  }
  for (const auto& f : data.faces)
    for (std::size_t k : f)
      if (k >= data.vertices.size()) throw Error(ErrorCode::Io, "face index out of range");
  for (const auto& l : data.lines)
    for (std::size_t k : l)
      if (k >= data.vertices.size()) throw Error(ErrorCode::Io, "line index out of range");
  return data;
}

void write_csv(std::ostream& out, const Table& table) {
  for (std::size_t k = 0; k < table.columns.size(); ++k) out << (k ? "," : "") << table.columns[k];
  out << '\n';
  for (const auto& row : table.rows) {
    if (row.size() != table.columns.size()) throw Error(ErrorCode::Precondition, "CSV row width differs from header");
    for (std::size_t k = 0; k < row.size(); ++k) out << (k ? "," : "") << format_double(row[k]);
    out << '\n';
  }
  if (!out) throw Error(ErrorCode::Io, "failed writing CSV");
}

Table frenet_table(const std::vector<FrenetSample>& samples) {
  Table t{{"s", "kappa", "tau"}, {}};
  for (const auto& f : samples) t.rows.push_back({f.s, f.kappa, f.tau});
  return t;
}

Table darboux_table(const std::vector<DarbouxSample>& samples) {
  Table t{{"s", "kg", "kn", "taug", "phi"}, {}};
  for (const auto& d : samples) t.rows.push_back({d.s, d.kg, d.kn, d.tau_g, d.phi});
  return t;
}

namespace {

constexpr double kView = 800.0;
constexpr double kMargin = 60.0;

std::string xml_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '&': out += "&amp;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

}  // namespace

void write_svg(std::ostream& out, const IsophoteSet& set) {
  const double span = kView - 2.0 * kMargin;
  auto px = [&](double u2) { return kMargin + span * (u2 - set.u2.lo) / set.u2.width(); };
  auto py = [&](double u1) { return kMargin + span * (u1 - set.u1.lo) / set.u1.width(); };
  auto num = [](double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.4f", v);
    return std::string(buf);
  };

  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 800 800\" width=\"800\" height=\"800\">\n";
  out << "  <title>" << xml_escape("isophote level " + format_double(set.level)) << "</title>\n";
  out << "  <rect x=\"" << num(kMargin) << "\" y=\"" << num(kMargin) << "\" width=\"" << num(span) << "\" height=\""
      << num(span) << "\" fill=\"none\" stroke=\"#444\" stroke-width=\"1\"/>\n";
  if (set.constant_field) {
    const auto& c = *set.constant_field;
    out << "  <rect class=\"constant-field\" x=\"" << num(kMargin) << "\" y=\"" << num(kMargin) << "\" width=\""
        << num(span) << "\" height=\"" << num(span) << "\" fill=\"#f0c040\" fill-opacity=\"0.35\"/>\n";
    out << "  <text x=\"400\" y=\"400\" text-anchor=\"middle\" font-size=\"16\">"
        << xml_escape("constant field " + format_double(c.value) + (c.whole_surface ? " (whole surface)" : ""))
        << "</text>\n";
  }
  for (const auto& line : set.polylines) {
    out << "  <polyline fill=\"none\" stroke=\"#1060c0\" stroke-width=\"1.5\" points=\"";
    bool first = true;
    for (const auto& p : line.points) {
      out << (first ? "" : " ") << num(px(p.u2)) << ',' << num(py(p.u1));
      first = false;
    }
    if (line.closed && !line.points.empty()) out << ' ' << num(px(line.points[0].u2)) << ',' << num(py(line.points[0].u1));
    out << "\"/>\n";
  }
  out << "  <text x=\"400\" y=\"790\" text-anchor=\"middle\" font-size=\"14\">u2</text>\n";
  out << "  <text x=\"15\" y=\"400\" text-anchor=\"middle\" font-size=\"14\" transform=\"rotate(-90 15 400)\">u1</text>\n";
  out << "  <text x=\"" << num(kMargin) << "\" y=\"" << num(kView - kMargin + 18) << "\" font-size=\"11\">"
      << format_double(set.u2.lo) << "</text>\n";
  out << "  <text x=\"" << num(kView - kMargin) << "\" y=\"" << num(kView - kMargin + 18)
      << "\" text-anchor=\"end\" font-size=\"11\">" << format_double(set.u2.hi) << "</text>\n";
  out << "  <text x=\"" << num(kMargin - 6) << "\" y=\"" << num(kMargin + 4) << "\" text-anchor=\"end\" font-size=\"11\">"
      << format_double(set.u1.lo) << "</text>\n";
  out << "  <text x=\"" << num(kMargin - 6) << "\" y=\"" << num(kView - kMargin) << "\" text-anchor=\"end\" font-size=\"11\">"
      << format_double(set.u1.hi) << "</text>\n";
  out << "</svg>\n";
  if (!out) throw Error(ErrorCode::Io, "failed writing SVG");
}

nlohmann::json to_json(const IsophoteSet& set) {
  using nlohmann::json;
  json j;
  j["level"] = set.level;
  j["domain"] = {{"u1", {set.u1.lo, set.u1.hi}}, {"u2", {set.u2.lo, set.u2.hi}}};
  json lines = json::array();
  for (const auto& line : set.polylines) {
    json pts = json::array();
    for (const auto& p : line.points) pts.push_back({p.u1, p.u2, p.p.x(), p.p.y(), p.p.z()});
    lines.push_back({{"closed", line.closed}, {"points", pts}});
  }
  j["polylines"] = lines;
  if (set.constant_field) {
    j["constant_field"] = {{"value", set.constant_field->value},
                           {"spread", set.constant_field->spread},
                           {"whole_surface", set.constant_field->whole_surface}};
  } else {
    j["constant_field"] = nullptr;
  }
  j["stats"] = {{"cells", set.stats.cells},
                {"crossing_cells", set.stats.crossing_cells},
                {"singular_samples", set.stats.singular_samples},
                {"skipped_cells", set.stats.skipped_cells},
                {"refinement_iterations", set.stats.refinement_iterations},
                {"unconverged", set.stats.unconverged}};
  return j;
}

}  // namespace g3
