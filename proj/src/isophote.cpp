#include "g3/isophote.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <numbers>

namespace g3 {

double field(const SurfaceSpec& surface, const Vec& axis, double u1, double u2) {
  return euclid_dot(sample_surface(surface, u1, u2).n, axis);
}

double IsophoteQuery::level() const {
  switch (kind) {
    case LevelKind::Angle:
      if (!axis.is_isotropic()) throw Error(ErrorCode::Precondition, "an angle level needs an isotropic axis");
      if (!(value >= 0.0 && value <= std::numbers::pi / 2 + 1e-15))
        throw Error(ErrorCode::Precondition, "beta must lie in [0, pi/2]");
      return std::cos(value);
    case LevelKind::Level:
      if (axis.is_isotropic() && std::abs(value) > 1.0)
        throw Error(ErrorCode::Precondition, "level must lie in [-1, 1] for an isotropic axis");
      return value;
    case LevelKind::Silhouette: return 0.0;
  }
  return 0.0;
}

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

class Extractor {
 public:
  Extractor(const SurfaceSpec& surface, const IsophoteQuery& q)
      : surface_(surface), q_(q), axis_(normalize_axis(q.axis)), level_(q.level()) {
    if (q.n1 < 1 || q.n2 < 1) throw Error(ErrorCode::Precondition, "grid needs at least one cell per direction");
    if (!(q.refine_tol > 0.0)) throw Error(ErrorCode::Precondition, "refine_tol must be positive");
    u1s_ = linspace(surface.u1, q.n1 + 1);
    u2s_ = linspace(surface.u2, q.n2 + 1);
  }

  IsophoteSet run() {
    IsophoteSet out;
    out.level = level_;
    out.u1 = surface_.u1;
    out.u2 = surface_.u2;
    out.stats.cells = q_.n1 * q_.n2;

    sample_grid();
    for (double v : values_)
      if (std::isnan(v)) ++out.stats.singular_samples;

    if (auto c = constant_field()) {
      out.constant_field = c;
      return out;
    }

    classify_cells(out);
    refine_edges(out);
    link(out);
    return out;
  }

 private:
  struct Segment {
    std::size_t a, b;  // edge ids
  };

  struct Crossing {
    IsophotePoint point;
    bool ok = false;
  };

  std::size_t idx(std::size_t i, std::size_t j) const { return i * (q_.n2 + 1) + j; }

  // edge along u1 between (i, j) and (i+1, j)
  std::size_t h_edge(std::size_t i, std::size_t j) const { return i * (q_.n2 + 1) + j; }
  // edge along u2 between (i, j) and (i, j+1)
  std::size_t v_edge(std::size_t i, std::size_t j) const { return q_.n1 * (q_.n2 + 1) + i * q_.n2 + j; }

  double shade(double u1, double u2) const {
    try {
      return field(surface_, axis_, u1, u2) - level_;
    } catch (const Error& e) {
      if (e.code() == ErrorCode::SingularNormal) return kNaN;
      throw;
    }
  }

  void sample_grid() {
    values_.assign((q_.n1 + 1) * (q_.n2 + 1), kNaN);
    parallel_for(q_.n1 + 1, [&](std::size_t i) {
      for (std::size_t j = 0; j <= q_.n2; ++j) values_[idx(i, j)] = shade(u1s_[i], u2s_[j]);
    });
  }

  std::optional<ConstantField> constant_field() const {
    std::vector<double> finite;
    for (double v : values_)
      if (!std::isnan(v)) finite.push_back(v);
    if (finite.empty()) return std::nullopt;
    const Spread sp = spread_of(finite);
    if (sp.width() > q_.refine_tol) return std::nullopt;
    ConstantField c;
    c.value = sp.mean + level_;
    c.spread = sp.width();
    c.whole_surface = std::abs(c.value - level_) <= q_.refine_tol;
    return c;
  }

  void classify_cells(IsophoteSet& out) {
    for (std::size_t i = 0; i < q_.n1; ++i) {
      for (std::size_t j = 0; j < q_.n2; ++j) {
        const double f[4] = {values_[idx(i, j)], values_[idx(i + 1, j)], values_[idx(i + 1, j + 1)],
                             values_[idx(i, j + 1)]};
        if (std::isnan(f[0]) || std::isnan(f[1]) || std::isnan(f[2]) || std::isnan(f[3])) {
          ++out.stats.skipped_cells;
          continue;
        }
        unsigned mask = 0;
        for (unsigned k = 0; k < 4; ++k)
          if (f[k] >= 0.0) mask |= 1u << k;
        if (mask == 0 || mask == 15) continue;
        out.crossing_cells.emplace_back(i, j);

        // edges k = corner k -> corner k+1
        const std::size_t e[4] = {h_edge(i, j), v_edge(i + 1, j), h_edge(i, j + 1), v_edge(i, j)};
        if (mask == 5 || mask == 10) {
          double centre = shade(0.5 * (u1s_[i] + u1s_[i + 1]), 0.5 * (u2s_[j] + u2s_[j + 1]));
          if (std::isnan(centre)) centre = 0.25 * (f[0] + f[1] + f[2] + f[3]);
          const bool centre_in = centre >= 0.0;
          // cut off the corners whose sign differs from the centre
          const bool isolate_odd = (mask == 5) == centre_in;
          if (isolate_odd) {
            cell_segments_.push_back({e[0], e[1]});
            cell_segments_.push_back({e[2], e[3]});
          } else {
            cell_segments_.push_back({e[3], e[0]});
            cell_segments_.push_back({e[1], e[2]});
          }
        } else {
          std::size_t found[2];
          int n = 0;
          for (unsigned k = 0; k < 4; ++k) {
            const bool a = mask & (1u << k);
            const bool b = mask & (1u << ((k + 1) % 4));
            if (a != b) found[n++] = e[k];
          }
          cell_segments_.push_back({found[0], found[1]});
        }
      }
    }
    out.stats.crossing_cells = out.crossing_cells.size();
  }

  // endpoints of an edge in grid indices
  std::pair<std::pair<std::size_t, std::size_t>, std::pair<std::size_t, std::size_t>> edge_ends(std::size_t id) const {
    const std::size_t nh = q_.n1 * (q_.n2 + 1);
    if (id < nh) {
      const std::size_t i = id / (q_.n2 + 1), j = id % (q_.n2 + 1);
      return {{i, j}, {i + 1, j}};
    }
    id -= nh;
    const std::size_t i = id / q_.n2, j = id % q_.n2;
    return {{i, j}, {i, j + 1}};
  }

  void refine_edges(IsophoteSet& out) {
    for (const auto& s : cell_segments_) {
      edges_.emplace(s.a, Crossing{});
      edges_.emplace(s.b, Crossing{});
    }
    std::vector<std::map<std::size_t, Crossing>::iterator> todo;
    for (auto it = edges_.begin(); it != edges_.end(); ++it) todo.push_back(it);
    std::vector<std::size_t> iterations(todo.size(), 0);
    std::vector<char> unconverged(todo.size(), 0);

    parallel_for(todo.size(), [&](std::size_t k) {
      const auto [pa, pb] = edge_ends(todo[k]->first);
      const double ua1 = u1s_[pa.first], ua2 = u2s_[pa.second];
      const double ub1 = u1s_[pb.first], ub2 = u2s_[pb.second];
      double fa = values_[idx(pa.first, pa.second)];
      double fb = values_[idx(pb.first, pb.second)];
      auto at = [&](double t) { return std::pair{ua1 + t * (ub1 - ua1), ua2 + t * (ub2 - ua2)}; };

      double lo = 0.0, hi = 1.0;
      double t = fa == fb ? 0.5 : fa / (fa - fb);
      t = std::clamp(t, 0.0, 1.0);
      auto [u1, u2] = at(t);
      double f = shade(u1, u2);
      int it = 0;
      while (!std::isnan(f) && std::abs(f) > q_.refine_tol && it < q_.max_bisections) {
        // keep the bracket [lo, hi] with f(lo) and f(hi) of opposite sign
        if ((f >= 0.0) == (fa >= 0.0)) {
          lo = t;
          fa = f;
        } else {
          hi = t;
          fb = f;
        }
        t = 0.5 * (lo + hi);
        std::tie(u1, u2) = at(t);
        f = shade(u1, u2);
        ++it;
      }
      iterations[k] = static_cast<std::size_t>(it);
      Crossing& c = todo[k]->second;
      if (std::isnan(f)) return;
      if (std::abs(f) > q_.refine_tol) {
        unconverged[k] = 1;
        return;
      }
      c.point = {u1, u2, surface_.point(u1, u2)};
      c.ok = true;
    });
    for (std::size_t k = 0; k < todo.size(); ++k) {
      out.stats.refinement_iterations += iterations[k];
      out.stats.unconverged += static_cast<std::size_t>(unconverged[k]);
    }
  }

  void link(IsophoteSet& out) {
    std::vector<Segment> segs;
    for (const auto& s : cell_segments_) {
      if (edges_.at(s.a).ok && edges_.at(s.b).ok) {
        segs.push_back(s);
      } else {
        ++out.stats.skipped_cells;
      }
    }
    std::map<std::size_t, std::vector<std::size_t>> incident;
    for (std::size_t k = 0; k < segs.size(); ++k) {
      incident[segs[k].a].push_back(k);
      incident[segs[k].b].push_back(k);
    }
    std::vector<char> used(segs.size(), 0);

    auto walk = [&](std::size_t start_edge, std::size_t first_seg) {
      Polyline line;
      std::size_t edge = start_edge;
      std::size_t seg = first_seg;
      line.points.push_back(edges_.at(edge).point);
      for (;;) {
        used[seg] = 1;
        edge = segs[seg].a == edge ? segs[seg].b : segs[seg].a;
        if (edge == start_edge) {
          line.closed = true;
          break;
        }
        line.points.push_back(edges_.at(edge).point);
        std::size_t next = segs.size();
        for (std::size_t cand : incident[edge])
          if (!used[cand]) next = cand;
        if (next == segs.size()) break;
        seg = next;
      }
      if (!line.closed && line.points.size() > 2) {
        const auto& a = line.points.front();
        const auto& b = line.points.back();
        if (std::hypot(a.u1 - b.u1, a.u2 - b.u2) <= 1e-9) {
          line.points.pop_back();
          line.closed = true;
        }
      }
      out.polylines.push_back(std::move(line));
    };

    for (const auto& [edge, list] : incident)
      if (list.size() == 1 && !used[list[0]]) walk(edge, list[0]);
    for (std::size_t k = 0; k < segs.size(); ++k)
      if (!used[k]) walk(segs[k].a, k);
  }

  const SurfaceSpec& surface_;
  const IsophoteQuery& q_;
  Vec axis_;
  double level_;
  std::vector<double> u1s_, u2s_;
  std::vector<double> values_;
  std::vector<Segment> cell_segments_;
  std::map<std::size_t, Crossing> edges_;
};

}  // namespace

IsophoteSet extract(const SurfaceSpec& surface, const IsophoteQuery& query) { return Extractor(surface, query).run(); }

IsophoteSet silhouette(const SurfaceSpec& surface, const Vec& axis, std::size_t n1, std::size_t n2, double refine_tol) {
  IsophoteQuery q;
  q.axis = axis;
  q.kind = LevelKind::Silhouette;
  q.n1 = n1;
  q.n2 = n2;
  q.refine_tol = refine_tol;
  return extract(surface, q);
}

}  // namespace g3
