/*
  Copyright 2026 the metricroom authors

  Licensed under the Apache License, Version 2.0 (the "License");
  you may not use this file except in compliance with the License.
  You may obtain a copy of the License at

  http://www.apache.org/licenses/LICENSE-2.0

  Unless required by applicable law or agreed to in writing, software
  distributed under the License is distributed on an "AS IS" BASIS,
  WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
  See the License for the specific language governing permissions and
  limitations under the License.
*/

#include "metricroom/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numbers>

namespace metricroom {

const char* errc_name(errc code) {
  switch (code) {
    case errc::ok: return "ok";
    case errc::invalid_argument: return "invalid_argument";
    case errc::parse_error: return "parse_error";
    case errc::point_not_in_domain: return "point_not_in_domain";
    case errc::puncture_value: return "puncture_value";
    case errc::degenerate_pair: return "degenerate_pair";
    case errc::duplicate_puncture: return "duplicate_puncture";
    case errc::empty_set: return "empty_set";
    case errc::branch_cut: return "branch_cut";
    case errc::non_convergence: return "non_convergence";
    case errc::newton_divergence: return "newton_divergence";
    case errc::resolution_error: return "resolution_error";
    case errc::out_of_field: return "out_of_field";
    case errc::radius_out_of_field: return "radius_out_of_field";
    case errc::negative_density: return "negative_density";
    case errc::not_simply_connected: return "not_simply_connected";
    case errc::not_hyperbolic: return "not_hyperbolic";
    case errc::insufficient_complement_samples: return "insufficient_complement_samples";
    case errc::io_error: return "io_error";
  }
  return "unknown";
}

} // namespace metricroom

namespace metricroom::geom {

namespace {

constexpr double kPi = std::numbers::pi;

bool finite(Cplx z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

void require_finite(Cplx z, const char* what) {
  if (!finite(z)) raise(errc::invalid_argument, std::string(what) + " must be finite");
}

/// Angle of (p - w) in [0, 2*pi); the deterministic tie-break key.
double angle_about(Cplx w, Cplx p) {
  double a = std::arg(p - w);
  if (a < 0.0) a += 2.0 * kPi;
  return a;
}

Cplx pick_by_angle(Cplx w, const std::vector<Cplx>& candidates) {
  Cplx best = candidates.front();
  double best_angle = angle_about(w, best);
  for (size_t i = 1; i < candidates.size(); ++i) {
    double a = angle_about(w, candidates[i]);
    if (a < best_angle) {
      best_angle = a;
      best = candidates[i];
    }
  }
  return best;
}

void check_punctures_distinct(const std::vector<Cplx>& ps) {
  for (size_t i = 0; i < ps.size(); ++i) {
    require_finite(ps[i], "puncture");
    for (size_t j = i + 1; j < ps.size(); ++j) {
      if (ps[i] == ps[j]) raise(errc::duplicate_puncture, "punctures must be pairwise distinct");
    }
  }
}

double point_segment_distance(Cplx p, Cplx a, Cplx b) {
  const Cplx ab = b - a;
  const double len2 = std::norm(ab);
  if (len2 == 0.0) return std::abs(p - a);
  double t = ((p - a).real() * ab.real() + (p - a).imag() * ab.imag()) / len2;
  t = std::clamp(t, 0.0, 1.0);
  return std::abs(p - (a + t * ab));
}

Cplx point_segment_nearest(Cplx p, Cplx a, Cplx b) {
  const Cplx ab = b - a;
  const double len2 = std::norm(ab);
  if (len2 == 0.0) return a;
  double t = ((p - a).real() * ab.real() + (p - a).imag() * ab.imag()) / len2;
  t = std::clamp(t, 0.0, 1.0);
  return a + t * ab;
}

bool segments_properly_intersect(Cplx a, Cplx b, Cplx c, Cplx d) {
  auto cross = [](Cplx u, Cplx v) { return u.real() * v.imag() - u.imag() * v.real(); };
  const double d1 = cross(b - a, c - a);
  const double d2 = cross(b - a, d - a);
  const double d3 = cross(d - c, a - c);
  const double d4 = cross(d - c, b - c);
  return ((d1 > 0) != (d2 > 0)) && ((d3 > 0) != (d4 > 0));
}

void check_polygon_simple(const std::vector<Cplx>& v) {
  const size_t n = v.size();
  if (n < 3) raise(errc::invalid_argument, "polygon needs at least 3 vertices");
  for (size_t i = 0; i < n; ++i) {
    require_finite(v[i], "polygon vertex");
    if (v[i] == v[(i + 1) % n]) raise(errc::invalid_argument, "polygon has a zero-length edge");
  }
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = i + 1; j < n; ++j) {
      // skip adjacent edges (shared endpoint)
      if (j == i || (j + 1) % n == i || (i + 1) % n == j) continue;
      if (segments_properly_intersect(v[i], v[(i + 1) % n], v[j], v[(j + 1) % n]))
        raise(errc::invalid_argument, "polygon is self-intersecting");
    }
  }
}

bool polygon_contains(const std::vector<Cplx>& v, Cplx p) {
  // Crossing-number test; points on an edge count as outside (open set).
  const size_t n = v.size();
  for (size_t i = 0; i < n; ++i) {
    if (point_segment_distance(p, v[i], v[(i + 1) % n]) == 0.0) return false;
  }
  bool inside = false;
  for (size_t i = 0, j = n - 1; i < n; j = i++) {
    const bool cross = ((v[i].imag() > p.imag()) != (v[j].imag() > p.imag())) &&
                       (p.real() < (v[j].real() - v[i].real()) * (p.imag() - v[i].imag()) /
                                           (v[j].imag() - v[i].imag()) +
                                       v[i].real());
    if (cross) inside = !inside;
  }
  return inside;
}

double polygon_boundary_distance(const std::vector<Cplx>& v, Cplx p) {
  double best = std::numeric_limits<double>::infinity();
  const size_t n = v.size();
  for (size_t i = 0; i < n; ++i) best = std::min(best, point_segment_distance(p, v[i], v[(i + 1) % n]));
  return best;
}

double polygon_perimeter(const std::vector<Cplx>& v) {
  double s = 0.0;
  for (size_t i = 0; i < v.size(); ++i) s += std::abs(v[(i + 1) % v.size()] - v[i]);
  return s;
}

Cplx polygon_point_at_arclength(const std::vector<Cplx>& v, double s) {
  const size_t n = v.size();
  for (size_t i = 0; i < n; ++i) {
    const Cplx a = v[i], b = v[(i + 1) % n];
    const double len = std::abs(b - a);
    if (s <= len || i + 1 == n) {
      const double t = len > 0 ? std::min(s / len, 1.0) : 0.0;
      return a + t * (b - a);
    }
    s -= len;
  }
  return v.front();
}

} // namespace

const char* domain_kind_name(DomainKind k) {
  switch (k) {
    case DomainKind::disk: return "disk";
    case DomainKind::half_plane: return "half_plane";
    case DomainKind::annulus: return "annulus";
    case DomainKind::exterior_disk: return "exterior_disk";
    case DomainKind::polygon: return "polygon";
    case DomainKind::punctured_plane: return "punctured_plane";
    case DomainKind::with_punctures: return "with_punctures";
  }
  return "unknown";
}

// --- construction -----------------------------------------------------------

DomainSpec DomainSpec::disk(Cplx center, double radius) {
  require_finite(center, "disk center");
  if (!(radius > 0.0) || !std::isfinite(radius)) raise(errc::invalid_argument, "disk radius must be positive");
  DomainSpec d;
  d.disk_ = Disk{center, radius};
  return d;
}

DomainSpec DomainSpec::half_plane(double normal_angle, double offset) {
  if (!std::isfinite(normal_angle) || !std::isfinite(offset))
    raise(errc::invalid_argument, "half-plane parameters must be finite");
  DomainSpec d;
  d.half_plane_ = HalfPlane{normal_angle, offset};
  return d;
}

DomainSpec DomainSpec::annulus(Cplx center, double inner_radius, double outer_radius) {
  require_finite(center, "annulus center");
  if (!(inner_radius > 0.0) || !(outer_radius > inner_radius) || !std::isfinite(outer_radius))
    raise(errc::invalid_argument, "annulus needs 0 < inner_radius < outer_radius");
  DomainSpec d;
  d.annulus_ = Annulus{center, inner_radius, outer_radius};
  return d;
}

DomainSpec DomainSpec::exterior_disk(Cplx center, double radius) {
  require_finite(center, "exterior disk center");
  if (!(radius > 0.0) || !std::isfinite(radius))
    raise(errc::invalid_argument, "exterior disk radius must be positive");
  DomainSpec d;
  d.exterior_disk_ = ExteriorDisk{center, radius};
  return d;
}

DomainSpec DomainSpec::polygon(std::vector<Cplx> vertices) {
  check_polygon_simple(vertices);
  DomainSpec d;
  d.polygon_ = Polygon{std::move(vertices)};
  return d;
}

DomainSpec DomainSpec::punctured_plane(std::vector<Cplx> punctures) {
  if (punctures.empty()) raise(errc::invalid_argument, "punctured plane needs at least one puncture");
  check_punctures_distinct(punctures);
  DomainSpec d;
  d.punctured_plane_ = PuncturedPlane{std::move(punctures)};
  return d;
}

DomainSpec DomainSpec::with_punctures(const DomainSpec& base, std::vector<Cplx> punctures) {
  if (punctures.empty()) return base;
  check_punctures_distinct(punctures);
  if (base.kind() == DomainKind::punctured_plane) {
    // normalization: puncturing a punctured plane extends the puncture list
    std::vector<Cplx> all = base.as_punctured_plane().punctures;
    for (Cplx p : punctures) {
      if (std::find(all.begin(), all.end(), p) != all.end())
        raise(errc::duplicate_puncture, "puncture already present");
      all.push_back(p);
    }
    return punctured_plane(std::move(all));
  }
  DomainSpec b = base.base();
  std::vector<Cplx> all = base.punctures_;
  for (Cplx p : punctures) {
    if (std::find(all.begin(), all.end(), p) != all.end())
      raise(errc::duplicate_puncture, "puncture already present");
    if (!contains(b, p)) raise(errc::point_not_in_domain, "puncture must lie inside the base domain");
    all.push_back(p);
  }
  DomainSpec d = b;
  d.punctures_ = std::move(all);
  return d;
}

DomainKind DomainSpec::kind() const {
  if (!punctures_.empty()) return DomainKind::with_punctures;
  if (disk_) return DomainKind::disk;
  if (half_plane_) return DomainKind::half_plane;
  if (annulus_) return DomainKind::annulus;
  if (exterior_disk_) return DomainKind::exterior_disk;
  if (polygon_) return DomainKind::polygon;
  return DomainKind::punctured_plane;
}

const Disk& DomainSpec::as_disk() const {
  if (!disk_) raise(errc::invalid_argument, "domain base is not a disk");
  return *disk_;
}
const HalfPlane& DomainSpec::as_half_plane() const {
  if (!half_plane_) raise(errc::invalid_argument, "domain base is not a half-plane");
  return *half_plane_;
}
const Annulus& DomainSpec::as_annulus() const {
  if (!annulus_) raise(errc::invalid_argument, "domain base is not an annulus");
  return *annulus_;
}
const ExteriorDisk& DomainSpec::as_exterior_disk() const {
  if (!exterior_disk_) raise(errc::invalid_argument, "domain base is not an exterior disk");
  return *exterior_disk_;
}
const Polygon& DomainSpec::as_polygon() const {
  if (!polygon_) raise(errc::invalid_argument, "domain base is not a polygon");
  return *polygon_;
}
const PuncturedPlane& DomainSpec::as_punctured_plane() const {
  if (!punctured_plane_) raise(errc::invalid_argument, "domain base is not a punctured plane");
  return *punctured_plane_;
}

std::vector<Cplx> DomainSpec::all_punctures() const {
  std::vector<Cplx> ps;
  if (punctured_plane_) ps = punctured_plane_->punctures;
  ps.insert(ps.end(), punctures_.begin(), punctures_.end());
  return ps;
}

DomainSpec DomainSpec::base() const {
  DomainSpec b = *this;
  b.punctures_.clear();
  return b;
}

// --- membership and boundary queries ----------------------------------------

bool contains(const DomainSpec& domain, Cplx w) {
  if (!finite(w)) return false;
  for (Cplx p : domain.punctures())
    if (w == p) return false;
  switch (domain.base().kind()) {
    case DomainKind::disk: {
      const auto& d = domain.as_disk();
      return std::abs(w - d.center) < d.radius;
    }
    case DomainKind::half_plane: {
      const auto& h = domain.as_half_plane();
      return (w * std::polar(1.0, -h.normal_angle)).real() > h.offset;
    }
    case DomainKind::annulus: {
      const auto& a = domain.as_annulus();
      const double r = std::abs(w - a.center);
      return r > a.inner_radius && r < a.outer_radius;
    }
    case DomainKind::exterior_disk: {
      const auto& e = domain.as_exterior_disk();
      return std::abs(w - e.center) > e.radius;
    }
    case DomainKind::polygon:
      return polygon_contains(domain.as_polygon().vertices, w);
    case DomainKind::punctured_plane: {
      for (Cplx p : domain.as_punctured_plane().punctures)
        if (w == p) return false;
      return true;
    }
    default:
      return false;
  }
}

double boundary_distance(const DomainSpec& domain, Cplx w) {
  if (!contains(domain, w)) raise(errc::point_not_in_domain, "point is not in the domain");
  double d = std::numeric_limits<double>::infinity();
  switch (domain.base().kind()) {
    case DomainKind::disk: {
      const auto& b = domain.as_disk();
      d = b.radius - std::abs(w - b.center);
      break;
    }
    case DomainKind::half_plane: {
      const auto& h = domain.as_half_plane();
      d = (w * std::polar(1.0, -h.normal_angle)).real() - h.offset;
      break;
    }
    case DomainKind::annulus: {
      const auto& a = domain.as_annulus();
      const double r = std::abs(w - a.center);
      d = std::min(r - a.inner_radius, a.outer_radius - r);
      break;
    }
    case DomainKind::exterior_disk: {
      const auto& e = domain.as_exterior_disk();
      d = std::abs(w - e.center) - e.radius;
      break;
    }
    case DomainKind::polygon:
      d = polygon_boundary_distance(domain.as_polygon().vertices, w);
      break;
    case DomainKind::punctured_plane:
      d = std::numeric_limits<double>::infinity();
      for (Cplx p : domain.as_punctured_plane().punctures) d = std::min(d, std::abs(w - p));
      break;
    default:
      break;
  }
  for (Cplx p : domain.punctures()) d = std::min(d, std::abs(w - p));
  return d;
}

Cplx nearest_boundary_point(const DomainSpec& domain, Cplx w) {
  const double dist = boundary_distance(domain, w); // also validates membership
  std::vector<Cplx> candidates;
  const double tol = 1e-13 * (1.0 + std::abs(w));

  auto consider = [&](Cplx p) {
    if (std::abs(std::abs(p - w) - dist) <= tol) candidates.push_back(p);
  };

  switch (domain.base().kind()) {
    case DomainKind::disk: {
      const auto& b = domain.as_disk();
      const Cplx rel = w - b.center;
      if (std::abs(rel) == 0.0) {
        consider(b.center + b.radius); // tie: every direction; angle 0 wins
      } else {
        consider(b.center + b.radius * rel / std::abs(rel));
      }
      break;
    }
    case DomainKind::half_plane: {
      const auto& h = domain.as_half_plane();
      const Cplx n = std::polar(1.0, h.normal_angle);
      const double s = (w * std::conj(n)).real() - h.offset;
      consider(w - s * n);
      break;
    }
    case DomainKind::annulus: {
      const auto& a = domain.as_annulus();
      const Cplx rel = w - a.center;
      const Cplx dir = rel / std::abs(rel);
      consider(a.center + a.inner_radius * dir);
      consider(a.center + a.outer_radius * dir);
      break;
    }
    case DomainKind::exterior_disk: {
      const auto& e = domain.as_exterior_disk();
      const Cplx rel = w - e.center;
      consider(e.center + e.radius * rel / std::abs(rel));
      break;
    }
    case DomainKind::polygon: {
      const auto& v = domain.as_polygon().vertices;
      for (size_t i = 0; i < v.size(); ++i)
        consider(point_segment_nearest(w, v[i], v[(i + 1) % v.size()]));
      break;
    }
    case DomainKind::punctured_plane: {
      for (Cplx p : domain.as_punctured_plane().punctures) consider(p);
      break;
    }
    default:
      break;
  }
  for (Cplx p : domain.punctures()) consider(p);

  if (candidates.empty()) raise(errc::invalid_argument, "no nearest boundary point found");
  return pick_by_angle(w, candidates);
}

double boundary_residual(const DomainSpec& domain, Cplx p) {
  double d = std::numeric_limits<double>::infinity();
  switch (domain.base().kind()) {
    case DomainKind::disk: {
      const auto& b = domain.as_disk();
      d = std::abs(std::abs(p - b.center) - b.radius);
      break;
    }
    case DomainKind::half_plane: {
      const auto& h = domain.as_half_plane();
      d = std::abs((p * std::polar(1.0, -h.normal_angle)).real() - h.offset);
      break;
    }
    case DomainKind::annulus: {
      const auto& a = domain.as_annulus();
      const double r = std::abs(p - a.center);
      d = std::min(std::abs(r - a.inner_radius), std::abs(r - a.outer_radius));
      break;
    }
    case DomainKind::exterior_disk: {
      const auto& e = domain.as_exterior_disk();
      d = std::abs(std::abs(p - e.center) - e.radius);
      break;
    }
    case DomainKind::polygon:
      d = polygon_boundary_distance(domain.as_polygon().vertices, p);
      break;
    case DomainKind::punctured_plane:
      for (Cplx q : domain.as_punctured_plane().punctures) d = std::min(d, std::abs(p - q));
      break;
    default:
      break;
  }
  for (Cplx q : domain.punctures()) d = std::min(d, std::abs(p - q));
  return d;
}

// --- boundary sampling -------------------------------------------------------

namespace {

struct ComponentDesc {
  bool is_point = false;
  Cplx point = 0.0;
  // curve sampler: maps t in [0,1) to a boundary point
  std::function<Cplx(double)> at;
};

std::vector<ComponentDesc> boundary_components(const DomainSpec& domain, const SampleWindow& window) {
  std::vector<ComponentDesc> comps;
  auto circle = [](Cplx c, double r) {
    ComponentDesc d;
    d.at = [c, r](double t) { return c + r * std::polar(1.0, 2.0 * kPi * t); };
    return d;
  };
  switch (domain.base().kind()) {
    case DomainKind::disk: {
      const auto& b = domain.as_disk();
      comps.push_back(circle(b.center, b.radius));
      break;
    }
    case DomainKind::half_plane: {
      const auto& h = domain.as_half_plane();
      const Cplx n = std::polar(1.0, h.normal_angle);
      const Cplx tangent = n * Cplx(0.0, 1.0);
      // windowed segment of the boundary line, centred at the projection of
      // the window centre onto the line
      const Cplx foot = window.center - ((window.center * std::conj(n)).real() - h.offset) * n;
      const double half = window.radius;
      ComponentDesc d;
      d.at = [foot, tangent, half](double t) { return foot + (2.0 * t - 1.0) * half * tangent; };
      comps.push_back(d);
      break;
    }
    case DomainKind::annulus: {
      const auto& a = domain.as_annulus();
      comps.push_back(circle(a.center, a.inner_radius));
      comps.push_back(circle(a.center, a.outer_radius));
      break;
    }
    case DomainKind::exterior_disk: {
      const auto& e = domain.as_exterior_disk();
      comps.push_back(circle(e.center, e.radius));
      break;
    }
    case DomainKind::polygon: {
      const auto v = domain.as_polygon().vertices;
      const double perim = polygon_perimeter(v);
      ComponentDesc d;
      d.at = [v, perim](double t) { return polygon_point_at_arclength(v, t * perim); };
      comps.push_back(d);
      break;
    }
    case DomainKind::punctured_plane: {
      for (Cplx p : domain.as_punctured_plane().punctures) {
        ComponentDesc d;
        d.is_point = true;
        d.point = p;
        comps.push_back(d);
      }
      break;
    }
    default:
      break;
  }
  for (Cplx p : domain.punctures()) {
    ComponentDesc d;
    d.is_point = true;
    d.point = p;
    comps.push_back(d);
  }
  return comps;
}

} // namespace

BoundarySample boundary_sample(const DomainSpec& domain, int n, const SampleWindow& window) {
  const auto comps = boundary_components(domain, window);
  const int point_comps = static_cast<int>(std::count_if(comps.begin(), comps.end(),
                                                         [](const ComponentDesc& c) { return c.is_point; }));
  const int curve_comps = static_cast<int>(comps.size()) - point_comps;
  if (n < static_cast<int>(comps.size()))
    raise(errc::invalid_argument, "sample count below boundary component count");

  BoundarySample out;
  out.component_count = static_cast<int>(comps.size());
  int remaining = n - point_comps;
  const int per_curve = curve_comps > 0 ? remaining / curve_comps : 0;
  int extra = curve_comps > 0 ? remaining % curve_comps : 0;

  int comp_id = 0;
  for (const auto& c : comps) {
    if (c.is_point) {
      out.points.push_back(c.point);
      out.component.push_back(comp_id);
    } else {
      int m = per_curve + (extra > 0 ? 1 : 0);
      if (extra > 0) --extra;
      for (int k = 0; k < m; ++k) {
        out.points.push_back(c.at(static_cast<double>(k) / m));
        out.component.push_back(comp_id);
      }
    }
    ++comp_id;
  }
  return out;
}

double hausdorff(const std::vector<Cplx>& xs, const std::vector<Cplx>& ys) {
  if (xs.empty() || ys.empty()) raise(errc::empty_set, "hausdorff needs nonempty sets");
  auto directed = [](const std::vector<Cplx>& as, const std::vector<Cplx>& bs) {
    double worst = 0.0;
    for (Cplx a : as) {
      double best = std::numeric_limits<double>::infinity();
      for (Cplx b : bs) best = std::min(best, std::abs(a - b));
      worst = std::max(worst, best);
    }
    return worst;
  };
  return std::max(directed(xs, ys), directed(ys, xs));
}

DomainSpec punctured(const DomainSpec& domain, Cplx w) {
  if (!contains(domain, w)) {
    // distinguish a repeated puncture from a plainly exterior point
    for (Cplx p : domain.all_punctures())
      if (p == w) raise(errc::duplicate_puncture, "point is already a puncture");
    raise(errc::point_not_in_domain, "puncture must lie inside the domain");
  }
  return DomainSpec::with_punctures(domain, {w});
}

BoundaryConvergenceReport boundary_convergence_check(const std::vector<DomainSpec>& sequence,
                                                     const DomainSpec& limit, double tolerance) {
  if (sequence.empty()) raise(errc::invalid_argument, "empty domain sequence");
  BoundaryConvergenceReport rep;

  const int per_comp = 256;
  const int n_limit = per_comp * std::max(1, boundary_component_count(limit));
  const auto limit_pts = boundary_sample(limit, n_limit).points;
  for (const auto& dom : sequence) {
    const int n_dom = per_comp * std::max(1, boundary_component_count(dom));
    rep.hausdorff_distances.push_back(hausdorff(boundary_sample(dom, n_dom).points, limit_pts));
  }

  rep.hausdorff_decreasing = true;
  for (size_t i = 1; i < rep.hausdorff_distances.size(); ++i) {
    if (rep.hausdorff_distances[i] > rep.hausdorff_distances[i - 1] + 1e-12) {
      rep.hausdorff_decreasing = false;
      break;
    }
  }
  rep.below_tolerance = rep.hausdorff_distances.back() <= tolerance;

  // witness point: try a few interior candidates of the limit domain and keep
  // the one excluded by the fewest sequence members
  std::vector<Cplx> candidates;
  switch (limit.base().kind()) {
    case DomainKind::disk: {
      const auto& d = limit.as_disk();
      for (double f : {0.5, 0.25, 0.75, 0.35, 0.65})
        for (double a : {0.0, 1.0, 2.0, 3.0, 4.5})
          candidates.push_back(d.center + f * d.radius * std::polar(1.0, a));
      break;
    }
    case DomainKind::annulus: {
      const auto& an = limit.as_annulus();
      const double mid = 0.5 * (an.inner_radius + an.outer_radius);
      for (double a : {0.0, 1.0, 2.0, 3.0, 4.5}) candidates.push_back(an.center + mid * std::polar(1.0, a));
      break;
    }
    default: {
      // generic probes around the boundary scale
      const double s = domain_scale(limit);
      for (double a : {0.3, 1.1, 2.2, 3.4, 4.7, 5.9})
        for (double f : {0.5, 1.5, 3.0}) candidates.push_back(f * s * std::polar(1.0, a));
      break;
    }
  }

  int best_misses = std::numeric_limits<int>::max();
  for (Cplx c : candidates) {
    if (!contains(limit, c)) continue;
    int misses = 0;
    for (const auto& dom : sequence)
      if (!contains(dom, c)) ++misses;
    if (misses < best_misses) {
      best_misses = misses;
      rep.witness = c;
      rep.witness_found = true;
    }
    if (best_misses == 0) break;
  }
  rep.witness_misses = rep.witness_found ? best_misses : static_cast<int>(sequence.size());

  const bool witness_ok = rep.witness_found && rep.witness_misses < static_cast<int>(sequence.size());
  rep.converged = rep.below_tolerance && witness_ok;
  if (!rep.below_tolerance) rep.reason = "hausdorff distance above tolerance";
  else if (!witness_ok) rep.reason = "no common interior witness found";
  return rep;
}

// --- classification ----------------------------------------------------------

bool is_hyperbolic(const DomainSpec& domain) {
  if (domain.base().kind() == DomainKind::punctured_plane)
    return domain.all_punctures().size() >= 2;
  return true; // every other variant has a continuum complement
}

bool is_simply_connected(const DomainSpec& domain) {
  if (!domain.punctures().empty()) return false;
  switch (domain.kind()) {
    case DomainKind::disk:
    case DomainKind::half_plane:
    case DomainKind::polygon:
      return true;
    default:
      return false;
  }
}

bool is_bounded(const DomainSpec& domain) {
  switch (domain.base().kind()) {
    case DomainKind::disk:
    case DomainKind::annulus:
    case DomainKind::polygon:
      return true;
    default:
      return false;
  }
}

bool has_connected_boundary(const DomainSpec& domain) {
  if (!domain.punctures().empty()) return false;
  switch (domain.kind()) {
    case DomainKind::disk:
    case DomainKind::half_plane:
    case DomainKind::polygon:
    case DomainKind::exterior_disk:
      return true;
    default:
      return false;
  }
}

int boundary_component_count(const DomainSpec& domain) {
  int n = static_cast<int>(domain.punctures().size());
  switch (domain.base().kind()) {
    case DomainKind::annulus: n += 2; break;
    case DomainKind::punctured_plane:
      n += static_cast<int>(domain.as_punctured_plane().punctures.size());
      break;
    default: n += 1; break;
  }
  return n;
}

double domain_scale(const DomainSpec& domain) {
  switch (domain.base().kind()) {
    case DomainKind::disk: return domain.as_disk().radius;
    case DomainKind::half_plane: return 1.0;
    case DomainKind::annulus: return domain.as_annulus().outer_radius;
    case DomainKind::exterior_disk: return domain.as_exterior_disk().radius;
    case DomainKind::polygon: {
      const auto& v = domain.as_polygon().vertices;
      double d = 0.0;
      for (size_t i = 0; i < v.size(); ++i)
        for (size_t j = i + 1; j < v.size(); ++j) d = std::max(d, std::abs(v[i] - v[j]));
      return 0.5 * d;
    }
    case DomainKind::punctured_plane: {
      const auto& ps = domain.as_punctured_plane().punctures;
      double d = 0.0;
      for (size_t i = 0; i < ps.size(); ++i)
        for (size_t j = i + 1; j < ps.size(); ++j) d = std::max(d, std::abs(ps[i] - ps[j]));
      return d > 0.0 ? d : 1.0;
    }
    default: return 1.0;
  }
}

std::vector<Disk> bounded_complement_disks(const DomainSpec& domain) {
  std::vector<Disk> out;
  switch (domain.base().kind()) {
    case DomainKind::annulus: {
      const auto& a = domain.as_annulus();
      out.push_back(Disk{a.center, a.inner_radius});
      break;
    }
    case DomainKind::exterior_disk: {
      const auto& e = domain.as_exterior_disk();
      out.push_back(Disk{e.center, e.radius});
      break;
    }
    default:
      break;
  }
  return out;
}

std::vector<Cplx> complement_sample(const DomainSpec& domain, int boundary_n, int interior_n,
                                    const SampleWindow& window) {
  const int comps = boundary_component_count(domain);
  std::vector<Cplx> out = boundary_sample(domain, std::max(boundary_n, comps), window).points;
  for (const Disk& d : bounded_complement_disks(domain)) {
    // deterministic polar fill of the closed disk interior
    out.push_back(d.center);
    int placed = 1;
    int ring = 1;
    const int rings = std::max(1, static_cast<int>(std::round(std::sqrt(interior_n / 3.0))));
    while (placed < interior_n && ring <= rings) {
      const double r = d.radius * ring / (rings + 0.5);
      const int m = std::min(interior_n - placed, 4 * ring);
      for (int k = 0; k < m; ++k)
        out.push_back(d.center + r * std::polar(1.0, 2.0 * kPi * k / m + 0.5 * ring));
      placed += m;
      ++ring;
    }
  }
  return out;
}

Cplx project_to_complement(const DomainSpec& domain, Cplx z) {
  if (!finite(z)) raise(errc::invalid_argument, "cannot project a non-finite point");
  if (!contains(domain, z)) return z;
  return nearest_boundary_point(domain, z);
}

DomainSpec transform_affine(const DomainSpec& domain, Cplx alpha, Cplx beta) {
  if (alpha == Cplx(0.0)) raise(errc::invalid_argument, "affine map must have alpha != 0");
  auto map = [&](Cplx z) { return alpha * z + beta; };
  DomainSpec b = domain.base();
  DomainSpec mapped = b;
  switch (b.kind()) {
    case DomainKind::disk: {
      const auto& d = b.as_disk();
      mapped = DomainSpec::disk(map(d.center), std::abs(alpha) * d.radius);
      break;
    }
    case DomainKind::half_plane: {
      const auto& h = b.as_half_plane();
      const double angle = h.normal_angle + std::arg(alpha);
      const double offset =
          std::abs(alpha) * h.offset + (beta * std::polar(1.0, -angle)).real();
      mapped = DomainSpec::half_plane(angle, offset);
      break;
    }
    case DomainKind::annulus: {
      const auto& a = b.as_annulus();
      mapped = DomainSpec::annulus(map(a.center), std::abs(alpha) * a.inner_radius,
                                   std::abs(alpha) * a.outer_radius);
      break;
    }
    case DomainKind::exterior_disk: {
      const auto& e = b.as_exterior_disk();
      mapped = DomainSpec::exterior_disk(map(e.center), std::abs(alpha) * e.radius);
      break;
    }
    case DomainKind::polygon: {
      auto v = b.as_polygon().vertices;
      for (auto& p : v) p = map(p);
      mapped = DomainSpec::polygon(std::move(v));
      break;
    }
    case DomainKind::punctured_plane: {
      auto ps = b.as_punctured_plane().punctures;
      for (auto& p : ps) p = map(p);
      mapped = DomainSpec::punctured_plane(std::move(ps));
      break;
    }
    default:
      break;
  }
  std::vector<Cplx> ps = domain.punctures();
  for (auto& p : ps) p = map(p);
  return DomainSpec::with_punctures(mapped, std::move(ps));
}

} // namespace metricroom::geom
