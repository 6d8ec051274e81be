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

#ifndef METRICROOM_GEOMETRY_HPP
#define METRICROOM_GEOMETRY_HPP

#include <complex>
#include <optional>
#include <string>
#include <vector>

#include "metricroom/error.hpp"

namespace metricroom::geom {

using Cplx = std::complex<double>;

// ---------------------------------------------------------------------------
// Symbolic planar domains.
//
// Every variant is an open connected subset of the plane with an exactly
// computable boundary distance. Punctures are carried as a separate list so
// that puncturing any base domain stays closed under the operation.
// ---------------------------------------------------------------------------

enum class DomainKind {
  disk,
  half_plane,
  annulus,
  exterior_disk,
  polygon,
  punctured_plane,
  with_punctures,
};

const char* domain_kind_name(DomainKind k);

struct Disk {
  Cplx center;
  double radius;
};

/// Open half-plane {z : Re(z * exp(-i*normal_angle)) > offset}. The normal
/// angle points into the domain; offset is the signed distance of the
/// boundary line from the origin along that normal.
struct HalfPlane {
  double normal_angle;
  double offset;
};

struct Annulus {
  Cplx center;
  double inner_radius;
  double outer_radius;
};

/// Complement of a closed disk: {z : |z - center| > radius}.
struct ExteriorDisk {
  Cplx center;
  double radius;
};

/// Interior of a simple (non-self-intersecting) polygon, >= 3 vertices,
/// listed in order (either orientation).
struct Polygon {
  std::vector<Cplx> vertices;
};

/// Plane minus a finite, pairwise-distinct puncture set.
struct PuncturedPlane {
  std::vector<Cplx> punctures;
};

class DomainSpec {
public:
  static DomainSpec disk(Cplx center, double radius);
  static DomainSpec half_plane(double normal_angle, double offset);
  static DomainSpec annulus(Cplx center, double inner_radius, double outer_radius);
  static DomainSpec exterior_disk(Cplx center, double radius);
  static DomainSpec polygon(std::vector<Cplx> vertices);
  static DomainSpec punctured_plane(std::vector<Cplx> punctures);
  static DomainSpec with_punctures(const DomainSpec& base, std::vector<Cplx> punctures);

  DomainKind kind() const;

  // Base-shape accessors; each raises invalid_argument unless the base has
  // the matching kind.
  const Disk& as_disk() const;
  const HalfPlane& as_half_plane() const;
  const Annulus& as_annulus() const;
  const ExteriorDisk& as_exterior_disk() const;
  const Polygon& as_polygon() const;
  const PuncturedPlane& as_punctured_plane() const;

  /// Punctures added on top of the base shape (empty unless kind() is
  /// with_punctures). For punctured_plane the punctures live in the base.
  const std::vector<Cplx>& punctures() const { return punctures_; }

  /// All isolated boundary points: base punctures plus added punctures.
  std::vector<Cplx> all_punctures() const;

  /// The same domain without its added punctures.
  DomainSpec base() const;

private:
  DomainSpec() = default;

  // exactly one of the optionals is engaged
  std::optional<Disk> disk_;
  std::optional<HalfPlane> half_plane_;
  std::optional<Annulus> annulus_;
  std::optional<ExteriorDisk> exterior_disk_;
  std::optional<Polygon> polygon_;
  std::optional<PuncturedPlane> punctured_plane_;
  std::vector<Cplx> punctures_;
};

struct BoundarySample {
  std::vector<Cplx> points;
  std::vector<int> component; // component id per point
  int component_count = 0;
};

/// Window restricting samples taken on unbounded boundary components
/// (currently only the half-plane line). Bounded components ignore it.
struct SampleWindow {
  Cplx center = 0.0;
  double radius = 10.0;
};

struct BoundaryConvergenceReport {
  std::vector<double> hausdorff_distances;
  bool hausdorff_decreasing = false;
  bool below_tolerance = false;
  bool witness_found = false;
  Cplx witness = 0.0;
  int witness_misses = 0; // how many sequence members exclude the witness
  bool converged = false;
  std::string reason;
};

// --- membership and boundary queries ---------------------------------------

bool contains(const DomainSpec& domain, Cplx w);

/// Distance from an interior point to the complement (exact per variant).
double boundary_distance(const DomainSpec& domain, Cplx w);

/// A nearest boundary point; ties broken by the smallest angle of (p - w)
/// measured from the positive real axis in [0, 2*pi).
Cplx nearest_boundary_point(const DomainSpec& domain, Cplx w);

/// Distance from an arbitrary point to the boundary set (zero on it).
double boundary_residual(const DomainSpec& domain, Cplx p);

BoundarySample boundary_sample(const DomainSpec& domain, int n, const SampleWindow& window = {});

double hausdorff(const std::vector<Cplx>& xs, const std::vector<Cplx>& ys);

DomainSpec punctured(const DomainSpec& domain, Cplx w);

BoundaryConvergenceReport boundary_convergence_check(const std::vector<DomainSpec>& sequence,
                                                     const DomainSpec& limit, double tolerance);

// --- classification helpers -------------------------------------------------

/// Complement contains at least two points.
bool is_hyperbolic(const DomainSpec& domain);
bool is_simply_connected(const DomainSpec& domain);
bool is_bounded(const DomainSpec& domain);
bool has_connected_boundary(const DomainSpec& domain);
int boundary_component_count(const DomainSpec& domain);

/// Characteristic length used for solver and sampling defaults.
double domain_scale(const DomainSpec& domain);

/// Bounded components of the complement, as disks (exterior-disk and
/// annulus cores). Polygons and disks have unbounded complements only.
std::vector<Disk> bounded_complement_disks(const DomainSpec& domain);

/// Samples of the closed complement: boundary samples plus interior samples
/// of bounded complement components. Feeds the pair-supremum optimizers.
std::vector<Cplx> complement_sample(const DomainSpec& domain, int boundary_n, int interior_n,
                                    const SampleWindow& window = {});

/// Projects z onto the closed complement: interior points map to a nearest
/// boundary point, complement points stay put.
Cplx project_to_complement(const DomainSpec& domain, Cplx z);

/// Image of the domain under z -> alpha*z + beta (alpha != 0).
DomainSpec transform_affine(const DomainSpec& domain, Cplx alpha, Cplx beta);

} // namespace metricroom::geom

#endif
