// Electrostatic shape summaries. The self-interaction integral J carries the
// integrable 1/|s-t| singularity; near panel pairs are handled by evaluating
// the inner panel integral analytically (flat-panel single-layer potential)
// under a fixed-order Gauss rule on the outer panel, far pairs by centroid
// products.

#include "scatmat/shape.hpp"

#include <cmath>

#include "scatmat/errors.hpp"

namespace scatmat {

namespace {

struct TriRule {
  int n;
  const double (*bary)[3];
  const double* weights;  // sum to 1, scaled by panel area on use
};

constexpr double kBary3[3][3] = {
    {2.0 / 3, 1.0 / 6, 1.0 / 6}, {1.0 / 6, 2.0 / 3, 1.0 / 6}, {1.0 / 6, 1.0 / 6, 2.0 / 3}};
constexpr double kW3[3] = {1.0 / 3, 1.0 / 3, 1.0 / 3};

// degree-5 symmetric rule
constexpr double kA1 = 0.059715871789770, kB1 = 0.470142064105115;
constexpr double kA2 = 0.797426985353087, kB2 = 0.101286507323456;
constexpr double kBary7[7][3] = {
    {1.0 / 3, 1.0 / 3, 1.0 / 3}, {kA1, kB1, kB1}, {kB1, kA1, kB1}, {kB1, kB1, kA1},
    {kA2, kB2, kB2},             {kB2, kA2, kB2}, {kB2, kB2, kA2}};
constexpr double kW7[7] = {0.225,
                           0.132394152788506, 0.132394152788506, 0.132394152788506,
                           0.125939180544827, 0.125939180544827, 0.125939180544827};

TriRule select_rule(int points) {
  if (points <= 3) return {3, kBary3, kW3};
  return {7, kBary7, kW7};
}

}  // namespace

double panel_potential(const Vec3& a, const Vec3& b, const Vec3& c,
                       const Vec3& p) {
  const Vec3 normal = (b - a).cross(c - a);
  const double two_area = normal.norm();
  if (two_area <= 0.0) return 0.0;
  const Vec3 n = normal / two_area;

  const double dist = n.dot(p - a);       // signed height above panel plane
  const Vec3 rho = p - dist * n;          // in-plane projection
  const double abs_d = std::abs(dist);
  const double scale = std::sqrt(two_area);
  const double eps = 1e-12 * scale;

  const Vec3* v[4] = {&a, &b, &c, &a};
  double log_sum = 0.0, atan_sum = 0.0;
  for (int e = 0; e < 3; ++e) {
    const Vec3& va = *v[e];
    const Vec3& vb = *v[e + 1];
    const Vec3 s_hat = (vb - va).normalized();
    const Vec3 m_hat = s_hat.cross(n);    // outward in-plane edge normal
    const double t0 = m_hat.dot(va - rho);
    const double l_minus = s_hat.dot(va - rho);
    const double l_plus = s_hat.dot(vb - rho);
    const double r_minus = (p - va).norm();
    const double r_plus = (p - vb).norm();
    const double r0_sq = t0 * t0 + dist * dist;

    if (r0_sq < eps * eps) continue;      // observation point on the edge line

    // (R+l)(R-l) = t0^2 + d^2 at both endpoints; pick the stable quotient
    double log_term;
    if (l_plus + l_minus >= 0.0)
      log_term = std::log((r_plus + l_plus) / (r_minus + l_minus));
    else
      log_term = std::log((r_minus - l_minus) / (r_plus - l_plus));
    log_sum += t0 * log_term;

    if (abs_d > 0.0) {
      atan_sum += std::atan2(t0 * l_plus, r0_sq + abs_d * r_plus) -
                  std::atan2(t0 * l_minus, r0_sq + abs_d * r_minus);
    }
  }
  return log_sum - abs_d * atan_sum;
}

double surface_area(const SurfaceMesh& mesh) {
  double area = 0.0;
  for (double a : mesh.panel_areas) area += a;
  return area;
}

double self_interaction_integral(const SurfaceMesh& mesh,
                                 const QuadratureOptions& opt) {
  const int np = mesh.panel_count();
  const TriRule rule = select_rule(opt.gauss_points);

  std::vector<double> radius(np);
  for (int i = 0; i < np; ++i) {
    const auto& pn = mesh.panels[i];
    double r = 0.0;
    for (int k = 0; k < 3; ++k)
      r = std::max(r, (mesh.vertices[pn[k]] - mesh.panel_centroids[i]).norm());
    radius[i] = r;
  }

  std::vector<double> partial(np, 0.0);
#pragma omp parallel for schedule(static)
  for (int i = 0; i < np; ++i) {
    const auto& pi = mesh.panels[i];
    const Vec3& ci = mesh.panel_centroids[i];
    const double ai = mesh.panel_areas[i];

    Vec3 gauss[7];
    for (int g = 0; g < rule.n; ++g)
      gauss[g] = rule.bary[g][0] * mesh.vertices[pi[0]] +
                 rule.bary[g][1] * mesh.vertices[pi[1]] +
                 rule.bary[g][2] * mesh.vertices[pi[2]];

    double acc = 0.0;
    for (int j = 0; j < np; ++j) {
      const double dist = (ci - mesh.panel_centroids[j]).norm();
      if (i != j && dist > opt.far_threshold * (radius[i] + radius[j])) {
        acc += ai * mesh.panel_areas[j] / dist;
      } else {
        const auto& pj = mesh.panels[j];
        const Vec3 &a = mesh.vertices[pj[0]], &b = mesh.vertices[pj[1]],
                   &c = mesh.vertices[pj[2]];
        double inner = 0.0;
        for (int g = 0; g < rule.n; ++g)
          inner += rule.weights[g] * panel_potential(a, b, c, gauss[g]);
        acc += ai * inner;
      }
    }
    partial[i] = acc;
  }

  double total = 0.0;
  for (int i = 0; i < np; ++i) total += partial[i];  // fixed-order reduction
  return total;
}

double capacitance(const SurfaceMesh& mesh, const QuadratureOptions& opt) {
  const double area = surface_area(mesh);
  const double J = self_interaction_integral(mesh, opt);
  return 4.0 * kPi * area * area / J;
}

ShapeSummary ShapeSummary::from_mesh(const SurfaceMesh& mesh,
                                     const QuadratureOptions& opt) {
  ShapeSummary s;
  s.area = surface_area(mesh);
  s.self_integral = self_interaction_integral(mesh, opt);
  s.capacitance = 4.0 * kPi * s.area * s.area / s.self_integral;
  s.diameter = mesh.diameter;
  if (!(s.area > 0.0) || !(s.self_integral > 0.0) || !(s.capacitance > 0.0))
    throw InvalidMeshError("shape summary is not positive");

  // capacitance monotonicity bound vs the circumscribed sphere
  Vec3 centroid = Vec3::Zero();
  for (const auto& v : mesh.vertices) centroid += v;
  centroid /= double(mesh.vertices.size());
  double r_circ = 0.0;
  for (const auto& v : mesh.vertices)
    r_circ = std::max(r_circ, (v - centroid).norm());
  if (s.capacitance > 4.0 * kPi * r_circ * 1.01)
    throw InvalidMeshError("capacitance exceeds circumscribed-sphere bound");
  return s;
}

ShapeSummary ShapeSummary::sphere(double radius) {
  if (radius <= 0.0) throw Error("sphere radius must be positive");
  ShapeSummary s;
  s.area = 4.0 * kPi * radius * radius;
  s.self_integral = 16.0 * kPi * kPi * radius * radius * radius;
  s.capacitance = 4.0 * kPi * radius;
  s.diameter = 2.0 * radius;
  return s;
}

EffectiveCapacitance effective_capacitance(double C, double area, cdouble h,
                                           double resonance_guard) {
  if (!(C > 0.0) || !(area > 0.0))
    throw Error("effective capacitance requires positive C and area");
  if (h == cdouble(0.0, 0.0))
    throw Error("zero impedance (Neumann limit) is not supported");
  const cdouble denom = 1.0 + C / (h * area);
  if (std::abs(denom) < resonance_guard)
    throw ResonanceError("effective capacitance denominator within resonance guard");
  return {C / denom, h};
}

}  // namespace scatmat
