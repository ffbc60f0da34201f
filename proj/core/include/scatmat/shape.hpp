#pragma once

#include "scatmat/mesh.hpp"
#include "scatmat/types.hpp"

namespace scatmat {

struct QuadratureOptions {
  // panel pairs farther than far_threshold*(r_i+r_j) use centroid products
  double far_threshold = 2.0;
  // symmetric triangle rule for the outer integral of near pairs: 3 or 7 points
  int gauss_points = 7;
};

// Electrostatic summaries of a particle shape. Units follow the Gaussian
// convention with unit permittivity, so a sphere of radius a has
// capacitance 4*pi*a.
struct ShapeSummary {
  double area = 0.0;           // |S|, L^2
  double self_integral = 0.0;  // J = \int_S \int_S ds dt / |s-t|, L^3
  double capacitance = 0.0;    // C = 4*pi*|S|^2 / J, L
  double diameter = 0.0;       // L

  static ShapeSummary from_mesh(const SurfaceMesh& mesh,
                                const QuadratureOptions& opt = {});
  static ShapeSummary sphere(double radius);  // closed forms
};

// Single-layer potential of a unit-density flat triangle:
// \int_T dA' / |p - r'|, evaluated analytically (exact up to roundoff).
double panel_potential(const Vec3& a, const Vec3& b, const Vec3& c,
                       const Vec3& p);

double surface_area(const SurfaceMesh& mesh);
double self_interaction_integral(const SurfaceMesh& mesh,
                                 const QuadratureOptions& opt = {});
double capacitance(const SurfaceMesh& mesh, const QuadratureOptions& opt = {});

// Impedance-corrected capacitance C / (1 + C/(h |S|)).
struct EffectiveCapacitance {
  cdouble value;      // L
  cdouble impedance;  // h, L^-1
};

EffectiveCapacitance effective_capacitance(double C, double area, cdouble h,
                                           double resonance_guard = 1e-8);

inline EffectiveCapacitance effective_capacitance(const ShapeSummary& shape,
                                                  cdouble h,
                                                  double resonance_guard = 1e-8) {
  return effective_capacitance(shape.capacitance, shape.area, h, resonance_guard);
}

}  // namespace scatmat
