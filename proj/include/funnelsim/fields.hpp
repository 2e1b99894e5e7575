#pragma once

#include <Eigen/Dense>
#include <complex>
#include <memory>
#include <string>
#include <vector>

#include "funnelsim/constants.hpp"

// Electric-field models for every beam in the experiment: far-field
// Gaussian beams, the diffracted funnel near-field, the blue-WGM
// evanescent barrier, the top-beam reflection lattice, and imported
// grid fields. All evaluators are pure functions of (params, r) and
// safe for unlimited concurrent evaluation.

namespace funnelsim::fields {

using Vec3 = Eigen::Vector3d;
using CVec3 = Eigen::Vector3cd;

// Complex field amplitude convention: the physical field is
// Re(E exp(-i w t)), so intensity I = (eps0 c / 2) |E|^2.
struct VectorFieldSample {
  CVec3 E;              // V/m
  double wavelength_m;  // tags which polarizability entry applies

  double intensity() const {
    return 0.5 * constants::epsilon0 * constants::c_light * E.squaredNorm();
  }
};

inline double field_norm_from_intensity(double intensity) {
  return std::sqrt(2.0 * intensity / (constants::epsilon0 * constants::c_light));
}

struct BeamParams {
  double power_w = 0.0;
  double waist_m = 1e-6;     // 1/e^2 intensity radius at focus
  double wavelength_m = constants::lambda_red;
  CVec3 polarization{1.0, 0.0, 0.0};
  Vec3 axis{0.0, 0.0, 1.0};  // propagation direction, unit
  Vec3 focus{0.0, 0.0, 0.0};

  double rayleigh_range() const {
    return 3.14159265358979323846 * waist_m * waist_m / wavelength_m;
  }
  double width_at(double axial_dist) const;  // 1/e^2 radius at distance from focus
  // Throws std::invalid_argument on violated invariants (power < 0,
  // waist <= 0, non-unit or non-transverse polarization).
  void validate() const;
};

// Paraxial Gaussian beam. Amplitude-and-polarization model: carries the
// plane-wave propagation phase exp(i k u) but omits wavefront curvature
// and the Gouy phase, which nothing downstream consumes.
VectorFieldSample gaussian_beam_field(const BeamParams& beam, const Vec3& r);
double gaussian_beam_intensity(const BeamParams& beam, const Vec3& r);

// Diffracted funnel near-field above the waveguide (z >= 0).
//
// Surrogate for the FEM mode solution: a narrow diffraction lobe of 1/e^2
// halfwidth w(z) riding on a broad pedestal with the free-space width
// w_G(z). Lobe and pedestal amplitudes are chosen so that at every height
// the transverse-plane intensity integral equals the beam power and the
// on-axis intensity follows a calibrated profile I_ax(z). Far from the
// surface w -> w_G and the field reduces to the free-space Gaussian.
//
//   w(z)^2    = (1 - s^2) w0s^2 + s^2 w_G(z)^2,   s(z) = z^k/(z^k + z_c^k)
//   I_ax(z)   = I_G(z) + (boost - 1) I_G(0) / (1 + (z/z_a)^2)
struct FunnelProfile {
  double surface_halfwidth_m = 200e-9;  // w(0), 1/e^2 halfwidth
  double crossover_m = 37e-6;           // z_c
  double sharpness = 5.0;               // k
  double axis_boost = 2.4;              // I_ax(0) / I_G-axis(0)
  double boost_range_m = 1.0e-6;        // z_a
  BeamParams beam;                      // far-field bottom beam, axis +z

  double width(double z) const;  // 1/e^2 halfwidth of the lobe
  void validate() const;
};

VectorFieldSample funnel_field(const FunnelProfile& p, const Vec3& r);
double funnel_intensity(const FunnelProfile& p, const Vec3& r);
// Intensity and its gradient in one pass (analytic, for forces).
void funnel_intensity_grad(const FunnelProfile& p, const Vec3& r,
                           double& intensity, Vec3& grad);

enum class Chirality { cw, ccw };

// Evanescent field of a whispering-gallery mode above the waveguide top
// surface, in local coordinates of the straight racetrack section:
// propagation along y, decay along z, x transverse. Per the cylindrical
// mode form E_+- = [E_rho rho^ +- i E_phi phi^ + E_z z^] e^{+-i m phi},
// the phi^ (here y^) component is in quadrature; the e^{i m phi}
// circulation phase is dropped on the straight section.
struct WGMFieldParams {
  double circulating_power_w = 3.2e-3;
  double decay_length_m = 128.7e-9;      // field 1/e length, kappa_z^-1
  int azimuthal_order = 178;
  double transverse_halfwidth_m = 0.45e-6;  // 1/e^2 intensity halfwidth in x
  Chirality chirality = Chirality::cw;
  double waveguide_width_m = 750e-9;
  double waveguide_height_m = 380e-9;
  double wavelength_m = constants::lambda_blue;
  // Peak evanescent intensity at the top surface as a fraction of the
  // mean guided intensity P_circ /(width*height). Calibration knob for
  // the barrier strength.
  double surface_intensity_fraction = 0.0225;
  // Real component ratios (rho, phi, z) of the local polarization.
  Vec3 pol_components{0.2, 0.8, 1.0};

  double surface_intensity() const {
    return surface_intensity_fraction * circulating_power_w /
           (waveguide_width_m * waveguide_height_m);
  }
  // Degree of circular polarization about x^ implied by pol_components.
  double polarization_ellipticity() const;
  void validate() const;
};

VectorFieldSample wgm_evanescent_field(const WGMFieldParams& p, const Vec3& r);
double wgm_intensity(const WGMFieldParams& p, const Vec3& r);
void wgm_intensity_grad(const WGMFieldParams& p, const Vec3& r,
                        double& intensity, Vec3& grad);

// Standing wave formed by a top-illuminating beam (axis -z, focus on the
// surface plane) interfering with its own reflection. `reflectivity` is
// the field amplitude reflection coefficient in [0, 1]; the reflected
// wave carries the pi phase flip of a denser-medium reflection.
VectorFieldSample lattice_field(const BeamParams& top, double reflectivity,
                                const Vec3& r);

// (|E.e+|^2 - |E.e-|^2)/|E|^2 with e+- = (u +- i v)/sqrt(2) and (u, v,
// axis) right-handed. Throws on zero field.
double circular_polarization_degree(const VectorFieldSample& s, const Vec3& axis);

// Rectilinear-grid complex field dump, trilinearly interpolated.
// File format (text, version-tagged):
//   fieldgrid v1
//   wavelength_nm <float>
//   axis x <n> <x0> ... <xn-1>      (meters, strictly increasing)
//   axis y <n> ...
//   axis z <n> ...
//   data
//   <ReEx> <ImEx> <ReEy> <ImEy> <ReEz> <ImEz>   per node, x index slowest
class GridField {
 public:
  static GridField load(const std::string& path);
  static GridField parse(std::istream& in);

  VectorFieldSample operator()(const Vec3& r) const;
  double wavelength_m() const { return wavelength_m_; }

 private:
  std::vector<double> ax_[3];
  std::vector<CVec3> values_;  // x slowest, z fastest
  double wavelength_m_ = 0.0;

  std::size_t index(std::size_t ix, std::size_t iy, std::size_t iz) const {
    return (ix * ax_[1].size() + iy) * ax_[2].size() + iz;
  }
};

GridField import_grid_field(const std::string& path);

}  // namespace funnelsim::fields
