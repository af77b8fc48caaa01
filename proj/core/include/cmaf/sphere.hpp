#pragma once

#include <array>
#include <cstddef>
#include <memory>
#include <string>
#include <vector>

namespace cmaf {

/// Spherical-harmonic degree with its Laplace eigenvalue on the unit sphere,
/// lambda_l = l(l+1).
struct Mode {
  int l = 0;
  double lambda = 0.0;

  static Mode of_degree(int l);
};

inline double eigenvalue(int l) { return static_cast<double>(l) * (l + 1); }

/// Gauss-Legendre colatitude nodes times a uniform azimuthal grid. Node
/// weights integrate band-limited functions exactly; the total weight is 4*pi.
/// Immutable after construction.
class SphereGrid {
 public:
  SphereGrid(int n_theta, int n_phi);

  /// Smallest grid with exact quadrature through degree 2*l_max:
  /// n_theta = l_max + 1, n_phi = 2*l_max + 1.
  static std::shared_ptr<const SphereGrid> for_degree(int l_max);

  int n_theta() const { return n_theta_; }
  int n_phi() const { return n_phi_; }
  std::size_t size() const { return theta_.size() * phi_.size(); }
  bool resolves(int l) const { return n_theta_ >= l + 1 && n_phi_ >= 2 * l + 1; }

  double theta(int i) const { return theta_[i]; }
  double cos_theta(int i) const { return x_[i]; }
  double phi(int j) const { return phi_[j]; }
  /// Full solid-angle weight of node (i, j).
  double weight(int i) const { return gl_weight_[i] * dphi_; }

  std::size_t node_index(int i, int j) const {
    return static_cast<std::size_t>(i) * phi_.size() + j;
  }

  double total_weight() const;

 private:
  int n_theta_;
  int n_phi_;
  double dphi_;
  std::vector<double> x_;          // Gauss-Legendre nodes in cos(theta)
  std::vector<double> theta_;
  std::vector<double> gl_weight_;
  std::vector<double> phi_;
};

using SphereGridPtr = std::shared_ptr<const SphereGrid>;

/// Samples of a scalar on a SphereGrid, row-major over (theta, phi).
struct GridField {
  SphereGridPtr grid;
  std::vector<double> values;

  explicit GridField(SphereGridPtr g)
      : grid(std::move(g)), values(grid ? grid->size() : 0, 0.0) {}
  GridField(SphereGridPtr g, std::vector<double> v)
      : grid(std::move(g)), values(std::move(v)) {}

  double& at(int i, int j) { return values[grid->node_index(i, j)]; }
  double at(int i, int j) const { return values[grid->node_index(i, j)]; }
};

/// Real orthonormal harmonic coefficients a_{l,m}, 0 <= l <= l_max,
/// -l <= m <= l, packed as index l^2 + (m + l).
struct SpectralField {
  int l_max = 0;
  std::vector<double> coeff;

  explicit SpectralField(int lmax)
      : l_max(lmax), coeff(static_cast<std::size_t>(lmax + 1) * (lmax + 1), 0.0) {}

  static std::size_t index(int l, int m) {
    return static_cast<std::size_t>(l) * l + (m + l);
  }
  double& at(int l, int m) { return coeff[index(l, m)]; }
  double at(int l, int m) const { return coeff[index(l, m)]; }
};

/// Real orthonormal spherical harmonic Y_{l,m}(theta, phi); L2(S^2) norm one,
/// no Condon-Shortley phase, so Y_{1,1}, Y_{1,-1}, Y_{1,0} are positive
/// multiples of sin(theta)cos(phi), sin(theta)sin(phi), cos(theta).
double real_harmonic(int l, int m, double theta, double phi);

/// Fully normalized associated Legendre values  Nbar_{l,m}(x)  for all
/// 0 <= m <= l <= l_max at a single x, packed as l*(l+1)/2 + m.
std::vector<double> normalized_legendre_table(int l_max, double x);

double integrate(const GridField& f);
double inner_product(const GridField& f, const GridField& g);

/// L2 projection onto the orthonormal real harmonic basis.
/// Throws ResolutionError when the grid under-resolves l_max.
SpectralField analyze(const GridField& field, int l_max);

/// Pointwise sum of basis functions.
GridField synthesize(const SpectralField& coeffs, const SphereGridPtr& grid);

/// Spectral Laplace-Beltrami operator: multiplies each degree-l coefficient
/// by -l(l+1).
SpectralField laplacian(const SpectralField& coeffs);

/// Scalar factor in  div tracefree-Hessian Y_l = (1 - lambda_l/2) grad Y_l.
double tracefree_hessian_div_factor(int l);

/// The basis {sin(theta)cos(phi), sin(theta)sin(phi), cos(theta)} of the first
/// eigenspace, normalized so each integrates to 4*pi/3 in L2.
std::array<GridField, 3> first_harmonics_basis(const SphereGridPtr& grid);

/// CSV export/import with rows theta,phi,value. Import reconstructs the grid
/// from the row structure and checks the nodes match a Gauss-Legendre grid.
void write_grid_csv(const GridField& f, const std::string& path);
GridField read_grid_csv(const std::string& path);

}  // namespace cmaf
