#include "cmaf/sphere.hpp"

#include <cmath>
#include <fstream>
#include <numbers>
#include <sstream>

#include "cmaf/errors.hpp"
#include "cmaf/format.hpp"

namespace cmaf {

namespace {

constexpr double kPi = std::numbers::pi;

// Gauss-Legendre nodes/weights on [-1, 1] by Newton iteration on P_n.
void gauss_legendre(int n, std::vector<double>& x, std::vector<double>& w) {
  x.assign(n, 0.0);
  w.assign(n, 0.0);
  for (int i = 0; i < n; ++i) {
    double xi = std::cos(kPi * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0, p1 = xi;
      for (int k = 2; k <= n; ++k) {
        const double p2 = ((2 * k - 1) * xi * p1 - (k - 1) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      dp = n * (xi * p1 - p0) / (xi * xi - 1.0);
      const double step = p1 / dp;
      xi -= step;
      if (std::abs(step) < 1e-15) break;
    }
    // recompute derivative at the converged node
    double p0 = 1.0, p1 = xi;
    for (int k = 2; k <= n; ++k) {
      const double p2 = ((2 * k - 1) * xi * p1 - (k - 1) * p0) / k;
      p0 = p1;
      p1 = p2;
    }
    dp = n * (xi * p1 - p0) / (xi * xi - 1.0);
    x[i] = xi;
    w[i] = 2.0 / ((1.0 - xi * xi) * dp * dp);
  }
}

inline std::size_t plm_index(int l, int m) {
  return static_cast<std::size_t>(l) * (l + 1) / 2 + m;
}

}  // namespace

Mode Mode::of_degree(int l) {
  if (l < 0) throw DomainError("Mode: degree must be nonnegative");
  return {l, eigenvalue(l)};
}

SphereGrid::SphereGrid(int n_theta, int n_phi) : n_theta_(n_theta), n_phi_(n_phi) {
  if (n_theta < 1 || n_phi < 1) throw DomainError("SphereGrid: node counts must be positive");
  gauss_legendre(n_theta, x_, gl_weight_);
  theta_.resize(n_theta);
  for (int i = 0; i < n_theta; ++i) theta_[i] = std::acos(x_[i]);
  dphi_ = 2.0 * kPi / n_phi;
  phi_.resize(n_phi);
  for (int j = 0; j < n_phi; ++j) phi_[j] = dphi_ * j;
}

std::shared_ptr<const SphereGrid> SphereGrid::for_degree(int l_max) {
  return std::make_shared<const SphereGrid>(l_max + 1, 2 * l_max + 1);
}

double SphereGrid::total_weight() const {
  double sum = 0.0;
  for (int i = 0; i < n_theta_; ++i) sum += gl_weight_[i];
  return sum * dphi_ * n_phi_;
}

std::vector<double> normalized_legendre_table(int l_max, double x) {
  std::vector<double> p(plm_index(l_max, l_max) + 1, 0.0);
  const double u = std::sqrt(std::max(0.0, 1.0 - x * x));
  p[plm_index(0, 0)] = std::sqrt(1.0 / (4.0 * kPi));
  for (int m = 1; m <= l_max; ++m)
    p[plm_index(m, m)] =
        u * std::sqrt((2.0 * m + 1.0) / (2.0 * m)) * p[plm_index(m - 1, m - 1)];
  for (int m = 0; m < l_max; ++m)
    p[plm_index(m + 1, m)] = std::sqrt(2.0 * m + 3.0) * x * p[plm_index(m, m)];
  for (int m = 0; m <= l_max; ++m) {
    for (int l = m + 2; l <= l_max; ++l) {
      const double a =
          std::sqrt((2.0 * l - 1.0) * (2.0 * l + 1.0) /
                    (static_cast<double>(l - m) * (l + m)));
      const double b = std::sqrt((2.0 * l + 1.0) * (l - 1.0 - m) * (l - 1.0 + m) /
                                 ((2.0 * l - 3.0) * static_cast<double>(l - m) * (l + m)));
      p[plm_index(l, m)] = a * x * p[plm_index(l - 1, m)] - b * p[plm_index(l - 2, m)];
    }
  }
  return p;
}

double real_harmonic(int l, int m, double theta, double phi) {
  if (l < 0 || std::abs(m) > l) throw DomainError("real_harmonic: invalid (l, m)");
  const auto p = normalized_legendre_table(l, std::cos(theta));
  const int ma = std::abs(m);
  const double plm = p[plm_index(l, ma)];
  if (m == 0) return plm;
  const double sqrt2 = std::numbers::sqrt2;
  return m > 0 ? sqrt2 * plm * std::cos(ma * phi) : sqrt2 * plm * std::sin(ma * phi);
}

double integrate(const GridField& f) {
  const SphereGrid& g = *f.grid;
  double sum = 0.0;
  for (int i = 0; i < g.n_theta(); ++i) {
    double row = 0.0;
    for (int j = 0; j < g.n_phi(); ++j) row += f.values[g.node_index(i, j)];
    sum += g.weight(i) * row;
  }
  return sum;
}

double inner_product(const GridField& f, const GridField& g) {
  if (f.grid != g.grid) throw DomainError("inner_product: fields on different grids");
  GridField prod(f.grid);
  for (std::size_t k = 0; k < prod.values.size(); ++k)
    prod.values[k] = f.values[k] * g.values[k];
  return integrate(prod);
}

SpectralField analyze(const GridField& field, int l_max) {
  const SphereGrid& g = *field.grid;
  if (!g.resolves(l_max))
    throw ResolutionError("analyze: grid under-resolves requested degree");

  // Stage 1: azimuthal sums  C_m(theta_i) = sum_j f cos(m phi_j) dphi  (and sin).
  const int nt = g.n_theta(), np = g.n_phi();
  std::vector<double> cosm(static_cast<std::size_t>(nt) * (l_max + 1));
  std::vector<double> sinm(static_cast<std::size_t>(nt) * (l_max + 1));
  const double dphi = 2.0 * kPi / np;
  for (int i = 0; i < nt; ++i) {
    for (int m = 0; m <= l_max; ++m) {
      double cs = 0.0, sn = 0.0;
      for (int j = 0; j < np; ++j) {
        const double v = field.values[g.node_index(i, j)];
        cs += v * std::cos(m * g.phi(j));
        sn += v * std::sin(m * g.phi(j));
      }
      cosm[static_cast<std::size_t>(i) * (l_max + 1) + m] = cs * dphi;
      sinm[static_cast<std::size_t>(i) * (l_max + 1) + m] = sn * dphi;
    }
  }

  // Stage 2: Legendre sums over theta with Gauss-Legendre weights.
  SpectralField out(l_max);
  const double sqrt2 = std::numbers::sqrt2;
  for (int i = 0; i < nt; ++i) {
    const auto p = normalized_legendre_table(l_max, g.cos_theta(i));
    const double wi = g.weight(i) * np / (2.0 * kPi);  // pure GL weight
    for (int l = 0; l <= l_max; ++l) {
      out.at(l, 0) += wi * p[plm_index(l, 0)] *
                      cosm[static_cast<std::size_t>(i) * (l_max + 1) + 0];
      for (int m = 1; m <= l; ++m) {
        const double plm = p[plm_index(l, m)];
        out.at(l, m) += wi * sqrt2 * plm *
                        cosm[static_cast<std::size_t>(i) * (l_max + 1) + m];
        out.at(l, -m) += wi * sqrt2 * plm *
                         sinm[static_cast<std::size_t>(i) * (l_max + 1) + m];
      }
    }
  }
  return out;
}

GridField synthesize(const SpectralField& coeffs, const SphereGridPtr& grid) {
  const SphereGrid& g = *grid;
  const int l_max = coeffs.l_max;
  GridField out(grid);
  const double sqrt2 = std::numbers::sqrt2;
  for (int i = 0; i < g.n_theta(); ++i) {
    const auto p = normalized_legendre_table(l_max, g.cos_theta(i));
    // collapse degrees first: A_m(theta) and B_m(theta)
    std::vector<double> am(l_max + 1, 0.0), bm(l_max + 1, 0.0);
    for (int l = 0; l <= l_max; ++l) {
      am[0] += coeffs.at(l, 0) * p[plm_index(l, 0)];
      for (int m = 1; m <= l; ++m) {
        am[m] += sqrt2 * coeffs.at(l, m) * p[plm_index(l, m)];
        bm[m] += sqrt2 * coeffs.at(l, -m) * p[plm_index(l, m)];
      }
    }
    for (int j = 0; j < g.n_phi(); ++j) {
      double v = am[0];
      for (int m = 1; m <= l_max; ++m)
        v += am[m] * std::cos(m * g.phi(j)) + bm[m] * std::sin(m * g.phi(j));
      out.values[g.node_index(i, j)] = v;
    }
  }
  return out;
}

SpectralField laplacian(const SpectralField& coeffs) {
  SpectralField out = coeffs;
  for (int l = 0; l <= coeffs.l_max; ++l)
    for (int m = -l; m <= l; ++m) out.at(l, m) *= -eigenvalue(l);
  return out;
}

double tracefree_hessian_div_factor(int l) {
  if (l < 0) throw DomainError("tracefree_hessian_div_factor: degree must be nonnegative");
  return 1.0 - 0.5 * eigenvalue(l);
}

std::array<GridField, 3> first_harmonics_basis(const SphereGridPtr& grid) {
  const SphereGrid& g = *grid;
  std::array<GridField, 3> out{GridField(grid), GridField(grid), GridField(grid)};
  for (int i = 0; i < g.n_theta(); ++i) {
    const double st = std::sin(g.theta(i));
    const double ct = g.cos_theta(i);
    for (int j = 0; j < g.n_phi(); ++j) {
      const std::size_t k = g.node_index(i, j);
      out[0].values[k] = st * std::cos(g.phi(j));
      out[1].values[k] = st * std::sin(g.phi(j));
      out[2].values[k] = ct;
    }
  }
  return out;
}

void write_grid_csv(const GridField& f, const std::string& path) {
  std::ofstream os(path);
  if (!os) throw DomainError("write_grid_csv: cannot open " + path);
  os << "theta,phi,value\n";
  const SphereGrid& g = *f.grid;
  for (int i = 0; i < g.n_theta(); ++i)
    for (int j = 0; j < g.n_phi(); ++j)
      os << format_number(g.theta(i)) << ',' << format_number(g.phi(j)) << ','
         << format_number(f.values[g.node_index(i, j)]) << '\n';
}

GridField read_grid_csv(const std::string& path) {
  std::ifstream is(path);
  if (!is) throw DomainError("read_grid_csv: cannot open " + path);
  std::string line;
  std::getline(is, line);  // header
  std::vector<double> theta, phi, value;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    std::istringstream ls(line);
    std::string tok;
    double row[3];
    for (double& r : row) {
      if (!std::getline(ls, tok, ',')) throw DomainError("read_grid_csv: malformed row");
      r = std::stod(tok);
    }
    theta.push_back(row[0]);
    phi.push_back(row[1]);
    value.push_back(row[2]);
  }
  // infer (n_theta, n_phi) from the row-major layout
  std::size_t np = 1;
  while (np < theta.size() && theta[np] == theta[0]) ++np;
  if (np == 0 || theta.size() % np != 0)
    throw DomainError("read_grid_csv: rows do not form a rectangular grid");
  const int n_theta = static_cast<int>(theta.size() / np);
  auto grid = std::make_shared<const SphereGrid>(n_theta, static_cast<int>(np));
  for (int i = 0; i < n_theta; ++i)
    for (std::size_t j = 0; j < np; ++j) {
      const std::size_t k = i * np + j;
      if (std::abs(theta[k] - grid->theta(i)) > 1e-12 ||
          std::abs(phi[k] - grid->phi(static_cast<int>(j))) > 1e-12)
        throw DomainError("read_grid_csv: nodes are not a Gauss-Legendre grid");
    }
  return GridField(grid, std::move(value));
}

}  // namespace cmaf
