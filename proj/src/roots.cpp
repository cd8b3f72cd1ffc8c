#include "lpqmf/roots.hpp"

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>

#include "lpqmf/errors.hpp"

namespace lpqmf {

namespace {

// Newton refinement on p; keeps the iterate with the smallest |p|.
Complex polish_root(const RealPoly& p, const RealPoly& dp, Complex z) {
  Complex best = z;
  double best_val = std::abs(p.eval(z));
  for (int it = 0; it < 20; ++it) {
    Complex d = dp.eval(z);
    if (std::abs(d) == 0.0) break;
    z -= p.eval(z) / d;
    double v = std::abs(p.eval(z));
    if (v < best_val) {
      best_val = v;
      best = z;
    }
  }
  return best;
}

std::vector<Complex> companion_eigenvalues(const RealPoly& p) {
  int n = p.degree();
  // Scale the variable so that the first and last coefficients balance; the
  // inputs here are mostly palindromic, for which s stays 1.
  double s = 1.0;
  if (std::abs(p[0]) > 0.0) {
    s = std::pow(std::abs(p[0] / p.leading()), 1.0 / n);
    s = std::clamp(s, 1e-3, 1e3);
  }
  std::vector<double> c(static_cast<size_t>(n) + 1);
  double sk = 1.0;
  for (int k = 0; k <= n; ++k) {
    c[static_cast<size_t>(k)] = p[k] * sk;
    sk *= s;
  }
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(n, n);
  for (int i = 1; i < n; ++i) m(i, i - 1) = 1.0;
  for (int i = 0; i < n; ++i) m(i, n - 1) = -c[static_cast<size_t>(i)] / c[static_cast<size_t>(n)];
  Eigen::EigenSolver<Eigen::MatrixXd> solver(m, false);
  std::vector<Complex> out;
  out.reserve(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) out.push_back(solver.eigenvalues()(i) * s);
  return out;
}

struct Cluster {
  Complex center;
  int size = 0;
};

std::vector<Cluster> cluster_roots(const std::vector<Complex>& roots, double rel_tol) {
  std::vector<Cluster> clusters;
  std::vector<bool> used(roots.size(), false);
  for (size_t i = 0; i < roots.size(); ++i) {
    if (used[i]) continue;
    Complex sum = roots[i];
    int count = 1;
    used[i] = true;
    for (size_t j = i + 1; j < roots.size(); ++j) {
      if (used[j]) continue;
      if (std::abs(roots[j] - roots[i]) <= rel_tol * (1.0 + std::abs(roots[i]))) {
        sum += roots[j];
        ++count;
        used[j] = true;
      }
    }
    clusters.push_back({sum / static_cast<double>(count), count});
  }
  return clusters;
}

// Pair conjugates and snap near-real roots onto the axis.
void enforce_conjugate_closure(std::vector<RootMultiplicity>& roots) {
  const double tol = 1e-9;
  for (auto& r : roots)
    if (std::abs(r.value.imag()) <= tol * (1.0 + std::abs(r.value))) r.value = Complex(r.value.real(), 0.0);
  std::vector<bool> used(roots.size(), false);
  for (size_t i = 0; i < roots.size(); ++i) {
    if (used[i] || roots[i].value.imag() <= 0.0) continue;
    for (size_t j = 0; j < roots.size(); ++j) {
      if (j == i || used[j] || roots[j].value.imag() >= 0.0) continue;
      if (roots[j].multiplicity != roots[i].multiplicity) continue;
      if (std::abs(std::conj(roots[j].value) - roots[i].value) <=
          tol * (1.0 + std::abs(roots[i].value)) * 10.0) {
        Complex avg = 0.5 * (roots[i].value + std::conj(roots[j].value));
        roots[i].value = avg;
        roots[j].value = std::conj(avg);
        used[i] = used[j] = true;
        break;
      }
    }
  }
}

}  // namespace

ComplexRootSet::ComplexRootSet(std::vector<RootMultiplicity> roots) : roots_(std::move(roots)) {
  std::sort(roots_.begin(), roots_.end(), [](const RootMultiplicity& a, const RootMultiplicity& b) {
    if (a.value.real() != b.value.real()) return a.value.real() < b.value.real();
    return a.value.imag() < b.value.imag();
  });
}

int ComplexRootSet::total_multiplicity() const {
  int t = 0;
  for (const auto& r : roots_) t += r.multiplicity;
  return t;
}

std::vector<Complex> ComplexRootSet::expanded() const {
  std::vector<Complex> out;
  out.reserve(static_cast<size_t>(total_multiplicity()));
  for (const auto& r : roots_)
    for (int k = 0; k < r.multiplicity; ++k) out.push_back(r.value);
  return out;
}

ComplexRootSet poly_roots(const RealPoly& p) {
  if (p.is_zero()) throw ValidationError("poly_roots: zero polynomial");
  if (p.degree() < 1) throw ValidationError("poly_roots: degree must be at least 1");

  std::vector<RootMultiplicity> found;
  RealPoly work = (1.0 / p.norm_inf()) * p;

  // +-1 carry all the high multiplicities in this problem family; peel them
  // off exactly before handing the rest to the eigensolver.
  for (double x0 : {-1.0, 1.0}) {
    int m = multiplicity_at(work, Complex(x0, 0.0));
    m = std::min(m, work.degree());
    if (m > 0) {
      found.push_back({Complex(x0, 0.0), m});
      work = deflate_real_root(work, x0, m);
    }
  }

  if (work.degree() >= 1) {
    std::vector<Complex> eigs = companion_eigenvalues(work);
    RealPoly dwork = work.derivative();
    for (auto& z : eigs) z = polish_root(work, dwork, z);
    std::vector<Cluster> clusters = cluster_roots(eigs, 3e-6);
    for (const auto& cl : clusters) {
      Complex z = cl.center;
      if (cl.size > 1) {
        // A root of multiplicity k is a simple root of the (k-1)-th derivative.
        RealPoly d = work;
        for (int i = 0; i + 1 < cl.size; ++i) d = d.derivative();
        z = polish_root(d, d.derivative(), z);
      }
      found.push_back({z, cl.size});
    }
  }

  enforce_conjugate_closure(found);
  return ComplexRootSet(std::move(found));
}

int multiplicity_at(const RealPoly& p, Complex z0, double tol) {
  if (p.is_zero()) throw ValidationError("multiplicity_at: zero polynomial");
  std::vector<Complex> taylor = taylor_at(p, z0);
  double scale = p.norm_inf();
  for (const auto& c : taylor) scale = std::max(scale, std::abs(c));
  int m = 0;
  while (m < static_cast<int>(taylor.size()) && std::abs(taylor[static_cast<size_t>(m)]) <= tol * scale) ++m;
  return std::min(m, p.degree());
}

Complex refine_root(const RealPoly& p, Complex z0) {
  // Extended-precision Newton; the recovered parameters go through
  // ill-conditioned maps downstream, so the root itself should carry no
  // double-rounding floor.
  using LC = std::complex<long double>;
  const auto& c = p.coeffs();
  auto eval = [&](LC x, LC* deriv) {
    LC acc = 0.0L, d = 0.0L;
    for (size_t i = c.size(); i-- > 0;) {
      d = d * x + acc;
      acc = acc * x + static_cast<long double>(c[i]);
    }
    *deriv = d;
    return acc;
  };
  LC z(z0.real(), z0.imag());
  LC best = z;
  long double best_res = -1.0L;
  for (int it = 0; it < 24; ++it) {
    LC d, v = eval(z, &d);
    long double res = std::abs(v);
    if (best_res < 0.0L || res < best_res) {
      best_res = res;
      best = z;
    }
    if (res == 0.0L || std::abs(d) == 0.0L) break;
    z -= v / d;
  }
  return Complex(static_cast<double>(best.real()), static_cast<double>(best.imag()));
}

RealPoly expand_from_roots(double leading, const ComplexRootSet& roots) {
  std::vector<Complex> acc{Complex(leading, 0.0)};
  for (const Complex& r : roots.expanded()) {
    std::vector<Complex> next(acc.size() + 1, Complex(0.0));
    for (size_t k = 0; k < acc.size(); ++k) {
      next[k] += acc[k] * (-r);
      next[k + 1] += acc[k];
    }
    acc = std::move(next);
  }
  std::vector<double> real_coeffs(acc.size());
  for (size_t k = 0; k < acc.size(); ++k) real_coeffs[k] = acc[k].real();
  return RealPoly(std::move(real_coeffs));
}

}  // namespace lpqmf
