// Copyright 2026 The qwork developers
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qwork/eigensolver.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "qwork/errors.hpp"

namespace qwork {

namespace {

// Implicit-shift QL on a real symmetric tridiagonal matrix (diagonal d,
// subdiagonal e, e[i] coupling i and i+1). Plane rotations are accumulated
// into the complex columns of z.
void ql_implicit_shift(std::vector<double>& d, std::vector<double>& e, ComplexMatrix& z) {
  const std::size_t n = d.size();
  if (n <= 1) return;
  e.resize(n, 0.0);  // sentinel slot used by the shift bookkeeping

  constexpr double eps = std::numeric_limits<double>::epsilon();
  for (std::size_t l = 0; l < n; ++l) {
    int iter = 0;
    std::size_t m;
    do {
      for (m = l; m + 1 < n; ++m) {
        const double dd = std::fabs(d[m]) + std::fabs(d[m + 1]);
        if (std::fabs(e[m]) <= eps * dd) break;
      }
      if (m != l) {
        if (iter++ == 64) throw NoConvergence("eig_hermitian: QL iteration stalled");
        double g = (d[l + 1] - d[l]) / (2.0 * e[l]);
        double r = std::hypot(g, 1.0);
        g = d[m] - d[l] + e[l] / (g + std::copysign(r, g));
        double s = 1.0, c = 1.0, p = 0.0;
        std::size_t i = m;  // loop below walks i = m-1 .. l
        bool underflow = false;
        while (i-- > l) {
          double f = s * e[i];
          const double b = c * e[i];
          r = std::hypot(f, g);
          e[i + 1] = r;
          if (r == 0.0) {
            d[i + 1] -= p;
            e[m] = 0.0;
            underflow = true;
            break;
          }
          s = f / r;
          c = g / r;
          g = d[i + 1] - p;
          r = (d[i] - g) * s + 2.0 * c * b;
          p = s * r;
          d[i + 1] = g + p;
          g = c * r - b;
          for (std::size_t k = 0; k < n; ++k) {
            const Complex zf = z(k, i + 1);
            z(k, i + 1) = s * z(k, i) + c * zf;
            z(k, i) = c * z(k, i) - s * zf;
          }
        }
        if (underflow && i + 1 > l) continue;
        d[l] -= p;
        e[l] = g;
        e[m] = 0.0;
      }
    } while (m != l);
  }
}

void sort_ascending(std::vector<double>& d, ComplexMatrix& z) {
  const std::size_t n = d.size();
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&d](std::size_t a, std::size_t b) { return d[a] < d[b]; });

  std::vector<double> ds(n);
  ComplexMatrix zs(n);
  for (std::size_t k = 0; k < n; ++k) {
    ds[k] = d[order[k]];
    for (std::size_t r = 0; r < n; ++r) zs(r, k) = z(r, order[k]);
  }
  d = std::move(ds);
  z = std::move(zs);
}

}  // namespace

ComplexMatrix Eigensystem::reconstruct() const {
  const std::size_t n = dim();
  ComplexMatrix scaled = vectors;
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t r = 0; r < n; ++r) scaled(r, k) *= eigenvalues[k];
  }
  return multiply(scaled, vectors.adjoint());
}

Eigensystem eig_hermitian(const ComplexMatrix& h) {
  const std::size_t n = h.dim();
  if (n == 0) return {};
  if (h.hermiticity_defect() >= 1e-10 * static_cast<double>(n)) {
    throw NotHermitian("eig_hermitian: ‖h − h†‖_F exceeds 1e-10·dim");
  }

  ComplexMatrix a(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a(i, j) = 0.5 * (h(i, j) + std::conj(h(j, i)));
  }

  ComplexMatrix q = ComplexMatrix::identity(n);
  std::vector<Complex> v(n), w(n), p(n);

  // Householder reduction to Hermitian tridiagonal form, q accumulating the
  // product of reflectors.
  for (std::size_t k = 0; k + 2 < n; ++k) {
    double tail2 = 0.0;
    for (std::size_t i = k + 2; i < n; ++i) tail2 += std::norm(a(i, k));
    if (tail2 == 0.0) continue;  // column already tridiagonal

    double xnorm2 = tail2 + std::norm(a(k + 1, k));
    const double xnorm = std::sqrt(xnorm2);
    const Complex alpha = a(k + 1, k);
    const double aabs = std::abs(alpha);
    const Complex phase = aabs > 0.0 ? alpha / aabs : Complex(1.0);
    const Complex beta = -phase * xnorm;

    // v ∝ x − β e₁; the sign choice keeps v[0] away from cancellation.
    for (std::size_t i = k + 1; i < n; ++i) v[i] = a(i, k);
    v[k + 1] -= beta;
    double vnorm2 = 0.0;
    for (std::size_t i = k + 1; i < n; ++i) vnorm2 += std::norm(v[i]);
    if (vnorm2 == 0.0) continue;
    const double vinv = 1.0 / std::sqrt(vnorm2);
    for (std::size_t i = k + 1; i < n; ++i) v[i] *= vinv;

    // Hermitian rank-2 update of the trailing block: T ← T − v w† − w v†
    // with p = T v, μ = v†p, w = 2(p − μ v).
    double mu = 0.0;
    for (std::size_t i = k + 1; i < n; ++i) {
      Complex acc = 0.0;
      for (std::size_t j = k + 1; j < n; ++j) acc += a(i, j) * v[j];
      p[i] = acc;
    }
    for (std::size_t i = k + 1; i < n; ++i) mu += (std::conj(v[i]) * p[i]).real();
    for (std::size_t i = k + 1; i < n; ++i) w[i] = 2.0 * (p[i] - mu * v[i]);
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        a(i, j) -= v[i] * std::conj(w[j]) + w[i] * std::conj(v[j]);
      }
    }

    a(k + 1, k) = beta;
    a(k, k + 1) = std::conj(beta);
    for (std::size_t i = k + 2; i < n; ++i) {
      a(i, k) = 0.0;
      a(k, i) = 0.0;
    }

    for (std::size_t r = 0; r < n; ++r) {
      Complex s = 0.0;
      for (std::size_t m = k + 1; m < n; ++m) s += q(r, m) * v[m];
      s *= 2.0;
      for (std::size_t j = k + 1; j < n; ++j) q(r, j) -= s * std::conj(v[j]);
    }
  }

  // Rescale by a diagonal of phases so every subdiagonal becomes real ≥ 0.
  std::vector<double> d(n), e(n > 0 ? n - 1 : 0);
  std::vector<Complex> dphase(n, Complex(1.0));
  for (std::size_t k = 0; k + 1 < n; ++k) {
    const Complex bk = a(k + 1, k);
    const double ab = std::abs(bk);
    e[k] = ab;
    dphase[k + 1] = ab > 0.0 ? bk * dphase[k] / ab : dphase[k];
  }
  for (std::size_t i = 0; i < n; ++i) d[i] = a(i, i).real();
  for (std::size_t j = 0; j < n; ++j) {
    if (dphase[j] == Complex(1.0)) continue;
    for (std::size_t r = 0; r < n; ++r) q(r, j) *= dphase[j];
  }

  ql_implicit_shift(d, e, q);
  sort_ascending(d, q);

  Eigensystem es;
  es.eigenvalues = std::move(d);
  es.vectors = std::move(q);
  return es;
}

Eigensystem eig_of_diagonal(const std::vector<double>& diag) {
  const std::size_t n = diag.size();
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&diag](std::size_t a, std::size_t b) { return diag[a] < diag[b]; });

  Eigensystem es;
  es.eigenvalues.resize(n);
  es.vectors = ComplexMatrix(n);
  for (std::size_t k = 0; k < n; ++k) {
    es.eigenvalues[k] = diag[order[k]];
    es.vectors(order[k], k) = 1.0;
  }
  es.diagonal_input = diag;
  return es;
}

ComplexMatrix spectral_function(const Eigensystem& es, const std::function<Complex(double)>& f) {
  const std::size_t n = es.dim();
  if (!es.diagonal_input.empty()) {
    ComplexMatrix out(n);
    for (std::size_t i = 0; i < n; ++i) out(i, i) = f(es.diagonal_input[i]);
    return out;
  }
  ComplexMatrix scaled = es.vectors;
  for (std::size_t k = 0; k < n; ++k) {
    const Complex fk = f(es.eigenvalues[k]);
    for (std::size_t r = 0; r < n; ++r) scaled(r, k) *= fk;
  }
  return multiply(scaled, es.vectors.adjoint());
}

ComplexMatrix expm(const Eigensystem& es, Complex c) {
  return spectral_function(es, [c](double lambda) { return std::exp(c * lambda); });
}

ComplexMatrix expm_hermitian(const ComplexMatrix& h, Complex c) {
  return expm(eig_hermitian(h), c);
}

}  // namespace qwork
