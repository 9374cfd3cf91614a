#include "triphase/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace triphase {

double hermiticity_error(const Mat3& m) {
  return (m - m.adjoint()).norm();
}

namespace {

// One complex Jacobi rotation zeroing a(p,q). With a_pq = |a_pq| e^{i phi},
// the rotation columns are R e_p = c e_p + s e_q and R e_q = -conj(s) e_p + c e_q
// where s = sin(theta) e^{-i phi}, c = cos(theta), and tan(theta) solves
// t^2 |a_pq| - t (a_qq - a_pp) - |a_pq| = 0 (smaller-angle root).
void rotate(Mat3& a, Mat3& v, int p, int q) {
  const double apq = std::abs(a(p, q));
  if (apq == 0.0) return;
  const double app = a(p, p).real();
  const double aqq = a(q, q).real();
  const double tau = (aqq - app) / (2.0 * apq);
  const double t = (tau >= 0.0 ? -1.0 : 1.0) /
                   (std::abs(tau) + std::sqrt(1.0 + tau * tau));
  const double c = 1.0 / std::sqrt(1.0 + t * t);
  const Complex phase = a(p, q) / apq;
  const Complex s = t * c * std::conj(phase);

  Mat3 r = Mat3::Identity();
  r(p, p) = c;
  r(q, q) = c;
  r(q, p) = s;
  r(p, q) = -std::conj(s);

  a = (r.adjoint() * a * r).eval();
  a(p, q) = 0.0;  // zeroed by construction; drop rounding residue
  a(q, p) = 0.0;
  v = (v * r).eval();
}

double off_diagonal_sq(const Mat3& a) {
  return std::norm(a(0, 1)) + std::norm(a(0, 2)) + std::norm(a(1, 2));
}

}  // namespace

EigenSystem eigensolve_hermitian(const Mat3& h) {
  const double scale = std::max(h.norm(), 1.0);
  if (hermiticity_error(h) > 1e-12 * scale) {
    throw std::invalid_argument("eigensolve_hermitian: input is not Hermitian");
  }

  Mat3 a = 0.5 * (h + h.adjoint());  // exact symmetrization of rounding noise
  Mat3 v = Mat3::Identity();

  constexpr int kMaxSweeps = 32;
  const double tol = 1e-30 * scale * scale;
  for (int sweep = 0; sweep < kMaxSweeps && off_diagonal_sq(a) > tol; ++sweep) {
    rotate(a, v, 0, 1);
    rotate(a, v, 0, 2);
    rotate(a, v, 1, 2);
  }

  std::array<int, 3> order = {0, 1, 2};
  std::sort(order.begin(), order.end(),
            [&](int x, int y) { return a(x, x).real() < a(y, y).real(); });

  EigenSystem out;
  for (int n = 0; n < 3; ++n) {
    out.eigenvalues[static_cast<std::size_t>(n)] = a(order[static_cast<std::size_t>(n)], order[static_cast<std::size_t>(n)]).real();
    out.eigenvectors.col(n) = v.col(order[static_cast<std::size_t>(n)]);
  }
  return out;
}

Mat3 matrix_exponential_unitary(const Mat3& h, double t) {
  const EigenSystem es = eigensolve_hermitian(h);
  Mat3 d = Mat3::Zero();
  for (int n = 0; n < 3; ++n) {
    d(n, n) = std::polar(1.0, -es.eigenvalues[static_cast<std::size_t>(n)] * t);
  }
  return es.eigenvectors * d * es.eigenvectors.adjoint();
}

}  // namespace triphase
