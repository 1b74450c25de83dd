#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <random>

#include "zdyn/actions.hpp"
#include "zdyn/error.hpp"

namespace zdyn {
namespace {

Eigen::MatrixXd to_eigen(const IntMatrix& m) {
  const auto k = static_cast<Eigen::Index>(m.dimension());
  Eigen::MatrixXd out(k, k);
  for (Eigen::Index r = 0; r < k; ++r) {
    for (Eigen::Index c = 0; c < k; ++c) {
      out(r, c) = m(static_cast<std::size_t>(r), static_cast<std::size_t>(c)).get_d();
    }
  }
  return out;
}

// Lexicographic on real parts, then imaginary parts, largest first.
bool embedding_before(const EigenEmbedding& a, const EigenEmbedding& b) {
  for (std::size_t i = 0; i < a.images.size(); ++i) {
    const double dr = a.images[i].real() - b.images[i].real();
    if (std::fabs(dr) > 1e-9) return dr > 0;
  }
  for (std::size_t i = 0; i < a.images.size(); ++i) {
    const double di = a.images[i].imag() - b.images[i].imag();
    if (std::fabs(di) > 1e-9) return di > 0;
  }
  return false;
}

}  // namespace

std::vector<EigenEmbedding> simultaneous_eigendata(const std::vector<IntMatrix>& matrices) {
  if (matrices.empty()) throw Error(ErrorKind::InvalidArgument, "no matrices");
  const std::size_t k = matrices.front().dimension();
  std::vector<Eigen::MatrixXd> dense;
  for (const auto& m : matrices) {
    if (m.dimension() != k) throw Error(ErrorKind::ValidationError, "matrices must share one size");
    dense.push_back(to_eigen(m));
  }

  std::mt19937_64 rng(20240601);
  std::uniform_int_distribution<int> coefficient(1, 10);
  constexpr int attempts = 5;
  for (int attempt = 0; attempt < attempts; ++attempt) {
    Eigen::MatrixXd combo = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(k), static_cast<Eigen::Index>(k));
    for (const auto& m : dense) combo += coefficient(rng) * m;

    Eigen::EigenSolver<Eigen::MatrixXd> solver(combo, true);
    if (solver.info() != Eigen::Success) continue;

    std::vector<EigenEmbedding> out;
    bool ok = true;
    for (Eigen::Index j = 0; j < static_cast<Eigen::Index>(k) && ok; ++j) {
      const Eigen::VectorXcd v = solver.eigenvectors().col(j);
      const double norm2 = v.squaredNorm();
      EigenEmbedding e;
      for (const auto& m : dense) {
        const Eigen::VectorXcd mv = m.cast<std::complex<double>>() * v;
        const std::complex<double> lambda = v.dot(mv) / norm2;  // dot conjugates the left side
        const double residual = (mv - lambda * v).norm() / std::sqrt(norm2);
        if (residual > 1e-8 * (1.0 + m.norm())) {
          ok = false;
          break;
        }
        e.images.push_back(lambda);
      }
      out.push_back(std::move(e));
    }
    if (!ok) continue;
    std::sort(out.begin(), out.end(), embedding_before);
    return out;
  }
  throw Error(ErrorKind::EigenSeparationFailure,
              "could not find common eigenvectors after " + std::to_string(attempts) + " attempts");
}

}  // namespace zdyn
