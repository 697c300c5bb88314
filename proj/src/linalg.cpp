#include "euclidpt/linalg.hpp"

#include <Eigen/Eigenvalues>

#include "euclidpt/errors.hpp"

namespace euclidpt {

EigenDecomposition eigen_general(const Eigen::MatrixXcd& m, bool want_vectors) {
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(m, want_vectors);
  if (es.info() != Eigen::Success) throw ConvergenceFailure("complex eigensolver did not converge");
  EigenDecomposition out;
  out.values = es.eigenvalues();
  if (want_vectors) out.vectors = es.eigenvectors().colwise().normalized();
  return out;
}

EigenDecomposition eigen_general(const Eigen::MatrixXd& m, bool want_vectors) {
  Eigen::EigenSolver<Eigen::MatrixXd> es(m, want_vectors);
  if (es.info() != Eigen::Success) throw ConvergenceFailure("real eigensolver did not converge");
  EigenDecomposition out;
  out.values = es.eigenvalues();
  if (want_vectors) out.vectors = es.eigenvectors().colwise().normalized();
  return out;
}

}  // namespace euclidpt
