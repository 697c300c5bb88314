#pragma once

#include <Eigen/Dense>

namespace euclidpt {

// Right eigenpairs of a general square matrix; `vectors` is left empty unless
// requested. Columns of `vectors` have unit 2-norm.
struct EigenDecomposition {
  Eigen::VectorXcd values;
  Eigen::MatrixXcd vectors;
};

EigenDecomposition eigen_general(const Eigen::MatrixXcd& m, bool want_vectors);
EigenDecomposition eigen_general(const Eigen::MatrixXd& m, bool want_vectors);

}  // namespace euclidpt
