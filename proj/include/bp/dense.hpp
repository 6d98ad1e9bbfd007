#pragma once

#include <Eigen/Dense>
#include <functional>

#include "bp/problem.hpp"

namespace bp {

inline constexpr int kDenseCap = 4096;

using DenseMatrix = Eigen::MatrixXcd;
using DenseVector = Eigen::VectorXcd;

DenseVector to_vector(const ComplexField& f);
ComplexField to_field(const DenseVector& v, const GridSpec& grid);

/// Column j equals op(e_j). Throws above kDenseCap unknowns.
DenseMatrix assemble_dense_op(const GridSpec& grid,
                              const std::function<ComplexField(const ComplexField&)>& op);

DenseMatrix assemble_dense(const Problem& p);        // columns of apply_A
DenseMatrix assemble_dense_G(const Problem& p);      // columns of apply_G
DenseMatrix assemble_dense_born(const Problem& p);   // columns of I - G V

/// LU-backed dense solve A x = b (oracle path).
DenseVector dense_solve(const DenseMatrix& A, const DenseVector& b);

/// Largest/smallest singular values via the Hermitian square.
std::pair<double, double> dense_extremal_singular_values(const DenseMatrix& M);

}  // namespace bp
