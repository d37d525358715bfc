#pragma once

#include <Eigen/Dense>
#include <complex>

namespace fraclab {

using Operator = Eigen::MatrixXcd;

// Matrix exponential (scaling-and-squaring with a high-order Pade core).
Operator matrix_exponential(const Operator& x);
Eigen::MatrixXd matrix_exponential(const Eigen::MatrixXd& x);

Operator commutator(const Operator& a, const Operator& b);

// Largest |entry| of a - b over the top-left (n-margin) x (n-margin) block.
// Truncation artifacts live in the last few rows/columns, so identities that
// hold exactly in the untruncated algebra are tested on this interior block.
double interior_deviation(const Operator& a, const Operator& b, int margin);

// Same, but for operators on a two-mode tensor space of per-mode dimension
// per_mode: only entries whose row and column indices decode to per-mode
// levels below per_mode - margin are compared.
double tensor_interior_deviation(const Operator& a, const Operator& b,
                                 int per_mode, int margin);

// Extracts the interior sub-matrix (rows and columns whose per-mode levels
// all stay below per_mode - margin) as a dense block, e.g. for norms.
Operator tensor_interior_block(const Operator& a, int per_mode, int margin);

// Largest singular value.
double operator_norm(const Operator& a);

// Kronecker products lifting single-mode operators to a two-mode space.
// Index convention: |n_first, n_second> maps to n_first * dim2 + n_second.
Operator kron(const Operator& a, const Operator& b);
Eigen::MatrixXd kron(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b);

Operator identity_like(int dim);

}  // namespace fraclab
