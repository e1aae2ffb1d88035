#pragma once

#include <Eigen/Dense>

namespace tensecert {

/// 2x2 real expression of a complex scalar a+bi.
template <typename Scalar>
Eigen::Matrix<Scalar, 2, 2> complex_unit(Scalar a, Scalar b) {
  Eigen::Matrix<Scalar, 2, 2> m;
  m << a, -b,
       b,  a;
  return m;
}

/// 4x4 real expression of a quaternion a+bi+cj+dk.
template <typename Scalar>
Eigen::Matrix<Scalar, 4, 4> quaternion_unit(Scalar a, Scalar b, Scalar c, Scalar d) {
  Eigen::Matrix<Scalar, 4, 4> m;
  m <<  a, -b,  c, -d,
        b,  a,  d,  c,
       -c, -d,  a,  b,
        d, -c, -b,  a;
  return m;
}

/// Dense quaternionic matrix, stored componentwise as X = w + x i + y j + z k.
struct QuaternionMatrix {
  Eigen::MatrixXd w, x, y, z;

  QuaternionMatrix() = default;
  QuaternionMatrix(Eigen::MatrixXd w_, Eigen::MatrixXd x_, Eigen::MatrixXd y_, Eigen::MatrixXd z_);

  static QuaternionMatrix Zero(Eigen::Index rows, Eigen::Index cols);
  static QuaternionMatrix Identity(Eigen::Index n);

  Eigen::Index rows() const { return w.rows(); }
  Eigen::Index cols() const { return w.cols(); }

  QuaternionMatrix operator*(const QuaternionMatrix& rhs) const;
  QuaternionMatrix operator+(const QuaternionMatrix& rhs) const;
  QuaternionMatrix conjugateTranspose() const;
  double norm() const;
};

/// Entrywise real expression C : C^{m x n} -> R^{2m x 2n}.
Eigen::MatrixXd complex_embed(const Eigen::MatrixXcd& Z);

/// Entrywise real expression H : H^{m x n} -> R^{4m x 4n}.
Eigen::MatrixXd quaternion_embed(const QuaternionMatrix& X);

/// Inverse of complex_embed on pattern-conforming input (entries averaged over the block).
Eigen::MatrixXcd complex_extract(const Eigen::MatrixXd& A);

/// Inverse of quaternion_embed on pattern-conforming input.
QuaternionMatrix quaternion_extract(const Eigen::MatrixXd& A);

/// Max-abs deviation of A from the image of complex_extract(A); zero iff A is a
/// valid real expression of a complex matrix.
double complex_pattern_residual(const Eigen::MatrixXd& A);

/// Max-abs deviation of A from the image of quaternion_extract(A).
double quaternion_pattern_residual(const Eigen::MatrixXd& A);

}  // namespace tensecert
