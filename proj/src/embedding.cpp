#include "tensecert/embedding.hpp"

#include <stdexcept>

namespace tensecert {

QuaternionMatrix::QuaternionMatrix(Eigen::MatrixXd w_, Eigen::MatrixXd x_, Eigen::MatrixXd y_,
                                   Eigen::MatrixXd z_)
    : w(std::move(w_)), x(std::move(x_)), y(std::move(y_)), z(std::move(z_)) {
  if (x.rows() != w.rows() || y.rows() != w.rows() || z.rows() != w.rows() ||
      x.cols() != w.cols() || y.cols() != w.cols() || z.cols() != w.cols()) {
    throw std::invalid_argument("QuaternionMatrix: component size mismatch");
  }
}

QuaternionMatrix QuaternionMatrix::Zero(Eigen::Index rows, Eigen::Index cols) {
  return {Eigen::MatrixXd::Zero(rows, cols), Eigen::MatrixXd::Zero(rows, cols),
          Eigen::MatrixXd::Zero(rows, cols), Eigen::MatrixXd::Zero(rows, cols)};
}

QuaternionMatrix QuaternionMatrix::Identity(Eigen::Index n) {
  return {Eigen::MatrixXd::Identity(n, n), Eigen::MatrixXd::Zero(n, n),
          Eigen::MatrixXd::Zero(n, n), Eigen::MatrixXd::Zero(n, n)};
}

QuaternionMatrix QuaternionMatrix::operator*(const QuaternionMatrix& r) const {
  QuaternionMatrix out;
  out.w = w * r.w - x * r.x - y * r.y - z * r.z;
  out.x = w * r.x + x * r.w + y * r.z - z * r.y;
  out.y = w * r.y - x * r.z + y * r.w + z * r.x;
  out.z = w * r.z + x * r.y - y * r.x + z * r.w;
  return out;
}

QuaternionMatrix QuaternionMatrix::operator+(const QuaternionMatrix& r) const {
  return {w + r.w, x + r.x, y + r.y, z + r.z};
}

QuaternionMatrix QuaternionMatrix::conjugateTranspose() const {
  return {w.transpose(), -x.transpose(), -y.transpose(), -z.transpose()};
}

double QuaternionMatrix::norm() const {
  return std::sqrt(w.squaredNorm() + x.squaredNorm() + y.squaredNorm() + z.squaredNorm());
}

Eigen::MatrixXd complex_embed(const Eigen::MatrixXcd& Z) {
  Eigen::MatrixXd A(2 * Z.rows(), 2 * Z.cols());
  for (Eigen::Index i = 0; i < Z.rows(); ++i)
    for (Eigen::Index j = 0; j < Z.cols(); ++j)
      A.block<2, 2>(2 * i, 2 * j) = complex_unit(Z(i, j).real(), Z(i, j).imag());
  return A;
}

Eigen::MatrixXd quaternion_embed(const QuaternionMatrix& X) {
  Eigen::MatrixXd A(4 * X.rows(), 4 * X.cols());
  for (Eigen::Index i = 0; i < X.rows(); ++i)
    for (Eigen::Index j = 0; j < X.cols(); ++j)
      A.block<4, 4>(4 * i, 4 * j) =
          quaternion_unit(X.w(i, j), X.x(i, j), X.y(i, j), X.z(i, j));
  return A;
}

Eigen::MatrixXcd complex_extract(const Eigen::MatrixXd& A) {
  if (A.rows() % 2 != 0 || A.cols() % 2 != 0)
    throw std::invalid_argument("complex_extract: dimensions must be even");
  Eigen::MatrixXcd Z(A.rows() / 2, A.cols() / 2);
  for (Eigen::Index i = 0; i < Z.rows(); ++i)
    for (Eigen::Index j = 0; j < Z.cols(); ++j) {
      auto B = A.block<2, 2>(2 * i, 2 * j);
      Z(i, j) = std::complex<double>(0.5 * (B(0, 0) + B(1, 1)), 0.5 * (B(1, 0) - B(0, 1)));
    }
  return Z;
}

QuaternionMatrix quaternion_extract(const Eigen::MatrixXd& A) {
  if (A.rows() % 4 != 0 || A.cols() % 4 != 0)
    throw std::invalid_argument("quaternion_extract: dimensions must be divisible by 4");
  QuaternionMatrix X = QuaternionMatrix::Zero(A.rows() / 4, A.cols() / 4);
  for (Eigen::Index i = 0; i < X.rows(); ++i)
    for (Eigen::Index j = 0; j < X.cols(); ++j) {
      auto B = A.block<4, 4>(4 * i, 4 * j);
      X.w(i, j) = 0.25 * (B(0, 0) + B(1, 1) + B(2, 2) + B(3, 3));
      X.x(i, j) = 0.25 * (B(1, 0) - B(0, 1) - B(3, 2) + B(2, 3));
      X.y(i, j) = 0.25 * (B(0, 2) + B(1, 3) - B(2, 0) - B(3, 1));
      X.z(i, j) = 0.25 * (B(3, 0) - B(0, 3) + B(1, 2) - B(2, 1));
    }
  return X;
}

double complex_pattern_residual(const Eigen::MatrixXd& A) {
  return (A - complex_embed(complex_extract(A))).cwiseAbs().maxCoeff();
}

double quaternion_pattern_residual(const Eigen::MatrixXd& A) {
  return (A - quaternion_embed(quaternion_extract(A))).cwiseAbs().maxCoeff();
}

}  // namespace tensecert
