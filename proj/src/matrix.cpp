#include "qtn/matrix.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

namespace qtn {

CMatrix kron(const CMatrix& a, const CMatrix& b) {
  CMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Index i = 0; i < a.rows(); ++i)
    for (Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

void require_finite(const CMatrix& m, const std::string& context) {
  if (!m.allFinite()) throw SchemaError(context + ": matrix has non-finite entries");
}

void require_square(const CMatrix& m, const std::string& context) {
  if (m.rows() != m.cols())
    throw SchemaError(context + ": expected a square matrix, got " + std::to_string(m.rows()) +
                      "x" + std::to_string(m.cols()));
}

DefectReport is_unitary(const CMatrix& m, double tol) {
  require_square(m, "is_unitary");
  const double defect = (m.adjoint() * m - CMatrix::Identity(m.rows(), m.cols())).norm();
  return {defect <= tol, defect};
}

DefectReport is_hermitian(const CMatrix& m, double tol) {
  require_square(m, "is_hermitian");
  const double defect = (m - m.adjoint()).norm();
  return {defect <= tol, defect};
}

std::vector<Complex> eigenvalues(const CMatrix& m) {
  require_square(m, "eigenvalues");
  if (m.rows() == 0) return {};
  Eigen::ComplexEigenSolver<CMatrix> solver(m, /*computeEigenvectors=*/false);
  if (solver.info() != Eigen::Success)
    throw NumericalError("eigenvalues: eigen-solver failed to converge");
  const CVector ev = solver.eigenvalues();
  return {ev.data(), ev.data() + ev.size()};
}

double spectral_abscissa(const CMatrix& m) {
  double best = -std::numeric_limits<double>::infinity();
  for (const Complex& ev : eigenvalues(m)) best = std::max(best, ev.real());
  return best;
}

double smallest_singular_value(const CMatrix& m) {
  if (m.size() == 0) return 0.0;
  Eigen::JacobiSVD<CMatrix> svd(m);
  return svd.singularValues().minCoeff();
}

double largest_hermitian_eigenvalue(const CMatrix& m) {
  require_square(m, "largest_hermitian_eigenvalue");
  if (m.rows() == 0) return 0.0;
  Eigen::SelfAdjointEigenSolver<CMatrix> solver(m, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success)
    throw NumericalError("largest_hermitian_eigenvalue: eigen-solver failed to converge");
  return solver.eigenvalues().maxCoeff();
}

CMatrix invert(const CMatrix& m, const std::string& context, double sv_floor) {
  require_square(m, context);
  if (m.rows() == 0) return m;
  Eigen::JacobiSVD<CMatrix> svd(m, Eigen::ComputeThinU | Eigen::ComputeThinV);
  const double sv_min = svd.singularValues().minCoeff();
  if (!(sv_min > sv_floor))
    throw IllPosedError(context + ": matrix is singular to working precision (smallest singular value " +
                            std::to_string(sv_min) + ")",
                        sv_min);
  return svd.solve(CMatrix::Identity(m.rows(), m.cols()));
}

}  // namespace qtn
