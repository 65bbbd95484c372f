#pragma once

#include <Eigen/Dense>
#include <complex>
#include <vector>

#include "qtn/errors.hpp"

namespace qtn {

using Complex = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;
using Index = Eigen::Index;

inline CMatrix dagger(const CMatrix& m) { return m.adjoint(); }

/// Frobenius norms back every defect report in the library.
inline double frobenius(const CMatrix& m) { return m.norm(); }

CMatrix kron(const CMatrix& a, const CMatrix& b);

/// Throws SchemaError if any entry is NaN/Inf.
void require_finite(const CMatrix& m, const std::string& context);

void require_square(const CMatrix& m, const std::string& context);

struct DefectReport {
  bool pass = false;
  double defect = 0.0;
};

/// ‖m†m − I‖_F against tol. Non-square input is an error.
DefectReport is_unitary(const CMatrix& m, double tol);

/// ‖m − m†‖_F against tol.
DefectReport is_hermitian(const CMatrix& m, double tol);

/// Full (unordered) eigenvalue list. Solver non-convergence is reported,
/// never approximated away.
std::vector<Complex> eigenvalues(const CMatrix& m);

/// max Re λ over the spectrum.
double spectral_abscissa(const CMatrix& m);

double smallest_singular_value(const CMatrix& m);

/// Largest eigenvalue of a Hermitian matrix.
double largest_hermitian_eigenvalue(const CMatrix& m);

/// Inverse with an explicit singularity floor: if the smallest singular
/// value is at or below `sv_floor` an IllPosedError carrying that value is
/// thrown instead of returning garbage.
CMatrix invert(const CMatrix& m, const std::string& context, double sv_floor = 1e-10);

}  // namespace qtn
