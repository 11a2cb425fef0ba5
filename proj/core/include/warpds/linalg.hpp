#pragma once

#include <complex>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace warpds {

using cplx = std::complex<double>;
using Matrix5 = Eigen::Matrix<double, 5, 5>;
using Vector5 = Eigen::Matrix<double, 5, 1>;
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;

// Precondition or domain violation (bad index, off-hyperboloid point, ...).
class DomainError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// A one-particle model that does not satisfy its structural invariants.
class ModelError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Largest singular value.
double operator_norm(const CMatrix& m);
double operator_norm(const Eigen::MatrixXd& m);

// Frobenius inner product <a, b> = tr(a^* b).
cplx frobenius_inner(const CMatrix& a, const CMatrix& b);

}  // namespace warpds
