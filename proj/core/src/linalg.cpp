#include "warpds/linalg.hpp"

namespace warpds {

double operator_norm(const CMatrix& m)
{
    if (m.size() == 0) return 0.0;
    Eigen::BDCSVD<CMatrix> svd(m);
    return svd.singularValues()(0);
}

double operator_norm(const Eigen::MatrixXd& m)
{
    if (m.size() == 0) return 0.0;
    Eigen::BDCSVD<Eigen::MatrixXd> svd(m);
    return svd.singularValues()(0);
}

cplx frobenius_inner(const CMatrix& a, const CMatrix& b)
{
    return (a.conjugate().cwiseProduct(b)).sum();
}

}  // namespace warpds
