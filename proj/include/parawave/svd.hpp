#pragma once
//
// Singular values of the (small, dense, complex) error matrices via Eigen's
// two-sided Jacobi SVD.
//

#include "parawave/complex_matrix.hpp"

#include <Eigen/SVD>

#include <stdexcept>
#include <vector>

namespace parawave {

/// All singular values, sorted in decreasing order.
[[nodiscard]] inline std::vector<double> singular_values(const ComplexMatrix& a)
{
    if (!a.all_finite())
        throw std::invalid_argument("singular_values: matrix has non-finite entries");
    const auto n = static_cast<Eigen::Index>(a.size());
    const Eigen::Map<const Eigen::Matrix<complex_t, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>> m(a.data().data(), n, n);
    const Eigen::JacobiSVD<Eigen::MatrixXcd> svd(m);
    const auto& s = svd.singularValues();
    return {s.data(), s.data() + s.size()};
}

/// sigma = ||A||_2.
[[nodiscard]] inline double max_singular_value(const ComplexMatrix& a)
{
    if (a.size() == 0)
        return 0.0;
    return singular_values(a).front();
}

} // namespace parawave
