#include "epnlab/jordan.hpp"

#include "epnlab/spectral.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <sstream>

namespace epnlab {

Matrix jordan_block(int n) {
    if (n < 1) throw std::invalid_argument("block size must be positive");
    Matrix j = Matrix::Zero(n, n);
    for (int i = 0; i + 1 < n; ++i) j(i, i + 1) = 1;
    return j;
}

TransitionMatrix jordan_chain(const Matrix& h, double ep_tol, double chain_tol,
                              double rank_tol) {
    const int n = static_cast<int>(h.rows());
    if (h.cols() != n || n < 1) throw std::invalid_argument("square matrix required");

    Spectrum spec = compute_spectrum(h);
    double spread = 0;
    for (const auto& e : spec.eigenvalues) spread = std::max(spread, std::abs(e));
    if (spread > ep_tol) {
        std::ostringstream os;
        os << "spectrum not collapsed at zero (max |E| = " << spread
           << "); Jordan chain requires an exceptional point";
        throw std::domain_error(os.str());
    }

    Eigen::JacobiSVD<Matrix> svd(h, Eigen::ComputeFullU | Eigen::ComputeFullV);
    Matrix q(n, n);
    q.col(0) = svd.matrixV().col(n - 1);

    Eigen::CompleteOrthogonalDecomposition<Matrix> cod(h);
    cod.setThreshold(rank_tol);
    for (int k = 1; k < n; ++k) {
        Vector rhs = q.col(k - 1);
        Vector x = cod.solve(rhs);
        double res = (h * x - rhs).norm() / rhs.norm();
        if (res > chain_tol) {
            std::ostringstream os;
            os << "generalized eigenvector chain breaks at length " << k
               << " (residual " << res << "); degeneracy order is " << k;
            throw ChainBreakError(os.str(), k);
        }
        q.col(k) = x;
    }

    // gauge: last component of the final chain vector equals one
    Complex tail = q(n - 1, n - 1);
    if (std::abs(tail) > 1e-12) {
        q /= tail;
    } else {
        // fall back to a Toeplitz gauge transformation adding a multiple of q_1
        Complex head = q(n - 1, 0);
        if (std::abs(head) > 1e-12 && n > 1) {
            Complex t = (Complex(1, 0) - tail) / head;
            q.col(n - 1) += t * q.col(0);
        } else {
            throw std::runtime_error(
                "normalization failure: last component of the chain vanishes");
        }
    }

    TransitionMatrix result;
    result.q = q;
    result.similarity_residual = verify_similarity(h, q);
    Eigen::JacobiSVD<Matrix> qsvd(q);
    double smin = qsvd.singularValues()(n - 1);
    result.condition_number = smin > 0 ? qsvd.singularValues()(0) / smin
                                       : std::numeric_limits<double>::infinity();
    return result;
}

double verify_similarity(const Matrix& h, const Matrix& q) {
    const int n = static_cast<int>(h.rows());
    if (h.cols() != n || q.rows() != n || q.cols() != n)
        throw std::invalid_argument("matching square matrices required");
    Eigen::FullPivLU<Matrix> lu(q);
    if (!lu.isInvertible())
        throw std::invalid_argument("singular transition matrix");
    Matrix j = jordan_block(n);
    return (h * q - q * j).norm() / h.norm();
}

int ep_order(const Matrix& h, double shift_tol, double rank_tol) {
    const int n = static_cast<int>(h.rows());
    if (h.cols() != n || n < 1) throw std::invalid_argument("square matrix required");

    Spectrum spec = compute_spectrum(h);
    Complex shift = spec.eigenvalues[0];
    for (const auto& e : spec.eigenvalues)
        if (std::abs(e) < std::abs(shift)) shift = e;
    if (std::abs(shift) <= shift_tol) shift = 0;

    Matrix m = h - shift * Matrix::Identity(n, n);
    double smax = Eigen::JacobiSVD<Matrix>(m).singularValues()(0);
    if (smax == 0) return 1;  // zero matrix: diagonalizable

    auto rank_of = [&](const Matrix& p, int power) {
        double thr = rank_tol * std::pow(smax, power);
        Eigen::JacobiSVD<Matrix> svd(p);
        int r = 0;
        for (int i = 0; i < n; ++i)
            if (svd.singularValues()(i) > thr) ++r;
        return r;
    };

    std::vector<int> ranks(n + 2);
    ranks[0] = n;
    Matrix p = Matrix::Identity(n, n);
    for (int k = 1; k <= n + 1; ++k) {
        p = p * m;
        ranks[k] = rank_of(p, k);
    }
    for (int k = 1; k <= n; ++k)
        if (ranks[k] == ranks[k + 1]) return k;
    return n;
}

}  // namespace epnlab
