#include "orbijet/chernwedge.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <stdexcept>

namespace orbijet::chernwedge {

double mixed_discriminant(const std::vector<OneOneForm>& forms) {
    if (forms.empty()) throw std::invalid_argument("mixed_discriminant: empty list");
    const int n = static_cast<int>(forms.front().rows());
    if (static_cast<int>(forms.size()) != n)
        throw std::invalid_argument("mixed_discriminant: need exactly n matrices of size n");
    for (const auto& a : forms)
        if (a.rows() != n || a.cols() != n)
            throw std::invalid_argument("mixed_discriminant: dimension mismatch");

    double total = 0.0;
    for (unsigned mask = 1; mask < (1u << n); ++mask) {
        OneOneForm sum = OneOneForm::Zero(n, n);
        int bits = 0;
        for (int i = 0; i < n; ++i)
            if (mask & (1u << i)) {
                sum += forms[static_cast<std::size_t>(i)];
                ++bits;
            }
        const double det = sum.determinant().real();
        total += ((n - bits) % 2 == 0 ? det : -det);
    }
    return total;
}

namespace {

template <typename T>
void check_sorted_nonnegative(const std::vector<T>& lambda) {
    for (std::size_t i = 0; i < lambda.size(); ++i) {
        if (lambda[i] < T(0))
            throw std::invalid_argument("morse_kernel_check: eigenvalues must be >= 0");
        if (i > 0 && lambda[i] > lambda[i - 1])
            throw std::invalid_argument("morse_kernel_check: eigenvalues must be sorted descending");
    }
}

template <typename T>
T kernel_lhs(const std::vector<T>& lambda, int q) {
    const int n = static_cast<int>(lambda.size());
    if (q < 0 || q > n) throw std::invalid_argument("morse_kernel_check: need 0 <= q <= n");
    check_sorted_nonnegative(lambda);

    T lhs(0);
    for (int j = 0; j <= q; ++j) {
        const T term = elementary_symmetric(lambda, j);
        lhs += ((q - j) % 2 == 0) ? term : -term;
    }
    const bool indicator = q >= n || lambda[static_cast<std::size_t>(q)] < T(1);
    if (indicator) {
        T prod(1);
        for (const T& l : lambda) prod *= (T(1) - l);
        lhs -= (q % 2 == 0) ? prod : -prod;
    }
    return lhs;
}

}  // namespace

MorseKernelResult morse_kernel_check(const std::vector<Rational>& lambda, int q) {
    const Rational lhs = kernel_lhs(lambda, q);
    return MorseKernelResult{lhs, lhs >= 0};
}

MorseKernelResultF morse_kernel_check(const std::vector<double>& lambda, int q) {
    const double lhs = kernel_lhs(lambda, q);
    return MorseKernelResultF{lhs, lhs >= -1e-12};
}

std::vector<double> relative_eigenvalues(const OneOneForm& alpha, const OneOneForm& beta) {
    if (alpha.rows() != beta.rows() || alpha.cols() != beta.cols())
        throw std::invalid_argument("relative_eigenvalues: dimension mismatch");
    Eigen::SelfAdjointEigenSolver<OneOneForm> pd(alpha, Eigen::EigenvaluesOnly);
    if (pd.eigenvalues().minCoeff() <= 0)
        throw std::invalid_argument("relative_eigenvalues: alpha must be positive definite");
    Eigen::GeneralizedSelfAdjointEigenSolver<OneOneForm> es(beta, alpha);
    std::vector<double> lambda(es.eigenvalues().data(),
                               es.eigenvalues().data() + es.eigenvalues().size());
    std::sort(lambda.begin(), lambda.end(), std::greater<double>());
    return lambda;
}

std::vector<double> morse_index_spectrum(const OneOneForm& alpha, const OneOneForm& beta) {
    std::vector<double> lambda = relative_eigenvalues(alpha, beta);
    std::vector<double> out;
    out.reserve(lambda.size());
    for (double l : lambda) out.push_back(1.0 - l);
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace orbijet::chernwedge
