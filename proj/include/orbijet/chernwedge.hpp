#pragma once

#include "orbijet/rational.hpp"

#include <Eigen/Dense>

#include <vector>

namespace orbijet::chernwedge {

// Coefficient matrix of a (1,1)-form; Hermitian.
using OneOneForm = Eigen::MatrixXcd;

// Mixed discriminant of n Hermitian n x n matrices: the coefficient of
// t_1...t_n in det(sum t_i A_i), by inclusion-exclusion over subsets.
// Symmetric, multilinear; the wedge product of n (1,1)-forms as a
// multiple of the volume form under the normalization
// mixed_discriminant(I,...,I) = n!. Worked cases: n = 1 gives A_11,
// n = 2 gives ad + bc for diag(a,b), diag(c,d). O(2^n n^3); fine for the
// desk-scale n <= 6 this library targets.
double mixed_discriminant(const std::vector<OneOneForm>& forms);

// Elementary symmetric function e_j of the values; e_0 = 1.
template <typename T>
T elementary_symmetric(const std::vector<T>& values, int j) {
    const int n = static_cast<int>(values.size());
    if (j < 0 || j > n) throw std::invalid_argument("elementary_symmetric: need 0 <= j <= n");
    std::vector<T> e(static_cast<std::size_t>(j) + 1, T(0));
    e[0] = T(1);
    for (int v = 0; v < n; ++v)
        for (int i = std::min(j, v + 1); i >= 1; --i)
            e[static_cast<std::size_t>(i)] +=
                values[static_cast<std::size_t>(v)] * e[static_cast<std::size_t>(i) - 1];
    return e[static_cast<std::size_t>(j)];
}

// The scalar kernel of the algebraic Morse inequalities: for eigenvalues
// lambda_1 >= ... >= lambda_n >= 0 of beta relative to alpha,
//   sum_{0<=j<=q} (-1)^{q-j} e_j(lambda)
//     - [lambda_{q+1} < 1] (-1)^q prod_j (1 - lambda_j)  >=  0.
// The indicator treats lambda_{n+1} as 0 when q = n.
struct MorseKernelResult {
    Rational lhs;
    bool pass;
};
MorseKernelResult morse_kernel_check(const std::vector<Rational>& lambda, int q);

// Float variant; pass iff lhs >= -1e-12.
struct MorseKernelResultF {
    double lhs;
    bool pass;
};
MorseKernelResultF morse_kernel_check(const std::vector<double>& lambda, int q);

// Eigenvalues of beta relative to alpha (alpha positive definite),
// sorted descending.
std::vector<double> relative_eigenvalues(const OneOneForm& alpha, const OneOneForm& beta);

// Signature spectrum of alpha - beta relative to alpha: the values
// 1 - lambda_i sorted ascending. The number of negative entries is the
// Morse index.
std::vector<double> morse_index_spectrum(const OneOneForm& alpha, const OneOneForm& beta);

}  // namespace orbijet::chernwedge
