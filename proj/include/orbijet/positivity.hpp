#pragma once

#include "orbijet/rng.hpp"

#include <Eigen/Dense>

#include <complex>
#include <string>
#include <vector>

namespace orbijet::positivity {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

// Hermitian form on a single space; value(v) = v^* M v is real.
struct HermitianForm {
    Matrix m;

    int dim() const { return static_cast<int>(m.rows()); }
    double value(const Vector& v) const { return std::real(Complex(v.adjoint() * m * v)); }
    double min_eigenvalue() const;
};

// Hermitian tensor theta on T (x) E with coefficients c_{ij,lm}
// (i,j index T; l,m index E) satisfying conj(c_{ij,lm}) = c_{ji,ml}.
// Values theta(w,w) are real for every w in T (x) E.
//
// Coefficients here carry no 2*pi normalization: every positivity
// statement and bound in this library is homogeneous in theta, so
// dropping the customary constant changes nothing.
//
// Storage is the flattened (n*r) x (n*r) Hermitian matrix over the basis
// pairing a = i*r + l, so that theta(w,w) = w^* flat w.
class HermitianTensor {
public:
    HermitianTensor(int n, int r);  // zero tensor

    // Validates Hermitian symmetry of the flattened matrix.
    static HermitianTensor from_flat(int n, int r, Matrix flat, double tol = 1e-10);

    // Product tensor omega (x) h: theta(xi (x) u) = omega(xi,xi) |u|^2.
    static HermitianTensor product(const Matrix& omega, int r);

    // c_{ij,lm} = delta_{ij} delta_{lm}; theta(w,w) = |w|^2.
    static HermitianTensor identity(int n, int r);

    // On T = E = C^n: c_{ij,lm} = delta_{im} delta_{jl}, so that
    // theta(xi (x) u) = |<xi,u>|^2. The curvature shape of the
    // tautological quotient bundle; Griffiths- but not Nakano-
    // semipositive for n >= 2.
    static HermitianTensor tautological(int n);

    int dim_t() const { return n_; }
    int rank_e() const { return r_; }
    const Matrix& flat() const { return flat_; }

    Complex coeff(int i, int j, int l, int m) const { return flat_(j * r_ + m, i * r_ + l); }

    double value(const Vector& w) const { return std::real(Complex(w.adjoint() * flat_ * w)); }
    Complex value_pair(const Vector& w, const Vector& v) const;  // sesquilinear extension
    double value_on(const Vector& xi, const Vector& u) const;    // theta(xi (x) u)

    // n x n matrix B(u) with theta(xi (x) u) = xi^* B(u) xi.
    Matrix contract_e(const Vector& u) const;
    // r x r matrix C(xi) with theta(xi (x) u) = u^* C(xi) u.
    Matrix contract_t(const Vector& xi) const;

    // Partial trace over E: (Tr_E theta)(xi,xi) = sum_l theta(xi (x) e_l).
    HermitianForm trace_e() const;

    double frobenius_norm() const { return flat_.norm(); }
    double spectral_norm() const;

    HermitianTensor& operator+=(const HermitianTensor& o);
    HermitianTensor& operator-=(const HermitianTensor& o);
    HermitianTensor& operator*=(double c);
    friend HermitianTensor operator+(HermitianTensor a, const HermitianTensor& b) { return a += b; }
    friend HermitianTensor operator-(HermitianTensor a, const HermitianTensor& b) { return a -= b; }
    friend HermitianTensor operator*(double c, HermitianTensor a) { return a *= c; }

    std::string to_json() const;
    static HermitianTensor from_json(const std::string& text);

private:
    int n_, r_;
    Matrix flat_;
};

// Decomposable positive factor |alpha (x) psi|^2 with alpha in T^*,
// psi in E^*; (alpha (x) psi)(w) = sum alpha_i psi_l w_{il}.
struct RankOneFactor {
    Vector alpha;
    Vector psi;

    // Flat vector c with |alpha (x) psi|^2 = c c^* as a quadratic form.
    Vector flat_conjugate() const;
};

HermitianTensor tensor_from_factors(const std::vector<RankOneFactor>& factors, int n, int r);

// Rank of the span of the factors inside T^* (x) E^*.
int span_rank(const std::vector<RankOneFactor>& factors, int n, int r);

// Smallest eigenvalue of the flattened matrix >= -tol.
bool is_nakano_semipositive(const HermitianTensor& theta, double tol);

// Heuristic search for the most negative value of theta(xi (x) u) over
// unit vectors, by alternating smallest-eigenvector updates from random
// starts. A negative certificate (value < -tol) is exact; a clean scan
// is best-effort only.
struct GriffithsScan {
    double min_value;
    Vector xi;
    Vector u;
};
GriffithsScan griffiths_scan(const HermitianTensor& theta, RandomStream& rs, int restarts = 50,
                             int iterations = 60);
bool is_griffiths_semipositive(const HermitianTensor& theta, double tol = 1e-8,
                               int restarts = 50, std::uint64_t seed = 2024);

// Constructive certificate that theta + Tr_E(theta) (x) h is a sum of
// decomposable squares, for Griffiths-semipositive theta. For each
// r-tuple chi of q-th roots of unity the form
// xi -> q^{-r} theta(xi (x) e_chi) is diagonalized into squares
// l_{chi,j}, emitted as l_{chi,j} (x) chi^*; the diagonal forms
// xi -> theta(xi (x) e_l) contribute l'_{l,j} (x) e_l^*. Throws if an
// intermediate form has an eigenvalue below -tol. Eigenvalues in
// [-tol, 0) are clamped to zero.
std::vector<RankOneFactor> strong_decomposition(const HermitianTensor& theta, int q = 3,
                                                double tol = 1e-8);

// Discrete Fourier inversion over r-tuples of q-th roots of unity:
// q^{-r} sum_chi xhat(chi) conj(yhat(chi)) chi_l conj(chi_m) equals
// x_l conj(y_m) for l != m and sum_a x_a conj(y_a) for l == m.
struct FourierCheck {
    double residual;  // relative
    bool pass;
};
FourierCheck fourier_identity_check(const Vector& x, const Vector& y, int l, int m, int q);

// Certified two-sided strong bounds.
struct SandwichCertificate {
    bool ok;
    double lower_error;  // relative reconstruction error of the lower certificate
    double upper_error;
    std::vector<RankOneFactor> lower_factors;
    std::vector<RankOneFactor> upper_factors;
    int lower_span_rank;
    int upper_span_rank;
};

// For theta Griffiths-semipositive, certifies
// -Tr_E(theta) (x) h <=_S theta <=_S r Tr_E(theta) (x) h.
SandwichCertificate sandwich_check_griffiths(const HermitianTensor& theta, int q = 3,
                                             double tol = 1e-8);

// For +-theta <=_G tau (x) h with tau semipositive, certifies
// -(2r+1) tau (x) h <=_S theta <=_S (2r+1) tau (x) h.
SandwichCertificate sandwich_check_bounded(const HermitianTensor& theta,
                                           const HermitianForm& tau, int q = 3,
                                           double tol = 1e-8);

}  // namespace orbijet::positivity
