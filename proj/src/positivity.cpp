#include "orbijet/positivity.hpp"

#include <nlohmann/json.hpp>

#include <Eigen/Eigenvalues>

#include <cmath>
#include <limits>
#include <stdexcept>

namespace orbijet::positivity {

namespace {

using json = nlohmann::ordered_json;

Vector tensor_vector(const Vector& xi, const Vector& u) {
    Vector w(xi.size() * u.size());
    for (int i = 0; i < xi.size(); ++i)
        for (int l = 0; l < u.size(); ++l) w[i * u.size() + l] = xi[i] * u[l];
    return w;
}

void require_hermitian(const Matrix& m, double tol, const char* what) {
    if ((m - m.adjoint()).norm() > tol * (1.0 + m.norm()))
        throw std::invalid_argument(std::string(what) + ": matrix is not Hermitian");
}

}  // namespace

double HermitianForm::min_eigenvalue() const {
    Eigen::SelfAdjointEigenSolver<Matrix> es(m, Eigen::EigenvaluesOnly);
    return es.eigenvalues().minCoeff();
}

HermitianTensor::HermitianTensor(int n, int r) : n_(n), r_(r) {
    if (n < 1 || r < 1) throw std::invalid_argument("HermitianTensor: n, r >= 1");
    flat_ = Matrix::Zero(n * r, n * r);
}

HermitianTensor HermitianTensor::from_flat(int n, int r, Matrix flat, double tol) {
    if (flat.rows() != n * r || flat.cols() != n * r)
        throw std::invalid_argument("HermitianTensor: flat matrix must be (n*r) x (n*r)");
    require_hermitian(flat, tol, "HermitianTensor");
    HermitianTensor t(n, r);
    t.flat_ = (flat + flat.adjoint()) / 2.0;  // symmetrize away roundoff
    return t;
}

HermitianTensor HermitianTensor::product(const Matrix& omega, int r) {
    const int n = static_cast<int>(omega.rows());
    require_hermitian(omega, 1e-10, "product tensor");
    HermitianTensor t(n, r);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int l = 0; l < r; ++l) t.flat_(i * r + l, j * r + l) = omega(i, j);
    return t;
}

HermitianTensor HermitianTensor::identity(int n, int r) {
    HermitianTensor t(n, r);
    t.flat_ = Matrix::Identity(n * r, n * r);
    return t;
}

HermitianTensor HermitianTensor::tautological(int n) {
    if (n < 2) throw std::invalid_argument("tautological: n >= 2");
    HermitianTensor t(n, n);
    // flat((j,m),(i,l)) = c_{ij,lm} = delta_{im} delta_{jl}
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) t.flat_(j * n + i, i * n + j) = 1.0;
    return t;
}

Complex HermitianTensor::value_pair(const Vector& w, const Vector& v) const {
    if (w.size() != n_ * r_ || v.size() != n_ * r_)
        throw std::invalid_argument("HermitianTensor: dimension mismatch");
    return Complex(v.adjoint() * flat_ * w);
}

double HermitianTensor::value_on(const Vector& xi, const Vector& u) const {
    if (xi.size() != n_ || u.size() != r_)
        throw std::invalid_argument("HermitianTensor: dimension mismatch");
    return value(tensor_vector(xi, u));
}

Matrix HermitianTensor::contract_e(const Vector& u) const {
    if (u.size() != r_) throw std::invalid_argument("contract_e: dimension mismatch");
    Matrix b = Matrix::Zero(n_, n_);
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j) {
            Complex s = 0;
            for (int l = 0; l < r_; ++l)
                for (int m = 0; m < r_; ++m) s += coeff(i, j, l, m) * u[l] * std::conj(u[m]);
            b(j, i) = s;
        }
    return b;
}

Matrix HermitianTensor::contract_t(const Vector& xi) const {
    if (xi.size() != n_) throw std::invalid_argument("contract_t: dimension mismatch");
    Matrix c = Matrix::Zero(r_, r_);
    for (int l = 0; l < r_; ++l)
        for (int m = 0; m < r_; ++m) {
            Complex s = 0;
            for (int i = 0; i < n_; ++i)
                for (int j = 0; j < n_; ++j) s += coeff(i, j, l, m) * xi[i] * std::conj(xi[j]);
            c(m, l) = s;
        }
    return c;
}

HermitianForm HermitianTensor::trace_e() const {
    Matrix f = Matrix::Zero(n_, n_);
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j) {
            Complex s = 0;
            for (int l = 0; l < r_; ++l) s += coeff(i, j, l, l);
            f(j, i) = s;
        }
    return HermitianForm{f};
}

double HermitianTensor::spectral_norm() const {
    Eigen::SelfAdjointEigenSolver<Matrix> es(flat_, Eigen::EigenvaluesOnly);
    return std::max(std::abs(es.eigenvalues().minCoeff()), std::abs(es.eigenvalues().maxCoeff()));
}

HermitianTensor& HermitianTensor::operator+=(const HermitianTensor& o) {
    if (n_ != o.n_ || r_ != o.r_) throw std::invalid_argument("tensor sum: dimension mismatch");
    flat_ += o.flat_;
    return *this;
}

HermitianTensor& HermitianTensor::operator-=(const HermitianTensor& o) {
    if (n_ != o.n_ || r_ != o.r_) throw std::invalid_argument("tensor sum: dimension mismatch");
    flat_ -= o.flat_;
    return *this;
}

HermitianTensor& HermitianTensor::operator*=(double c) {
    flat_ *= c;
    return *this;
}

std::string HermitianTensor::to_json() const {
    json entries = json::array();
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j)
            for (int l = 0; l < r_; ++l)
                for (int m = 0; m < r_; ++m) {
                    const Complex c = coeff(i, j, l, m);
                    if (c != Complex(0, 0))
                        entries.push_back(json::array({i, j, l, m, c.real(), c.imag()}));
                }
    json out;
    out["n"] = n_;
    out["r"] = r_;
    out["coeffs"] = entries;
    return out.dump();
}

HermitianTensor HermitianTensor::from_json(const std::string& text) {
    json in = json::parse(text);
    if (!in.contains("n") || !in.contains("r") || !in.contains("coeffs"))
        throw std::invalid_argument("tensor JSON: need fields n, r, coeffs");
    const int n = in["n"].get<int>(), r = in["r"].get<int>();
    HermitianTensor t(n, r);
    for (const auto& e : in["coeffs"]) {
        if (!e.is_array() || e.size() != 6)
            throw std::invalid_argument("tensor JSON: coeff entries are [i,j,lambda,mu,re,im]");
        const int i = e[0].get<int>(), j = e[1].get<int>(), l = e[2].get<int>(), m = e[3].get<int>();
        if (i < 0 || i >= n || j < 0 || j >= n || l < 0 || l >= r || m < 0 || m >= r)
            throw std::invalid_argument("tensor JSON: index out of range");
        t.flat_(j * r + m, i * r + l) = Complex(e[4].get<double>(), e[5].get<double>());
    }
    require_hermitian(t.flat_, 1e-9, "tensor JSON");
    t.flat_ = (t.flat_ + t.flat_.adjoint()) / 2.0;
    return t;
}

Vector RankOneFactor::flat_conjugate() const {
    Vector c(alpha.size() * psi.size());
    for (int i = 0; i < alpha.size(); ++i)
        for (int l = 0; l < psi.size(); ++l)
            c[i * psi.size() + l] = std::conj(alpha[i] * psi[l]);
    return c;
}

HermitianTensor tensor_from_factors(const std::vector<RankOneFactor>& factors, int n, int r) {
    Matrix flat = Matrix::Zero(n * r, n * r);
    for (const auto& f : factors) {
        if (f.alpha.size() != n || f.psi.size() != r)
            throw std::invalid_argument("factor dimensions do not match (n, r)");
        const Vector c = f.flat_conjugate();
        flat += c * c.adjoint();
    }
    return HermitianTensor::from_flat(n, r, flat);
}

int span_rank(const std::vector<RankOneFactor>& factors, int n, int r) {
    if (factors.empty()) return 0;
    Matrix rows(static_cast<int>(factors.size()), n * r);
    for (std::size_t f = 0; f < factors.size(); ++f)
        rows.row(static_cast<int>(f)) = factors[f].flat_conjugate().transpose();
    Eigen::ColPivHouseholderQR<Matrix> qr(rows);
    qr.setThreshold(1e-10);
    return static_cast<int>(qr.rank());
}

bool is_nakano_semipositive(const HermitianTensor& theta, double tol) {
    if (tol < 0) throw std::invalid_argument("is_nakano_semipositive: tol >= 0");
    Eigen::SelfAdjointEigenSolver<Matrix> es(theta.flat(), Eigen::EigenvaluesOnly);
    return es.eigenvalues().minCoeff() >= -tol;
}

GriffithsScan griffiths_scan(const HermitianTensor& theta, RandomStream& rs, int restarts,
                             int iterations) {
    if (restarts < 1) throw std::invalid_argument("griffiths_scan: restarts >= 1");
    const int n = theta.dim_t(), r = theta.rank_e();
    GriffithsScan best{std::numeric_limits<double>::infinity(), Vector(), Vector()};
    for (int trial = 0; trial < restarts; ++trial) {
        Vector xi = sample_unit_sphere(n, rs);
        Vector u = sample_unit_sphere(r, rs);
        double current = theta.value_on(xi, u);
        for (int it = 0; it < iterations; ++it) {
            Eigen::SelfAdjointEigenSolver<Matrix> esu(theta.contract_t(xi));
            u = esu.eigenvectors().col(0);
            Eigen::SelfAdjointEigenSolver<Matrix> esx(theta.contract_e(u));
            xi = esx.eigenvectors().col(0);
            const double next = theta.value_on(xi, u);
            if (next >= current - 1e-15) {
                current = next;
                break;
            }
            current = next;
        }
        if (current < best.min_value) best = GriffithsScan{current, xi, u};
    }
    return best;
}

bool is_griffiths_semipositive(const HermitianTensor& theta, double tol, int restarts,
                               std::uint64_t seed) {
    RandomStream rs(seed);
    return griffiths_scan(theta, rs, restarts).min_value >= -tol;
}

namespace {

// Squares l_j with form(xi) = sum_j |l_j(xi)|^2; eigenvalues in
// [-tol, 0) are clamped, anything lower is a positivity violation.
std::vector<Vector> split_psd_form(const Matrix& form, double tol, const char* what) {
    Eigen::SelfAdjointEigenSolver<Matrix> es(form);
    std::vector<Vector> out;
    for (int j = 0; j < form.rows(); ++j) {
        double ev = es.eigenvalues()[j];
        if (ev < -tol)
            throw std::domain_error(std::string(what) +
                                    ": intermediate form has eigenvalue " + std::to_string(ev));
        if (ev < 0) ev = 0;
        if (ev == 0) continue;
        // l(xi) = sqrt(ev) * v^* xi -> coefficient vector conj(v) * sqrt(ev)
        out.push_back(std::sqrt(ev) * es.eigenvectors().col(j).conjugate());
    }
    return out;
}

}  // namespace

std::vector<RankOneFactor> strong_decomposition(const HermitianTensor& theta, int q, double tol) {
    if (q < 3) throw std::invalid_argument("strong_decomposition: q >= 3");
    const int r = theta.rank_e();
    std::vector<RankOneFactor> factors;

    // Characters chi run over r-tuples of q-th roots of unity.
    const double scale = std::pow(static_cast<double>(q), -r);
    const long count = static_cast<long>(std::llround(std::pow(static_cast<double>(q), r)));
    for (long idx = 0; idx < count; ++idx) {
        long rest = idx;
        Vector chi(r);
        for (int l = 0; l < r; ++l) {
            const int d = static_cast<int>(rest % q);
            rest /= q;
            const double ang = 2.0 * M_PI * d / q;
            chi[l] = Complex(std::cos(ang), std::sin(ang));
        }
        const Matrix form = scale * theta.contract_e(chi);
        for (const Vector& l : split_psd_form(form, tol, "strong_decomposition"))
            factors.push_back(RankOneFactor{l, chi.conjugate()});
    }

    // Diagonal contributions xi -> theta(xi (x) e_l).
    for (int l = 0; l < r; ++l) {
        Vector el = Vector::Zero(r);
        el[l] = 1.0;
        const Matrix form = theta.contract_e(el);
        for (const Vector& lf : split_psd_form(form, tol, "strong_decomposition"))
            factors.push_back(RankOneFactor{lf, el});
    }
    return factors;
}

FourierCheck fourier_identity_check(const Vector& x, const Vector& y, int l, int m, int q) {
    if (q < 3) throw std::invalid_argument("fourier_identity_check: q >= 3");
    const int r = static_cast<int>(x.size());
    if (y.size() != r) throw std::invalid_argument("fourier_identity_check: size mismatch");
    if (l < 0 || l >= r || m < 0 || m >= r)
        throw std::invalid_argument("fourier_identity_check: index out of range");

    Complex lhs = 0;
    const long count = static_cast<long>(std::llround(std::pow(static_cast<double>(q), r)));
    for (long idx = 0; idx < count; ++idx) {
        long rest = idx;
        Vector chi(r);
        for (int a = 0; a < r; ++a) {
            const int d = static_cast<int>(rest % q);
            rest /= q;
            const double ang = 2.0 * M_PI * d / q;
            chi[a] = Complex(std::cos(ang), std::sin(ang));
        }
        Complex xhat = 0, yhat = 0;
        for (int a = 0; a < r; ++a) {
            xhat += x[a] * std::conj(chi[a]);
            yhat += y[a] * std::conj(chi[a]);
        }
        lhs += xhat * std::conj(yhat) * chi(l) * std::conj(chi(m));
    }
    lhs *= std::pow(static_cast<double>(q), -r);

    Complex rhs;
    if (l != m) {
        rhs = x[l] * std::conj(y[m]);
    } else {
        rhs = 0;
        for (int a = 0; a < r; ++a) rhs += x[a] * std::conj(y[a]);
    }
    const double residual = std::abs(lhs - rhs) / (1.0 + std::abs(rhs));
    return FourierCheck{residual, residual < 1e-9};
}

namespace {

// Appends squares of a psd form on T tensored with every basis covector
// of E (beta (x) h as a strong sum).
void append_form_tensor_h(const Matrix& form, int r, double tol,
                          std::vector<RankOneFactor>& factors) {
    const auto squares = split_psd_form(form, tol, "sandwich certificate");
    for (int l = 0; l < r; ++l) {
        Vector el = Vector::Zero(r);
        el[l] = 1.0;
        for (const Vector& sq : squares) factors.push_back(RankOneFactor{sq, el});
    }
}

double relative_error(const HermitianTensor& got, const HermitianTensor& want) {
    return (got.flat() - want.flat()).norm() / (1.0 + want.flat().norm());
}

}  // namespace

SandwichCertificate sandwich_check_griffiths(const HermitianTensor& theta, int q, double tol) {
    const int n = theta.dim_t(), r = theta.rank_e();
    const HermitianForm tr = theta.trace_e();
    const HermitianTensor tr_h = HermitianTensor::product(tr.m, r);

    // Lower bound: theta + Tr_E(theta) (x) h >=_S 0, directly.
    auto lower = strong_decomposition(theta, q, tol);
    const double lower_err = relative_error(tensor_from_factors(lower, n, r), theta + tr_h);

    // Upper bound: r Tr_E(theta) (x) h - theta >=_S 0, via the
    // complementary tensor theta' = Tr_E(theta) (x) h - theta, which is
    // Griffiths-semipositive and satisfies
    // theta' + Tr_E(theta') (x) h = r Tr_E(theta) (x) h - theta.
    const HermitianTensor comp = tr_h - theta;
    auto upper = strong_decomposition(comp, q, tol);
    const double upper_err =
        relative_error(tensor_from_factors(upper, n, r), (static_cast<double>(r) * tr_h) - theta);

    SandwichCertificate cert;
    cert.lower_error = lower_err;
    cert.upper_error = upper_err;
    cert.ok = lower_err < 1e-9 && upper_err < 1e-9;
    cert.lower_span_rank = span_rank(lower, n, r);
    cert.upper_span_rank = span_rank(upper, n, r);
    cert.lower_factors = std::move(lower);
    cert.upper_factors = std::move(upper);
    return cert;
}

SandwichCertificate sandwich_check_bounded(const HermitianTensor& theta, const HermitianForm& tau,
                                           int q, double tol) {
    const int n = theta.dim_t(), r = theta.rank_e();
    if (tau.dim() != n) throw std::invalid_argument("sandwich: tau must act on T");
    const HermitianTensor tau_h = HermitianTensor::product(tau.m, r);
    const HermitianForm tr = theta.trace_e();

    // theta + (2r+1) tau (x) h decomposes as
    //   [theta' + Tr_E(theta') (x) h] + [(r tau - Tr_E theta) (x) h]
    // with theta' = tau (x) h + theta; the second bracket is psd because
    // Tr_E theta <= r tau under the hypothesis.
    auto build = [&](double sign) {
        const HermitianTensor prime = sign > 0 ? tau_h + theta : tau_h - theta;
        auto factors = strong_decomposition(prime, q, tol);
        const Matrix rest = static_cast<double>(r) * tau.m - sign * tr.m;
        append_form_tensor_h(rest, r, tol, factors);
        const HermitianTensor target =
            sign > 0 ? (2.0 * r + 1.0) * tau_h + theta : (2.0 * r + 1.0) * tau_h - theta;
        const double err = relative_error(tensor_from_factors(factors, n, r), target);
        return std::make_pair(std::move(factors), err);
    };

    auto [lower, lower_err] = build(+1.0);  // certifies theta >= -(2r+1) tau (x) h
    auto [upper, upper_err] = build(-1.0);  // certifies theta <= (2r+1) tau (x) h

    SandwichCertificate cert;
    cert.lower_error = lower_err;
    cert.upper_error = upper_err;
    cert.ok = lower_err < 1e-9 && upper_err < 1e-9;
    cert.lower_span_rank = span_rank(lower, n, r);
    cert.upper_span_rank = span_rank(upper, n, r);
    cert.lower_factors = std::move(lower);
    cert.upper_factors = std::move(upper);
    return cert;
}

}  // namespace orbijet::positivity
