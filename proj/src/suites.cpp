#include "orbijet/chernwedge.hpp"
#include "orbijet/mcverify.hpp"

#include <algorithm>
#include <cstdio>
#include <functional>
#include <map>
#include <stdexcept>

namespace orbijet::mcverify {

namespace {

using positivity::HermitianTensor;
using positivity::Matrix;
using positivity::RankOneFactor;
using positivity::Vector;

Vector random_cvector(int dim, RandomStream& rs) {
    Vector v(dim);
    for (int i = 0; i < dim; ++i) v[i] = std::complex<double>(rs.normal(), rs.normal());
    return v;
}

Matrix random_hermitian(int dim, RandomStream& rs) {
    Matrix g(dim, dim);
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j) g(i, j) = std::complex<double>(rs.normal(), rs.normal());
    return (g + Matrix(g.adjoint())) / 2.0;
}

Matrix random_psd(int dim, RandomStream& rs, double ridge = 0.0) {
    Matrix g(dim, dim);
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j) g(i, j) = std::complex<double>(rs.normal(), rs.normal());
    return Matrix(g * g.adjoint()) / dim + ridge * Matrix::Identity(dim, dim);
}

// Griffiths-semipositive by construction: a positive product tensor plus
// a perturbation small enough to keep every theta(xi (x) u) nonnegative.
HermitianTensor random_griffiths_tensor(int n, int r, RandomStream& rs) {
    const Matrix omega = random_psd(n, rs, 0.5);
    Eigen::SelfAdjointEigenSolver<Matrix> es(omega, Eigen::EigenvaluesOnly);
    const double floor = es.eigenvalues().minCoeff();
    const HermitianTensor base = HermitianTensor::product(omega, r);
    HermitianTensor bump = HermitianTensor::from_flat(n, r, random_hermitian(n * r, rs));
    const double scale = 0.2 * floor / std::max(bump.spectral_norm(), 1e-12);
    return base + scale * bump;
}

LinearFormSet random_forms(int r, int p, RandomStream& rs) {
    LinearFormSet fs;
    fs.r = r;
    for (int j = 0; j < p; ++j) fs.forms.push_back(random_cvector(r, rs));
    return fs;
}

SampleConfig with_seed(const SampleConfig& cfg, std::uint64_t seed, std::uint64_t samples) {
    SampleConfig out = cfg;
    out.seed = seed;
    out.samples = std::max<std::uint64_t>(samples, 1000);
    return out;
}

CheckRecord info_record(std::string id, double value, std::string note) {
    CheckRecord rec;
    rec.check_id = std::move(id);
    rec.estimate = value;
    rec.verdict = "info";
    rec.note = std::move(note);
    return rec;
}

CheckRecord count_record(std::string id, long failures, long trials, std::string note = "") {
    CheckRecord rec;
    rec.check_id = std::move(id);
    rec.estimate = static_cast<double>(failures);
    rec.bound_lo = 0.0;
    rec.bound_hi = 0.0;
    rec.samples = static_cast<std::uint64_t>(trials);
    rec.verdict = failures == 0 ? "pass" : "fail";
    rec.note = std::move(note);
    return rec;
}

CheckRecord residual_record(std::string id, double residual, double tol, std::string note = "") {
    CheckRecord rec;
    rec.check_id = std::move(id);
    rec.estimate = residual;
    rec.bound_lo = 0.0;
    rec.bound_hi = tol;
    rec.verdict = residual <= tol ? "pass" : "fail";
    rec.note = std::move(note);
    return rec;
}

std::string seq_id(const std::string& base, int i) {
    char buf[16];
    std::snprintf(buf, sizeof buf, "%03d", i);
    return base + "-" + buf;
}

// ---- individual suites ------------------------------------------------

std::vector<CheckRecord> suite_sphere_bounds(const SampleConfig& cfg, int random_sets = 200) {
    std::vector<CheckRecord> out;
    RandomStream gen(RandomStream::splitmix64(cfg.seed ^ 0xb01dfaceULL));
    for (int i = 0; i < random_sets; ++i) {
        const int r = 1 + static_cast<int>(gen.next_u64() % 4);
        const int p = 1 + static_cast<int>(gen.next_u64() % 6);
        const LinearFormSet fs = random_forms(r, p, gen);
        out.push_back(check_sphere_bounds(
            fs, with_seed(cfg, gen.next_u64(), cfg.samples / 10),
            seq_id("sphere-bounds/random", i)));
    }

    {  // proportional forms: upper bound is an equality
        RandomStream rs = gen.substream(1);
        const Vector base = random_cvector(3, rs);
        LinearFormSet fs;
        fs.r = 3;
        for (int j = 0; j < 4; ++j)
            fs.forms.push_back(std::complex<double>(rs.normal(), rs.normal()) * base);
        const int p = 4;
        const double hi = to_double(moments::sphere_power_moment(p, 3)) * fs.norm_product_sq();
        const Estimate est = estimate_I(fs, with_seed(cfg, rs.next_u64(), cfg.samples * 10));
        CheckRecord rec;
        rec.check_id = "sphere-bounds/proportional";
        rec.estimate = est.mean;
        rec.stderr_ = est.se;
        rec.bound_lo = hi;
        rec.bound_hi = hi;
        rec.seed = cfg.seed;
        rec.samples = est.samples;
        rec.verdict = std::abs(est.mean - hi) <= 4.0 * est.se ? "pass" : "fail";
        rec.note = "proportional forms attain the upper bound";
        out.push_back(rec);
    }

    {  // pairwise orthogonal, p <= r: lower bound is an equality
        RandomStream rs = gen.substream(2);
        LinearFormSet fs;
        fs.r = 4;
        for (int j = 0; j < 4; ++j) {
            Vector l = Vector::Zero(4);
            l[j] = std::complex<double>(1.0 + rs.uniform01(), rs.normal());
            fs.forms.push_back(l);
        }
        const double lo = to_double(Rational(factorial(3u), factorial(7u))) * fs.norm_product_sq();
        const Estimate est = estimate_I(fs, with_seed(cfg, rs.next_u64(), cfg.samples * 10));
        CheckRecord rec;
        rec.check_id = "sphere-bounds/orthogonal";
        rec.estimate = est.mean;
        rec.stderr_ = est.se;
        rec.bound_lo = lo;
        rec.bound_hi = lo;
        rec.seed = cfg.seed;
        rec.samples = est.samples;
        rec.verdict = std::abs(est.mean - lo) <= 4.0 * est.se ? "pass" : "fail";
        rec.note = "pairwise orthogonal forms attain the lower bound";
        out.push_back(rec);
    }

    {  // p > r: lower bound is strict
        RandomStream rs = gen.substream(3);
        LinearFormSet fs;
        fs.r = 3;
        for (int j = 0; j < 5; ++j) {
            Vector l = Vector::Zero(3);
            l[j % 3] = 1.0;
            fs.forms.push_back(l);
        }
        CheckRecord rec = check_sphere_bounds(fs, with_seed(cfg, rs.next_u64(), cfg.samples),
                                              "sphere-bounds/extended");
        rec.note = "orthogonal set extended past the rank; lower bound must be strict";
        out.push_back(rec);
    }
    return out;
}

std::vector<CheckRecord> suite_fourier(const SampleConfig& cfg, int instances = 1000) {
    std::vector<CheckRecord> out;
    RandomStream gen(RandomStream::splitmix64(cfg.seed ^ 0xf0031e12ULL));

    {  // pinned identities on basis vectors
        Vector e1 = Vector::Zero(2), e2 = Vector::Zero(2);
        e1[0] = 1.0;
        e2[1] = 1.0;
        const auto diag = positivity::fourier_identity_check(e1, e1, 0, 0, 3);
        const auto off = positivity::fourier_identity_check(e1, e2, 0, 1, 3);
        out.push_back(residual_record("fourier/pinned", std::max(diag.residual, off.residual),
                                      1e-9, "basis-vector identities"));
    }

    for (int q = 3; q <= 5; ++q) {
        double worst = 0.0;
        const int per_q = instances / 3;
        for (int i = 0; i < per_q; ++i) {
            const int r = 1 + static_cast<int>(gen.next_u64() % 3);
            const Vector x = random_cvector(r, gen), y = random_cvector(r, gen);
            const int l = static_cast<int>(gen.next_u64() % static_cast<std::uint64_t>(r));
            const int m = static_cast<int>(gen.next_u64() % static_cast<std::uint64_t>(r));
            worst = std::max(worst, positivity::fourier_identity_check(x, y, l, m, q).residual);
        }
        out.push_back(residual_record("fourier/q" + std::to_string(q), worst, 1e-9,
                                      std::to_string(per_q) + " random instances"));
    }
    return out;
}

std::vector<CheckRecord> suite_symfunc(const SampleConfig& cfg, int random_sets = 100) {
    std::vector<CheckRecord> out;
    RandomStream gen(RandomStream::splitmix64(cfg.seed ^ 0x511f0075ULL));

    for (int i = 0; i < random_sets; ++i) {
        const int r = 2 + static_cast<int>(gen.next_u64() % 3);  // r in 2..4
        const int p = 1 + static_cast<int>(gen.next_u64() % 5);
        const LinearFormSet fs = random_forms(r - 1, p, gen);
        out.push_back(check_symfunc_lower(fs, with_seed(cfg, gen.next_u64(), cfg.samples / 10),
                                          seq_id("sphere-symfunc/random", i)));
    }

    {  // all forms zero: exact
        LinearFormSet fs;
        fs.r = 2;
        for (int j = 0; j < 3; ++j) fs.forms.push_back(Vector::Zero(2));
        out.push_back(check_symfunc_lower(fs, cfg, "sphere-symfunc/zero"));
    }

    {  // p = 1 is an equality
        RandomStream rs = gen.substream(7);
        LinearFormSet fs = random_forms(2, 1, rs);
        const double rhs = 1.0 + fs.forms[0].squaredNorm();
        const int r = 3;
        std::vector<double> coeff = {
            to_double(Rational(factorial(static_cast<unsigned>(r - 2)), factorial(static_cast<unsigned>(r - 2)))),
            to_double(Rational(factorial(static_cast<unsigned>(r - 1)), factorial(static_cast<unsigned>(r - 2))))};
        const SampleConfig sub = with_seed(cfg, rs.next_u64(), cfg.samples);
        const Estimate est = mc_over_sphere(2, sub, [&](const Vector& u) {
            const std::complex<double> v = fs.forms[0].dot(u);
            return coeff[0] + coeff[1] * std::norm(v);
        });
        CheckRecord rec;
        rec.check_id = "sphere-symfunc/equality-p1";
        rec.estimate = est.mean;
        rec.stderr_ = est.se;
        rec.bound_lo = rhs;
        rec.bound_hi = rhs;
        rec.seed = cfg.seed;
        rec.samples = est.samples;
        rec.verdict = std::abs(est.mean - rhs) <= 4.0 * est.se ? "pass" : "fail";
        rec.note = "single form: the bound is an identity";
        out.push_back(rec);
    }
    return out;
}

std::vector<CheckRecord> suite_root_coefficient(const SampleConfig& cfg, int trials = 1000) {
    std::vector<CheckRecord> out;
    RandomStream gen(RandomStream::splitmix64(cfg.seed ^ 0x512c0ef5ULL));

    long failures = 0;
    int exponential_tighter = 0;
    for (int i = 0; i < trials; ++i) {
        const int p = 2 + static_cast<int>(gen.next_u64() % 9);  // 2..10
        std::vector<std::complex<double>> roots;
        for (int j = 0; j < p; ++j)
            roots.emplace_back(1.5 * gen.normal(), 1.5 * gen.normal());
        const CheckRecord rec = check_root_coefficient(roots);
        if (rec.failed()) ++failures;
        if (rec.note == "exponential bound tighter") ++exponential_tighter;
    }
    out.push_back(count_record("root-coefficient/random", failures, trials,
                               std::to_string(exponential_tighter) +
                                   " of the trials had the exponential bound tighter"));

    {  // all roots at the origin
        std::vector<std::complex<double>> zeros(4, 0.0);
        out.push_back(check_root_coefficient(zeros, "root-coefficient/zero"));
    }

    {  // degree 7: the exponential constant 2^7 undercuts min_k k!(7-k)!
        long min_fact = -1;
        for (int k = 0; k <= 7; ++k) {
            const long v = static_cast<long>(factorial(static_cast<unsigned>(k)) *
                                             factorial(static_cast<unsigned>(7 - k)));
            if (min_fact < 0 || v < min_fact) min_fact = v;
        }
        CheckRecord rec;
        rec.check_id = "root-coefficient/degree7-constants";
        rec.estimate = 128.0;
        rec.bound_hi = static_cast<double>(min_fact);
        rec.verdict = 128 < min_fact ? "pass" : "fail";
        rec.note = "2^7 vs min_k k!(7-k)! = " + std::to_string(min_fact);
        out.push_back(rec);
    }
    return out;
}

std::vector<CheckRecord> suite_wedge(const SampleConfig& cfg, int strong_sets = 50) {
    std::vector<CheckRecord> out;
    RandomStream gen(RandomStream::splitmix64(cfg.seed ^ 0x3d6e5e15ULL));

    for (int i = 0; i < strong_sets; ++i) {
        const int r = 1 + static_cast<int>(gen.next_u64() % 3);
        const int copies = 1 + static_cast<int>(gen.next_u64() % 2);
        const int nforms = static_cast<int>(gen.next_u64() % 3);
        std::vector<CertifiedTensor> thetas;
        for (int t = 0; t < copies; ++t) {
            std::vector<RankOneFactor> factors;
            const int nf = 1 + static_cast<int>(gen.next_u64() % 3);
            for (int f = 0; f < nf; ++f)
                factors.push_back(RankOneFactor{random_cvector(copies, gen), random_cvector(r, gen)});
            thetas.push_back(CertifiedTensor::from_factors(std::move(factors), copies, r));
        }
        LinearFormSet fs = random_forms(r, nforms, gen);
        out.push_back(check_wedge_strong(thetas, fs,
                                         with_seed(cfg, gen.next_u64(), cfg.samples / 10),
                                         seq_id("wedge/strong", i)));
    }

    for (int i = 0; i < 10; ++i) {
        const int r = 2 + static_cast<int>(gen.next_u64() % 2);
        const int copies = 1 + static_cast<int>(gen.next_u64() % 2);
        const HermitianTensor theta = random_griffiths_tensor(copies, r, gen);
        LinearFormSet fs = random_forms(r, static_cast<int>(gen.next_u64() % 2), gen);
        out.push_back(check_wedge_griffiths(theta, copies, fs,
                                            with_seed(cfg, gen.next_u64(), cfg.samples / 10),
                                            seq_id("wedge/griffiths", i)));
    }

    {  // tautological curvature shape: <theta(u),u> has rank one, so any
       // wedge of two or more copies vanishes identically
        const int n = 3;
        const HermitianTensor taut = HermitianTensor::tautological(n);
        RandomStream rs = gen.substream(11);
        double worst = 0.0;
        for (int i = 0; i < 200; ++i) {
            const Vector u = sample_unit_sphere(n, rs);
            const Matrix b = taut.contract_e(u);
            worst = std::max(worst, std::abs(chernwedge::mixed_discriminant(
                                        std::vector<Matrix>(2, b))));
        }
        out.push_back(residual_record("wedge/tautological-zero", worst, 1e-12,
                                      "rank-one contraction kills repeated wedges"));
    }

    for (int i = 0; i < 2; ++i) {  // sphere average = normalized trace
        const int r = 3;
        positivity::HermitianForm q{random_hermitian(r, gen)};
        out.push_back(check_trace_identity(q, with_seed(cfg, gen.next_u64(), cfg.samples),
                                           seq_id("wedge/trace-identity", i)));
    }
    return out;
}

std::vector<CheckRecord> suite_simplex(const SampleConfig& cfg) {
    std::vector<CheckRecord> out;
    RandomStream gen(RandomStream::splitmix64(cfg.seed ^ 0xd121c431ULL));
    for (int k = 1; k <= 3; ++k)
        for (int r = 1; r <= 3; ++r) {
            // all multi-indices with |p| <= 4, one shared sample stream per (k, r)
            std::vector<moments::MultiIndex> indices;
            moments::MultiIndex cur(static_cast<std::size_t>(k), 0);
            const std::function<void(int, long)> rec_build = [&](int pos, long left) {
                if (pos == k - 1) {
                    for (long v = 0; v <= left; ++v) {
                        cur[static_cast<std::size_t>(pos)] = v;
                        indices.push_back(cur);
                    }
                    return;
                }
                for (long v = 0; v <= left; ++v) {
                    cur[static_cast<std::size_t>(pos)] = v;
                    rec_build(pos + 1, left - v);
                }
            };
            rec_build(0, 4);

            const SampleConfig sub = with_seed(cfg, gen.next_u64(), cfg.samples);
            std::vector<Accumulator> acc(indices.size());
            const std::uint64_t batch = std::max<std::uint64_t>(1, sub.batch);
            const std::uint64_t chunks = (sub.samples + batch - 1) / batch;
            RandomStream base(sub.seed);
            for (std::uint64_t c = 0; c < chunks; ++c) {
                RandomStream rs = base.substream(c);
                const std::uint64_t lo = c * batch, hi = std::min(sub.samples, lo + batch);
                for (std::uint64_t s = lo; s < hi; ++s) {
                    const Eigen::VectorXd x = sample_simplex(k, r, rs);
                    for (std::size_t ix = 0; ix < indices.size(); ++ix) {
                        double v = 1.0;
                        for (int j = 0; j < k; ++j)
                            v *= std::pow(x[j], static_cast<double>(indices[ix][static_cast<std::size_t>(j)]));
                        acc[ix].add(v);
                    }
                }
            }
            for (std::size_t ix = 0; ix < indices.size(); ++ix) {
                const Estimate est = acc[ix].estimate();
                const double exact = to_double(moments::simplex_moment(indices[ix], k, r));
                std::string id = "simplex/k" + std::to_string(k) + "r" + std::to_string(r) + "/p";
                for (long v : indices[ix]) id += std::to_string(v);
                CheckRecord rec;
                rec.check_id = id;
                rec.estimate = est.mean;
                rec.stderr_ = est.se;
                rec.bound_lo = exact;
                rec.bound_hi = exact;
                rec.seed = sub.seed;
                rec.samples = est.samples;
                rec.verdict = std::abs(est.mean - exact) <= 4.0 * est.se ? "pass" : "fail";
                out.push_back(rec);
            }
        }
    return out;
}

std::vector<CheckRecord> suite_sphere_moments(const SampleConfig& cfg) {
    std::vector<CheckRecord> out;
    RandomStream gen(RandomStream::splitmix64(cfg.seed ^ 0x50be1e75ULL));
    for (int r = 1; r <= 4; ++r) {
        for (long p = 0; p <= 4; ++p)
            out.push_back(check_sphere_power_moment(
                p, r, with_seed(cfg, gen.next_u64(), cfg.samples),
                "sphere-moments/r" + std::to_string(r) + "/power-p" + std::to_string(p)));
        for (long p = 1; p <= std::min(4, r); ++p)
            out.push_back(check_sphere_product_moment(
                p, r, with_seed(cfg, gen.next_u64(), cfg.samples),
                "sphere-moments/r" + std::to_string(r) + "/product-p" + std::to_string(p)));
    }
    return out;
}

std::vector<CheckRecord> suite_decomp(const SampleConfig& cfg, int trials = 100) {
    std::vector<CheckRecord> out;
    RandomStream gen(RandomStream::splitmix64(cfg.seed ^ 0xdec0de55ULL));
    double worst_reconstruction = 0.0;
    double worst_factor_eig = 0.0;
    double worst_nakano = 0.0;
    int min_span = -1;
    for (int i = 0; i < trials; ++i) {
        const int n = 1 + static_cast<int>(gen.next_u64() % 4);
        const int r = 1 + static_cast<int>(gen.next_u64() % 4);
        const HermitianTensor theta = random_griffiths_tensor(n, r, gen);
        const auto factors = positivity::strong_decomposition(theta, 3);
        const HermitianTensor rebuilt = positivity::tensor_from_factors(factors, n, r);
        const HermitianTensor target = theta + HermitianTensor::product(theta.trace_e().m, r);
        worst_reconstruction =
            std::max(worst_reconstruction, (rebuilt.flat() - target.flat()).norm() /
                                               (1.0 + target.flat().norm()));
        for (const auto& f : factors) {
            const Vector c = f.flat_conjugate();
            const Matrix sq = c * c.adjoint();
            Eigen::SelfAdjointEigenSolver<Matrix> es(sq, Eigen::EigenvaluesOnly);
            worst_factor_eig = std::max(worst_factor_eig, -es.eigenvalues().minCoeff());
        }
        Eigen::SelfAdjointEigenSolver<Matrix> es(rebuilt.flat(), Eigen::EigenvaluesOnly);
        worst_nakano = std::max(worst_nakano, -es.eigenvalues().minCoeff());
        const int rank = positivity::span_rank(factors, n, r);
        if (min_span < 0 || rank < min_span) min_span = rank;
    }
    out.push_back(residual_record("decomp/reconstruction", worst_reconstruction, 1e-9,
                                  std::to_string(trials) + " random Griffiths tensors"));
    out.push_back(residual_record("decomp/factor-psd", worst_factor_eig, 1e-12,
                                  "largest negative eigenvalue over all factor squares"));
    out.push_back(residual_record("decomp/sum-nakano", worst_nakano, 1e-9,
                                  "reconstructions stay in the Nakano cone"));
    out.push_back(info_record("decomp/span-rank-min", static_cast<double>(min_span),
                              "smallest factor span rank observed (no guarantee claimed)"));
    return out;
}

std::vector<CheckRecord> suite_sandwich(const SampleConfig& cfg, int trials = 100) {
    std::vector<CheckRecord> out;
    RandomStream gen(RandomStream::splitmix64(cfg.seed ^ 0x5a4dbffcULL));
    double worst_a = 0.0, worst_c = 0.0;
    long failures = 0;
    for (int i = 0; i < trials; ++i) {
        const int n = 1 + static_cast<int>(gen.next_u64() % 3);
        const int r = 1 + static_cast<int>(gen.next_u64() % 3);
        const HermitianTensor theta = random_griffiths_tensor(n, r, gen);
        const auto cert_a = positivity::sandwich_check_griffiths(theta);
        worst_a = std::max({worst_a, cert_a.lower_error, cert_a.upper_error});
        if (!cert_a.ok) ++failures;

        const double bound = theta.spectral_norm();
        positivity::HermitianForm tau{bound * Matrix::Identity(n, n)};
        const auto cert_c = positivity::sandwich_check_bounded(theta, tau);
        worst_c = std::max({worst_c, cert_c.lower_error, cert_c.upper_error});
        if (!cert_c.ok) ++failures;
    }
    out.push_back(residual_record("sandwich/griffiths", worst_a, 1e-9,
                                  std::to_string(trials) + " certified two-sided bounds"));
    out.push_back(residual_record("sandwich/bounded", worst_c, 1e-9,
                                  "operator-norm envelope certificates"));
    out.push_back(count_record("sandwich/failures", failures, 2L * trials));
    return out;
}

std::vector<CheckRecord> suite_index_kernel(const SampleConfig& cfg, int trials = 10000) {
    std::vector<CheckRecord> out;
    RandomStream gen(RandomStream::splitmix64(cfg.seed ^ 0x1dbece11ULL));
    long failures = 0, checks = 0;
    for (int i = 0; i < trials; ++i) {
        const int n = 1 + static_cast<int>(gen.next_u64() % 5);
        std::vector<Rational> lambda;
        for (int j = 0; j < n; ++j)
            lambda.push_back(Rational(static_cast<long>(gen.next_u64() % 25), 8));
        std::sort(lambda.begin(), lambda.end(), std::greater<Rational>());
        for (int q = 0; q <= n; ++q) {
            ++checks;
            if (!chernwedge::morse_kernel_check(lambda, q).pass) ++failures;
        }
    }
    out.push_back(count_record("index-kernel/random", failures, checks,
                               "exact-rational truncated sign sums"));
    return out;
}

std::vector<CheckRecord> suite_explore(const SampleConfig& cfg) {
    std::vector<CheckRecord> out;
    const std::pair<int, int> cases[] = {{2, 3}, {2, 4}, {3, 4}};
    int i = 0;
    for (auto [r, p] : cases) {
        SampleConfig sub = cfg;
        sub.seed = RandomStream::splitmix64(cfg.seed + 1000 + static_cast<std::uint64_t>(i++));
        sub.samples = std::max<std::uint64_t>(cfg.samples / 10, 1000);
        out.push_back(explore_product_ratio(r, p, 20, sub,
                                            "explore/product-ratio-r" + std::to_string(r) + "p" +
                                                std::to_string(p)));
    }
    return out;
}

}  // namespace

std::vector<std::string> suite_names() {
    return {"sphere-bounds", "fourier",        "sphere-symfunc", "root-coefficient",
            "wedge",         "simplex",        "sphere-moments", "decomp",
            "sandwich",      "index-kernel",   "explore",        "all"};
}

namespace {

std::string canonical_suite(const std::string& name) {
    static const std::map<std::string, std::string> aliases = {
        {"lemma58", "sphere-bounds"}, {"lemma511", "sphere-symfunc"},
        {"remark512", "root-coefficient"}, {"prop513", "wedge"},
        {"dirichlet", "simplex"},     {"prop55", "decomp"},
        {"cor57", "sandwich"},        {"lemma23", "index-kernel"}};
    const auto it = aliases.find(name);
    return it == aliases.end() ? name : it->second;
}

}  // namespace

bool is_suite(const std::string& name) {
    const std::string canon = canonical_suite(name);
    const auto names = suite_names();
    return std::find(names.begin(), names.end(), canon) != names.end();
}

std::vector<CheckRecord> run_suite(const std::string& suite, const SampleConfig& cfg) {
    const std::string canon = canonical_suite(suite);
    if (canon == "sphere-bounds") return suite_sphere_bounds(cfg);
    if (canon == "fourier") return suite_fourier(cfg);
    if (canon == "sphere-symfunc") return suite_symfunc(cfg);
    if (canon == "root-coefficient") return suite_root_coefficient(cfg);
    if (canon == "wedge") return suite_wedge(cfg);
    if (canon == "simplex") return suite_simplex(cfg);
    if (canon == "sphere-moments") return suite_sphere_moments(cfg);
    if (canon == "decomp") return suite_decomp(cfg);
    if (canon == "sandwich") return suite_sandwich(cfg);
    if (canon == "index-kernel") return suite_index_kernel(cfg);
    if (canon == "explore") return suite_explore(cfg);
    if (canon == "all") {
        std::vector<CheckRecord> out;
        for (const std::string& s : suite_names()) {
            if (s == "all") continue;
            auto part = run_suite(s, cfg);
            out.insert(out.end(), part.begin(), part.end());
        }
        return out;
    }
    throw std::invalid_argument("unknown verification suite '" + suite + "'");
}

}  // namespace orbijet::mcverify
