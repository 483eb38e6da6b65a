#pragma once

#include "orbijet/moments.hpp"
#include "orbijet/positivity.hpp"
#include "orbijet/rng.hpp"

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace orbijet::mcverify {

// Linear forms l_j on C^r, as coefficient vectors: l(u) = sum_a l_a u_a.
struct LinearFormSet {
    int r = 0;
    std::vector<positivity::Vector> forms;

    std::size_t count() const { return forms.size(); }
    double norm_product_sq() const;  // prod_j |l_j|^2
};

struct SampleConfig {
    std::uint64_t samples = 100000;
    std::uint64_t seed = 42;
    std::uint64_t batch = 16384;
    int threads = 0;  // 0 = honor ORBIJET_THREADS, else 1

    void require_statistical() const;  // samples >= 1000
};

struct Estimate {
    double mean = 0.0;
    double se = 0.0;
    std::uint64_t samples = 0;
};

// Streaming mean/variance accumulator; merges are associative, so chunk
// results can be reduced in a fixed order.
struct Accumulator {
    double sum = 0.0;
    double sum_sq = 0.0;
    std::uint64_t n = 0;

    void add(double v) {
        sum += v;
        sum_sq += v * v;
        ++n;
    }
    void merge(const Accumulator& o) {
        sum += o.sum;
        sum_sq += o.sum_sq;
        n += o.n;
    }
    Estimate estimate() const;
};

// One record per check, JSON-serializable.
struct CheckRecord {
    std::string check_id;
    double estimate = 0.0;
    double stderr_ = 0.0;
    double bound_lo = 0.0;
    double bound_hi = 0.0;
    std::string verdict;  // pass | fail | inconclusive | info
    std::uint64_t seed = 0;
    std::uint64_t samples = 0;
    std::string note;

    bool failed() const { return verdict == "fail"; }
    std::string to_json() const;
};

// Monte-Carlo mean of f(u) over the unit sphere of C^r, chunked into
// deterministic substreams and reduced in chunk order, so the result
// depends only on (seed, batch), not on thread count.
Estimate mc_over_sphere(int r, const SampleConfig& cfg,
                        const std::function<double(const positivity::Vector&)>& f);

// Same over the weighted simplex.
Estimate mc_over_simplex(int k, int r, const SampleConfig& cfg,
                         const std::function<double(const Eigen::VectorXd&)>& f);

// Unbiased estimate of I(l_1,...,l_p) = integral of prod |l_j(u)|^2 over
// the unit sphere of C^r.
Estimate estimate_I(const LinearFormSet& forms, const SampleConfig& cfg);

// Two-sided product-moment bounds:
// (r-1)!/(p+r-1)! prod|l_j|^2 <= I <= p!(r-1)!/(p+r-1)! prod|l_j|^2.
// Point estimates inside the bounds pass; violations beyond the 4-sigma
// guard band fail; anything between is inconclusive.
CheckRecord check_sphere_bounds(const LinearFormSet& forms, const SampleConfig& cfg,
                                const std::string& id = "sphere-bounds");

// Weighted symmetric-function lower bound on the sphere of C^{r-1}
// (r >= 2): the integral of
//   sum_{k<=p} (k+r-2)!(p-k)!/(r-2)! |s_k(l'(u'))|^2
// dominates prod_j (1 + |l'_j|^2).
CheckRecord check_symfunc_lower(const LinearFormSet& primed_forms, const SampleConfig& cfg,
                                const std::string& id = "sphere-symfunc");

// Exact coefficient-root inequality: for s_k the elementary symmetric
// functions of the roots,
//   prod_j (1 + |a_j|^2) <= sum_k k!(p-k)! |s_k|^2,
// compared against the cruder exponential bound 2^p sum_k |s_k|^2; the
// note reports which is tighter.
CheckRecord check_root_coefficient(const std::vector<std::complex<double>>& roots,
                                   const std::string& id = "root-coefficient");

// Hermitian tensor together with a decomposable-square certificate.
struct CertifiedTensor {
    positivity::HermitianTensor theta;
    std::vector<positivity::RankOneFactor> certificate;

    static CertifiedTensor from_factors(std::vector<positivity::RankOneFactor> factors, int n,
                                        int r);
    void validate(double tol = 1e-9) const;  // certificate reconstructs theta
};

// Wedge-product moment bounds for certified strongly semipositive
// tensors theta_1..theta_{p-k} on T (x) E with dim T = p - k:
//   integral of prod|l_j(u)|^2 MD(<theta_1(u),u>, ..., <theta_{p-k}(u),u>)
// lies between the product-moment constants times
// MD(Tr_E theta_1, ..., Tr_E theta_{p-k}).
CheckRecord check_wedge_strong(const std::vector<CertifiedTensor>& thetas,
                               const LinearFormSet& forms, const SampleConfig& cfg,
                               const std::string& id = "wedge-strong");

// Upper wedge bound for a single Griffiths-semipositive theta, p - k
// copies: estimate <= p!(r-1)!/(p+r-1)! prod|l_j|^2 MD(Tr_E theta, ...).
CheckRecord check_wedge_griffiths(const positivity::HermitianTensor& theta, int copies,
                                  const LinearFormSet& forms, const SampleConfig& cfg,
                                  const std::string& id = "wedge-griffiths");

// Sphere average of a Hermitian form equals its normalized trace:
// integral of Q(u) d mu = Tr(Q)/r, within 3 sigma.
CheckRecord check_trace_identity(const positivity::HermitianForm& q, const SampleConfig& cfg,
                                 const std::string& id = "trace-identity");

// Weighted-simplex sampler against the exact moment.
CheckRecord check_simplex_moment(const moments::MultiIndex& p, int k, int r,
                                 const SampleConfig& cfg,
                                 const std::string& id = "simplex-moment");

// Sphere power/product moments against their closed forms.
CheckRecord check_sphere_power_moment(long p, int r, const SampleConfig& cfg,
                                      const std::string& id = "sphere-moment-power");
CheckRecord check_sphere_product_moment(long p, int r, const SampleConfig& cfg,
                                        const std::string& id = "sphere-moment-product");

// Empirical minimum of I/prod|l_j|^2, normalized by the proven lower
// constant (so values >= 1); exploratory output for p > r, verdict
// "info".
CheckRecord explore_product_ratio(int r, int p, int trials, const SampleConfig& cfg,
                                  const std::string& id = "product-ratio-min");

// Named suites (see suite_names()); returns one record per check, in a
// fixed order with seeds derived from cfg.seed.
std::vector<CheckRecord> run_suite(const std::string& suite, const SampleConfig& cfg);
std::vector<std::string> suite_names();
bool is_suite(const std::string& name);

}  // namespace orbijet::mcverify
