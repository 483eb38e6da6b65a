#pragma once

#include "orbijet/ramification.hpp"
#include "orbijet/rational.hpp"

#include <optional>
#include <string>
#include <vector>

namespace orbijet::criteria {

// One boundary component: degree multiple d_j of the ample class, and
// ramification number rho_j in (1, inf].
struct Component {
    Rational degree;
    Ramification rho;
};

// How the per-order positivity level gamma_s is chosen.
//   Exact:    gamma_s = max(max_j d_j/rho_j^(s), gamma_V)
//   Scaled:   gamma_s = max(s * max_j d_j/rho_j, gamma_V)  (coarser)
//   PnPreset: gamma_s = s * t, t = max(max_j d_j/rho_j, 2) (projective
//             n-space convention with gamma_V = 2)
enum class GammaMode { Exact, Scaled, PnPreset };

// Directed orbifold data measured against an ample class A: dimension n,
// rank r of the directed subsheaf, jet order k, boundary components,
// Griffiths level gamma_V, first Chern coefficient lambda_V of the dual
// determinant, twist tau.
struct OrbifoldSpec {
    int n = 0;
    int r = 0;
    int k = 0;
    std::vector<Component> components;
    Rational gamma_V = 0;
    Rational lambda_V = 0;
    Rational tau = 0;
    GammaMode gamma_mode = GammaMode::Exact;

    void validate() const;  // throws std::invalid_argument with a field name

    // t = max(max_j d_j/rho_j, 2).
    Rational t() const;

    // Per-order positivity level gamma_s (see GammaMode).
    Rational gamma_s(int s) const;

    // b_s = r*gamma_s + lambda_V + sum_j d_j (1 - 1/rho_j^(s)).
    Rational curvature_sum(int s) const;

    int component_count() const { return static_cast<int>(components.size()); }
    Rational degree_total() const;
    // Smallest ramification number over the components (infinite if all
    // components are logarithmic or the list is empty).
    Ramification rho_floor() const;
};

struct CriterionReport {
    std::string id;
    bool satisfied = false;
    Rational lhs = 0;
    Rational rhs = 0;
    Rational margin = 0;  // (lhs - rhs) / max(1, |rhs|)
    std::string note;
};

CriterionReport make_report(std::string id, Rational lhs, Rational rhs, std::string note = "");

// The degree-threshold constant
//   c_n = n (n^2 + n - 1) n! (1 + 1/2 + ... + 1/n + 1/n^3)^(n-1),
// exact; c_1 = 1, c_2 = 65/2, and c_n >= n^5.
Rational cn(int n);
double cn_float(int n);

// Large-n equivalent sqrt(2 pi) n^{n+7/2} e^{-n} (gamma + log n)^{n-1}
// with the Euler-Mascheroni constant gamma.
double cn_asymptotic(int n);

// Proven upper bound for cn/cn_asymptotic when n >= 3:
// exp((1/2)(1 - 1/n)/(gamma + log n) + 13/(12 n) - 1/n^2).
double cn_ratio_bound(int n);

// Lower bounds for the positive Morse integral, in units of A^n.
//   Product: (kr-1)!/(n+kr-1)! * prod_{s<=n} b_s         (needs k >= n)
//   Refined: the full combinatorial sum over weighted multi-indices p
//            with |p| = n, disjoint component families J_1,...,J_k and
//            pole weights q_j >= 1 with sum_{j in J_s} q_j <= p_s.
enum class LowerBoundVariant { Product, Refined };
Rational morse_lower(const OrbifoldSpec& spec, LowerBoundVariant variant);

// Contribution of the leading squarefree multi-index p = (1,...,1,0,...)
// to the refined sum (needs k >= n). Diagnostic; the refined bound
// dominates it term by term.
Rational morse_lower_refined_single(const OrbifoldSpec& spec);

// Upper bounds for the mixed Morse integral, in units of A^n.
//   Tight:  n!(kr-1)!/(n+kr-2)! (sum gamma_s/s + tau) h_{n-1}(b_1/1,...,b_k/k)
//   Simple: n!(kr-1)!/(n+kr-2)! (sum gamma_s/s + tau) (sum b_s/s)^{n-1}
// where h_{n-1} is the complete homogeneous symmetric polynomial.
enum class UpperBoundVariant { Tight, Simple };
Rational morse_upper(const OrbifoldSpec& spec, UpperBoundVariant variant);

// Existence of orbifold jet differentials via the Morse integral gap:
// satisfied iff morse_lower > morse_upper with the chosen variants.
CriterionReport check_jet_existence(const OrbifoldSpec& spec,
                                    LowerBoundVariant lower = LowerBoundVariant::Refined,
                                    UpperBoundVariant upper = UpperBoundVariant::Tight);

// Compact case (no boundary): k >= n and
// lambda_V > n! (sum_{s<=k} 1/s)^n gamma_V - r gamma_V.
CriterionReport check_compact(int n, int r, int k, const Rational& gamma_V,
                              const Rational& lambda_V);

// Logarithmic boundary on projective n-space, total degree d:
// k >= n and d > 2 n! (sum_{s<=k} 1/s)^n - n + 1.
CriterionReport check_log_pn(int n, int k, const Rational& d_total);

// Orbifold boundary on projective n-space, k >= n, all rho_j >= rho > n:
// sum_j d_j * min(min_j rho_j/d_j, 1/2) * prod_{s<=n} (1 - s/rho) > c_n.
CriterionReport check_orbifold_sum(int n, int k, const std::vector<Component>& components);

// Equal-component variants, k >= n, rho > n:
//   uniform:      N min(rho, d)   prod (1 - s/rho) > 2 c_n
//   uniform-half: N min(rho, d/2) prod (1 - s/rho) > c_n
CriterionReport check_orbifold_uniform(int n, int k, int N, const Rational& d,
                                       const Ramification& rho);
CriterionReport check_orbifold_uniform_half(int n, int k, int N, const Rational& d,
                                            const Ramification& rho);

// Symmetric-differential criterion (any k >= 1, N >= n, rho_j > 1):
// e_n(d_j (1-1/rho_j)) > (2n-1) t (n t - n - 1 + sum_j d_j(1-1/rho_j))^{n-1}
// with t = max(max_j d_j/rho_j, 2).
CriterionReport check_symmetric_subsets(int n, const std::vector<Component>& components);

// Equal-component variants of the above:
//   binomial:     min(rho,d/2) C(N,n) (1-1/rho)^n > (2n-1)(N+n)^{n-1}
//   uniform:      N min(rho,d)   (1-1/rho)^n > 2^n     (2n-1) n^n
//   uniform-half: N min(rho,d/2) (1-1/rho)^n > 2^{n-1} (2n-1) n^n
CriterionReport check_symmetric_binomial(int n, int N, const Rational& d,
                                         const Ramification& rho);
CriterionReport check_symmetric_uniform(int n, int N, const Rational& d,
                                        const Ramification& rho);
CriterionReport check_symmetric_uniform_half(int n, int N, const Rational& d,
                                             const Ramification& rho);

// C(N,n) >= (N/n)^n, exact.
bool binomial_growth_check(int N, int n);

}  // namespace orbijet::criteria
