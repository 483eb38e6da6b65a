#pragma once

#include "orbijet/ramification.hpp"
#include "orbijet/rational.hpp"

#include <vector>

namespace orbijet::jetcombi {

// A k-tuple (l_1,...,l_k) of non-negative integers with sum s*l_s = m.
struct WeightedPartition {
    std::vector<long> parts;

    int order() const { return static_cast<int>(parts.size()); }
    long weight() const {
        long w = 0;
        for (std::size_t s = 0; s < parts.size(); ++s) w += static_cast<long>(s + 1) * parts[s];
        return w;
    }
};

// All weighted partitions of m of order k, ordered lexicographically on
// (l_k,...,l_1). Deterministic; m = 0 yields the all-zero tuple.
std::vector<WeightedPartition> weighted_partitions(int k, long m);

// Dimension of the weight-m graded piece for order-k jets of a rank-r
// bundle: sum over weighted partitions of prod_s C(l_s+r-1, r-1), equal
// to the t^m coefficient of prod_{s<=k} (1-t^s)^{-r}.
BigInt graded_dim(int k, long m, int r);

// Dimension of the projectivized k-jet bundle: n + k*r - 1.
long jet_space_dim(int n, int r, int k);

// Monomial prod_j f_j^{-beta_j} * prod_{s,j} (f_j^(s))^{alpha_{s,j}} with
// pole orders bounded by the ramification data. alpha is k x r
// (alpha[s-1][j-1]); beta and rho have length p <= r, matching the first
// p coordinate indices.
struct OrbifoldMonomial {
    std::vector<std::vector<long>> alpha;
    std::vector<long> beta;
    std::vector<Ramification> rho;

    int order() const { return static_cast<int>(alpha.size()); }
    int rank() const { return alpha.empty() ? 0 : static_cast<int>(alpha.front().size()); }
    int pole_count() const { return static_cast<int>(beta.size()); }
    long weighted_degree() const;

    void validate() const;  // throws on shape violations
};

// Pole admissibility: beta_j <= sum_s alpha_{s,j} * (1 - s/rho_j)_+ for
// every j <= p, evaluated exactly.
bool monomial_admissible(const OrbifoldMonomial& mono);

// Number of admissible (alpha, beta) pairs of weighted degree m with p
// polar directions. Counts generating monomials; linear relations among
// monomials are not modeled, so this is not a vector-space dimension.
// Throws if any rho_j <= 1 (Ramification enforces this) or p > r.
BigInt count_admissible_monomials(int k, int r, int p, long m, const std::vector<Ramification>& rho);

}  // namespace orbijet::jetcombi
