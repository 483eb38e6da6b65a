#include "orbijet/jetcombi.hpp"

#include <stdexcept>

namespace orbijet::jetcombi {

namespace {

void collect_partitions(int k, long m, std::vector<long>& scratch,
                        std::vector<WeightedPartition>& out) {
    if (k == 1) {
        scratch[0] = m;
        out.push_back(WeightedPartition{scratch});
        return;
    }
    for (long lk = 0; lk * k <= m; ++lk) {
        scratch[static_cast<std::size_t>(k) - 1] = lk;
        collect_partitions(k - 1, m - lk * k, scratch, out);
    }
}

}  // namespace

std::vector<WeightedPartition> weighted_partitions(int k, long m) {
    if (k < 1) throw std::invalid_argument("weighted_partitions: k must be >= 1");
    if (m < 0) throw std::invalid_argument("weighted_partitions: m must be >= 0");
    std::vector<WeightedPartition> out;
    std::vector<long> scratch(static_cast<std::size_t>(k), 0);
    collect_partitions(k, m, scratch, out);
    return out;
}

BigInt graded_dim(int k, long m, int r) {
    if (k < 1 || r < 1) throw std::invalid_argument("graded_dim: k and r must be >= 1");
    if (m < 0) throw std::invalid_argument("graded_dim: m must be >= 0");
    BigInt total = 0;
    for (const auto& wp : weighted_partitions(k, m)) {
        BigInt prod = 1;
        for (long l : wp.parts) prod *= binomial(BigInt(l + r - 1), static_cast<unsigned>(r - 1));
        total += prod;
    }
    return total;
}

long jet_space_dim(int n, int r, int k) {
    if (n < 1 || r < 1 || k < 1) throw std::invalid_argument("jet_space_dim: n, r, k must be >= 1");
    return n + static_cast<long>(k) * r - 1;
}

long OrbifoldMonomial::weighted_degree() const {
    long deg = 0;
    for (std::size_t s = 0; s < alpha.size(); ++s)
        for (long a : alpha[s]) deg += static_cast<long>(s + 1) * a;
    return deg;
}

void OrbifoldMonomial::validate() const {
    if (alpha.empty()) throw std::invalid_argument("monomial: empty exponent matrix");
    const std::size_t r = alpha.front().size();
    for (const auto& row : alpha) {
        if (row.size() != r) throw std::invalid_argument("monomial: ragged exponent matrix");
        for (long a : row)
            if (a < 0) throw std::invalid_argument("monomial: negative exponent");
    }
    if (beta.size() != rho.size())
        throw std::invalid_argument("monomial: beta and rho lengths differ");
    if (beta.size() > r)
        throw std::invalid_argument("monomial: more polar directions than rank");
    for (long b : beta)
        if (b < 0) throw std::invalid_argument("monomial: negative pole order");
}

bool monomial_admissible(const OrbifoldMonomial& mono) {
    mono.validate();
    const int k = mono.order();
    for (int j = 0; j < mono.pole_count(); ++j) {
        Rational bound = 0;
        for (int s = 1; s <= k; ++s)
            bound += Rational(mono.alpha[s - 1][j]) * mono.rho[j].fraction_lost(static_cast<unsigned>(s));
        if (Rational(mono.beta[j]) > bound) return false;
    }
    return true;
}

namespace {

// Enumerates single-column exponent vectors (a_1,...,a_k) with
// sum s*a_s = w and feeds each to the visitor.
template <typename F>
void for_each_column(int k, long w, std::vector<long>& col, int s, const F& visit) {
    if (s == k) {
        if (w % k == 0) {
            col[static_cast<std::size_t>(s) - 1] = w / k;
            visit(col);
        }
        return;
    }
    for (long a = 0; a * s <= w; ++a) {
        col[static_cast<std::size_t>(s) - 1] = a;
        for_each_column(k, w - a * s, col, s + 1, visit);
    }
}

// Number of admissible pole orders for one polar column: floor(bound)+1.
BigInt column_choices(const std::vector<long>& col, const Ramification& rho) {
    Rational bound = 0;
    for (std::size_t s = 0; s < col.size(); ++s)
        bound += Rational(col[s]) * rho.fraction_lost(static_cast<unsigned>(s + 1));
    // bound >= 0 always; floor(p/q) = p/q truncated for non-negative values
    return numerator(bound) / denominator(bound) + 1;
}

}  // namespace

BigInt count_admissible_monomials(int k, int r, int p, long m,
                                  const std::vector<Ramification>& rho) {
    if (k < 1 || r < 1) throw std::invalid_argument("count_admissible_monomials: k, r >= 1");
    if (p < 0 || p > r) throw std::invalid_argument("count_admissible_monomials: need 0 <= p <= r");
    if (static_cast<int>(rho.size()) != p)
        throw std::invalid_argument("count_admissible_monomials: rho must have length p");
    if (m < 0) return 0;

    // Column weight profiles: cnt[j][w] = weighted count over exponent
    // vectors of column weight w (polar columns weight each vector by its
    // number of admissible pole orders, plain columns by 1).
    std::vector<std::vector<BigInt>> cnt(static_cast<std::size_t>(r),
                                         std::vector<BigInt>(static_cast<std::size_t>(m) + 1, 0));
    std::vector<long> col(static_cast<std::size_t>(k), 0);
    for (long w = 0; w <= m; ++w) {
        for_each_column(k, w, col, 1, [&](const std::vector<long>& c) {
            for (int j = 0; j < r; ++j)
                cnt[static_cast<std::size_t>(j)][static_cast<std::size_t>(w)] +=
                    j < p ? column_choices(c, rho[static_cast<std::size_t>(j)]) : BigInt(1);
        });
    }

    // Convolve the r columns over the total weighted degree.
    std::vector<BigInt> acc(static_cast<std::size_t>(m) + 1, 0);
    acc[0] = 1;
    for (int j = 0; j < r; ++j) {
        std::vector<BigInt> next(static_cast<std::size_t>(m) + 1, 0);
        for (long a = 0; a <= m; ++a) {
            if (acc[static_cast<std::size_t>(a)] == 0) continue;
            for (long w = 0; a + w <= m; ++w)
                next[static_cast<std::size_t>(a + w)] +=
                    acc[static_cast<std::size_t>(a)] * cnt[static_cast<std::size_t>(j)][static_cast<std::size_t>(w)];
        }
        acc.swap(next);
    }
    return acc[static_cast<std::size_t>(m)];
}

}  // namespace orbijet::jetcombi
