#include "orbijet/criteria.hpp"

#include "orbijet/chernwedge.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>

namespace orbijet::criteria {

namespace {

constexpr double kEulerGamma = 0.57721566490153286060651209008240243;

void require(bool cond, const char* message) {
    if (!cond) throw std::invalid_argument(message);
}

Rational abs_rational(const Rational& q) { return q < 0 ? Rational(-q) : q; }

}  // namespace

void OrbifoldSpec::validate() const {
    require(n >= 1, "spec.n: must be >= 1");
    require(r >= 1, "spec.r: must be >= 1");
    require(k >= 1, "spec.k: must be >= 1");
    require(gamma_V >= 0, "spec.gamma_V: must be >= 0");
    require(tau >= 0, "spec.tau: must be >= 0");
    for (const auto& c : components) {
        require(c.degree >= 0, "spec.components.d: must be >= 0");
        // Ramification enforces rho > 1 at construction.
    }
}

Rational OrbifoldSpec::t() const {
    Rational best = 2;
    for (const auto& c : components) best = std::max(best, c.rho.degree_over(c.degree));
    return best;
}

Rational OrbifoldSpec::gamma_s(int s) const {
    require(s >= 1, "gamma_s: s >= 1");
    switch (gamma_mode) {
        case GammaMode::Exact: {
            Rational best = gamma_V;
            for (const auto& c : components)
                best = std::max(best, c.rho.degree_over_order(c.degree, static_cast<unsigned>(s)));
            return best;
        }
        case GammaMode::Scaled: {
            Rational best = 0;
            for (const auto& c : components) best = std::max(best, c.rho.degree_over(c.degree));
            return std::max(Rational(s) * best, gamma_V);
        }
        case GammaMode::PnPreset:
            return Rational(s) * t();
    }
    throw std::logic_error("gamma_s: unknown mode");
}

Rational OrbifoldSpec::curvature_sum(int s) const {
    Rational b = Rational(r) * gamma_s(s) + lambda_V;
    for (const auto& c : components)
        b += c.degree * c.rho.fraction_lost(static_cast<unsigned>(s));
    return b;
}

Rational OrbifoldSpec::degree_total() const {
    Rational d = 0;
    for (const auto& c : components) d += c.degree;
    return d;
}

Ramification OrbifoldSpec::rho_floor() const {
    std::optional<Rational> best;
    for (const auto& c : components)
        if (!c.rho.is_infinite())
            if (!best || c.rho.value() < *best) best = c.rho.value();
    return best ? Ramification::finite(*best) : Ramification::infinite();
}

CriterionReport make_report(std::string id, Rational lhs, Rational rhs, std::string note) {
    CriterionReport rep;
    rep.id = std::move(id);
    rep.satisfied = lhs > rhs;
    rep.margin = (lhs - rhs) / std::max(Rational(1), abs_rational(rhs));
    rep.lhs = std::move(lhs);
    rep.rhs = std::move(rhs);
    rep.note = std::move(note);
    return rep;
}

Rational cn(int n) {
    require(n >= 1, "cn: n >= 1");
    const Rational base = harmonic(static_cast<unsigned>(n)) + Rational(1, int_pow(BigInt(n), 3));
    return Rational(BigInt(n) * (BigInt(n) * n + n - 1) * factorial(static_cast<unsigned>(n))) *
           rat_pow(base, static_cast<unsigned>(n - 1));
}

double cn_float(int n) { return to_double(cn(n)); }

double cn_asymptotic(int n) {
    require(n >= 1, "cn_asymptotic: n >= 1");
    const double x = static_cast<double>(n);
    return std::sqrt(2.0 * M_PI) * std::pow(x, x + 3.5) * std::exp(-x) *
           std::pow(kEulerGamma + std::log(x), x - 1.0);
}

double cn_ratio_bound(int n) {
    require(n >= 1, "cn_ratio_bound: n >= 1");
    const double x = static_cast<double>(n);
    return std::exp(0.5 * (1.0 - 1.0 / x) / (kEulerGamma + std::log(x)) + 13.0 / (12.0 * x) -
                    1.0 / (x * x));
}

namespace {

// Enumerates compositions p of total into k parts.
template <typename F>
void for_each_composition(int total, int k, std::vector<int>& p, int idx, const F& visit) {
    if (idx == k - 1) {
        p[static_cast<std::size_t>(idx)] = total;
        visit(p);
        return;
    }
    for (int v = 0; v <= total; ++v) {
        p[static_cast<std::size_t>(idx)] = v;
        for_each_composition(total - v, k, p, idx + 1, visit);
    }
}

Rational refined_inner_sum(const OrbifoldSpec& spec, const std::vector<int>& p);

}  // namespace

Rational morse_lower(const OrbifoldSpec& spec, LowerBoundVariant variant) {
    spec.validate();
    const int n = spec.n, r = spec.r, k = spec.k;

    if (variant == LowerBoundVariant::Product) {
        require(k >= n, "morse_lower (product variant): requires k >= n");
        Rational prod = 1;
        for (int s = 1; s <= n; ++s) prod *= spec.curvature_sum(s);
        return Rational(factorial(static_cast<unsigned>(k * r - 1)),
                        factorial(static_cast<unsigned>(n + k * r - 1))) *
               prod;
    }

    require(spec.component_count() <= 20 && n <= 6,
            "morse_lower (refined variant): guarded to N <= 20 and n <= 6");
    Rational total = 0;
    std::vector<int> p(static_cast<std::size_t>(k), 0);
    for_each_composition(n, k, p, 0,
                         [&](const std::vector<int>& pc) { total += refined_inner_sum(spec, pc); });
    return Rational(BigInt(factorial(static_cast<unsigned>(n)) *
                           factorial(static_cast<unsigned>(k * r - 1))),
                    factorial(static_cast<unsigned>(n + k * r - 1))) *
           total;
}

Rational morse_lower_refined_single(const OrbifoldSpec& spec) {
    spec.validate();
    require(spec.k >= spec.n, "morse_lower_refined_single: requires k >= n");
    require(spec.component_count() <= 20 && spec.n <= 6,
            "morse_lower_refined_single: guarded to N <= 20 and n <= 6");
    std::vector<int> p(static_cast<std::size_t>(spec.k), 0);
    for (int s = 0; s < spec.n; ++s) p[static_cast<std::size_t>(s)] = 1;
    return Rational(BigInt(factorial(static_cast<unsigned>(spec.n)) *
                           factorial(static_cast<unsigned>(spec.k * spec.r - 1))),
                    factorial(static_cast<unsigned>(spec.n + spec.k * spec.r - 1))) *
           refined_inner_sum(spec, p);
}

namespace {

// Inner sum of the refined lower bound for a fixed multi-index p:
// components are assigned disjointly to orders s (or left unused) with
// pole weights q_j >= 1, sum_{j -> s} q_j <= p_s. A DP over components
// tracks, per order with p_s >= 1, the pair (assigned count m_s, weight
// Q_s); the closing factor per order is
//   m_s! (p_s - Q_s + r - 1)!/(p_s - Q_s)! (gamma_s - gamma_V)^{p_s - Q_s}
// and each assigned component contributes
//   d_j (1 - 1/rho_j^(s)) (r-1)!/(q_j + r - 1)! (gamma_s - d_j/rho_j^(s))^{q_j - 1}.
Rational refined_inner_sum(const OrbifoldSpec& spec, const std::vector<int>& p) {
    const int k = spec.k, r = spec.r;
    std::vector<int> active;  // orders with p_s >= 1
    for (int s = 1; s <= k; ++s)
        if (p[static_cast<std::size_t>(s - 1)] >= 1) active.push_back(s);

    std::vector<Rational> gamma(active.size());
    for (std::size_t a = 0; a < active.size(); ++a) gamma[a] = spec.gamma_s(active[a]);

    // DP state: per active order, (m, Q) packed as m + Q*(n+1).
    using State = std::vector<int>;
    std::map<State, Rational> dp;
    dp[State(active.size() * 2, 0)] = 1;  // interleaved (m_0, Q_0, m_1, Q_1, ...)

    for (const auto& comp : spec.components) {
        std::map<State, Rational> next;
        for (const auto& [state, weight] : dp) {
            // component left unused
            next[state] += weight;
            for (std::size_t a = 0; a < active.size(); ++a) {
                const int s = active[a];
                const int ps = p[static_cast<std::size_t>(s - 1)];
                const int q_used = state[2 * a + 1];
                const Rational lost = comp.rho.fraction_lost(static_cast<unsigned>(s));
                const Rational dr =
                    comp.rho.degree_over_order(comp.degree, static_cast<unsigned>(s));
                for (int q = 1; q_used + q <= ps; ++q) {
                    Rational w = weight * comp.degree * lost *
                                 Rational(factorial(static_cast<unsigned>(r - 1)),
                                          factorial(static_cast<unsigned>(q + r - 1))) *
                                 rat_pow(gamma[a] - dr, static_cast<unsigned>(q - 1));
                    if (w == 0) continue;
                    State child = state;
                    child[2 * a] += 1;
                    child[2 * a + 1] += q;
                    next[child] += w;
                }
            }
        }
        dp.swap(next);
    }

    Rational inner = 0;
    for (const auto& [state, weight] : dp) {
        Rational term = weight;
        for (std::size_t a = 0; a < active.size(); ++a) {
            const int s = active[a];
            const int ps = p[static_cast<std::size_t>(s - 1)];
            const int m = state[2 * a], q_total = state[2 * a + 1];
            const int rest = ps - q_total;
            term *= Rational(factorial(static_cast<unsigned>(m)) *
                                 factorial(static_cast<unsigned>(rest + r - 1)),
                             factorial(static_cast<unsigned>(rest)) *
                                 int_pow(BigInt(s), static_cast<unsigned>(ps))) *
                    rat_pow(gamma[a] - spec.gamma_V, static_cast<unsigned>(rest));
        }
        inner += term;
    }

    // Orders with p_s = 0 each contribute (r-1)!.
    const int idle = k - static_cast<int>(active.size());
    if (idle > 0)
        inner *= Rational(int_pow(factorial(static_cast<unsigned>(r - 1)),
                                  static_cast<unsigned>(idle)));
    return inner;
}

}  // namespace

Rational morse_upper(const OrbifoldSpec& spec, UpperBoundVariant variant) {
    spec.validate();
    const int n = spec.n, r = spec.r, k = spec.k;

    Rational gamma_sum = spec.tau;
    std::vector<Rational> scaled(static_cast<std::size_t>(k));
    for (int s = 1; s <= k; ++s) {
        gamma_sum += spec.gamma_s(s) / s;
        scaled[static_cast<std::size_t>(s - 1)] = spec.curvature_sum(s) / s;
    }

    const Rational prefactor(BigInt(factorial(static_cast<unsigned>(n)) *
                                    factorial(static_cast<unsigned>(k * r - 1))),
                             factorial(static_cast<unsigned>(n + k * r - 2)));

    if (variant == UpperBoundVariant::Simple) {
        Rational sum = 0;
        for (const Rational& v : scaled) sum += v;
        return prefactor * gamma_sum * rat_pow(sum, static_cast<unsigned>(n - 1));
    }

    // Complete homogeneous symmetric polynomial h_{n-1} of the scaled
    // curvature sums, by the stars-and-bars recurrence.
    std::vector<Rational> h(static_cast<std::size_t>(n), 0);
    h[0] = 1;
    for (const Rational& v : scaled)
        for (int d = 1; d < n; ++d)
            h[static_cast<std::size_t>(d)] += v * h[static_cast<std::size_t>(d - 1)];
    return prefactor * gamma_sum * h[static_cast<std::size_t>(n - 1)];
}

CriterionReport check_jet_existence(const OrbifoldSpec& spec, LowerBoundVariant lower,
                                    UpperBoundVariant upper) {
    const Rational m = morse_lower(spec, lower);
    const Rational mp = morse_upper(spec, upper);
    std::string note = std::string("lower=") +
                       (lower == LowerBoundVariant::Product ? "product" : "refined") +
                       " upper=" + (upper == UpperBoundVariant::Tight ? "tight" : "simple");
    return make_report("jet-existence", m, mp, std::move(note));
}

CriterionReport check_compact(int n, int r, int k, const Rational& gamma_V,
                              const Rational& lambda_V) {
    require(n >= 1 && r >= 1, "check_compact: n, r >= 1");
    require(k >= n, "check_compact: requires k >= n");
    require(gamma_V >= 0, "check_compact: gamma_V >= 0");
    const Rational rhs =
        Rational(factorial(static_cast<unsigned>(n))) *
            rat_pow(harmonic(static_cast<unsigned>(k)), static_cast<unsigned>(n)) * gamma_V -
        Rational(r) * gamma_V;
    return make_report("compact", lambda_V, rhs);
}

CriterionReport check_log_pn(int n, int k, const Rational& d_total) {
    require(n >= 1, "check_log_pn: n >= 1");
    require(k >= n, "check_log_pn: requires k >= n");
    const Rational rhs = Rational(2) * Rational(factorial(static_cast<unsigned>(n))) *
                             rat_pow(harmonic(static_cast<unsigned>(k)),
                                     static_cast<unsigned>(n)) -
                         n + 1;
    return make_report("log-pn", d_total, rhs);
}

namespace {

// prod_{s=1..n} (1 - s/rho); 1 in the logarithmic case.
Rational degeneration_product(int n, const Ramification& rho) {
    Rational prod = 1;
    for (int s = 1; s <= n; ++s) prod *= rho.fraction_lost(static_cast<unsigned>(s));
    return prod;
}

void require_rho_above(const Ramification& rho, int n, const char* what) {
    if (!rho.is_infinite() && rho.value() <= n)
        throw std::invalid_argument(std::string(what) + ": requires rho > n");
}

}  // namespace

CriterionReport check_orbifold_sum(int n, int k, const std::vector<Component>& components) {
    require(n >= 1, "check_orbifold_sum: n >= 1");
    require(k >= n, "check_orbifold_sum: requires k >= n");
    require(!components.empty(), "check_orbifold_sum: needs at least one component");

    const Ramification rho = [&] {
        std::optional<Rational> best;
        for (const auto& c : components)
            if (!c.rho.is_infinite())
                if (!best || c.rho.value() < *best) best = c.rho.value();
        return best ? Ramification::finite(*best) : Ramification::infinite();
    }();
    require_rho_above(rho, n, "check_orbifold_sum");

    // min(min_j rho_j/d_j, 1/2); components of degree 0 put no constraint.
    Rational cap(1, 2);
    for (const auto& c : components) {
        if (c.rho.is_infinite() || c.degree == 0) continue;
        cap = std::min(cap, c.rho.value() / c.degree);
    }

    Rational total = 0;
    for (const auto& c : components) total += c.degree;
    const Rational lhs = total * cap * degeneration_product(n, rho);
    return make_report("orbifold-degree-sum", lhs, cn(n));
}

namespace {

void check_uniform_preconditions(int n, int N, const Rational& d, const char* what) {
    if (n < 1) throw std::invalid_argument(std::string(what) + ": n >= 1");
    if (N < 1) throw std::invalid_argument(std::string(what) + ": N >= 1");
    if (d < 0) throw std::invalid_argument(std::string(what) + ": d >= 0");
}

Rational min_with_rho(const Ramification& rho, const Rational& d) {
    if (rho.is_infinite()) return d;
    return std::min(rho.value(), d);
}

}  // namespace

CriterionReport check_orbifold_uniform(int n, int k, int N, const Rational& d,
                                       const Ramification& rho) {
    check_uniform_preconditions(n, N, d, "check_orbifold_uniform");
    require(k >= n, "check_orbifold_uniform: requires k >= n");
    require_rho_above(rho, n, "check_orbifold_uniform");
    const Rational lhs = Rational(N) * min_with_rho(rho, d) * degeneration_product(n, rho);
    return make_report("orbifold-uniform", lhs, Rational(2) * cn(n));
}

CriterionReport check_orbifold_uniform_half(int n, int k, int N, const Rational& d,
                                            const Ramification& rho) {
    check_uniform_preconditions(n, N, d, "check_orbifold_uniform_half");
    require(k >= n, "check_orbifold_uniform_half: requires k >= n");
    require_rho_above(rho, n, "check_orbifold_uniform_half");
    const Rational lhs =
        Rational(N) * min_with_rho(rho, d / 2) * degeneration_product(n, rho);
    return make_report("orbifold-uniform-half", lhs, cn(n));
}

CriterionReport check_symmetric_subsets(int n, const std::vector<Component>& components) {
    require(n >= 1, "check_symmetric_subsets: n >= 1");
    const int N = static_cast<int>(components.size());
    require(N >= n, "check_symmetric_subsets: requires N >= n");

    std::vector<Rational> values;
    values.reserve(components.size());
    Rational sum = 0;
    Rational t = 2;
    for (const auto& c : components) {
        const Rational v = c.degree * c.rho.fraction_lost(1);
        values.push_back(v);
        sum += v;
        t = std::max(t, c.rho.degree_over(c.degree));
    }
    const Rational lhs = chernwedge::elementary_symmetric(values, n);
    const Rational rhs = Rational(2 * n - 1) * t *
                         rat_pow(Rational(n) * t - n - 1 + sum, static_cast<unsigned>(n - 1));
    return make_report("symdiff-subsets", lhs, rhs);
}

CriterionReport check_symmetric_binomial(int n, int N, const Rational& d,
                                         const Ramification& rho) {
    check_uniform_preconditions(n, N, d, "check_symmetric_binomial");
    require(N >= n, "check_symmetric_binomial: requires N >= n");
    const Rational lhs = min_with_rho(rho, d / 2) *
                         Rational(binomial(BigInt(N), static_cast<unsigned>(n))) *
                         rat_pow(rho.fraction_lost(1), static_cast<unsigned>(n));
    const Rational rhs =
        Rational(2 * n - 1) * rat_pow(Rational(N + n), static_cast<unsigned>(n - 1));
    return make_report("symdiff-binomial", lhs, rhs);
}

CriterionReport check_symmetric_uniform(int n, int N, const Rational& d,
                                        const Ramification& rho) {
    check_uniform_preconditions(n, N, d, "check_symmetric_uniform");
    require(N >= n, "check_symmetric_uniform: requires N >= n");
    const Rational lhs = Rational(N) * min_with_rho(rho, d) *
                         rat_pow(rho.fraction_lost(1), static_cast<unsigned>(n));
    const Rational rhs = Rational(int_pow(BigInt(2), static_cast<unsigned>(n))) *
                         Rational(2 * n - 1) * Rational(int_pow(BigInt(n), static_cast<unsigned>(n)));
    return make_report("symdiff-uniform", lhs, rhs,
                       "companion half-degree variant uses min(rho, d/2) against half this bound");
}

CriterionReport check_symmetric_uniform_half(int n, int N, const Rational& d,
                                             const Ramification& rho) {
    check_uniform_preconditions(n, N, d, "check_symmetric_uniform_half");
    require(N >= n, "check_symmetric_uniform_half: requires N >= n");
    const Rational lhs = Rational(N) * min_with_rho(rho, d / 2) *
                         rat_pow(rho.fraction_lost(1), static_cast<unsigned>(n));
    const Rational rhs = Rational(int_pow(BigInt(2), static_cast<unsigned>(n - 1))) *
                         Rational(2 * n - 1) * Rational(int_pow(BigInt(n), static_cast<unsigned>(n)));
    return make_report("symdiff-uniform-half", lhs, rhs,
                       "companion full-degree variant uses min(rho, d) against twice this bound");
}

bool binomial_growth_check(int N, int n) {
    require(n >= 1 && N >= n, "binomial_growth_check: 0 < n <= N");
    // C(N,n) >= (N/n)^n  <=>  C(N,n) n^n >= N^n
    return binomial(BigInt(N), static_cast<unsigned>(n)) *
               int_pow(BigInt(n), static_cast<unsigned>(n)) >=
           int_pow(BigInt(N), static_cast<unsigned>(n));
}

}  // namespace orbijet::criteria
