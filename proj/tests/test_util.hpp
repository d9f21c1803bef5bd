#pragma once

#include <random>
#include <vector>

#include "subdiv/polygon.hpp"
#include "subdiv/scheme.hpp"

namespace subdiv::testing {

inline Rational random_rational(std::mt19937_64& rng, long max_abs_num = 1000000,
                                long max_den = 1000000) {
    std::uniform_int_distribution<long> num(-max_abs_num, max_abs_num);
    std::uniform_int_distribution<long> den(1, max_den);
    return Rational(num(rng), den(rng));
}

inline Rational random_nonzero_rational(std::mt19937_64& rng, long max_abs_num = 1000000,
                                        long max_den = 1000000) {
    for (;;) {
        Rational r = random_rational(rng, max_abs_num, max_den);
        if (!r.is_zero()) return r;
    }
}

/// Full dual binary mask built independently of the library: the per-rule
/// list interleaved with its own reversal, anchored at 0.
inline SubdivisionScheme random_dual_binary(std::mt19937_64& rng, int per_rule_width) {
    const int two_n = per_rule_width;
    const int n = two_n / 2;
    std::vector<Rational> rule(static_cast<std::size_t>(two_n));
    for (auto& c : rule) c = random_rational(rng);
    rule.front() = random_nonzero_rational(rng);
    rule.back() = random_nonzero_rational(rng);
    std::vector<Rational> full(static_cast<std::size_t>(2 * two_n));
    for (int u = -n; u <= n - 1; ++u) {
        full[static_cast<std::size_t>(2 * u + 2 * n)] = rule[static_cast<std::size_t>(u + n)];
        full[static_cast<std::size_t>(2 * u + 1 + 2 * n)] =
            rule[static_cast<std::size_t>(n - 1 - u)];
    }
    return {Mask(2, 0, std::move(full)), "fuzz-dual", "generated"};
}

inline LaurentPolynomial random_laurent(std::mt19937_64& rng, int max_span = 6,
                                        long max_abs_num = 50, long max_den = 50) {
    std::uniform_int_distribution<int> span(0, max_span);
    std::uniform_int_distribution<int> low(-5, 5);
    int len = span(rng) + 1;
    std::vector<Rational> c(static_cast<std::size_t>(len));
    for (auto& x : c) x = random_rational(rng, max_abs_num, max_den);
    c.front() = random_nonzero_rational(rng, max_abs_num, max_den);
    c.back() = random_nonzero_rational(rng, max_abs_num, max_den);
    return {low(rng), std::move(c)};
}

inline Polygon random_closed_polygon(std::mt19937_64& rng, int min_pts = 3, int max_pts = 12) {
    std::uniform_int_distribution<int> count(min_pts, max_pts);
    int n = count(rng);
    std::vector<std::vector<Rational>> pts;
    pts.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
        pts.push_back({random_rational(rng, 100, 20), random_rational(rng, 100, 20)});
    return Polygon(Topology::closed, std::move(pts));
}

inline Polygon unit_square() {
    return Polygon(Topology::closed, {{Rational(0), Rational(0)},
                                      {Rational(1), Rational(0)},
                                      {Rational(1), Rational(1)},
                                      {Rational(0), Rational(1)}});
}

}  // namespace subdiv::testing
