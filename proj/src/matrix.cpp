#include "subdiv/matrix.hpp"

#include <cmath>
#include <vector>

namespace subdiv {

Rational infinity_norm(const SmallMatrix& m) {
    Rational best(0);
    for (int i = 1; i <= m.size(); ++i) {
        Rational row(0);
        for (int j = 1; j <= m.size(); ++j) row += abs(m.at(i, j));
        if (row > best) best = row;
    }
    return best;
}

namespace {

double norm_inf(const std::vector<double>& a, int t) {
    double best = 0;
    for (int i = 0; i < t; ++i) {
        double row = 0;
        for (int j = 0; j < t; ++j) row += std::abs(a[static_cast<std::size_t>(i * t + j)]);
        if (row > best) best = row;
    }
    return best;
}

}  // namespace

// Repeated-squaring bound: ||M^(2^k)||^(1/2^k) -> rho(M) from above as k grows.
// The per-step normalization keeps entries representable; the log of the
// discarded scale is carried separately. Doubly-exponential shrinkage of the
// conditioning factor makes 64 squarings accurate to ~1e-13 relative even for
// defective matrices; triangular and nilpotent inputs need no special path.
double two_norm(const SmallMatrix& m, double tol) {
    const int t = m.size();
    SmallMatrix gram(t);
    for (int i = 1; i <= t; ++i)
        for (int j = 1; j <= t; ++j) {
            Rational acc(0);
            for (int k = 1; k <= t; ++k) acc += m.at(k, i) * m.at(k, j);
            gram.at(i, j) = std::move(acc);
        }
    return std::sqrt(spectral_radius(gram, tol));
}

double spectral_radius(const SmallMatrix& m, double tol) {
    if (!(tol > 0)) throw std::invalid_argument("spectral_radius: tol must be > 0");
    const int t = m.size();
    std::vector<double> a(static_cast<std::size_t>(t) * static_cast<std::size_t>(t));
    for (int i = 0; i < t; ++i)
        for (int j = 0; j < t; ++j)
            a[static_cast<std::size_t>(i * t + j)] = m.at(i + 1, j + 1).to_double();

    double log_scale = 0.0;   // M^(2^k) = A * exp(log_scale)
    double inv_pow = 1.0;     // 1 / 2^k
    double bound = 0.0;
    std::vector<double> sq(a.size());
    for (int k = 0; k <= 64; ++k) {
        double s = norm_inf(a, t);
        if (s == 0.0) return 0.0;  // nilpotent
        bound = std::exp((log_scale + std::log(s)) * inv_pow);
        if (k == 64) break;
        double inv_s = 1.0 / s;
        for (int i = 0; i < t; ++i)
            for (int j = 0; j < t; ++j) {
                double acc = 0;
                for (int l = 0; l < t; ++l)
                    acc += a[static_cast<std::size_t>(i * t + l)] *
                           a[static_cast<std::size_t>(l * t + j)] * inv_s * inv_s;
                sq[static_cast<std::size_t>(i * t + j)] = acc;
            }
        a.swap(sq);
        log_scale = 2.0 * (log_scale + std::log(s));
        inv_pow *= 0.5;
    }
    return bound;
}

}  // namespace subdiv
