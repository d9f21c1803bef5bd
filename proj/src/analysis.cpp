#include "subdiv/analysis.hpp"

#include <algorithm>
#include <cmath>

#include "subdiv/catalog.hpp"

namespace subdiv {

SmoothingFactorization smoothing_factorization(const SubdivisionScheme& s) {
    LaurentPolynomial sigma = smoothing_factor(s.mask.arity());
    SmoothingFactorization out;
    out.remainder = s.mask.symbol();
    while (true) {
        auto quotient = try_divide(out.remainder, sigma);
        if (!quotient) break;
        out.remainder = std::move(*quotient);
        ++out.order;
    }
    return out;
}

std::vector<SmallMatrix> transfer_matrices(const LaurentPolynomial& remainder, int arity) {
    if (remainder.is_zero()) throw NotAnalyzable("transfer_matrices: zero remainder");
    LaurentPolynomial nu = remainder.normalized();
    const auto& e = nu.coefficients();
    const int t = nu.degree_span();
    if (t < 1)
        throw NotAnalyzable("transfer_matrices: constant remainder has no matrices");
    auto e_at = [&](int k) {
        return (k < 0 || k > t) ? Rational(0) : e[static_cast<std::size_t>(k)];
    };
    std::vector<SmallMatrix> out;
    out.reserve(static_cast<std::size_t>(t + 1));
    for (int q = 0; q <= t; ++q) {
        SmallMatrix m(t);
        for (int i = 1; i <= t; ++i)
            for (int j = 1; j <= t; ++j) m.at(i, j) = e_at(t + i - arity * j + q);
        out.push_back(std::move(m));
    }
    return out;
}

namespace {

SmallMatrix multiply(const SmallMatrix& a, const SmallMatrix& b) {
    const int t = a.size();
    SmallMatrix out(t);
    for (int i = 1; i <= t; ++i)
        for (int j = 1; j <= t; ++j) {
            Rational acc(0);
            for (int k = 1; k <= t; ++k) acc += a.at(i, k) * b.at(k, j);
            out.at(i, j) = std::move(acc);
        }
    return out;
}

// Tightened bounds over all length-L products of the matrices.
std::pair<double, double> product_bounds(const std::vector<SmallMatrix>& mats, int depth) {
    double count = 1;
    for (int l = 0; l < depth; ++l) count *= static_cast<double>(mats.size());
    if (count > 300000.0)
        throw std::invalid_argument("holder_regularity: depth explodes the product count");
    double rho_max = 0, two_max = 0;
    std::vector<std::size_t> index(static_cast<std::size_t>(depth), 0);
    for (;;) {
        SmallMatrix prod = mats[index[0]];
        for (int l = 1; l < depth; ++l) prod = multiply(prod, mats[index[static_cast<std::size_t>(l)]]);
        rho_max = std::max(rho_max, std::pow(spectral_radius(prod), 1.0 / depth));
        two_max = std::max(two_max, std::pow(two_norm(prod), 1.0 / depth));
        int l = depth - 1;
        while (l >= 0 && ++index[static_cast<std::size_t>(l)] == mats.size()) {
            index[static_cast<std::size_t>(l)] = 0;
            --l;
        }
        if (l < 0) break;
    }
    return {rho_max, two_max};
}

}  // namespace

RegularityReport holder_regularity(const SubdivisionScheme& s, int depth) {
    if (depth < 1) throw std::invalid_argument("holder_regularity: depth must be >= 1");
    RegularityReport rep;
    rep.scheme_name = s.name;
    rep.arity = s.mask.arity();
    auto fact = smoothing_factorization(s);
    rep.smoothing_order = fact.order;
    rep.remainder = fact.remainder;
    rep.remainder_coeffs = fact.remainder.normalized().coefficients();

    const int t = fact.remainder.degree_span();
    if (t == 0) {
        Rational e0 = abs(rep.remainder_coeffs.front());
        rep.spectral_radii = {e0.to_double()};
        rep.infinity_norms = {e0};
        rep.two_norms = {e0.to_double()};
        rep.xi_infinity_exact = e0;
        rep.xi_lower = rep.xi_upper = rep.xi_mid = e0.to_double();
    } else {
        rep.matrices = transfer_matrices(fact.remainder, rep.arity);
        Rational inf_max(0);
        for (const SmallMatrix& m : rep.matrices) {
            rep.spectral_radii.push_back(spectral_radius(m));
            rep.two_norms.push_back(two_norm(m));
            Rational inf = infinity_norm(m);
            if (inf > inf_max) inf_max = inf;
            rep.infinity_norms.push_back(std::move(inf));
        }
        auto [rho_max, two_max] = depth == 1
            ? std::pair<double, double>{*std::max_element(rep.spectral_radii.begin(),
                                                          rep.spectral_radii.end()),
                                        *std::max_element(rep.two_norms.begin(),
                                                          rep.two_norms.end())}
            : product_bounds(rep.matrices, depth);
        rep.xi_lower = rho_max;
        rep.xi_upper = two_max;
        rep.xi_infinity_exact = inf_max;
        if (rep.xi_lower > rep.xi_upper) rep.xi_lower = rep.xi_upper;  // guard fp dust
        rep.xi_mid = (rep.xi_lower + rep.xi_upper) / 2.0;
    }
    if (rep.xi_mid <= 0) throw NotAnalyzable("holder_regularity: degenerate remainder");

    const double log_s = std::log(static_cast<double>(rep.arity));
    rep.r_lower = rep.smoothing_order - std::log(rep.xi_upper) / log_s;
    rep.r_mid = rep.smoothing_order - std::log(rep.xi_mid) / log_s;
    rep.r_upper = rep.smoothing_order - std::log(rep.xi_lower) / log_s;

    if (depth == 1) {
        if (auto pub = published_regularity(s.name)) {
            rep.published = *pub;
            rep.published_delta = rep.r_mid - *pub;
            rep.disagrees_with_published = std::abs(*rep.published_delta) > 1e-6;
        }
    }
    return rep;
}

int degree_of_generation(const SubdivisionScheme& s) {
    return smoothing_factorization(s).order - 1;
}

namespace {

// Refine the sequence data[j], j in [j0, j0 + len), one step; returns the
// first fully supported refined index and the refined values.
std::pair<int, std::vector<Rational>> refine_window(const Mask& mask,
                                                    const std::vector<Rational>& data, int j0) {
    const int r = mask.arity();
    const int j1 = j0 + static_cast<int>(data.size()) - 1;
    auto floor_div = [](int a, int b) {
        int q = a / b, rem = a % b;
        return (rem != 0 && ((rem < 0) != (b < 0))) ? q - 1 : q;
    };
    // fully supported: ceil((i-last)/r) >= j0 and floor((i-first)/r) <= j1
    int i_lo = r * j0 + mask.last_index() - r + 1;
    int i_hi = r * j1 + mask.first_index() + r - 1;
    std::vector<Rational> out;
    out.reserve(static_cast<std::size_t>(i_hi - i_lo + 1));
    for (int i = i_lo; i <= i_hi; ++i) {
        Rational acc(0);
        int lo = -floor_div(-(i - mask.last_index()), r);
        int hi = floor_div(i - mask.first_index(), r);
        for (int j = lo; j <= hi; ++j)
            acc += mask.at(i - r * j) * data[static_cast<std::size_t>(j - j0)];
        out.push_back(std::move(acc));
    }
    return {i_lo, out};
}

}  // namespace

PrecisionReport degree_of_precision(const SubdivisionScheme& s, int max_degree) {
    if (max_degree < 0) throw std::invalid_argument("degree_of_precision: max_degree < 0");
    if (!check_convergence_condition(s).satisfied)
        throw NotConvergent("degree_of_precision: scheme '" + s.name +
                            "' fails the convergence condition");
    PrecisionReport rep;
    rep.degree_of_generation = degree_of_generation(s);
    rep.degree_of_precision = 0;  // constants reproduce once the coset sums are 1

    const Mask& mask = s.mask;
    const int r = mask.arity();
    auto sample = [&](int degree) {
        int h = 2 * mask.width() + degree + 2;
        std::vector<Rational> data;
        data.reserve(static_cast<std::size_t>(2 * h + 1));
        for (int j = -h; j <= h; ++j) data.push_back(pow(Rational(j), degree));
        return refine_window(mask, data, -h);
    };

    // Linear data must refine to an affine sequence with slope 1/r; tau is
    // the constant offset of the refined parametrization.
    auto [i0, lin] = sample(1);
    const Rational slope(1, r);
    for (std::size_t k = 0; k + 1 < lin.size(); ++k)
        if (lin[k + 1] - lin[k] != slope) return rep;  // DoP 0, no tau
    Rational tau = Rational(r) * lin.front() - Rational(i0);
    rep.parameter_shift = tau;

    int d = 1;
    while (d + 1 <= max_degree) {
        auto [ibase, vals] = sample(d + 1);
        bool ok = true;
        for (std::size_t k = 0; k < vals.size() && ok; ++k) {
            Rational target = pow((Rational(ibase + static_cast<int>(k)) + tau) / Rational(r),
                                  d + 1);
            ok = vals[k] == target;
        }
        if (!ok) break;
        ++d;
    }
    rep.degree_of_precision = d;
    return rep;
}

RegularityPair regularity_pair_report(const SubdivisionScheme& binary) {
    ConversionResult conv = convert(binary);
    RegularityPair pair{holder_regularity(binary), holder_regularity(conv.quaternary), 0};
    // The converted scheme inherits the published value of its catalog twin
    // when the input is a catalog binary.
    if (auto pub = published_regularity_quaternary(binary.name)) {
        pair.quaternary.published = *pub;
        pair.quaternary.published_delta = pair.quaternary.r_mid - *pub;
        pair.quaternary.disagrees_with_published =
            std::abs(*pair.quaternary.published_delta) > 1e-6;
    }
    pair.r_mid_delta = pair.binary.r_mid - pair.quaternary.r_mid;
    return pair;
}

}  // namespace subdiv
