#include "subdiv/polygon.hpp"

namespace subdiv {

namespace {

int floor_div(int a, int b) {
    int q = a / b, r = a % b;
    return (r != 0 && ((r < 0) != (b < 0))) ? q - 1 : q;
}

int ceil_div(int a, int b) { return -floor_div(-a, b); }

std::size_t wrap(int j, std::size_t n) {
    int m = j % static_cast<int>(n);
    if (m < 0) m += static_cast<int>(n);
    return static_cast<std::size_t>(m);
}

// Absolute refined-index range [i_lo, i_hi] whose stencils lie fully inside
// an open polygon of n points: ceil((i-last)/r) >= 0 and
// floor((i-first)/r) <= n-1.
std::pair<int, int> open_refined_range(int n, const Mask& mask) {
    const int r = mask.arity();
    return {mask.last_index() - r + 1, mask.first_index() + r * n - 1};
}

std::vector<Rational> weighted_point(const Polygon& p, const Mask& mask, int i, bool closed) {
    const int r = mask.arity();
    std::vector<Rational> acc(p.dimension(), Rational(0));
    int j_lo = ceil_div(i - mask.last_index(), r);
    int j_hi = floor_div(i - mask.first_index(), r);
    for (int j = j_lo; j <= j_hi; ++j) {
        Rational w = mask.at(i - r * j);
        if (w.is_zero()) continue;
        const auto& src = closed ? p.point(wrap(j, p.size())) : p.point(static_cast<std::size_t>(j));
        for (std::size_t d = 0; d < acc.size(); ++d) acc[d] += w * src[d];
    }
    return acc;
}

// Balanced phase label for residue rho in [0, r).
int balanced_phase(int rho, int r) { return rho < r - r / 2 ? rho : rho - r; }

}  // namespace

Polygon::Polygon(Topology topology, std::vector<std::vector<Rational>> points)
    : topology_(topology), dim_(0), points_(std::move(points)) {
    std::size_t min_points = topology_ == Topology::closed ? 3 : 2;
    if (points_.size() < min_points)
        throw std::invalid_argument("Polygon: needs at least " + std::to_string(min_points) +
                                    " points");
    dim_ = points_.front().size();
    if (dim_ < 1) throw std::invalid_argument("Polygon: dimension must be >= 1");
    for (const auto& p : points_)
        if (p.size() != dim_)
            throw std::invalid_argument("Polygon: inconsistent point dimensions");
}

Polygon refine_once(const Polygon& p, const SubdivisionScheme& s) {
    const Mask& mask = s.mask;
    const int r = mask.arity();
    const int n = static_cast<int>(p.size());
    std::vector<std::vector<Rational>> out;

    if (p.topology() == Topology::closed) {
        out.reserve(static_cast<std::size_t>(r * n));
        for (int i = 0; i < r * n; ++i) out.push_back(weighted_point(p, mask, i, true));
        return Polygon(Topology::closed, std::move(out));
    }

    auto [i_lo, i_hi] = open_refined_range(n, mask);
    if (i_hi - i_lo + 1 < 2)
        throw TooFewPoints("refine_once: open polygon narrower than the stencil support");
    out.reserve(static_cast<std::size_t>(i_hi - i_lo + 1));
    for (int i = i_lo; i <= i_hi; ++i) out.push_back(weighted_point(p, mask, i, false));
    return Polygon(Topology::open, std::move(out));
}

RefinementTrace refine(const Polygon& p, const SubdivisionScheme& s, int steps) {
    if (steps < 0) throw std::invalid_argument("refine: steps must be >= 0");
    RefinementTrace trace{{p}, s};
    for (int k = 0; k < steps; ++k) trace.levels.push_back(refine_once(trace.levels.back(), s));
    return trace;
}

Rational displacement_bound(const RefinementTrace& trace) {
    if (trace.levels.size() < 2)
        throw std::invalid_argument("displacement_bound: trace needs >= 2 levels");
    const Mask& mask = trace.scheme.mask;
    const int r = mask.arity();

    // Anchor per phase: the source offset nearest the stencil's index center
    // of mass (halves round up).
    std::vector<int> anchor(static_cast<std::size_t>(r), 0);
    for (const Stencil& st : stencils(trace.scheme)) {
        Rational com(0);
        for (std::size_t k = 0; k < st.weights.size(); ++k)
            com += st.weights[k] * Rational(st.offsets[k]);
        Rational total = st.weight_sum();
        if (!total.is_zero()) com /= total;
        anchor[static_cast<std::size_t>(((st.phase % r) + r) % r)] =
            static_cast<int>(round_nearest(com).get_si());
    }

    Rational best(0);
    for (std::size_t lv = 0; lv + 1 < trace.levels.size(); ++lv) {
        const Polygon& coarse = trace.levels[lv];
        const Polygon& fine = trace.levels[lv + 1];
        const int n = static_cast<int>(coarse.size());
        const bool closed = coarse.topology() == Topology::closed;
        int base = 0;
        if (!closed) base = open_refined_range(n, mask).first;
        for (std::size_t pos = 0; pos < fine.size(); ++pos) {
            int i = base + static_cast<int>(pos);
            int rho = ((i % r) + r) % r;
            int eta = balanced_phase(rho, r);
            int phi = (i - eta) / r;
            int src = phi + anchor[static_cast<std::size_t>(rho)];
            std::size_t j = closed ? wrap(src, coarse.size())
                                   : static_cast<std::size_t>(std::min(std::max(src, 0), n - 1));
            const auto& a = fine.point(pos);
            const auto& b = coarse.point(j);
            for (std::size_t d = 0; d < a.size(); ++d) {
                Rational gap = abs(a[d] - b[d]);
                if (gap > best) best = gap;
            }
        }
    }
    return best;
}

}  // namespace subdiv
