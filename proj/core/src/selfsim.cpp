#include "fraclab/selfsim.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace fraclab::selfsim {

double similarity_dimension(int pieces, double scale) {
    if (pieces < 2)
        throw std::invalid_argument("similarity_dimension: pieces must be >= 2");
    if (!(scale > 1.0))
        throw std::invalid_argument("similarity_dimension: scale must be > 1");
    return std::log(double(pieces)) / std::log(scale);
}

SimilaritySpec make_similarity_spec(int pieces, double scale) {
    return {pieces, scale, similarity_dimension(pieces, scale)};
}

Polyline koch_iterate(int depth) {
    if (depth < 0 || depth > 12)
        throw std::invalid_argument("koch_iterate: depth must be in [0, 12]");

    Polyline pts{{0.0, 0.0}, {1.0, 0.0}};
    constexpr double kHeight = 0.28867513459481288;  // sqrt(3)/6

    for (int level = 0; level < depth; ++level) {
        Polyline next;
        next.reserve(4 * (pts.size() - 1) + 1);
        next.push_back(pts.front());
        for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
            const Point& p = pts[i];
            const Point& q = pts[i + 1];
            const double dx = q.x - p.x;
            const double dy = q.y - p.y;
            // Replace p->q by the 4-segment generator; the triangular bump
            // points to the left of the travel direction.
            next.push_back({p.x + dx / 3.0, p.y + dy / 3.0});
            next.push_back({p.x + 0.5 * dx - kHeight * dy,
                            p.y + 0.5 * dy + kHeight * dx});
            next.push_back({p.x + 2.0 * dx / 3.0, p.y + 2.0 * dy / 3.0});
            next.push_back(q);
        }
        pts = std::move(next);
    }
    return pts;
}

SegmentCensus segment_census(const Polyline& curve) {
    if (curve.size() < 2)
        throw std::invalid_argument("segment_census: polyline needs >= 2 points");

    SegmentCensus census;
    census.segments = static_cast<long long>(curve.size()) - 1;
    census.min_length = std::numeric_limits<double>::infinity();
    census.max_length = 0.0;

    double sum = 0.0, comp = 0.0;  // Kahan accumulation
    for (std::size_t i = 0; i + 1 < curve.size(); ++i) {
        const double len = std::hypot(curve[i + 1].x - curve[i].x,
                                      curve[i + 1].y - curve[i].y);
        census.min_length = std::min(census.min_length, len);
        census.max_length = std::max(census.max_length, len);
        const double y = len - comp;
        const double t = sum + y;
        comp = (t - sum) - y;
        sum = t;
    }
    census.total_length = sum;
    return census;
}

Complex u_n(const QDeformation& q, Complex alpha, int n, bool normalized) {
    if (n < 0)
        throw std::invalid_argument("u_n: n must be >= 0");
    const Complex base = q.q * alpha;
    Complex val = 1.0;
    for (int k = 1; k <= n; ++k) {
        val *= base;
        if (normalized) val /= std::sqrt(double(k));
    }
    return val;
}

Complex q_derivative(const std::function<Complex(Complex)>& f,
                     const QDeformation& q, Complex z) {
    if (q.q == 1.0)
        throw std::domain_error(
            "q_derivative: q = 1 is singular; take the ordinary derivative limit");
    if (z == Complex(0.0, 0.0))
        throw std::domain_error(
            "q_derivative: z = 0 is singular; evaluate the limit instead");
    return (f(q.q * z) - f(z)) / ((q.q - 1.0) * z);
}

}  // namespace fraclab::selfsim
