#pragma once

#include <functional>

#include "fraclab/fock.hpp"
#include "fraclab/geometry.hpp"

namespace fraclab::selfsim {

using fock::Complex;
using fock::QDeformation;

// ln(pieces) / ln(scale) for a self-similar set made of `pieces` copies,
// each shrunk by 1/scale. pieces >= 2, scale > 1.
double similarity_dimension(int pieces, double scale);

struct SimilaritySpec {
    int pieces;
    double scale;
    double dimension;
};
SimilaritySpec make_similarity_spec(int pieces, double scale);

// Koch curve after `depth` substitutions of the unit segment (0,0)-(1,0).
// Exactly 4^depth segments (4^depth + 1 points). Each segment is produced
// by its own affine image of the generator, so no rotation error
// accumulates across levels. depth in [0, 12].
Polyline koch_iterate(int depth);

// Segment census of a polyline: count, length extremes, total length.
struct SegmentCensus {
    long long segments = 0;
    double min_length = 0.0;
    double max_length = 0.0;
    double total_length = 0.0;
};
SegmentCensus segment_census(const Polyline& curve);

// Basis component u_n = (q alpha)^n, divided by sqrt(n!) when normalized.
// These are the values the magnifying lens reads off a coherent state.
Complex u_n(const QDeformation& q, Complex alpha, int n, bool normalized = false);

// Jackson q-derivative (f(q z) - f(z)) / ((q - 1) z). Reduces to the
// ordinary derivative as q -> 1, but q = 1 and z = 0 themselves are
// singular inputs and throw.
Complex q_derivative(const std::function<Complex(Complex)>& f,
                     const QDeformation& q, Complex z);

}  // namespace fraclab::selfsim
