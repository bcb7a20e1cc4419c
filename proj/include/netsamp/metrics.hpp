#pragma once

#include <span>

namespace netsamp {

// Symmetric KL divergence D(P||Q) + D(Q||P), natural log, between two
// probability vectors over the same node indexing. When either vector has a
// zero entry, both are smoothed by adding epsilon to every entry and
// renormalizing; with epsilon == 0 a zero entry raises
// DivergenceUndefinedError.
double kl_symmetric(std::span<const double> p, std::span<const double> q,
                    double epsilon = 1e-9);

// Euclidean norm of P - Q.
double l2_distance(std::span<const double> p, std::span<const double> q);

// Total variation distance, 0.5 * sum |P - Q|.
double tv_distance(std::span<const double> p, std::span<const double> q);

// |estimate - truth| / |truth|; truth must be nonzero.
double relative_error(double estimate, double truth);

} // namespace netsamp
