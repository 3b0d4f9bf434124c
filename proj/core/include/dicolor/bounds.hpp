#pragma once

#include "dicolor/digraph.hpp"

namespace dicolor {

/// Upper bounds on the minimum number of acyclic classes needed to
/// partition the vertices. Each bound carries an applicability flag; the
/// degree bound (min of the two one-sided maxima, plus one) applies to
/// every digraph. The geometric-mean bounds require a digon-free digraph;
/// disconnected inputs are covered component-wise, whose maximum equals the
/// global value, so connectivity is reported but does not gate the flag.
struct BoundReport {
    int n = 0;
    int m = 0;

    bool digon_free = false;
    bool connected = false;
    long long max_degree_product = 0;
    int degree_geo_ceil = 0;

    /// min{max out-degree, max in-degree} + 1; always applicable.
    int degree_bound = 0;

    /// ceil of the degree geometric mean; needs digon-free and a geometric
    /// mean above 1 (tested as max_degree_product > 1). Also a bound on
    /// list colorings.
    int geo_ceiling_bound = 0;
    bool geo_ceiling_applicable = false;

    /// floor((1 - e^-13) * geo mean); needs digon-free and a geometric mean
    /// of at least threshold_delta1.
    long long shaved_bound = 0;
    bool shaved_applicable = false;

    /// floor(alpha * (geo mean + 1)) with
    /// alpha = max{delta1 / (delta1 + 1), 1 - e^-13}; needs digon-free and
    /// geometric mean above 1.
    long long alpha_bound = 0;
    bool alpha_applicable = false;

    double threshold_delta1 = 0.0;
    double alpha = 0.0;
};

/// delta1 is the smallest degree geometric mean at which the shaved bound
/// is taken to hold; defaults to 1e10.
BoundReport bound_report(const Digraph& d, double delta1 = 1e10);

} // namespace dicolor
