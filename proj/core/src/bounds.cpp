#include "dicolor/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace dicolor {

BoundReport bound_report(const Digraph& d, double delta1) {
    if (!(delta1 >= 1.0)) throw std::invalid_argument("delta1 must be at least 1");

    BoundReport r;
    r.n = d.vertex_count();
    r.m = d.arc_count();
    r.threshold_delta1 = delta1;
    r.alpha = std::max(delta1 / (delta1 + 1.0), 1.0 - std::exp(-13.0));

    DegreeProfile p = degree_profile(d);
    r.max_degree_product = p.max_degree_product;
    r.degree_geo_ceil = p.degree_geo_ceil;
    r.digon_free = find_digons(d).empty();
    r.connected = is_weakly_connected(d);

    r.degree_bound = std::min(p.max_out_degree, p.max_in_degree) + 1;

    double geo = p.degree_geo_max;
    r.geo_ceiling_bound = p.degree_geo_ceil;
    r.geo_ceiling_applicable = r.digon_free && p.max_degree_product > 1;

    r.shaved_bound = static_cast<long long>(std::floor((1.0 - std::exp(-13.0)) * geo));
    r.shaved_applicable = r.digon_free && geo >= delta1;

    r.alpha_bound = static_cast<long long>(std::floor(r.alpha * (geo + 1.0)));
    r.alpha_applicable = r.digon_free && p.max_degree_product > 1;

    return r;
}

} // namespace dicolor
