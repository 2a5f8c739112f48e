#include "topodyn/orbits.hpp"

#include <algorithm>

namespace topodyn {

OrbitSegment orbit_segment(const System& sys, const Point& start, Window window) {
    require(window.b >= window.a, "orbit window must be nonempty");
    OrbitSegment seg;
    seg.window = window;
    seg.points.reserve(static_cast<std::size_t>(window.length()));
    Point p = iterate(sys, start, window.a);
    seg.points.push_back(p);
    for (std::int64_t k = window.a; k < window.b; ++k) {
        p = sys.apply(p, Direction::Forward);
        seg.points.push_back(p);
    }
    return seg;
}

PseudoOrbit perturbed_pseudo_orbit(const System& sys, const Point& x0, double delta,
                                   std::int64_t length, std::uint64_t seed) {
    require(delta > 0.0, "pseudo-orbit jump bound must be positive");
    require(length >= 1, "pseudo-orbit needs at least one step");
    PseudoOrbit po;
    po.window = {0, length};
    po.delta = delta;
    po.points.reserve(static_cast<std::size_t>(length) + 1);
    Rng rng(seed);
    Point p = x0;
    po.points.push_back(p);
    for (std::int64_t k = 0; k < length; ++k) {
        p = sys.perturb(sys.apply(p, Direction::Forward), delta, rng);
        po.points.push_back(p);
    }
    return po;
}

VerifyResult verify_pseudo_orbit(const System& sys, const PseudoOrbit& po) {
    VerifyResult r;
    r.ok = true;
    r.worst_index = po.window.a;
    for (std::int64_t k = po.window.a; k < po.window.b; ++k) {
        double jump = sys.dist(sys.apply(po.at(k), Direction::Forward), po.at(k + 1));
        if (jump > r.max_jump) {
            r.max_jump = jump;
            r.worst_index = k;
        }
    }
    r.ok = r.max_jump < po.delta;
    return r;
}

PseudoOrbit concatenate_segments(const System& sys,
                                 const std::vector<PseudoOrbit>& segments,
                                 double delta) {
    require(!segments.empty(), "nothing to concatenate");
    require(delta > 0.0, "jump bound must be positive");
    PseudoOrbit out;
    out.delta = delta;
    std::int64_t total = 0;
    for (const auto& s : segments) total += s.window.length();
    out.window = {0, total - 1};
    out.points.reserve(static_cast<std::size_t>(total));
    for (std::size_t i = 0; i < segments.size(); ++i) {
        if (i > 0) {
            const Point& prev_last = segments[i - 1].points.back();
            const Point& next_first = segments[i].points.front();
            double seam = sys.dist(sys.apply(prev_last, Direction::Forward), next_first);
            if (seam >= delta)
                throw seam_error(i - 1, "seam " + std::to_string(i - 1) +
                                            " jump " + std::to_string(seam) +
                                            " exceeds delta");
        }
        out.points.insert(out.points.end(), segments[i].points.begin(),
                          segments[i].points.end());
    }
    return out;
}

}  // namespace topodyn
