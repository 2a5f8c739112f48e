#pragma once

#include <cstdint>
#include <vector>

#include "topodyn/system.hpp"

namespace topodyn {

// Integer index window [a, b], inclusive.
struct Window {
    std::int64_t a = 0;
    std::int64_t b = 0;
    std::int64_t length() const { return b - a + 1; }
    bool contains(std::int64_t k) const { return k >= a && k <= b; }
};

// A genuine orbit sampled over a window: points[i] = f^{a+i}(start).
struct OrbitSegment {
    Window window;
    std::vector<Point> points;

    const Point& at(std::int64_t k) const {
        return points[static_cast<std::size_t>(k - window.a)];
    }
};

// Finite sequence with per-step jump bound delta:
// d(f(points[k]), points[k+1]) < delta for every k in [a, b-1].
struct PseudoOrbit {
    Window window;
    double delta = 0.0;
    std::vector<Point> points;

    const Point& at(std::int64_t k) const {
        return points[static_cast<std::size_t>(k - window.a)];
    }
    Point& at(std::int64_t k) {
        return points[static_cast<std::size_t>(k - window.a)];
    }
};

struct VerifyResult {
    bool ok = false;
    double max_jump = 0.0;
    std::int64_t worst_index = 0;  // index k of the largest jump f(x_k) -> x_{k+1}
};

struct seam_error : std::runtime_error {
    explicit seam_error(std::size_t seam, const std::string& msg)
        : std::runtime_error(msg), seam_index(seam) {}
    std::size_t seam_index;
};

OrbitSegment orbit_segment(const System& sys, const Point& start, Window window);

// x_{k+1} = f(x_k) + noise of magnitude < delta; window [0, length].
PseudoOrbit perturbed_pseudo_orbit(const System& sys, const Point& x0, double delta,
                                   std::int64_t length, std::uint64_t seed);

VerifyResult verify_pseudo_orbit(const System& sys, const PseudoOrbit& po);

// Joins segments end to end; requires every seam jump d(f(last), first) < delta.
// Throws seam_error naming the first violated seam otherwise.
PseudoOrbit concatenate_segments(const System& sys,
                                 const std::vector<PseudoOrbit>& segments,
                                 double delta);

}  // namespace topodyn
