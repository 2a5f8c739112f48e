#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "topodyn/common.hpp"
#include "topodyn/intmat.hpp"
#include "topodyn/point.hpp"

namespace topodyn {

// Implicit uniform grid around a torus-family center; streamed by the scan
// kernels instead of being materialized.
struct GridSpec {
    Vec2 center;
    double radius = 0.0;
    double step = 0.0;

    std::int64_t half_extent() const {
        return static_cast<std::int64_t>(std::ceil(radius / step));
    }
    std::int64_t point_count() const {
        std::int64_t w = 2 * half_extent() + 1;
        return w * w;
    }
};

// A finite sample cloud: explicit points plus an optional implicit grid.
struct SampleCloud {
    std::vector<Point> points;
    std::optional<GridSpec> grid;

    std::int64_t size() const {
        return static_cast<std::int64_t>(points.size()) +
               (grid ? grid->point_count() : 0);
    }
    bool empty() const { return size() == 0; }
};

// A compact metric space together with an invertible map acting on it.
// All operations are pure; instances are immutable after construction.
class System {
public:
    virtual ~System() = default;

    const std::string& name() const { return name_; }
    virtual PointKind point_kind() const = 0;

    virtual Point apply(const Point& p, Direction dir) const = 0;
    virtual double dist(const Point& a, const Point& b) const = 0;
    virtual double diameter() const = 0;

    // Local sample cloud covering the radius-ball around center at the given
    // resolution. Used by the ball estimators' refinement levels.
    virtual SampleCloud local_cloud(const Point& center, double radius,
                                    double step) const = 0;

    // Space-appropriate perturbation of magnitude < delta (deterministic
    // given the generator state).
    virtual Point perturb(const Point& p, double delta, Rng& rng) const = 0;

    virtual int default_horizon() const { return 60; }

    // Non-null for systems whose dynamics is a hyperbolic torus automorphism
    // (possibly under a quotient); enables the constructive shadowing path.
    virtual const IntMat2* torus_matrix() const { return nullptr; }

protected:
    explicit System(std::string name) : name_(std::move(name)) {}

private:
    std::string name_;
};

using SystemHandle = std::shared_ptr<const System>;

struct SystemParams {
    std::optional<IntMat2> matrix;  // torus-family override
    int alphabet = 2;               // shift alphabet size
    int shift_window = 32;          // initial shift window half-width
};

// Known ids: "cat", "sphere", "example1", "shift2", "cantor-id".
SystemHandle make_system(const std::string& id, const SystemParams& params = {});

Point iterate(const System& sys, Point p, std::int64_t k);

}  // namespace topodyn
