#pragma once

#include <cstdint>
#include <functional>

#include "topodyn/system.hpp"

namespace topodyn {
namespace spaces {

inline IntMat2 cat_matrix() { return {2, 1, 1, 1}; }

// --- torus automorphism -----------------------------------------------------

Vec2 torus_apply(const IntMat2& a, const Vec2& x, Direction dir);

class TorusAutomorphism final : public System {
public:
    TorusAutomorphism(std::string name, const IntMat2& a);

    PointKind point_kind() const override { return PointKind::Torus2; }
    Point apply(const Point& p, Direction dir) const override;
    double dist(const Point& a, const Point& b) const override;
    double diameter() const override { return std::sqrt(2.0) / 2.0; }
    SampleCloud local_cloud(const Point& center, double radius, double step) const override;
    Point perturb(const Point& p, double delta, Rng& rng) const override;
    const IntMat2* torus_matrix() const override { return &matrix_; }

    const IntMat2& matrix() const { return matrix_; }
    const IntMat2& matrix_inverse() const { return inverse_; }

private:
    IntMat2 matrix_;
    IntMat2 inverse_;
};

// --- antipodal quotient of the torus ----------------------------------------

Vec2 sphere_canonical(const Vec2& v);

class SphereQuotient final : public System {
public:
    SphereQuotient(std::string name, const IntMat2& a);

    PointKind point_kind() const override { return PointKind::SphereQuotient; }
    Point apply(const Point& p, Direction dir) const override;
    double dist(const Point& a, const Point& b) const override;
    double diameter() const override { return std::sqrt(2.0) / 2.0; }
    SampleCloud local_cloud(const Point& center, double radius, double step) const override;
    Point perturb(const Point& p, double delta, Rng& rng) const override;
    const IntMat2* torus_matrix() const override { return &matrix_; }

    const IntMat2& matrix() const { return matrix_; }

private:
    IntMat2 matrix_;
    IntMat2 inverse_;
};

// --- compactification with a sequence of ideal fixed points -----------------
//
// Base: the torus automorphism g with anchor fixed point p0 = (0,0); ideal
// points p_k (k >= 1) are fixed and accumulate at p0 with d(p0, p_k) = 1/k.

class ExampleSpace final : public System {
public:
    ExampleSpace(std::string name, const IntMat2& a);

    PointKind point_kind() const override { return PointKind::Example1Base; }
    Point apply(const Point& p, Direction dir) const override;
    double dist(const Point& a, const Point& b) const override;
    double diameter() const override { return 1.0 + std::sqrt(2.0) / 2.0; }
    SampleCloud local_cloud(const Point& center, double radius, double step) const override;
    Point perturb(const Point& p, double delta, Rng& rng) const override;
    const IntMat2* torus_matrix() const override { return &matrix_; }

    const IntMat2& matrix() const { return matrix_; }
    static Vec2 anchor() { return {0.0, 0.0}; }

    // Cap on enumerated ideal indices at a given cloud resolution.
    static std::int64_t ideal_cap(double step);

private:
    IntMat2 matrix_;
    IntMat2 inverse_;
};

// --- full shift --------------------------------------------------------------

class FullShift final : public System {
public:
    FullShift(std::string name, int alphabet, int window_halfwidth);

    PointKind point_kind() const override { return PointKind::Shift; }
    Point apply(const Point& p, Direction dir) const override;
    double dist(const Point& a, const Point& b) const override;
    double diameter() const override { return 1.0; }
    SampleCloud local_cloud(const Point& center, double radius, double step) const override;
    Point perturb(const Point& p, double delta, Rng& rng) const override;
    int default_horizon() const override { return 2 * window_halfwidth_; }

    int alphabet() const { return alphabet_; }
    // Word with given symbols on [-w, w] where w = window_halfwidth.
    Point make_point(const std::vector<std::uint8_t>& symbols) const;
    Point random_point(Rng& rng) const;

private:
    int alphabet_;
    int window_halfwidth_;
};

// --- identity on the binary Cantor set --------------------------------------

class CantorIdentity final : public System {
public:
    CantorIdentity(std::string name, int depth);

    PointKind point_kind() const override { return PointKind::Cantor; }
    Point apply(const Point& p, Direction) const override { return p; }
    double dist(const Point& a, const Point& b) const override;
    double diameter() const override { return 1.0; }
    SampleCloud local_cloud(const Point& center, double radius, double step) const override;
    Point perturb(const Point& p, double delta, Rng& rng) const override;

    int depth() const { return depth_; }

private:
    int depth_;
};

// --- exact enumeration of periodic points -----------------------------------
//
// All q in [0,1)^2 with (A^n - I) q integral, i.e. the exact n-periodic points
// of the automorphism. Enumeration runs over a fundamental domain of
// Z^2 / M Z^2 computed from a Hermite form of M = A^n - I.
struct PeriodicLattice {
    IntMat2 m;             // A^n - I
    IntMat2 adj;           // adjugate of m
    std::int64_t det = 0;  // signed determinant of m
    std::int64_t h11 = 0, h21 = 0, h22 = 0;  // M Z^2 = H Z^2, H lower triangular

    std::int64_t count() const { return h11 * h22; }
    Vec2 point_by_index(std::int64_t t) const;
};

PeriodicLattice periodic_lattice(const IntMat2& a, int n);

}  // namespace spaces
}  // namespace topodyn
