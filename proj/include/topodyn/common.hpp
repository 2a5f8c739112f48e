#pragma once

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace topodyn {

// Tolerance for metric identities, inverse round-trips and orbit checks.
inline constexpr double kFloatTol = 1e-9;

struct Vec2 {
    double x = 0.0;
    double y = 0.0;

    Vec2() = default;
    Vec2(double x_, double y_) : x(x_), y(y_) {}

    Vec2 operator+(const Vec2& o) const { return {x + o.x, y + o.y}; }
    Vec2 operator-(const Vec2& o) const { return {x - o.x, y - o.y}; }
    Vec2 operator*(double s) const { return {x * s, y * s}; }
    Vec2 operator-() const { return {-x, -y}; }

    double dot(const Vec2& o) const { return x * o.x + y * o.y; }
    double norm() const { return std::hypot(x, y); }
};

inline Vec2 operator*(double s, const Vec2& v) { return v * s; }

// Reduce a real number into [0, 1).
inline double mod1(double t) {
    double u = t - std::floor(t);
    return (u >= 1.0) ? u - 1.0 : u;
}

inline Vec2 mod1(const Vec2& v) { return {mod1(v.x), mod1(v.y)}; }

// Representative of t mod 1 in [-1/2, 1/2).
inline double min_image(double t) {
    double u = t - std::floor(t + 0.5);
    if (u >= 0.5) u -= 1.0;
    if (u < -0.5) u += 1.0;
    return u;
}

inline Vec2 min_image(const Vec2& v) { return {min_image(v.x), min_image(v.y)}; }

// Flat torus metric: Euclidean distance minimized over integer translates.
inline double torus_dist(const Vec2& a, const Vec2& b) {
    return min_image(a - b).norm();
}

enum class Direction { Forward, Backward };

inline Direction reverse(Direction d) {
    return d == Direction::Forward ? Direction::Backward : Direction::Forward;
}

// Deterministic 64-bit generator (splitmix64). The standard distributions are
// implementation-defined, so all sampling goes through this to keep reports
// byte-reproducible across toolchains.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next_u64() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Uniform in [0, 1).
    double next_double() {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

    // Uniform in [0, n).
    std::uint64_t next_below(std::uint64_t n) { return next_u64() % n; }

private:
    std::uint64_t state_;
};

struct precondition_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

inline void require(bool cond, const std::string& msg) {
    if (!cond) throw precondition_error(msg);
}

}  // namespace topodyn
