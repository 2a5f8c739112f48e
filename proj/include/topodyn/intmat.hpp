#pragma once

#include <array>
#include <cstdint>
#include <cstdlib>

#include "topodyn/common.hpp"

namespace topodyn {

// Integer 2x2 matrix with exact arithmetic. Unimodular inverses and powers are
// computed over the integers so torus automorphisms stay exact.
struct IntMat2 {
    std::int64_t a = 1, b = 0, c = 0, d = 1;  // [[a, b], [c, d]]

    static IntMat2 identity() { return {1, 0, 0, 1}; }

    std::int64_t det() const { return a * d - b * c; }
    std::int64_t trace() const { return a + d; }

    Vec2 apply(const Vec2& v) const {
        return {static_cast<double>(a) * v.x + static_cast<double>(b) * v.y,
                static_cast<double>(c) * v.x + static_cast<double>(d) * v.y};
    }

    std::array<std::int64_t, 2> apply_int(std::int64_t x, std::int64_t y) const {
        return {a * x + b * y, c * x + d * y};
    }

    IntMat2 mul(const IntMat2& o) const {
        return {a * o.a + b * o.c, a * o.b + b * o.d,
                c * o.a + d * o.c, c * o.b + d * o.d};
    }

    // adj(M), so that M * adj(M) = det(M) * I.
    IntMat2 adjugate() const { return {d, -b, -c, a}; }

    // Exact inverse for det = +-1.
    IntMat2 inverse_unimodular() const {
        std::int64_t dt = det();
        require(dt == 1 || dt == -1, "matrix is not unimodular");
        IntMat2 adj = adjugate();
        if (dt == -1) adj = {-adj.a, -adj.b, -adj.c, -adj.d};
        return adj;
    }

    IntMat2 pow(int n) const {
        require(n >= 0, "pow expects n >= 0");
        IntMat2 r = identity();
        for (int i = 0; i < n; ++i) r = r.mul(*this);
        return r;
    }

    IntMat2 minus_identity() const { return {a - 1, b, c, d - 1}; }
    IntMat2 plus_identity() const { return {a + 1, b, c, d + 1}; }

    bool operator==(const IntMat2& o) const {
        return a == o.a && b == o.b && c == o.c && d == o.d;
    }
};

inline bool is_hyperbolic_unimodular(const IntMat2& m) {
    std::int64_t dt = m.det();
    return (dt == 1 || dt == -1) && std::llabs(m.trace()) > 2;
}

// Eigen-splitting of a hyperbolic unimodular matrix. Real eigenvalues
// lambda_u (|.|>1) and lambda_s (|.|<1) with unit eigenvectors; any vector
// decomposes as alpha*eu + beta*es.
struct HyperbolicSplitting {
    double lambda_u = 0.0;
    double lambda_s = 0.0;
    Vec2 eu;
    Vec2 es;

    struct Coords {
        double u = 0.0;
        double s = 0.0;
    };

    Coords decompose(const Vec2& v) const {
        // Solve [eu es] [u s]^T = v.
        double det = eu.x * es.y - eu.y * es.x;
        return {(v.x * es.y - v.y * es.x) / det,
                (eu.x * v.y - eu.y * v.x) / det};
    }

    Vec2 compose(double u, double s) const { return eu * u + es * s; }
};

inline Vec2 eigenvector_for(const IntMat2& m, double lambda) {
    // Rows of (M - lambda I) are orthogonal to the eigenvector; pick the more
    // robust of the two formulations.
    Vec2 v1{static_cast<double>(m.b), lambda - static_cast<double>(m.a)};
    Vec2 v2{lambda - static_cast<double>(m.d), static_cast<double>(m.c)};
    Vec2 v = (v1.norm() >= v2.norm()) ? v1 : v2;
    return v * (1.0 / v.norm());
}

inline HyperbolicSplitting hyperbolic_splitting(const IntMat2& m) {
    require(is_hyperbolic_unimodular(m), "matrix must be unimodular with |trace| > 2");
    double t = static_cast<double>(m.trace());
    double dt = static_cast<double>(m.det());
    double disc = std::sqrt(t * t - 4.0 * dt);
    double l1 = (t + disc) / 2.0;
    double l2 = (t - disc) / 2.0;
    HyperbolicSplitting sp;
    if (std::abs(l1) > std::abs(l2)) {
        sp.lambda_u = l1;
        sp.lambda_s = l2;
    } else {
        sp.lambda_u = l2;
        sp.lambda_s = l1;
    }
    sp.eu = eigenvector_for(m, sp.lambda_u);
    sp.es = eigenvector_for(m, sp.lambda_s);
    return sp;
}

}  // namespace topodyn
