#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "topodyn/common.hpp"

namespace topodyn {

enum class PointKind : std::uint8_t {
    Torus2,        // pair of reals in [0,1)
    SphereQuotient,// canonical torus representative under x ~ -x
    Example1Base,  // base component of the compactified example space
    Example1Ideal, // ideal fixed point p_k, k >= 1
    Shift,         // finite symbol window with offset
    Cantor,        // finite binary prefix
};

// Symbol window of a (two-sided) shift point. symbol(i) is stored for
// lo() <= i <= hi(); shifting relabels indices and never regrows the window.
struct ShiftWord {
    std::int64_t offset = 0;            // absolute index of symbols.front()
    std::vector<std::uint8_t> symbols;

    std::int64_t lo() const { return offset; }
    std::int64_t hi() const { return offset + static_cast<std::int64_t>(symbols.size()) - 1; }
    bool contains(std::int64_t i) const { return i >= lo() && i <= hi(); }
    std::uint8_t at(std::int64_t i) const {
        return symbols[static_cast<std::size_t>(i - offset)];
    }
    bool operator==(const ShiftWord& o) const {
        return offset == o.offset && symbols == o.symbols;
    }
};

// Tagged point value. Torus-family kinds use xy; ideal points use ideal_k;
// shift points use word; cantor points use prefix.
struct Point {
    PointKind kind = PointKind::Torus2;
    Vec2 xy;
    std::int64_t ideal_k = 0;
    ShiftWord word;
    std::vector<std::uint8_t> prefix;

    static Point torus(double x, double y) {
        Point p;
        p.kind = PointKind::Torus2;
        p.xy = {mod1(x), mod1(y)};
        return p;
    }

    static Point torus(const Vec2& v) { return torus(v.x, v.y); }

    // Canonical representative: lexicographically smaller of {v, -v mod 1}.
    static Point sphere(const Vec2& v) {
        Vec2 a = mod1(v);
        Vec2 b = mod1(-a);
        bool keep_a = (a.x < b.x) || (a.x == b.x && a.y <= b.y);
        Point p;
        p.kind = PointKind::SphereQuotient;
        p.xy = keep_a ? a : b;
        return p;
    }

    static Point example1_base(const Vec2& v) {
        Point p;
        p.kind = PointKind::Example1Base;
        p.xy = mod1(v);
        return p;
    }

    static Point example1_ideal(std::int64_t k) {
        require(k >= 1, "ideal point index must be >= 1");
        Point p;
        p.kind = PointKind::Example1Ideal;
        p.ideal_k = k;
        return p;
    }

    static Point shift(ShiftWord w) {
        Point p;
        p.kind = PointKind::Shift;
        p.word = std::move(w);
        return p;
    }

    static Point cantor(std::vector<std::uint8_t> bits) {
        Point p;
        p.kind = PointKind::Cantor;
        p.prefix = std::move(bits);
        return p;
    }

    bool is_torus_family() const {
        return kind == PointKind::Torus2 || kind == PointKind::SphereQuotient ||
               kind == PointKind::Example1Base;
    }

    std::string describe() const;
};

}  // namespace topodyn
