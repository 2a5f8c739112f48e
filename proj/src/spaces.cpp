#include "topodyn/spaces.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace topodyn {

std::string Point::describe() const {
    switch (kind) {
        case PointKind::Torus2:
            return "torus(" + std::to_string(xy.x) + "," + std::to_string(xy.y) + ")";
        case PointKind::SphereQuotient:
            return "sphere[" + std::to_string(xy.x) + "," + std::to_string(xy.y) + "]";
        case PointKind::Example1Base:
            return "base(" + std::to_string(xy.x) + "," + std::to_string(xy.y) + ")";
        case PointKind::Example1Ideal:
            return "p_" + std::to_string(ideal_k);
        case PointKind::Shift: {
            std::string s = "shift@" + std::to_string(word.offset) + ":";
            for (auto b : word.symbols) s += static_cast<char>('0' + b);
            return s;
        }
        case PointKind::Cantor: {
            std::string s = "cantor:";
            for (auto b : prefix) s += static_cast<char>('0' + b);
            return s;
        }
    }
    return "?";
}

Point iterate(const System& sys, Point p, std::int64_t k) {
    Direction dir = k >= 0 ? Direction::Forward : Direction::Backward;
    for (std::int64_t i = 0, n = std::llabs(k); i < n; ++i) p = sys.apply(p, dir);
    return p;
}

namespace spaces {

Vec2 torus_apply(const IntMat2& a, const Vec2& x, Direction dir) {
    if (dir == Direction::Forward) return mod1(a.apply(x));
    return mod1(a.inverse_unimodular().apply(x));
}

// --- TorusAutomorphism -------------------------------------------------------

TorusAutomorphism::TorusAutomorphism(std::string name, const IntMat2& a)
    : System(std::move(name)), matrix_(a) {
    require(is_hyperbolic_unimodular(a),
            "torus automorphism needs |det A| = 1 and |trace A| > 2");
    inverse_ = a.inverse_unimodular();
}

Point TorusAutomorphism::apply(const Point& p, Direction dir) const {
    require(p.kind == PointKind::Torus2, "torus system expects torus points");
    const IntMat2& m = dir == Direction::Forward ? matrix_ : inverse_;
    return Point::torus(mod1(m.apply(p.xy)));
}

double TorusAutomorphism::dist(const Point& a, const Point& b) const {
    return torus_dist(a.xy, b.xy);
}

SampleCloud TorusAutomorphism::local_cloud(const Point& center, double radius,
                                           double step) const {
    SampleCloud cloud;
    cloud.grid = GridSpec{center.xy, radius, step};
    return cloud;
}

Point TorusAutomorphism::perturb(const Point& p, double delta, Rng& rng) const {
    double r = delta * 0.999999 * std::sqrt(rng.next_double());
    double th = 2.0 * M_PI * rng.next_double();
    return Point::torus(p.xy + Vec2{r * std::cos(th), r * std::sin(th)});
}

// --- SphereQuotient ----------------------------------------------------------

Vec2 sphere_canonical(const Vec2& v) {
    Vec2 a = mod1(v);
    Vec2 b = mod1(-a);
    bool keep_a = (a.x < b.x) || (a.x == b.x && a.y <= b.y);
    return keep_a ? a : b;
}

SphereQuotient::SphereQuotient(std::string name, const IntMat2& a)
    : System(std::move(name)), matrix_(a) {
    require(is_hyperbolic_unimodular(a),
            "sphere quotient needs |det A| = 1 and |trace A| > 2");
    inverse_ = a.inverse_unimodular();
}

Point SphereQuotient::apply(const Point& p, Direction dir) const {
    require(p.kind == PointKind::SphereQuotient, "sphere system expects sphere points");
    const IntMat2& m = dir == Direction::Forward ? matrix_ : inverse_;
    return Point::sphere(m.apply(p.xy));
}

double SphereQuotient::dist(const Point& a, const Point& b) const {
    return std::min(torus_dist(a.xy, b.xy), torus_dist(a.xy, mod1(-b.xy)));
}

SampleCloud SphereQuotient::local_cloud(const Point& center, double radius,
                                        double step) const {
    SampleCloud cloud;
    cloud.grid = GridSpec{center.xy, radius, step};
    return cloud;
}

Point SphereQuotient::perturb(const Point& p, double delta, Rng& rng) const {
    double r = delta * 0.999999 * std::sqrt(rng.next_double());
    double th = 2.0 * M_PI * rng.next_double();
    return Point::sphere(p.xy + Vec2{r * std::cos(th), r * std::sin(th)});
}

// --- ExampleSpace ------------------------------------------------------------

ExampleSpace::ExampleSpace(std::string name, const IntMat2& a)
    : System(std::move(name)), matrix_(a) {
    require(is_hyperbolic_unimodular(a),
            "example space base needs |det A| = 1 and |trace A| > 2");
    inverse_ = a.inverse_unimodular();
}

Point ExampleSpace::apply(const Point& p, Direction dir) const {
    if (p.kind == PointKind::Example1Ideal) return p;
    require(p.kind == PointKind::Example1Base, "example space expects base or ideal points");
    const IntMat2& m = dir == Direction::Forward ? matrix_ : inverse_;
    return Point::example1_base(mod1(m.apply(p.xy)));
}

double ExampleSpace::dist(const Point& a, const Point& b) const {
    bool ai = a.kind == PointKind::Example1Ideal;
    bool bi = b.kind == PointKind::Example1Ideal;
    if (ai && bi) {
        if (a.ideal_k == b.ideal_k) return 0.0;
        return 1.0 / static_cast<double>(a.ideal_k) + 1.0 / static_cast<double>(b.ideal_k);
    }
    if (ai) return 1.0 / static_cast<double>(a.ideal_k) + torus_dist(b.xy, anchor());
    if (bi) return 1.0 / static_cast<double>(b.ideal_k) + torus_dist(a.xy, anchor());
    return torus_dist(a.xy, b.xy);
}

std::int64_t ExampleSpace::ideal_cap(double step) {
    double raw = std::ceil(1.0 / step);
    return static_cast<std::int64_t>(std::clamp(raw, 100.0, 20000.0));
}

SampleCloud ExampleSpace::local_cloud(const Point& center, double radius,
                                      double step) const {
    SampleCloud cloud;
    std::int64_t cap = ideal_cap(step);
    if (center.kind == PointKind::Example1Base) {
        cloud.grid = GridSpec{center.xy, radius, step};
        double d0c = torus_dist(center.xy, anchor());
        if (radius > d0c) {
            // d(center, p_k) = 1/k + d0(center, p0) <= radius
            auto kmin = static_cast<std::int64_t>(std::ceil(1.0 / (radius - d0c)));
            for (std::int64_t k = std::max<std::int64_t>(1, kmin); k <= cap; ++k)
                cloud.points.push_back(Point::example1_ideal(k));
        }
    } else {
        require(center.kind == PointKind::Example1Ideal, "unexpected center kind");
        double inv_k = 1.0 / static_cast<double>(center.ideal_k);
        if (radius > inv_k) {
            auto mmin = static_cast<std::int64_t>(std::ceil(1.0 / (radius - inv_k)));
            for (std::int64_t m = std::max<std::int64_t>(1, mmin); m <= cap; ++m) {
                if (m != center.ideal_k) cloud.points.push_back(Point::example1_ideal(m));
            }
            // Base points within reach: 1/k + d0(y, p0) <= radius.
            cloud.grid = GridSpec{anchor(), radius - inv_k, step};
        }
    }
    return cloud;
}

Point ExampleSpace::perturb(const Point& p, double delta, Rng& rng) const {
    if (p.kind == PointKind::Example1Ideal) return p;  // ideal points stay fixed
    double r = delta * 0.999999 * std::sqrt(rng.next_double());
    double th = 2.0 * M_PI * rng.next_double();
    return Point::example1_base(p.xy + Vec2{r * std::cos(th), r * std::sin(th)});
}

// --- FullShift ---------------------------------------------------------------

FullShift::FullShift(std::string name, int alphabet, int window_halfwidth)
    : System(std::move(name)), alphabet_(alphabet), window_halfwidth_(window_halfwidth) {
    require(alphabet >= 2, "shift alphabet must have at least two symbols");
    require(window_halfwidth >= 1, "shift window half-width must be >= 1");
}

Point FullShift::apply(const Point& p, Direction dir) const {
    require(p.kind == PointKind::Shift, "shift system expects shift points");
    Point q = p;
    // sigma(x)_i = x_{i+1}: a forward shift relabels the stored window down.
    q.word.offset += (dir == Direction::Forward) ? -1 : +1;
    if (!q.word.contains(0))
        throw std::runtime_error("shift window exhausted: no symbol stored at index 0");
    return q;
}

double FullShift::dist(const Point& a, const Point& b) const {
    const ShiftWord& wa = a.word;
    const ShiftWord& wb = b.word;
    std::int64_t extent = std::max(std::max(wa.hi(), -wa.lo()), std::max(wb.hi(), -wb.lo()));
    for (std::int64_t j = 0; j <= extent; ++j) {
        for (std::int64_t i : {j, -j}) {
            if (i == 0 && j != 0) continue;
            if (wa.contains(i) && wb.contains(i) && wa.at(i) != wb.at(i))
                return std::pow(2.0, -static_cast<double>(j));
        }
    }
    return 0.0;
}

Point FullShift::make_point(const std::vector<std::uint8_t>& symbols) const {
    require(static_cast<int>(symbols.size()) == 2 * window_halfwidth_ + 1,
            "expected symbols covering [-w, w]");
    ShiftWord w;
    w.offset = -window_halfwidth_;
    w.symbols = symbols;
    return Point::shift(std::move(w));
}

Point FullShift::random_point(Rng& rng) const {
    std::vector<std::uint8_t> sym(2 * window_halfwidth_ + 1);
    for (auto& s : sym) s = static_cast<std::uint8_t>(rng.next_below(alphabet_));
    return make_point(sym);
}

SampleCloud FullShift::local_cloud(const Point& center, double radius,
                                   double step) const {
    require(center.kind == PointKind::Shift, "shift cloud expects a shift center");
    // Points within `radius` agree with the center wherever 2^-|i| > radius.
    auto j0 = static_cast<std::int64_t>(std::ceil(std::log2(1.0 / radius)));
    auto j1 = static_cast<std::int64_t>(std::ceil(std::log2(1.0 / step)));
    j0 = std::max<std::int64_t>(j0, 0);
    std::vector<std::int64_t> vary;
    for (std::int64_t j = j0; j <= j1; ++j) {
        for (std::int64_t i : {j, -j}) {
            if (i == 0 && j != 0) continue;
            if (center.word.contains(i)) vary.push_back(i);
        }
        if (static_cast<double>(vary.size()) * std::log2(alphabet_) >= 12.0) break;
    }
    SampleCloud cloud;
    std::int64_t total = 1;
    for (std::size_t i = 0; i < vary.size(); ++i) total *= alphabet_;
    for (std::int64_t code = 0; code < total; ++code) {
        Point q = center;
        std::int64_t c = code;
        for (std::int64_t idx : vary) {
            q.word.symbols[static_cast<std::size_t>(idx - q.word.offset)] =
                static_cast<std::uint8_t>(c % alphabet_);
            c /= alphabet_;
        }
        cloud.points.push_back(std::move(q));
    }
    return cloud;
}

Point FullShift::perturb(const Point& p, double delta, Rng& rng) const {
    // Resample tail symbols only where they cannot push the jump to delta.
    auto jmin = static_cast<std::int64_t>(std::floor(std::log2(1.0 / delta))) + 1;
    Point q = p;
    for (std::int64_t i = q.word.lo(); i <= q.word.hi(); ++i) {
        if (std::llabs(i) >= jmin)
            q.word.symbols[static_cast<std::size_t>(i - q.word.offset)] =
                static_cast<std::uint8_t>(rng.next_below(alphabet_));
    }
    return q;
}

// --- CantorIdentity ----------------------------------------------------------

CantorIdentity::CantorIdentity(std::string name, int depth)
    : System(std::move(name)), depth_(depth) {
    require(depth >= 1, "cantor depth must be >= 1");
}

double CantorIdentity::dist(const Point& a, const Point& b) const {
    std::size_t n = std::min(a.prefix.size(), b.prefix.size());
    std::size_t common = 0;
    while (common < n && a.prefix[common] == b.prefix[common]) ++common;
    if (common == a.prefix.size() && common == b.prefix.size()) return 0.0;
    return std::pow(2.0, -static_cast<double>(common));
}

SampleCloud CantorIdentity::local_cloud(const Point& center, double radius,
                                        double step) const {
    require(center.kind == PointKind::Cantor, "cantor cloud expects a cantor center");
    auto j0 = static_cast<std::int64_t>(std::ceil(std::log2(1.0 / radius)));
    j0 = std::clamp<std::int64_t>(j0, 0, static_cast<std::int64_t>(center.prefix.size()));
    auto len = static_cast<std::int64_t>(std::ceil(std::log2(1.0 / step)));
    len = std::clamp<std::int64_t>(len, j0, depth_);
    len = std::min(len, j0 + 12);  // enumeration cap
    SampleCloud cloud;
    std::int64_t total = 1ll << (len - j0);
    for (std::int64_t code = 0; code < total; ++code) {
        std::vector<std::uint8_t> bits(static_cast<std::size_t>(len));
        for (std::int64_t i = 0; i < j0; ++i)
            bits[static_cast<std::size_t>(i)] = center.prefix[static_cast<std::size_t>(i)];
        for (std::int64_t i = j0; i < len; ++i)
            bits[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>((code >> (i - j0)) & 1);
        cloud.points.push_back(Point::cantor(std::move(bits)));
    }
    return cloud;
}

Point CantorIdentity::perturb(const Point& p, double delta, Rng& rng) const {
    auto jmin = static_cast<std::int64_t>(std::floor(std::log2(1.0 / delta))) + 1;
    Point q = p;
    for (std::size_t i = static_cast<std::size_t>(std::max<std::int64_t>(jmin, 0));
         i < q.prefix.size(); ++i)
        q.prefix[i] = static_cast<std::uint8_t>(rng.next_below(2));
    return q;
}

// --- periodic point enumeration ----------------------------------------------

namespace {

// Extended gcd: returns g = gcd(a, b) and u, v with a u + b v = g, g >= 0.
std::int64_t ext_gcd(std::int64_t a, std::int64_t b, std::int64_t& u, std::int64_t& v) {
    if (b == 0) {
        u = (a >= 0) ? 1 : -1;
        v = 0;
        return std::llabs(a);
    }
    std::int64_t u1, v1;
    std::int64_t g = ext_gcd(b, a % b, u1, v1);
    u = v1;
    v = u1 - (a / b) * v1;
    return g;
}

}  // namespace

PeriodicLattice periodic_lattice(const IntMat2& a, int n) {
    require(n >= 1, "period must be >= 1");
    PeriodicLattice lat;
    lat.m = a.pow(n).minus_identity();
    lat.det = lat.m.det();
    require(lat.det != 0, "A^n - I is singular; matrix is not hyperbolic");
    lat.adj = lat.m.adjugate();

    // Lower-triangular Hermite form via unimodular column operations on the
    // top row: [a b; c d] -> [g 0; *, det/g].
    std::int64_t u, v;
    std::int64_t g = ext_gcd(lat.m.a, lat.m.b, u, v);
    lat.h11 = g;
    lat.h21 = u * lat.m.c + v * lat.m.d;
    lat.h22 = std::llabs(lat.det) / g;
    return lat;
}

Vec2 PeriodicLattice::point_by_index(std::int64_t t) const {
    std::int64_t i = t % h11;
    std::int64_t j = t / h11;
    auto num = adj.apply_int(i, j);
    std::int64_t dp = std::llabs(det);
    auto frac = [&](std::int64_t x) {
        if (det < 0) x = -x;
        std::int64_t r = x % dp;
        if (r < 0) r += dp;
        return static_cast<double>(r) / static_cast<double>(dp);
    };
    return {frac(num[0]), frac(num[1])};
}

}  // namespace spaces

SystemHandle make_system(const std::string& id, const SystemParams& params) {
    IntMat2 a = params.matrix.value_or(spaces::cat_matrix());
    if (id == "cat") return std::make_shared<spaces::TorusAutomorphism>(id, a);
    if (id == "sphere") return std::make_shared<spaces::SphereQuotient>(id, a);
    if (id == "example1") return std::make_shared<spaces::ExampleSpace>(id, a);
    if (id == "shift2") return std::make_shared<spaces::FullShift>(id, params.alphabet, params.shift_window);
    if (id == "cantor-id") return std::make_shared<spaces::CantorIdentity>(id, 20);
    throw precondition_error("unknown system id: " + id);
}

}  // namespace topodyn
