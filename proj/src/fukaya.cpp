#include "fukaya.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <optional>

#include "errors.hpp"

namespace mirsym {

Geodesic::Geodesic(int p_, int q_, Rational offset_, int lift_)
    : p(p_), q(q_), offset(fractional_part(offset_)), lift(lift_) {
    if (p == 0 && q == 0) throw InvalidArgument("zero slope pair");
    if (std::gcd(std::abs(p), std::abs(q)) != 1)
        throw InvalidArgument("slope pair must be coprime");
}

namespace {

// Angle representative: directions are normalized to p > 0, or (0, 1).
std::pair<int, int> normalize_dir(const Geodesic& g) {
    int p = g.p, q = g.q;
    if (p < 0 || (p == 0 && q < 0)) {
        p = -p;
        q = -q;
    }
    return {p, q};
}

// 0 for angle in [0, pi/2), 1 for pi/2, 2 for (pi/2, pi).
int angle_class(std::pair<int, int> d) {
    if (d.first == 0) return 1;
    return d.second >= 0 ? 0 : 2;
}

}  // namespace

bool parallel(const Geodesic& a, const Geodesic& b) {
    return a.p * b.q - b.p * a.q == 0;
}

bool angle_less(const Geodesic& a, const Geodesic& b) {
    auto da = normalize_dir(a), db = normalize_dir(b);
    int ca = angle_class(da), cb = angle_class(db);
    if (ca != cb) return ca < cb;
    if (ca == 1) return false;
    // Within a class the angle grows with the slope q/p (p > 0).
    return da.second * db.first < db.second * da.first;
}

int maslov_index(const Geodesic& l1, const Geodesic& l2) {
    if (parallel(l1, l2)) throw NotTransverse("parallel geodesics have no Maslov index");
    // ceil((phase2 - phase1)/pi) with phase = angle + pi * lift.
    return (l2.lift - l1.lift) + (angle_less(l1, l2) ? 1 : 0);
}

HomBasis intersection_basis(const Geodesic& l1, const Geodesic& l2) {
    long delta = static_cast<long>(l1.p) * l2.q - static_cast<long>(l2.p) * l1.q;
    if (delta == 0) throw NotTransverse("equal slopes");
    long n = std::labs(delta);

    HomBasis basis;
    Rational det(delta);
    for (long m = 0; m < n; ++m) {
        for (long k = 0; k < n; ++k) {
            // q1 x - p1 y = c1 + m, q2 x - p2 y = c2 + k
            Rational c1 = l1.offset + Rational(m);
            Rational c2 = l2.offset + Rational(k);
            Rational x = (Rational(-l2.p) * c1 + Rational(l1.p) * c2) / det;
            Rational y = (Rational(-l2.q) * c1 + Rational(l1.q) * c2) / det;
            basis.points.emplace_back(fractional_part(x), fractional_part(y));
        }
    }
    std::sort(basis.points.begin(), basis.points.end());
    basis.points.erase(std::unique(basis.points.begin(), basis.points.end()),
                       basis.points.end());
    if (static_cast<long>(basis.points.size()) != n)
        throw InternalError("intersection count mismatch");

    int mu = maslov_index(l1, l2);
    basis.gradings.assign(basis.points.size(), mu);
    return basis;
}

ThetaValue theta_sum(double a, double b, double tol) {
    if (tol <= 0.0) throw InvalidArgument("tolerance must be positive");
    if (a == 0.0) throw InvalidArgument("progression step must be nonzero");
    a = std::fabs(a);
    // Shift invariance b -> b + a reduces b into [0, a).
    b -= a * std::floor(b / a);

    auto tail_bound = [&](double x) {
        // sum_{j >= 1} exp(-(x + a j)^2) <= exp(-(x+a)^2) / (1 - exp(-2a(x+a)))
        double x1 = x + a;
        double r = std::exp(-2.0 * a * x1);
        return std::exp(-x1 * x1) / (1.0 - r);
    };

    int n_pos = 1, n_neg = 1;
    // Terms n >= 0 have a n + b >= 0; terms n <= -1 have -(a n + b) >= a - b > 0.
    while (tail_bound(a * n_pos + b) >= tol / 2) ++n_pos;
    while (tail_bound(a * n_neg - b) >= tol / 2) ++n_neg;

    double sum = std::exp(-b * b);
    for (int n = 1; n <= std::max(n_pos, n_neg); ++n) {
        if (n <= n_pos) {
            double x = a * n + b;
            sum += std::exp(-x * x);
        }
        if (n <= n_neg) {
            double x = a * n - b;
            sum += std::exp(-x * x);
        }
    }
    ThetaValue v;
    v.value = sum;
    v.bound = tail_bound(a * n_pos + b) + tail_bound(a * n_neg - b);
    return v;
}

namespace {

struct Vec2 {
    Rational x, y;
};

// Line of the lift: q x - p y = c.
struct Line {
    int p, q;
    Rational c;
};

// Intersection of two non-parallel lines.
Vec2 line_intersect(const Line& a, const Line& b) {
    Rational det(static_cast<long>(a.p) * b.q - static_cast<long>(b.p) * a.q);
    Rational x = (Rational(-b.p) * a.c + Rational(a.p) * b.c) / det;
    Rational y = (Rational(-b.q) * a.c + Rational(a.q) * b.c) / det;
    return {x, y};
}

bool same_torus_point(const Vec2& v, const std::pair<Rational, Rational>& pt) {
    return fractional_part(v.x - pt.first).is_zero() &&
           fractional_part(v.y - pt.second).is_zero();
}

// Chain carries triangles iff the angles are in decreasing cyclic order
// (exactly two descents among theta1->theta2->theta3->theta1).
bool chain_oriented(const Geodesic& l1, const Geodesic& l2, const Geodesic& l3) {
    int descents = 0;
    if (angle_less(l2, l1)) ++descents;
    if (angle_less(l3, l2)) ++descents;
    if (angle_less(l1, l3)) ++descents;
    return descents == 2;
}

long positive_mod(long a, long m) { return ((a % m) + m) % m; }

// Solves x = r1 mod m1, x = r2 mod m2. Returns {base, lcm} or nullopt.
std::optional<std::pair<long, long>> crt(long r1, long m1, long r2, long m2) {
    long g = std::gcd(m1, m2);
    if (positive_mod(r1 - r2, g) != 0) return std::nullopt;
    // Extended gcd: g = m1 x0 + m2 y0.
    long a = m1, b = m2, x0 = 1, x1 = 0;
    while (b != 0) {
        long qt = a / b;
        long tmp = a - qt * b;
        a = b;
        b = tmp;
        long tx = x0 - qt * x1;
        x0 = x1;
        x1 = tx;
    }
    long lcm = m1 / g * m2;
    long m2g = m2 / g;
    long t = positive_mod(((r2 - r1) / g) % m2g * positive_mod(x0, m2g), m2g);
    long base = positive_mod(r1 + m1 * t, lcm);
    return std::make_pair(base, lcm);
}

}  // namespace

M2Tensor m2_constants(const Geodesic& l1, const Geodesic& l2, const Geodesic& l3,
                      double area_scale, double tol) {
    if (area_scale <= 0.0) throw InvalidArgument("area scale must be positive");
    if (parallel(l1, l2) || parallel(l2, l3) || parallel(l1, l3))
        throw NotTransverse("slopes must be pairwise distinct");

    HomBasis b12 = intersection_basis(l1, l2);
    HomBasis b23 = intersection_basis(l2, l3);
    HomBasis b13 = intersection_basis(l1, l3);

    M2Tensor t;
    t.n12 = static_cast<int>(b12.points.size());
    t.n23 = static_cast<int>(b23.points.size());
    t.n13 = static_cast<int>(b13.points.size());
    t.entries.assign(static_cast<size_t>(t.n12) * t.n23 * t.n13, M2Entry{});

    if (!chain_oriented(l1, l2, l3)) return t;  // wrong cyclic order: no triangles

    long d23 = std::labs(static_cast<long>(l2.p) * l3.q - static_cast<long>(l3.p) * l2.q);
    long d13 = std::labs(static_cast<long>(l1.p) * l3.q - static_cast<long>(l3.p) * l1.q);

    for (int i1 = 0; i1 < t.n12; ++i1) {
        // Fix the lift of p1 and the lifts of L1, L2 through it.
        const auto& pt1 = b12.points[static_cast<size_t>(i1)];
        Line lift1{l1.p, l1.q, Rational(l1.q) * pt1.first - Rational(l1.p) * pt1.second};
        Line lift2{l2.p, l2.q, Rational(l2.q) * pt1.first - Rational(l2.p) * pt1.second};
        Vec2 v3{pt1.first, pt1.second};

        // Intersections with the lift family of L3: line q3 x - p3 y = c3 + m.
        auto lift3 = [&](const Rational& m) {
            return Line{l3.p, l3.q, l3.offset + m};
        };

        for (int i2 = 0; i2 < t.n23; ++i2) {
            // Residue class of m with lift2 cap lift3(m) over p2.
            long r23 = -1;
            for (long j = 0; j < d23; ++j) {
                Vec2 v = line_intersect(lift2, lift3(Rational(j)));
                if (same_torus_point(v, b23.points[static_cast<size_t>(i2)])) {
                    r23 = j;
                    break;
                }
            }
            if (r23 < 0) throw InternalError("no lift hits the chosen intersection point");

            for (int i3 = 0; i3 < t.n13; ++i3) {
                long r13 = -1;
                for (long j = 0; j < d13; ++j) {
                    Vec2 v = line_intersect(lift1, lift3(Rational(j)));
                    if (same_torus_point(v, b13.points[static_cast<size_t>(i3)])) {
                        r13 = j;
                        break;
                    }
                }
                if (r13 < 0) throw InternalError("no lift hits the chosen intersection point");

                M2Entry& entry =
                    t.entries[static_cast<size_t>((i1 * t.n23 + i2) * t.n13 + i3)];
                auto sol = crt(r23, d23, r13, d13);
                if (!sol) continue;  // no triangle class joins these points
                auto [m0, period] = *sol;

                // Signed area of the triangle as a quadratic in m: it has a
                // double root at the concurrency parameter, so S = alpha (m-s)^2.
                auto area_at = [&](const Rational& m) {
                    Vec2 a = line_intersect(lift1, lift3(m));  // corner at q
                    Vec2 b = line_intersect(lift2, lift3(m));  // corner at p2
                    Rational ux = a.x - v3.x, uy = a.y - v3.y;
                    Rational wx = b.x - v3.x, wy = b.y - v3.y;
                    return (ux * wy - uy * wx) * Rational(1, 2);
                };
                // Quadratic through three samples.
                Rational s0 = area_at(0), s1 = area_at(1), s2 = area_at(2);
                Rational alpha = (s2 - s1 * 2 + s0) * Rational(1, 2);
                Rational beta = s1 - s0 - alpha;
                Rational gamma = s0;
                if (alpha.is_zero()) throw InternalError("degenerate area quadratic");
                Rational disc = beta * beta - alpha * gamma * 4;
                if (!disc.is_zero()) throw InternalError("area quadratic is not a square");
                Rational root = -beta / (alpha * 2);

                double scale = std::sqrt(area_scale * std::fabs(alpha.to_double()));
                entry.has_triangles = true;
                entry.a = static_cast<double>(period) * scale;
                entry.b = (Rational(m0) - root).to_double() * scale;
                ThetaValue v = theta_sum(entry.a, entry.b, tol);
                entry.value = v.value;
                entry.bound = v.bound;
            }
        }
    }
    return t;
}

AssociativityResult associativity_residual(const Geodesic& l1, const Geodesic& l2,
                                           const Geodesic& l3, const Geodesic& l4,
                                           double area_scale, double tol) {
    const Geodesic* ls[4] = {&l1, &l2, &l3, &l4};
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j)
            if (parallel(*ls[i], *ls[j])) throw NotTransverse("slopes must be pairwise distinct");

    M2Tensor a = m2_constants(l1, l2, l3, area_scale, tol);  // -> Hom(L1,L3)
    M2Tensor b = m2_constants(l1, l3, l4, area_scale, tol);  // -> Hom(L1,L4)
    M2Tensor c = m2_constants(l2, l3, l4, area_scale, tol);  // -> Hom(L2,L4)
    M2Tensor d = m2_constants(l1, l2, l4, area_scale, tol);  // -> Hom(L1,L4)

    AssociativityResult res;
    for (const auto& e : a.entries) res.lhs_nonzero |= e.has_triangles;
    for (const auto& e : c.entries) res.rhs_nonzero |= e.has_triangles;

    for (int i1 = 0; i1 < a.n12; ++i1)
        for (int i2 = 0; i2 < a.n23; ++i2)
            for (int i3 = 0; i3 < c.n23; ++i3)
                for (int out = 0; out < b.n13; ++out) {
                    double lhs = 0, rhs = 0, err = 0;
                    for (int r = 0; r < a.n13; ++r) {
                        const M2Entry& x = a.at(i1, i2, r);
                        const M2Entry& y = b.at(r, i3, out);
                        lhs += x.value * y.value;
                        err += std::fabs(x.value) * y.bound + std::fabs(y.value) * x.bound +
                               x.bound * y.bound;
                    }
                    for (int s = 0; s < c.n13; ++s) {
                        const M2Entry& x = c.at(i2, i3, s);
                        const M2Entry& y = d.at(i1, s, out);
                        rhs += x.value * y.value;
                        err += std::fabs(x.value) * y.bound + std::fabs(y.value) * x.bound +
                               x.bound * y.bound;
                    }
                    res.max_residual = std::max(res.max_residual, std::fabs(lhs - rhs));
                    res.bound = std::max(res.bound, err);
                }
    return res;
}

}  // namespace mirsym
