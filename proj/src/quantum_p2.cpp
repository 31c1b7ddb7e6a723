#include "quantum_p2.hpp"

#include "errors.hpp"

namespace mirsym {

void ExpPoly::add_term(const Mono& m, const Rational& c) {
    if (c.is_zero()) return;
    if (m[3] > q_max_) return;  // beyond the q1 truncation
    auto it = t_.find(m);
    if (it == t_.end()) {
        t_.emplace(m, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) t_.erase(it);
    }
}

Rational ExpPoly::coeff(const Mono& m) const {
    auto it = t_.find(m);
    return it == t_.end() ? Rational(0) : it->second;
}

ExpPoly ExpPoly::operator+(const ExpPoly& o) const {
    ExpPoly r(std::min(q_max_, o.q_max_));
    for (const auto& [m, c] : t_) r.add_term(m, c);
    for (const auto& [m, c] : o.t_) r.add_term(m, c);
    return r;
}

ExpPoly ExpPoly::operator-(const ExpPoly& o) const {
    ExpPoly r(std::min(q_max_, o.q_max_));
    for (const auto& [m, c] : t_) r.add_term(m, c);
    for (const auto& [m, c] : o.t_) r.add_term(m, -c);
    return r;
}

ExpPoly ExpPoly::operator*(const ExpPoly& o) const {
    ExpPoly r(std::min(q_max_, o.q_max_));
    for (const auto& [m1, c1] : t_)
        for (const auto& [m2, c2] : o.t_) {
            if (m1[3] + m2[3] > r.q_max_) continue;
            Mono m{m1[0] + m2[0], m1[1] + m2[1], m1[2] + m2[2], m1[3] + m2[3]};
            r.add_term(m, c1 * c2);
        }
    return r;
}

ExpPoly ExpPoly::operator*(const Rational& s) const {
    ExpPoly r(q_max_);
    if (s.is_zero()) return r;
    for (const auto& [m, c] : t_) r.add_term(m, c * s);
    return r;
}

ExpPoly ExpPoly::partial(int i) const {
    if (i < 0 || i > 2) throw InvalidArgument("partial index out of range");
    ExpPoly r(q_max_);
    for (const auto& [m, c] : t_) {
        if (i == 1) {
            if (m[1] > 0) {
                Mono d{m[0], m[1] - 1, m[2], m[3]};
                r.add_term(d, c * Rational(m[1]));
            }
            if (m[3] > 0) r.add_term(m, c * Rational(m[3]));  // d/dx1 q1^d = d q1^d
        } else {
            int idx = (i == 0) ? 0 : 2;
            if (m[idx] == 0) continue;
            Mono d = m;
            d[idx] -= 1;
            r.add_term(d, c * Rational(m[idx]));
        }
    }
    return r;
}

std::vector<Rational> ExpPoly::eval_q1_poly(const Rational& x0, const Rational& x2) const {
    std::vector<Rational> out(static_cast<size_t>(q_max_) + 1, Rational(0));
    for (const auto& [m, c] : t_) {
        if (m[1] != 0)
            throw InternalError("eval_q1_poly on a polynomial with explicit x1 dependence");
        Rational v = c * x0.pow(static_cast<unsigned>(m[0])) * x2.pow(static_cast<unsigned>(m[2]));
        out[static_cast<size_t>(m[3])] += v;
    }
    return out;
}

PlanePotential plane_potential(const std::vector<Rational>& counts, int q_max) {
    if (q_max < 0) throw InvalidArgument("negative q1 truncation");
    if (static_cast<int>(counts.size()) < q_max)
        throw TruncationExceeded("need counts through degree " + std::to_string(q_max));
    PlanePotential pot;
    pot.q_max = q_max;
    pot.counts = counts;
    pot.phi = ExpPoly(q_max);
    pot.phi.add_term({2, 0, 1, 0}, Rational(1, 2));  // x0^2 x2 / 2
    pot.phi.add_term({1, 2, 0, 0}, Rational(1, 2));  // x0 x1^2 / 2
    for (int d = 1; d <= q_max; ++d) {
        // N_d e^{d x1} x2^{3d-1} / (3d-1)!: a degree-d rational curve meets
        // 3d-1 generic point conditions, so the degree-d term pairs exactly
        // 3d-1 insertions of the point class.
        Rational c = counts[static_cast<size_t>(d - 1)] /
                     Rational(factorial(static_cast<unsigned>(3 * d - 1)));
        pot.phi.add_term({0, 0, 3 * d - 1, d}, c);
    }
    return pot;
}

PairingMatrix plane_pairing() {
    PairingMatrix p;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            p.g[i][j] = (i + j == 2) ? Rational(1) : Rational(0);
            p.g_inv[i][j] = p.g[i][j];  // the anti-diagonal is an involution
        }
    return p;
}

namespace {

ExpPoly third_partial(const PlanePotential& pot, int i, int j, int k) {
    return pot.phi.partial(i).partial(j).partial(k);
}

}  // namespace

StructureConstants structure_constants(const PlanePotential& pot, const Rational& x0,
                                       const Rational& x2) {
    PairingMatrix pairing = plane_pairing();
    StructureConstants a;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            for (int k = 0; k < 3; ++k) {
                ExpPoly acc(pot.q_max);
                for (int kp = 0; kp < 3; ++kp) {
                    if (pairing.g_inv[k][kp].is_zero()) continue;
                    acc = acc + third_partial(pot, i, j, kp) * pairing.g_inv[k][kp];
                }
                a[i][j][k] = acc.eval_q1_poly(x0, x2);
            }
    return a;
}

ExpPoly wdvv_residual(const PlanePotential& pot, int i, int j, int k, int l, int deg) {
    if (deg > pot.q_max) throw TruncationExceeded("residual degree exceeds potential truncation");
    for (int idx : {i, j, k, l})
        if (idx < 0 || idx > 2) throw InvalidArgument("index out of range");

    PairingMatrix pairing = plane_pairing();
    ExpPoly lhs(deg), rhs(deg);
    for (int m = 0; m < 3; ++m)
        for (int mp = 0; mp < 3; ++mp) {
            if (pairing.g_inv[m][mp].is_zero()) continue;
            lhs = lhs + third_partial(pot, i, j, m) * third_partial(pot, k, l, mp) *
                            pairing.g_inv[m][mp];
            rhs = rhs + third_partial(pot, i, k, m) * third_partial(pot, j, l, mp) *
                            pairing.g_inv[m][mp];
        }
    return lhs - rhs;
}

std::vector<Rational> plane_curve_recursion(int dmax) {
    if (dmax < 1) throw InvalidArgument("dmax must be >= 1");
    std::vector<Rational> n;
    n.push_back(Rational(1));  // the line through two points
    for (int d = 2; d <= dmax; ++d) {
        Rational acc(0);
        for (int d1 = 1; d1 < d; ++d1) {
            int d2 = d - d1;
            mpz_class b1 = binomial(static_cast<unsigned long>(3 * d - 4),
                                    static_cast<unsigned long>(3 * d1 - 2));
            mpz_class b2 = binomial(static_cast<unsigned long>(3 * d - 4),
                                    static_cast<unsigned long>(3 * d1 - 1));
            mpz_class d1z(d1), d2z(d2);
            mpz_class w = d1z * d1z * d2z * d2z * b1 - d1z * d1z * d1z * d2z * b2;
            acc += n[static_cast<size_t>(d1 - 1)] * n[static_cast<size_t>(d2 - 1)] * Rational(w);
        }
        n.push_back(acc);
    }
    return n;
}

}  // namespace mirsym
