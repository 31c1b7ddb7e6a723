#include "picard_fuchs.hpp"

#include "errors.hpp"

namespace mirsym {

std::vector<Rational> ThetaOperator::indicial_poly() const {
    std::vector<Rational> p;
    for (const Term& t : terms) {
        if (t.z_power != 0) continue;
        if (t.theta_poly.size() > p.size()) p.resize(t.theta_poly.size(), Rational(0));
        for (size_t i = 0; i < t.theta_poly.size(); ++i) p[i] += t.theta_poly[i];
    }
    while (!p.empty() && p.back().is_zero()) p.pop_back();
    return p;
}

LogSeries ThetaOperator::apply(const LogSeries& s) const {
    // Precompute theta^i(s) for all powers that occur.
    size_t max_deg = 0;
    for (const Term& t : terms) max_deg = std::max(max_deg, t.theta_poly.size());
    std::vector<LogSeries> theta_pow;
    theta_pow.push_back(s);
    for (size_t i = 1; i < max_deg; ++i) theta_pow.push_back(theta_pow.back().theta());

    LogSeries acc(s.order(), 0);
    for (const Term& t : terms) {
        LogSeries contrib(s.order(), 0);
        for (size_t i = 0; i < t.theta_poly.size(); ++i) {
            if (t.theta_poly[i].is_zero()) continue;
            contrib = contrib + theta_pow[i] * t.theta_poly[i];
        }
        if (t.z_power > 0) {
            LogSeries shifted(s.order(), 0);
            for (int k = 0; k <= contrib.log_degree(); ++k)
                shifted.set_part(k, contrib.part(k).shifted_up(t.z_power));
            contrib = shifted;
        }
        acc = acc + contrib;
    }
    acc.normalize();
    return acc;
}

namespace {

// Multiplies factors (5theta + r) for r = 1..4 into an expanded polynomial.
std::vector<Rational> expand_quintic_z_part() {
    std::vector<Rational> p{Rational(1)};
    for (int r = 1; r <= 4; ++r) {
        std::vector<Rational> q(p.size() + 1, Rational(0));
        for (size_t i = 0; i < p.size(); ++i) {
            q[i] += p[i] * Rational(r);
            q[i + 1] += p[i] * Rational(5);
        }
        p = std::move(q);
    }
    for (Rational& c : p) c *= Rational(-5);
    return p;
}

}  // namespace

ThetaOperator quintic_operator() {
    ThetaOperator op;
    op.terms.push_back({0, {Rational(0), Rational(0), Rational(0), Rational(0), Rational(1)}});
    op.terms.push_back({1, expand_quintic_z_part()});
    return op;
}

ThetaOperator am_operator() {
    ThetaOperator op;
    // theta^3 (theta - 1) - z theta^4
    op.terms.push_back({0, {Rational(0), Rational(0), Rational(0), Rational(-1), Rational(1)}});
    op.terms.push_back({1, {Rational(0), Rational(0), Rational(0), Rational(0), Rational(-1)}});
    op.factored_am = true;
    return op;
}

EpsPoly EpsPoly::constant(const Rational& r) {
    EpsPoly p;
    p.c[0] = r;
    return p;
}

EpsPoly EpsPoly::linear(const Rational& a, const Rational& b) {
    EpsPoly p;
    p.c[0] = a;
    p.c[1] = b;
    return p;
}

EpsPoly EpsPoly::operator*(const EpsPoly& o) const {
    EpsPoly p;
    for (int i = 0; i < 4; ++i) {
        if (c[i].is_zero()) continue;
        for (int j = 0; i + j < 4; ++j) p.c[i + j] += c[i] * o.c[j];
    }
    return p;
}

EpsPoly EpsPoly::operator+(const EpsPoly& o) const {
    EpsPoly p;
    for (int i = 0; i < 4; ++i) p.c[i] = c[i] + o.c[i];
    return p;
}

EpsPoly EpsPoly::operator-() const {
    EpsPoly p;
    for (int i = 0; i < 4; ++i) p.c[i] = -c[i];
    return p;
}

EpsPoly EpsPoly::inverse() const {
    if (c[0].is_zero()) throw RecursionBreakdown("eps-polynomial with zero constant term");
    // Geometric series: 1/(c0 + u) = c0^{-1} (1 - u/c0 + (u/c0)^2 - ...)
    Rational inv0 = c[0].inv();
    EpsPoly u;  // the nilpotent tail scaled by 1/c0
    for (int i = 1; i < 4; ++i) u.c[i] = c[i] * inv0;
    EpsPoly acc = EpsPoly::constant(1);
    EpsPoly upow = EpsPoly::constant(1);
    Rational sign(1);
    for (int k = 1; k < 4; ++k) {
        upow = upow * u;
        sign = -sign;
        for (int i = 0; i < 4; ++i) acc.c[i] += upow.c[i] * sign;
    }
    for (int i = 0; i < 4; ++i) acc.c[i] *= inv0;
    return acc;
}

bool EpsPoly::is_zero() const {
    for (const Rational& r : c)
        if (!r.is_zero()) return false;
    return true;
}

namespace {

// Evaluates a theta-polynomial at theta = n + eps, mod eps^4.
EpsPoly eval_theta_poly(const std::vector<Rational>& poly, int n) {
    EpsPoly x = EpsPoly::linear(Rational(n), Rational(1));
    EpsPoly acc = EpsPoly::constant(0);
    EpsPoly xpow = EpsPoly::constant(1);
    for (size_t i = 0; i < poly.size(); ++i) {
        if (!poly[i].is_zero()) {
            EpsPoly term = xpow;
            for (int k = 0; k < 4; ++k) term.c[k] *= poly[i];
            acc = acc + term;
        }
        xpow = xpow * x;
    }
    return acc;
}

FrobeniusFamily am_family(int order) {
    FrobeniusFamily fam;
    fam.order = order;
    fam.psi[0] = LogSeries(TruncatedSeries::one(order));
    fam.psi[1] = LogSeries::log_monomial(1, 1, order);
    fam.psi[2] = LogSeries::log_monomial(Rational(1, 2), 2, order);
    fam.psi[3] = LogSeries(li3_series(order));
    return fam;
}

}  // namespace

TruncatedSeries li3_series(int order) {
    TruncatedSeries s(order);
    for (int d = 1; d <= order; ++d)
        s.set_coeff(d, Rational(1, static_cast<long>(d) * d * d));
    return s;
}

FrobeniusFamily frobenius_family(const ThetaOperator& op, int order) {
    if (order < 1) throw InvalidArgument("frobenius_family requires order >= 1");
    if (op.factored_am) return am_family(order);

    std::vector<Rational> ind = op.indicial_poly();
    std::vector<Rational> theta4{Rational(0), Rational(0), Rational(0), Rational(0), Rational(1)};
    if (ind != theta4)
        throw NotMaximallyUnipotent("indicial polynomial is not theta^4");

    FrobeniusFamily fam;
    fam.order = order;
    fam.a_coeffs.resize(static_cast<size_t>(order) + 1);
    fam.a_coeffs[0] = EpsPoly::constant(1);

    int max_z = 0;
    for (const auto& t : op.terms) max_z = std::max(max_z, t.z_power);

    for (int n = 1; n <= order; ++n) {
        // P_0(n+eps) a_n = - sum_{j>=1} P_j(n-j+eps) a_{n-j}
        EpsPoly rhs = EpsPoly::constant(0);
        for (const auto& t : op.terms) {
            if (t.z_power == 0 || t.z_power > n) continue;
            EpsPoly coeff = eval_theta_poly(t.theta_poly, n - t.z_power);
            rhs = rhs + coeff * fam.a_coeffs[static_cast<size_t>(n - t.z_power)];
        }
        EpsPoly lead = eval_theta_poly(theta4, n);  // (n+eps)^4
        if (lead.c[0].is_zero()) throw RecursionBreakdown("vanishing leading coefficient at n=" + std::to_string(n));
        fam.a_coeffs[static_cast<size_t>(n)] = (-rhs) * lead.inverse();
    }

    // z^eps = sum_k eps^k L^k / k!; psi_i collects the eps^i coefficient.
    std::array<TruncatedSeries, 4> a_series{TruncatedSeries(order), TruncatedSeries(order),
                                            TruncatedSeries(order), TruncatedSeries(order)};
    for (int j = 0; j < 4; ++j)
        for (int n = 0; n <= order; ++n)
            a_series[j].set_coeff(n, fam.a_coeffs[static_cast<size_t>(n)].c[j]);

    for (int i = 0; i < 4; ++i) {
        LogSeries psi(order, 0);
        Rational fact(1);
        for (int k = 0; k <= i; ++k) {
            if (k > 0) fact *= Rational(k);
            psi.set_part(k, a_series[i - k] * fact.inv());
        }
        psi.normalize();
        fam.psi[i] = psi;
    }
    return fam;
}

LogSeries verify_annihilation(const ThetaOperator& op, const LogSeries& s) {
    return op.apply(s);
}

}  // namespace mirsym
