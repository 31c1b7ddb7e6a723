#include "mirror_quintic.hpp"

#include "errors.hpp"

namespace mirsym {

MirrorMap mirror_map(const FrobeniusFamily& family) {
    const LogSeries& psi0 = family.psi[0];
    const LogSeries& psi1 = family.psi[1];
    if (psi0.log_degree() != 0 || psi0.part(0).coeff(0) != Rational(1))
        throw InvalidArgument("mirror_map requires psi_0 with constant term 1 and no logs");

    // psi_1 = L psi_0 + sigma: the L-part must literally equal psi_0.
    if (!(psi1.part(1) == psi0.part(0)))
        throw InvalidArgument("psi_1 does not have the form L*psi_0 + sigma");
    TruncatedSeries sigma = psi1.part(0);

    MirrorMap m;
    m.q_of_z = sigma.divided_by(psi0.part(0)).exp();
    m.z_of_q = m.q_series().reversion();
    return m;
}

TruncatedSeries yukawa_coupling_series(const FrobeniusFamily& family, const MirrorMap& map) {
    const LogSeries& psi0 = family.psi[0];
    const LogSeries& psi1 = family.psi[1];
    const LogSeries& psi2 = family.psi[2];
    const LogSeries& psi3 = family.psi[3];
    int order = psi0.order();

    // G = (5/2)(psi_1 psi_2 - psi_0 psi_3) / psi_0^2, a polynomial in L.
    LogSeries g = (psi1 * psi2 - psi0 * psi3) * Rational(5, 2);
    TruncatedSeries psi0sq = psi0.part(0) * psi0.part(0);
    g = g.divided_by(psi0sq);

    // Change of variables z -> q.  With q = z u(z), u = q_of_z, we have
    // log z = log q - log u(z(q)); the symbol L is re-based accordingly.
    const TruncatedSeries& zq = map.z_of_q;
    TruncatedSeries log_u = map.q_of_z.log();
    TruncatedSeries ell = -(log_u.compose(zq));  // log z = L_q + ell(q)

    // Binomial expansion of g_k(z(q)) (L_q + ell)^k.
    std::vector<TruncatedSeries> ell_pow{TruncatedSeries::one(order)};
    for (int k = 1; k <= LogSeries::kMaxLogDegree; ++k)
        ell_pow.push_back(ell_pow.back() * ell);

    LogSeries g_q(order, 0);
    for (int k = 0; k <= g.log_degree(); ++k) {
        TruncatedSeries gk = g.part(k);
        if (gk.is_zero()) continue;
        TruncatedSeries gk_q = gk.compose(zq);
        for (int j = 0; j <= k; ++j) {
            Rational binom(binomial(static_cast<unsigned long>(k), static_cast<unsigned long>(j)));
            g_q.set_part(j, g_q.part(j) + gk_q * ell_pow[static_cast<size_t>(k - j)] * binom);
        }
    }
    g_q.normalize();

    // Third q d/dq derivative kills the log polynomial ambiguity; anything
    // left in positive L-degree signals a pipeline bug.
    LogSeries k_series = g_q.theta().theta().theta();
    for (int j = 1; j <= k_series.log_degree(); ++j)
        if (!k_series.part(j).is_zero())
            throw LogTermsSurvive("L^" + std::to_string(j) + " component nonzero after (q d/dq)^3");
    return k_series.part(0);
}

std::vector<Rational> yukawa_extraction(const FrobeniusFamily& family, const MirrorMap& map,
                                        int dmax) {
    if (dmax < 1) throw InvalidArgument("dmax must be >= 1");
    if (dmax > family.order - 2)
        throw InvalidArgument("dmax exceeds truncation order minus guard");
    TruncatedSeries k = yukawa_coupling_series(family, map);
    std::vector<Rational> n_virt;
    n_virt.reserve(static_cast<size_t>(dmax));
    for (int d = 1; d <= dmax; ++d)
        n_virt.push_back(k.coeff(d) / Rational(static_cast<long>(d) * d * d));
    return n_virt;
}

std::vector<Rational> am_inversion(const std::vector<Rational>& n_virt) {
    std::vector<Rational> n(n_virt.size());
    for (size_t d = 1; d <= n_virt.size(); ++d) {
        Rational acc = n_virt[d - 1];
        for (size_t k = 2; k <= d; ++k) {
            if (d % k != 0) continue;
            acc -= n[d / k - 1] / Rational(static_cast<long>(k) * k * k);
        }
        n[d - 1] = acc;
    }
    return n;
}

std::vector<Rational> am_forward(const std::vector<Rational>& n_int) {
    std::vector<Rational> v(n_int.size());
    for (size_t d = 1; d <= n_int.size(); ++d) {
        Rational acc(0);
        for (size_t k = 1; k <= d; ++k) {
            if (d % k != 0) continue;
            acc += n_int[d / k - 1] / Rational(static_cast<long>(k) * k * k);
        }
        v[d - 1] = acc;
    }
    return v;
}

AmToyReport am_toy_model(int order) {
    if (order < 1) throw InvalidArgument("order must be >= 1");
    AmToyReport rep;
    rep.order = order;

    FrobeniusFamily fam = frobenius_family(am_operator(), order);
    MirrorMap map = mirror_map(fam);

    // With sigma = 0 the mirror map is the identity: q(z) = z, so t = log z
    // and exp(dt) = z^d.
    TruncatedSeries lhs(order);
    for (int d = 1; d <= order; ++d)
        lhs.set_coeff(d, Rational(1, static_cast<long>(d) * d * d));
    // Compose through the (identity) mirror map to exercise the pipeline.
    TruncatedSeries lhs_q = lhs.compose(map.q_series());

    TruncatedSeries rhs = fam.psi[3].part(0).divided_by(fam.psi[0].part(0));

    rep.lhs = lhs_q.coeffs();
    rep.rhs = rhs.coeffs();
    rep.pass = true;
    for (int n = 0; n <= order; ++n) {
        if (lhs_q.coeff(n) != rhs.coeff(n)) {
            rep.pass = false;
            rep.first_mismatch = n;
            break;
        }
    }
    return rep;
}

QuinticRun quintic_pipeline(int dmax, int order) {
    if (dmax < 1) throw InvalidArgument("dmax must be >= 1");
    if (order < 0) order = dmax + 2;  // guard terms
    if (order < dmax + 2) throw InvalidArgument("order must be at least dmax + 2");

    QuinticRun run;
    run.dmax = dmax;
    run.order = order;
    run.family = frobenius_family(quintic_operator(), order);
    run.map = mirror_map(run.family);

    TruncatedSeries q = run.map.q_series();
    run.q_integral = true;
    for (int d = 1; d <= order; ++d) {
        run.q_coeffs.push_back(q.coeff(d));
        if (!q.coeff(d).is_integer()) run.q_integral = false;
    }

    run.coupling = yukawa_coupling_series(run.family, run.map);
    run.numbers.n_virt = yukawa_extraction(run.family, run.map, dmax);
    run.numbers.n_int = am_inversion(run.numbers.n_virt);
    return run;
}

}  // namespace mirsym
