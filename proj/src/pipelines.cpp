#include "pipelines.hpp"

#include <cstdio>
#include <sstream>

#include "ainfty.hpp"
#include "errors.hpp"
#include "fukaya.hpp"
#include "hurwitz.hpp"
#include "json.hpp"
#include "json_util.hpp"
#include "mirror_quintic.hpp"
#include "quantum_p2.hpp"

namespace mirsym {

namespace {

using nlohmann::ordered_json;

std::string fmt_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.15g", v);
    return buf;
}

}  // namespace

Report run_quintic(int dmax, int order, int toy_order) {
    QuinticRun run = quintic_pipeline(dmax, order);

    ordered_json j;
    j["dmax"] = run.dmax;
    j["order"] = run.order;
    j["mirror_map_integral"] = run.q_integral;
    j["q_coefficients"] = ordered_json::array();
    for (int d = 1; d <= run.order; ++d)
        j["q_coefficients"].push_back(run.q_coeffs[static_cast<size_t>(d - 1)].str());
    j["coupling_constant_term"] = run.coupling.coeff(0).str();
    j["operator"] = theta_operator_to_json(quintic_operator());
    j["periods"] = ordered_json::array();
    for (int i = 0; i < 4; ++i) j["periods"].push_back(log_series_to_json(run.family.psi[i]));
    j["rows"] = ordered_json::array();
    for (int d = 1; d <= run.dmax; ++d) {
        ordered_json row;
        row["d"] = d;
        row["n_virt"] = run.numbers.n_virt[static_cast<size_t>(d - 1)].str();
        row["n_int"] = run.numbers.n_int[static_cast<size_t>(d - 1)].str();
        j["rows"].push_back(row);
    }
    if (toy_order > 0) {
        AmToyReport toy = am_toy_model(toy_order);
        ordered_json t;
        t["order"] = toy.order;
        t["pass"] = toy.pass;
        if (!toy.pass) t["first_mismatch"] = toy.first_mismatch;
        j["am_toy_model"] = t;
    }

    std::ostringstream text;
    text << "quintic pipeline (dmax=" << run.dmax << ", order=" << run.order << ")\n";
    text << "mirror map integral through z^" << run.order << ": "
         << (run.q_integral ? "yes" : "NO") << "\n";
    text << "coupling constant term: " << run.coupling.coeff(0).str() << "\n";
    size_t wd = 3, wv = 6, wi = 5;
    for (int d = 1; d <= run.dmax; ++d) {
        wv = std::max(wv, run.numbers.n_virt[static_cast<size_t>(d - 1)].str().size());
        wi = std::max(wi, run.numbers.n_int[static_cast<size_t>(d - 1)].str().size());
    }
    text << std::string(wd, ' ') << "d  " << "n_virt" << std::string(wv - 6 + 2, ' ')
         << "n_d\n";
    for (int d = 1; d <= run.dmax; ++d) {
        std::string ds = std::to_string(d);
        std::string vs = run.numbers.n_virt[static_cast<size_t>(d - 1)].str();
        std::string is = run.numbers.n_int[static_cast<size_t>(d - 1)].str();
        text << std::string(wd - ds.size() + 1, ' ') << ds << "  " << vs
             << std::string(wv - vs.size() + 2, ' ') << is << "\n";
    }
    if (toy_order > 0) {
        AmToyReport toy = am_toy_model(toy_order);
        text << "multiple-cover toy model at order " << toy.order << ": "
             << (toy.pass ? "pass" : "FAIL") << "\n";
    }

    return {j.dump(2) + "\n", text.str()};
}

Report run_plane_curves(int dmax, int residual_degree, bool dump_residual) {
    std::vector<Rational> counts = plane_curve_recursion(dmax);

    ordered_json j;
    j["dmax"] = dmax;
    j["rows"] = ordered_json::array();
    for (int d = 1; d <= dmax; ++d) {
        ordered_json row;
        row["d"] = d;
        row["N_d"] = counts[static_cast<size_t>(d - 1)].str();
        j["rows"].push_back(row);
    }

    std::ostringstream text;
    text << "rational plane curves through 3d-1 generic points\n";
    size_t w = 3;
    for (const auto& c : counts) w = std::max(w, c.str().size());
    text << "  d  N_d\n";
    for (int d = 1; d <= dmax; ++d) {
        std::string ds = std::to_string(d), ns = counts[static_cast<size_t>(d - 1)].str();
        text << std::string(3 - ds.size(), ' ') << ds << "  " << ns << "\n";
    }

    if (residual_degree > 0) {
        PlanePotential pot = plane_potential(counts, std::min(residual_degree, dmax));
        bool all_zero = true;
        ordered_json residuals = ordered_json::array();
        for (int i = 0; i < 3; ++i)
            for (int k = 0; k < 3; ++k)
                for (int l = 0; l < 3; ++l)
                    for (int m = 0; m < 3; ++m) {
                        ExpPoly r = wdvv_residual(pot, i, k, l, m, pot.q_max);
                        if (!r.is_zero()) {
                            all_zero = false;
                            if (dump_residual) {
                                ordered_json e;
                                e["indices"] = {i, k, l, m};
                                ordered_json terms = ordered_json::array();
                                for (const auto& [mono, c] : r.terms()) {
                                    ordered_json t;
                                    t["x0"] = mono[0];
                                    t["x1"] = mono[1];
                                    t["x2"] = mono[2];
                                    t["q1"] = mono[3];
                                    t["coeff"] = c.str();
                                    terms.push_back(t);
                                }
                                e["terms"] = terms;
                                residuals.push_back(e);
                            }
                        }
                    }
        j["wdvv_residual_zero_through"] = all_zero ? pot.q_max : -1;
        if (dump_residual) j["wdvv_residuals"] = residuals;
        text << "associativity residual through q1^" << pot.q_max << ": "
             << (all_zero ? "0 (all index choices)" : "NONZERO") << "\n";
    }

    return {j.dump(2) + "\n", text.str()};
}

Report run_hurwitz(int genus, int dmax, bool bruteforce, bool fit, int threads) {
    HurwitzSeries f = connected_series(genus, dmax);

    ordered_json j;
    j["g"] = genus;
    j["dmax"] = dmax;
    j["coeffs"] = ordered_json::array();
    for (const auto& c : f.coeffs) j["coeffs"].push_back(c.str());

    std::ostringstream text;
    text << "simple branched covers of the torus, genus " << genus << "\n";
    text << "F_" << genus << "(q) coefficients, q^1..q^" << dmax << ":\n  ";
    for (size_t i = 0; i < f.coeffs.size(); ++i)
        text << (i ? ", " : "") << f.coeffs[i].str();
    text << "\n";

    if (bruteforce) {
        int b = 2 * genus - 2;
        ordered_json bf = ordered_json::array();
        bool all_match = true;
        int limit = (b <= 2) ? std::min(dmax, 6) : std::min(dmax, 5);
        for (int d = 1; d <= limit; ++d) {
            Rational direct = covers_bruteforce(d, b, /*connected=*/true, threads);
            bool match = direct == f.coeff(d);
            all_match &= match;
            ordered_json row;
            row["d"] = d;
            row["enumerated"] = direct.str();
            row["match"] = match;
            bf.push_back(row);
        }
        j["bruteforce"] = bf;
        j["bruteforce_match"] = all_match;
        text << "transitive enumeration cross-check d <= " << limit << ": "
             << (all_match ? "match" : "MISMATCH") << "\n";
    }

    if (fit) {
        QuasiModularForm qmf = quasimodular_fit(f);
        ordered_json fj;
        fj["weight"] = qmf.weight;
        ordered_json terms;
        for (const auto& t : qmf.terms) {
            std::string key = "E2^" + std::to_string(t.a) + " E4^" + std::to_string(t.b) +
                              " E6^" + std::to_string(t.c);
            terms[key] = t.coeff.str();
        }
        fj["terms"] = terms;
        j["fit"] = fj;
        text << "quasimodular form of weight " << qmf.weight << ":\n";
        for (const auto& t : qmf.terms)
            text << "  " << t.coeff.str() << " * E2^" << t.a << " E4^" << t.b << " E6^" << t.c
                 << "\n";
    }

    return {j.dump(2) + "\n", text.str()};
}

Report run_eisenstein(int k, int order) {
    TruncatedSeries e = eisenstein(k, order);
    ordered_json j;
    j["k"] = k;
    j["order"] = order;
    j["coeffs"] = series_to_json(e);

    std::ostringstream text;
    for (int n = 0; n <= order; ++n) text << (n ? ", " : "") << e.coeff(n).str();
    text << "\n";
    return {j.dump(2) + "\n", text.str()};
}

Report run_ainfty_check(const std::string& structure_json, int arity, bool* all_pass) {
    AInftyCategory c = ainfty_from_json(structure_json);
    auto stasheff = stasheff_check(c, arity);
    auto codersq = coderivation_square(c, arity);
    std::string unit_msg;
    bool units = !c.has_identities() || c.units_strict(&unit_msg);
    bool pass = stasheff.empty() && codersq.empty() && units;
    if (all_pass) *all_pass = pass;

    ordered_json j;
    j["arity"] = arity;
    j["basis_dim"] = c.basis.size();
    j["stasheff_pass"] = stasheff.empty();
    j["coderivation_pass"] = codersq.empty();
    j["verdicts_agree"] = stasheff.empty() == codersq.empty();
    if (c.has_identities()) j["units_strict"] = units;
    ordered_json res = ordered_json::array();
    for (const auto& r : stasheff) {
        ordered_json e;
        e["arity"] = r.arity;
        ordered_json args = ordered_json::array();
        for (int idx : r.args) args.push_back(c.basis[static_cast<size_t>(idx)].name);
        e["args"] = args;
        ordered_json val;
        for (const auto& [idx, coeff] : r.value)
            val[c.basis[static_cast<size_t>(idx)].name] = coeff.str();
        e["residual"] = val;
        res.push_back(e);
    }
    j["stasheff_residuals"] = res;
    j["pass"] = pass;

    std::ostringstream text;
    text << "stasheff identities through arity " << arity << ": "
         << (stasheff.empty() ? "pass" : "FAIL (" + std::to_string(stasheff.size()) +
                                             " residual tuples)")
         << "\n";
    text << "coderivation square: " << (codersq.empty() ? "pass" : "FAIL") << "\n";
    if (c.has_identities())
        text << "strict units: " << (units ? "pass" : "FAIL (" + unit_msg + ")") << "\n";
    return {j.dump(2) + "\n", text.str()};
}

namespace {

std::vector<Geodesic> parse_geodesics(const std::string& slopes, const std::string& offsets) {
    auto split = [](const std::string& s) {
        std::vector<std::string> parts;
        std::string cur;
        for (char ch : s) {
            if (ch == ',') {
                parts.push_back(cur);
                cur.clear();
            } else if (!isspace(static_cast<unsigned char>(ch))) {
                cur.push_back(ch);
            }
        }
        if (!cur.empty()) parts.push_back(cur);
        return parts;
    };
    std::vector<std::string> sl = split(slopes), of = split(offsets);
    if (sl.empty()) throw InvalidArgument("no slopes given");
    if (of.size() != sl.size())
        throw InvalidArgument("need as many offsets as slopes");
    std::vector<Geodesic> gs;
    for (size_t i = 0; i < sl.size(); ++i) {
        auto slash = sl[i].find('/');
        if (slash == std::string::npos)
            throw ParseError("slope must be written p/q, got '" + sl[i] + "'");
        int p = std::stoi(sl[i].substr(0, slash));
        int q = std::stoi(sl[i].substr(slash + 1));
        gs.emplace_back(p, q, Rational::parse(of[i]));
    }
    return gs;
}

}  // namespace

Report run_fukaya(const std::string& slopes, const std::string& offsets, double area_scale,
                  double tol, bool with_associativity) {
    std::vector<Geodesic> gs = parse_geodesics(slopes, offsets);
    if (gs.size() != 3 && gs.size() != 4)
        throw InvalidArgument("need 3 slopes (product) or 4 (associativity)");

    ordered_json j;
    std::ostringstream text;
    j["area_scale"] = area_scale;
    j["tol"] = tol;

    ordered_json homs = ordered_json::array();
    for (size_t a = 0; a < gs.size(); ++a)
        for (size_t b = a + 1; b < gs.size(); ++b) {
            HomBasis basis = intersection_basis(gs[a], gs[b]);
            ordered_json h;
            h["pair"] = {static_cast<int>(a) + 1, static_cast<int>(b) + 1};
            h["points"] = ordered_json::array();
            for (size_t i = 0; i < basis.points.size(); ++i) {
                ordered_json pt;
                pt["x"] = basis.points[i].first.str();
                pt["y"] = basis.points[i].second.str();
                pt["maslov"] = basis.gradings[i];
                h["points"].push_back(pt);
            }
            homs.push_back(h);
            text << "L" << a + 1 << " cap L" << b + 1 << ": " << basis.points.size()
                 << " points, maslov " << basis.gradings[0] << "\n";
        }
    j["homs"] = homs;

    M2Tensor t = m2_constants(gs[0], gs[1], gs[2], area_scale, tol);
    ordered_json tensor = ordered_json::array();
    for (int i1 = 0; i1 < t.n12; ++i1)
        for (int i2 = 0; i2 < t.n23; ++i2)
            for (int i3 = 0; i3 < t.n13; ++i3) {
                const M2Entry& e = t.at(i1, i2, i3);
                ordered_json entry;
                entry["p1"] = i1;
                entry["p2"] = i2;
                entry["q"] = i3;
                entry["value"] = fmt_double(e.value);
                entry["bound"] = fmt_double(e.bound);
                if (e.has_triangles) {
                    entry["a"] = fmt_double(e.a);
                    entry["b"] = fmt_double(e.b);
                }
                tensor.push_back(entry);
            }
    j["m2"] = tensor;
    text << "m2 tensor (" << t.n12 << "x" << t.n23 << "x" << t.n13 << "):\n";
    for (int i1 = 0; i1 < t.n12; ++i1)
        for (int i2 = 0; i2 < t.n23; ++i2)
            for (int i3 = 0; i3 < t.n13; ++i3) {
                const M2Entry& e = t.at(i1, i2, i3);
                text << "  [" << i1 << "," << i2 << "," << i3 << "] = " << fmt_double(e.value)
                     << " (+/- " << fmt_double(e.bound) << ")\n";
            }

    if (gs.size() == 4 && with_associativity) {
        AssociativityResult r =
            associativity_residual(gs[0], gs[1], gs[2], gs[3], area_scale, tol);
        ordered_json a;
        a["max_residual"] = fmt_double(r.max_residual);
        a["bound"] = fmt_double(r.bound);
        a["lhs_nonzero"] = r.lhs_nonzero;
        a["rhs_nonzero"] = r.rhs_nonzero;
        j["associativity"] = a;
        text << "associativity residual: " << fmt_double(r.max_residual) << " (bound "
             << fmt_double(r.bound) << ")\n";
    }

    return {j.dump(2) + "\n", text.str()};
}

}  // namespace mirsym
