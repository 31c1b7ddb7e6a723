#include "hurwitz.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <thread>

#include "errors.hpp"
#include "linalg.hpp"

namespace mirsym {

std::vector<std::vector<int>> partitions_of(int d) {
    if (d < 0) throw InvalidArgument("partitions of a negative integer");
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    // Recursive descent with a max-part bound keeps parts weakly decreasing.
    auto rec = [&](auto&& self, int rem, int max_part) -> void {
        if (rem == 0) {
            out.push_back(cur);
            return;
        }
        for (int p = std::min(rem, max_part); p >= 1; --p) {
            cur.push_back(p);
            self(self, rem - p, p);
            cur.pop_back();
        }
    };
    rec(rec, d, d);
    return out;
}

Rational central_character_f2(const std::vector<int>& lambda) {
    Rational acc(0);
    for (size_t i = 0; i < lambda.size(); ++i) {
        long li = lambda[i];
        long row = static_cast<long>(i) + 1;
        acc += Rational(li * (li - 2 * row + 1), 2);
    }
    return acc;
}

Rational covers_disconnected_weighted(int d, int b) {
    if (d < 1 || b < 0) throw InvalidArgument("need d >= 1, b >= 0");
    Rational acc(0);
    for (const auto& lambda : partitions_of(d))
        acc += central_character_f2(lambda).pow(static_cast<unsigned>(b));
    return acc;
}

namespace {

using Perm = std::vector<uint8_t>;

std::vector<Perm> all_permutations(int d) {
    Perm p(static_cast<size_t>(d));
    std::iota(p.begin(), p.end(), 0);
    std::vector<Perm> out;
    do {
        out.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    return out;
}

Perm mul(const Perm& p, const Perm& q) {  // (p*q)(i) = p(q(i))
    Perm r(p.size());
    for (size_t i = 0; i < p.size(); ++i) r[i] = p[q[i]];
    return r;
}

Perm inverse(const Perm& p) {
    Perm r(p.size());
    for (size_t i = 0; i < p.size(); ++i) r[p[i]] = static_cast<uint8_t>(i);
    return r;
}

bool is_transposition(const Perm& p) {
    int moved = 0;
    for (size_t i = 0; i < p.size(); ++i)
        if (p[i] != i) ++moved;
    // a permutation moving exactly two points is the transposition of them
    return moved == 2;
}

struct UnionFind {
    std::array<uint8_t, 8> parent{};
    void reset(int n) {
        for (int i = 0; i < n; ++i) parent[i] = static_cast<uint8_t>(i);
    }
    int find(int x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    }
    void unite(int a, int b) { parent[find(a)] = static_cast<uint8_t>(find(b)); }
};

bool transitive(const std::vector<const Perm*>& gens, int d) {
    UnionFind uf;
    uf.reset(d);
    for (const Perm* g : gens)
        for (int i = 0; i < d; ++i) uf.unite(i, (*g)[i]);
    int root = uf.find(0);
    for (int i = 1; i < d; ++i)
        if (uf.find(i) != root) return false;
    return true;
}

// Counts solutions with alpha restricted to [a_lo, a_hi).
uint64_t brute_range(const std::vector<Perm>& sym, const std::vector<Perm>& transpositions,
                     int d, int b, bool connected, size_t a_lo, size_t a_hi) {
    uint64_t count = 0;
    std::vector<int> tau_idx(static_cast<size_t>(std::max(0, b - 1)), 0);
    for (size_t ai = a_lo; ai < a_hi; ++ai) {
        const Perm& alpha = sym[ai];
        Perm alpha_inv = inverse(alpha);
        for (const Perm& beta : sym) {
            Perm comm = mul(mul(alpha, beta), mul(alpha_inv, inverse(beta)));
            if (b == 0) {
                bool ok = true;
                for (size_t i = 0; i < comm.size(); ++i)
                    if (comm[i] != i) { ok = false; break; }
                if (!ok) continue;
                if (connected && !transitive({&alpha, &beta}, d)) continue;
                ++count;
                continue;
            }
            // Iterate the b-1 free transpositions; the last one is forced.
            size_t free_slots = static_cast<size_t>(b - 1);
            std::vector<Perm> partial(free_slots + 1);
            partial[0] = comm;
            std::fill(tau_idx.begin(), tau_idx.end(), 0);
            size_t depth = 0;
            while (true) {
                if (depth == free_slots) {
                    const Perm& prod = partial[depth];
                    if (is_transposition(prod)) {  // tau_b = prod^{-1} = prod
                        bool ok = true;
                        if (connected) {
                            std::vector<const Perm*> gens{&alpha, &beta, &prod};
                            for (size_t s = 0; s < free_slots; ++s)
                                gens.push_back(&transpositions[static_cast<size_t>(tau_idx[s])]);
                            ok = transitive(gens, d);
                        }
                        if (ok) ++count;
                    }
                    if (free_slots == 0) break;
                    --depth;
                    ++tau_idx[depth];
                    continue;
                }
                if (tau_idx[depth] == static_cast<int>(transpositions.size())) {
                    if (depth == 0) break;
                    tau_idx[depth] = 0;
                    --depth;
                    ++tau_idx[depth];
                    continue;
                }
                partial[depth + 1] =
                    mul(partial[depth], transpositions[static_cast<size_t>(tau_idx[depth])]);
                ++depth;
            }
        }
    }
    return count;
}

}  // namespace

Rational covers_bruteforce(int d, int b, bool connected, int threads) {
    if (d < 1 || b < 0) throw InvalidArgument("need d >= 1, b >= 0");
    bool within_budget = (b <= 2 && d <= 6) || (b <= 4 && d <= 5);
    if (!within_budget)
        throw BudgetExceeded("enumeration limited to d <= 6 for b <= 2, d <= 5 for b <= 4");

    std::vector<Perm> sym = all_permutations(d);
    std::vector<Perm> transpositions;
    for (const Perm& p : sym)
        if (is_transposition(p)) transpositions.push_back(p);
    if (b >= 1 && transpositions.empty()) return Rational(0);

    size_t n = sym.size();
    uint64_t total = 0;
    if (threads <= 1 || n < 64) {
        total = brute_range(sym, transpositions, d, b, connected, 0, n);
    } else {
        size_t workers = std::min<size_t>(static_cast<size_t>(threads), n);
        std::vector<uint64_t> partial(workers, 0);
        std::vector<std::thread> pool;
        for (size_t w = 0; w < workers; ++w) {
            size_t lo = n * w / workers, hi = n * (w + 1) / workers;
            pool.emplace_back([&, w, lo, hi] {
                partial[w] = brute_range(sym, transpositions, d, b, connected, lo, hi);
            });
        }
        for (auto& t : pool) t.join();
        for (uint64_t c : partial) total += c;  // exact integer sum: order-independent
    }
    return Rational(mpz_class(static_cast<unsigned long>(total)), factorial(static_cast<unsigned>(d)));
}

HurwitzSeries connected_series(int g, int dmax) {
    if (g < 2) throw InvalidArgument("connected_series requires g >= 2");
    if (dmax < 1) throw InvalidArgument("dmax must be >= 1");
    int ub = 2 * g - 2;  // track u^0..u^{2g-2}

    // Z[d][b] = coefficient of q^d u^b in sum_lambda q^|lambda| e^{u f_2}.
    std::vector<std::vector<Rational>> z(static_cast<size_t>(dmax) + 1,
                                         std::vector<Rational>(static_cast<size_t>(ub) + 1));
    z[0][0] = Rational(1);
    for (int d = 1; d <= dmax; ++d) {
        for (const auto& lambda : partitions_of(d)) {
            Rational f2 = central_character_f2(lambda);
            Rational pw(1), fact(1);
            for (int b = 0; b <= ub; ++b) {
                if (b > 0) {
                    pw *= f2;
                    fact *= Rational(b);
                }
                z[static_cast<size_t>(d)][static_cast<size_t>(b)] += pw / fact;
            }
        }
    }

    // log(1 + W) = sum (-1)^{m+1} W^m / m with W the positive-q part.
    auto mul_qu = [&](const std::vector<std::vector<Rational>>& a,
                      const std::vector<std::vector<Rational>>& b) {
        std::vector<std::vector<Rational>> r(static_cast<size_t>(dmax) + 1,
                                             std::vector<Rational>(static_cast<size_t>(ub) + 1));
        for (int da = 0; da <= dmax; ++da)
            for (int ba = 0; ba <= ub; ++ba) {
                const Rational& ca = a[static_cast<size_t>(da)][static_cast<size_t>(ba)];
                if (ca.is_zero()) continue;
                for (int db = 0; da + db <= dmax; ++db)
                    for (int bb = 0; ba + bb <= ub; ++bb) {
                        const Rational& cb = b[static_cast<size_t>(db)][static_cast<size_t>(bb)];
                        if (cb.is_zero()) continue;
                        r[static_cast<size_t>(da + db)][static_cast<size_t>(ba + bb)] += ca * cb;
                    }
            }
        return r;
    };

    std::vector<std::vector<Rational>> w = z;
    w[0][0] = Rational(0);
    std::vector<std::vector<Rational>> logz(static_cast<size_t>(dmax) + 1,
                                            std::vector<Rational>(static_cast<size_t>(ub) + 1));
    std::vector<std::vector<Rational>> wpow = w;
    Rational sign(1);
    for (int m = 1; m <= dmax; ++m) {
        for (int d = 0; d <= dmax; ++d)
            for (int b = 0; b <= ub; ++b)
                logz[static_cast<size_t>(d)][static_cast<size_t>(b)] +=
                    wpow[static_cast<size_t>(d)][static_cast<size_t>(b)] * sign / Rational(m);
        if (m < dmax) wpow = mul_qu(wpow, w);
        sign = -sign;
    }

    HurwitzSeries f;
    f.g = g;
    f.dmax = dmax;
    Rational bfact(factorial(static_cast<unsigned>(ub)));
    for (int d = 1; d <= dmax; ++d)
        f.coeffs.push_back(logz[static_cast<size_t>(d)][static_cast<size_t>(ub)] * bfact);
    return f;
}

TruncatedSeries eisenstein(int k, int order) {
    Rational bk;
    switch (k) {
        case 2: bk = Rational(1, 6); break;
        case 4: bk = Rational(-1, 30); break;
        case 6: bk = Rational(1, 42); break;
        default: throw UnsupportedWeight("k must be 2, 4 or 6, got " + std::to_string(k));
    }
    Rational factor = Rational(2 * k) / bk;
    TruncatedSeries e = TruncatedSeries::one(order);
    for (int n = 1; n <= order; ++n) {
        mpz_class sigma(0);
        for (int a = 1; a <= n; ++a) {
            if (n % a != 0) continue;
            mpz_class ap;
            mpz_ui_pow_ui(ap.get_mpz_t(), static_cast<unsigned long>(a),
                          static_cast<unsigned long>(k - 1));
            sigma += ap;
        }
        e.set_coeff(n, -factor * Rational(sigma));
    }
    return e;
}

std::vector<std::array<int, 3>> qmf_monomials(int weight) {
    std::vector<std::array<int, 3>> out;
    for (int a = weight / 2; a >= 0; --a)
        for (int b = (weight - 2 * a) / 4; b >= 0; --b) {
            int rem = weight - 2 * a - 4 * b;
            if (rem >= 0 && rem % 6 == 0) out.push_back({a, b, rem / 6});
        }
    return out;
}

TruncatedSeries qmf_q_expansion(const QuasiModularForm& f, int order) {
    TruncatedSeries e2 = eisenstein(2, order);
    TruncatedSeries e4 = eisenstein(4, order);
    TruncatedSeries e6 = eisenstein(6, order);
    TruncatedSeries acc(order);
    for (const QmfTerm& t : f.terms) {
        TruncatedSeries m = TruncatedSeries::one(order);
        for (int i = 0; i < t.a; ++i) m = m * e2;
        for (int i = 0; i < t.b; ++i) m = m * e4;
        for (int i = 0; i < t.c; ++i) m = m * e6;
        acc = acc + m * t.coeff;
    }
    return acc;
}

QuasiModularForm quasimodular_fit(const HurwitzSeries& f) {
    int weight = 6 * f.g - 6;
    std::vector<std::array<int, 3>> monos = qmf_monomials(weight);
    size_t dim = monos.size();
    if (f.dmax < static_cast<int>(dim) + 3)
        throw InvalidArgument("need at least dim + 3 coefficients for a validated fit");

    // q-expansions of the basis monomials through q^dmax.
    std::vector<TruncatedSeries> basis;
    basis.reserve(dim);
    for (const auto& m : monos) {
        QuasiModularForm g;
        g.weight = weight;
        g.terms.push_back({m[0], m[1], m[2], Rational(1)});
        basis.push_back(qmf_q_expansion(g, f.dmax));
    }

    // Square system: constant term must vanish, plus the first dim-1
    // q-coefficients of F.
    Matrix a(dim, dim);
    std::vector<Rational> rhs(dim, Rational(0));
    for (size_t j = 0; j < dim; ++j) a.at(0, j) = basis[j].coeff(0);
    for (size_t r = 1; r < dim; ++r) {
        for (size_t j = 0; j < dim; ++j) a.at(r, j) = basis[j].coeff(static_cast<int>(r));
        rhs[r] = f.coeff(static_cast<int>(r));
    }
    bool unique = false;
    auto sol = solve(a, rhs, &unique);
    if (!sol) throw NoSolution("minimal system inconsistent");
    if (!unique) throw UnderDetermined("minimal system singular");

    // Validate on every remaining coefficient.
    for (int d = static_cast<int>(dim); d <= f.dmax; ++d) {
        Rational acc(0);
        for (size_t j = 0; j < dim; ++j) acc += (*sol)[j] * basis[j].coeff(d);
        if (acc != f.coeff(d))
            throw NoSolution("fit fails held-out coefficient q^" + std::to_string(d));
    }

    QuasiModularForm out;
    out.weight = weight;
    for (size_t j = 0; j < dim; ++j)
        if (!(*sol)[j].is_zero()) out.terms.push_back({monos[j][0], monos[j][1], monos[j][2], (*sol)[j]});
    return out;
}

}  // namespace mirsym
