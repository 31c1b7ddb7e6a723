#include "ainfty.hpp"

#include <algorithm>
#include <array>
#include <random>

#include "errors.hpp"
#include "json.hpp"
#include "linalg.hpp"

namespace mirsym {

void sparse_add(SparseElem& target, int idx, const Rational& c) {
    if (c.is_zero()) return;
    auto it = std::lower_bound(target.begin(), target.end(), idx,
                               [](const auto& p, int i) { return p.first < i; });
    if (it != target.end() && it->first == idx) {
        it->second += c;
        if (it->second.is_zero()) target.erase(it);
    } else {
        target.insert(it, {idx, c});
    }
}

void sparse_add_scaled(SparseElem& target, const SparseElem& v, const Rational& c) {
    if (c.is_zero()) return;
    for (const auto& [idx, coeff] : v) sparse_add(target, idx, coeff * c);
}

int AInftyCategory::max_arity() const {
    int m = 0;
    for (const auto& [k, table] : ops)
        if (!table.empty()) m = std::max(m, k);
    return m;
}

int AInftyCategory::find_basis(const std::string& name) const {
    for (size_t i = 0; i < basis.size(); ++i)
        if (basis[i].name == name) return static_cast<int>(i);
    return -1;
}

bool AInftyCategory::composable(const std::vector<int>& tuple) const {
    for (size_t i = 0; i + 1 < tuple.size(); ++i)
        if (basis[tuple[i]].dst != basis[tuple[i + 1]].src) return false;
    return true;
}

std::vector<int> AInftyCategory::hom_basis(int src, int dst) const {
    std::vector<int> out;
    for (size_t i = 0; i < basis.size(); ++i)
        if (basis[i].src == src && basis[i].dst == dst) out.push_back(static_cast<int>(i));
    return out;
}

bool AInftyCategory::has_identities() const {
    if (identities.size() != objects.size()) return false;
    for (const auto& id : identities)
        if (id.empty()) return false;
    return true;
}

SparseElem AInftyCategory::apply_m(int k, const std::vector<int>& tuple) const {
    auto oit = ops.find(k);
    if (oit == ops.end()) return {};
    auto it = oit->second.find(tuple);
    if (it == oit->second.end()) return {};
    return it->second;
}

namespace {

int parity(long x) { return static_cast<int>(((x % 2) + 2) % 2); }

int suspension_parity(const AInftyCategory& c, const std::vector<int>& tuple) {
    long e = 0;
    int k = static_cast<int>(tuple.size());
    for (int i = 1; i <= k; ++i)
        e += static_cast<long>(k - i) * (c.basis[tuple[static_cast<size_t>(i - 1)]].degree - 1);
    return parity(e);
}

}  // namespace

SparseElem AInftyCategory::apply_b(int k, const std::vector<int>& tuple) const {
    SparseElem m = apply_m(k, tuple);
    if (m.empty()) return m;
    if (suspension_parity(*this, tuple) == 1)
        for (auto& [idx, c] : m) c = -c;
    return m;
}

void AInftyCategory::validate() const {
    for (const auto& el : basis) {
        if (el.src < 0 || el.src >= static_cast<int>(objects.size()) || el.dst < 0 ||
            el.dst >= static_cast<int>(objects.size()))
            throw InvalidArgument("basis element '" + el.name + "' references a missing object");
    }
    for (const auto& [k, table] : ops) {
        if (k < 1) throw InvalidArgument("operation arity must be >= 1");
        for (const auto& [tuple, out] : table) {
            if (static_cast<int>(tuple.size()) != k)
                throw InvalidArgument("tuple length does not match arity");
            for (int idx : tuple)
                if (idx < 0 || idx >= static_cast<int>(basis.size()))
                    throw InvalidArgument("operation references a missing basis element");
            if (!composable(tuple)) throw InvalidArgument("operation on a non-composable tuple");
            int in_deg = 0;
            for (int idx : tuple) in_deg += basis[idx].degree;
            int want = in_deg + 2 - k;
            int src = basis[tuple.front()].src, dst = basis[tuple.back()].dst;
            for (const auto& [oidx, coeff] : out) {
                (void)coeff;
                const auto& oel = basis[oidx];
                if (oel.degree != want)
                    throw InvalidArgument("m_" + std::to_string(k) + " output '" + oel.name +
                                          "' violates deg m_k = 2 - k");
                if (oel.src != src || oel.dst != dst)
                    throw InvalidArgument("m_" + std::to_string(k) + " output endpoints mismatch");
            }
        }
    }
    if (!identities.empty() && identities.size() != objects.size())
        throw InvalidArgument("identities must be given per object");
    for (size_t o = 0; o < identities.size(); ++o) {
        for (const auto& [idx, coeff] : identities[o]) {
            (void)coeff;
            const auto& el = basis[idx];
            if (el.src != static_cast<int>(o) || el.dst != static_cast<int>(o) || el.degree != 0)
                throw InvalidArgument("identity of object " + objects[o] +
                                      " must be a degree-0 endomorphism");
        }
    }
}

bool AInftyCategory::units_strict(std::string* why) const {
    auto fail = [&](const std::string& msg) {
        if (why) *why = msg;
        return false;
    };
    if (!has_identities()) return fail("identities missing on some object");

    for (size_t i = 0; i < basis.size(); ++i) {
        int idx = static_cast<int>(i);
        const auto& el = basis[i];
        SparseElem want{{idx, Rational(1)}};
        SparseElem left, right;
        for (const auto& [id_idx, id_c] : identities[static_cast<size_t>(el.src)])
            sparse_add_scaled(left, apply_m(2, {id_idx, idx}), id_c);
        for (const auto& [id_idx, id_c] : identities[static_cast<size_t>(el.dst)])
            sparse_add_scaled(right, apply_m(2, {idx, id_idx}), id_c);
        if (left != want) return fail("m_2(id, " + el.name + ") != " + el.name);
        if (right != want) return fail("m_2(" + el.name + ", id) != " + el.name);
    }
    // Units must vanish under substitution into every other operation.
    std::vector<bool> is_unit_component(basis.size(), false);
    for (const auto& id : identities)
        for (const auto& [idx, c] : id) {
            (void)c;
            is_unit_component[static_cast<size_t>(idx)] = true;
        }
    for (const auto& [k, table] : ops) {
        if (k == 2) continue;
        for (const auto& [tuple, out] : table) {
            if (out.empty()) continue;
            for (int idx : tuple)
                if (is_unit_component[static_cast<size_t>(idx)])
                    return fail("identity appears in a nonzero m_" + std::to_string(k));
        }
    }
    return true;
}

AInftyCategory AInftyStructure::as_category() const {
    AInftyCategory c;
    c.objects = {"*"};
    for (const auto& [name, deg] : space) c.basis.push_back({name, deg, 0, 0});
    c.ops = ops;
    c.validate();
    return c;
}

AInftyStructure AInftyStructure::from_category(const AInftyCategory& c) {
    if (c.objects.size() != 1)
        throw InvalidArgument("from_category requires a one-object category");
    AInftyStructure s;
    for (const auto& el : c.basis) s.space.push_back({el.name, el.degree});
    s.ops = c.ops;
    return s;
}

namespace {

void enumerate_composable(const AInftyCategory& c, int len,
                          const std::function<void(const std::vector<int>&)>& visit) {
    std::vector<int> tuple(static_cast<size_t>(len));
    auto rec = [&](auto&& self, int pos) -> void {
        if (pos == len) {
            visit(tuple);
            return;
        }
        for (int i = 0; i < static_cast<int>(c.basis.size()); ++i) {
            if (pos > 0 && c.basis[tuple[static_cast<size_t>(pos - 1)]].dst != c.basis[i].src)
                continue;
            tuple[static_cast<size_t>(pos)] = i;
            self(self, pos + 1);
        }
    };
    rec(rec, 0);
}

// sum over r+s+t = n of b_{r+1+t}(x_1..x_r, b_s(x_{r+1}..x_{r+s}), ...)
// with the Koszul sign (-1)^{sdeg(x_1)+...+sdeg(x_r)} from sliding the
// degree-1 operation past the first r arguments.
SparseElem stasheff_sum(const AInftyCategory& c, const std::vector<int>& tuple) {
    int n = static_cast<int>(tuple.size());
    SparseElem acc;
    for (int s = 1; s <= n; ++s) {
        for (int r = 0; r + s <= n; ++r) {
            long sd = 0;
            for (int i = 0; i < r; ++i) sd += c.basis[tuple[static_cast<size_t>(i)]].degree - 1;
            Rational sign = (parity(sd) == 1) ? Rational(-1) : Rational(1);
            std::vector<int> inner(tuple.begin() + r, tuple.begin() + r + s);
            SparseElem mid = c.apply_b(s, inner);
            for (const auto& [mid_idx, mid_coeff] : mid) {
                std::vector<int> outer;
                outer.reserve(static_cast<size_t>(n - s + 1));
                outer.insert(outer.end(), tuple.begin(), tuple.begin() + r);
                outer.push_back(mid_idx);
                outer.insert(outer.end(), tuple.begin() + r + s, tuple.end());
                SparseElem val = c.apply_b(n - s + 1, outer);
                sparse_add_scaled(acc, val, mid_coeff * sign);
            }
        }
    }
    return acc;
}

}  // namespace

std::vector<StasheffResidual> stasheff_check(const AInftyCategory& c, int up_to_arity) {
    if (up_to_arity < 1) throw InvalidArgument("up_to_arity must be >= 1");
    std::vector<StasheffResidual> residuals;
    for (int n = 1; n <= up_to_arity; ++n) {
        enumerate_composable(c, n, [&](const std::vector<int>& tuple) {
            SparseElem r = stasheff_sum(c, tuple);
            if (!r.empty()) residuals.push_back({n, tuple, r});
        });
    }
    return residuals;
}

namespace {

using WordMap = std::map<std::vector<int>, Rational>;

// The coderivation D on tensor words: apply b_s to every window, Koszul sign
// over the skipped prefix.
WordMap coderivation_apply(const AInftyCategory& c, const std::vector<int>& word) {
    WordMap out;
    int n = static_cast<int>(word.size());
    for (int s = 1; s <= n; ++s) {
        for (int r = 0; r + s <= n; ++r) {
            long sd = 0;
            for (int i = 0; i < r; ++i) sd += c.basis[word[static_cast<size_t>(i)]].degree - 1;
            Rational sign = (parity(sd) == 1) ? Rational(-1) : Rational(1);
            std::vector<int> inner(word.begin() + r, word.begin() + r + s);
            SparseElem mid = c.apply_b(s, inner);
            for (const auto& [mid_idx, mid_coeff] : mid) {
                std::vector<int> next;
                next.reserve(static_cast<size_t>(n - s + 1));
                next.insert(next.end(), word.begin(), word.begin() + r);
                next.push_back(mid_idx);
                next.insert(next.end(), word.begin() + r + s, word.end());
                Rational& slot = out[next];
                slot += mid_coeff * sign;
                if (slot.is_zero()) out.erase(next);
            }
        }
    }
    return out;
}

}  // namespace

std::vector<CoderivationResidual> coderivation_square(const AInftyCategory& c, int max_len) {
    if (max_len < 1) throw InvalidArgument("max_len must be >= 1");
    std::vector<CoderivationResidual> residuals;
    for (int n = 1; n <= max_len; ++n) {
        enumerate_composable(c, n, [&](const std::vector<int>& word) {
            WordMap acc;
            for (const auto& [mid_word, mid_coeff] : coderivation_apply(c, word)) {
                for (const auto& [out_word, out_coeff] : coderivation_apply(c, mid_word)) {
                    Rational& slot = acc[out_word];
                    slot += mid_coeff * out_coeff;
                    if (slot.is_zero()) acc.erase(out_word);
                }
            }
            for (const auto& [out_word, coeff] : acc)
                residuals.push_back({word, out_word, coeff});
        });
    }
    return residuals;
}

const TwistedComplex::Entry* TwistedComplex::entry_at(int index) const {
    for (const auto& e : entries)
        if (e.index == index) return &e;
    return nullptr;
}

namespace {

// Total shift of an entry viewed as an object of the shift-enlarged
// category: the user shift combined with the implicit [-index] placement
// from the Hom formula.
int total_shift(const TwistedComplex::Entry& e) { return e.shift - e.index; }

// b in the shift-enlarged category: (-1)^{total shift of the source object}
// times plain b.
SparseElem apply_b_shifted(const AInftyCategory& c, const std::vector<int>& word,
                           int src_total_shift) {
    SparseElem v = c.apply_b(static_cast<int>(word.size()), word);
    if (parity(src_total_shift) == 1)
        for (auto& [idx, coeff] : v) coeff = -coeff;
    return v;
}

// A chain of differential components: underlying C-basis word, end entry
// index, accumulated coefficient.
struct DiffChain {
    std::vector<int> word;
    int start_index = 0;
    int end_index = 0;
    Rational coeff;
};

// All chains of differentials of t (including empty ones), grouped nowhere;
// the caller filters by endpoints. Strict upper-triangularity bounds the
// length by the number of entries.
std::vector<DiffChain> all_diff_chains(const TwistedComplex& t) {
    std::vector<DiffChain> out;
    for (const auto& e : t.entries) out.push_back({{}, e.index, e.index, Rational(1)});
    size_t head = 0;
    while (head < out.size()) {
        DiffChain cur = out[head++];
        for (const auto& [key, elem] : t.diffs) {
            if (key.first != cur.end_index) continue;
            for (const auto& [bidx, c] : elem) {
                DiffChain next = cur;
                next.word.push_back(bidx);
                next.end_index = key.second;
                next.coeff = cur.coeff * c;
                out.push_back(std::move(next));
            }
        }
    }
    return out;
}

}  // namespace

std::map<std::pair<int, int>, SparseElem> mc_check(const TwistedComplex& t,
                                                   const AInftyCategory& c) {
    for (const auto& [key, elem] : t.diffs) {
        (void)elem;
        if (key.first >= key.second)
            throw InvalidArgument("twisted complex differential must be strictly upper triangular");
        if (!t.entry_at(key.first) || !t.entry_at(key.second))
            throw InvalidArgument("differential references a missing entry");
    }

    std::map<std::pair<int, int>, SparseElem> residual;
    for (const DiffChain& chain : all_diff_chains(t)) {
        if (chain.word.empty()) continue;
        const auto* from = t.entry_at(chain.start_index);
        SparseElem val = apply_b_shifted(c, chain.word, total_shift(*from));
        if (val.empty()) continue;
        auto key = std::make_pair(chain.start_index, chain.end_index);
        SparseElem& slot = residual[key];
        sparse_add_scaled(slot, val, chain.coeff);
        if (slot.empty()) residual.erase(key);
    }
    return residual;
}

AInftyCategory twisted_complex_category(const AInftyCategory& c,
                                        const std::vector<TwistedComplex>& complexes,
                                        int arity_budget) {
    c.validate();
    if (arity_budget < 1) throw InvalidArgument("arity budget must be >= 1");
    for (const auto& t : complexes) {
        if (t.entries.empty()) throw InvalidArgument("twisted complex with no entries");
        for (size_t i = 0; i + 1 < t.entries.size(); ++i)
            if (t.entries[i].index >= t.entries[i + 1].index)
                throw InvalidArgument("twisted complex entries must have increasing indices");
        for (const auto& [key, elem] : t.diffs) {
            const auto* from = t.entry_at(key.first);
            const auto* to = t.entry_at(key.second);
            if (!from || !to) throw InvalidArgument("differential references a missing entry");
            for (const auto& [bidx, coeff] : elem) {
                (void)coeff;
                const auto& el = c.basis[bidx];
                if (el.src != from->object || el.dst != to->object)
                    throw InvalidArgument("differential component endpoints mismatch");
                int tw_deg = el.degree + total_shift(*from) - total_shift(*to);
                if (tw_deg != 1)
                    throw InvalidArgument("differential component has Tw-degree " +
                                          std::to_string(tw_deg) + ", expected 1");
            }
        }
        if (!mc_check(t, c).empty())
            throw MaurerCartanViolated("complex '" + t.name + "' fails Maurer-Cartan");
    }

    AInftyCategory tw;
    for (const auto& t : complexes) tw.objects.push_back(t.name);

    // Hom basis: (source entry, target entry, C-basis element) components.
    struct TwKey {
        int src_cx, dst_cx, from_index, to_index, cbasis;
    };
    std::vector<TwKey> keys;
    std::map<std::array<int, 5>, int> key_index;
    for (size_t a = 0; a < complexes.size(); ++a)
        for (size_t b = 0; b < complexes.size(); ++b)
            for (const auto& ea : complexes[a].entries)
                for (const auto& eb : complexes[b].entries)
                    for (int bidx : c.hom_basis(ea.object, eb.object)) {
                        int tw_deg = c.basis[bidx].degree + total_shift(ea) - total_shift(eb);
                        key_index[{static_cast<int>(a), static_cast<int>(b), ea.index, eb.index,
                                   bidx}] = static_cast<int>(tw.basis.size());
                        keys.push_back({static_cast<int>(a), static_cast<int>(b), ea.index,
                                        eb.index, bidx});
                        tw.basis.push_back(
                            {complexes[a].name + "[" + std::to_string(ea.index) + "]>" +
                                 complexes[b].name + "[" + std::to_string(eb.index) + "]:" +
                                 c.basis[bidx].name,
                             tw_deg, static_cast<int>(a), static_cast<int>(b)});
                    }

    // Identities: sum of the entrywise identities of C, when present.
    if (c.has_identities()) {
        tw.identities.resize(complexes.size());
        for (size_t a = 0; a < complexes.size(); ++a) {
            for (const auto& ea : complexes[a].entries)
                for (const auto& [idc, coeff] : c.identities[static_cast<size_t>(ea.object)]) {
                    auto it = key_index.find({static_cast<int>(a), static_cast<int>(a), ea.index,
                                              ea.index, idc});
                    if (it == key_index.end()) throw InternalError("identity component missing");
                    sparse_add(tw.identities[a], it->second, coeff);
                }
        }
    }

    // Pre-enumerate differential chains per complex, bucketed by start entry.
    std::vector<std::vector<DiffChain>> chains(complexes.size());
    for (size_t a = 0; a < complexes.size(); ++a) chains[a] = all_diff_chains(complexes[a]);

    int c_max = c.max_arity();

    for (int k = 1; k <= arity_budget; ++k) {
        std::map<std::vector<int>, SparseElem> table;
        std::vector<int> tuple(static_cast<size_t>(k));
        auto rec = [&](auto&& self, int pos) -> void {
            if (pos == k) {
                const TwKey& first = keys[static_cast<size_t>(tuple[0])];
                const TwistedComplex& src_cx = complexes[static_cast<size_t>(first.src_cx)];
                int dst_cx = keys[static_cast<size_t>(tuple[static_cast<size_t>(k - 1)])].dst_cx;

                struct State {
                    std::vector<int> word;
                    Rational coeff;
                    int start_entry;
                    int end_entry;
                };
                std::vector<State> states;
                for (const DiffChain& ch0 : chains[static_cast<size_t>(first.src_cx)]) {
                    if (ch0.end_index != first.from_index) continue;
                    states.push_back({ch0.word, ch0.coeff, ch0.start_index, ch0.end_index});
                }
                for (int t = 0; t < k && !states.empty(); ++t) {
                    const TwKey& kt = keys[static_cast<size_t>(tuple[static_cast<size_t>(t)])];
                    bool last_block = (t == k - 1);
                    int next_from =
                        last_block ? -1
                                   : keys[static_cast<size_t>(tuple[static_cast<size_t>(t + 1)])]
                                         .from_index;
                    std::vector<State> next_states;
                    for (const State& st : states) {
                        for (const DiffChain& ch : chains[static_cast<size_t>(kt.dst_cx)]) {
                            if (ch.start_index != kt.to_index) continue;
                            if (!last_block && ch.end_index != next_from) continue;
                            State ns;
                            ns.word = st.word;
                            ns.word.push_back(kt.cbasis);
                            ns.word.insert(ns.word.end(), ch.word.begin(), ch.word.end());
                            ns.coeff = st.coeff * ch.coeff;
                            ns.start_entry = st.start_entry;
                            ns.end_entry = ch.end_index;
                            next_states.push_back(std::move(ns));
                        }
                    }
                    states = std::move(next_states);
                }

                SparseElem b_tw;  // over tw basis
                for (const State& st : states) {
                    if (static_cast<int>(st.word.size()) > c_max) continue;
                    const auto* start = src_cx.entry_at(st.start_entry);
                    SparseElem v = apply_b_shifted(c, st.word, total_shift(*start));
                    for (const auto& [cb, coeff] : v) {
                        auto it = key_index.find(
                            {first.src_cx, dst_cx, st.start_entry, st.end_entry, cb});
                        if (it == key_index.end())
                            throw InternalError("twisted output component missing from hom basis");
                        sparse_add(b_tw, it->second, coeff * st.coeff);
                    }
                }
                if (!b_tw.empty()) {
                    // un-suspend with the Tw degrees to store m^Tw
                    long sd = 0;
                    for (int i = 1; i <= k; ++i)
                        sd += static_cast<long>(k - i) *
                              (tw.basis[tuple[static_cast<size_t>(i - 1)]].degree - 1);
                    if (parity(sd) == 1)
                        for (auto& [idx, coeff] : b_tw) coeff = -coeff;
                    table[tuple] = std::move(b_tw);
                }
                return;
            }
            for (int i = 0; i < static_cast<int>(tw.basis.size()); ++i) {
                if (pos > 0 &&
                    tw.basis[tuple[static_cast<size_t>(pos - 1)]].dst != tw.basis[i].src)
                    continue;
                tuple[static_cast<size_t>(pos)] = i;
                self(self, pos + 1);
            }
        };
        rec(rec, 0);
        if (!table.empty()) tw.ops[k] = std::move(table);
    }

    tw.validate();
    return tw;
}

namespace {

// Dense coordinates of a sparse element over a chosen index list.
std::vector<Rational> densify(const SparseElem& v, const std::vector<int>& index_list) {
    std::vector<Rational> out(index_list.size(), Rational(0));
    for (const auto& [idx, c] : v) {
        auto it = std::find(index_list.begin(), index_list.end(), idx);
        if (it != index_list.end()) out[static_cast<size_t>(it - index_list.begin())] = c;
    }
    return out;
}

// Row-echelon workspace for reducing vectors against a growing span.
struct Span {
    std::vector<std::vector<Rational>> rows;  // each normalized, pivot = 1
    std::vector<size_t> pivots;

    // Reduces v in place against the span; returns true if the remainder is
    // nonzero (i.e. v was independent).
    bool reduce(std::vector<Rational>& v) const {
        for (size_t r = 0; r < rows.size(); ++r) {
            const Rational& c = v[pivots[r]];
            if (c.is_zero()) continue;
            Rational f = c;
            for (size_t j = 0; j < v.size(); ++j) v[j] -= f * rows[r][j];
        }
        for (const Rational& c : v)
            if (!c.is_zero()) return true;
        return false;
    }

    // Reduces and, if independent, inserts; returns true when inserted.
    bool insert(std::vector<Rational> v) {
        if (!reduce(v)) return false;
        size_t p = 0;
        while (v[p].is_zero()) ++p;
        Rational inv = v[p].inv();
        for (Rational& c : v) c *= inv;
        rows.push_back(std::move(v));
        pivots.push_back(p);
        return true;
    }
};

}  // namespace

CohomologyCategory cohomology_category(const AInftyCategory& c) {
    c.validate();
    size_t nobj = c.objects.size();

    // m_1^2 = 0 is a precondition.
    if (c.ops.count(1)) {
        for (const auto& [tuple, out] : c.ops.at(1)) {
            SparseElem sq;
            for (const auto& [mid, coeff] : out) sparse_add_scaled(sq, c.apply_m(1, {mid}), coeff);
            if (!sq.empty())
                throw DifferentialNotSquareZero("m_1^2 != 0 at " + c.basis[tuple[0]].name);
        }
    }

    CohomologyCategory h;
    h.objects = c.objects;
    h.representatives.assign(nobj, std::vector<std::vector<SparseElem>>(nobj));

    struct PairData {
        std::vector<int> deg0;
        Span image;                            // Im(m_1) inside Hom^0
        std::vector<std::vector<Rational>> reps;  // dense over deg0
        Span rep_span;                         // span of the reduced reps
    };
    std::vector<std::vector<PairData>> pd(nobj, std::vector<PairData>(nobj));

    for (size_t x = 0; x < nobj; ++x) {
        for (size_t y = 0; y < nobj; ++y) {
            PairData& p = pd[x][y];
            std::vector<int> all = c.hom_basis(static_cast<int>(x), static_cast<int>(y));
            std::vector<int> degm1, deg1;
            for (int idx : all) {
                if (c.basis[idx].degree == 0) p.deg0.push_back(idx);
                if (c.basis[idx].degree == -1) degm1.push_back(idx);
                if (c.basis[idx].degree == 1) deg1.push_back(idx);
            }
            if (p.deg0.empty()) continue;

            // Ker(m_1) restricted to degree 0: kernel of the |deg1| x |deg0|
            // matrix of m_1.
            Matrix a(deg1.size(), p.deg0.size());
            for (size_t j = 0; j < p.deg0.size(); ++j) {
                std::vector<Rational> col = densify(c.apply_m(1, {p.deg0[j]}), deg1);
                for (size_t i = 0; i < deg1.size(); ++i) a.at(i, j) = col[i];
            }
            std::vector<std::vector<Rational>> ker = kernel_basis(a);

            for (int idx : degm1) {
                std::vector<Rational> im = densify(c.apply_m(1, {idx}), p.deg0);
                p.image.insert(std::move(im));
            }

            for (auto& v : ker) {
                std::vector<Rational> w = v;
                if (!p.image.reduce(w)) continue;  // cohomologous to zero
                if (p.rep_span.insert(w)) {
                    p.reps.push_back(w);
                    SparseElem rep;
                    for (size_t j = 0; j < p.deg0.size(); ++j)
                        sparse_add(rep, p.deg0[j], w[j]);
                    h.representatives[x][y].push_back(std::move(rep));
                }
            }
        }
    }

    // Coordinates of a closed degree-0 element in the representative basis.
    auto coords_in_reps = [&](size_t x, size_t y, const SparseElem& v) {
        const PairData& p = pd[x][y];
        std::vector<Rational> w = densify(v, p.deg0);
        p.image.reduce(w);
        Matrix m(p.deg0.size(), p.reps.size());
        for (size_t j = 0; j < p.reps.size(); ++j)
            for (size_t i = 0; i < p.deg0.size(); ++i) m.at(i, j) = p.reps[j][i];
        auto sol = solve(m, w);
        if (!sol)
            throw InternalError("closed element not expressible in H(C) representatives");
        return *sol;
    };

    // Induced composition tables from m_2 on representatives.
    for (size_t x = 0; x < nobj; ++x)
        for (size_t y = 0; y < nobj; ++y)
            for (size_t z = 0; z < nobj; ++z) {
                const auto& rxy = h.representatives[x][y];
                const auto& ryz = h.representatives[y][z];
                if (rxy.empty() || ryz.empty()) continue;
                std::vector<std::vector<std::vector<Rational>>> table(
                    rxy.size(), std::vector<std::vector<Rational>>(ryz.size()));
                for (size_t i = 0; i < rxy.size(); ++i)
                    for (size_t j = 0; j < ryz.size(); ++j) {
                        SparseElem prod;
                        for (const auto& [bi, ci] : rxy[i])
                            for (const auto& [bj, cj] : ryz[j])
                                sparse_add_scaled(prod, c.apply_m(2, {bi, bj}), ci * cj);
                        table[i][j] = coords_in_reps(x, z, prod);
                    }
                h.composition[{static_cast<int>(x), static_cast<int>(y), static_cast<int>(z)}] =
                    std::move(table);
            }

    // Associativity of the induced composition on all representative triples.
    h.associative = true;
    for (size_t x = 0; x < nobj && h.associative; ++x)
        for (size_t y = 0; y < nobj && h.associative; ++y)
            for (size_t z = 0; z < nobj && h.associative; ++z)
                for (size_t w = 0; w < nobj && h.associative; ++w) {
                    const auto& rxy = h.representatives[x][y];
                    const auto& ryz = h.representatives[y][z];
                    const auto& rzw = h.representatives[z][w];
                    const auto& rxw = h.representatives[x][w];
                    if (rxy.empty() || ryz.empty() || rzw.empty()) continue;
                    auto c1 = h.composition.find({(int)x, (int)y, (int)z});
                    auto c2 = h.composition.find({(int)x, (int)z, (int)w});
                    auto c3 = h.composition.find({(int)y, (int)z, (int)w});
                    auto c4 = h.composition.find({(int)x, (int)y, (int)w});
                    for (size_t i = 0; i < rxy.size(); ++i)
                        for (size_t j = 0; j < ryz.size(); ++j)
                            for (size_t k = 0; k < rzw.size(); ++k) {
                                std::vector<Rational> lhs(rxw.size(), Rational(0));
                                std::vector<Rational> rhs(rxw.size(), Rational(0));
                                if (c1 != h.composition.end() && c2 != h.composition.end()) {
                                    const auto& t1 = c1->second[i][j];
                                    for (size_t r = 0; r < t1.size(); ++r)
                                        if (!t1[r].is_zero())
                                            for (size_t s = 0; s < rxw.size(); ++s)
                                                lhs[s] += t1[r] * c2->second[r][k][s];
                                }
                                if (c3 != h.composition.end() && c4 != h.composition.end()) {
                                    const auto& t3 = c3->second[j][k];
                                    for (size_t t = 0; t < t3.size(); ++t)
                                        if (!t3[t].is_zero())
                                            for (size_t s = 0; s < rxw.size(); ++s)
                                                rhs[s] += t3[t] * c4->second[i][t][s];
                                }
                                if (lhs != rhs) h.associative = false;
                            }
                }

    // Identity laws with [id], when identities are present.
    h.identities_ok = true;
    if (c.has_identities()) {
        for (size_t x = 0; x < nobj && h.identities_ok; ++x) {
            if (h.representatives[x][x].empty()) {
                // the identity must be cohomologous to zero only if H^0(x,x)=0
                std::vector<Rational> w =
                    densify(c.identities[x], pd[x][x].deg0);
                if (pd[x][x].image.reduce(w)) h.identities_ok = false;
                continue;
            }
            std::vector<Rational> e = coords_in_reps(x, x, c.identities[x]);
            for (size_t y = 0; y < nobj && h.identities_ok; ++y) {
                const auto& rxy = h.representatives[x][y];
                auto cl = h.composition.find({(int)x, (int)x, (int)y});
                if (cl != h.composition.end())
                    for (size_t j = 0; j < rxy.size(); ++j) {
                        std::vector<Rational> v(rxy.size(), Rational(0));
                        for (size_t i = 0; i < e.size(); ++i)
                            if (!e[i].is_zero())
                                for (size_t s = 0; s < rxy.size(); ++s)
                                    v[s] += e[i] * cl->second[i][j][s];
                        std::vector<Rational> want(rxy.size(), Rational(0));
                        want[j] = Rational(1);
                        if (v != want) h.identities_ok = false;
                    }
                const auto& ryx = h.representatives[y][x];
                auto cr = h.composition.find({(int)y, (int)x, (int)x});
                if (cr != h.composition.end())
                    for (size_t j = 0; j < ryx.size(); ++j) {
                        std::vector<Rational> v(ryx.size(), Rational(0));
                        for (size_t i = 0; i < e.size(); ++i)
                            if (!e[i].is_zero())
                                for (size_t s = 0; s < ryx.size(); ++s)
                                    v[s] += e[i] * cr->second[j][i][s];
                        std::vector<Rational> want(ryx.size(), Rational(0));
                        want[j] = Rational(1);
                        if (v != want) h.identities_ok = false;
                    }
            }
        }
    }

    return h;
}

AInftyCategory gauge_transport(const AInftyCategory& c, unsigned seed, int max_arity) {
    c.validate();
    if (c.objects.size() != 1)
        throw InvalidArgument("gauge_transport implemented for one-object categories");
    if (max_arity < 1) throw InvalidArgument("max_arity must be >= 1");

    int nb = static_cast<int>(c.basis.size());
    std::mt19937 rng(seed);
    std::uniform_int_distribution<int> coin(0, 2);
    std::uniform_int_distribution<long> num(-2, 2);
    std::uniform_int_distribution<long> den(1, 2);

    // Random components f_k: (sA)^{otimes k} -> sA of s-degree 0, f_1 = id.
    std::map<int, std::map<std::vector<int>, SparseElem>> f;
    for (int k = 2; k <= max_arity; ++k) {
        std::map<std::vector<int>, SparseElem> table;
        std::vector<int> tuple(static_cast<size_t>(k), 0);
        while (true) {
            long sdeg = 0;
            for (int idx : tuple) sdeg += c.basis[static_cast<size_t>(idx)].degree - 1;
            SparseElem out;
            for (int o = 0; o < nb; ++o) {
                if (c.basis[static_cast<size_t>(o)].degree - 1 != sdeg) continue;
                if (coin(rng) == 0) {
                    Rational r(num(rng), den(rng));
                    if (!r.is_zero()) sparse_add(out, o, r);
                }
            }
            if (!out.empty()) table[tuple] = out;
            // advance the odometer
            int pos = k - 1;
            while (pos >= 0 && tuple[static_cast<size_t>(pos)] == nb - 1) {
                tuple[static_cast<size_t>(pos)] = 0;
                --pos;
            }
            if (pos < 0) break;
            ++tuple[static_cast<size_t>(pos)];
        }
        if (!table.empty()) f[k] = std::move(table);
    }

    auto apply_f_block = [&](const std::vector<int>& block) -> SparseElem {
        int len = static_cast<int>(block.size());
        if (len == 1) return {{block[0], Rational(1)}};
        auto fit = f.find(len);
        if (fit == f.end()) return {};
        auto it = fit->second.find(block);
        if (it == fit->second.end()) return {};
        return it->second;
    };

    // F on a word: sum over compositions into blocks (f's have s-degree 0,
    // so no Koszul signs arise).
    std::function<WordMap(const std::vector<int>&)> apply_F =
        [&](const std::vector<int>& word) -> WordMap {
        WordMap out;
        if (word.empty()) {
            out[{}] = Rational(1);
            return out;
        }
        int n = static_cast<int>(word.size());
        for (int l = 1; l <= n; ++l) {
            std::vector<int> block(word.begin(), word.begin() + l);
            SparseElem head = apply_f_block(block);
            if (head.empty()) continue;
            std::vector<int> rest(word.begin() + l, word.end());
            WordMap tail = apply_F(rest);
            for (const auto& [hidx, hc] : head)
                for (const auto& [tword, tc] : tail) {
                    std::vector<int> w;
                    w.reserve(1 + tword.size());
                    w.push_back(hidx);
                    w.insert(w.end(), tword.begin(), tword.end());
                    Rational& slot = out[w];
                    slot += hc * tc;
                    if (slot.is_zero()) out.erase(w);
                }
        }
        return out;
    };

    auto apply_map = [](const std::function<WordMap(const std::vector<int>&)>& op,
                        const WordMap& v) -> WordMap {
        WordMap out;
        for (const auto& [word, coeff] : v) {
            for (const auto& [w2, c2] : op(word)) {
                Rational& slot = out[w2];
                slot += coeff * c2;
                if (slot.is_zero()) out.erase(w2);
            }
        }
        return out;
    };

    // F^{-1} via the Neumann series: F = I + G with G strictly
    // length-decreasing, so F^{-1} = sum (-G)^j.
    auto apply_G = [&](const WordMap& v) -> WordMap {
        WordMap fw = apply_map(apply_F, v);
        for (const auto& [word, coeff] : v) {
            Rational& slot = fw[word];
            slot -= coeff;
            if (slot.is_zero()) fw.erase(word);
        }
        return fw;
    };
    auto apply_F_inv = [&](const WordMap& v) -> WordMap {
        WordMap total = v;
        WordMap cur = v;
        Rational sign(1);
        while (true) {
            cur = apply_G(cur);
            if (cur.empty()) break;
            sign = -sign;
            for (const auto& [word, coeff] : cur) {
                Rational& slot = total[word];
                slot += coeff * sign;
                if (slot.is_zero()) total.erase(word);
            }
        }
        return total;
    };

    // Transported b'_k: the length-1 corestriction of F^{-1} D F.
    AInftyCategory out;
    out.objects = c.objects;
    out.basis = c.basis;
    out.identities = c.identities;
    for (int k = 1; k <= max_arity; ++k) {
        std::map<std::vector<int>, SparseElem> table;
        enumerate_composable(c, k, [&](const std::vector<int>& tuple) {
            WordMap fw = apply_F(tuple);
            WordMap dfw;
            for (const auto& [word, coeff] : fw)
                for (const auto& [w2, c2] : coderivation_apply(c, word)) {
                    Rational& slot = dfw[w2];
                    slot += coeff * c2;
                    if (slot.is_zero()) dfw.erase(w2);
                }
            WordMap res = apply_F_inv(dfw);
            SparseElem b_out;
            for (const auto& [word, coeff] : res)
                if (word.size() == 1) sparse_add(b_out, word[0], coeff);
            if (b_out.empty()) return;
            // un-suspend to store m'_k
            if (suspension_parity(c, tuple) == 1)
                for (auto& [idx, coeff] : b_out) coeff = -coeff;
            table[tuple] = std::move(b_out);
        });
        if (!table.empty()) out.ops[k] = std::move(table);
    }
    out.validate();
    return out;
}

namespace {

using nlohmann::ordered_json;

SparseElem parse_elem(const ordered_json& j, const AInftyCategory& c) {
    SparseElem out;
    if (!j.is_array()) throw ParseError("element value must be an array of {elem, coeff}");
    for (const auto& term : j) {
        if (!term.contains("elem") || !term.contains("coeff"))
            throw ParseError("element term needs 'elem' and 'coeff'");
        int idx = c.find_basis(term["elem"].get<std::string>());
        if (idx < 0) throw ParseError("unknown basis element '" +
                                      term["elem"].get<std::string>() + "'");
        sparse_add(out, idx, Rational::parse(term["coeff"].get<std::string>()));
    }
    return out;
}

ordered_json elem_to_json(const SparseElem& v, const AInftyCategory& c) {
    ordered_json arr = ordered_json::array();
    for (const auto& [idx, coeff] : v) {
        ordered_json t;
        t["elem"] = c.basis[static_cast<size_t>(idx)].name;
        t["coeff"] = coeff.str();
        arr.push_back(t);
    }
    return arr;
}

}  // namespace

AInftyCategory ainfty_from_json(const std::string& text) {
    ordered_json j;
    try {
        j = ordered_json::parse(text);
    } catch (const std::exception& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }

    AInftyCategory c;
    if (j.contains("objects"))
        for (const auto& o : j["objects"]) c.objects.push_back(o.get<std::string>());
    if (c.objects.empty()) c.objects = {"*"};

    if (!j.contains("basis") || !j["basis"].is_array())
        throw ParseError("'basis' array is required");
    for (const auto& b : j["basis"]) {
        GradedBasisElement el;
        el.name = b.at("name").get<std::string>();
        el.degree = b.at("degree").get<int>();
        auto find_obj = [&](const std::string& name) {
            for (size_t i = 0; i < c.objects.size(); ++i)
                if (c.objects[i] == name) return static_cast<int>(i);
            throw ParseError("unknown object '" + name + "'");
        };
        el.src = b.contains("src") ? find_obj(b["src"].get<std::string>()) : 0;
        el.dst = b.contains("dst") ? find_obj(b["dst"].get<std::string>()) : 0;
        if (c.find_basis(el.name) >= 0) throw ParseError("duplicate basis name '" + el.name + "'");
        c.basis.push_back(el);
    }

    if (j.contains("identities")) {
        c.identities.assign(c.objects.size(), SparseElem{});
        for (const auto& [obj_name, val] : j["identities"].items()) {
            int obj = -1;
            for (size_t i = 0; i < c.objects.size(); ++i)
                if (c.objects[i] == obj_name) obj = static_cast<int>(i);
            if (obj < 0) throw ParseError("unknown object '" + obj_name + "' in identities");
            if (val.is_string()) {
                int idx = c.find_basis(val.get<std::string>());
                if (idx < 0) throw ParseError("unknown identity element");
                c.identities[static_cast<size_t>(obj)] = {{idx, Rational(1)}};
            } else {
                c.identities[static_cast<size_t>(obj)] = parse_elem(val, c);
            }
        }
    }

    if (j.contains("ops")) {
        for (const auto& op : j["ops"]) {
            if (!op.contains("args")) throw ParseError("op needs 'args'");
            std::vector<int> tuple;
            for (const auto& a : op["args"]) {
                int idx = c.find_basis(a.get<std::string>());
                if (idx < 0)
                    throw ParseError("unknown basis element '" + a.get<std::string>() + "'");
                tuple.push_back(idx);
            }
            if (tuple.empty()) throw ParseError("op with empty args");
            SparseElem out = parse_elem(op.at("out"), c);
            if (out.empty()) continue;
            auto& table = c.ops[static_cast<int>(tuple.size())];
            if (table.count(tuple)) throw ParseError("duplicate op tuple");
            table[tuple] = out;
        }
    }

    c.validate();
    return c;
}

std::string ainfty_to_json(const AInftyCategory& c) {
    ordered_json j;
    j["objects"] = c.objects;
    j["basis"] = ordered_json::array();
    for (const auto& el : c.basis) {
        ordered_json b;
        b["name"] = el.name;
        b["degree"] = el.degree;
        b["src"] = c.objects[static_cast<size_t>(el.src)];
        b["dst"] = c.objects[static_cast<size_t>(el.dst)];
        j["basis"].push_back(b);
    }
    if (c.has_identities()) {
        ordered_json ids;
        for (size_t o = 0; o < c.objects.size(); ++o)
            ids[c.objects[o]] = elem_to_json(c.identities[o], c);
        j["identities"] = ids;
    }
    j["ops"] = ordered_json::array();
    for (const auto& [k, table] : c.ops) {
        (void)k;
        for (const auto& [tuple, out] : table) {
            ordered_json op;
            op["args"] = ordered_json::array();
            for (int idx : tuple) op["args"].push_back(c.basis[static_cast<size_t>(idx)].name);
            op["out"] = elem_to_json(out, c);
            j["ops"].push_back(op);
        }
    }
    return j.dump(2);
}

TwistedComplex twisted_from_json(const std::string& text, const AInftyCategory& c) {
    ordered_json j;
    try {
        j = ordered_json::parse(text);
    } catch (const std::exception& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
    TwistedComplex t;
    if (j.contains("name")) t.name = j["name"].get<std::string>();
    if (!j.contains("entries")) throw ParseError("'entries' array is required");
    for (const auto& e : j["entries"]) {
        TwistedComplex::Entry entry;
        entry.index = e.at("index").get<int>();
        std::string obj = e.at("object").get<std::string>();
        entry.object = -1;
        for (size_t i = 0; i < c.objects.size(); ++i)
            if (c.objects[i] == obj) entry.object = static_cast<int>(i);
        if (entry.object < 0) throw ParseError("unknown object '" + obj + "'");
        entry.shift = e.contains("shift") ? e["shift"].get<int>() : 0;
        t.entries.push_back(entry);
    }
    if (j.contains("diffs")) {
        for (const auto& d : j["diffs"]) {
            int from = d.at("from").get<int>();
            int to = d.at("to").get<int>();
            t.diffs[{from, to}] = parse_elem(d.at("value"), c);
        }
    }
    return t;
}

}  // namespace mirsym
