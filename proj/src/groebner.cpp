#include "kohn/groebner.hpp"

#include <algorithm>
#include <set>
#include <tuple>

namespace kohn {

namespace {

void check_degree(const Polynomial& p, const ResourceCaps& caps) {
    if (p.total_degree() > caps.max_degree)
        throw CapExceeded(CapExceeded::Which::Degree,
                          "degree cap exceeded during reduction (max_degree=" +
                              std::to_string(caps.max_degree) + ")");
}

} // namespace

Polynomial normal_form(const Polynomial& p, const std::vector<Polynomial>& basis,
                       const MonomialOrder& order, const ResourceCaps& caps) {
    std::vector<std::pair<Monomial, GaussianRational>> lts;
    lts.reserve(basis.size());
    for (const auto& g : basis) {
        if (g.is_zero()) throw std::invalid_argument("normal_form: zero divisor in basis");
        lts.push_back(leading_term(g, order));
    }
    Polynomial work = p;
    Polynomial rem(p.nvars());
    check_degree(work, caps);
    while (!work.is_zero()) {
        auto [wm, wc] = leading_term(work, order);
        bool reduced = false;
        for (size_t i = 0; i < basis.size(); ++i) {
            if (!lts[i].first.divides(wm)) continue;
            Monomial q = wm / lts[i].first;
            GaussianRational c = wc / lts[i].second;
            work = work - Polynomial::term(p.nvars(), q, c) * basis[i];
            check_degree(work, caps);
            reduced = true;
            break;
        }
        if (!reduced) {
            rem.add_term(wm, wc);
            work.add_term(wm, -wc);
        }
    }
    return rem;
}

namespace {

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g, const MonomialOrder& order) {
    auto [mf, cf] = leading_term(f, order);
    auto [mg, cg] = leading_term(g, order);
    Monomial l = lcm(mf, mg);
    Polynomial a = Polynomial::term(f.nvars(), l / mf, cf.inverse()) * f;
    Polynomial b = Polynomial::term(g.nvars(), l / mg, cg.inverse()) * g;
    return a - b;
}

struct PairKey {
    int deg;
    std::vector<int> lcm_exps;
    size_t i, j;
    bool operator<(const PairKey& o) const {
        return std::tie(deg, lcm_exps, i, j) < std::tie(o.deg, o.lcm_exps, o.i, o.j);
    }
};

} // namespace

std::vector<Polynomial> buchberger(const std::vector<Polynomial>& generators,
                                   const MonomialOrder& order, const ResourceCaps& caps) {
    std::vector<Polynomial> basis;
    for (const auto& g : generators) {
        if (g.is_zero()) continue;
        check_degree(g, caps);
        basis.push_back(make_monic(g, order));
    }
    if (basis.empty()) return {};

    std::vector<Monomial> lms;
    lms.reserve(basis.size());
    for (const auto& g : basis) lms.push_back(leading_monomial(g, order));

    std::set<PairKey> queue;
    std::set<std::pair<size_t, size_t>> done;
    auto push_pair = [&](size_t i, size_t j) {
        // S-pairs of two single-term generators vanish identically.
        if (basis[i].is_single_term() && basis[j].is_single_term()) {
            done.emplace(i, j);
            return;
        }
        Monomial l = lcm(lms[i], lms[j]);
        queue.insert(PairKey{l.total_degree(), l.exps, i, j});
    };
    for (size_t j = 1; j < basis.size(); ++j)
        for (size_t i = 0; i < j; ++i) push_pair(i, j);

    long processed = 0;
    while (!queue.empty()) {
        PairKey pk = *queue.begin();
        queue.erase(queue.begin());
        size_t i = pk.i, j = pk.j;
        done.emplace(i, j);

        // Buchberger criterion 1: coprime leading monomials.
        if (coprime(lms[i], lms[j])) continue;
        // Buchberger criterion 2 (chain): some k with LT(k) | lcm(i,j) whose
        // pairs with both i and j are already treated.
        Monomial l = lcm(lms[i], lms[j]);
        bool skip = false;
        for (size_t k = 0; k < basis.size() && !skip; ++k) {
            if (k == i || k == j || !lms[k].divides(l)) continue;
            auto p1 = std::minmax(i, k);
            auto p2 = std::minmax(j, k);
            if (done.count({p1.first, p1.second}) && done.count({p2.first, p2.second})) skip = true;
        }
        if (skip) continue;

        if (++processed > caps.max_pairs)
            throw CapExceeded(CapExceeded::Which::Pairs,
                              "S-pair cap exceeded (max_pairs=" + std::to_string(caps.max_pairs) +
                                  ")");
        Polynomial s = s_polynomial(basis[i], basis[j], order);
        check_degree(s, caps);
        Polynomial r = normal_form(s, basis, order, caps);
        if (r.is_zero()) continue;
        r = make_monic(r, order);
        size_t b = basis.size();
        basis.push_back(r);
        lms.push_back(leading_monomial(r, order));
        for (size_t k = 0; k < b; ++k) push_pair(k, b);
    }

    // Minimalize: keep only elements with minimal leading monomials.
    std::vector<size_t> keep;
    for (size_t i = 0; i < basis.size(); ++i) {
        bool minimal = true;
        for (size_t j = 0; j < basis.size() && minimal; ++j) {
            if (i == j) continue;
            if (lms[j].divides(lms[i]) && lms[j] != lms[i]) minimal = false;
            if (lms[j] == lms[i] && j < i) minimal = false; // duplicate LT: first wins
        }
        if (minimal) keep.push_back(i);
    }
    std::vector<Polynomial> minimal;
    minimal.reserve(keep.size());
    for (size_t idx : keep) minimal.push_back(basis[idx]);

    // Inter-reduce tails; the reduced basis is canonical for the order.
    std::vector<Polynomial> reduced;
    for (size_t i = 0; i < minimal.size(); ++i) {
        std::vector<Polynomial> others;
        for (size_t j = 0; j < minimal.size(); ++j)
            if (j != i) others.push_back(minimal[j]);
        Polynomial r = others.empty() ? minimal[i] : normal_form(minimal[i], others, order, caps);
        if (!r.is_zero()) reduced.push_back(make_monic(r, order));
    }
    std::sort(reduced.begin(), reduced.end(), [&](const Polynomial& a, const Polynomial& b) {
        return order.less(leading_monomial(a, order), leading_monomial(b, order));
    });
    return reduced;
}

Ideal::Ideal(int nvars, std::vector<Polynomial> generators)
    : nvars_(nvars), gens_(std::move(generators)), cache_(std::make_shared<Cache>()) {
    if (nvars < 1) throw std::invalid_argument("Ideal: variable count must be positive");
    for (const auto& g : gens_)
        if (g.nvars() != nvars_) throw std::invalid_argument("Ideal: generator variable-count mismatch");
}

const std::vector<Polynomial>& Ideal::groebner_basis(const MonomialOrder& order,
                                                     const ResourceCaps& caps) const {
    if (cache_->order && *cache_->order == order) return cache_->basis;
    cache_->basis = buchberger(gens_, order, caps);
    cache_->order = order;
    return cache_->basis;
}

bool ideal_member(const Polynomial& p, const Ideal& I, const ResourceCaps& caps) {
    if (p.nvars() != I.nvars())
        throw std::invalid_argument("ideal_member: variable-count mismatch");
    if (p.is_zero()) return true;
    const auto& gb = I.groebner_basis(MonomialOrder::grevlex(), caps);
    if (gb.empty()) return false;
    return normal_form(p, gb, MonomialOrder::grevlex(), caps).is_zero();
}

bool ideal_equal(const Ideal& A, const Ideal& B, const ResourceCaps& caps) {
    if (A.nvars() != B.nvars())
        throw std::invalid_argument("ideal_equal: variable-count mismatch");
    return A.groebner_basis(MonomialOrder::grevlex(), caps) ==
           B.groebner_basis(MonomialOrder::grevlex(), caps);
}

Ideal eliminate(const Ideal& I, const std::vector<bool>& keep, const ResourceCaps& caps) {
    std::vector<bool> elim(static_cast<size_t>(I.nvars()), true);
    for (size_t v = 0; v < elim.size() && v < keep.size(); ++v) elim[v] = !keep[v];
    auto gb = buchberger(I.generators(), MonomialOrder::elimination(elim), caps);
    std::vector<Polynomial> kept;
    for (const auto& g : gb) {
        bool in_subring = true;
        for (const auto& [m, c] : g.terms())
            for (size_t v = 0; v < elim.size(); ++v)
                if (elim[v] && m.exps[v] > 0) in_subring = false;
        if (in_subring) kept.push_back(g);
    }
    return Ideal(I.nvars(), std::move(kept));
}

bool radical_member(const Polynomial& p, const Ideal& I, const ResourceCaps& caps) {
    if (p.nvars() != I.nvars())
        throw std::invalid_argument("radical_member: variable-count mismatch");
    if (p.is_zero()) return true;
    int n = I.nvars();
    std::vector<Polynomial> gens;
    gens.reserve(I.generators().size() + 1);
    for (const auto& g : I.generators()) gens.push_back(extend_vars(g, n + 1));
    // 1 - t*p with t the fresh last variable
    Polynomial q = Polynomial::constant(n + 1, GaussianRational(1)) -
                   Polynomial::variable(n + 1, n) * extend_vars(p, n + 1);
    gens.push_back(q);
    auto gb = buchberger(gens, MonomialOrder::grevlex(), caps);
    return gb.size() == 1 && gb[0].is_constant();
}

std::vector<Monomial> monomials_of_degree(int nvars, int d) {
    std::vector<Monomial> out;
    Monomial cur(nvars);
    // lexicographic enumeration over exponent vectors summing to d
    auto rec = [&](auto&& self, int var, int remaining) -> void {
        if (var == nvars - 1) {
            cur.exps[static_cast<size_t>(var)] = remaining;
            out.push_back(cur);
            return;
        }
        for (int e = 0; e <= remaining; ++e) {
            cur.exps[static_cast<size_t>(var)] = e;
            self(self, var + 1, remaining - e);
        }
        cur.exps[static_cast<size_t>(var)] = 0;
    };
    rec(rec, 0, d);
    return out;
}

std::vector<Monomial> monomials_below_degree(int nvars, int d) {
    std::vector<Monomial> out;
    for (int k = 0; k < d; ++k) {
        auto layer = monomials_of_degree(nvars, k);
        out.insert(out.end(), layer.begin(), layer.end());
    }
    return out;
}

long truncated_colength(const Ideal& I, int D, const ResourceCaps& caps) {
    if (D < 1) throw std::invalid_argument("truncated_colength: D must be >= 1");
    const auto& gb = I.groebner_basis(MonomialOrder::grevlex(), caps);
    if (!gb.empty() && gb[0].is_constant()) return 0;
    std::vector<Polynomial> gens = gb;
    for (const auto& m : monomials_of_degree(I.nvars(), D))
        gens.push_back(Polynomial::term(I.nvars(), m, GaussianRational(1)));
    auto gb2 = buchberger(gens, MonomialOrder::grevlex(), caps);
    if (gb2.size() == 1 && gb2[0].is_constant()) return 0;
    std::vector<Monomial> lts;
    lts.reserve(gb2.size());
    for (const auto& g : gb2) lts.push_back(leading_monomial(g, MonomialOrder::grevlex()));
    long count = 0;
    for (const auto& m : monomials_below_degree(I.nvars(), D)) {
        bool standard = true;
        for (const auto& lt : lts)
            if (lt.divides(m)) {
                standard = false;
                break;
            }
        if (standard) ++count;
    }
    return count;
}

ColengthReport local_colength(const Ideal& I, const ResourceCaps& caps) {
    long prev = -1;
    try {
        for (int D = 1; D <= caps.max_colength_degree; ++D) {
            long v = truncated_colength(I, D, caps);
            if (D >= 2 && v == prev) return ColengthReport{v, D, true};
            prev = v;
        }
    } catch (const CapExceeded&) {
        return ColengthReport{std::nullopt, caps.max_colength_degree, false};
    }
    return ColengthReport{std::nullopt, caps.max_colength_degree, false};
}

namespace {

int smallest_power_in(const Polynomial& p, const std::vector<Polynomial>& gb,
                      const MonomialOrder& order, const ResourceCaps& caps, int bound) {
    Polynomial acc = Polynomial::constant(p.nvars(), GaussianRational(1));
    for (int k = 1; k <= bound; ++k) {
        acc = acc * p;
        if (acc.total_degree() > caps.max_degree) break;
        if (normal_form(acc, gb, order, caps).is_zero()) return k;
    }
    return 0;
}

} // namespace

RadicalResult radical_generators(const Ideal& I, const ResourceCaps& caps,
                                 const std::vector<Polynomial>& extra_pool) {
    const MonomialOrder ord = MonomialOrder::grevlex();
    const auto& gb = I.groebner_basis(ord, caps);
    const int n = I.nvars();

    if (gb.empty()) return RadicalResult{Ideal(n), RadicalQuality::Exact, RadicalCase::Zero, 1, 0, {}};

    if (gb.size() == 1 && gb[0].is_constant()) {
        Ideal one(n, {Polynomial::constant(n, GaussianRational(1))});
        return RadicalResult{one, RadicalQuality::Exact, RadicalCase::Unit, 1, 0, {}};
    }

    if (gb.size() == 1) {
        const Polynomial& g = gb[0];
        Polynomial sf = squarefree_part(g);
        int m = smallest_power_in(sf, gb, ord, caps, g.total_degree() + 1);
        if (m == 0)
            throw std::logic_error("radical_generators: multiplicity search failed on principal ideal");
        return RadicalResult{Ideal(n, {sf}), RadicalQuality::Exact, RadicalCase::Principal, m, 0, {}};
    }

    ColengthReport col = local_colength(I, caps);
    if (col.stable && col.value && *col.value == 0) {
        // Germ-unit ideal: some generator is invertible at the origin even
        // though 1 need not lie in the global ideal.
        Ideal one(n, {Polynomial::constant(n, GaussianRational(1))});
        return RadicalResult{one, RadicalQuality::Exact, RadicalCase::LocalUnit, 1,
                             col.truncation_degree, {}};
    }
    if (col.stable) {
        // Origin isolated: the local radical of an m-primary germ ideal is m.
        // Root power = smallest e with every z_i^e in the germ ideal; test
        // against I + m^{D0}, which agrees with the germ ideal from D0 on.
        int D0 = col.truncation_degree;
        std::vector<Polynomial> gens = gb;
        for (const auto& m : monomials_of_degree(n, D0))
            gens.push_back(Polynomial::term(n, m, GaussianRational(1)));
        auto gb_local = buchberger(gens, ord, caps);
        int root = 0;
        for (int e = 1; e <= D0 && root == 0; ++e) {
            bool all_in = true;
            for (int v = 0; v < n && all_in; ++v) {
                Polynomial pe = Polynomial::term(n, unit_monomial(n, v, e), GaussianRational(1));
                if (!normal_form(pe, gb_local, ord, caps).is_zero()) all_in = false;
            }
            if (all_in) root = e;
        }
        if (root == 0)
            throw std::logic_error("radical_generators: root search failed on m-primary ideal");
        std::vector<Polynomial> vars;
        for (int v = 0; v < n; ++v) vars.push_back(Polynomial::variable(n, v));
        return RadicalResult{Ideal(n, vars), RadicalQuality::Exact, RadicalCase::MPrimary, root,
                             D0, {}};
    }

    // Case (d): enlarge by every pool candidate passing radical_member.
    std::vector<Polynomial> pool;
    for (int v = 0; v < n; ++v) pool.push_back(Polynomial::variable(n, v));
    for (const auto& g : I.generators())
        if (!g.is_zero()) pool.push_back(squarefree_part(g));
    for (const auto& g : extra_pool)
        if (!g.is_zero() && g.nvars() == n) pool.push_back(g);

    std::vector<Polynomial> enlarged = I.generators();
    std::vector<std::pair<Polynomial, int>> added;
    for (const auto& c : pool) {
        bool dup = false;
        for (const auto& [a, r] : added)
            if (proportional(a, c)) dup = true;
        if (dup || ideal_member(c, I, caps)) continue;
        if (!radical_member(c, I, caps)) continue;
        int root = smallest_power_in(c, gb, MonomialOrder::grevlex(), caps,
                                     std::max(1, caps.max_degree / std::max(1, c.total_degree())));
        if (root == 0)
            throw CapExceeded(CapExceeded::Which::Degree,
                              "radical root certificate exceeds the degree cap");
        enlarged.push_back(c);
        added.emplace_back(c, root);
    }
    return RadicalResult{Ideal(n, std::move(enlarged)), RadicalQuality::MembershipOnly,
                         RadicalCase::Pool, 1, col.truncation_degree, std::move(added)};
}

} // namespace kohn
