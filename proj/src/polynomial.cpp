#include "kohn/polynomial.hpp"

namespace kohn {

Polynomial pow(const Polynomial& p, int e) {
    if (e < 0) throw std::invalid_argument("pow: negative exponent");
    Polynomial r = Polynomial::constant(p.nvars(), GaussianRational(1));
    Polynomial base = p;
    while (e > 0) {
        if (e & 1) r = r * base;
        e >>= 1;
        if (e) base = base * base;
    }
    return r;
}

Polynomial partial_derivative(const Polynomial& p, int var) {
    if (var < 0 || var >= p.nvars())
        throw std::out_of_range("partial_derivative: variable index out of range");
    Polynomial r(p.nvars());
    for (const auto& [m, c] : p.terms()) {
        int e = m.exps[static_cast<size_t>(var)];
        if (e == 0) continue;
        Monomial d = m;
        d.exps[static_cast<size_t>(var)] = e - 1;
        r.add_term(d, GaussianRational(e) * c);
    }
    return r;
}

std::optional<int> ord0(const Polynomial& p) {
    if (p.is_zero()) return std::nullopt;
    int best = -1;
    for (const auto& [m, c] : p.terms()) {
        int d = m.total_degree();
        if (best < 0 || d < best) best = d;
    }
    return best;
}

Polynomial substitute_curve(const Polynomial& p, const std::vector<int>& exponents,
                            const std::vector<GaussianRational>& coefficients) {
    if (exponents.size() != static_cast<size_t>(p.nvars()) ||
        coefficients.size() != static_cast<size_t>(p.nvars()))
        throw std::invalid_argument("substitute_curve: wrong curve dimension");
    Polynomial r(1);
    for (const auto& [m, c] : p.terms()) {
        int tdeg = 0;
        GaussianRational coeff = c;
        for (size_t i = 0; i < exponents.size(); ++i) {
            int e = m.exps[i];
            if (e == 0) continue;
            tdeg += exponents[i] * e;
            GaussianRational ci = coefficients[i];
            for (int k = 1; k < e; ++k) ci *= coefficients[i];
            coeff *= ci;
        }
        r.add_term(unit_monomial(1, 0, tdeg), coeff);
    }
    return r;
}

Polynomial conjugate_coeffs(const Polynomial& p) {
    Polynomial r(p.nvars());
    for (const auto& [m, c] : p.terms()) r.add_term(m, c.conj());
    return r;
}

std::pair<Monomial, GaussianRational> leading_term(const Polynomial& p, const MonomialOrder& order) {
    if (p.is_zero()) throw std::invalid_argument("leading_term: zero polynomial");
    auto best = p.terms().begin();
    for (auto it = std::next(best); it != p.terms().end(); ++it)
        if (order.less(best->first, it->first)) best = it;
    return {best->first, best->second};
}

const Monomial& leading_monomial(const Polynomial& p, const MonomialOrder& order) {
    if (p.is_zero()) throw std::invalid_argument("leading_monomial: zero polynomial");
    auto best = p.terms().begin();
    for (auto it = std::next(best); it != p.terms().end(); ++it)
        if (order.less(best->first, it->first)) best = it;
    return best->first;
}

Polynomial make_monic(const Polynomial& p, const MonomialOrder& order) {
    if (p.is_zero()) return p;
    GaussianRational lc = leading_term(p, order).second;
    if (lc.is_one()) return p;
    return lc.inverse() * p;
}

bool proportional(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
    if (a.term_count() != b.term_count()) return false;
    auto ia = a.terms().begin();
    auto ib = b.terms().begin();
    GaussianRational ratio = ia->second / ib->second;
    for (; ia != a.terms().end(); ++ia, ++ib) {
        if (ia->first != ib->first) return false;
        if (ia->second != ratio * ib->second) return false;
    }
    return true;
}

std::optional<Polynomial> divide_exact(const Polynomial& a, const Polynomial& b) {
    if (b.is_zero()) return std::nullopt;
    const MonomialOrder ord = MonomialOrder::grevlex();
    auto [lm, lc] = leading_term(b, ord);
    Polynomial rem = a;
    Polynomial quot(a.nvars());
    while (!rem.is_zero()) {
        auto [rm, rc] = leading_term(rem, ord);
        if (!lm.divides(rm)) return std::nullopt;
        Monomial qm = rm / lm;
        GaussianRational qc = rc / lc;
        quot.add_term(qm, qc);
        rem = rem - Polynomial::term(a.nvars(), qm, qc) * b;
    }
    return quot;
}

Polynomial extend_vars(const Polynomial& p, int new_nvars) {
    if (new_nvars < p.nvars()) throw std::invalid_argument("extend_vars: shrinking not allowed");
    Polynomial r(new_nvars);
    for (const auto& [m, c] : p.terms()) {
        Monomial e(new_nvars);
        std::copy(m.exps.begin(), m.exps.end(), e.exps.begin());
        r.add_term(e, c);
    }
    return r;
}

} // namespace kohn
