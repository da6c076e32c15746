// Multivariate polynomials over Q(i): the carrier for every F_j, multiplier
// generator and derived expression in the engine.
//
// Terms live in a std::map keyed by the structural monomial order, so two
// equal polynomials have identical term maps (canonical form); no zero
// coefficient is ever stored. Values are immutable in spirit: every
// operation returns a fresh canonical polynomial.

#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "kohn/monomial.hpp"
#include "kohn/rational.hpp"

namespace kohn {

class Polynomial {
public:
    using TermMap = std::map<Monomial, GaussianRational>;

    Polynomial() : nvars_(1) {}
    explicit Polynomial(int nvars) : nvars_(nvars) {
        if (nvars < 1) throw std::invalid_argument("Polynomial: variable count must be positive");
    }

    static Polynomial constant(int nvars, GaussianRational c) {
        Polynomial p(nvars);
        if (!c.is_zero()) p.terms_.emplace(Monomial(nvars), std::move(c));
        return p;
    }
    static Polynomial variable(int nvars, int var) {
        Polynomial p(nvars);
        p.terms_.emplace(unit_monomial(nvars, var), GaussianRational(1));
        return p;
    }
    static Polynomial term(int nvars, Monomial m, GaussianRational c) {
        Polynomial p(nvars);
        if (!c.is_zero()) p.terms_.emplace(std::move(m), std::move(c));
        return p;
    }

    int nvars() const { return nvars_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    size_t term_count() const { return terms_.size(); }

    bool is_constant() const {
        return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_constant());
    }
    bool is_single_term() const { return terms_.size() == 1; }

    GaussianRational coefficient(const Monomial& m) const {
        auto it = terms_.find(m);
        return it == terms_.end() ? GaussianRational(0) : it->second;
    }
    GaussianRational constant_term() const { return coefficient(Monomial(nvars_)); }

    int total_degree() const {
        int d = -1;
        for (const auto& [m, c] : terms_) d = std::max(d, m.total_degree());
        return d; // -1 for the zero polynomial
    }

    void add_term(const Monomial& m, const GaussianRational& c) {
        if (c.is_zero()) return;
        auto [it, inserted] = terms_.emplace(m, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    Polynomial operator-() const {
        Polynomial r(nvars_);
        for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
        return r;
    }

    friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
        check_vars(a, b);
        Polynomial r = a;
        for (const auto& [m, c] : b.terms_) r.add_term(m, c);
        return r;
    }
    friend Polynomial operator-(const Polynomial& a, const Polynomial& b) {
        check_vars(a, b);
        Polynomial r = a;
        for (const auto& [m, c] : b.terms_) r.add_term(m, -c);
        return r;
    }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        check_vars(a, b);
        Polynomial r(a.nvars_);
        for (const auto& [ma, ca] : a.terms_)
            for (const auto& [mb, cb] : b.terms_) r.add_term(ma * mb, ca * cb);
        return r;
    }
    friend Polynomial operator*(const GaussianRational& c, const Polynomial& p) {
        Polynomial r(p.nvars_);
        if (c.is_zero()) return r;
        for (const auto& [m, pc] : p.terms_) r.terms_.emplace(m, c * pc);
        return r;
    }

    friend bool operator==(const Polynomial& a, const Polynomial& b) {
        return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

private:
    static void check_vars(const Polynomial& a, const Polynomial& b) {
        if (a.nvars_ != b.nvars_)
            throw std::invalid_argument("Polynomial arithmetic: variable-count mismatch");
    }

    int nvars_;
    TermMap terms_;
};

Polynomial pow(const Polynomial& p, int e);

// Formal d/dz_{var}, exact coefficients.
Polynomial partial_derivative(const Polynomial& p, int var);

// Vanishing order at the origin: minimal total degree of a stored term;
// nullopt (infinity) for the zero polynomial.
std::optional<int> ord0(const Polynomial& p);

// Pullback along the monomial curve t -> (c_1 t^{a_1}, ..., c_n t^{a_n}),
// returned as an exact univariate polynomial in t.
Polynomial substitute_curve(const Polynomial& p, const std::vector<int>& exponents,
                            const std::vector<GaussianRational>& coefficients);

// Coefficient-wise complex conjugation (an involution fixing monomials).
Polynomial conjugate_coeffs(const Polynomial& p);

// Leading term under the given order; p must be nonzero.
std::pair<Monomial, GaussianRational> leading_term(const Polynomial& p, const MonomialOrder& order);
const Monomial& leading_monomial(const Polynomial& p, const MonomialOrder& order);

// Scale so the leading coefficient under `order` is 1; zero stays zero.
Polynomial make_monic(const Polynomial& p, const MonomialOrder& order);

// True iff a = c*b for some nonzero constant c (both zero counts as true).
bool proportional(const Polynomial& a, const Polynomial& b);

// Exact quotient a/b if b divides a, nullopt otherwise.
std::optional<Polynomial> divide_exact(const Polynomial& a, const Polynomial& b);

// Append the extra variables at the end (existing indices unchanged).
Polynomial extend_vars(const Polynomial& p, int new_nvars);

} // namespace kohn
