#include "kohn/gcd.hpp"

namespace kohn {

int degree_in(const Polynomial& p, int var) {
    int d = -1;
    for (const auto& [m, c] : p.terms()) d = std::max(d, m.exps[static_cast<size_t>(var)]);
    return d;
}

Polynomial coefficient_of_power(const Polynomial& p, int var, int k) {
    Polynomial r(p.nvars());
    for (const auto& [m, c] : p.terms()) {
        if (m.exps[static_cast<size_t>(var)] != k) continue;
        Monomial q = m;
        q.exps[static_cast<size_t>(var)] = 0;
        r.add_term(q, c);
    }
    return r;
}

namespace {

const MonomialOrder kGrevlex = MonomialOrder::grevlex();

Polynomial times_power(const Polynomial& p, int var, int k) {
    Polynomial r(p.nvars());
    for (const auto& [m, c] : p.terms()) {
        Monomial q = m;
        q.exps[static_cast<size_t>(var)] += k;
        r.add_term(q, c);
    }
    return r;
}

Polynomial leading_v_coefficient(const Polynomial& p, int var) {
    return coefficient_of_power(p, var, degree_in(p, var));
}

Polynomial exact(const Polynomial& a, const Polynomial& b) {
    auto q = divide_exact(a, b);
    if (!q) throw std::logic_error("gcd internals: expected exact division failed");
    return *q;
}

// Pseudo-remainder of a by b in var: the remainder of lc_v(b)^{dega-degb+1} * a.
Polynomial pseudo_remainder(const Polynomial& a, const Polynomial& b, int var) {
    Polynomial r = a;
    const int db = degree_in(b, var);
    const Polynomial lcb = leading_v_coefficient(b, var);
    int e = degree_in(a, var) - db + 1;
    while (!r.is_zero() && degree_in(r, var) >= db) {
        int dr = degree_in(r, var);
        Polynomial lcr = leading_v_coefficient(r, var);
        r = lcb * r - times_power(lcr, var, dr - db) * b;
        --e;
    }
    for (; e > 0; --e) r = lcb * r;
    return r;
}

Polynomial content_in(const Polynomial& p, int var);

// Subresultant PRS on v-primitive inputs; returns the gcd of the primitive
// parts (v-primitive, not yet monic).
Polynomial subresultant_prs(Polynomial A, Polynomial B, int var) {
    if (degree_in(A, var) < degree_in(B, var)) std::swap(A, B);
    Polynomial psi = Polynomial::constant(A.nvars(), GaussianRational(-1));
    int delta_prev = -1;
    bool first = true;
    while (true) {
        int delta = degree_in(A, var) - degree_in(B, var);
        Polynomial lcA = leading_v_coefficient(A, var);
        Polynomial beta(A.nvars());
        if (first) {
            beta = Polynomial::constant(A.nvars(), GaussianRational(delta % 2 == 0 ? -1 : 1));
        } else {
            // psi_i = (-lc(A))^{d} / psi^{d-1} with d = previous delta
            Polynomial neg_lc = -lcA;
            if (delta_prev == 0) {
                // psi unchanged
            } else {
                Polynomial num = pow(neg_lc, delta_prev);
                psi = delta_prev == 1 ? num : exact(num, pow(psi, delta_prev - 1));
            }
            beta = -(lcA * pow(psi, delta));
        }
        Polynomial R = pseudo_remainder(A, B, var);
        if (R.is_zero()) return B;
        if (degree_in(B, var) == 0) return Polynomial::constant(A.nvars(), GaussianRational(1));
        R = exact(R, beta);
        if (degree_in(R, var) == 0) return Polynomial::constant(A.nvars(), GaussianRational(1));
        A = B;
        B = R;
        delta_prev = delta;
        first = false;
    }
}

Polynomial content_in(const Polynomial& p, int var) {
    Polynomial c(p.nvars());
    for (int k = 0; k <= degree_in(p, var); ++k) {
        Polynomial ck = coefficient_of_power(p, var, k);
        if (ck.is_zero()) continue;
        c = poly_gcd(c, ck);
        if (c.is_constant() && !c.is_zero()) break;
    }
    return c;
}

int last_occurring_variable(const Polynomial& a, const Polynomial& b) {
    for (int v = a.nvars() - 1; v >= 0; --v)
        if (degree_in(a, v) > 0 || degree_in(b, v) > 0) return v;
    return -1;
}

} // namespace

Polynomial poly_gcd(const Polynomial& a, const Polynomial& b) {
    if (a.nvars() != b.nvars())
        throw std::invalid_argument("poly_gcd: variable-count mismatch");
    if (a.is_zero()) return make_monic(b, kGrevlex);
    if (b.is_zero()) return make_monic(a, kGrevlex);
    if (a.is_constant() || b.is_constant())
        return Polynomial::constant(a.nvars(), GaussianRational(1));

    int v = last_occurring_variable(a, b);
    if (degree_in(a, v) == 0) return poly_gcd(content_in(b, v), a);
    if (degree_in(b, v) == 0) return poly_gcd(content_in(a, v), b);

    Polynomial ca = content_in(a, v);
    Polynomial cb = content_in(b, v);
    Polynomial c = poly_gcd(ca, cb);
    Polynomial g = subresultant_prs(exact(a, ca), exact(b, cb), v);
    if (degree_in(g, v) > 0) g = exact(g, content_in(g, v));
    return make_monic(c * g, kGrevlex);
}

Polynomial squarefree_part(const Polynomial& p) {
    if (p.is_zero()) throw std::invalid_argument("squarefree_part: zero input");
    Polynomial cur = make_monic(p, kGrevlex);
    while (true) {
        Polynomial g = cur;
        for (int j = 0; j < cur.nvars(); ++j) g = poly_gcd(g, partial_derivative(cur, j));
        Polynomial next = make_monic(exact(cur, g), kGrevlex);
        if (next == cur) return cur;
        cur = next;
    }
}

} // namespace kohn
