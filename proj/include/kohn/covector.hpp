// (1,0)-form germs with polynomial coefficients: sigma = sum_j c_j(z) dz^j.
// On special domains the dr wedge slot contributes exactly dw at the origin,
// so the determinant step reduces to an n x n determinant in dz^1..dz^n.

#pragma once

#include <vector>

#include "kohn/polynomial.hpp"

namespace kohn {

struct Covector {
    std::vector<Polynomial> coeffs; // slot j = coefficient of dz^{j+1}

    Covector() = default;
    explicit Covector(int nvars) : coeffs(static_cast<size_t>(nvars), Polynomial(nvars)) {}
    explicit Covector(std::vector<Polynomial> c) : coeffs(std::move(c)) {}

    int nvars() const { return static_cast<int>(coeffs.size()); }

    bool is_zero() const {
        for (const auto& p : coeffs)
            if (!p.is_zero()) return false;
        return true;
    }

    friend bool operator==(const Covector& a, const Covector& b) { return a.coeffs == b.coeffs; }
    friend bool operator!=(const Covector& a, const Covector& b) { return !(a == b); }
};

// d f = sum_j (df/dz_j) dz^j.
Covector gradient(const Polynomial& f);

// True iff a = c*b for a single nonzero constant c across all slots.
bool proportional(const Covector& a, const Covector& b);

// Determinant of the n x n coefficient matrix of n covectors over n
// variables, by exact cofactor expansion.
Polynomial jacobian_determinant(const std::vector<Covector>& rows);

} // namespace kohn
