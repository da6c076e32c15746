// Monomials as exponent vectors, plus the monomial orders used by the
// division algorithm and Buchberger: graded reverse lexicographic (the
// default), lexicographic, and block elimination orders.

#pragma once

#include <algorithm>
#include <cassert>
#include <numeric>
#include <vector>

namespace kohn {

struct Monomial {
    std::vector<int> exps;

    Monomial() = default;
    explicit Monomial(int nvars) : exps(static_cast<size_t>(nvars), 0) {}
    explicit Monomial(std::vector<int> e) : exps(std::move(e)) {}

    int nvars() const { return static_cast<int>(exps.size()); }

    int total_degree() const { return std::accumulate(exps.begin(), exps.end(), 0); }

    bool is_constant() const {
        return std::all_of(exps.begin(), exps.end(), [](int e) { return e == 0; });
    }

    bool divides(const Monomial& m) const {
        for (size_t i = 0; i < exps.size(); ++i)
            if (exps[i] > m.exps[i]) return false;
        return true;
    }

    friend Monomial operator*(const Monomial& a, const Monomial& b) {
        Monomial r(a.nvars());
        for (size_t i = 0; i < a.exps.size(); ++i) r.exps[i] = a.exps[i] + b.exps[i];
        return r;
    }

    // Exact quotient; caller guarantees b divides *this.
    friend Monomial operator/(const Monomial& a, const Monomial& b) {
        Monomial r(a.nvars());
        for (size_t i = 0; i < a.exps.size(); ++i) {
            r.exps[i] = a.exps[i] - b.exps[i];
            assert(r.exps[i] >= 0);
        }
        return r;
    }

    friend Monomial lcm(const Monomial& a, const Monomial& b) {
        Monomial r(a.nvars());
        for (size_t i = 0; i < a.exps.size(); ++i) r.exps[i] = std::max(a.exps[i], b.exps[i]);
        return r;
    }

    friend bool coprime(const Monomial& a, const Monomial& b) {
        for (size_t i = 0; i < a.exps.size(); ++i)
            if (a.exps[i] > 0 && b.exps[i] > 0) return false;
        return true;
    }

    friend bool operator==(const Monomial& a, const Monomial& b) { return a.exps == b.exps; }
    friend bool operator!=(const Monomial& a, const Monomial& b) { return !(a == b); }

    // Structural order for canonical term-map storage; unrelated to the
    // active monomial order.
    friend bool operator<(const Monomial& a, const Monomial& b) { return a.exps < b.exps; }
};

inline Monomial unit_monomial(int nvars, int var, int exp = 1) {
    Monomial m(nvars);
    m.exps[static_cast<size_t>(var)] = exp;
    return m;
}

// a < b under grevlex: lower total degree first; ties broken by the last
// index where the exponents differ, larger exponent there meaning smaller.
inline bool grevlex_less(const std::vector<int>& a, const std::vector<int>& b) {
    int da = std::accumulate(a.begin(), a.end(), 0);
    int db = std::accumulate(b.begin(), b.end(), 0);
    if (da != db) return da < db;
    for (size_t i = a.size(); i-- > 0;) {
        if (a[i] != b[i]) return a[i] > b[i];
    }
    return false;
}

class MonomialOrder {
public:
    enum class Kind { Grevlex, Lex, Elim };

    static MonomialOrder grevlex() { return MonomialOrder(Kind::Grevlex, {}); }
    static MonomialOrder lex() { return MonomialOrder(Kind::Lex, {}); }

    // Block order eliminating the flagged variables: the eliminate block is
    // compared first (grevlex within the block), so any polynomial whose
    // leading monomial avoids the block lies in the kept subring.
    static MonomialOrder elimination(std::vector<bool> eliminate) {
        return MonomialOrder(Kind::Elim, std::move(eliminate));
    }

    Kind kind() const { return kind_; }
    const std::vector<bool>& eliminated() const { return elim_; }

    bool less(const Monomial& a, const Monomial& b) const {
        switch (kind_) {
        case Kind::Grevlex:
            return grevlex_less(a.exps, b.exps);
        case Kind::Lex:
            for (size_t i = 0; i < a.exps.size(); ++i)
                if (a.exps[i] != b.exps[i]) return a.exps[i] < b.exps[i];
            return false;
        case Kind::Elim: {
            std::vector<int> ae, be, ak, bk;
            for (size_t i = 0; i < a.exps.size(); ++i) {
                bool e = i < elim_.size() && elim_[i];
                (e ? ae : ak).push_back(a.exps[i]);
                (e ? be : bk).push_back(b.exps[i]);
            }
            if (ae != be) return grevlex_less(ae, be);
            return grevlex_less(ak, bk);
        }
        }
        return false;
    }

    bool greater(const Monomial& a, const Monomial& b) const { return less(b, a); }

    friend bool operator==(const MonomialOrder& a, const MonomialOrder& b) {
        return a.kind_ == b.kind_ && a.elim_ == b.elim_;
    }

private:
    MonomialOrder(Kind k, std::vector<bool> e) : kind_(k), elim_(std::move(e)) {}
    Kind kind_;
    std::vector<bool> elim_;
};

} // namespace kohn
