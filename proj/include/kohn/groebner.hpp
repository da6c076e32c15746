// Groebner-basis machinery over Q(i): multivariate division, Buchberger's
// algorithm (normal pair-selection strategy with both Buchberger criteria),
// ideal membership and equality, elimination, Rabinowitsch radical
// membership, truncated/local colength and certified radical generators.
//
// Membership is decided in the polynomial ring; Groebner bases are stable
// under field extension, so positive results certify germ membership over C.
// Negative results are global non-membership.

#pragma once

#include <memory>
#include <optional>
#include <stdexcept>
#include <vector>

#include "kohn/gcd.hpp"
#include "kohn/polynomial.hpp"

namespace kohn {

struct ResourceCaps {
    int max_degree = 60;          // total degree allowed during any reduction
    long max_pairs = 20000;       // S-pairs actually reduced
    int max_colength_degree = 40; // truncation cap for local_colength
    int max_chain_steps = 12;     // Kohn chain length
};

class CapExceeded : public std::runtime_error {
public:
    enum class Which { Degree, Pairs, Colength };
    CapExceeded(Which w, const std::string& msg) : std::runtime_error(msg), which(w) {}
    Which which;
};

// Remainder of multivariate division of p by `basis` under `order`: no term
// of the result is divisible by any basis leading term, and p - result lies
// in the ideal generated by basis.
Polynomial normal_form(const Polynomial& p, const std::vector<Polynomial>& basis,
                       const MonomialOrder& order, const ResourceCaps& caps = {});

// Reduced Groebner basis (monic, inter-reduced, sorted by leading monomial):
// the canonical basis of the ideal under `order`. Empty input or all-zero
// input yields the empty basis (the zero ideal).
std::vector<Polynomial> buchberger(const std::vector<Polynomial>& generators,
                                   const MonomialOrder& order, const ResourceCaps& caps = {});

class Ideal {
public:
    Ideal() : nvars_(1), cache_(std::make_shared<Cache>()) {}
    explicit Ideal(int nvars, std::vector<Polynomial> generators = {});

    int nvars() const { return nvars_; }
    const std::vector<Polynomial>& generators() const { return gens_; }

    // Lazily computed, shared between copies; the single cache slot stores
    // the basis together with the order it was computed under.
    const std::vector<Polynomial>& groebner_basis(const MonomialOrder& order = MonomialOrder::grevlex(),
                                                  const ResourceCaps& caps = {}) const;

    bool is_zero_ideal(const ResourceCaps& caps = {}) const {
        return groebner_basis(MonomialOrder::grevlex(), caps).empty();
    }
    bool contains_one(const ResourceCaps& caps = {}) const {
        const auto& gb = groebner_basis(MonomialOrder::grevlex(), caps);
        return gb.size() == 1 && gb[0].is_constant() && !gb[0].is_zero();
    }

private:
    struct Cache {
        std::optional<MonomialOrder> order;
        std::vector<Polynomial> basis;
    };
    int nvars_;
    std::vector<Polynomial> gens_;
    std::shared_ptr<Cache> cache_;
};

bool ideal_member(const Polynomial& p, const Ideal& I, const ResourceCaps& caps = {});

// Reduced bases under a common order coincide (monic) iff the ideals agree.
bool ideal_equal(const Ideal& A, const Ideal& B, const ResourceCaps& caps = {});

// Generators of the intersection with the subring in the kept variables.
Ideal eliminate(const Ideal& I, const std::vector<bool>& keep, const ResourceCaps& caps = {});

// Rabinowitsch: some power of p lies in I iff 1 lies in I + <1 - t*p>.
bool radical_member(const Polynomial& p, const Ideal& I, const ResourceCaps& caps = {});

// All monomials in n variables of total degree exactly d (resp. < d),
// in increasing structural order.
std::vector<Monomial> monomials_of_degree(int nvars, int d);
std::vector<Monomial> monomials_below_degree(int nvars, int d);

// dim of (polynomial ring)/(I + m^D) = number of standard monomials of the
// combined ideal; all of them have degree < D.
long truncated_colength(const Ideal& I, int D, const ResourceCaps& caps = {});

struct ColengthReport {
    std::optional<long> value;  // empty = infinity marker
    int truncation_degree = 0;  // D at which stabilization was detected
    bool stable = false;        // two consecutive truncation values agreed
};

// Raises D until truncated_colength stabilizes for two consecutive values.
// Once m^e is contained in I near the origin, I + m^D = I locally for all
// D >= e, so a stable value is the exact colength of the germ ideal.
ColengthReport local_colength(const Ideal& I, const ResourceCaps& caps = {});

enum class RadicalQuality { Exact, MembershipOnly };
enum class RadicalCase { Zero, Unit, Principal, LocalUnit, MPrimary, Pool };

struct RadicalResult {
    Ideal radical;
    RadicalQuality quality = RadicalQuality::Exact;
    RadicalCase kind = RadicalCase::Zero;
    int root = 1;                    // root power taken (Principal/MPrimary)
    int truncation_degree = 0;       // colength stabilization degree, when used
    std::vector<std::pair<Polynomial, int>> added; // Pool case: candidate + its root
};

// Certified radical generators:
//   (a) 1 in I               -> <1>, EXACT
//   (b) I principal <g>      -> <squarefree_part(g)>, EXACT
//   (c) local colength finite-> maximal ideal (or <1> when the germ ideal is
//                               the unit ideal, colength 0), EXACT
//   (d) otherwise            -> I enlarged by every pool candidate (variables,
//                               squarefree parts of generators, extra_pool)
//                               passing radical_member, MEMBERSHIP_ONLY
RadicalResult radical_generators(const Ideal& I, const ResourceCaps& caps = {},
                                 const std::vector<Polynomial>& extra_pool = {});

} // namespace kohn
