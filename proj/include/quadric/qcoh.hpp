#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "quadric/chow.hpp"
#include "quadric/rational.hpp"

namespace quadric {

// How a cohomology value was obtained: Mechanical values come from closed
// formulas and long-exact-sequence chases whose connecting maps are forced
// by vanishing; CitedFact values rest on a geometric argument and carry
// the citation that establishes them.
enum class Provenance { Mechanical, CitedFact };

struct CohomologyTable {
    std::array<long long, 4> h{0, 0, 0, 0}; // h^0, h^1, h^2, h^3
    Provenance provenance = Provenance::Mechanical;
    std::string citation; // nonempty iff provenance == CitedFact

    long long h0() const { return h[0]; }
    long long h1() const { return h[1]; }
    long long h2() const { return h[2]; }
    long long h3() const { return h[3]; }
    long long euler() const { return h[0] - h[1] + h[2] - h[3]; }

    friend bool operator==(const CohomologyTable& a, const CohomologyTable& b) {
        return a.h == b.h;
    }
    friend CohomologyTable operator+(const CohomologyTable& a, const CohomologyTable& b);
};

// --- Standard bundles -----------------------------------------------------
//
// Symbolic expressions naming the bundles of the classification:
//   Line(t)  : O_Q(t)
//   Spinor   : the rank-2 spinor bundle Sigma, (c1,c2) = (1,1), Sigma^v = Sigma(-1)
//   PullbackA: A = phi_P^*(TP^3(-1)) for the projection from P not on Q
//   Phi      : TP^4(-1) restricted to Q, the unique nonsplit extension of A by O_Q
//   GP, EP   : the sheaf G_P (degenerate pullback, P on Q) and the rank-4
//              bundle E_P extending it by O_Q(1)
// closed under Dual, Twist(k) and DirectSum. Chern data of every atom is
// recomputed from its defining sequence through the Chow module, never
// hard-coded.

enum class Atom { Line, Spinor, PullbackA, Phi, GP, EP };

struct BundleTerm {
    Atom atom = Atom::Line;
    bool dualized = false; // never set for Line/Spinor (rewritten away)
    int twist = 0;

    friend bool operator==(const BundleTerm& a, const BundleTerm& b) {
        return a.atom == b.atom && a.dualized == b.dualized && a.twist == b.twist;
    }
};

class Bundle {
  public:
    static Bundle line(int t);
    static Bundle spinor();
    static Bundle pullback_a();
    static Bundle phi();
    static Bundle g_p();
    static Bundle e_p();

    Bundle dual() const;
    Bundle twisted(int k) const;
    Bundle operator+(const Bundle& other) const; // direct sum

    long long rank() const;
    ChernData chern() const;
    std::string name() const;

    const std::vector<BundleTerm>& terms() const { return terms_; }

    friend bool operator==(const Bundle& a, const Bundle& b) { return a.terms_ == b.terms_; }

  private:
    std::vector<BundleTerm> terms_; // direct sum of normalized terms
};

// Chern data of the atoms, each derived from its defining sequence:
//   Sigma: (2,1,1,0)  zero locus of a section is a line; det Sigma = O(1)
//   A    : quotient of O^4 by O(-1)            -> (3,1,2,2)
//   Phi  : quotient of O^5 by O(-1)            -> (4,1,2,2)
//   G_P  : quotient of O^4 by O(-1), P on Q    -> (3,1,2,2)
//   E_P  : extension of G_P by O(1)            -> (4,2,4,4)
ChernData chern_of_atom(Atom a);

// --- Cohomology tables ----------------------------------------------------

// O_Q(t): h0 = C(t+4,4) - C(t+2,4), ACM, h3 by Serre duality.
CohomologyTable coh_line(long long t);

// Sigma(t): ACM; h0 = chi for t >= -1, zero below; h3(t) = h0(-4-t).
CohomologyTable coh_spinor(long long t);

// A(t) and its dual, all degrees, through the projection formula
//   h^i(A(t))  = h^i(TP^3(t-1))      + h^i(TP^3(t-2))
//   h^i(A~(t)) = h^i(Omega_P3(t+1))  + h^i(Omega_P3(t))
CohomologyTable coh_A(long long t);
CohomologyTable coh_A_dual(long long t);

// Phi(t) and its dual, from the restricted Euler sequence
// 0 -> O(-1) -> O^5 -> Phi -> 0 and its dual. The multiplication maps
// H^0(O(s))^5 -> H^0(O(s+1)) are surjective for s >= 0 (monomials witness
// this; replayed in the tests), which forces every connecting map used.
CohomologyTable coh_phi(long long t);
CohomologyTable coh_phi_dual(long long t);

// --- Tensor pairs (closed catalogue) ---------------------------------------
//
// General tensor cohomology is not determined by Chern data; the catalogue
// holds exactly the pairs the classification needs, each computed by its
// own sequence chase at the twist it is used at.

enum class PairKey {
    PhidualPhi,     // Phi^v x Phi,       t = 0
    AdualASame,     // A_P^v x A_P,       t = 0, same center
    AdualADistinct, // A_O^v x A_P,       t = 0, distinct centers
    PhiAdual,       // Phi  x A^v,        t = 0
    APhidual,       // A    x Phi^v,      t = 0
    SigmaAdual,     // Sigma x A^v,       t = 0
    SigmaPhidual,   // Sigma x Phi^v,     t = 0
    SigmaPhi        // Sigma x Phi,       t = -4
};

// Catalogue lookup by CLI-facing name ("PhidualPhi", "AdualA_same", ...).
std::optional<PairKey> pair_key_from_name(const std::string& name);
std::string pair_name(PairKey key);
std::vector<std::string> pair_catalogue_names();

// Throws UnsupportedPair when the twist is not the one the catalogue pins.
CohomologyTable coh_pair(PairKey key, long long t);

// Chern data of the underlying tensor product (rank included).
ChernData pair_chern(PairKey key, long long t);

// --- Serre duality ----------------------------------------------------------

// True iff h^i(B(t)) = h^{3-i}(B^v(-3-t)) for i = 0..3, both sides computed
// from their own independent formulas. Throws UnsupportedPair for bundles
// without full tables (GP, EP).
bool serre_dual_check(const Bundle& b, long long t);

// Full table of a bundle expression twisted by t. Throws UnsupportedPair
// for GP/EP terms (only their Chern data is mechanical; h^1(E_P(t)) = 0
// enters the record as a cited fact).
CohomologyTable coh_bundle(const Bundle& b, long long t);

// --- Cited facts -------------------------------------------------------------

// The geometric inputs the tables rely on, listed for the verify report.
struct CitedFact {
    std::string statement;
    std::string citation;
};
const std::vector<CitedFact>& cited_facts();

} // namespace quadric
