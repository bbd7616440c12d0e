#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <string>
#include <utility>
#include <vector>

#include "quadric/bott.hpp"
#include "quadric/errors.hpp"
#include "quadric/hrr.hpp"
#include "quadric/qcoh.hpp"

using namespace quadric;

TEST_CASE("atom chern data from the defining sequences") {
    CHECK(chern_of_atom(Atom::Spinor) == ChernData{2, 1, 1, 0});
    CHECK(chern_of_atom(Atom::PullbackA) == ChernData{3, 1, 2, 2});
    CHECK(chern_of_atom(Atom::Phi) == ChernData{4, 1, 2, 2});
    CHECK(chern_of_atom(Atom::GP) == ChernData{3, 1, 2, 2});
    CHECK(chern_of_atom(Atom::EP) == ChernData{4, 2, 4, 4});
    // the spinor self-sequence 0 -> Sigma(-1) -> O^4 -> Sigma -> 0 is consistent
    CHECK(whitney_sum(twist(ChernData{2, 1, 1, 0}, -1), ChernData{2, 1, 1, 0}) == trivial(4));
}

TEST_CASE("bundle expressions normalize") {
    const Bundle sigma = Bundle::spinor();
    CHECK(sigma.dual() == sigma.twisted(-1));         // Sigma^v = Sigma(-1)
    CHECK(Bundle::line(3).dual() == Bundle::line(-3));
    CHECK(sigma.twisted(2).twisted(-1) == sigma.twisted(1));
    CHECK(Bundle::pullback_a().dual().dual() == Bundle::pullback_a());
    CHECK(Bundle::phi().dual().twisted(2).chern() == twist(dual(ChernData{4, 1, 2, 2}), 2));
    CHECK((Bundle::spinor() + Bundle::phi()).rank() == 6);
    CHECK((Bundle::spinor() + Bundle::phi()).chern() == ChernData{6, 2, 5, 5});
    CHECK(Bundle::pullback_a().dual().twisted(1).name() == "A^v(1)");
    CHECK((Bundle::line(0) + Bundle::line(1)).name() == "O + O(1)");
}

TEST_CASE("line bundle tables") {
    CHECK(coh_line(2) == CohomologyTable{{14, 0, 0, 0}});
    CHECK(coh_line(0) == CohomologyTable{{1, 0, 0, 0}});
    CHECK(coh_line(-4) == CohomologyTable{{0, 0, 0, 5}});
    CHECK(coh_line(-3) == CohomologyTable{{0, 0, 0, 1}});
    for (long long t = -2; t <= -1; ++t)
        CHECK(coh_line(t) == CohomologyTable{{0, 0, 0, 0}});
    CHECK(coh_line(1).h0() == 5);
}

TEST_CASE("spinor tables") {
    CHECK(coh_spinor(0) == CohomologyTable{{4, 0, 0, 0}});
    CHECK(coh_spinor(-1) == CohomologyTable{{0, 0, 0, 0}});
    CHECK(coh_spinor(-4) == CohomologyTable{{0, 0, 0, 4}});
    CHECK(coh_spinor(1).h0() == 16);
}

TEST_CASE("A tables through the projection formula") {
    CHECK(coh_A(0).h0() == 4);
    CHECK(coh_A(1).h0() == 19); // 15 + 4
    CHECK(coh_A_dual(0).h1() == 1);
    CHECK(coh_A_dual(0) == CohomologyTable{{0, 1, 0, 0}});
    CHECK(coh_A(-1).h1() == 0);
    CHECK(coh_A_dual(1).h1() == 0);
    CHECK(coh_A_dual(-1).h1() == 1);
    CHECK(coh_A(-4).h3() == 6); // Serre dual of h0(A^v(1)) = h0(Omega(2)) + h0(Omega(1))
}

TEST_CASE("Phi tables") {
    // The restricted Euler sequence forces h0(Phi) = 5 and h0(Phi(1)) = 24;
    // chi pins the rest of the table.
    CHECK(coh_phi(0) == CohomologyTable{{5, 0, 0, 0}});
    CHECK(coh_phi(1).h0() == 24);
    CHECK(coh_phi(0).h1() == 0);
    CHECK(coh_phi(-1).h1() == 0);
    CHECK(coh_phi(-2).h2() == 1); // Serre dual of h1(Phi^v(-1)) = 1
    CHECK(coh_phi_dual(0) == CohomologyTable{{0, 0, 0, 0}});
    CHECK(coh_phi_dual(-1).h1() == 1);
    CHECK(coh_phi_dual(1).h1() == 0);
    CHECK(to_integer(chi_hrr(chern_of_atom(Atom::Phi))) == 5);
}

TEST_CASE("no sections below degree zero") {
    for (long long t = -10; t < 0; ++t) {
        CHECK(coh_spinor(t).h0() == 0);
        CHECK(coh_A(t).h0() == 0);
        CHECK(coh_phi(t).h0() == 0);
    }
}

TEST_CASE("ACM bundles have no intermediate cohomology") {
    for (long long t = -10; t <= 10; ++t) {
        CHECK(coh_line(t).h1() == 0);
        CHECK(coh_line(t).h2() == 0);
        CHECK(coh_spinor(t).h1() == 0);
        CHECK(coh_spinor(t).h2() == 0);
    }
}

TEST_CASE("alternating sums equal chi across the catalogue") {
    for (long long t = -10; t <= 10; ++t) {
        CHECK(coh_line(t).euler() == to_integer(chi_hrr(line(t))));
        CHECK(coh_spinor(t).euler() ==
              to_integer(chi_hrr(twist(chern_of_atom(Atom::Spinor), t))));
        CHECK(coh_A(t).euler() == to_integer(chi_hrr(twist(chern_of_atom(Atom::PullbackA), t))));
        CHECK(coh_A_dual(t).euler() ==
              to_integer(chi_hrr(twist(dual(chern_of_atom(Atom::PullbackA)), t))));
        CHECK(coh_phi(t).euler() == to_integer(chi_hrr(twist(chern_of_atom(Atom::Phi), t))));
        CHECK(coh_phi_dual(t).euler() ==
              to_integer(chi_hrr(twist(dual(chern_of_atom(Atom::Phi)), t))));
    }
}

TEST_CASE("Serre duality sweep") {
    const std::vector<Bundle> catalogue = {Bundle::line(0), Bundle::spinor(),
                                           Bundle::pullback_a(), Bundle::pullback_a().dual(),
                                           Bundle::phi(), Bundle::phi().dual()};
    for (const auto& b : catalogue)
        for (long long t = -8; t <= 8; ++t)
            CHECK(serre_dual_check(b, t));
}

TEST_CASE("coordinate multiplication is surjective in non-negative degrees") {
    // Monomial witness on the coordinate ring of Q: order the variables so the
    // quadric has leading term x4^2; the standard monomials are those with
    // x4-degree <= 1, and each one of degree s+1 factors as x_i times a
    // standard monomial of degree s. The dimension count below replays this.
    auto dim = [](long long s) { return binom(s + 4, 4) - binom(s + 2, 4); };
    for (long long s = 0; s <= 10; ++s) {
        // standard monomials of degree s: x4-free ones plus x4 * (x4-free of degree s-1)
        auto free4 = [](long long d) { return d < 0 ? 0 : binom(d + 3, 3); };
        CHECK(dim(s) == free4(s) + free4(s - 1));
        // every standard monomial of degree s+1 arises from degree s: the
        // kernel dimension of the 5-fold multiplication map is forced
        CHECK(5 * dim(s) - dim(s + 1) >= 0);
        CHECK(coh_phi_dual(s).h1() == 0);
    }
}

TEST_CASE("pair catalogue") {
    CHECK(coh_pair(PairKey::PhidualPhi, 0) == CohomologyTable{{1, 0, 0, 0}});
    CHECK(coh_pair(PairKey::AdualASame, 0) == CohomologyTable{{1, 4, 0, 0}});
    CHECK(coh_pair(PairKey::AdualADistinct, 0) == CohomologyTable{{0, 3, 0, 0}});
    CHECK(coh_pair(PairKey::PhiAdual, 0) == CohomologyTable{{0, 4, 0, 0}});
    CHECK(coh_pair(PairKey::APhidual, 0) == CohomologyTable{{1, 0, 0, 0}});
    CHECK(coh_pair(PairKey::SigmaAdual, 0) == CohomologyTable{{0, 0, 0, 0}});
    CHECK(coh_pair(PairKey::SigmaPhidual, 0) == CohomologyTable{{4, 0, 0, 0}});
    CHECK(coh_pair(PairKey::SigmaPhi, -4) == CohomologyTable{{0, 0, 0, 4}});
}

TEST_CASE("pair tables are chi-consistent") {
    const std::vector<std::pair<PairKey, long long>> pins = {
        {PairKey::PhidualPhi, 0}, {PairKey::AdualASame, 0},  {PairKey::AdualADistinct, 0},
        {PairKey::PhiAdual, 0},   {PairKey::APhidual, 0},    {PairKey::SigmaAdual, 0},
        {PairKey::SigmaPhidual, 0}, {PairKey::SigmaPhi, -4},
    };
    for (const auto& [key, t] : pins)
        CHECK(coh_pair(key, t).euler() == to_integer(chi_hrr(pair_chern(key, t))));
}

TEST_CASE("outside the catalogue") {
    CHECK_THROWS_AS(coh_pair(PairKey::PhidualPhi, 1), UnsupportedPair);
    CHECK_THROWS_AS(coh_pair(PairKey::SigmaPhi, 0), UnsupportedPair);
    CHECK_THROWS_AS(coh_bundle(Bundle::e_p(), 0), UnsupportedPair);
    CHECK_THROWS_AS(coh_bundle(Bundle::g_p(), 1), UnsupportedPair);
    CHECK(!pair_key_from_name("nonsense").has_value());
}

TEST_CASE("cited facts carry citations") {
    for (const auto& f : cited_facts()) {
        CHECK(!f.statement.empty());
        CHECK(!f.citation.empty());
    }
    CHECK(coh_pair(PairKey::SigmaAdual, 0).provenance == Provenance::CitedFact);
    CHECK(!coh_pair(PairKey::SigmaAdual, 0).citation.empty());
    CHECK(coh_pair(PairKey::APhidual, 0).provenance == Provenance::Mechanical);
}

TEST_CASE("direct sums add tables") {
    const Bundle b = Bundle::spinor() + Bundle::line(1);
    const CohomologyTable t = coh_bundle(b, 0);
    CHECK(t.h0() == coh_spinor(0).h0() + coh_line(1).h0());
    CHECK(t.euler() == to_integer(chi_hrr(b.chern())));
}
