// Acceptance suite: one line per criterion, exit code = number of failures.
// Criteria 5 and 10 encode two published section counts (h0(Phi) = 4,
// h0(Phi(1)) = 19) that the defining sequence of Phi refutes (they are the
// counts of A); the suite states them as written and reports the mismatch
// rather than silently adjusting the target. See verify-paper, which carries
// the same discrepancy as a flagged line.

#include <algorithm>
#include <chrono>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include "quadric/bott.hpp"
#include "quadric/chow.hpp"
#include "quadric/classify.hpp"
#include "quadric/cli.hpp"
#include "quadric/curves.hpp"
#include "quadric/hrr.hpp"
#include "quadric/qcoh.hpp"
#include "quadric/verify.hpp"

using namespace quadric;

namespace {

int failures = 0;

struct Timer {
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
    double ms() const {
        return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
            .count();
    }
};

void report(int criterion, const std::string& what, bool pass, const std::string& detail = "") {
    std::cout << "criterion " << criterion << ": " << (pass ? "PASS" : "FAIL") << " - " << what;
    if (!detail.empty())
        std::cout << " [" << detail << "]";
    std::cout << '\n';
    if (!pass)
        ++failures;
}

// --- 1: Theorem 1.2 regeneration ------------------------------------------------

void criterion1() {
    Timer timer;
    using Row = std::tuple<long long, long long, long long, long long, long long>;
    std::set<Row> got;
    bool flagged_244_rank3 = false;
    for (long long c1 : {1, 2}) {
        std::ostringstream out, err;
        std::vector<std::string> args{"classify", "--c1", std::to_string(c1), "--indecomposable",
                                      "--json"};
        if (cli::run(args, out, err) != 0) {
            report(1, "Theorem 1.2 regeneration", false, "classify exited nonzero");
            return;
        }
        const auto j = nlohmann::json::parse(out.str());
        for (const auto& e : j["result"]["entries"]) {
            if (e.contains("flagged") && e["flagged"].get<bool>()) {
                flagged_244_rank3 = flagged_244_rank3 ||
                                    (e["c2"] == 4 && e["c3"] == 4 && e["rank_min"] == 3);
                continue;
            }
            got.insert({e["c1"].get<long long>(), e["c2"].get<long long>(),
                        e["c3"].get<long long>(), e["rank_min"].get<long long>(),
                        e["rank_max"].get<long long>()});
        }
    }
    const std::set<Row> expected = {
        {1, 2, 2, 3, 4},  {2, 4, 0, 3, 3},  {2, 4, 2, 3, 3},   {2, 4, 4, 4, 4},
        {2, 5, 5, 4, 5},  {2, 6, 8, 4, 7},  {2, 8, 16, 4, 13},
    };
    const bool pass = got == expected && flagged_244_rank3 && timer.ms() < 1000.0;
    std::ostringstream detail;
    detail << got.size() << " rows, rank-3 (2,4,4) " << (flagged_244_rank3 ? "flagged" : "MISSING")
           << ", " << timer.ms() << " ms";
    report(1, "Theorem 1.2 regenerated from the rule system", pass, detail.str());
}

// --- 2: section 2 identity suite --------------------------------------------------

void criterion2() {
    Timer timer;
    bool ok = true;
    for (long long c2 = -20; c2 <= 20; ++c2) {
        const ChernData e{2, -1, c2, 0};
        ok = ok && chi_formula(e) == Rat(1 - c2);
        ok = ok && chi_formula(twist(e, 1)) == Rat(6 - 2 * c2);
        ok = ok && chi_formula(twist(e, -1)) == Rat(0);
        ok = ok && chi_formula(tensor(e, dual(e))) == Rat(7 - 6 * c2);
    }
    report(2, "rank-2 chi identities for c2 in [-20,20]", ok && timer.ms() < 1000.0);
}

// --- 3: twist against the tensor oracle + the published-line erratum ---------------

void criterion3() {
    std::mt19937 rng(20260810u);
    std::uniform_int_distribution<long long> rank_d(1, 6), c_d(-20, 20), k_d(-5, 5);
    bool ok = true;
    for (int i = 0; i < 1000; ++i) {
        const ChernData c{rank_d(rng), c_d(rng), c_d(rng), c_d(rng)};
        const long long k = k_d(rng);
        ok = ok && twist(c, k) == tensor(c, line(k));
    }
    report(3, "twist equals the Chern-root product on 1000 random inputs", ok);

    const ChernData probe{3, 2, 0, 0};
    const long long truth = twist(probe, 1).c3;
    const long long published = probe.c3 + 1 * (probe.rank - 2) * probe.c2 +
                                2 * binom(probe.rank - 1, 2) + 2 * binom(probe.rank, 3);
    std::ostringstream detail;
    detail << "expansion " << truth << " vs published " << published << " (flagged, not failed)";
    report(3, "published c3 twist line differs by exactly 2 at (3;2,0,0), k=1",
           truth - published == 2, detail.str());
}

// --- 4: chi cross-path -------------------------------------------------------------

void criterion4() {
    Timer timer;
    std::mt19937 rng(424243u);
    std::uniform_int_distribution<long long> rank_d(1, 8), c_d(-30, 30);
    bool ok = true;
    for (int i = 0; i < 10000; ++i) {
        const ChernData c{rank_d(rng), c_d(rng), c_d(rng), c_d(rng)};
        ok = ok && chi_formula(c) == chi_hrr(c);
    }
    std::ostringstream detail;
    detail << timer.ms() << " ms";
    report(4, "chi closed formula equals Riemann-Roch on 10000 random inputs",
           ok && timer.ms() < 2000.0, detail.str());
}

// --- 5: cohomology ledger ------------------------------------------------------------

void criterion5() {
    struct Item {
        const char* what;
        long long expected;
        long long actual;
    };
    const std::vector<Item> items = {
        {"h0(O_Q(2)) = 14", 14, coh_line(2).h0()},
        {"h0(Sigma) = 4", 4, coh_spinor(0).h0()},
        {"h0(A) = 4", 4, coh_A(0).h0()},
        {"h0(A(1)) = 19", 19, coh_A(1).h0()},
        {"h0(Phi) = 4", 4, coh_phi(0).h0()},
        {"h0(Phi(1)) = 19", 19, coh_phi(1).h0()},
        {"h1(A^v) = 1", 1, coh_A_dual(0).h1()},
        {"h1(Phi^v) = 0", 0, coh_phi_dual(0).h1()},
        {"h0(Phi^v x Phi) = 1", 1, coh_pair(PairKey::PhidualPhi, 0).h0()},
        {"h1(Phi^v x Phi) = 0", 0, coh_pair(PairKey::PhidualPhi, 0).h1()},
        {"h1(A_O^v x A_P) = 4 (same center)", 4, coh_pair(PairKey::AdualASame, 0).h1()},
        {"h1(A_O^v x A_P) = 3 (distinct centers)", 3, coh_pair(PairKey::AdualADistinct, 0).h1()},
        {"h1(Phi x A^v) = 4", 4, coh_pair(PairKey::PhiAdual, 0).h1()},
        {"h1(A x Phi^v) = 0", 0, coh_pair(PairKey::APhidual, 0).h1()},
        {"h1(Sigma x A_P^v) = 0 (cited fact)", 0, coh_pair(PairKey::SigmaAdual, 0).h1()},
    };
    bool all = true;
    std::ostringstream detail;
    for (const auto& it : items) {
        if (it.expected != it.actual) {
            all = false;
            detail << it.what << " computed " << it.actual << "; ";
        }
    }
    if (!all)
        detail << "the stated Phi section counts are the counts of A; chi(Phi) = 5 with no "
                  "higher cohomology forces 5 and 24 (see the flagged verify-paper line)";
    const bool cited = coh_pair(PairKey::SigmaAdual, 0).provenance == Provenance::CitedFact;
    report(5, "cohomology ledger, each value exact", all && cited, detail.str());
}

// --- 6: Serre duality sweep ------------------------------------------------------------

void criterion6() {
    const std::vector<Bundle> catalogue = {Bundle::line(0), Bundle::spinor(),
                                           Bundle::pullback_a(), Bundle::pullback_a().dual(),
                                           Bundle::phi(), Bundle::phi().dual()};
    bool ok = true;
    for (const auto& b : catalogue) {
        for (long long t = -10; t <= 10; ++t) {
            ok = ok && serre_dual_check(b, t);
            ok = ok && coh_bundle(b, t).euler() == to_integer(chi_hrr(twist(b.chern(), t)));
        }
    }
    report(6, "Serre duality and chi consistency across the catalogue, |t| <= 10", ok);
}

// --- 7: trisecant values ------------------------------------------------------------------

void criterion7() {
    const bool ok = trisecant(5, 0) == 1 && trisecant(6, 0) == 4 && trisecant(6, 1) == 2 &&
                    trisecant(7, 3) == 1 && trisecant(5, 1) == 0 && trisecant(6, 2) == 0 &&
                    trisecant(8, 5) == 0;
    report(7, "trisecant counts t(5,0), t(6,0), t(6,1), t(7,3) and the catalogue zeros", ok);
}

// --- 8: del Pezzo solver --------------------------------------------------------------------

std::vector<DelPezzoClass> brute(long long d, long long g) {
    std::vector<DelPezzoClass> out;
    for (long long a = 1; a <= 20; ++a)
        for (long long b1 = 0; b1 <= 20; ++b1)
            for (long long b2 = 0; b2 <= b1; ++b2)
                for (long long b3 = 0; b3 <= b2; ++b3)
                    for (long long b4 = 0; b4 <= b3; ++b4)
                        for (long long b5 = 0; b5 <= b4; ++b5) {
                            const long long sb = b1 + b2 + b3 + b4 + b5;
                            if (3 * a - sb != d)
                                continue;
                            if (a * a !=
                                2 * g - 2 + d + b1 * b1 + b2 * b2 + b3 * b3 + b4 * b4 + b5 * b5)
                                continue;
                            if (!(a > b1 + b2 && 2 * a > sb))
                                continue;
                            out.push_back(DelPezzoClass{a, {b1, b2, b3, b4, b5}});
                        }
    std::sort(out.begin(), out.end());
    return out;
}

void criterion8() {
    Timer timer;
    const auto l1 = delpezzo_classes(5, 1);
    const bool ok1 = l1.size() == 1 && l1[0] == DelPezzoClass{3, {1, 1, 1, 1, 0}};
    const auto l2 = delpezzo_classes(6, 2);
    const bool ok2 = l2.size() == 2 && l2[0] == DelPezzoClass{4, {2, 1, 1, 1, 1}} &&
                     l2[1] == DelPezzoClass{5, {2, 2, 2, 2, 1}};
    bool agree = true;
    for (long long d = 1; d <= 10 && agree; ++d)
        for (long long g = 0; g <= 6 && agree; ++g)
            agree = delpezzo_classes(d, g) == brute(d, g);
    std::ostringstream detail;
    detail << timer.ms() << " ms";
    report(8, "del Pezzo classes: (5,1) unique, (6,2) the two published, brute-force agreement",
           ok1 && ok2 && agree && timer.ms() < 1000.0, detail.str());
}

// --- 9: alpha values ----------------------------------------------------------------------------

void criterion9() {
    struct Case {
        CurveData curve;
        long long expected;
    };
    const std::vector<Case> cases = {
        {CurveData::two_conics(), 0},          {CurveData::irreducible(4, 0), 1},
        {CurveData::irreducible(5, 1), 3},     {CurveData::irreducible(6, 2), 5},
        {CurveData::irreducible(8, 5), 10},
    };
    bool ok = true;
    for (const auto& c : cases) {
        const auto a = alpha(c.curve, 2);
        ok = ok && a.exact && *a.exact == c.expected && *a.exact >= a.lower &&
             *a.exact <= a.upper;
    }
    report(9, "alpha = (0, 1, 3, 5, 10) for the five curve types, inside the bounds", ok);
}

// --- 10: verify-paper full run ---------------------------------------------------------------------

void criterion10() {
    Timer timer;
    const VerifyReport rep = run_verify();
    std::ostringstream detail;
    detail << rep.failed << " failed, " << rep.flagged << " flagged, " << timer.ms() << " ms";
    if (rep.flagged != 2)
        detail << "; the suite flags a third understood discrepancy (the Phi section counts) "
                  "beyond the two the target anticipates";
    report(10, "verify-paper: 0 failures, exactly 2 flagged, < 10 s",
           rep.failed == 0 && rep.flagged == 2 && timer.ms() < 10000.0, detail.str());
}

} // namespace

int main() {
    criterion1();
    criterion2();
    criterion3();
    criterion4();
    criterion5();
    criterion6();
    criterion7();
    criterion8();
    criterion9();
    criterion10();
    std::cout << (failures == 0 ? "all criteria passed" : "criteria failed") << " (" << failures
              << " failures)\n";
    return failures == 0 ? 0 : 1;
}
