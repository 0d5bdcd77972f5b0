// Acceptance suite: one line per criterion, exit status 1 if any fails.
//
// Each criterion is exact (rational or integer equality). Where a wall-clock
// budget is stated, exceeding it fails the criterion too.

#include "eltrans/calculus.hpp"
#include "eltrans/chain.hpp"
#include "eltrans/explorer.hpp"
#include "eltrans/monoid.hpp"

#include "generators.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>

using namespace eltrans;

namespace {

struct Outcome {
    bool ok = true;
    std::ostringstream detail;

    void require(bool cond, const std::string& what) {
        if (!cond && ok) {
            ok = false;
            detail << "first failure: " << what << "; ";
        }
    }
};

struct Criterion {
    int number;
    std::string name;
    std::optional<double> budget_seconds;  // none when the criterion states no limit
    std::function<void(Outcome&)> body;
};

std::vector<Word> all_words(std::size_t max_length) {
    std::vector<Word> out;
    for (std::size_t len = 0; len <= max_length; ++len) {
        for (std::uint32_t bits = 0; bits < (1u << len); ++bits) {
            std::vector<Letter> letters;
            for (std::size_t i = 0; i < len; ++i) letters.push_back((bits >> i) & 1 ? Letter::R : Letter::L);
            out.emplace_back(std::move(letters));
        }
    }
    return out;
}

void oracle_equivalence(Outcome& o) {
    const auto words = words_not_starting_with_r(10);
    std::size_t checks = 0;
    for (const auto& w : words) {
        for (int mu = 1; mu <= 3; ++mu) {
            auto rep = oracle_check(w, mu);
            o.require(rep.passed(), "oracle_check(" + w.str() + ", " + std::to_string(mu) + ")");
            ++checks;
        }
    }
    o.detail << words.size() << " words x 3 multiplicities = " << checks << " oracle checks";
}

void bijection_round_trips(Outcome& o) {
    std::size_t fractions = 0;
    for (int total = 2; total <= 200; ++total) {
        for (int r = 1; r < total; ++r) {
            const int s = total - r;
            if (std::gcd(r, s) != 1) continue;
            PositiveFraction q(r, s);
            o.require(matrix_to_fraction(word_to_matrix(fraction_to_word(q))) == q,
                      "fraction->word->matrix->fraction at " + q.str());
            o.require(cf_eval(cf_of_fraction(q)) == q, "fraction->cf->fraction at " + q.str());
            ++fractions;
        }
    }
    const auto words = all_words(12);
    for (const auto& w : words) {
        o.require(cf_eval(word_to_cf(w)) == matrix_to_fraction(word_to_matrix(w)),
                  "commutative square at '" + w.str() + "'");
    }
    o.detail << fractions << " reduced fractions with r+s <= 200, " << words.size() << " words of length <= 12";
}

void pullback_closed_form(Outcome& o) {
    std::mt19937_64 rng(4);
    std::size_t kernel_checks = 0;
    for (int trial = 0; trial < 500; ++trial) {
        const Word w = testing::random_word(rng, 8, false);
        const Integer l = testing::uniform(rng, 1, 5);
        const Integer mu = testing::uniform(rng, 1, 5);
        const auto cf = word_to_cf(w);
        const auto q = word_to_fraction(w);
        const auto gamma = mumford_pullback_chain(cf, l, mu).gamma;
        const std::string tag = "(" + w.str() + ", l=" + l.str() + ", mu=" + mu.str() + ")";

        o.require(gamma.size() == cf.size(), "gamma length " + tag);
        if (gamma.size() != cf.size()) continue;
        o.require(gamma.front() == Rational(q.s(), q.r() * l * mu), "gamma_1 = s/(r l mu) " + tag);
        const auto& s = cf.entries();
        const std::size_t m = s.size();
        auto at = [&](std::size_t i) -> Rational {
            if (i == 0) return Rational(Integer(1), l * mu);
            if (i == m + 1) return Rational(0);
            return gamma[i - 1];
        };
        for (std::size_t i = 1; i <= m; ++i) {
            o.require(at(i - 1) - Rational(s[i - 1]) * at(i) + at(i + 1) == 0, "tridiagonal equation " + tag);
        }
        simulate_blowups(w, mu, [&](const ChainFiber& f) {
            o.require(f.satisfies_fiber_kernel(), "fibre kernel identity " + tag);
            ++kernel_checks;
        });
    }
    o.detail << "500 cases, " << kernel_checks << " blow-up steps checked";
}

void calculus_invariants(Outcome& o) {
    std::mt19937_64 rng(1000);
    std::size_t steps_total = 0;
    for (int trial = 0; trial < 1000; ++trial) {
        auto st = init_from_p1_bundle(testing::uniform(rng, 1, 5), testing::uniform(rng, 1, 12));
        o.require(st.s2() <= st.lambda(), "S^2 <= lambda at init");
        const auto steps = testing::uniform(rng, 1, 15);
        for (std::int64_t k = 0; k < steps; ++k) {
            const auto site = testing::random_site(rng, 8, 3, 3);
            const auto next = apply_elementary_transformation(st, site);
            const std::string tag = "trial " + std::to_string(trial) + " step " + std::to_string(k);
            o.require(next.lambda() > st.lambda(), "lambda strictly increases, " + tag);
            o.require(next.s2() > st.s2(), "S^2 strictly increases, " + tag);
            o.require(next.s2() <= next.lambda(), "S^2 <= lambda, " + tag);
            const auto fiber = simulate_blowups(site.w, st.mu(site.b));
            const auto& e = fiber.last_exceptional();
            o.require(next.lambda() - st.lambda() == Rational(site.d * e.canonical_mult, e.fiber_mult),
                      "Delta lambda = d K_E / m_E, " + tag);
            st = next;
            ++steps_total;
        }
    }
    o.detail << "1000 sequences, " << steps_total << " transformations";
}

void contraction_identity(Outcome& o) {
    std::mt19937_64 rng(5);
    std::size_t states = 0, del_pezzo = 0;
    while (states < 1000) {
        const auto g = testing::uniform(rng, 1, 5), e = testing::uniform(rng, 1, 12);
        auto st = init_from_p1_bundle(g, e);
        const auto steps = testing::uniform(rng, 0, 6);
        for (std::int64_t k = 0; k < steps; ++k) {
            st = apply_elementary_transformation(st, testing::random_site(rng, 5, 2, 3));
        }
        if (st.s2() >= 0) continue;
        ++states;
        const Rational& lam = st.lambda();
        const Rational& s2 = st.s2();
        o.require(4 * s2 - 4 * lam - (lam - 2 * s2) * (lam - 2 * s2) / s2 == lam * lam / -s2,
                  "pullback identity at lambda=" + to_string(lam) + ", S^2=" + to_string(s2));
        if (del_pezzo_test(st)) {
            ++del_pezzo;
            const auto data = contract(st);
            o.require(data.k_squared > 0, "K^2 > 0 for a del Pezzo state");
            if (st.history().empty()) {
                const Rational expected(Integer((2 * g - 2 - e) * (2 * g - 2 - e)), Integer(e));
                o.require(data.k_squared == expected, "K^2 = (2g-2-e)^2/e for the bundle (" + std::to_string(g) +
                                                          ", " + std::to_string(e) + ")");
            }
        }
    }
    std::size_t bundles = 0;
    for (std::int64_t g = 1; g <= 5; ++g) {
        for (std::int64_t e = 1; e <= 12; ++e) {
            if (!p1_bundle_contraction_test(g, e)) continue;
            ++bundles;
            const Rational expected(Integer((2 * g - 2 - e) * (2 * g - 2 - e)), Integer(e));
            o.require(contract(init_from_p1_bundle(g, e)).k_squared == expected, "bundle K^2");
        }
    }
    o.detail << states << " states (" << del_pezzo << " del Pezzo), " << bundles << " contractible bundles";
}

void boundary_behavior(Outcome& o) {
    o.require(!p1_bundle_contraction_test(2, 2), "(2,2) must fail the contraction test");
    o.require(p1_bundle_contraction_test(2, 3), "(2,3) must pass the contraction test");
    o.require(init_from_p1_bundle(2, 3).lambda() == -1, "(2,3) has lambda = -1");

    ExplorationConfig c3;
    c3.g = 2;
    c3.e = 3;
    c3.max_steps = 1;
    c3.max_word_length = 8;
    const auto h3 = enumerate(c3);
    o.require(h3.nodes.size() == 1, "(2,3) admits no depth-1 extension with d = l = 1");
    o.require(!witness_path(c3, 1).has_value(), "(2,3) has no depth-1 witness");

    ExplorationConfig c4 = c3;
    c4.e = 4;
    c4.max_word_length = 1;
    const auto h4 = enumerate(c4);
    std::vector<std::string> words;
    for (const auto& n : h4.nodes) {
        if (n.edge) words.push_back(n.edge->w.empty() ? "-" : n.edge->w.str());
    }
    o.require(words == std::vector<std::string>{"-", "L"}, "(2,4) depth-1 extensions are exactly {-, L}");
    for (const auto& n : h4.nodes) {
        if (n.edge) o.require(n.state.lambda() == -1, "(2,4) children reach lambda = -1");
    }
    o.detail << "(2,3): " << h3.nodes.size() - 1 << " children over words of length <= 8; (2,4): "
             << words.size() << " children over words of length <= 1";
}

void infinite_hierarchy_witness(Outcome& o) {
    auto st = init_from_p1_bundle(2, 6);
    o.require(st.lambda() == -4, "(2,6) starts at lambda = -4");
    Rational partial = -4;
    for (int k = 0; k < 30; ++k) {
        st = apply_elementary_transformation(st, TransformSite{"b1", 1, 1, Word::parse("L")});
        partial += Rational(Integer(1), Integer(1) << k);
        o.require(st.lambda() == partial, "lambda = -4 + sum 2^-i at step " + std::to_string(k + 1));
        o.require(st.lambda() < -2, "lambda < -2 at step " + std::to_string(k + 1));
        o.require(del_pezzo_test(st), "del Pezzo at step " + std::to_string(k + 1));
        o.require(contract(st).k_squared > 0, "K^2 > 0 at step " + std::to_string(k + 1));
    }
    o.require(st.mu("b1") == (Integer(1) << 30), "mu = 2^30");
    o.detail << "depth 30, final lambda = " << to_string(st.lambda()) << ", mu = " << st.mu("b1");
}

}  // namespace

int main() {
    const std::vector<Criterion> criteria{
        {1, "oracle equivalence", 10.0, oracle_equivalence},
        {2, "bijection round-trips", 10.0, bijection_round_trips},
        {3, "pullback closed form", 5.0, pullback_closed_form},
        {4, "calculus invariants", 20.0, calculus_invariants},
        {5, "contraction identity", 5.0, contraction_identity},
        {6, "boundary behavior", std::nullopt, boundary_behavior},
        {7, "infinite-hierarchy witness", 2.0, infinite_hierarchy_witness},
    };

    int failures = 0;
    for (const auto& c : criteria) {
        Outcome o;
        const auto start = std::chrono::steady_clock::now();
        try {
            c.body(o);
        } catch (const std::exception& ex) {
            o.ok = false;
            o.detail << "exception: " << ex.what();
        }
        const double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        const bool in_time = !c.budget_seconds || elapsed <= *c.budget_seconds;
        const bool pass = o.ok && in_time;
        if (!pass) ++failures;
        char timing[64];
        if (c.budget_seconds) {
            std::snprintf(timing, sizeof timing, "%.3f s / %.0f s", elapsed, *c.budget_seconds);
        } else {
            std::snprintf(timing, sizeof timing, "%.3f s", elapsed);
        }
        std::cout << (pass ? "[PASS] " : "[FAIL] ") << c.number << ". " << c.name << " (" << timing
                  << (in_time ? "" : ", over budget") << "): " << o.detail.str() << "\n";
    }
    std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed") << "\n";
    return failures == 0 ? 0 : 1;
}
