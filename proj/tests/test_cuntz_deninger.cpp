#include <random>

#include "doctest.h"
#include "ncwitt/cuntz_deninger.hpp"
#include "ncwitt/error.hpp"
#include "ncwitt/witt.hpp"
#include "support/oracles.hpp"

using namespace ncwitt;

namespace {

const GeneratorSetPtr kXY = make_generators({"X", "Y"});
const CoefficientRing kZ = CoefficientRing::integers();

FreePoly X() { return FreePoly::generator(kXY, kZ, 0); }
FreePoly Y() { return FreePoly::generator(kXY, kZ, 1); }

FreePoly random_monomial(std::mt19937_64& rng, std::size_t max_deg) {
    return FreePoly::monomial(kXY, kZ, testing::random_word(rng, 2, max_deg),
                              testing::random_coeff(rng, 1, 3));
}

} // namespace

TEST_CASE("cd_teichmuller is the power sequence") {
    const auto t = cd_teichmuller(X(), 3, 2);
    REQUIRE(t.size() == 3);
    CHECK(t[0] == X());
    CHECK(t[1] == pow(X(), 2));
    CHECK(t[2] == pow(X(), 4));

    const auto ones = cd_teichmuller(FreePoly::one(kXY, kZ), 4, 5);
    for (const FreePoly& c : ones) {
        CHECK(c == FreePoly::one(kXY, kZ));
    }

    const auto s = cd_teichmuller(X() + Y(), 2, 2);
    CHECK(s[1] == X() * X() + X() * Y() + Y() * X() + Y() * Y());
}

TEST_CASE("cd_verschiebung is the p-scaled shift") {
    const auto v = cd_verschiebung({X(), Y(), X() * Y()}, 3);
    REQUIRE(v.size() == 3);
    CHECK(v[0].is_zero());
    CHECK(v[1] == X().scaled(3));
    CHECK(v[2] == Y().scaled(3));

    const std::vector<FreePoly> zero(3, FreePoly::zero(kXY, kZ));
    for (const FreePoly& c : cd_verschiebung(zero, 2)) {
        CHECK(c.is_zero());
    }

    const auto vv = cd_verschiebung(cd_verschiebung(cd_teichmuller(X(), 3, 2), 2), 2);
    CHECK(vv[0].is_zero());
    CHECK(vv[1].is_zero());
    CHECK(vv[2] == X().scaled(4));
}

TEST_CASE("realize matches the coordinate formula") {
    const auto r1 = realize(TeichWitness(0, {X(), Y()}), 2, 2);
    CHECK(r1[0] == X() * Y());
    CHECK(r1[1] == X() * X() * Y() * Y());

    const auto r2 = realize(TeichWitness(1, {X()}), 3, 2);
    CHECK(r2[0].is_zero());
    CHECK(r2[1] == X().scaled(2));
    CHECK(r2[2] == (X() * X()).scaled(2));

    const auto r3 = realize(TeichWitness(0, {X()}), 4, 3);
    const auto t = cd_teichmuller(X(), 4, 3);
    for (std::size_t k = 0; k < 4; ++k) {
        CHECK(r3[k] == t[k]);
    }
}

TEST_CASE("realize agrees with verschiebung-of-teichmuller-products") {
    std::mt19937_64 rng(21);
    const mpz_class primes[] = {2, 3};
    for (int iter = 0; iter < 50; ++iter) {
        const mpz_class& p = primes[iter % 2];
        const std::size_t n = 1 + iter % 4;
        const unsigned long m = iter % n;
        std::vector<FreePoly> factors;
        const std::size_t r = 1 + iter % 3;
        for (std::size_t j = 0; j < r; ++j) {
            factors.push_back(random_monomial(rng, 2));
        }
        // coordinatewise product of the Teichmuller vectors, then m shifts
        std::vector<FreePoly> expected(n, FreePoly::one(kXY, kZ));
        for (const FreePoly& a : factors) {
            const auto t = cd_teichmuller(a, n, p);
            for (std::size_t k = 0; k < n; ++k) {
                expected[k] = expected[k] * t[k];
            }
        }
        for (unsigned long s = 0; s < m; ++s) {
            expected = cd_verschiebung(expected, p);
        }
        REQUIRE(realize(TeichWitness(m, factors), n, p) == expected);
    }
}

TEST_CASE("TeichWitness ordering is a strict total order usable in maps") {
    const TeichWitness a(0, {X()});
    const TeichWitness b(1, {X()});
    const TeichWitness c(0, {X(), Y()});
    const TeichWitness d(0, {Y()});
    CHECK(a < b);
    CHECK(a < c);
    CHECK(a < d);
    CHECK(!(a < a));
    CHECK(a == TeichWitness(0, {X()}));
    CHECK_THROWS_AS(TeichWitness(0, {}), DomainError);
}

TEST_CASE("omega_embed certifies the ghost identity") {
    const XElement x1 = omega_embed({X()}, 5);
    REQUIRE(x1.trunc() == 1);
    CHECK(x1.realized()[0] == X());
    CHECK(x1.combo().size() == 1);

    const XElement x2 = omega_embed({X(), Y()}, 2);
    REQUIRE(x2.combo().size() == 2);
    CHECK(x2.combo().at(TeichWitness(0, {X()})) == 1);
    CHECK(x2.combo().at(TeichWitness(1, {Y()})) == 1);
    CHECK(x2.realized() == ghost_components({X(), Y()}, 2));
    CHECK(x2.realized()[1] == X() * X() + Y().scaled(2));
    CHECK(x2.certificate_ok());

    const XElement x3 = omega_embed({FreePoly::zero(kXY, kZ), X() * Y()}, 3);
    REQUIRE(x3.combo().size() == 1);
    CHECK(x3.combo().at(TeichWitness(1, {X() * Y()})) == 1);
    CHECK(x3.realized()[0].is_zero());
    CHECK(x3.realized()[1] == (X() * Y()).scaled(3));
}

TEST_CASE("omega factorization on 50 random tuples, n=3, p in {2,3}") {
    std::mt19937_64 rng(22);
    const mpz_class primes[] = {2, 3};
    for (int iter = 0; iter < 50; ++iter) {
        const mpz_class& p = primes[iter % 2];
        std::vector<FreePoly> coords;
        for (int i = 0; i < 3; ++i) {
            coords.push_back(testing::random_poly(rng, kXY, kZ, 2, 3, 4));
        }
        if (coords[0].is_zero() && coords[1].is_zero() && coords[2].is_zero()) {
            coords[0] = X();
        }
        const XElement omega = omega_embed(coords, p);
        REQUIRE(omega.certificate_ok());
        REQUIRE(omega.realized() == ghost_components(coords, p));
        REQUIRE(gamma_bar(omega.realized(), p) == ghost_map(coords, p));
    }
}

TEST_CASE("XElement combos add and scale linearly: 100 random combos") {
    std::mt19937_64 rng(23);
    const mpz_class primes[] = {2, 3};
    for (int iter = 0; iter < 100; ++iter) {
        const mpz_class& p = primes[iter % 2];
        const std::size_t n = 2 + iter % 3; // n <= 4
        XElement::Combo ca, cb;
        const std::size_t terms = 1 + iter % 3;
        for (std::size_t t = 0; t < terms; ++t) {
            ca[TeichWitness(iter % n, {random_monomial(rng, 2)})] +=
                testing::random_coeff(rng, -3, 3);
            cb[TeichWitness((iter + 1) % n, {random_monomial(rng, 2),
                                             random_monomial(rng, 2)})] +=
                testing::random_coeff(rng, -3, 3);
        }
        ca[TeichWitness(0, {X()})] += 1; // keep nonempty after zero-dropping
        cb[TeichWitness(0, {Y()})] += 1;
        const XElement a(p, n, ca);
        const XElement b(p, n, cb);
        REQUIRE(a.certificate_ok());
        REQUIRE(b.certificate_ok());

        const XElement sum = a + b;
        REQUIRE(sum.certificate_ok());
        for (std::size_t k = 0; k < n; ++k) {
            REQUIRE(sum.realized()[k] == a.realized()[k] + b.realized()[k]);
        }
        const XElement tripled = a.scaled(3);
        REQUIRE(tripled.certificate_ok());
        for (std::size_t k = 0; k < n; ++k) {
            REQUIRE(tripled.realized()[k] == a.realized()[k].scaled(3));
        }
        const XElement cancelled = a + a.scaled(-1);
        REQUIRE(cancelled.combo().empty());
        for (std::size_t k = 0; k < n; ++k) {
            REQUIRE(cancelled.realized()[k].is_zero());
        }
    }
}

TEST_CASE("gamma_bar projects coordinatewise") {
    const GhostVector g1 = gamma_bar(cd_teichmuller(X() * Y(), 2, 2), 2);
    CHECK(g1[0] == project(X() * Y()));
    CHECK(g1[1] == project(X() * Y() * X() * Y()));

    const GhostVector g2 = gamma_bar(realize(TeichWitness(0, {X(), Y()}), 2, 2), 2);
    CHECK(g2[0] == project(X() * Y()));
    CHECK(g2[1] == project(X() * X() * Y() * Y()));
    CHECK(g1[1] != g2[1]);

    const GhostVector z = gamma_bar(std::vector<FreePoly>(3, FreePoly::zero(kXY, kZ)), 3);
    for (std::size_t i = 0; i < 3; ++i) {
        CHECK(z[i].is_zero());
    }
}

TEST_CASE("V-compatibility of gamma_bar") {
    std::mt19937_64 rng(24);
    const mpz_class primes[] = {2, 3};
    for (int iter = 0; iter < 40; ++iter) {
        const mpz_class& p = primes[iter % 2];
        const std::size_t n = 2 + iter % 3;
        std::vector<FreePoly> v;
        for (std::size_t i = 0; i < n; ++i) {
            v.push_back(testing::random_poly(rng, kXY, kZ, 2, 3, 4));
        }
        const GhostVector g = gamma_bar(v, p);
        const GhostVector gv = gamma_bar(cd_verschiebung(v, p), p);
        REQUIRE(gv[0].is_zero());
        for (std::size_t k = 1; k < n; ++k) {
            REQUIRE(gv[k] == g[k - 1].scaled(p));
        }
    }
}

TEST_CASE("cross-construction Teichmuller agreement") {
    std::mt19937_64 rng(25);
    const mpz_class primes[] = {2, 3};
    for (int iter = 0; iter < 100; ++iter) {
        const mpz_class& p = primes[iter % 2];
        const std::size_t n = 1 + iter % 4; // n <= 4
        // p^{n-1} reaches 27; keep the base a monomial (plus a constant when
        // the exponent stays small) so expansions stay exact and small.
        mpz_class top;
        mpz_pow_ui(top.get_mpz_t(), p.get_mpz_t(), static_cast<unsigned long>(n - 1));
        FreePoly a = random_monomial(rng, 2);
        if (top <= 8 && rng() % 2 == 0) {
            a = a + FreePoly::constant(kXY, kZ, testing::random_coeff(rng, -2, 2));
        }
        REQUIRE(gamma_bar(cd_teichmuller(a, n, p), p) == ghost_image(teichmuller(a, n, p)));
    }
}

TEST_CASE("eta_bar on Teichmuller products reproduces the power sequence") {
    for (const long p : {2L, 3L, 5L}) {
        const ESymbol e = ESymbol::teichmuller_product(p, 3, {X(), Y()});
        const GhostVector g = eta_bar(e);
        const unsigned long pe = static_cast<unsigned long>(p);
        CHECK(g[0] == project(X() * Y()));
        CHECK(g[1] == project(pow(X(), pe) * pow(Y(), pe)));
        CHECK(g[2] == project(pow(X(), pe * pe) * pow(Y(), pe * pe)));
    }

    const ESymbol one = ESymbol::teichmuller_product(3, 4, {FreePoly::one(kXY, kZ)});
    const GhostVector gone = eta_bar(one);
    for (std::size_t i = 0; i < 4; ++i) {
        CHECK(gone[i] == project(FreePoly::one(kXY, kZ)));
    }

    const ESymbol vx = verschiebung(ESymbol::teichmuller_product(2, 2, {X()}));
    const GhostVector gv = eta_bar(vx);
    CHECK(gv[0].is_zero());
    CHECK(gv[1] == project(X().scaled(2)));
}

TEST_CASE("ESymbol addition is formal and eta_bar is additive on it") {
    const ESymbol a = ESymbol::teichmuller_product(2, 3, {X()});
    const ESymbol b = ESymbol::teichmuller_product(2, 3, {Y()});
    const ESymbol s = a + b;
    CHECK(s.combo().size() == 2);
    CHECK(eta_bar(s) == eta_bar(a) + eta_bar(b));

    const ESymbol cancelled = a + ESymbol(2, 3, {{TeichWitness(0, {X()}), -1}});
    CHECK(cancelled.combo().empty());
    for (const NecklacePoly& c : eta_bar(cancelled).coords()) {
        CHECK(c.is_zero());
    }
}

TEST_CASE("prime and truncation mismatches are rejected") {
    const XElement a = omega_embed({X()}, 2);
    const XElement b = omega_embed({X()}, 3);
    CHECK_THROWS_AS(a + b, MismatchError);
    CHECK_THROWS_AS(omega_embed({X(), Y()}, 2) + a, MismatchError);
    CHECK_THROWS_AS(XElement(4, 2, {{TeichWitness(0, {X()}), 1}}), DomainError);
    CHECK_THROWS_AS(XElement(2, 0, {{TeichWitness(0, {X()}), 1}}), DomainError);
    CHECK_THROWS_AS(XElement(2, 2, XElement::Combo{}), DomainError);
    CHECK_THROWS_AS(realize(TeichWitness(
                        0, {FreePoly::generator(kXY, CoefficientRing::modular(2), 0)}),
                        2, 2),
                    DomainError);
}
