#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "fnf/expr.hpp"
#include "fnf/jets.hpp"

using namespace fnf;

namespace {

FieldElement fe(const std::string& s) { return parse_coefficient(s); }

Jet2 jet(int order, std::initializer_list<std::tuple<int, int, const char*>> entries) {
    Jet2 j(order);
    for (auto& [i, k, s] : entries) j.set_coeff(i, k, fe(s));
    return j;
}

FormalMapJet random_identity_tangent_map(std::mt19937_64& rng, int order, int degree) {
    std::uniform_int_distribution<int> coeff(-2, 2);
    Jet2 u = Jet2::monomial(order, 1, 0);
    Jet2 v = Jet2::monomial(order, 0, 1);
    for (int d = 2; d <= degree; ++d)
        for (int i = 0; i <= d; ++i) {
            u.add_coeff(i, d - i, FieldElement(coeff(rng)));
            v.add_coeff(i, d - i, FieldElement(coeff(rng)));
        }
    return FormalMapJet(std::move(u), std::move(v));
}

}  // namespace

TEST_CASE("jet arithmetic reference examples") {
    Jet2 xpy = jet(3, {{1, 0, "1"}, {0, 1, "1"}});
    Jet2 xmy = jet(3, {{1, 0, "1"}, {0, 1, "-1"}});
    CHECK(xpy * xmy == jet(3, {{2, 0, "1"}, {0, 2, "-1"}}));

    CHECK(jet(5, {{2, 1, "1"}}).partial_x() == jet(5, {{1, 1, "2"}}));

    // x^N * y truncates to zero at order N
    int N = 4;
    CHECK((Jet2::monomial(N, N, 0) * Jet2::monomial(N, 0, 1)).is_zero());
}

TEST_CASE("jet invariants: no stored zeros, vanishing order") {
    Jet2 j(5);
    j.set_coeff(2, 1, fe("t1"));
    j.add_coeff(2, 1, fe("-t1"));
    CHECK(j.is_zero());
    CHECK(j.coefficients().empty());
    j.set_coeff(3, 1, fe("1"));
    CHECK(j.vanishing_order() == 4);
    CHECK(Jet2(5).vanishing_order() == 6);
}

TEST_CASE("compose_map reference examples") {
    int N = 3;
    FormalMapJet id = FormalMapJet::identity(N);
    FormalMapJet phi(jet(N, {{1, 0, "1"}, {0, 2, "1"}}), Jet2::monomial(N, 0, 1));
    CHECK(compose_map(id, phi) == phi);
    CHECK(compose_map(phi, id) == phi);

    // (x+y^2, y) after (x, y+x^2): substitute into outer by hand to degree 3:
    //   U = x + (y+x^2)^2 = x + y^2 + 2x^2 y + x^4 -> x + y^2 + 2x^2 y
    //   V = y + x^2
    FormalMapJet psi(Jet2::monomial(N, 1, 0), jet(N, {{0, 1, "1"}, {2, 0, "1"}}));
    FormalMapJet comp = compose_map(phi, psi);
    CHECK(comp.U == jet(N, {{1, 0, "1"}, {0, 2, "1"}, {2, 1, "2"}}));
    CHECK(comp.V == jet(N, {{0, 1, "1"}, {2, 0, "1"}}));

    // composition with the homothety (sx, sy) scales degree-d terms by s^d
    int M = 4;
    FormalMapJet hom(Jet2::monomial(M, 1, 0, fe("t5")), Jet2::monomial(M, 0, 1, fe("t5")));
    FormalMapJet cubic(jet(M, {{1, 0, "1"}, {2, 1, "t1"}}), jet(M, {{0, 1, "1"}, {0, 3, "t2"}}));
    FormalMapJet scaled = compose_map(cubic, hom);
    CHECK(scaled.U == jet(M, {{1, 0, "t5"}, {2, 1, "t1*t5^3"}}));
    CHECK(scaled.V == jet(M, {{0, 1, "t5"}, {0, 3, "t2*t5^3"}}));
}

TEST_CASE("formal map validation") {
    int N = 3;
    CHECK_THROWS_AS(FormalMapJet(jet(N, {{0, 0, "1"}, {1, 0, "1"}}), Jet2::monomial(N, 0, 1)),
                    ValidationError);
    // singular linear part
    CHECK_THROWS_AS(FormalMapJet(Jet2::monomial(N, 1, 0), Jet2::monomial(N, 1, 0)), ValidationError);
    CHECK(FormalMapJet::identity(N).is_identity_tangent());
    FormalMapJet swap(Jet2::monomial(N, 0, 1), Jet2::monomial(N, 1, 0));
    CHECK_FALSE(swap.is_identity_tangent());
    CHECK(swap.linear_determinant() == FieldElement(-1));
}

TEST_CASE("pullback reference examples") {
    int N = 4;
    OneFormJet eta(jet(N, {{0, 2, "1"}}), Jet2(N));  // y^2 dx
    CHECK(pullback(eta, FormalMapJet::identity(N)) == eta);

    // phi = (x, 2y): y^2 dx -> (2y)^2 dx = 4y^2 dx
    FormalMapJet phi(Jet2::monomial(N, 1, 0), Jet2::monomial(N, 0, 1, fe("2")));
    OneFormJet pulled = pullback(eta, phi);
    CHECK(pulled.P == jet(N, {{0, 2, "4"}}));
    CHECK(pulled.Q.is_zero());
}

TEST_CASE("pullback functoriality on random identity-tangent maps") {
    std::mt19937_64 rng(424242);
    int N = 6;
    std::uniform_int_distribution<int> coeff(-3, 3);
    for (int trial = 0; trial < 8; ++trial) {
        OneFormJet eta(N);
        for (int d = 2; d <= N; ++d)
            for (int i = 0; i <= d; ++i) {
                eta.P.add_coeff(i, d - i, FieldElement(coeff(rng)));
                eta.Q.add_coeff(i, d - i, FieldElement(coeff(rng)));
            }
        FormalMapJet phi = random_identity_tangent_map(rng, N, 3);
        FormalMapJet psi = random_identity_tangent_map(rng, N, 3);
        CHECK(pullback(eta, compose_map(phi, psi)) == pullback(pullback(eta, phi), psi));
    }
}

TEST_CASE("pullback is linear in the form") {
    std::mt19937_64 rng(7);
    int N = 5;
    FormalMapJet phi = random_identity_tangent_map(rng, N, 3);
    OneFormJet a(jet(N, {{2, 0, "t1"}, {1, 1, "1"}}), jet(N, {{0, 2, "t2"}}));
    OneFormJet b(jet(N, {{0, 2, "3"}}), jet(N, {{2, 1, "t1"}}));
    CHECK(pullback(a + b, phi) == pullback(a, phi) + pullback(b, phi));
    CHECK(pullback(a.scaled(fe("t3")), phi) == pullback(a, phi).scaled(fe("t3")));
}

TEST_CASE("truncation coherence") {
    std::mt19937_64 rng(99);
    int N = 7, Np = 4;
    FormalMapJet phi = random_identity_tangent_map(rng, N, 3);
    FormalMapJet phi_low(phi.U.truncated(Np), phi.V.truncated(Np));
    OneFormJet eta(jet(N, {{1, 1, "t1"}, {0, 2, "1"}, {3, 1, "t2"}}), jet(N, {{2, 0, "1"}, {2, 2, "t1"}}));
    CHECK(pullback(eta, phi).truncated(Np) == pullback(eta.truncated(Np), phi_low));
    CHECK((eta.P * eta.Q).truncated(Np) == (eta.P.truncated(Np) * eta.Q.truncated(Np)).truncated(Np));
}

TEST_CASE("wedge_dx_restrict reference examples") {
    int N = 4;
    auto zero_series = [](const std::vector<FieldElement>& s) {
        for (auto& c : s)
            if (!c.is_zero()) return false;
        return true;
    };
    CHECK(zero_series(wedge_dx_restrict(OneFormJet(Jet2(N), jet(N, {{2, 0, "1"}})))));
    CHECK(zero_series(wedge_dx_restrict(OneFormJet(Jet2(N), jet(N, {{2, 0, "t2"}, {1, 1, "-(1-t1)"}})))));
    auto s = wedge_dx_restrict(OneFormJet(Jet2(N), jet(N, {{0, 3, "1"}})));
    CHECK(s[3] == FieldElement(1));
    s[3] = FieldElement::zero();
    CHECK(zero_series(s));
}
