#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "fnf/expr.hpp"
#include "fnf/reduction.hpp"

using namespace fnf;

namespace {

FieldElement fe(const std::string& s) { return parse_coefficient(s); }

std::array<FieldElement, 3> standard_lambda() {
    return {fe("t1"), fe("t2"), fe("1-t1-t2")};
}

NormalForm make_nf(std::vector<FieldElement> b, int N) {
    NormalForm nf;
    nf.residues = {fe("t1"), fe("t2"), fe("1-t1-t2")};
    nf.b = std::move(b);
    nf.N = N;
    nf.field = field_report(nf);
    return nf;
}

}  // namespace

TEST_CASE("homothety_action reference examples") {
    NormalForm nf = make_nf({fe("1"), fe("1")}, 5);
    CHECK(homothety_action(nf, FieldElement(1)).b == nf.b);
    NormalForm doubled = homothety_action(nf, FieldElement(2));
    CHECK(doubled.b == std::vector<FieldElement>{FieldElement(2), FieldElement(4)});
    CHECK(doubled.residues == nf.residues);

    NormalForm sym = homothety_action(make_nf({fe("t3")}, 4), fe("t5"));
    CHECK(sym.b == std::vector<FieldElement>{fe("t5*t3")});
    CHECK_THROWS_AS(homothety_action(nf, FieldElement::zero()), ValidationError);
}

TEST_CASE("homothety_action composes multiplicatively") {
    NormalForm nf = make_nf({fe("t3"), fe("0"), fe("t4"), fe("2")}, 7);
    FieldElement s = fe("t5"), sp = fe("2/3");
    NormalForm lhs = homothety_action(homothety_action(nf, s), sp);
    NormalForm rhs = homothety_action(nf, s * sp);
    CHECK(lhs.b == rhs.b);
}

TEST_CASE("homothety action through the full pipeline") {
    // pull construct_example back by (2x, 2y), renormalize by 1/8, reduce:
    // the resulting b_k must be 2^{k+1} b_k
    int N = 6;
    OneFormJet omega = construct_standard_example(standard_lambda(), {fe("t3"), fe("t4")}, N);
    auto [nf0, t0] = reduce_to_normal_form(omega);
    FieldElement two(2), z = FieldElement::zero();
    OneFormJet scaled = apply_linear_change(omega, {{{two, z}, {z, two}}}).scaled(fe("1/8"));
    auto [nf1, t1] = reduce_to_normal_form(scaled);
    REQUIRE(nf0.b.size() == nf1.b.size());
    for (size_t k = 0; k < nf0.b.size(); ++k)
        CHECK(nf1.b[k] == nf0.b[k] * two.pow(static_cast<unsigned>(k) + 1));
    CHECK(nf1.residues == nf0.residues);
    CHECK(invariant_equivalent(nf0, nf1));
    // and the packaged action predicts the same normal form
    CHECK(homothety_action(nf0, two).b == nf1.b);
}

TEST_CASE("invariant_equivalent reference examples") {
    NormalForm a = make_nf({fe("1"), fe("1")}, 5);
    CHECK(invariant_equivalent(a, a));
    CHECK(invariant_equivalent(a, make_nf({fe("2"), fe("4")}, 5)));  // s = 2
    CHECK_FALSE(invariant_equivalent(a, make_nf({fe("2"), fe("5")}, 5)));
    // differing zero patterns
    CHECK_FALSE(invariant_equivalent(a, make_nf({fe("0"), fe("1")}, 5)));
    // differing residues
    NormalForm r = make_nf({fe("1"), fe("1")}, 5);
    r.residues = {fe("t2"), fe("t1"), fe("1-t1-t2")};
    CHECK_FALSE(invariant_equivalent(a, r));
    // order mismatch
    CHECK_THROWS_AS(invariant_equivalent(a, make_nf({fe("1"), fe("1")}, 6)), ValidationError);
    // scale may live outside the field: b=[1,1] vs b'=[t5, t5^..] with s^2=t5
    CHECK(invariant_equivalent(a, homothety_action(a, fe("t5"))));
}

TEST_CASE("invariant_equivalent is an equivalence relation") {
    std::mt19937_64 rng(321);
    std::uniform_int_distribution<int> pick(0, 3);
    const char* pool[4] = {"0", "1", "t3", "t3+1"};
    for (int trial = 0; trial < 10; ++trial) {
        NormalForm x = make_nf({fe(pool[pick(rng)]), fe(pool[pick(rng)]), fe(pool[pick(rng)])}, 6);
        NormalForm y = homothety_action(x, fe("3"));
        NormalForm z = homothety_action(x, fe("t4"));
        CHECK(invariant_equivalent(x, x));
        CHECK(invariant_equivalent(x, y) == invariant_equivalent(y, x));
        if (invariant_equivalent(x, y) && invariant_equivalent(y, z)) CHECK(invariant_equivalent(x, z));
    }
}

TEST_CASE("field_report reference examples") {
    NormalForm nf = make_nf({fe("t3"), fe("t4")}, 5);
    FieldDescriptor d = field_report(nf);
    CHECK(d.transcendence_degree == 4);
    REQUIRE(d.generators.size() == 4);
    CHECK(d.generators[0].name == "t1");
    CHECK(d.generators[3].name == "t4");

    NormalForm zeros = make_nf({fe("0"), fe("0")}, 5);
    FieldDescriptor dz = field_report(zeros);
    CHECK(dz.transcendence_degree == 2);  // support of the residues only
}

TEST_CASE("end-to-end uniqueness through independent code paths") {
    int N = 6;
    OneFormJet omega = construct_standard_example(standard_lambda(), {fe("t3"), fe("t4")}, N);
    auto [nf0, t0] = reduce_to_normal_form(omega);

    std::mt19937_64 rng(808);
    std::uniform_int_distribution<int> coeff(-3, 3);
    Jet2 u = Jet2::monomial(N, 1, 0), v = Jet2::monomial(N, 0, 1);
    for (int d = 2; d <= 3; ++d)
        for (int i = 0; i <= d; ++i) {
            u.add_coeff(i, d - i, FieldElement(coeff(rng)));
            v.add_coeff(i, d - i, FieldElement(coeff(rng)));
        }
    auto [nf1, t1] = reduce_to_normal_form(pullback(omega, FormalMapJet(std::move(u), std::move(v))));
    CHECK(nf0.b == nf1.b);
    CHECK(invariant_equivalent(nf0, nf1));
    // field closure: nothing outside the input generators appears
    for (auto& g : field_report(nf1).generators) CHECK(g.index <= 4);
}
