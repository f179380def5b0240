#include <doctest.h>

#include "qloop/cli.hpp"
#include "qloop/double_alg.hpp"
#include "qloop/expr.hpp"
#include "test_quivers.hpp"

using namespace qloop;

namespace {

DoubleElem random_positive(const Session& s, DiagRng& rng, int hmax) {
    const auto degrees = degrees_up_to(s.quiver(), hmax);
    const DimVector d = degrees[rng.below(static_cast<int>(degrees.size()))];
    return DoubleElem::from_e_elem(s.quiver(), random_homogeneous(s, rng, d));
}

}  // namespace

TEST_SUITE("double") {

TEST_CASE("sl2-sector straightening rule") {
    DiagRng rng(31337);
    QuiverSpec q = with_random_nu(q_a2loops(), rng, 4);
    Session s(q, 4);
    for (VertexId i = 0; i < 2; ++i) {
        const Scalar nu = q.nu({i, 1});
        const DoubleElem lhs =
            dd_mul(s, DoubleElem::e_gen(q, {i, 1}), DoubleElem::f_gen(q, {i, 1}));
        DoubleElem expected =
            dd_mul(s, DoubleElem::f_gen(q, {i, 1}), DoubleElem::e_gen(q, {i, 1}));
        expected = expected + DoubleElem::k_power(q.unit_vector(i).scaled(-1)).scaled(nu);
        expected = expected - DoubleElem::k_power(q.unit_vector(i)).scaled(nu);
        CHECK(lhs == expected);
    }
}

TEST_CASE("cross-vertex letters commute") {
    Session s(q_a2loops(), 4);
    const QuiverSpec& q = s.quiver();
    const DoubleElem prod =
        dd_mul(s, DoubleElem::e_gen(q, {0, 1}), DoubleElem::f_gen(q, {1, 2}));
    REQUIRE(prod.terms().size() == 1);
    const DoubleKey& key = prod.terms().begin()->first;
    CHECK(key.f_word == Word::single({1, 2}));
    CHECK(key.e_word == Word::single({0, 1}));
    CHECK(key.k_exp.is_zero());
    CHECK(prod.terms().begin()->second.is_one());
}

TEST_CASE("K letters scale past E and F") {
    Session s(q_a2loops(), 5);
    const QuiverSpec& q = s.quiver();
    for (int l = 1; l <= 3; ++l) {
        // K_j E_{i,l} = v^{l (j,i)} E_{i,l} K_j, stated on the two orders
        const DoubleElem ke = dd_mul(s, DoubleElem::k_power(q.unit_vector(0)),
                                     DoubleElem::e_gen(q, {1, l}));
        const DoubleElem ek = dd_mul(s, DoubleElem::e_gen(q, {1, l}),
                                     DoubleElem::k_power(q.unit_vector(0)));
        CHECK(ke == ek.scaled(Scalar::v_power(l * q.euler_form(0, 1))));
        // K_j F_{i,l} = v^{-l (j,i)} F_{i,l} K_j
        const DoubleElem kf = dd_mul(s, DoubleElem::k_power(q.unit_vector(0)),
                                     DoubleElem::f_gen(q, {1, l}));
        const DoubleElem fk = dd_mul(s, DoubleElem::f_gen(q, {1, l}),
                                     DoubleElem::k_power(q.unit_vector(0)));
        CHECK(kf == fk.scaled(Scalar::v_power(-l * q.euler_form(0, 1))));
    }
}

TEST_CASE("double relation residue vanishes") {
    DiagRng rng(8);
    for (QuiverSpec base : {q_jordan(), q_loops(2), q_a2()}) {
        QuiverSpec q = with_random_nu(base, rng, 4);
        Session s(q, 4);
        // a = b = E_{i,1}: exactly the instance the rule was solved from
        const DoubleElem e1 = DoubleElem::e_gen(q, {0, 1});
        CHECK(dd_is_zero(s, dd_relation_residue(s, e1, e1)));
        // generator pairs within height 4
        for (const GenIndex a : {GenIndex{0, 1}, GenIndex{0, 2}}) {
            if (q.is_real(0) && a.level > 1) continue;
            for (const GenIndex b : {GenIndex{0, 1}, GenIndex{0, 2}}) {
                if (q.is_real(0) && b.level > 1) continue;
                CHECK(dd_is_zero(s, dd_relation_residue(s, DoubleElem::e_gen(q, a),
                                                        DoubleElem::e_gen(q, b))));
            }
        }
        // random homogeneous products
        for (int trial = 0; trial < 5; ++trial) {
            const DoubleElem a = random_positive(s, rng, 2);
            const DoubleElem b = random_positive(s, rng, 2);
            CHECK(dd_is_zero(s, dd_relation_residue(s, a, b)));
        }
    }
}

TEST_CASE("zero testing distinguishes K sectors and kills the radical") {
    Session s(q_jordan(), 5);
    const QuiverSpec& q = s.quiver();
    DoubleElem x = DoubleElem::k_power(q.unit_vector(0).scaled(-1)) -
                   DoubleElem::k_power(q.unit_vector(0));
    CHECK_FALSE(dd_is_zero(s, x));

    // image of a radical element of F as an E-word combination
    const auto& kernel = gram(s, q.unit_vector(0).scaled(3)).kernel_basis;
    REQUIRE_FALSE(kernel.empty());
    CHECK(dd_is_zero(s, DoubleElem::from_e_elem(q, kernel[0])));
    CHECK(dd_is_zero(s, omega(s, DoubleElem::from_e_elem(q, kernel[0]))));
}

TEST_CASE("coproducts of the generators") {
    Session s(q_a2loops(), 4);
    const QuiverSpec& q = s.quiver();
    const DimVector mu = parse_dim_vector(q, "1,-2");
    CHECK(dd_coproduct(s, DoubleElem::k_power(mu)) ==
          DoubleTensor::from_pair(DoubleElem::k_power(mu), DoubleElem::k_power(mu)));

    // Delta(E_{i,1}) = E (x) 1 + K_i (x) E
    DoubleTensor de = dd_coproduct(s, DoubleElem::e_gen(q, {0, 1}));
    DoubleTensor expected =
        DoubleTensor::from_pair(DoubleElem::e_gen(q, {0, 1}), DoubleElem::unit(q)) +
        DoubleTensor::from_pair(DoubleElem::k_power(q.unit_vector(0)),
                                DoubleElem::e_gen(q, {0, 1}));
    CHECK(de == expected);

    // Delta(F_{i,1}) = F (x) K_{-i} + 1 (x) F
    DoubleTensor df = dd_coproduct(s, DoubleElem::f_gen(q, {0, 1}));
    DoubleTensor expected_f =
        DoubleTensor::from_pair(DoubleElem::f_gen(q, {0, 1}),
                                DoubleElem::k_power(q.unit_vector(0).scaled(-1))) +
        DoubleTensor::from_pair(DoubleElem::unit(q), DoubleElem::f_gen(q, {0, 1}));
    CHECK(df == expected_f);
}

TEST_CASE("omega swaps the triangular halves") {
    Session s(q_a2loops(), 4);
    const QuiverSpec& q = s.quiver();
    CHECK(omega(s, DoubleElem::e_gen(q, {1, 2})) == DoubleElem::f_gen(q, {1, 2}));
    CHECK(omega(s, DoubleElem::k_power(q.unit_vector(0))) ==
          DoubleElem::k_power(q.unit_vector(0).scaled(-1)));
    DiagRng rng(5);
    for (int trial = 0; trial < 8; ++trial) {
        DoubleElem x = dd_mul(s, random_positive(s, rng, 2),
                              omega(s, random_positive(s, rng, 2)));
        CHECK(omega(s, omega(s, x)) == x);
    }
}

TEST_CASE("bar flips K and the coefficients") {
    Session s(q_jordan(), 4);
    const QuiverSpec& q = s.quiver();
    DoubleElem x = DoubleElem::k_power(q.unit_vector(0)).scaled(Scalar::v_power(1));
    DoubleElem expected =
        DoubleElem::k_power(q.unit_vector(0).scaled(-1)).scaled(Scalar::v_power(-1));
    CHECK(dd_bar(x) == expected);
    CHECK(dd_bar(DoubleElem::e_gen(q, {0, 2})) == DoubleElem::e_gen(q, {0, 2}));
    DiagRng rng(6);
    for (int trial = 0; trial < 8; ++trial) {
        DoubleElem y = random_positive(s, rng, 3);
        CHECK(dd_bar(dd_bar(y)) == y);
    }
}

TEST_CASE("antipode values on generators") {
    Session s(q_loops(2), 4);
    const QuiverSpec& q = s.quiver();
    // S(E_{i,1}) = -K_{-i} E_{i,1}
    DoubleElem se = antipode(s, DoubleElem::e_gen(q, {0, 1}), false);
    DoubleElem expected = DoubleElem() - dd_mul(s, DoubleElem::k_power(q.unit_vector(0).scaled(-1)),
                                                DoubleElem::e_gen(q, {0, 1}));
    CHECK(se == expected);
    // S(K_i) = K_{-i}
    CHECK(antipode(s, DoubleElem::k_power(q.unit_vector(0)), false) ==
          DoubleElem::k_power(q.unit_vector(0).scaled(-1)));
    // S(F_{i,1}) = -F_{i,1} K_i
    DoubleElem sf = antipode(s, DoubleElem::f_gen(q, {0, 1}), false);
    DoubleElem expected_f =
        DoubleElem() -
        dd_mul(s, DoubleElem::f_gen(q, {0, 1}), DoubleElem::k_power(q.unit_vector(0)));
    CHECK(sf == expected_f);
}

TEST_CASE("hopf axioms and the skew antipode") {
    DiagRng rng(12);
    QuiverSpec q = with_random_nu(q_a2loops(), rng, 3);
    Session s(q, 4);
    std::vector<DoubleElem> gens;
    for (VertexId i = 0; i < 2; ++i) {
        gens.push_back(DoubleElem::k_power(q.unit_vector(i)));
        const int top = q.is_real(i) ? 1 : 2;
        for (int l = 1; l <= top; ++l) {
            gens.push_back(DoubleElem::e_gen(q, {i, l}));
            gens.push_back(DoubleElem::f_gen(q, {i, l}));
        }
    }
    for (const DoubleElem& x : gens) {
        const Scalar eps = counit(x);
        const DoubleTensor d = dd_coproduct(s, x);
        DoubleElem left, right;
        for (const auto& [key, c] : d.terms()) {
            left = left + dd_mul(s, antipode(s, DoubleElem::from_key(key.first), false),
                                 DoubleElem::from_key(key.second))
                              .scaled(c);
            right = right + dd_mul(s, DoubleElem::from_key(key.first),
                                   antipode(s, DoubleElem::from_key(key.second), false))
                                .scaled(c);
        }
        CHECK(dd_is_zero(s, left - DoubleElem::unit(q).scaled(eps)));
        CHECK(dd_is_zero(s, right - DoubleElem::unit(q).scaled(eps)));
        // S^op inverts S
        CHECK(dd_is_zero(s, antipode(s, antipode(s, x, false), true) - x));
    }
}

TEST_CASE("primitive elements are skew-primitive in the double") {
    // Delta(a_{i,l}) = a (x) 1 + K_{li} (x) a and S(a_{i,l}) = -K_{-li} a_{i,l},
    // with the omega-mirror statements for b_{i,l}
    for (QuiverSpec q : {q_jordan(), q_loops(2)}) {
        Session s(q, 6);
        for (int l = 1; l <= 3; ++l) {
            const FreeElem rep = primitive_a(s, 0, l).representative;
            const DoubleElem a = DoubleElem::from_e_elem(q, rep);
            const DoubleElem b = omega(s, a);
            const DimVector li = q.unit_vector(0).scaled(l);

            DoubleTensor da = dd_coproduct(s, a);
            da = da - DoubleTensor::from_pair(a, DoubleElem::unit(q));
            da = da - DoubleTensor::from_pair(DoubleElem::k_power(li), a);
            CHECK(dd_tensor_is_zero(s, da));

            DoubleTensor db = dd_coproduct(s, b);
            db = db - DoubleTensor::from_pair(b, DoubleElem::k_power(li.scaled(-1)));
            db = db - DoubleTensor::from_pair(DoubleElem::unit(q), b);
            CHECK(dd_tensor_is_zero(s, db));

            const DoubleElem sa =
                antipode(s, a, false) +
                dd_mul(s, DoubleElem::k_power(li.scaled(-1)), a);
            CHECK(dd_is_zero(s, sa));
            const DoubleElem sb =
                antipode(s, b, false) + dd_mul(s, b, DoubleElem::k_power(li));
            CHECK(dd_is_zero(s, sb));
        }
    }
}

TEST_CASE("serre relations vanish in both halves of the double") {
    DiagRng rng(21);
    QuiverSpec q = with_random_nu(q_a2(), rng, 4);
    Session s(q, 4);
    const FreeElem serre = serre_element(s, {0, 1}, 1);
    const DoubleElem e_side = DoubleElem::from_e_elem(q, serre);
    CHECK(dd_is_zero(s, e_side));
    CHECK(dd_is_zero(s, omega(s, e_side)));
}

TEST_CASE("multiplication is associative") {
    DiagRng rng(14);
    QuiverSpec q = with_random_nu(q_a2loops(), rng, 3);
    Session s(q, 6);
    for (int trial = 0; trial < 6; ++trial) {
        DoubleElem a = random_positive(s, rng, 2);
        DoubleElem b = omega(s, random_positive(s, rng, 2));
        DoubleElem c = dd_mul(s, DoubleElem::k_power(q.unit_vector(trial % 2)),
                              random_positive(s, rng, 1));
        CHECK(dd_mul(s, dd_mul(s, a, b), c) == dd_mul(s, a, dd_mul(s, b, c)));
        CHECK(dd_mul(s, dd_mul(s, b, a), c) == dd_mul(s, b, dd_mul(s, a, c)));
    }
}

TEST_CASE("double expressions render and parse back") {
    Session s(q_a2loops(), 4);
    const QuiverSpec& q = s.quiver();
    DoubleElem x = dd_mul(s, DoubleElem::e_gen(q, {1, 2}),
                          dd_mul(s, DoubleElem::f_gen(q, {1, 1}),
                                 DoubleElem::k_power(q.unit_vector(0).scaled(-2))));
    CHECK(parse_double_elem(s, to_string(x, q)) == x);
    CHECK(parse_double_elem(s, "E[i,1]*F[i,1] - F[i,1]*E[i,1]") ==
          dd_mul(s, DoubleElem::e_gen(q, {0, 1}), DoubleElem::f_gen(q, {0, 1})) -
              dd_mul(s, DoubleElem::f_gen(q, {0, 1}), DoubleElem::e_gen(q, {0, 1})));
    CHECK_THROWS_AS(parse_double_elem(s, "E[z,1]"), std::invalid_argument);
    CHECK_THROWS_AS(parse_double_elem(s, "E[i,1] +"), ParseError);
    CHECK_THROWS_AS(parse_double_elem(s, "E[i,2]"), ParseError);   // i is real here
    CHECK_THROWS_AS(parse_double_elem(s, "E[j,9]"), CutoffError);  // beyond the session
}

}  // TEST_SUITE
