#include <doctest.h>

#include <algorithm>

#include "hedet/canonical.hpp"
#include "hedet/coloring.hpp"
#include "hedet/encode.hpp"
#include "hedet/errors.hpp"
#include "hedet/graph.hpp"
#include "hedet/groebner.hpp"
#include "hedet/named_graphs.hpp"
#include "hedet/poly_text.hpp"

using namespace hedet;

namespace {

Polynomial P(const std::string& text) { return parse_polynomial(text); }

long long choose(long long n, long long r) {
    if (r < 0 || r > n) return 0;
    long long v = 1;
    for (long long t = 0; t < r; ++t) v = v * (n - t) / (t + 1);
    return v;
}

} // namespace

TEST_CASE("geometric sums") {
    Variable a = Variable::x(1), b = Variable::x(2);
    CHECK(geometric_sum(a, b, 0) == P("1"));
    CHECK(geometric_sum(a, b, 1) == P("x_1 + x_2"));
    CHECK(geometric_sum(a, b, 2) == P("x_1^2 + x_1*x_2 + x_2^2"));
    CHECK_THROWS_AS(geometric_sum(a, b, -1), ParameterError);
}

TEST_CASE("telescoping identity for geometric sums") {
    // (x1 - x2) * (x1^{k-1} + ... + x2^{k-1}) = x1^k - x2^k
    Variable a = Variable::x(1), b = Variable::x(2);
    Polynomial diff = Polynomial::var(a) - Polynomial::var(b);
    for (int k = 2; k <= 10; ++k) {
        Polynomial lhs = diff * geometric_sum(a, b, k - 1);
        Polynomial rhs = Polynomial::var(a).pow(k) - Polynomial::var(b).pow(k);
        CHECK(lhs == rhs);
    }
}

TEST_CASE("edge indicator ideal") {
    Ideal e22 = ideal_E(2, 2);
    REQUIRE(e22.generators.size() == 2);
    CHECK(e22.generators[0] == P("e_1_2^2 - e_1_2"));
    CHECK(e22.generators[1] == P("f_1_2^2 - f_1_2"));
    CHECK(ideal_E(1, 1).generators.empty());
    CHECK(ideal_E(4, 4).generators.size() == 12);
}

TEST_CASE("color root ideals") {
    Ideal x = ideal_X(3, 2, 1);
    REQUIRE(x.generators.size() == 3);
    CHECK(x.generators[0] == P("x_1^2 - 1"));
    CHECK(x.generators[1] == P("x_2^2 - 1"));
    CHECK(x.generators[2] == P("y_1^2 - 1"));

    CHECK(ideal_Z(3, 2, 2).generators.size() == 4);
    Ideal z = ideal_Z(5, 8, 11);
    CHECK(z.generators.size() == 88);
    for (const auto& g : z.generators) CHECK(g.degree() == 4);
    CHECK_THROWS_AS(ideal_X(2, 2, 2), ParameterError);
}

TEST_CASE("proper coloring ideals") {
    Ideal i32 = ideal_I(3, 2);
    REQUIRE(i32.generators.size() == 1);
    CHECK(i32.generators[0] == P("e_1_2*x_1 + e_1_2*x_2"));
    Ideal i42 = ideal_I(4, 2);
    CHECK(i42.generators[0] == P("e_1_2*x_1^2 + e_1_2*x_1*x_2 + e_1_2*x_2^2"));
    CHECK(ideal_Iprime(3, 3).generators.size() == 3);
    CHECK(ideal_product(ideal_I(3, 3), ideal_Iprime(3, 3)).generators.size() == 9);
}

TEST_CASE("product edge ideal") {
    Ideal j = ideal_J(3, 2, 2);
    REQUIRE(j.generators.size() == 1);
    CHECK(j.generators[0] == P("e_1_2*f_1_2*z_1_1 + e_1_2*f_1_2*z_2_2"));
    CHECK(ideal_J(5, 8, 11).generators.size() == 28 * 55);
}

TEST_CASE("W-side assembly") {
    Ideal jcal = assemble_Jcal(3, 2, 2);
    CHECK(jcal.generators.size() == 12);
    CHECK(jcal.universe.size() == 10);
    // display order: E, X, Z, I*I', J
    CHECK(jcal.generators[0] == P("e_1_2^2 - e_1_2"));
    CHECK(jcal.generators[2] == P("x_1^2 - 1"));
    CHECK(jcal.generators[11] == P("e_1_2*f_1_2*z_1_1 + e_1_2*f_1_2*z_2_2"));
}

TEST_CASE("elimination to the edge subring") {
    auto tj = tilde_J(3, 2, 2);
    REQUIRE(tj.outcome == GbOutcome::done);
    auto keep = ef_variables(2, 2);
    for (const auto& g : tj.ideal.generators) CHECK(g.supported_on(keep));
    // tilde ideal sits inside the full assembly
    auto sub = ideal_subset(tj.ideal, assemble_Jcal(3, 2, 2));
    REQUIRE(sub.outcome == GbOutcome::done);
    CHECK(sub.contained);
}

TEST_CASE("degree-one and recoloring families") {
    Ideal p32 = ideal_P(3, 2);
    // (a) both vertices see the single potential edge
    REQUIRE(p32.generators.size() == 6);
    CHECK(p32.generators[0] == P("e_1_2 - 1"));
    CHECK(p32.generators[1] == P("e_1_2 - 1"));
    // (b) roots then pins for the one pair (1,2)
    CHECK(p32.generators[2] == P("xt_1_2_1^2 - 1"));
    CHECK(p32.generators[3] == P("xt_1_2_2^2 - 1"));
    CHECK(p32.generators[4] == P("xt_1_2_1 - 1"));
    CHECK(p32.generators[5] == P("xt_1_2_2 - 1"));

    Ideal p33 = ideal_P(3, 3);
    // (a)=3, (b)=C(3,2)*3 + C(3,2)*2 = 15, (c)=C(3,2)*(C(3,2)-1) = 6
    CHECK(p33.generators.size() == 3 + 15 + 6);
    CHECK(p33.generators[0] == P("e_1_2*e_1_3 - e_1_2 - e_1_3 + 1"));
}

TEST_CASE("clique position families") {
    Ideal q33 = ideal_Q(3, 3);
    REQUIRE(q33.generators.size() == 2);
    CHECK(q33.generators[0] == P("e_1_2"));
    CHECK(q33.generators[1] == P("e_1_3"));

    Ideal q44 = ideal_Q(4, 4);
    REQUIRE(q44.generators.size() == 3);
    CHECK(q44.generators[0] == P("e_1_2*e_1_3*e_2_3"));
    CHECK(q44.generators[1] == P("e_1_2*e_1_4*e_2_4"));
    CHECK(q44.generators[2] == P("e_1_3*e_1_4*e_3_4"));

    Ideal q54 = ideal_Q(5, 4);
    REQUIRE(q54.generators.size() == 1);
    CHECK(q54.generators[0] == P("e_1_2*e_1_3*e_1_4*e_2_3*e_2_4*e_3_4"));

    Ideal r33 = ideal_R(3, 3);
    REQUIRE(r33.generators.size() == 1);
    CHECK(r33.generators[0] == P("e_1_2*e_1_3*e_2_3"));
    CHECK(ideal_R(4, 3).generators.empty());
    CHECK(ideal_R(3, 4).generators.size() == 4);
}

TEST_CASE("degree floor family") {
    Ideal s33 = ideal_S(3, 3);
    REQUIRE(s33.generators.size() == 6);
    CHECK(s33.generators[0] == P("e_1_2 - 1"));
    CHECK(s33.generators[1] == P("e_1_3 - 1"));
    CHECK(s33.generators[2] == P("e_1_2 - 1")); // l=2, X={1}

    Ideal s54 = ideal_S(5, 4);
    REQUIRE(s54.generators.size() == 4);
    for (const auto& g : s54.generators) CHECK(g == P("1"));

    Ideal s32 = ideal_S(3, 2);
    REQUIRE(s32.generators.size() == 2);
    CHECK(s32.generators[0] == P("1"));

    CHECK(ideal_S(6, 4).generators.empty());
}

TEST_CASE("V-side assembly") {
    Ideal ical = assemble_Ical(3, 3, 3);
    CHECK(ical.universe.size() == 33);
    // count: E 6, Z 9, J 9, P 24 each side, Q 2 each, R_3 1 each,
    // R_2xR_2' 9, S 6 each
    CHECK(ical.generators.size() == 6 + 9 + 9 + 24 + 24 + 2 + 2 + 1 + 1 + 9 + 6 + 6);
    auto ti = tilde_I(3, 3, 3);
    REQUIRE(ti.outcome == GbOutcome::done);
    REQUIRE(ti.ideal.generators.size() == 1);
    CHECK(ti.ideal.generators[0] == P("1"));
}

TEST_CASE("family generator counts match closed forms") {
    for (int k = 3; k <= 5; ++k)
        for (int n = 2; n <= 6; ++n) {
            long long c2 = choose(n, 2);
            CHECK(ideal_I(k, n).generators.size() == (std::size_t)c2);
            CHECK(ideal_P(k, n).generators.size() ==
                  (std::size_t)(n + c2 * n + c2 * 2 + c2 * (c2 - 1)));
            CHECK(ideal_Q(k, n).generators.size() == (std::size_t)choose(n - 1, k - 2));
            CHECK(ideal_R(k, n).generators.size() == (std::size_t)choose(n, k));
            CHECK(ideal_S(k, n).generators.size() ==
                  (std::size_t)(n - k + 1 >= 0 ? n * choose(n - 1, n - k + 1) : 0));
            for (int np = 2; np <= 6; ++np) {
                CHECK(ideal_E(n, np).generators.size() == (std::size_t)(c2 + choose(np, 2)));
                CHECK(ideal_X(k, n, np).generators.size() == (std::size_t)(n + np));
                CHECK(ideal_Z(k, n, np).generators.size() == (std::size_t)(n * np));
                CHECK(ideal_J(k, n, np).generators.size() ==
                      (std::size_t)(c2 * choose(np, 2)));
                long long cp2 = choose(np, 2);
                CHECK(assemble_Jcal(k, n, np).generators.size() ==
                      (std::size_t)(c2 + cp2 + n + np + n * np + 2 * c2 * cp2));
            }
        }
}

TEST_CASE("fixed graph ideals") {
    Ideal k2 = fixed_graph_ideal(Graph::complete(2), Side::g);
    REQUIRE(k2.generators.size() == 1);
    CHECK(k2.generators[0] == P("e_1_2 - 1"));

    Graph g = join(h0(), Graph::complete(1));
    Ideal fixed = fixed_graph_ideal(g, Side::g);
    CHECK(fixed.generators.size() == 28);
    // the twelve base edges and the seven apex edges appear as e_ij - 1
    auto has = [&](const Polynomial& p) {
        return std::find(fixed.generators.begin(), fixed.generators.end(), p) !=
               fixed.generators.end();
    };
    for (const char* t : {"e_1_2 - 1", "e_1_3 - 1", "e_1_4 - 1", "e_2_5 - 1",
                          "e_2_6 - 1", "e_3_5 - 1", "e_3_7 - 1", "e_4_6 - 1",
                          "e_4_7 - 1", "e_5_6 - 1", "e_5_7 - 1", "e_6_7 - 1",
                          "e_1_8 - 1", "e_2_8 - 1", "e_3_8 - 1", "e_4_8 - 1",
                          "e_5_8 - 1", "e_6_8 - 1", "e_7_8 - 1"})
        CHECK(has(P(t)));
    for (const char* t : {"e_1_5", "e_2_3", "e_3_4", "e_6_7 - 1"})
        CHECK(has(P(t)));
    CHECK_FALSE(has(P("e_1_5 - 1")));
    // fixing every indicator of Hstar on the h side
    Ideal hs = fixed_graph_ideal(h_star(), Side::h);
    CHECK(hs.generators.size() == 55);
    int ones = 0;
    for (const auto& gen : hs.generators)
        if (gen.support().size() == 1 && gen != P("0") &&
            gen.degree() == 1 && gen.terms().size() == 2)
            ++ones;
    CHECK(ones == 29);
}

TEST_CASE("fixed pair assembly counts") {
    Ideal l = assemble_L(Graph::cycle(5), Graph::cycle(5), 3);
    CHECK(l.generators.size() == 10 + 10 + 25 + 100);
    CHECK(l.universe.size() == 10 + 10 + 25);
}

TEST_CASE("triangle free ideal") {
    Ideal t3 = triangle_free_ideal(3, Side::g);
    REQUIRE(t3.generators.size() == 1);
    CHECK(t3.generators[0] == P("e_1_2*e_1_3*e_2_3"));
    CHECK(triangle_free_ideal(4, Side::h).generators.size() == 4);

    auto with_k3 = ideal_sum({fixed_graph_ideal(Graph::complete(3), Side::g),
                              triangle_free_ideal(3, Side::g)},
                             "k3-and-trifree");
    auto unit = contains_one(with_k3);
    REQUIRE(unit.outcome == GbOutcome::done);
    CHECK(unit.contains_one);
}

TEST_CASE("fixed pair verdict matches the coloring oracle on tiny graphs") {
    for (int n = 1; n <= 3; ++n)
        for (int m = 1; m <= 3; ++m)
            for (const Graph& g : enumerate_graphs(n))
                for (const Graph& h : enumerate_graphs(m))
                    for (int k = 3; k <= 4; ++k) {
                        auto unit = contains_one(assemble_L(g, h, k));
                        REQUIRE(unit.outcome == GbOutcome::done);
                        bool colorable =
                            is_k_colorable(tensor_product(g, h), k - 1);
                        CHECK(unit.contains_one == !colorable);
                    }
}
