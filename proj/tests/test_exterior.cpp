#include <doctest.h>

#include "twistcoh/exterior.hpp"

using namespace twistcoh;

TEST_CASE("sort_with_sign") {
    auto r = sort_with_sign({3, 1, 2});
    REQUIRE(r.has_value());
    CHECK(r->first == ExtIndex{1, 2, 3});
    CHECK(r->second == 1);  // two transpositions
    auto s = sort_with_sign({2, 1});
    CHECK(s->second == -1);
    CHECK(!sort_with_sign({1, 1}).has_value());
    auto e = sort_with_sign({});
    CHECK(e->first.empty());
    CHECK(e->second == 1);
}

TEST_CASE("wedge_merge shuffle signs") {
    auto r = wedge_merge({1}, {2});
    CHECK(r->first == ExtIndex{1, 2});
    CHECK(r->second == 1);
    auto s = wedge_merge({2}, {1});
    CHECK(s->second == -1);
    CHECK(!wedge_merge({1, 2}, {2}).has_value());
    auto t = wedge_merge({2}, {1, 3});
    CHECK(t->first == ExtIndex{1, 2, 3});
    CHECK(t->second == -1);
}

TEST_CASE("ext_basis counts binomials") {
    CHECK(ext_basis(4, 2).size() == 6);
    CHECK(ext_basis(3, 0).size() == 1);
    CHECK(ext_basis(3, 3).size() == 1);
    CHECK(ext_basis(3, 4).empty());
}

TEST_CASE("Cochain wedge basics") {
    Cochain e1 = Cochain::basis(3, 0, {1});
    Cochain e2 = Cochain::basis(3, 0, {2});
    Cochain e12 = Cochain::basis(3, 0, {1, 2});
    CHECK(wedge(e1, e2) == e12);
    CHECK(wedge(e2, e1) == -e12);
    CHECK(wedge(e1, e1).is_zero());
}

TEST_CASE("wedge is graded-commutative and associative on samples") {
    Cochain a = Cochain::basis(4, 0, {1}) + Cochain::basis(4, 0, {3});
    Cochain b = Cochain::basis(4, 0, {2, 4});
    Cochain c = Cochain::basis(4, 0, {2});
    // odd ^ even = even ^ odd
    CHECK(wedge(a, b) == wedge(b, a));
    // odd ^ odd anticommutes
    CHECK(wedge(a, c) == -wedge(c, a));
    CHECK(wedge(wedge(a, c), b) == wedge(a, wedge(c, b)));
}

TEST_CASE("wedge with polynomial coefficients") {
    Poly x1 = Poly::variable(2, 1);
    Cochain a = Cochain::zero(2, 2, 1);
    a.add({1}, 0, x1);
    Cochain b = Cochain::basis(2, 2, {2});
    Cochain ab = wedge(a, b);
    CHECK(ab.at({1, 2})[0] == x1);
}

TEST_CASE("contract_generator is an antiderivation probe") {
    // i_1 (e1^e2) = e2, i_2 (e1^e2) = -e1
    Cochain e12 = Cochain::basis(3, 0, {1, 2});
    CHECK(contract_generator(e12, 1) == Cochain::basis(3, 0, {2}));
    CHECK(contract_generator(e12, 2) == -Cochain::basis(3, 0, {1}));
    CHECK(contract_generator(e12, 3).is_zero());
    // antiderivation on a product of 1-forms: i_1(e1 ^ e23) = e23
    Cochain e1 = Cochain::basis(3, 0, {1});
    Cochain e23 = Cochain::basis(3, 0, {2, 3});
    Cochain w = wedge(e1, e23);
    Cochain lhs = contract_generator(w, 1);
    Cochain rhs = wedge(contract_generator(e1, 1), e23) - wedge(e1, contract_generator(e23, 1));
    CHECK(lhs == rhs);
}

TEST_CASE("homogeneous_weight") {
    Poly x1 = Poly::variable(2, 1);
    Cochain a = Cochain::zero(2, 2, 1);
    a.add({1}, 0, x1 * x1);
    a.add({2}, 0, x1 * Poly::variable(2, 2));
    CHECK(a.homogeneous_weight() == 2);
    a.add({2}, 0, x1);
    CHECK(!a.homogeneous_weight().has_value());
}
