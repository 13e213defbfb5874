#include <doctest.h>

#include "chartab/families.hpp"
#include "chartab/gf.hpp"
#include "chartab/group.hpp"
#include "chartab/numtheory.hpp"

#include <set>

using namespace chartab;

TEST_CASE("gf arithmetic basics") {
    auto F4 = GaloisField::get(4);
    CHECK(F4->mul(F4->generator(), F4->generator()) == F4->add(F4->generator(), 1)); // x*x = x+1
    auto F5 = GaloisField::get(5);
    CHECK(F5->inv(2) == 3);
    auto F9 = GaloisField::get(9);
    CHECK(F9->frobenius(F9->generator()) == F9->pow(F9->generator(), 3));
    CHECK_THROWS_AS(GaloisField::get(6), std::invalid_argument);
    CHECK_THROWS_AS(GaloisField::get(12), std::invalid_argument);

    // field sanity across small orders
    for (std::uint64_t q : {2, 3, 4, 5, 7, 8, 9, 11, 13, 16, 25, 27}) {
        auto F = GaloisField::get(q);
        CHECK(F->pow(F->generator(), static_cast<std::int64_t>(q - 1)) == 1);
        for (std::uint64_t a = 1; a < std::min<std::uint64_t>(q, 12); ++a) {
            CHECK(F->mul(a, F->inv(a)) == 1);
            CHECK(F->add(a, F->neg(a)) == 0);
        }
    }
}

TEST_CASE("group axioms spot checks on elements") {
    auto F = GaloisField::get(7);
    Element a = Element::matrix(F, 2, {1, 1, 0, 1}, false);
    Element b = Element::matrix(F, 2, {0, 1, 6, 0}, false);
    CHECK((a * b) * a == a * (b * a));
    CHECK(a * a.inverse() == a.identity_like());
    CHECK(b.inverse().inverse() == b);

    Element p = Element::permutation({1, 2, 0, 3});
    Element q = Element::permutation({0, 2, 1, 3});
    CHECK((p * q).inverse() == q.inverse() * p.inverse());
    CHECK(p.order() == 3);
}

TEST_CASE("projective normalization makes equality literal") {
    auto F = GaloisField::get(5);
    Element a = Element::matrix(F, 2, {2, 0, 0, 2}, true);
    CHECK(a.is_identity());
    Element b = Element::matrix(F, 2, {0, 3, 2, 0}, true);
    Element c = Element::matrix(F, 2, {0, 4, 1, 0}, true); // scalar multiple
    CHECK((b * b.inverse()).is_identity());
    CHECK(b == Element::matrix(F, 2, {0, 1, 4, 0}, true));
    (void)c;
}

TEST_CASE("semilinear pairs compose with the twisted rule") {
    auto F = GaloisField::get(9);
    Element base = Element::matrix(F, 2, {F->generator(), 0, 0, 1}, true);
    Element phi = Element::twisted(Element::matrix(F, 2, {1, 0, 0, 1}, true), 1,
                                   Element::Twist::Frobenius, 2);
    Element g = Element::twisted(base, 0, Element::Twist::Frobenius, 2);
    Element lhs = phi * g * phi.inverse();
    // phi acts entrywise: conjugating diag(nu,1) gives diag(nu^3,1)
    Element expect = Element::twisted(
        Element::matrix(F, 2, {F->pow(F->generator(), 3), 0, 0, 1}, true), 0,
        Element::Twist::Frobenius, 2);
    CHECK(lhs == expect);
    CHECK((phi * phi).is_identity());
}

TEST_CASE("construct_family orders") {
    CHECK(construct_family("pgl2:5")->order() == 120);
    auto sl25 = construct_family("sl2:5");
    CHECK(sl25->order() == 120);
    CHECK(sl25->center_info().order == 2);
    CHECK(construct_family("psl2:7")->order() == 168);
    CHECK(construct_family("psl2:4")->order() == 60);
    CHECK(construct_family("sn:3")->order() == 6);
    CHECK(construct_family("an:6")->order() == 360);
    CHECK(construct_family("gl2:4")->order() == 180);
    CHECK(construct_family("psigmal2:8")->order() == 1512);
    CHECK(construct_family("psigmal2:9")->order() == 1440);
    CHECK_THROWS_AS(construct_family("zz:9"), std::invalid_argument);
    CHECK_THROWS_AS(construct_family("psl2:6"), std::invalid_argument);
}

TEST_CASE("conjugacy classes: orders, sizes, class equation") {
    auto s3 = construct_family("sn:3");
    auto cls = s3->classes();
    REQUIRE(cls.size() == 3);
    CHECK(cls[0].size == 1);
    CHECK(cls[1].size == 3); // transpositions (order 2)
    CHECK(cls[2].size == 2); // 3-cycles
    CHECK(cls[1].element_order == 2);
    CHECK(cls[2].element_order == 3);

    auto psl27 = construct_family("psl2:7");
    auto c7 = psl27->classes();
    REQUIRE(c7.size() == 6);
    std::multiset<unsigned> orders;
    std::uint64_t total = 0;
    for (auto& c : c7) {
        orders.insert(c.element_order);
        total += c.size;
        CHECK(psl27->order() % c.size == 0);
        CHECK(psl27->order() % c.element_order == 0);
        CHECK(c.power_map[1 % c.element_order] == (&c - &c7[0]));
    }
    CHECK(total == psl27->order());
    CHECK(orders == std::multiset<unsigned>{1, 2, 3, 4, 7, 7});

    CHECK(construct_family("sl2:5")->classes().size() == 9);
}

TEST_CASE("power map lands in classes of equal order for coprime powers") {
    for (const char* spec : {"sn:4", "sl2:5", "psl2:7", "an:5"}) {
        auto g = construct_family(spec);
        for (const auto& c : g->classes()) {
            for (std::uint32_t k = 1; k < c.element_order; ++k) {
                if (gcd_u64(k, c.element_order) != 1) continue;
                CHECK(g->classes()[c.power_map[k]].element_order == c.element_order);
            }
        }
    }
}

TEST_CASE("center and derived subgroup") {
    auto sl29 = construct_family("sl2:9");
    auto ci = sl29->center_info();
    CHECK(ci.order == 2);
    CHECK(ci.cyclic);
    CHECK(ci.prime_power);

    auto a3a6 = construct_family("3a6");
    auto ci3 = a3a6->center_info();
    CHECK(a3a6->order() == 1080);
    CHECK(ci3.order == 3);
    CHECK(ci3.cyclic);
    CHECK(ci3.prime_power);

    auto pgl27 = construct_family("pgl2:7");
    CHECK(pgl27->derived_subgroup().order() == 168);
}

TEST_CASE("m10 and m11 stored constructions") {
    auto m10 = construct_family("m10");
    CHECK(m10->order() == 720);
    std::set<unsigned> orders;
    for (const auto& c : m10->classes()) orders.insert(c.element_order);
    CHECK(orders.count(8) == 1);
    CHECK(orders.count(10) == 0);
    CHECK(orders.count(12) == 0);

    auto m11 = construct_family("m11");
    CHECK(m11->order() == 7920);
    CHECK(m11->classes().size() == 10);

    auto ext = construct_family("3a6:2_3");
    CHECK(ext->order() == 2160);
    CHECK(ext->center_info().order == 3);
}

TEST_CASE("budget enforcement") {
    std::uint64_t old = group_order_budget();
    set_group_order_budget(100);
    CHECK_THROWS_AS(construct_family("sn:9"), BudgetExceeded);
    set_group_order_budget(old);
}
