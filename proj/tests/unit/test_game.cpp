#include <doctest.h>

#include "../support.hpp"
#include "cgt/error.hpp"
#include "cgt/game.hpp"

using namespace cgt;

TEST_SUITE("game_core") {

TEST_CASE("interning shares structure") {
    Universe u(linear_poset(3));
    const GameId a = u.atomic("a");
    CHECK(u.atomic(1) == a);
    const GameId g1 = u.compose({a, u.top()}, {u.bottom()});
    const GameId g2 = u.compose({u.top(), a, a}, {u.bottom(), u.bottom()});
    CHECK(g1 == g2);
    CHECK(u.left_set(g1).size() == 2);
    CHECK(u.depth(g1) == 1);
    CHECK(u.dag_size(g1) == 4);
    CHECK_THROWS_AS(u.compose({}, {a}), Error);
    CHECK_THROWS_AS(u.atomic("x"), Error);
    CHECK_THROWS_AS(u.atomic(7), Error);
}

TEST_CASE("atomic order agrees with the poset") {
    Universe u(antichain_poset(2));
    for (int x = 0; x < 4; ++x)
        for (int y = 0; y < 4; ++y) {
            CHECK(u.leq(u.atomic(x), u.atomic(y)) == u.poset().leq(x, y));
            CHECK(u.tri(u.atomic(x), u.atomic(y)) == u.poset().leq(x, y));
        }
}

TEST_CASE("small relations") {
    Universe u(linear_poset(3));
    const GameId a = u.atomic("a");
    const GameId aa = parse_game(u, "{a|a}");
    CHECK(u.equivalent(a, aa));
    const GameId star = parse_game(u, "{T|B}");
    CHECK_FALSE(u.leq(star, a));
    CHECK_FALSE(u.leq(a, star));
    CHECK(u.is_passable(star));
    CHECK(u.leq(u.bottom(), star));
    CHECK(u.leq(star, u.top()));
    // {B|T} is not locally passable: each player wants to pass.
    const GameId bt = parse_game(u, "{B|T}");
    CHECK_FALSE(u.is_locally_passable(bt));
    CHECK_FALSE(u.is_passable(parse_game(u, "{{B|T}|B}")));
}

TEST_CASE("join and meet") {
    Universe u(antichain_poset(2));
    const GameId a = u.atomic("a"), b = u.atomic("b");
    const GameId j = u.join({a, b});
    CHECK(u.leq(a, j));
    CHECK(u.leq(b, j));
    CHECK(u.leq(j, u.top()));
    CHECK(u.equivalent(u.join({a}), a));
    const GameId m = u.meet({a, b});
    CHECK(u.leq(m, a));
    CHECK(u.leq(m, b));
    // Meet needs a top; the poset "Lin1 x fork without top" lacks one.
    auto no_top = Poset::from_relation("V", {"B", "x", "y"}, {{0, 1}, {0, 2}});
    Universe v(no_top);
    CHECK_THROWS_AS(v.meet({v.atomic("x"), v.atomic("y")}), Error);
    CHECK(v.leq(v.atomic("x"), v.join({v.atomic("x"), v.atomic("y")})));
}

TEST_CASE("linear totality and atom bounds on a chain") {
    Universe u(linear_poset(4));
    testing::RandomGames rg(7, 4);
    int checked = 0;
    while (checked < 400) {
        const GameId g = rg.game(u, 2), h = rg.game(u, 2);
        if (!u.is_passable(g) || !u.is_passable(h)) continue;
        const auto w = u.linear_totality(g, h);
        CHECK((w.g_tri_h || w.h_leq_g));
        if (!u.is_atomic(g))
            for (int a = 0; a < 4; ++a) (void)u.passable_atom_bound(g, a);
        ++checked;
    }
    Universe f(antichain_poset(2));
    CHECK_THROWS_AS(f.linear_totality(f.atomic("a"), f.atomic("b")), Error);
}

TEST_CASE("parse and print") {
    Universe u(antichain_poset(2));
    const GameId g = parse_game(u, "{a,b|{T|a}}");
    CHECK(u.left_set(g).size() == 2);
    CHECK(u.right_set(g).size() == 1);
    CHECK(parse_game(u, print_game(u, g)) == g);
    CHECK(print_game(u, parse_game(u, "{ b , a | { T | a } }")) == print_game(u, g));
    for (const char* bad : {"{|a}", "{a|}", "{a|b", "{a b|a}", "x", "{a|b}}", ""}) {
        try {
            parse_game(u, bad);
            FAIL("accepted " << bad);
        } catch (const Error& e) {
            CHECK(e.kind() == ErrorKind::parse);
        }
    }
    Universe p(product_poset(linear_poset(2), linear_poset(2)));
    const GameId q = parse_game(p, "{(T,T)|(B,T)}");
    CHECK(parse_game(p, print_game(p, q)) == q);
}

TEST_CASE("round trip of random games") {
    Universe u(linear_poset(4));
    testing::RandomGames rg(11, 4);
    for (int i = 0; i < 500; ++i) {
        const GameId g = rg.game(u, 3);
        CHECK(parse_game(u, print_game(u, g)) == g);
    }
}

TEST_CASE("cache switch does not change answers") {
    auto p = linear_poset(3);
    Universe cached(p), plain(p);
    plain.set_cache_enabled(false);
    testing::RandomGames r1(5, 3), r2(5, 3);
    for (int i = 0; i < 300; ++i) {
        const GameId g1 = r1.game(cached, 2), h1 = r1.game(cached, 2);
        const GameId g2 = r2.game(plain, 2), h2 = r2.game(plain, 2);
        CHECK(cached.leq(g1, h1) == plain.leq(g2, h2));
        CHECK(cached.tri(g1, h1) == plain.tri(g2, h2));
        CHECK(cached.is_passable(g1) == plain.is_passable(g2));
    }
    CHECK(plain.relation_cache_size() == 0);
    cached.clear_caches();
    CHECK(cached.relation_cache_size() == 0);
}

TEST_CASE("the world keeps one universe per poset content") {
    World w;
    Universe& a = w.universe(linear_poset(3));
    Universe& b = w.universe(linear_poset(3));
    CHECK(&a == &b);
    CHECK(&w.universe(antichain_poset(2)) != &a);
}

}
