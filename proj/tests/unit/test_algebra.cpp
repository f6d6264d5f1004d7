#include <doctest.h>

#include "../support.hpp"
#include "cgt/algebra.hpp"
#include "cgt/canonical.hpp"
#include "cgt/enumerate.hpp"
#include "cgt/error.hpp"
#include "cgt/monotone.hpp"

using namespace cgt;

TEST_SUITE("monotone") {

TEST_CASE("monotone and semi-monotone forms are equivalent") {
    for (auto p : {linear_poset(3), antichain_poset(2)}) {
        Universe u(p);
        testing::RandomGames rg(31, p->size());
        int done = 0;
        while (done < 300) {
            const GameId g = rg.game(u, 2);
            if (!u.is_passable(g)) continue;
            const GameId s = to_semi_monotone(u, g);
            CHECK(u.is_semi_monotone(s));
            CHECK(u.equivalent(s, g));
            const GameId m = to_monotone(u, g);
            CHECK(u.is_monotone(m));
            CHECK(u.equivalent(m, g));
            const GameId k = shrink_monotone(u, m);
            CHECK(u.is_monotone(k));
            CHECK(u.equivalent(k, g));
            CHECK(u.dag_size(k) <= u.dag_size(m));
            ++done;
        }
    }
}

TEST_CASE("non-passable input is rejected") {
    Universe u(linear_poset(3));
    CHECK_THROWS_AS(to_monotone(u, parse_game(u, "{B|T}")), Error);
}

TEST_CASE("clique embedding") {
    Universe u(antichain_poset(2));
    const GameSet s{u.atomic("a")};
    const GameId l = clique_embed(u, s, true, ClassLevel::monotone);
    CHECK(u.is_monotone(l));
    const GameId r = clique_embed(u, s, false, ClassLevel::passable);
    CHECK(u.is_passable(r));
}

TEST_CASE("monotonizing the Lin3 catalog") {
    Universe u(linear_poset(3));
    auto cat = enumerate_canonical_passable(u, {.max_depth = 2});
    for (GameId g : cat.games) {
        const GameId m = to_monotone(u, g);
        CHECK(u.is_monotone(m));
        CHECK(canonical_form(u, m) == g);
    }
}

}

TEST_SUITE("algebra") {

TEST_CASE("sum of atoms is the product atom") {
    World w;
    Universe& a = w.universe(linear_poset(3));
    Universe& b = w.universe(linear_poset(2));
    Game s = sum(w, {&a, a.atomic("a")}, {&b, b.atomic("T")});
    CHECK(s.u->is_atomic(s.id));
    CHECK(s.u->poset().atom_name(s.u->atom_of(s.id)) == "(a,T)");
}

TEST_CASE("non-monotone sum counterexample") {
    World w;
    Universe& l3 = w.universe(linear_poset(3));
    Universe& bl = w.universe(bool_poset());
    const GameId g = l3.atomic("a");
    const GameId g2 = parse_game(l3, "{a|a}");
    const GameId h = parse_game(bl, "{B|T}");
    CHECK(l3.equivalent(g, g2));
    Game s1 = sum(w, {&l3, g}, {&bl, h});
    Game s2 = sum(w, {&l3, g2}, {&bl, h});
    CHECK(print_game(*s1.u, s1.id) == "{(a,B)|(a,T)}");
    CHECK_FALSE(s1.u->leq(s1.id, s2.id));
    CHECK_FALSE(s1.u->leq(s2.id, s1.id));
}

TEST_CASE("opposite is an involution that reverses the order") {
    World w;
    Universe& u = w.universe(antichain_poset(2));
    testing::RandomGames rg(41, 4);
    for (int i = 0; i < 200; ++i) {
        const GameId g = rg.game(u, 2), h = rg.game(u, 2);
        Game og = opposite(w, {&u, g}), oh = opposite(w, {&u, h});
        CHECK(og.u->leq(oh.id, og.id) == u.leq(g, h));
        Game back = opposite(w, og);
        CHECK(back.u == &u);
        CHECK(back.id == g);
    }
}

TEST_CASE("maps commute with sums") {
    World w;
    auto l3 = linear_poset(3);
    Universe& u = w.universe(l3);
    auto prod = product_poset(l3, l3);
    std::vector<int> table(prod->size());
    for (int x = 0; x < 3; ++x)
        for (int y = 0; y < 3; ++y) table[product_index(x, y, 3)] = std::min(x, y);
    auto f = make_monotone_map(prod, l3, table);
    testing::RandomGames rg(51, 3);
    SumMapMemo memo;
    for (int i = 0; i < 200; ++i) {
        const GameId g = rg.game(u, 2), h = rg.game(u, 2);
        Game direct = map_game(w, f, sum(w, {&u, g}, {&u, h}));
        Game fused = sum_map(w, f, {&u, g}, {&u, h}, &memo);
        CHECK(direct.u == fused.u);
        CHECK(direct.u->equivalent(direct.id, fused.id));
    }
    Game m = sum_map(w, f, {&u, parse_game(u, "{T|a}")}, {&u, parse_game(u, "{a|B}")});
    CHECK(print_game(*m.u, canonical_form(*m.u, m.id)) == "{a|B}");
    CHECK_THROWS_AS(make_monotone_map(l3, l3, {2, 1, 0}), Error);
}

TEST_CASE("copy-cat on a few values") {
    World w;
    Universe& u = w.universe(antichain_poset(2));
    std::vector<GameId> probes;
    for (const char* t : {"a", "b", "{T|a}", "{a,b|a}", "{T|B}"}) probes.push_back(parse_game(u, t));
    for (GameId g : probes) {
        auto rep = copycat_check(w, {&u, g}, probes);
        CHECK_MESSAGE(rep.ok, (rep.failures.empty() ? "" : rep.failures.front()));
        CHECK(rep.checks > 0);
    }
}

TEST_CASE("contextual probes follow the order") {
    World w;
    auto l3 = linear_poset(3);
    Universe& u = w.universe(l3);
    Universe& bu = w.universe(bool_poset());
    Context c;
    c.poset = bool_poset();
    std::vector<int> table(l3->size() * 2);
    for (int x = 0; x < 3; ++x)
        for (int y = 0; y < 2; ++y) table[product_index(x, y, 2)] = (x == 2 || (x == 1 && y == 1)) ? 1 : 0;
    c.payoff = make_monotone_map(product_poset(l3, bool_poset()), bool_poset(), table);
    c.game = parse_game(bu, "{T|B}");
    CHECK(is_strict_context(u, c));
    const std::vector<GameId> games{u.atomic("a"), parse_game(u, "{T|a}"), parse_game(u, "{a|B}"), parse_game(u, "{T|B}")};
    for (GameId g : games)
        for (GameId h : games) {
            auto rep = contextual_probe(w, {&u, g}, {&u, h}, {c});
            CHECK(rep.ok);
        }
}

TEST_CASE("set coloring two ways") {
    World w;
    for (int cells = 1; cells <= 3; ++cells) {
        auto cube = bool_cube_poset(cells);
        CHECK(cube->size() == (1 << cells));
        // Payoff: Black wins iff at least half of the cells are black.
        std::vector<int> table(cube->size());
        for (int m = 0; m < cube->size(); ++m) table[m] = 2 * std::popcount(static_cast<unsigned>(m)) >= cells ? 1 : 0;
        auto payoff = make_monotone_map(cube, bool_poset(), table);
        const GameId v1 = set_coloring_value(w, cells, payoff);
        Universe& bu = w.universe(bool_poset());
        const GameId v2 = set_coloring_direct(bu, cells, [&](std::uint32_t black) {
            std::uint32_t idx = 0;
            for (int i = 0; i < cells; ++i)
                if ((black >> i) & 1) idx |= 1u << (cells - 1 - i);
            return table[idx];
        });
        CHECK(bu.equivalent(v1, v2));
    }
}

}

TEST_SUITE("enumerate") {

TEST_CASE("small catalogs") {
    Universe b(bool_poset());
    CHECK(enumerate_canonical_passable(b, {.max_depth = 3}).total() == 3);
    Universe l3(linear_poset(3));
    auto c3 = enumerate_canonical_passable(l3, {.max_depth = 2});
    CHECK(c3.total() == 8);
    CHECK(c3.complete);
    CHECK(hasse(c3).size() == 8);
    for (std::size_t i = 0; i < c3.games.size(); ++i) {
        CHECK(is_canonical(l3, c3.games[i]));
        CHECK(c3.index_of(c3.games[i]) == static_cast<int>(i));
        for (std::size_t j = 0; j < c3.games.size(); ++j)
            CHECK((c3.leq[i][j] != 0) == l3.leq(c3.games[i], c3.games[j]));
    }
}

TEST_CASE("class structure of catalogs") {
    // Left and right classes meet in at most one value, and the maxima of the
    // left classes are exactly the right class of the top atom. The second
    // part needs a catalog holding every value, so the antichain is excluded.
    for (auto [p, depth] : {std::pair{linear_poset(3), 2}, std::pair{linear_poset(4), 4}, std::pair{antichain_poset(2), 2}}) {
        const bool closed = p->is_linear();
        Universe u(p);
        auto cat = enumerate_canonical_passable(u, {.max_depth = depth});
        const int n = static_cast<int>(cat.total());
        std::set<std::pair<int, int>> cells;
        for (int i = 0; i < n; ++i) CHECK(cells.emplace(cat.left_class[i], cat.right_class[i]).second);
        const int top = cat.index_of(u.top());
        REQUIRE(top >= 0);
        std::set<int> maxima;
        for (int i = 0; i < n; ++i) {
            bool is_max = true;
            for (int j = 0; j < n; ++j)
                if (j != i && cat.left_class[j] == cat.left_class[i] && cat.leq[i][j]) is_max = false;
            if (is_max) maxima.insert(i);
        }
        std::set<int> top_class;
        for (int i = 0; i < n; ++i)
            if (cat.right_class[i] == cat.right_class[top]) top_class.insert(i);
        if (closed) CHECK(maxima == top_class);
    }
}

TEST_CASE("budgets stop enumeration") {
    Universe u(linear_poset(4));
    auto cat = enumerate_canonical_passable(u, {.max_depth = 4, .budget_values = 10});
    CHECK_FALSE(cat.complete);
    CHECK_FALSE(cat.incomplete_reason.empty());
}

TEST_CASE("the chain construction over antichains") {
    Universe u(antichain_poset(2));
    auto chain = increasing_chain(u, 6);
    REQUIRE(chain.size() == 7);
    for (std::size_t i = 0; i + 1 < chain.size(); ++i) {
        CHECK(u.leq(chain[i], chain[i + 1]));
        CHECK_FALSE(u.leq(chain[i + 1], chain[i]));
    }
    Universe l(linear_poset(4));
    CHECK_THROWS_AS(increasing_chain(l, 3), Error);
}

}
