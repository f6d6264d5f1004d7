#include <doctest.h>

#include "cgt/algebra.hpp"
#include "cgt/error.hpp"
#include "cgt/poset.hpp"

using namespace cgt;

namespace {

bool has_cover(const Poset& p, const std::string& a, const std::string& b) {
    for (auto [x, y] : p.hasse())
        if (p.atom_name(x) == a && p.atom_name(y) == b) return true;
    return false;
}

} // namespace

TEST_SUITE("poset") {

TEST_CASE("linear posets") {
    auto two = linear_poset(2);
    CHECK(two->size() == 2);
    CHECK(two->leq(two->index_of("B"), two->index_of("T")));
    CHECK_FALSE(two->leq(two->index_of("T"), two->index_of("B")));

    auto one = linear_poset(1);
    CHECK(one->size() == 1);
    CHECK(one->top_atom() == 0);
    CHECK(one->bottom_atom() == 0);

    auto four = linear_poset(4);
    REQUIRE(four->atoms() == std::vector<std::string>{"B", "a", "b", "T"});
    CHECK(four->is_linear());
    CHECK(four->hasse().size() == 3);
    CHECK(has_cover(*four, "a", "b"));
    CHECK_THROWS_AS(linear_poset(0), Error);
}

TEST_CASE("antichains") {
    auto a3 = antichain_poset(3);
    CHECK(a3->size() == 5);
    CHECK(a3->hasse().size() == 6);
    for (const char* m : {"a", "b", "c"}) {
        CHECK(has_cover(*a3, "B", m));
        CHECK(has_cover(*a3, m, "T"));
    }
    CHECK_FALSE(a3->comparable(a3->index_of("a"), a3->index_of("b")));
    CHECK(antichain_poset(1)->is_linear());
    CHECK(antichain_poset(1)->size() == 3);
    auto fork = antichain_poset(2);
    CHECK(fork->size() == 4);
    CHECK_FALSE(fork->is_linear());
    CHECK_THROWS_AS(antichain_poset(0), Error);
}

TEST_CASE("non-crossing partitions follow the Catalan numbers") {
    const long long expected[] = {1, 2, 5, 14, 42, 132};
    for (int n = 1; n <= 6; ++n) {
        CHECK(static_cast<long long>(non_crossing_partitions(n).size()) == expected[n - 1]);
        CHECK(non_crossing_poset(n)->size() == expected[n - 1]);
        CHECK(catalan(n) == expected[n - 1]);
    }
    auto nc4 = non_crossing_poset(4);
    CHECK(nc4->has_top());
    CHECK(nc4->has_bottom());
    // Refinement order: p <= q iff pairs joined in p are joined in q.
    for (int i = 0; i < nc4->size(); ++i)
        for (int j = 0; j < nc4->size(); ++j) {
            const auto& parts = non_crossing_partitions(4);
            bool refines = true;
            for (int x = 0; x < 4; ++x)
                for (int y = 0; y < 4; ++y)
                    if (parts[i][x] == parts[i][y] && parts[j][x] != parts[j][y]) refines = false;
            CHECK(nc4->leq(non_crossing_index(parts[i]), non_crossing_index(parts[j])) == refines);
        }
    CHECK_FALSE(is_non_crossing({0, 1, 0, 1}));
    CHECK(is_non_crossing({0, 1, 1, 0}));
    CHECK_THROWS_AS(non_crossing_poset(9), Error);
    CHECK_THROWS_AS(non_crossing_poset(0), Error);
}

TEST_CASE("products and opposites") {
    auto b = linear_poset(2);
    auto bb = product_poset(b, b);
    CHECK(bb->size() == 4);
    CHECK(bb->hasse().size() == 4);
    CHECK(bb->atom_name(bb->top_atom()) == "(T,T)");
    CHECK(bb->atom_name(bb->bottom_atom()) == "(B,B)");
    CHECK_FALSE(bb->comparable(product_index(0, 1, 2), product_index(1, 0, 2)));

    auto unit = product_poset(linear_poset(1), antichain_poset(2));
    auto fork = antichain_poset(2);
    for (int i = 0; i < fork->size(); ++i)
        for (int j = 0; j < fork->size(); ++j) CHECK(unit->leq(i, j) == fork->leq(i, j));

    auto l3 = linear_poset(3);
    auto op = opposite_poset(l3);
    CHECK(op->leq(op->index_of("T"), op->index_of("a")));
    CHECK(op->leq(op->index_of("a"), op->index_of("B")));
    CHECK(op->top_atom() == l3->bottom_atom());
    auto opop = opposite_poset(op);
    CHECK(opop->atoms() == l3->atoms());
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) CHECK(opop->leq(i, j) == l3->leq(i, j));

    // The fork is self-dual: swapping B and T is an isomorphism onto the opposite.
    auto fop = opposite_poset(fork);
    const int iso[] = {3, 1, 2, 0};
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) CHECK(fork->leq(i, j) == fop->leq(iso[i], iso[j]));
}

TEST_CASE("monotone map checks") {
    auto l3 = linear_poset(3);
    CHECK(monotone_map_check(l3, l3, identity_map(l3).table));
    auto b = linear_poset(2);
    CHECK_FALSE(monotone_map_check(b, b, {1, 0}));
    CHECK_THROWS_AS(monotone_map_check(b, b, {0, 2}), Error);
    CHECK_THROWS_AS(monotone_map_check(b, b, {0}), Error);
    // lambda and rho are monotone on A x A^op.
    for (auto p : {l3, antichain_poset(2), linear_poset(4)}) {
        auto lam = lambda_map(p);
        auto rho = rho_map(p);
        CHECK(monotone_map_check(lam.source, lam.target, lam.table));
        CHECK(monotone_map_check(rho.source, rho.target, rho.table));
    }
}

TEST_CASE("construction rejects cycles and bad names") {
    CHECK_THROWS_AS(Poset::from_relation("cyc", {"x", "y", "z"}, {{0, 1}, {1, 2}, {2, 0}}), Error);
    CHECK_THROWS_AS(Poset::from_relation("dup", {"x", "x"}, {}), Error);
    CHECK_THROWS_AS(Poset::from_relation("meta", {"x|y"}, {}), Error);
    CHECK_THROWS_AS(Poset::from_relation("space", {"x y"}, {}), Error);
    CHECK(valid_atom_name("(a,b)"));
    CHECK_FALSE(valid_atom_name("a,b"));
    CHECK_FALSE(valid_atom_name(""));
}

TEST_CASE("text format round trip") {
    for (auto p : {linear_poset(4), antichain_poset(3), non_crossing_poset(3), product_poset(linear_poset(2), linear_poset(3))}) {
        auto q = parse_poset(p->to_text());
        CHECK(q->same_as(*p));
        CHECK(q->content_hash() == p->content_hash());
    }
    auto parsed = parse_poset("# comment\nposet Diamond\natoms: B x y T\ncover: B < x\ncover: B < y\ncover: x < T\ncover: y < T\n");
    CHECK(parsed->size() == 4);
    CHECK(parsed->leq(0, 3));
    try {
        parse_poset("poset P\natoms: a b\ncover: a < c\n");
        FAIL("expected a parse error");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::parse);
    }
    CHECK_THROWS_AS(parse_poset("atoms: a\n"), Error);
}

TEST_CASE("binary map files") {
    auto l3 = linear_poset(3);
    std::string text;
    const char* n[] = {"B", "a", "T"};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) text += std::string("map: ") + n[i] + " " + n[j] + " -> " + n[std::min(i, j)] + "\n";
    auto f = parse_binary_map(text, l3, l3, l3);
    CHECK(f(product_index(2, 1, 3)) == 1);
    CHECK_THROWS_AS(parse_binary_map("map: B B -> B\n", l3, l3, l3), Error);
    CHECK_THROWS_AS(parse_binary_map("map B B B\n", l3, l3, l3), Error);
}

}
