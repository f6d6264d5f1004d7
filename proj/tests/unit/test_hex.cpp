#include <doctest.h>

#include "../support.hpp"
#include "cgt/canonical.hpp"
#include "cgt/error.hpp"
#include "cgt/hex_region.hpp"

using namespace cgt;

namespace {

// Diamond board of side n with one black edge terminal on the left column.
Region diamond(int n) {
    std::string text = "region diamond\n";
    for (int r = 1; r <= n; ++r)
        for (int c = 1; c <= n; ++c) text += "cell " + std::to_string(r) + " " + std::to_string(c) + " .\n";
    text += "edge 1:";
    for (int r = 1; r <= n; ++r) text += " (" + std::to_string(r) + ",1)";
    text += "\n";
    return parse_region(text);
}

// Black components by flood fill over the region graph.
int count_black(const Region& r, const std::vector<Stone>& f) {
    std::vector<char> seen(f.size(), 0);
    int count = 0;
    for (std::size_t s = 0; s < f.size(); ++s) {
        if (f[s] != Stone::black || seen[s]) continue;
        ++count;
        std::vector<int> stack{static_cast<int>(s)};
        seen[s] = 1;
        while (!stack.empty()) {
            const int x = stack.back();
            stack.pop_back();
            for (int y : r.adj[x])
                if (f[y] == Stone::black && !seen[y]) {
                    seen[y] = 1;
                    stack.push_back(y);
                }
        }
    }
    return count;
}

std::vector<Stone> filled_of(const Region& r) {
    std::vector<Stone> f;
    for (const auto& c : r.cells) f.push_back(c.stone);
    return f;
}

} // namespace

TEST_SUITE("hex_region") {

TEST_CASE("parsing and validation") {
    Region r = load_region(testing::data_path("regions/two-terminal/star.region"));
    CHECK(r.cells.size() == 7);
    CHECK(r.terminals.size() == 2);
    CHECK(r.empty_cells().size() == 1);
    Region again = parse_region(region_to_text(r));
    CHECK(again.cells.size() == r.cells.size());
    CHECK(again.adj == r.adj);

    auto expect_region_error = [](const std::string& text) {
        try {
            parse_region(text);
            FAIL("accepted region");
        } catch (const Error& e) {
            CHECK((e.kind() == ErrorKind::invalid_region || e.kind() == ErrorKind::parse));
        }
    };
    expect_region_error("region x\ncell 1 1 .\ncell 1 1 B\nterminal 1: (1,1)\n");
    expect_region_error("region x\ncell 1 1 .\nterminal 1: (1,1)\n");
    expect_region_error("region x\ncell 1 1 B\ncell 3 3 B\nterminal 1: (1,1) (3,3)\n");
    expect_region_error("region x\ncell 1 1 B\nterminal 1: (2,2)\n");
    expect_region_error("region x\ncell 1 1 Q\n");
    expect_region_error("region x\ncell 1 1 B\nterminal 1: (1,1)\nquotient nope\n");
}

TEST_CASE("two-terminal positions") {
    World w;
    const char* files[] = {"bottom", "star", "top"};
    const char* want[] = {"B", "{T|B}", "T"};
    for (int i = 0; i < 3; ++i) {
        Region r = load_region(testing::data_path(std::string("regions/two-terminal/") + files[i] + ".region"));
        Game g = region_value(w, r);
        CHECK(print_game(*g.u, g.id) == want[i]);
        CHECK(g.u->is_passable(g.id));
    }
}

TEST_CASE("Catalan outcome counts") {
    for (int n = 2; n <= 5; ++n) {
        Region r;
        r.name = "line";
        for (int i = 0; i < n; ++i) r.cells.push_back({1, 2 * i + 1, Stone::black});
        for (int i = 0; i < n; ++i) r.terminals.push_back(Terminal{{i}, false});
        r.finalize();
        CHECK(region_outcome_poset(r)->size() == catalan(n));
    }
    CHECK(catalan(2) == 2);
    CHECK(catalan(5) == 42);
}

TEST_CASE("outcomes are monotone in the completion") {
    Region r = load_region(testing::data_path("regions/fork-gap/G30.region"));
    auto p = region_outcome_poset(r);
    const auto empties = r.empty_cells();
    REQUIRE(empties.size() <= 12);
    const std::uint32_t n = static_cast<std::uint32_t>(empties.size());
    auto fill = [&](std::uint32_t black) {
        auto f = filled_of(r);
        for (std::uint32_t i = 0; i < n; ++i) f[empties[i]] = ((black >> i) & 1) ? Stone::black : Stone::white;
        return f;
    };
    for (std::uint32_t x = 0; x < (1u << n); ++x) {
        const int ox = outcome_of(r, fill(x));
        for (std::uint32_t i = 0; i < n; ++i)
            if (!((x >> i) & 1)) CHECK(p->leq(ox, outcome_of(r, fill(x | (1u << i)))));
    }
    CHECK(outcome_of(r, fill(0)) == p->bottom_atom());
    CHECK(outcome_of(r, fill((1u << n) - 1)) == p->top_atom());
}

TEST_CASE("cache and pruning do not change values") {
    World w;
    for (const char* f : {"fork-gap/G30.region", "fork-gap/G17.region", "one-sided-fork/G6.region", "two-terminal-gap/G7.region"}) {
        Region r = load_region(testing::data_path(std::string("regions/") + f));
        Game a = region_value(w, r);
        Game b = region_value(w, r, {.transposition_cache = false});
        Game c = region_value(w, r, {.prune_dead = true});
        CHECK(a.id == b.id);
        CHECK(a.id == c.id);
    }
}

TEST_CASE("dead cells") {
    // Two adjacent terminals are always connected: every empty cell is dead.
    Region decided = parse_region(
        "region decided\ncell 1 1 B\ncell 1 2 B\ncell 2 1 .\ncell 2 2 .\nterminal 1: (1,1)\nterminal 2: (1,2)\n");
    CHECK(dead_cells(decided).size() == 2);
    Region star = load_region(testing::data_path("regions/two-terminal/star.region"));
    CHECK(dead_cells(star).empty());
}

TEST_CASE("the flower flips into three components") {
    // Center (2,2) and its six neighbours in cyclic order, alternating colors.
    Region r = parse_region(
        "region flower\ncell 2 2 B\ncell 1 2 B\ncell 1 3 W\ncell 2 3 B\ncell 3 2 W\ncell 3 1 B\ncell 2 1 W\n"
        "terminal 1: (1,2)\n");
    auto f = filled_of(r);
    CHECK(black_components(r, f) == 1);
    CHECK(component_delta_check(r, f, r.find(2, 2)) == 2);
    // An isolated stone disappears.
    Region lone = parse_region("region lone\ncell 1 1 B\ncell 1 2 W\ncell 5 5 B\nterminal 1: (5,5)\n");
    CHECK(component_delta_check(lone, filled_of(lone), lone.find(1, 1)) == -1);
    CHECK_THROWS_AS(component_delta_check(lone, filled_of(lone), lone.find(1, 2)), Error);
}

TEST_CASE("component delta agrees with flood fill") {
    Region r = diamond(6);
    std::mt19937 rng(2024);
    for (int t = 0; t < 2000; ++t) {
        std::vector<Stone> f(r.cells.size());
        for (auto& s : f) s = (rng() & 1) ? Stone::black : Stone::white;
        std::vector<int> blacks;
        for (std::size_t i = 0; i < f.size(); ++i)
            if (f[i] == Stone::black) blacks.push_back(static_cast<int>(i));
        if (blacks.empty()) continue;
        const int cell = blacks[rng() % blacks.size()];
        auto after = f;
        after[cell] = Stone::white;
        const int expect = count_black(r, after) - count_black(r, f);
        CHECK(component_delta_check(r, f, cell) == expect);
        CHECK(expect <= 2);
    }
}

TEST_CASE("octagon realizes the star") {
    World w;
    Region oct = octagon_region();
    Game g = region_value(w, oct);
    CHECK(g.u->equivalent(g.id, g.u->compose({g.u->top()}, {g.u->bottom()})));
}

TEST_CASE("small sweeps are clean") {
    World w;
    CHECK(no_star_4terminal(w, 0));
    auto rep = no_star_4terminal_sweep(w, 2);
    CHECK(rep.clean);
    CHECK(rep.regions > 0);
}

TEST_CASE("terminal limit under free moves") {
    Region oct = octagon_region();
    const int g0 = terminal_limit_guarantee(oct, 0);
    const int g1 = terminal_limit_guarantee(oct, 1);
    // Black colors the center and joins all four terminals.
    CHECK(g0 == 4);
    CHECK(g1 == 1);
    CHECK(g1 <= g0);
    CHECK_THROWS_AS(terminal_limit_guarantee(oct, -1), Error);
}

TEST_CASE("budget is enforced") {
    World w;
    Region r = diamond(4);
    try {
        region_value(w, r, {.max_empty = 10});
        FAIL("expected a resource error");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::resource_limit);
    }
}

}
