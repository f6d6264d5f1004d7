#pragma once

#include <functional>
#include <string>
#include <vector>

#include "cgt/game.hpp"

namespace cgt {

// A game together with the universe it lives in.
struct Game {
    Universe* u = nullptr;
    GameId id = -1;
};

// Conway sum over the product poset; [a] + [b] = [(a,b)].
Game sum(World& w, Game g, Game h);
// Exchanges the players; lives over the opposite poset.
Game opposite(World& w, Game g);
// Atomwise relabeling through a monotone map.
Game map_game(World& w, const MonotoneMap& f, Game g);

// Memo for repeated sum_map calls with one map and one pair of universes.
// With canonical_positions set, every position of the mapped sum is replaced
// by its canonical form as it is built; both inputs must then be passable.
struct SumMapMemo {
    absl::flat_hash_map<std::uint64_t, GameId> table;
    bool canonical_positions = false;
};

// f(G + H) for f defined on the product of the two posets, computed without
// materializing the sum.
Game sum_map(World& w, const MonotoneMap& f, Game g, Game h, SumMapMemo* memo = nullptr);

// The Bool poset used as the target of payoff maps.
PosetPtr bool_poset();
// lambda(a,b) = T iff b <= a, rho(a,b) = T iff not a <= b, both on A x A^op.
MonotoneMap lambda_map(const PosetPtr& a);
MonotoneMap rho_map(const PosetPtr& a);

struct CheckReport {
    bool ok = true;
    std::vector<std::string> failures;
    int checks = 0;
    void expect(bool cond, const std::string& what) {
        ++checks;
        if (!cond) {
            ok = false;
            failures.push_back(what);
        }
    }
};

// Copy-cat laws for a passable G; `probes` are passable games H over the same
// poset for the two biconditionals.
CheckReport copycat_check(World& w, Game g, const std::vector<GameId>& probes);

struct Context {
    PosetPtr poset;
    MonotoneMap payoff;  // from A x poset to Bool
    GameId game;         // passable, in the universe of `poset`
};

// Strict contexts send (T, b) to T and (B, b) to B.
bool is_strict_context(const Universe& a, const Context& c);

// For each context evaluates the three contextual implications for G and H
// and records a failure when one that must follow from leq/tri does not.
CheckReport contextual_probe(World& w, Game g, Game h, const std::vector<Context>& contexts);

// Poset of assignments of `cells` Bool values, as an iterated product. Atom
// index equals the assignment read as a binary number, first cell most
// significant.
PosetPtr bool_cube_poset(int cells);

// Value of the monotone set coloring game: the mapped sum of `cells` copies
// of {T|B}, canonicalized in the payoff's target universe.
GameId set_coloring_value(World& w, int cells, const MonotoneMap& payoff);

// Same value by direct play over partial colorings; payoff is indexed by the
// set of black cells (bit i = cell i).
GameId set_coloring_direct(Universe& target, int cells, const std::function<int(std::uint32_t)>& payoff);

} // namespace cgt
