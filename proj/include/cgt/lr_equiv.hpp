#pragma once

#include <vector>

#include "cgt/game.hpp"

namespace cgt {

// S <=L T: every member of S satisfies s tri {T | bottom}. Needs a bottom.
bool leql(Universe& u, const GameSet& s, const GameSet& t);
// S <=R T: every member of T satisfies {top | S} tri t. Needs a top.
bool leqr(Universe& u, const GameSet& s, const GameSet& t);
bool left_equivalent(Universe& u, const GameSet& s, const GameSet& t);
bool right_equivalent(Universe& u, const GameSet& s, const GameSet& t);

// {top | {S | bottom}} and its dual {{top | S} | bottom}.
GameId upl(Universe& u, const GameSet& s);
GameId downr(Universe& u, const GameSet& s);

// Class keys: canonical ids of {S | bottom} and {top | S}. Two sets are left
// (right) equivalent exactly when their left (right) keys agree.
GameId left_key(Universe& u, const GameSet& s);
GameId right_key(Universe& u, const GameSet& s);

// One representative per left (right) equivalence class of the non-empty
// subsets of `games`, built incrementally: each new game is tried alone and
// added to every existing representative; the first set built for a class is
// kept.
std::vector<GameSet> left_classes(Universe& u, const GameSet& games);
std::vector<GameSet> right_classes(Universe& u, const GameSet& games);

// leql({h},{k}) && leqr({h},{k}); throws internal_consistency when this
// disagrees with leq(h, k).
bool leq_decomposition_check(Universe& u, GameId h, GameId k);

// Least upper bound for the right order: join of downr({h}) and downr({k}).
GameId right_order_join(Universe& u, GameId h, GameId k);

} // namespace cgt
