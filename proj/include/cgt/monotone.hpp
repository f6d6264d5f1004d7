#pragma once

#include "cgt/game.hpp"

namespace cgt {

// Equivalent semi-monotone game for a passable input: options are fixed
// recursively, then a missing good option on one side is supplied by the
// gift horse {H | bottom} (right) or {top | K} (left).
GameId to_semi_monotone(Universe& u, GameId g);

// Equivalent monotone game for a passable input, built from the
// semi-monotone form as {upl(L') | downr(R')} with L' = {upl({H})} and
// R' = {downr({K})} over the recursively monotonized options. Positions that
// are already monotone are kept unchanged.
GameId to_monotone(Universe& u, GameId g);

enum class ClassLevel { passable, semi_monotone, monotone };

// {S | bottom} (left) or {top | S} (right) for a tri-clique S whose members
// all belong to `level`.
GameId clique_embed(Universe& u, const GameSet& s, bool as_left, ClassLevel level);

// Greedy size reduction of a monotone game: dominated options are removed
// and reversible options bypassed only when the result stays monotone.
GameId shrink_monotone(Universe& u, GameId g);

} // namespace cgt
