#pragma once

#include <string>
#include <vector>

#include "cgt/game.hpp"

namespace cgt {

enum class Side { left, right };

enum class StepKind { removed_dominated, simplified_passing, bypassed_reversible };

// One reduction applied to the position `before`, giving `after`. For a
// bypass, `via` is the reversing option K and `atomic_via` records whether K
// itself (rather than its options) replaced the reversible option.
struct TraceStep {
    StepKind kind;
    Side side;
    GameId before;
    GameId option;
    GameId via;
    bool atomic_via;
    GameId after;
};

using SimplificationTrace = std::vector<TraceStep>;

// Canonical form: fixpoint of passing simplification, dominated-option removal
// and reversible-option bypassing, applied bottom-up. When `trace` is given,
// every step taken at every position is appended and the memo is not read.
GameId canonical_form(Universe& u, GameId g, SimplificationTrace* trace = nullptr);

// Single-position reductions (options are not canonicalized first).
GameId remove_dominated(Universe& u, GameId g);
GameId bypass_reversible(Universe& u, GameId g);
GameId simplify_passing(Universe& u, GameId g);

// True when no position of g has a dominated, reversible or passing option.
bool is_canonical(Universe& u, GameId g);

// Returns equivalent(g, h) and throws internal_consistency when equivalent
// games have different canonical forms.
bool assert_unique(Universe& u, GameId g, GameId h);

// Recomputes `after` from `before` for a recorded step.
GameId replay_step(Universe& u, const TraceStep& step);
std::string format_step(const Universe& u, const TraceStep& step);

} // namespace cgt
