#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "cgt/algebra.hpp"
#include "cgt/game.hpp"
#include "cgt/poset.hpp"

namespace cgt {

enum class Stone : std::uint8_t { empty, black, white };

struct HexCell {
    int r = 0;
    int c = 0;
    Stone stone = Stone::empty;
};

// A terminal is either a group of pre-placed stones of its own color or a
// virtual node (a board edge) adjacent to the listed cells.
struct Terminal {
    std::vector<int> cells;
    bool edge = false;
};

// How completions are classified.
//   nc              non-crossing partition of the black terminals
//   fork            nc over 3 terminals with the bottom and {12} identified
//   one_sided_fork  nc over 3 terminals mapped onto Lin3 (terminals 1 and 3
//                   connected counts as top, {23} alone as a)
//   gap             2 black and 2 white terminals; top if Black's connect,
//                   bottom if White's connect, a otherwise
//   fork_gap        2 black and 2 white terminals plus a playable gap cell;
//                   top / bottom as for gap, otherwise a or b by the color
//                   of the gap cell
enum class RegionTemplate { nc, fork, one_sided_fork, gap, fork_gap };

const char* template_name(RegionTemplate t);
RegionTemplate template_from_name(const std::string& s);

struct Region {
    std::string name;
    std::vector<HexCell> cells;
    std::vector<Terminal> terminals;        // black, in boundary order
    std::vector<Terminal> white_terminals;  // used by the gap templates
    int gap = -1;                           // cell index, fork_gap only
    RegionTemplate kind = RegionTemplate::nc;
    std::vector<std::pair<int, int>> adjacency_add;
    std::vector<std::pair<int, int>> adjacency_remove;

    // Filled by finalize().
    std::vector<std::vector<int>> adj;

    int find(int r, int c) const;
    std::vector<int> empty_cells() const;
    // Builds adjacency and validates terminals; throws invalid_region.
    void finalize();
};

// Text format:
//   region <name>
//   cell r c [B|W|.]
//   terminal t: (r,c) (r,c) ...        black stone group
//   edge t: (r,c) (r,c) ...            black board edge touching these cells
//   white-terminal t: (r,c) ...        white stone group
//   white-edge t: (r,c) ...            white board edge
//   gap r c
//   adjacency add r1 c1 r2 c2
//   adjacency remove r1 c1 r2 c2
//   quotient nc|fork|one-sided-fork|gap|fork-gap
// Terminals are numbered from 1 in boundary order; '#' starts a comment.
Region parse_region(const std::string& text);
Region load_region(const std::string& path);
std::string region_to_text(const Region& r);

// Outcome poset of the region's template.
PosetPtr region_outcome_poset(const Region& r);
// For nc-derived templates, the map from non_crossing_poset(n) onto the
// template's poset.
MonotoneMap fork_quotient();
MonotoneMap one_sided_fork_quotient();

// Partition of the black terminals under the stone assignment (one entry per
// cell, no empties). Throws invalid_region when the partition crosses.
Partition black_partition(const Region& r, const std::vector<Stone>& filled);
// Atom index of the outcome in region_outcome_poset(r).
int outcome_of(const Region& r, const std::vector<Stone>& filled);

struct RegionValueOptions {
    int max_empty = 14;
    bool transposition_cache = true;
    // Fill cells found by dead_cells() with White before searching.
    bool prune_dead = false;
};

// Value of the region by exhaustive play: Black colors a cell black, White
// colors it white, leaves are classified by outcome_of, every interior node
// is canonicalized.
Game region_value(World& w, const Region& r, const RegionValueOptions& opt = {});

// Empty cells whose color never changes the outcome, whatever the other
// empty cells hold.
std::vector<int> dead_cells(const Region& r, int max_empty = 14);

// Black components after turning `cell` white minus black components before.
// Components are counted among board cells. Throws property_violation when
// the difference exceeds 2.
int component_delta_check(const Region& r, const std::vector<Stone>& filled, int cell);
int black_components(const Region& r, const std::vector<Stone>& filled);

// Minimax over the region with Black to move: the size of the largest
// group of connected black terminals at the end, when White may also place
// up to `free_moves` extra stones at any time of its choosing.
int terminal_limit_guarantee(const Region& r, int free_moves, int max_empty = 10);

struct SweepReport {
    bool clean = true;
    std::uint64_t shapes = 0;
    std::uint64_t regions = 0;
    std::uint64_t distinct_tables = 0;
    std::string counterexample;
};

// Every connected set of at most max_empty empty hexagons, surrounded by its
// ring of neighbouring cells, with every ring coloring whose black stones
// form exactly 4 runs (the terminals). Checks that no such region has value
// equivalent to {T|B} over non_crossing_poset(4).
SweepReport no_star_4terminal_sweep(World& w, int max_empty);
bool no_star_4terminal(World& w, int max_empty);

// One empty cell adjacent to eight cells alternating black and white.
Region octagon_region();

} // namespace cgt
