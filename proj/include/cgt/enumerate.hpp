#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "cgt/game.hpp"

namespace cgt {

struct EnumerateOptions {
    int max_depth = 2;
    // Upper bound on catalog size and on candidates examined (0 = unlimited).
    std::uint64_t budget_values = 0;
    std::uint64_t budget_candidates = 0;
    // Approximate memory bound for the relation bitsets, in MiB (0 = unlimited).
    std::uint64_t budget_mb = 0;
};

// All canonical passable values up to a depth, ordered by depth and then by
// discovery order within a depth.
struct ValueCatalog {
    PosetPtr poset;
    std::vector<GameId> games;
    std::vector<int> depth;
    std::vector<std::uint64_t> per_depth;
    // leq[i][j] != 0 iff games[i] <= games[j].
    std::vector<std::vector<char>> leq;
    // Index of the left (right) equivalence class of {G} among the catalog.
    std::vector<int> left_class;
    std::vector<int> right_class;
    bool complete = true;
    std::string incomplete_reason;
    // Telemetry.
    std::uint64_t candidates = 0;
    std::vector<std::uint64_t> left_reps_per_step;
    std::vector<std::uint64_t> right_reps_per_step;

    std::uint64_t total() const { return games.size(); }
    // Index of the catalog entry with the given universe id, or -1.
    int index_of(GameId g) const;
};

// Enumerates canonical passable games {L|R} depth by depth, drawing L from
// left-class representatives and R from right-class representatives of the
// catalog built so far. Needs a poset with top and bottom. On a budget breach
// the partial catalog is returned with complete = false.
ValueCatalog enumerate_canonical_passable(Universe& u, const EnumerateOptions& opt);

// Covering pairs (i, j) of the catalog order, as catalog indices.
std::vector<std::pair<int, int>> hasse(const ValueCatalog& cat);

// G0 = a, Gk = {a, b | G(k-1)} for the first incomparable pair of atoms;
// checks passability and strict increase along the way.
std::vector<GameId> increasing_chain(Universe& u, int n);

} // namespace cgt
