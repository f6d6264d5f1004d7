#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <absl/container/flat_hash_map.h>
#include <absl/container/flat_hash_set.h>

#include "cgt/poset.hpp"

namespace cgt {

// Dense handle of an interned game inside one Universe. Options always have
// smaller ids than the games that reference them.
using GameId = std::int32_t;
using GameSet = std::vector<GameId>;

// Sorts and removes duplicates in place; returns the argument for chaining.
GameSet& normalize_set(GameSet& s);

// Which disjuncts of the linear totality statement hold for (G, H).
struct LinearWitness {
    bool g_tri_h = false;
    bool h_leq_g = false;
};

// Hash-consed store of games over one poset together with the memo tables for
// the order relations and the structural predicates. A Universe is not safe
// for concurrent mutation; callers serialize access.
class Universe {
public:
    explicit Universe(PosetPtr poset);
    Universe(const Universe&) = delete;
    Universe& operator=(const Universe&) = delete;

    const Poset& poset() const { return *poset_; }
    const PosetPtr& poset_ptr() const { return poset_; }
    std::size_t num_games() const { return nodes_.size(); }

    GameId atomic(int atom);
    GameId atomic(const std::string& atom_name);
    // Interns {left | right}. Both sets must be non-empty; they are sorted and
    // deduplicated here.
    GameId compose(GameSet left, GameSet right);

    bool is_atomic(GameId g) const { return node(g).atom >= 0; }
    int atom_of(GameId g) const { return node(g).atom; }
    // Option views stay valid only until the next call that creates a game.
    std::span<const GameId> left(GameId g) const;
    std::span<const GameId> right(GameId g) const;
    GameSet left_set(GameId g) const;
    GameSet right_set(GameId g) const;
    int depth(GameId g) const { return node(g).depth; }
    // Number of distinct positions reachable from g, g included.
    std::size_t dag_size(GameId g) const;

    GameId top();
    GameId bottom();

    bool leq(GameId g, GameId h);
    bool tri(GameId g, GameId h);
    bool equivalent(GameId g, GameId h) { return leq(g, h) && leq(h, g); }

    GameId join(GameSet games);
    GameId meet(GameSet games);

    bool is_locally_passable(GameId g) { return tri(g, g); }
    bool is_passable(GameId g);
    bool is_monotone(GameId g);
    bool is_semi_monotone(GameId g);
    bool is_good_left(GameId g, GameId option) { return leq(g, option); }
    bool is_good_right(GameId g, GameId option) { return leq(option, g); }

    bool passable_atom_bound(GameId g, int atom);
    LinearWitness linear_totality(GameId g, GameId h);

    // Canonical form memo, filled by the canonical module.
    GameId cached_canonical(GameId g) const;
    void store_canonical(GameId g, GameId c);

    void set_cache_enabled(bool on);
    bool cache_enabled() const { return cache_on_; }
    void clear_caches();
    std::size_t relation_cache_size() const { return rel_.size(); }

private:
    struct Node {
        std::int32_t atom;
        std::uint32_t lbegin;
        std::uint32_t lcount;
        std::uint32_t rcount;
        std::int32_t depth;
    };
    struct TermView {
        std::int32_t atom;
        std::span<const GameId> l;
        std::span<const GameId> r;
    };
    struct TermHash {
        using is_transparent = void;
        const Universe* u;
        std::size_t operator()(GameId g) const;
        std::size_t operator()(const TermView& v) const;
    };
    struct TermEq {
        using is_transparent = void;
        const Universe* u;
        bool operator()(GameId a, GameId b) const { return a == b; }
        bool operator()(GameId a, const TermView& b) const;
        bool operator()(const TermView& a, GameId b) const { return (*this)(b, a); }
    };

    const Node& node(GameId g) const { return nodes_[static_cast<std::size_t>(g)]; }
    TermView view(GameId g) const;
    static std::size_t hash_view(const TermView& v);
    GameId intern(std::int32_t atom, const GameSet& l, const GameSet& r);
    void check_id(GameId g) const;

    enum : std::uint8_t { kLeqKnown = 1, kLeq = 2, kTriKnown = 4, kTri = 8 };
    enum : std::uint8_t {
        kPassKnown = 1, kPass = 2, kMonoKnown = 4, kMono = 8, kSemiKnown = 16, kSemi = 32
    };
    static std::uint64_t pair_key(GameId g, GameId h) {
        return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(g)) << 32) | static_cast<std::uint32_t>(h);
    }
    bool leq_raw(GameId g, GameId h);
    bool tri_raw(GameId g, GameId h);
    GameId lift_atomic(GameId g);

    PosetPtr poset_;
    std::vector<Node> nodes_;
    std::vector<GameId> pool_;
    absl::flat_hash_set<GameId, TermHash, TermEq> intern_;
    absl::flat_hash_map<std::uint64_t, std::uint8_t> rel_;
    std::vector<std::uint8_t> pred_;
    std::vector<GameId> canon_;
    bool cache_on_ = true;
};

// Game text grammar: expr := ATOM | '{' expr (',' expr)* '|' expr (',' expr)* '}'.
// Atom tokens run up to a metacharacter or whitespace; a balanced
// parenthesised group is read as part of the token so "(a,b)" is one atom.
GameId parse_game(Universe& u, std::string_view text);
// Prints with options ordered by a structural key (depth, then text), so the
// output is independent of interning order.
std::string print_game(const Universe& u, GameId g);

// Registry of universes keyed by poset content, used by operations that move
// games between posets (sum, opposite, map).
class World {
public:
    Universe& universe(const PosetPtr& poset);
    Universe& universe_of(const Poset& poset);

private:
    absl::flat_hash_map<std::uint64_t, std::vector<std::unique_ptr<Universe>>> by_hash_;
};

} // namespace cgt
