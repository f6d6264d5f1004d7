#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cgt/error.hpp"

namespace cgt {

// A finite partially ordered set of named atoms. The order is stored as a
// dense bit matrix after transitive closure. Instances are immutable once
// built and are shared through PosetPtr.
class Poset {
public:
    // Builds a poset from atom names and a list of (lower, upper) pairs whose
    // reflexive-transitive closure is the order. Throws invalid_argument when
    // the closure is not antisymmetric or a name is malformed.
    static std::shared_ptr<const Poset> from_relation(std::string name, std::vector<std::string> atoms,
                                                      const std::vector<std::pair<int, int>>& pairs);

    const std::string& name() const { return name_; }
    int size() const { return static_cast<int>(atoms_.size()); }
    const std::vector<std::string>& atoms() const { return atoms_; }
    const std::string& atom_name(int a) const { return atoms_.at(a); }
    // Index of the named atom, or -1.
    int find(const std::string& atom) const;
    int index_of(const std::string& atom) const;

    bool leq(int a, int b) const { return (rows_[a * words_ + (b >> 6)] >> (b & 63)) & 1u; }
    bool less(int a, int b) const { return a != b && leq(a, b); }
    bool comparable(int a, int b) const { return leq(a, b) || leq(b, a); }

    std::optional<int> top() const { return top_; }
    std::optional<int> bottom() const { return bottom_; }
    bool has_top() const { return top_.has_value(); }
    bool has_bottom() const { return bottom_.has_value(); }
    int top_atom() const;
    int bottom_atom() const;
    bool is_linear() const;

    // Covering pairs (a, b): a < b with nothing strictly between.
    std::vector<std::pair<int, int>> hasse() const;

    // Content hash over names and order; equal posets have equal hashes.
    std::uint64_t content_hash() const { return hash_; }
    bool same_as(const Poset& other) const;

    // Text form: "poset <name>", "atoms: ...", one "cover: x < y" per cover.
    std::string to_text() const;

private:
    Poset() = default;

    std::string name_;
    std::vector<std::string> atoms_;
    std::vector<std::uint64_t> rows_;
    int words_ = 0;
    std::optional<int> top_;
    std::optional<int> bottom_;
    std::uint64_t hash_ = 0;
};

using PosetPtr = std::shared_ptr<const Poset>;

// Atom names may not contain grammar metacharacters or whitespace. Commas are
// tolerated only inside balanced parentheses so that product atoms "(x,y)"
// survive a round trip through the game grammar.
bool valid_atom_name(const std::string& s);

PosetPtr linear_poset(int n);
PosetPtr antichain_poset(int k);
PosetPtr non_crossing_poset(int n);
PosetPtr product_poset(const PosetPtr& a, const PosetPtr& b);
PosetPtr opposite_poset(const PosetPtr& a);

// Index of the product atom (x, y) inside product_poset(a, b).
inline int product_index(int x, int y, int size_b) { return x * size_b + y; }

// Parses the line-oriented poset format; errors are reported as parse errors.
PosetPtr parse_poset(const std::string& text);
PosetPtr load_poset(const std::string& path);

// Non-crossing partitions of 1..n. A partition is stored as a block label per
// terminal, labels numbered in order of first appearance.
using Partition = std::vector<int>;
std::vector<Partition> non_crossing_partitions(int n);
bool is_non_crossing(const Partition& p);
Partition normalize_partition(const std::vector<int>& labels);
std::string partition_name(const Partition& p);
// Index of a partition inside non_crossing_poset(n), or -1 when it crosses.
int non_crossing_index(const Partition& p);

long long catalan(int n);

// A total atom map between two posets.
struct MonotoneMap {
    PosetPtr source;
    PosetPtr target;
    std::vector<int> table;

    int operator()(int a) const { return table[a]; }
};

// True iff the map preserves the order. Throws invalid_argument when the
// table is not total or points outside the target.
bool monotone_map_check(const PosetPtr& source, const PosetPtr& target, const std::vector<int>& table);
MonotoneMap make_monotone_map(PosetPtr source, PosetPtr target, std::vector<int> table);
MonotoneMap identity_map(const PosetPtr& p);
MonotoneMap compose_maps(const MonotoneMap& g, const MonotoneMap& f);

// Map file lines: "map: a b -> c" for binary maps on a product poset.
MonotoneMap parse_binary_map(const std::string& text, const PosetPtr& a, const PosetPtr& b, const PosetPtr& target);

} // namespace cgt
