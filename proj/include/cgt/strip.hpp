#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "cgt/algebra.hpp"
#include "cgt/game.hpp"
#include "cgt/hex_region.hpp"
#include "cgt/poset.hpp"

namespace cgt {

// Order on open outcomes. refinement: o <= o' when the connectivity of the
// cells right of the frontier in o (which of them reach the left edge and
// which are joined) refines that of o'. simulation: o <= o' when every
// continuation Black wins from o is also won from o'. The second is the full
// semantic order and can relate more outcomes than the first.
enum class OpenOrder { refinement, simulation };

// Outcome automaton of open regions of height k (left edge Black's, top and
// bottom edges White's, right side open). Column letters are numbered with
// cell 1 (the top cell) as the most significant bit.
struct OpenAutomaton {
    int k = 0;
    OpenOrder order = OpenOrder::refinement;
    PosetPtr outcomes;            // minimized frontier classes, bottom first, top last
    PosetPtr columns;             // k0 .. k(2^k - 1), ordered pointwise White < Black
    MonotoneMap transfer;         // outcomes x columns -> outcomes
    MonotoneMap closing;          // outcomes -> Bool: does Black win once the right edge is added
    int start = 0;                // outcome of the width-0 region
    std::size_t frontier_states = 0;  // reachable states before minimization

    int step(int outcome, int column) const { return transfer(product_index(outcome, column, columns->size())); }
    // Outcome reached from the width-0 region by a word of columns.
    int run(const std::vector<int>& word) const;
};

// Builds (and caches) the automaton; 1 <= k <= 5.
const OpenAutomaton& build_outcome_poset(int k, OpenOrder order = OpenOrder::refinement);

// Column index from a string of k letters 'B'/'W', top cell first.
int column_index(const std::string& word);

// A k x n position: stones per cell, indexed by row r in 1..k (top to
// bottom) and column c in 1..n (left to right).
struct StripPosition {
    int k = 0;
    int width = 0;
    std::vector<Stone> cells;

    StripPosition() = default;
    StripPosition(int k_, int width_) : k(k_), width(width_), cells(static_cast<std::size_t>(k_) * width_, Stone::empty) {}
    Stone at(int r, int c) const { return cells[static_cast<std::size_t>(c - 1) * k + (r - 1)]; }
    void set(int r, int c, Stone s);
};

// Lines "height k", "width n", "black (r,c) ...", "white (r,c) ...".
StripPosition parse_strip_position(const std::string& text);

struct PatternTriple {
    GameId value = -1;
    int stones = 0;
    int width = 0;
    std::vector<std::pair<int, int>> black;  // (row, column), sorted row-major
};

struct PeriodResult {
    bool found = false;
    int p = 0;     // width period
    int q = 0;     // stone shift per period
    int base = 0;  // first width from which the shift holds
    int widths_checked = 0;
};

// Best-pattern label fixtures: "label stones width : (r,c) (r,c) ...".
struct PatternFixture {
    std::string label;
    int stones = 0;
    int width = 0;
    std::vector<std::pair<int, int>> black;
};
std::vector<PatternFixture> parse_pattern_fixtures(const std::string& text);

struct CertificateCase {
    int value_index = 0;  // 1..28 for G1..G28, 29 for T
    int column = 0;
    int lhs = 0;          // ben(V + C)
    int rhs = 0;          // ben(V) + cost(C)
    bool ok = true;
};

struct CertificateReport {
    bool ok = true;
    int step_cases = 0;
    int step_failures = 0;
    std::uint64_t base_cases = 0;
    std::uint64_t base_failures = 0;
    int cost_checks = 0;
    int benefit_checks = 0;
    std::vector<CertificateCase> steps;
    std::vector<std::string> failures;
};

// Benefit tiers of the height-4 certificate: tier i holds the indices j of
// the values G_j whose down-closure receives benefit i.
const std::vector<std::vector<int>>& benefit_tiers();
constexpr int kBenefitUnacceptable = -1000;

// Column-wise evaluation engine for one height. Holds the relation memos so
// that repeated evaluations share work. Not thread-safe.
class StripSolver {
public:
    StripSolver(World& w, int k, OpenOrder order = OpenOrder::refinement);

    int k() const { return k_; }
    const OpenAutomaton& automaton() const { return *a_; }
    Universe& outcomes() { return *out_; }
    Universe& columns() { return *col_; }

    // Value over the column poset of one column with the given black and
    // white cells (bit masks, top cell most significant); other cells empty.
    GameId column_value(std::uint32_t black, std::uint32_t white);
    // value + column, canonicalized when asked.
    GameId extend(GameId value, GameId column, bool canonicalize = true);
    GameId start_value();
    GameId value(const StripPosition& p, bool canonicalize_each = true);

    bool unacceptable(GameId v) { return out_->tri(v, out_->bottom()); }
    // Mapped through the closing function, the value is equivalent to top.
    bool virtual_connection(GameId v);

    // Best-pattern frontiers for widths 0..n (index = width).
    const std::vector<std::vector<PatternTriple>>& frontiers(int n, std::uint64_t budget_nodes = 0);

    int min_stones_direct(int n, std::uint64_t budget_nodes = 0);
    PeriodResult detect_period(int max_width, std::uint64_t budget_nodes = 0);

    // ben(v) for the height-4 certificate, given the named values G1..G28.
    int benefit(GameId v, const std::vector<GameId>& named);

private:
    World& w_;
    int k_;
    const OpenAutomaton* a_;
    Universe* out_;
    Universe* col_;
    Universe* bool_;
    SumMapMemo sum_memo_;
    absl::flat_hash_map<std::uint64_t, GameId> column_memo_;
    absl::flat_hash_map<GameId, GameId> closing_memo_;
    std::vector<std::vector<PatternTriple>> frontier_;
};

// The operations below build a fresh solver per call.
GameId strip_value(World& w, const StripPosition& p);
std::vector<PatternTriple> best_patterns(World& w, int k, int n, std::uint64_t budget_nodes = 0);
PeriodResult detect_period(World& w, int k, int max_width = 0);
// Minimum number of black stones in a virtual connection of a k x n board.
// Widths beyond the directly computed range are answered from the period.
int min_connecting_stones(World& w, int k, int n);

// Values G1..G28 (index 1..28) and T (index 29) from the best-pattern
// fixtures; index 0 is unused. Throws property_violation when two fixtures
// with one label disagree.
std::vector<GameId> certificate_values(StripSolver& s, const std::vector<PatternFixture>& fixtures);
CertificateReport verify_certificate(StripSolver& s, const std::vector<GameId>& named, bool base_case = true);

inline int pattern_cost(int stones, int width) { return 6 + 3 * stones - 2 * width; }
inline int column_cost(int stones) { return 3 * stones - 2; }

} // namespace cgt
