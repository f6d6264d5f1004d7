#include "cgt/canonical.hpp"

#include <algorithm>

namespace cgt {

namespace {

// Removes dominated options from one side. Ties between equivalent options
// keep the later one in id order so exactly one survives.
GameSet undominated(Universe& u, const GameSet& opts, Side side, std::vector<GameId>* removed) {
    std::vector<char> gone(opts.size(), 0);
    for (std::size_t i = 0; i < opts.size(); ++i) {
        for (std::size_t j = 0; j < opts.size(); ++j) {
            if (i == j || gone[j]) continue;
            bool dominated = side == Side::left ? u.leq(opts[i], opts[j]) : u.leq(opts[j], opts[i]);
            if (dominated) {
                gone[i] = 1;
                if (removed) removed->push_back(opts[i]);
                break;
            }
        }
    }
    GameSet out;
    for (std::size_t i = 0; i < opts.size(); ++i)
        if (!gone[i]) out.push_back(opts[i]);
    return out;
}

struct Bypass {
    bool found = false;
    Side side = Side::left;
    GameId option = -1;
    GameId via = -1;
    bool atomic_via = false;
};

// Finds the first reversible option of cur = {l | r}, left side first.
Bypass find_reversible(Universe& u, GameId cur, const GameSet& l, const GameSet& r) {
    for (GameId h : l) {
        if (u.is_atomic(h)) continue;
        for (GameId k : u.right_set(h))
            if (u.leq(k, cur)) return {true, Side::left, h, k, u.is_atomic(k)};
    }
    for (GameId h : r) {
        if (u.is_atomic(h)) continue;
        for (GameId k : u.left_set(h))
            if (u.leq(cur, k)) return {true, Side::right, h, k, u.is_atomic(k)};
    }
    return {};
}

void apply_bypass(Universe& u, const Bypass& b, GameSet& l, GameSet& r) {
    GameSet& side = b.side == Side::left ? l : r;
    side.erase(std::find(side.begin(), side.end(), b.option));
    if (b.atomic_via) {
        side.push_back(b.via);
    } else {
        GameSet repl = b.side == Side::left ? u.left_set(b.via) : u.right_set(b.via);
        side.insert(side.end(), repl.begin(), repl.end());
    }
    normalize_set(side);
}

GameId passing_option(Universe& u, GameId cur, const GameSet& l, const GameSet& r) {
    for (GameId h : l)
        if (u.equivalent(h, cur)) return h;
    for (GameId h : r)
        if (u.equivalent(h, cur)) return h;
    return -1;
}

} // namespace

GameId canonical_form(Universe& u, GameId g, SimplificationTrace* trace) {
    if (u.is_atomic(g)) return g;
    if (!trace) {
        GameId c = u.cached_canonical(g);
        if (c >= 0) return c;
    }
    GameSet l = u.left_set(g), r = u.right_set(g);
    for (GameId& x : l) x = canonical_form(u, x, trace);
    for (GameId& x : r) x = canonical_form(u, x, trace);
    normalize_set(l);
    normalize_set(r);
    GameId cur = u.compose(l, r);
    GameId result = -1;
    while (true) {
        GameId h = passing_option(u, cur, l, r);
        if (h >= 0) {
            bool left_side = std::binary_search(l.begin(), l.end(), h);
            if (trace)
                trace->push_back({StepKind::simplified_passing, left_side ? Side::left : Side::right, cur, h, -1,
                                  false, h});
            result = h;
            break;
        }
        std::vector<GameId> removed_l, removed_r;
        GameSet nl = undominated(u, l, Side::left, &removed_l);
        GameSet nr = undominated(u, r, Side::right, &removed_r);
        if (!removed_l.empty() || !removed_r.empty()) {
            if (trace) {
                GameSet tl = l, tr = r;
                for (GameId x : removed_l) {
                    GameId before = u.compose(tl, tr);
                    tl.erase(std::find(tl.begin(), tl.end(), x));
                    trace->push_back({StepKind::removed_dominated, Side::left, before, x, -1, false, u.compose(tl, tr)});
                }
                for (GameId x : removed_r) {
                    GameId before = u.compose(tl, tr);
                    tr.erase(std::find(tr.begin(), tr.end(), x));
                    trace->push_back({StepKind::removed_dominated, Side::right, before, x, -1, false, u.compose(tl, tr)});
                }
            }
            l = std::move(nl);
            r = std::move(nr);
            cur = u.compose(l, r);
            continue;
        }
        Bypass b = find_reversible(u, cur, l, r);
        if (!b.found) {
            result = cur;
            break;
        }
        apply_bypass(u, b, l, r);
        GameId next = u.compose(l, r);
        if (trace) trace->push_back({StepKind::bypassed_reversible, b.side, cur, b.option, b.via, b.atomic_via, next});
        cur = next;
    }
    u.store_canonical(g, result);
    u.store_canonical(cur, result);
    u.store_canonical(result, result);
    return result;
}

GameId remove_dominated(Universe& u, GameId g) {
    if (u.is_atomic(g)) fail(ErrorKind::precondition, "remove_dominated needs a composite game");
    GameSet l = undominated(u, u.left_set(g), Side::left, nullptr);
    GameSet r = undominated(u, u.right_set(g), Side::right, nullptr);
    return u.compose(l, r);
}

GameId bypass_reversible(Universe& u, GameId g) {
    if (u.is_atomic(g)) fail(ErrorKind::precondition, "bypass_reversible needs a composite game");
    GameSet l = u.left_set(g), r = u.right_set(g);
    GameId cur = g;
    while (true) {
        Bypass b = find_reversible(u, cur, l, r);
        if (!b.found) return cur;
        apply_bypass(u, b, l, r);
        cur = u.compose(l, r);
    }
}

GameId simplify_passing(Universe& u, GameId g) {
    if (u.is_atomic(g)) fail(ErrorKind::precondition, "simplify_passing needs a composite game");
    GameId h = passing_option(u, g, u.left_set(g), u.right_set(g));
    return h >= 0 ? canonical_form(u, h) : g;
}

bool is_canonical(Universe& u, GameId g) {
    if (u.is_atomic(g)) return true;
    GameSet l = u.left_set(g), r = u.right_set(g);
    for (GameId x : l)
        if (!is_canonical(u, x)) return false;
    for (GameId x : r)
        if (!is_canonical(u, x)) return false;
    if (passing_option(u, g, l, r) >= 0) return false;
    std::vector<GameId> removed;
    undominated(u, l, Side::left, &removed);
    undominated(u, r, Side::right, &removed);
    if (!removed.empty()) return false;
    return !find_reversible(u, g, l, r).found;
}

bool assert_unique(Universe& u, GameId g, GameId h) {
    bool eq = u.equivalent(g, h);
    GameId cg = canonical_form(u, g), ch = canonical_form(u, h);
    if (eq != (cg == ch))
        fail(ErrorKind::internal_consistency,
             "canonical form uniqueness violated for " + print_game(u, g) + " and " + print_game(u, h));
    return eq;
}

GameId replay_step(Universe& u, const TraceStep& s) {
    GameSet l = u.left_set(s.before), r = u.right_set(s.before);
    switch (s.kind) {
    case StepKind::simplified_passing:
        if (!u.equivalent(s.option, s.before)) fail(ErrorKind::internal_consistency, "recorded option is not passing");
        return s.option;
    case StepKind::removed_dominated: {
        GameSet& side = s.side == Side::left ? l : r;
        auto it = std::find(side.begin(), side.end(), s.option);
        if (it == side.end()) fail(ErrorKind::internal_consistency, "recorded option not present");
        side.erase(it);
        return u.compose(l, r);
    }
    case StepKind::bypassed_reversible: {
        Bypass b{true, s.side, s.option, s.via, s.atomic_via};
        apply_bypass(u, b, l, r);
        return u.compose(l, r);
    }
    }
    return -1;
}

std::string format_step(const Universe& u, const TraceStep& s) {
    const char* side = s.side == Side::left ? "left" : "right";
    switch (s.kind) {
    case StepKind::simplified_passing:
        return "passing " + std::string(side) + " option " + print_game(u, s.option) + " in " +
               print_game(u, s.before);
    case StepKind::removed_dominated:
        return "dominated " + std::string(side) + " option " + print_game(u, s.option) + " removed from " +
               print_game(u, s.before) + " -> " + print_game(u, s.after);
    case StepKind::bypassed_reversible:
        return "reversible " + std::string(side) + " option " + print_game(u, s.option) + " bypassed via " +
               print_game(u, s.via) + (s.atomic_via ? " (atomic)" : "") + " in " + print_game(u, s.before) +
               " -> " + print_game(u, s.after);
    }
    return {};
}

} // namespace cgt
