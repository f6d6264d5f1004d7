#include "cgt/game.hpp"

#include <algorithm>


namespace cgt {

GameSet& normalize_set(GameSet& s) {
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    return s;
}

std::size_t Universe::hash_view(const TermView& v) {
    auto mix = [](std::uint64_t h, std::uint64_t x) {
        h ^= x + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
        h ^= h >> 31;
        h *= 0xbf58476d1ce4e5b9ull;
        return h;
    };
    std::uint64_t h = mix(static_cast<std::uint64_t>(v.atom) + 7, v.l.size() * 1315423911ull + v.r.size());
    for (GameId x : v.l) h = mix(h, static_cast<std::uint32_t>(x));
    for (GameId x : v.r) h = mix(h, ~static_cast<std::uint64_t>(static_cast<std::uint32_t>(x)));
    return static_cast<std::size_t>(h);
}

std::size_t Universe::TermHash::operator()(GameId g) const { return hash_view(u->view(g)); }
std::size_t Universe::TermHash::operator()(const TermView& v) const { return hash_view(v); }

bool Universe::TermEq::operator()(GameId a, const TermView& b) const {
    TermView va = u->view(a);
    return va.atom == b.atom && std::equal(va.l.begin(), va.l.end(), b.l.begin(), b.l.end()) &&
           std::equal(va.r.begin(), va.r.end(), b.r.begin(), b.r.end());
}

Universe::Universe(PosetPtr poset)
    : poset_(std::move(poset)), intern_(0, TermHash{this}, TermEq{this}) {
    if (!poset_) fail(ErrorKind::invalid_argument, "universe needs a poset");
    for (int a = 0; a < poset_->size(); ++a) atomic(a);
}

Universe::TermView Universe::view(GameId g) const {
    const Node& n = node(g);
    const GameId* base = pool_.data() + n.lbegin;
    return TermView{n.atom, std::span<const GameId>(base, n.lcount),
                    std::span<const GameId>(base + n.lcount, n.rcount)};
}

void Universe::check_id(GameId g) const {
    if (g < 0 || static_cast<std::size_t>(g) >= nodes_.size())
        fail(ErrorKind::invalid_argument, "game id " + std::to_string(g) + " does not belong to this universe");
}

std::span<const GameId> Universe::left(GameId g) const { return view(g).l; }
std::span<const GameId> Universe::right(GameId g) const { return view(g).r; }

GameSet Universe::left_set(GameId g) const {
    auto s = left(g);
    return GameSet(s.begin(), s.end());
}

GameSet Universe::right_set(GameId g) const {
    auto s = right(g);
    return GameSet(s.begin(), s.end());
}

GameId Universe::intern(std::int32_t atom, const GameSet& l, const GameSet& r) {
    TermView v{atom, std::span<const GameId>(l), std::span<const GameId>(r)};
    auto it = intern_.find(v);
    if (it != intern_.end()) return *it;
    Node n{};
    n.atom = atom;
    n.lbegin = static_cast<std::uint32_t>(pool_.size());
    n.lcount = static_cast<std::uint32_t>(l.size());
    n.rcount = static_cast<std::uint32_t>(r.size());
    int d = -1;
    for (GameId x : l) d = std::max(d, node(x).depth);
    for (GameId x : r) d = std::max(d, node(x).depth);
    n.depth = d + 1;
    pool_.insert(pool_.end(), l.begin(), l.end());
    pool_.insert(pool_.end(), r.begin(), r.end());
    GameId id = static_cast<GameId>(nodes_.size());
    nodes_.push_back(n);
    pred_.push_back(0);
    canon_.push_back(-1);
    intern_.insert(id);
    return id;
}

GameId Universe::atomic(int atom) {
    if (atom < 0 || atom >= poset_->size())
        fail(ErrorKind::invalid_argument, "atom index " + std::to_string(atom) + " not in poset " + poset_->name());
    if (static_cast<std::size_t>(atom) < nodes_.size() && nodes_[atom].atom == atom) return atom;
    static const GameSet empty;
    return intern(atom, empty, empty);
}

GameId Universe::atomic(const std::string& atom_name) { return atomic(poset_->index_of(atom_name)); }

GameId Universe::compose(GameSet l, GameSet r) {
    if (l.empty() || r.empty()) fail(ErrorKind::invalid_argument, "composite games need non-empty option sets");
    for (GameId x : l) check_id(x);
    for (GameId x : r) check_id(x);
    normalize_set(l);
    normalize_set(r);
    return intern(-1, l, r);
}

std::size_t Universe::dag_size(GameId g) const {
    std::vector<char> seen(nodes_.size(), 0);
    std::vector<GameId> stack{g};
    std::size_t count = 0;
    seen[g] = 1;
    while (!stack.empty()) {
        GameId x = stack.back();
        stack.pop_back();
        ++count;
        TermView v = view(x);
        for (auto side : {v.l, v.r})
            for (GameId y : side)
                if (!seen[y]) {
                    seen[y] = 1;
                    stack.push_back(y);
                }
    }
    return count;
}

GameId Universe::top() { return atomic(poset_->top_atom()); }
GameId Universe::bottom() { return atomic(poset_->bottom_atom()); }

bool Universe::leq(GameId g, GameId h) {
    check_id(g);
    check_id(h);
    return leq_raw(g, h);
}

bool Universe::tri(GameId g, GameId h) {
    check_id(g);
    check_id(h);
    return tri_raw(g, h);
}

bool Universe::leq_raw(GameId g, GameId h) {
    if (g == h) return true;
    const std::uint64_t key = pair_key(g, h);
    if (cache_on_) {
        auto it = rel_.find(key);
        if (it != rel_.end() && (it->second & kLeqKnown)) return it->second & kLeq;
    }
    bool result = true;
    const TermView vg = view(g), vh = view(h);
    if (vg.atom >= 0 || vh.atom >= 0) result = tri_raw(g, h);
    for (std::size_t i = 0; result && i < vg.l.size(); ++i) result = tri_raw(vg.l[i], h);
    for (std::size_t i = 0; result && i < vh.r.size(); ++i) result = tri_raw(g, vh.r[i]);
    if (cache_on_) rel_[key] |= static_cast<std::uint8_t>(kLeqKnown | (result ? kLeq : 0));
    return result;
}

bool Universe::tri_raw(GameId g, GameId h) {
    const std::uint64_t key = pair_key(g, h);
    if (cache_on_) {
        auto it = rel_.find(key);
        if (it != rel_.end() && (it->second & kTriKnown)) return it->second & kTri;
    }
    bool result = false;
    const TermView vg = view(g), vh = view(h);
    if (vg.atom >= 0 && vh.atom >= 0) result = poset_->leq(vg.atom, vh.atom);
    for (std::size_t i = 0; !result && i < vg.r.size(); ++i) result = leq_raw(vg.r[i], h);
    for (std::size_t i = 0; !result && i < vh.l.size(); ++i) result = leq_raw(g, vh.l[i]);
    if (cache_on_) rel_[key] |= static_cast<std::uint8_t>(kTriKnown | (result ? kTri : 0));
    return result;
}

GameId Universe::lift_atomic(GameId g) {
    if (!is_atomic(g)) return g;
    return compose({g}, {g});
}

GameId Universe::join(GameSet games) {
    if (!poset_->has_bottom()) fail(ErrorKind::unsupported_poset, "join needs a poset with a bottom");
    if (games.empty()) return bottom();
    GameSet lifted, lefts;
    for (GameId g : games) {
        check_id(g);
        GameId c = lift_atomic(g);
        lifted.push_back(c);
        for (GameId x : left(c)) lefts.push_back(x);
    }
    GameId inner = compose(lifted, {bottom()});
    return compose(lefts, {inner});
}

GameId Universe::meet(GameSet games) {
    if (!poset_->has_top()) fail(ErrorKind::unsupported_poset, "meet needs a poset with a top");
    if (games.empty()) return top();
    GameSet lifted, rights;
    for (GameId g : games) {
        check_id(g);
        GameId c = lift_atomic(g);
        lifted.push_back(c);
        for (GameId x : right(c)) rights.push_back(x);
    }
    GameId inner = compose({top()}, lifted);
    return compose({inner}, rights);
}

bool Universe::is_passable(GameId g) {
    check_id(g);
    if (cache_on_ && (pred_[g] & kPassKnown)) return pred_[g] & kPass;
    bool result = tri_raw(g, g);
    GameSet opts = left_set(g);
    GameSet r = right_set(g);
    opts.insert(opts.end(), r.begin(), r.end());
    for (std::size_t i = 0; result && i < opts.size(); ++i) result = is_passable(opts[i]);
    if (cache_on_) pred_[g] |= static_cast<std::uint8_t>(kPassKnown | (result ? kPass : 0));
    return result;
}

bool Universe::is_monotone(GameId g) {
    check_id(g);
    if (cache_on_ && (pred_[g] & kMonoKnown)) return pred_[g] & kMono;
    bool result = true;
    GameSet l = left_set(g), r = right_set(g);
    for (std::size_t i = 0; result && i < l.size(); ++i) result = leq_raw(g, l[i]) && is_monotone(l[i]);
    for (std::size_t i = 0; result && i < r.size(); ++i) result = leq_raw(r[i], g) && is_monotone(r[i]);
    if (cache_on_) pred_[g] |= static_cast<std::uint8_t>(kMonoKnown | (result ? kMono : 0));
    return result;
}

bool Universe::is_semi_monotone(GameId g) {
    check_id(g);
    if (cache_on_ && (pred_[g] & kSemiKnown)) return pred_[g] & kSemi;
    bool result = true;
    if (!is_atomic(g)) {
        GameSet l = left_set(g), r = right_set(g);
        bool good_l = false, good_r = false;
        for (GameId x : l) good_l = good_l || leq_raw(g, x);
        for (GameId x : r) good_r = good_r || leq_raw(x, g);
        result = good_l && good_r;
        for (std::size_t i = 0; result && i < l.size(); ++i) result = is_semi_monotone(l[i]);
        for (std::size_t i = 0; result && i < r.size(); ++i) result = is_semi_monotone(r[i]);
    }
    if (cache_on_) pred_[g] |= static_cast<std::uint8_t>(kSemiKnown | (result ? kSemi : 0));
    return result;
}

bool Universe::passable_atom_bound(GameId g, int atom) {
    check_id(g);
    if (is_atomic(g) || !is_passable(g))
        fail(ErrorKind::precondition, "passable_atom_bound needs a passable composite game");
    GameId a = atomic(atom);
    bool all_below = true;
    for (GameId x : left_set(g)) all_below = all_below && leq_raw(x, a);
    bool result = leq_raw(g, a);
    if (all_below && !result)
        fail(ErrorKind::internal_consistency, "left options bounded by an atom but the game is not");
    return result;
}

LinearWitness Universe::linear_totality(GameId g, GameId h) {
    check_id(g);
    check_id(h);
    if (!poset_->is_linear()) fail(ErrorKind::precondition, "linear_totality needs a linearly ordered poset");
    if (!is_passable(g) || !is_passable(h)) fail(ErrorKind::precondition, "linear_totality needs passable games");
    LinearWitness w{tri_raw(g, h), leq_raw(h, g)};
    if (!w.g_tri_h && !w.h_leq_g)
        fail(ErrorKind::internal_consistency, "neither G tri H nor H <= G holds for passable games");
    return w;
}

GameId Universe::cached_canonical(GameId g) const {
    if (!cache_on_) return -1;
    return canon_[static_cast<std::size_t>(g)];
}

void Universe::store_canonical(GameId g, GameId c) {
    if (cache_on_) canon_[static_cast<std::size_t>(g)] = c;
}

void Universe::set_cache_enabled(bool on) {
    cache_on_ = on;
    if (!on) clear_caches();
}

void Universe::clear_caches() {
    rel_.clear();
    std::fill(pred_.begin(), pred_.end(), 0);
    std::fill(canon_.begin(), canon_.end(), -1);
}

Universe& World::universe(const PosetPtr& poset) {
    auto& bucket = by_hash_[poset->content_hash()];
    for (auto& u : bucket)
        if (u->poset().same_as(*poset)) return *u;
    bucket.push_back(std::make_unique<Universe>(poset));
    return *bucket.back();
}

Universe& World::universe_of(const Poset& poset) {
    auto it = by_hash_.find(poset.content_hash());
    if (it != by_hash_.end())
        for (auto& u : it->second)
            if (u->poset().same_as(poset)) return *u;
    fail(ErrorKind::invalid_argument, "no universe registered for poset " + poset.name());
}

} // namespace cgt
