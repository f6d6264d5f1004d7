#include "cgt/poset.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>

namespace cgt {

const char* error_kind_name(ErrorKind kind) {
    switch (kind) {
    case ErrorKind::invalid_argument: return "invalid-argument";
    case ErrorKind::parse: return "parse-error";
    case ErrorKind::precondition: return "precondition-error";
    case ErrorKind::unsupported_poset: return "unsupported-poset";
    case ErrorKind::size_limit: return "size-limit";
    case ErrorKind::resource_limit: return "resource-limit";
    case ErrorKind::invalid_region: return "invalid-region";
    case ErrorKind::property_violation: return "property-violation";
    case ErrorKind::internal_consistency: return "internal-consistency";
    }
    return "error";
}

namespace {

std::uint64_t fnv(std::uint64_t h, const void* data, std::size_t n) {
    auto p = static_cast<const unsigned char*>(data);
    for (std::size_t i = 0; i < n; ++i) {
        h ^= p[i];
        h *= 1099511628211ull;
    }
    return h;
}

std::string middle_name(int i) {
    if (i < 24) return std::string(1, static_cast<char>('a' + i));
    return "m" + std::to_string(i + 1);
}

} // namespace

bool valid_atom_name(const std::string& s) {
    if (s.empty()) return false;
    int depth = 0;
    for (char ch : s) {
        if (ch == '{' || ch == '}' || ch == '|' || ch == '#') return false;
        if (ch == ' ' || ch == '\t' || ch == '\n' || ch == '\r') return false;
        if (ch == '(') ++depth;
        if (ch == ')') {
            if (--depth < 0) return false;
        }
        if (ch == ',' && depth == 0) return false;
    }
    return depth == 0;
}

std::shared_ptr<const Poset> Poset::from_relation(std::string name, std::vector<std::string> atoms,
                                                  const std::vector<std::pair<int, int>>& pairs) {
    std::shared_ptr<Poset> p(new Poset());
    const int n = static_cast<int>(atoms.size());
    if (n == 0) fail(ErrorKind::invalid_argument, "poset must have at least one atom");
    std::map<std::string, int> seen;
    for (int i = 0; i < n; ++i) {
        if (!valid_atom_name(atoms[i])) fail(ErrorKind::invalid_argument, "invalid atom name '" + atoms[i] + "'");
        if (!seen.emplace(atoms[i], i).second) fail(ErrorKind::invalid_argument, "duplicate atom '" + atoms[i] + "'");
    }
    p->name_ = std::move(name);
    p->atoms_ = std::move(atoms);
    p->words_ = (n + 63) / 64;
    p->rows_.assign(static_cast<std::size_t>(n) * p->words_, 0);
    auto set = [&](int a, int b) { p->rows_[a * p->words_ + (b >> 6)] |= (1ull << (b & 63)); };
    for (int i = 0; i < n; ++i) set(i, i);
    for (auto [a, b] : pairs) {
        if (a < 0 || a >= n || b < 0 || b >= n) fail(ErrorKind::invalid_argument, "relation pair out of range");
        set(a, b);
    }
    // Transitive closure, Warshall style on bit rows.
    for (int k = 0; k < n; ++k) {
        const std::uint64_t* rk = &p->rows_[k * p->words_];
        for (int i = 0; i < n; ++i) {
            if (p->leq(i, k)) {
                std::uint64_t* ri = &p->rows_[i * p->words_];
                for (int w = 0; w < p->words_; ++w) ri[w] |= rk[w];
            }
        }
    }
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (p->leq(i, j) && p->leq(j, i))
                fail(ErrorKind::invalid_argument,
                     "order is not antisymmetric: " + p->atoms_[i] + " and " + p->atoms_[j] + " are equivalent");
    for (int t = 0; t < n; ++t) {
        bool is_top = true, is_bottom = true;
        for (int a = 0; a < n; ++a) {
            is_top = is_top && p->leq(a, t);
            is_bottom = is_bottom && p->leq(t, a);
        }
        if (is_top) p->top_ = t;
        if (is_bottom) p->bottom_ = t;
    }
    std::uint64_t h = 1469598103934665603ull;
    for (const auto& a : p->atoms_) {
        h = fnv(h, a.data(), a.size());
        h = fnv(h, "\0", 1);
    }
    h = fnv(h, p->rows_.data(), p->rows_.size() * sizeof(std::uint64_t));
    p->hash_ = h;
    return p;
}

int Poset::find(const std::string& atom) const {
    for (int i = 0; i < size(); ++i)
        if (atoms_[i] == atom) return i;
    return -1;
}

int Poset::index_of(const std::string& atom) const {
    int i = find(atom);
    if (i < 0) fail(ErrorKind::invalid_argument, "unknown atom '" + atom + "' in poset " + name_);
    return i;
}

int Poset::top_atom() const {
    if (!top_) fail(ErrorKind::unsupported_poset, "poset " + name_ + " has no top");
    return *top_;
}

int Poset::bottom_atom() const {
    if (!bottom_) fail(ErrorKind::unsupported_poset, "poset " + name_ + " has no bottom");
    return *bottom_;
}

bool Poset::is_linear() const {
    for (int a = 0; a < size(); ++a)
        for (int b = 0; b < size(); ++b)
            if (!comparable(a, b)) return false;
    return true;
}

std::vector<std::pair<int, int>> Poset::hasse() const {
    std::vector<std::pair<int, int>> out;
    for (int a = 0; a < size(); ++a)
        for (int b = 0; b < size(); ++b) {
            if (!less(a, b)) continue;
            bool cover = true;
            for (int c = 0; c < size() && cover; ++c)
                if (less(a, c) && less(c, b)) cover = false;
            if (cover) out.emplace_back(a, b);
        }
    return out;
}

bool Poset::same_as(const Poset& other) const {
    return hash_ == other.hash_ && atoms_ == other.atoms_ && rows_ == other.rows_;
}

std::string Poset::to_text() const {
    std::ostringstream os;
    os << "poset " << name_ << "\n";
    os << "atoms:";
    for (const auto& a : atoms_) os << " " << a;
    os << "\n";
    for (auto [a, b] : hasse()) os << "cover: " << atoms_[a] << " < " << atoms_[b] << "\n";
    return os.str();
}

PosetPtr linear_poset(int n) {
    if (n < 1) fail(ErrorKind::invalid_argument, "linear_poset needs n >= 1");
    std::vector<std::string> names;
    names.push_back("B");
    for (int i = 1; i + 1 < n; ++i) names.push_back(middle_name(i - 1));
    if (n >= 2) names.push_back("T");
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i + 1 < n; ++i) pairs.emplace_back(i, i + 1);
    return Poset::from_relation("Lin" + std::to_string(n), names, pairs);
}

PosetPtr antichain_poset(int k) {
    if (k < 1) fail(ErrorKind::invalid_argument, "antichain_poset needs k >= 1");
    std::vector<std::string> names{"B"};
    for (int i = 0; i < k; ++i) names.push_back(middle_name(i));
    names.push_back("T");
    std::vector<std::pair<int, int>> pairs;
    for (int i = 1; i <= k; ++i) {
        pairs.emplace_back(0, i);
        pairs.emplace_back(i, k + 1);
    }
    return Poset::from_relation("Anti" + std::to_string(k), names, pairs);
}

long long catalan(int n) {
    long long c = 1;
    for (int i = 0; i < n; ++i) c = c * 2 * (2 * i + 1) / (i + 2);
    return c;
}

Partition normalize_partition(const std::vector<int>& labels) {
    std::map<int, int> relabel;
    Partition out;
    out.reserve(labels.size());
    for (int l : labels) {
        auto it = relabel.find(l);
        if (it == relabel.end()) it = relabel.emplace(l, static_cast<int>(relabel.size())).first;
        out.push_back(it->second);
    }
    return out;
}

bool is_non_crossing(const Partition& p) {
    const int n = static_cast<int>(p.size());
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            for (int c = b + 1; c < n; ++c)
                for (int d = c + 1; d < n; ++d)
                    if (p[a] == p[c] && p[b] == p[d] && p[a] != p[b]) return false;
    return true;
}

std::vector<Partition> non_crossing_partitions(int n) {
    std::vector<Partition> out;
    Partition cur(n, 0);
    std::function<void(int, int)> rec = [&](int i, int blocks) {
        if (i == n) {
            if (is_non_crossing(cur)) out.push_back(cur);
            return;
        }
        for (int b = 0; b <= blocks; ++b) {
            cur[i] = b;
            rec(i + 1, std::max(blocks, b + 1));
        }
    };
    if (n == 0) return {Partition{}};
    cur[0] = 0;
    rec(1, 1);
    return out;
}

std::string partition_name(const Partition& p) {
    const int n = static_cast<int>(p.size());
    bool all_single = true, all_one = true;
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            if (p[i] == p[j]) all_single = false;
            else all_one = false;
        }
    }
    if (all_single) return "B";
    if (all_one) return "T";
    if (n == 3) {
        if (p[1] == p[2]) return "a";
        if (p[0] == p[2]) return "b";
        return "c";
    }
    std::string out;
    std::vector<bool> done(n, false);
    for (int i = 0; i < n; ++i) {
        if (done[i]) continue;
        std::string block;
        for (int j = i; j < n; ++j)
            if (p[j] == p[i]) {
                block += std::to_string(j + 1);
                done[j] = true;
            }
        if (block.size() < 2) continue;
        if (!out.empty()) out += "/";
        out += block;
    }
    return out;
}

PosetPtr non_crossing_poset(int n) {
    if (n < 1 || n > 8) fail(ErrorKind::size_limit, "non_crossing_poset supports 1 <= n <= 8");
    auto parts = non_crossing_partitions(n);
    // Bottom (all singletons) first, top (one block) last, the rest in
    // generation order.
    std::stable_sort(parts.begin(), parts.end(), [](const Partition& x, const Partition& y) {
        auto blocks = [](const Partition& p) { return *std::max_element(p.begin(), p.end()); };
        return blocks(x) > blocks(y);
    });
    std::vector<std::string> names;
    for (const auto& p : parts) names.push_back(partition_name(p));
    std::vector<std::pair<int, int>> pairs;
    const int m = static_cast<int>(parts.size());
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) {
            if (i == j) continue;
            bool refines = true;
            for (int a = 0; a < n && refines; ++a)
                for (int b = a + 1; b < n && refines; ++b)
                    if (parts[i][a] == parts[i][b] && parts[j][a] != parts[j][b]) refines = false;
            if (refines) pairs.emplace_back(i, j);
        }
    if (n == 1) names = {"B"};
    return Poset::from_relation("NC" + std::to_string(n), names, pairs);
}

int non_crossing_index(const Partition& p) {
    static std::map<int, std::vector<Partition>> cache;
    const int n = static_cast<int>(p.size());
    auto it = cache.find(n);
    if (it == cache.end()) {
        auto parts = non_crossing_partitions(n);
        std::stable_sort(parts.begin(), parts.end(), [](const Partition& x, const Partition& y) {
            auto blocks = [](const Partition& q) { return *std::max_element(q.begin(), q.end()); };
            return blocks(x) > blocks(y);
        });
        it = cache.emplace(n, std::move(parts)).first;
    }
    Partition q = normalize_partition(p);
    for (std::size_t i = 0; i < it->second.size(); ++i)
        if (it->second[i] == q) return static_cast<int>(i);
    return -1;
}

PosetPtr product_poset(const PosetPtr& a, const PosetPtr& b) {
    std::vector<std::string> names;
    const int na = a->size(), nb = b->size();
    names.reserve(static_cast<std::size_t>(na) * nb);
    for (int x = 0; x < na; ++x)
        for (int y = 0; y < nb; ++y) names.push_back("(" + a->atom_name(x) + "," + b->atom_name(y) + ")");
    std::vector<std::pair<int, int>> pairs;
    for (auto [x1, x2] : a->hasse())
        for (int y = 0; y < nb; ++y) pairs.emplace_back(product_index(x1, y, nb), product_index(x2, y, nb));
    for (auto [y1, y2] : b->hasse())
        for (int x = 0; x < na; ++x) pairs.emplace_back(product_index(x, y1, nb), product_index(x, y2, nb));
    return Poset::from_relation(a->name() + "x" + b->name(), names, pairs);
}

PosetPtr opposite_poset(const PosetPtr& a) {
    std::vector<std::pair<int, int>> pairs;
    for (auto [x, y] : a->hasse()) pairs.emplace_back(y, x);
    std::string name = a->name();
    const std::string prefix = "op(";
    if (name.rfind(prefix, 0) == 0 && name.back() == ')') name = name.substr(3, name.size() - 4);
    else name = prefix + name + ")";
    return Poset::from_relation(name, a->atoms(), pairs);
}

namespace {

std::string trim(const std::string& s) {
    auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

std::vector<std::string> split_ws(const std::string& s) {
    std::istringstream is(s);
    std::vector<std::string> out;
    std::string w;
    while (is >> w) out.push_back(w);
    return out;
}

} // namespace

PosetPtr parse_poset(const std::string& text) {
    std::istringstream is(text);
    std::string line, name;
    std::vector<std::string> atoms;
    std::vector<std::pair<std::string, std::string>> covers;
    bool have_atoms = false;
    int lineno = 0;
    while (std::getline(is, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;
        auto where = [&] { return "line " + std::to_string(lineno) + ": "; };
        if (line.rfind("poset", 0) == 0 && (line.size() == 5 || line[5] == ' ' || line[5] == '\t')) {
            name = trim(line.substr(5));
            if (name.empty()) fail(ErrorKind::parse, where() + "poset header needs a name");
        } else if (line.rfind("atoms:", 0) == 0) {
            if (have_atoms) fail(ErrorKind::parse, where() + "duplicate atoms line");
            atoms = split_ws(line.substr(6));
            have_atoms = true;
        } else if (line.rfind("cover:", 0) == 0) {
            auto parts = split_ws(line.substr(6));
            if (parts.size() < 3 || parts.size() % 2 == 0) fail(ErrorKind::parse, where() + "expected 'cover: x < y'");
            for (std::size_t i = 1; i < parts.size(); i += 2) {
                if (parts[i] != "<") fail(ErrorKind::parse, where() + "expected '<' in cover line");
                covers.emplace_back(parts[i - 1], parts[i + 1]);
            }
        } else {
            fail(ErrorKind::parse, where() + "unrecognized line '" + line + "'");
        }
    }
    if (name.empty()) fail(ErrorKind::parse, "missing 'poset <name>' header");
    if (!have_atoms) fail(ErrorKind::parse, "missing 'atoms:' line");
    std::map<std::string, int> index;
    for (std::size_t i = 0; i < atoms.size(); ++i) index[atoms[i]] = static_cast<int>(i);
    std::vector<std::pair<int, int>> pairs;
    for (const auto& [x, y] : covers) {
        auto ix = index.find(x), iy = index.find(y);
        if (ix == index.end() || iy == index.end())
            fail(ErrorKind::parse, "cover mentions undeclared atom '" + (ix == index.end() ? x : y) + "'");
        pairs.emplace_back(ix->second, iy->second);
    }
    try {
        return Poset::from_relation(name, atoms, pairs);
    } catch (const Error& e) {
        fail(ErrorKind::parse, std::string("invalid poset: ") + e.what());
    }
}

PosetPtr load_poset(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail(ErrorKind::invalid_argument, "cannot open poset file " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_poset(ss.str());
}

bool monotone_map_check(const PosetPtr& source, const PosetPtr& target, const std::vector<int>& table) {
    if (static_cast<int>(table.size()) != source->size())
        fail(ErrorKind::invalid_argument, "map is not total on the source poset");
    for (int v : table)
        if (v < 0 || v >= target->size()) fail(ErrorKind::invalid_argument, "map sends an atom outside the target");
    for (int a = 0; a < source->size(); ++a)
        for (int b = 0; b < source->size(); ++b)
            if (source->leq(a, b) && !target->leq(table[a], table[b])) return false;
    return true;
}

MonotoneMap make_monotone_map(PosetPtr source, PosetPtr target, std::vector<int> table) {
    if (!monotone_map_check(source, target, table)) fail(ErrorKind::precondition, "map is not monotone");
    return MonotoneMap{std::move(source), std::move(target), std::move(table)};
}

MonotoneMap identity_map(const PosetPtr& p) {
    std::vector<int> t(p->size());
    for (int i = 0; i < p->size(); ++i) t[i] = i;
    return MonotoneMap{p, p, t};
}

MonotoneMap compose_maps(const MonotoneMap& g, const MonotoneMap& f) {
    if (!f.target->same_as(*g.source)) fail(ErrorKind::invalid_argument, "maps do not compose");
    std::vector<int> t(f.source->size());
    for (int i = 0; i < f.source->size(); ++i) t[i] = g.table[f.table[i]];
    return MonotoneMap{f.source, g.target, t};
}

MonotoneMap parse_binary_map(const std::string& text, const PosetPtr& a, const PosetPtr& b, const PosetPtr& target) {
    auto prod = product_poset(a, b);
    std::vector<int> table(prod->size(), -1);
    std::istringstream is(text);
    std::string line;
    int lineno = 0;
    while (std::getline(is, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;
        auto where = "line " + std::to_string(lineno) + ": ";
        if (line.rfind("map:", 0) != 0) fail(ErrorKind::parse, where + "expected 'map: a b -> c'");
        auto parts = split_ws(line.substr(4));
        if (parts.size() != 4 || parts[2] != "->") fail(ErrorKind::parse, where + "expected 'map: a b -> c'");
        int x = a->find(parts[0]), y = b->find(parts[1]), z = target->find(parts[3]);
        if (x < 0 || y < 0 || z < 0) fail(ErrorKind::parse, where + "unknown atom in map line");
        table[product_index(x, y, b->size())] = z;
    }
    for (int v : table)
        if (v < 0) fail(ErrorKind::parse, "map file does not cover every pair of atoms");
    return make_monotone_map(prod, target, table);
}

} // namespace cgt
