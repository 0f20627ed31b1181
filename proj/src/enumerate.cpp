#include "girard/enumerate.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <stdexcept>

namespace girard {

Cycle canonical_cycle(Cycle c) {
    if (c.empty()) return c;
    auto smallest = std::min_element(c.begin(), c.end(), [](const Edge& a, const Edge& b) { return a.from < b.from; });
    std::rotate(c.begin(), smallest, c.end());
    return c;
}

LinearSubdigraph::LinearSubdigraph(std::vector<Cycle> cycles) : cycles_(std::move(cycles)) {
    for (auto& c : cycles_) c = canonical_cycle(std::move(c));
    std::erase_if(cycles_, [](const Cycle& c) { return c.empty(); });
    std::sort(cycles_.begin(), cycles_.end(),
              [](const Cycle& a, const Cycle& b) { return a.front().from < b.front().from; });
}

std::uint32_t LinearSubdigraph::length() const noexcept {
    std::uint32_t len = 0;
    for (const auto& c : cycles_) len += static_cast<std::uint32_t>(c.size());
    return len;
}

ColorSet LinearSubdigraph::colors() const noexcept {
    ColorSet s;
    for (const auto& c : cycles_) {
        for (const auto& e : c) s = s.with(e.color);
    }
    return s;
}

std::vector<std::uint32_t> LinearSubdigraph::vertices() const {
    std::vector<std::uint32_t> out;
    for (const auto& c : cycles_) {
        for (const auto& e : c) out.push_back(e.from);
    }
    std::sort(out.begin(), out.end());
    return out;
}

bool LinearSubdigraph::contains_vertex(std::uint32_t v) const noexcept { return cycle_index_through(v) >= 0; }

int LinearSubdigraph::cycle_index_through(std::uint32_t v) const noexcept {
    for (std::size_t i = 0; i < cycles_.size(); ++i) {
        for (const auto& e : cycles_[i]) {
            if (e.from == v) return static_cast<int>(i);
        }
    }
    return -1;
}

LinearSubdigraph LinearSubdigraph::with_cycle(Cycle c) const {
    auto cycles = cycles_;
    cycles.push_back(std::move(c));
    return LinearSubdigraph(std::move(cycles));
}

LinearSubdigraph LinearSubdigraph::without_cycle(std::size_t index) const {
    auto cycles = cycles_;
    cycles.erase(cycles.begin() + static_cast<std::ptrdiff_t>(index));
    return LinearSubdigraph(std::move(cycles));
}

std::string LinearSubdigraph::str() const {
    if (cycles_.empty()) return "[]";
    std::string s;
    for (const auto& c : cycles_) {
        s += '[';
        for (const auto& e : c) {
            s += "(" + std::to_string(e.from) + "->" + std::to_string(e.to) + ":c" + std::to_string(e.color) + ")";
        }
        s += ']';
    }
    return s;
}

ColorSet Walk::colors() const noexcept {
    ColorSet s;
    for (const auto& st : steps) s = s.with(st.color);
    return s;
}

std::vector<std::uint32_t> Walk::vertices() const {
    std::vector<std::uint32_t> out{start};
    for (const auto& st : steps) out.push_back(st.to);
    return out;
}

std::string Walk::str() const {
    std::string s = std::to_string(start);
    for (const auto& st : steps) s += " -c" + std::to_string(st.color) + "-> " + std::to_string(st.to);
    return s;
}

namespace {

const Polynomial& edge_weight(const ColoredDigraph& g, std::uint32_t from, std::uint32_t to, std::uint32_t color) {
    const Polynomial* w = g.weight(from, to, color);
    if (w == nullptr) {
        throw std::invalid_argument("no edge " + std::to_string(from) + "->" + std::to_string(to) + " with color " +
                                    std::to_string(color));
    }
    return *w;
}

}  // namespace

Polynomial weight(const ColoredDigraph& g, const LinearSubdigraph& gamma) {
    Polynomial w(1);
    for (const auto& c : gamma.cycles()) {
        for (const auto& e : c) w *= edge_weight(g, e.from, e.to, e.color);
    }
    return w;
}

Polynomial weight(const ColoredDigraph& g, const Walk& walk) {
    Polynomial w(1);
    std::uint32_t at = walk.start;
    for (const auto& st : walk.steps) {
        w *= edge_weight(g, at, st.to, st.color);
        at = st.to;
    }
    return w;
}

std::optional<std::string> subdigraph_violation(const ColoredDigraph& g, const LinearSubdigraph& gamma) {
    std::set<std::uint32_t> seen_vertices;
    ColorSet seen_colors;
    for (const auto& c : gamma.cycles()) {
        if (c.empty()) return "empty cycle";
        if (canonical_cycle(c) != c) return "cycle not rotated to its smallest vertex";
        for (std::size_t i = 0; i < c.size(); ++i) {
            const Edge& e = c[i];
            const Edge& next = c[(i + 1) % c.size()];
            if (e.to != next.from) return "cycle edges are not consecutive";
            if (g.weight(e.from, e.to, e.color) == nullptr) return "edge not in host graph";
            if (!seen_vertices.insert(e.from).second) return "vertex " + std::to_string(e.from) + " repeated";
            if (seen_colors.contains(e.color)) return "color " + std::to_string(e.color) + " repeated";
            seen_colors = seen_colors.with(e.color);
        }
    }
    for (std::size_t i = 1; i < gamma.cycles().size(); ++i) {
        if (gamma.cycles()[i - 1].front().from >= gamma.cycles()[i].front().from) return "cycles not sorted";
    }
    return std::nullopt;
}

std::optional<std::string> closed_walk_violation(const ColoredDigraph& g, const Walk& w) {
    if (w.steps.empty()) return "empty walk";
    if (!w.is_closed()) return "walk does not return to its root";
    ColorSet seen;
    std::uint32_t at = w.start;
    for (const auto& st : w.steps) {
        if (g.weight(at, st.to, st.color) == nullptr) return "edge not in host graph";
        if (seen.contains(st.color)) return "color " + std::to_string(st.color) + " repeated";
        seen = seen.with(st.color);
        at = st.to;
    }
    return std::nullopt;
}

namespace {

std::vector<std::vector<std::uint32_t>> out_neighbors(const ColoredDigraph& g) {
    std::vector<std::vector<std::uint32_t>> out(g.vertex_count() + 1);
    for (const auto& [key, weights] : g.bundles()) {
        if (key.first >= 1 && key.first <= g.vertex_count() && key.second >= 1 && key.second <= g.vertex_count()) {
            out[key.first].push_back(key.second);
        }
    }
    return out;
}

std::uint32_t bundle_width(const ColoredDigraph& g, std::uint32_t from, std::uint32_t to) {
    return static_cast<std::uint32_t>(std::min<std::size_t>(g.bundles().at({from, to}).size(), g.color_count()));
}

void check_filter(const ColoredDigraph& g, const std::optional<ColorSet>& colors) {
    if (colors && !colors->subset_of(ColorSet::full(g.color_count()))) {
        throw std::invalid_argument("color filter " + colors->str() + " outside the graph's colors");
    }
}

class ClsdEnumerator {
public:
    ClsdEnumerator(const ColoredDigraph& g, std::optional<std::uint32_t> length, std::optional<ColorSet> colors)
        : g_(g), adj_(out_neighbors(g)), max_len_(length.value_or(g.color_count())), colors_(colors),
          allowed_(colors.value_or(ColorSet::full(g.color_count()))), length_(length),
          used_(g.vertex_count() + 1, false) {}

    std::vector<LinearSubdigraph> run() {
        extend(1, ColorSet{}, 0);
        return std::move(out_);
    }

private:
    void extend(std::uint32_t next_vertex, ColorSet used_colors, std::uint32_t len) {
        if (!cycles_.empty() && (!length_ || *length_ == len) && (!colors_ || *colors_ == used_colors)) {
            out_.emplace_back(cycles_);
        }
        for (std::uint32_t v = next_vertex; v <= g_.vertex_count(); ++v) {
            if (used_[v]) continue;
            cycles_.emplace_back();
            used_[v] = true;
            grow_cycle(v, v, used_colors, len);
            used_[v] = false;
            cycles_.pop_back();
        }
    }

    // Extends the open path in cycles_.back(), rooted at its smallest vertex `root`.
    void grow_cycle(std::uint32_t root, std::uint32_t at, ColorSet used_colors, std::uint32_t len) {
        if (len >= max_len_) return;
        for (const auto w : adj_[at]) {
            const bool closes = w == root;
            if (!closes && (w < root || used_[w])) continue;
            const auto width = bundle_width(g_, at, w);
            for (std::uint32_t c = 1; c <= width; ++c) {
                if (used_colors.contains(c) || !allowed_.contains(c)) continue;
                cycles_.back().push_back({at, w, c});
                if (closes) {
                    extend(root + 1, used_colors.with(c), len + 1);
                } else {
                    used_[w] = true;
                    grow_cycle(root, w, used_colors.with(c), len + 1);
                    used_[w] = false;
                }
                cycles_.back().pop_back();
            }
        }
    }

    const ColoredDigraph& g_;
    std::vector<std::vector<std::uint32_t>> adj_;
    std::uint32_t max_len_;
    std::optional<ColorSet> colors_;
    ColorSet allowed_;
    std::optional<std::uint32_t> length_;
    std::vector<bool> used_;
    std::vector<Cycle> cycles_;
    std::vector<LinearSubdigraph> out_;
};

}  // namespace

std::vector<LinearSubdigraph> enum_clsd(const ColoredDigraph& g, std::optional<std::uint32_t> length,
                                        std::optional<ColorSet> colors) {
    check_filter(g, colors);
    return ClsdEnumerator(g, length, colors).run();
}

std::vector<Walk> enum_ccw(const ColoredDigraph& g, std::optional<std::uint32_t> length,
                           std::optional<ColorSet> colors) {
    check_filter(g, colors);
    const auto adj = out_neighbors(g);
    const std::uint32_t cap = std::min(length.value_or(g.color_count()), g.color_count());
    const ColorSet allowed = colors.value_or(ColorSet::full(g.color_count()));
    std::vector<Walk> out;
    Walk current;

    std::function<void(std::uint32_t, ColorSet)> dfs = [&](std::uint32_t at, ColorSet used) {
        if (!current.steps.empty() && at == current.start && (!length || *length == current.length()) &&
            (!colors || *colors == used)) {
            out.push_back(current);
        }
        if (current.length() >= cap) return;
        for (const auto w : adj[at]) {
            const auto width = bundle_width(g, at, w);
            for (std::uint32_t c = 1; c <= width; ++c) {
                if (used.contains(c) || !allowed.contains(c)) continue;
                current.steps.push_back({w, c});
                dfs(w, used.with(c));
                current.steps.pop_back();
            }
        }
    };

    for (std::uint32_t root = 1; root <= g.vertex_count(); ++root) {
        current = Walk{root, {}};
        dfs(root, ColorSet{});
    }
    return out;
}

Polynomial ell(const ColoredDigraph& g, std::uint32_t p, ColorSet s) {
    check_filter(g, s);
    if (p != s.size()) return Polynomial{};
    if (s.empty()) return Polynomial(1);
    Polynomial total;
    for (const auto& gamma : enum_clsd(g, p, s)) {
        const auto w = weight(g, gamma);
        if (gamma.cycle_count() % 2 == 0) {
            total += w;
        } else {
            total -= w;
        }
    }
    return total;
}

Polynomial c_walk(const ColoredDigraph& g, std::uint32_t q, ColorSet t) {
    check_filter(g, t);
    if (q != t.size()) return Polynomial{};
    if (t.empty()) return Polynomial(1);
    Polynomial total;
    for (const auto& w : enum_ccw(g, q, t)) total += weight(g, w);
    return total;
}

std::vector<Polynomial> ell_table(const ColoredDigraph& g) {
    std::vector<Polynomial> table(std::size_t{1} << g.color_count());
    table[0] = Polynomial(1);
    for (const auto& gamma : enum_clsd(g)) {
        const auto w = weight(g, gamma);
        auto& slot = table[gamma.colors().bits()];
        if (gamma.cycle_count() % 2 == 0) {
            slot += w;
        } else {
            slot -= w;
        }
    }
    return table;
}

std::vector<Polynomial> walk_table(const ColoredDigraph& g) {
    std::vector<Polynomial> table(std::size_t{1} << g.color_count());
    table[0] = Polynomial(1);
    for (const auto& w : enum_ccw(g)) table[w.colors().bits()] += weight(g, w);
    return table;
}

}  // namespace girard
