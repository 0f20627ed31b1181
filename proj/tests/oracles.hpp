#pragma once

// Brute-force reference enumerations. They share no code path with the
// depth-first enumerators: subdigraphs come from filtering edge subsets,
// walks from filtering all vertex/color sequences.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <vector>

#include "girard/digraph.hpp"
#include "girard/enumerate.hpp"

namespace girard::testing {

inline std::vector<Edge> colored_edges(const ColoredDigraph& g) {
    std::vector<Edge> out;
    for (const auto& [key, weights] : g.bundles()) {
        for (std::uint32_t c = 1; c <= weights.size(); ++c) out.push_back({key.first, key.second, c});
    }
    return out;
}

/// Every edge subset of size <= min(n, k) that forms vertex-disjoint cycles
/// with distinct colors.
inline std::vector<LinearSubdigraph> brute_clsd(const ColoredDigraph& g) {
    const auto edges = colored_edges(g);
    const std::uint32_t cap = std::min(g.vertex_count(), g.color_count());
    std::vector<LinearSubdigraph> out;
    std::vector<std::size_t> pick;

    auto accept = [&] {
        std::map<std::uint32_t, Edge> out_edge;
        std::map<std::uint32_t, int> in_deg;
        std::vector<std::uint32_t> colors;
        for (const auto i : pick) {
            const Edge& e = edges[i];
            if (out_edge.contains(e.from)) return;
            out_edge[e.from] = e;
            ++in_deg[e.to];
            colors.push_back(e.color);
        }
        std::sort(colors.begin(), colors.end());
        if (std::adjacent_find(colors.begin(), colors.end()) != colors.end()) return;
        for (const auto& [v, d] : in_deg) {
            if (d != 1 || !out_edge.contains(v)) return;
        }
        for (const auto& [v, e] : out_edge) {
            if (!in_deg.contains(v)) return;
        }
        std::vector<Cycle> cycles;
        std::map<std::uint32_t, bool> done;
        for (const auto& [v, e] : out_edge) {
            if (done[v]) continue;
            Cycle c;
            std::uint32_t at = v;
            do {
                done[at] = true;
                c.push_back(out_edge[at]);
                at = out_edge[at].to;
            } while (at != v);
            cycles.push_back(c);
        }
        out.emplace_back(std::move(cycles));
    };

    std::function<void(std::size_t)> rec = [&](std::size_t from) {
        if (!pick.empty()) accept();
        if (pick.size() == cap) return;
        for (std::size_t i = from; i < edges.size(); ++i) {
            pick.push_back(i);
            rec(i + 1);
            pick.pop_back();
        }
    };
    rec(0);
    std::sort(out.begin(), out.end());
    return out;
}

/// Every (root, (vertex, color)^q) sequence that is a colored closed walk.
inline std::vector<Walk> brute_ccw(const ColoredDigraph& g) {
    const auto n = g.vertex_count();
    const auto k = g.color_count();
    std::vector<Walk> out;
    for (std::uint32_t q = 1; q <= k; ++q) {
        std::uint64_t combos = 1;
        for (std::uint32_t i = 0; i < q; ++i) combos *= std::uint64_t{n} * k;
        for (std::uint32_t root = 1; root <= n; ++root) {
            for (std::uint64_t code = 0; code < combos; ++code) {
                Walk w{root, {}};
                std::uint64_t rest = code;
                for (std::uint32_t i = 0; i < q; ++i) {
                    const auto v = static_cast<std::uint32_t>(rest % n) + 1;
                    rest /= n;
                    const auto c = static_cast<std::uint32_t>(rest % k) + 1;
                    rest /= k;
                    w.steps.push_back({v, c});
                }
                if (w.terminal() != root) continue;
                bool ok = true;
                std::uint32_t at = root;
                std::vector<std::uint32_t> colors;
                for (const auto& st : w.steps) {
                    if (g.weight(at, st.to, st.color) == nullptr) ok = false;
                    colors.push_back(st.color);
                    at = st.to;
                }
                std::sort(colors.begin(), colors.end());
                if (std::adjacent_find(colors.begin(), colors.end()) != colors.end()) ok = false;
                if (ok) out.push_back(w);
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

/// Every bundle-presence pattern on n vertices, as graphs with generic
/// symbolic weights.
inline std::vector<ColoredDigraph> all_patterns(std::uint32_t n, std::uint32_t k) {
    std::vector<ColoredDigraph> out;
    const std::uint32_t pairs = n * n;
    for (std::uint32_t mask = 0; mask < (1U << pairs); ++mask) {
        ColoredDigraph g(n, k);
        for (std::uint32_t p = 0; p < pairs; ++p) {
            if (!((mask >> p) & 1U)) continue;
            g.set_bundle(p / n + 1, p % n + 1, ColoredDigraph::Bundle(k, Polynomial(1)));
        }
        out.push_back(with_symbolic_weights(g));
    }
    return out;
}

}  // namespace girard::testing
