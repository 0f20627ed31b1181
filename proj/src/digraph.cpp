#include "girard/digraph.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <random>

#include "json.hpp"

namespace girard {

using nlohmann::json;

ColorSet ColorSet::of(std::initializer_list<std::uint32_t> colors) {
    ColorSet s;
    for (const auto c : colors) {
        if (c < 1 || c > kMaxColors) throw std::invalid_argument("color out of range");
        s = s.with(c);
    }
    return s;
}

ColorSet ColorSet::full(std::uint32_t k) {
    if (k > kMaxColors) throw std::invalid_argument("too many colors");
    return ColorSet(k == 0 ? 0U : (~0U >> (32 - k)));
}

std::uint32_t ColorSet::size() const noexcept { return static_cast<std::uint32_t>(std::popcount(bits_)); }

std::vector<std::uint32_t> ColorSet::members() const {
    std::vector<std::uint32_t> out;
    for (std::uint32_t c = 1; c <= kMaxColors; ++c) {
        if (contains(c)) out.push_back(c);
    }
    return out;
}

std::string ColorSet::str() const {
    std::string s = "{";
    bool first = true;
    for (const auto c : members()) {
        if (!first) s += ',';
        s += std::to_string(c);
        first = false;
    }
    return s + "}";
}

std::vector<ColorSet> color_subsets(std::uint32_t k, std::uint32_t size) {
    std::vector<ColorSet> out;
    const std::uint32_t limit = 1U << k;
    for (std::uint32_t bits = 0; bits < limit; ++bits) {
        if (static_cast<std::uint32_t>(std::popcount(bits)) == size) out.emplace_back(bits);
    }
    return out;
}

// ---------------------------------------------------------------------------

ColoredDigraph::ColoredDigraph(std::uint32_t n, std::uint32_t k) : n_(n), k_(k) {
    if (n < 1) throw std::invalid_argument("a colored digraph needs at least one vertex");
    if (k < 1 || k > kMaxColors) {
        throw std::invalid_argument("color count must be in 1.." + std::to_string(kMaxColors));
    }
}

void ColoredDigraph::set_bundle(std::uint32_t from, std::uint32_t to, Bundle weights) {
    bundles_[{from, to}] = std::move(weights);
}

bool ColoredDigraph::has_edge(std::uint32_t from, std::uint32_t to) const { return bundles_.contains({from, to}); }

const Polynomial* ColoredDigraph::weight(std::uint32_t from, std::uint32_t to, std::uint32_t color) const {
    auto it = bundles_.find({from, to});
    if (it == bundles_.end() || color < 1 || color > it->second.size()) return nullptr;
    return &it->second[color - 1];
}

std::vector<Violation> validate(const ColoredDigraph& g) {
    std::vector<Violation> out;
    const auto n = g.vertex_count();
    const auto k = g.color_count();
    for (const auto& [key, weights] : g.bundles()) {
        const auto [from, to] = key;
        const std::string pair = "(" + std::to_string(from) + ", " + std::to_string(to) + ")";
        if (from < 1 || from > n || to < 1 || to > n) {
            out.push_back({"pair " + pair + " references a vertex outside 1.." + std::to_string(n), from, to, 0});
        }
        if (weights.size() != k) {
            out.push_back({"pair " + pair + " has " + std::to_string(weights.size()) + " color weights, expected " +
                               std::to_string(k),
                           from, to, 0});
        }
        for (std::size_t c = 0; c < weights.size(); ++c) {
            if (weights[c].is_zero()) {
                const auto color = static_cast<std::uint32_t>(c + 1);
                out.push_back({"pair " + pair + " has zero weight for color " + std::to_string(color), from, to, color});
            }
        }
    }
    return out;
}

ColoredDigraph build_gamma_rc(std::uint32_t n, std::uint32_t r) {
    ColoredDigraph g(n, r);
    for (std::uint32_t j = 1; j <= n; ++j) {
        ColoredDigraph::Bundle loop;
        for (std::uint32_t i = 1; i <= r; ++i) loop.emplace_back(VarId::a(j, i));
        g.set_bundle(j, j, std::move(loop));
    }
    return g;
}

ColoredDigraph random_digraph(std::uint32_t n, std::uint32_t k, double edge_density, std::uint32_t weight_bound,
                              std::uint64_t seed) {
    if (!(edge_density > 0.0 && edge_density <= 1.0)) {
        throw std::invalid_argument("edge density must lie in (0, 1]");
    }
    if (weight_bound < 1) throw std::invalid_argument("weight bound must be at least 1");
    ColoredDigraph g(n, k);
    std::mt19937_64 rng(seed);
    std::bernoulli_distribution present(edge_density);
    const auto bound = static_cast<std::int64_t>(weight_bound);
    std::uniform_int_distribution<std::int64_t> draw(1, 2 * bound);
    for (std::uint32_t i = 1; i <= n; ++i) {
        for (std::uint32_t j = 1; j <= n; ++j) {
            if (!present(rng)) continue;
            ColoredDigraph::Bundle weights;
            for (std::uint32_t c = 0; c < k; ++c) {
                // 1..b -> -b..-1, b+1..2b -> 1..b
                const auto v = draw(rng);
                weights.emplace_back(BigInt(v <= bound ? v - bound - 1 : v - bound));
            }
            g.set_bundle(i, j, std::move(weights));
        }
    }
    return g;
}

ColoredDigraph with_symbolic_weights(const ColoredDigraph& g) {
    ColoredDigraph out(g.vertex_count(), g.color_count());
    for (const auto& [key, weights] : g.bundles()) {
        const auto [from, to] = key;
        ColoredDigraph::Bundle symbolic;
        for (std::uint32_t c = 1; c <= g.color_count(); ++c) {
            symbolic.emplace_back(VarId::x((from - 1) * g.vertex_count() + to, c));
        }
        out.set_bundle(from, to, std::move(symbolic));
    }
    return out;
}

ColoredDigraph permute_vertices(const ColoredDigraph& g, const std::vector<std::uint32_t>& perm) {
    const auto n = g.vertex_count();
    std::vector<std::uint32_t> sorted = perm;
    std::sort(sorted.begin(), sorted.end());
    for (std::uint32_t i = 0; i < n; ++i) {
        if (sorted.size() != n || sorted[i] != i + 1) throw std::invalid_argument("not a permutation of 1..n");
    }
    ColoredDigraph out(n, g.color_count());
    for (const auto& [key, weights] : g.bundles()) {
        out.set_bundle(perm[key.first - 1], perm[key.second - 1], weights);
    }
    return out;
}

// ---------------------------------------------------------------------------
// JSON

namespace {

[[noreturn]] void schema_error(const std::string& pointer, const std::string& msg) {
    throw GraphParseError("graph file: " + msg + " at " + pointer);
}

const json& require(const json& obj, const char* field, const std::string& pointer) {
    auto it = obj.find(field);
    if (it == obj.end()) schema_error(pointer, std::string("missing field \"") + field + "\"");
    return *it;
}

std::uint32_t require_index(const json& obj, const char* field, const std::string& pointer) {
    const json& v = require(obj, field, pointer);
    const std::string where = pointer + "/" + field;
    if (!v.is_number_integer()) schema_error(where, std::string("\"") + field + "\" must be an integer");
    const auto value = v.get<std::int64_t>();
    if (value < 0 || value > std::numeric_limits<std::uint32_t>::max()) {
        schema_error(where, std::string("\"") + field + "\" out of range");
    }
    return static_cast<std::uint32_t>(value);
}

Polynomial parse_weight(const json& w, const std::string& pointer) {
    if (w.is_number_unsigned()) return Polynomial(BigInt(w.get<std::uint64_t>()));
    if (w.is_number_integer()) return Polynomial(BigInt(w.get<std::int64_t>()));
    if (w.is_string()) {
        try {
            return parse_polynomial(w.get<std::string>());
        } catch (const PolyParseError& e) {
            schema_error(pointer, std::string("bad polynomial weight: ") + e.what());
        }
    }
    schema_error(pointer, "weight must be an integer or a polynomial string");
}

json weight_to_json(const Polynomial& w) {
    if (w.is_constant()) {
        const BigInt c = w.constant_term();
        if (c >= std::numeric_limits<std::int64_t>::min() && c <= std::numeric_limits<std::int64_t>::max()) {
            return json(c.convert_to<std::int64_t>());
        }
    }
    return json(w.str());
}

}  // namespace

ColoredDigraph parse_digraph(std::string_view text) {
    json doc;
    try {
        doc = json::parse(text.begin(), text.end());
    } catch (const json::parse_error& e) {
        throw GraphParseError("graph file: JSON syntax error at byte " + std::to_string(e.byte) + ": " + e.what());
    }
    if (!doc.is_object()) schema_error("/", "top level must be an object");

    const auto n = require_index(doc, "n", "");
    const auto k = require_index(doc, "colors", "");
    if (n < 1) schema_error("/n", "\"n\" must be at least 1");
    if (k < 1 || k > kMaxColors) schema_error("/colors", "\"colors\" must be in 1.." + std::to_string(kMaxColors));

    ColoredDigraph g(n, k);
    const json& edges = require(doc, "edges", "");
    if (!edges.is_array()) schema_error("/edges", "\"edges\" must be an array");
    for (std::size_t idx = 0; idx < edges.size(); ++idx) {
        const std::string pointer = "/edges/" + std::to_string(idx);
        const json& e = edges[idx];
        if (!e.is_object()) schema_error(pointer, "edge must be an object");
        const auto from = require_index(e, "from", pointer);
        const auto to = require_index(e, "to", pointer);
        if (g.has_edge(from, to)) {
            schema_error(pointer, "duplicate edge (" + std::to_string(from) + ", " + std::to_string(to) + ")");
        }
        const json& ws = require(e, "weights", pointer);
        if (!ws.is_array()) schema_error(pointer + "/weights", "\"weights\" must be an array");
        ColoredDigraph::Bundle bundle;
        for (std::size_t c = 0; c < ws.size(); ++c) {
            bundle.push_back(parse_weight(ws[c], pointer + "/weights/" + std::to_string(c)));
        }
        g.set_bundle(from, to, std::move(bundle));
    }
    return g;
}

std::string serialize_digraph(const ColoredDigraph& g) {
    json edges = json::array();
    for (const auto& [key, weights] : g.bundles()) {
        json ws = json::array();
        for (const auto& w : weights) ws.push_back(weight_to_json(w));
        edges.push_back(json{{"from", key.first}, {"to", key.second}, {"weights", std::move(ws)}});
    }
    const json doc{{"n", g.vertex_count()}, {"colors", g.color_count()}, {"edges", std::move(edges)}};
    return doc.dump(2) + "\n";
}

}  // namespace girard
