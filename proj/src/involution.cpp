#include "girard/involution.hpp"

#include <map>
#include <set>
#include <stdexcept>

#include "girard/newton.hpp"

namespace girard {

std::string WalkGammaPair::str() const { return "(" + walk.str() + ", " + gamma.str() + ")"; }

Walk walk_concat(const Walk& a, const Walk& b) {
    if (a.terminal() != b.start) {
        throw std::invalid_argument("walk_concat: first walk ends at " + std::to_string(a.terminal()) +
                                    " but second starts at " + std::to_string(b.start));
    }
    Walk out = a;
    out.steps.insert(out.steps.end(), b.steps.begin(), b.steps.end());
    return out;
}

Cycle walk_as_cycle(const Walk& w) {
    Cycle c;
    std::uint32_t at = w.start;
    for (const auto& st : w.steps) {
        c.push_back({at, st.to, st.color});
        at = st.to;
    }
    return c;
}

Polynomial pair_weight(const ColoredDigraph& g, const WalkGammaPair& pair) {
    Polynomial w = weight(g, pair.walk) * weight(g, pair.gamma);
    return pair.gamma.cycle_count() % 2 == 0 ? w : -w;
}

PairClass classify(const WalkGammaPair& pair) {
    const auto vs = pair.walk.vertices();
    std::set<std::uint32_t> seen;
    for (std::size_t i = 0; i + 1 < vs.size(); ++i) {
        if (pair.gamma.contains_vertex(vs[i])) return PairClass::bad;
        if (!seen.insert(vs[i]).second) return PairClass::bad;
    }
    return PairClass::good;
}

namespace {

Walk sub_walk(const Walk& w, std::size_t from, std::size_t to) {
    const auto vs = w.vertices();
    Walk out{vs[from], {}};
    out.steps.assign(w.steps.begin() + static_cast<std::ptrdiff_t>(from),
                     w.steps.begin() + static_cast<std::ptrdiff_t>(to));
    return out;
}

// The cycle as a closed walk rooted at one of its vertices.
Walk cycle_from(const Cycle& c, std::uint32_t root) {
    std::size_t offset = 0;
    while (c[offset].from != root) ++offset;
    Walk out{root, {}};
    for (std::size_t i = 0; i < c.size(); ++i) {
        const Edge& e = c[(offset + i) % c.size()];
        out.steps.push_back({e.to, e.color});
    }
    return out;
}

}  // namespace

WalkGammaPair involute(const WalkGammaPair& pair) {
    if (pair.walk.steps.empty()) throw std::logic_error("involute: walk must have length >= 1");
    if (classify(pair) == PairClass::good) {
        throw std::logic_error("involute called on a GOOD pair " + pair.str());
    }
    const auto vs = pair.walk.vertices();
    const std::size_t len = pair.walk.steps.size();
    for (std::size_t t = 0; t <= len; ++t) {
        const std::uint32_t v = vs[t];
        const int idx = pair.gamma.cycle_index_through(v);
        if (idx >= 0) {
            const auto& cycle = pair.gamma.cycles()[static_cast<std::size_t>(idx)];
            Walk spliced = walk_concat(walk_concat(sub_walk(pair.walk, 0, t), cycle_from(cycle, v)),
                                       sub_walk(pair.walk, t, len));
            return {std::move(spliced), pair.gamma.without_cycle(static_cast<std::size_t>(idx))};
        }
        for (std::size_t s = 0; s < t; ++s) {
            if (vs[s] != v) continue;
            const Walk loop = sub_walk(pair.walk, s, t);
            Walk rest = walk_concat(sub_walk(pair.walk, 0, s), sub_walk(pair.walk, t, len));
            return {std::move(rest), pair.gamma.with_cycle(walk_as_cycle(loop))};
        }
    }
    throw std::logic_error("involute: scan found neither a gamma vertex nor a repeat");
}

PairSet enumerate_pairs(const ColoredDigraph& g, std::uint32_t r, bool require_positive_walk) {
    if (r < 1) throw std::invalid_argument("r must be at least 1");
    PairSet out;
    std::map<std::uint32_t, std::vector<LinearSubdigraph>> gammas_by_length;
    gammas_by_length[0].emplace_back();
    for (auto& gamma : enum_clsd(g)) {
        if (gamma.length() < r) gammas_by_length[gamma.length()].push_back(std::move(gamma));
    }
    for (auto& w : enum_ccw(g)) {
        if (w.length() > r) continue;
        const ColorSet wc = w.colors();
        for (const auto& gamma : gammas_by_length[r - w.length()]) {
            if (wc.disjoint(gamma.colors())) out.pairs.push_back({w, gamma});
        }
    }
    if (!require_positive_walk) out.empty_walk_term = ell_total(g, r);
    return out;
}

InvolutionAudit audit_involution(const ColoredDigraph& g, std::uint32_t r) {
    InvolutionAudit audit;
    audit.r = r;
    audit.n = g.vertex_count();
    audit.k = g.color_count();

    const auto set = enumerate_pairs(g, r, true);
    audit.pair_count = set.pairs.size();
    const std::set<WalkGammaPair> members(set.pairs.begin(), set.pairs.end());
    auto fail = [&](const std::string& what) { audit.failures.push_back(what); };

    struct Group {
        std::size_t count = 0;
        Polynomial weight;
    };
    std::map<LinearSubdigraph, Group> groups;
    Polynomial pair_sum;

    for (const auto& p : set.pairs) {
        const Polynomial wp = pair_weight(g, p);
        pair_sum += wp;
        if (p.walk.length() + p.gamma.length() != r || !p.walk.colors().disjoint(p.gamma.colors())) {
            fail("pair outside the domain: " + p.str());
        }
        if (classify(p) == PairClass::good) {
            ++audit.good_count;
            audit.good_weight_sum += wp;
            auto& grp = groups[p.gamma.with_cycle(walk_as_cycle(p.walk))];
            ++grp.count;
            grp.weight += wp;
            continue;
        }
        ++audit.bad_count;
        audit.bad_weight_sum += wp;
        const auto image = involute(p);
        if (image == p) fail("fixed point " + p.str());
        if (!members.contains(image)) fail("image leaves the pair set: " + p.str() + " -> " + image.str());
        if (classify(image) != PairClass::bad) fail("image is GOOD: " + p.str() + " -> " + image.str());
        if (involute(image) != p) fail("not an involution at " + p.str());
        if (pair_weight(g, image) != -wp) fail("weight not negated at " + p.str());
    }
    if (!audit.bad_weight_sum.is_zero()) fail("BAD weights do not cancel: " + audit.bad_weight_sum.str());

    audit.good_groups = groups.size();
    const bool small_r = r <= g.vertex_count();
    if (!small_r && audit.good_count != 0) {
        fail("r > n but " + std::to_string(audit.good_count) + " GOOD pairs exist");
    }
    if (small_r) {
        std::set<LinearSubdigraph> expected;
        if (r <= g.color_count()) {
            for (auto& gm : enum_clsd(g, r)) expected.insert(std::move(gm));
        }
        for (const auto& [dot, grp] : groups) {
            if (grp.count != r) {
                fail("subdigraph " + dot.str() + " owns " + std::to_string(grp.count) + " GOOD pairs, expected " +
                     std::to_string(r));
            }
            Polynomial want = weight(g, dot) * BigInt(r);
            if (dot.cycle_count() % 2 == 0) want = -want;
            if (grp.weight != want) fail("GOOD weight mismatch for " + dot.str());
            if (!expected.contains(dot)) fail("GOOD group is not an r-edge subdigraph: " + dot.str());
        }
        if (groups.size() != expected.size()) {
            fail(std::to_string(expected.size()) + " r-edge subdigraphs but " + std::to_string(groups.size()) +
                 " GOOD groups");
        }
    }

    const Polynomial extra = ell_total(g, r);
    audit.total = small_r ? pair_sum + extra * BigInt(r) : pair_sum + extra;
    audit.theorem2_residual = verify_theorem2(g, r).residual;
    if (audit.total != audit.theorem2_residual) fail("audit total differs from the theorem residual");
    if (!audit.total.is_zero()) fail("audit total is nonzero: " + audit.total.str());
    return audit;
}

}  // namespace girard
