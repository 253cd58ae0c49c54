#include "cmvf/dynamics.hpp"

#include <algorithm>
#include <cassert>
#include <deque>
#include <stdexcept>

namespace cmvf {

bool is_path(const MultivectorField& field, const Path& p) {
    const auto& g = field.graph();
    for (std::size_t i = 0; i + 1 < p.size(); ++i)
        if (!g.has_arrow(p[i], p[i + 1])) return false;
    return true;
}

Path concat(const MultivectorField& field, const Path& p, const Path& q) {
    if (p.empty()) return q;
    if (q.empty()) return p;
    if (!field.graph().has_arrow(p.back(), q.front()))
        throw validation_error("concat: no arrow between junction cells",
                               {field.complex().label(p.back()), field.complex().label(q.front())});
    Path out = p;
    out.insert(out.end(), q.begin(), q.end());
    return out;
}

Path nu(const MultivectorField& field, CellId x) {
    if (field.dominant(x)) return {x};
    return {x, field.theta(x)};
}

Path nu_minus(const MultivectorField& field, CellId x) {
    if (field.dominant(x)) return {};
    return {x};
}

void LassoSolution::normalize() {
    if (cycle.empty()) return;
    auto min_it = std::min_element(cycle.begin(), cycle.end());
    std::rotate(cycle.begin(), min_it, cycle.end());
}

bool is_lasso(const MultivectorField& field, const LassoSolution& sol) {
    if (sol.cycle.empty()) return false;
    if (!is_path(field, sol.cycle)) return false;
    if (!field.graph().has_arrow(sol.cycle.back(), sol.cycle.front())) return false;
    if (sol.stem.empty()) return true;
    if (!is_path(field, sol.stem)) return false;
    return field.graph().has_arrow(sol.stem.back(), sol.cycle.front());
}

namespace {

// Iterative Tarjan over the subgraph induced by `within`.
struct Tarjan {
    const DynGraph& g;
    const CellSet& within;
    std::vector<int> index, low;
    std::vector<bool> on_stack;
    std::vector<CellId> stack;
    int counter = 0;
    std::vector<std::vector<CellId>> components;

    Tarjan(const DynGraph& graph, const CellSet& w)
        : g(graph), within(w), index(graph.size(), -1), low(graph.size(), 0),
          on_stack(graph.size(), false) {}

    struct Frame {
        CellId v;
        std::vector<CellId> succ;
        std::size_t next = 0;
    };

    Frame open(CellId v) {
        index[static_cast<std::size_t>(v)] = low[static_cast<std::size_t>(v)] = counter++;
        stack.push_back(v);
        on_stack[static_cast<std::size_t>(v)] = true;
        Frame f;
        f.v = v;
        g.for_each_successor_in(v, within, [&](CellId w) { f.succ.push_back(w); });
        return f;
    }

    void run(CellId root) {
        std::vector<Frame> frames;
        frames.push_back(open(root));
        while (!frames.empty()) {
            Frame& f = frames.back();
            if (f.next < f.succ.size()) {
                CellId w = f.succ[f.next++];
                if (index[static_cast<std::size_t>(w)] < 0) {
                    frames.push_back(open(w));
                } else if (on_stack[static_cast<std::size_t>(w)]) {
                    low[static_cast<std::size_t>(f.v)] = std::min(
                        low[static_cast<std::size_t>(f.v)], index[static_cast<std::size_t>(w)]);
                }
            } else {
                if (low[static_cast<std::size_t>(f.v)] == index[static_cast<std::size_t>(f.v)]) {
                    std::vector<CellId> comp;
                    CellId w;
                    do {
                        w = stack.back();
                        stack.pop_back();
                        on_stack[static_cast<std::size_t>(w)] = false;
                        comp.push_back(w);
                    } while (w != f.v);
                    std::sort(comp.begin(), comp.end());
                    components.push_back(std::move(comp));
                }
                CellId v = f.v;
                frames.pop_back();
                if (!frames.empty()) {
                    CellId parent = frames.back().v;
                    low[static_cast<std::size_t>(parent)] = std::min(
                        low[static_cast<std::size_t>(parent)], low[static_cast<std::size_t>(v)]);
                }
            }
        }
    }
};

} // namespace

CellSet cyclic_cells(const MultivectorField& field, const CellSet& within) {
    const auto& g = field.graph();
    Tarjan t(g, within);
    within.for_each([&](CellId c) {
        if (t.index[static_cast<std::size_t>(c)] < 0) t.run(c);
    });
    CellSet cyc(field.complex().size());
    for (const auto& comp : t.components) {
        if (comp.size() > 1) {
            for (CellId c : comp) cyc.insert(c);
        } else if (g.loop(comp.front())) {
            cyc.insert(comp.front());
        }
    }
    return cyc;
}

CellSet reaching_to(const MultivectorField& field, const CellSet& within, const CellSet& targets) {
    const auto& g = field.graph();
    // Backward BFS needs predecessor lists; build them for the restriction.
    std::vector<std::vector<CellId>> preds(field.complex().size());
    within.for_each([&](CellId x) {
        g.for_each_successor_in(x, within, [&](CellId y) { preds[static_cast<std::size_t>(y)].push_back(x); });
    });
    CellSet seen = targets & within;
    std::deque<CellId> queue;
    seen.for_each([&](CellId c) { queue.push_back(c); });
    while (!queue.empty()) {
        CellId y = queue.front();
        queue.pop_front();
        for (CellId x : preds[static_cast<std::size_t>(y)]) {
            if (!seen.contains(x)) {
                seen.insert(x);
                queue.push_back(x);
            }
        }
    }
    return seen;
}

CellSet reachable_from(const MultivectorField& field, const CellSet& within,
                       const CellSet& sources) {
    const auto& g = field.graph();
    CellSet seen = sources & within;
    std::deque<CellId> queue;
    seen.for_each([&](CellId c) { queue.push_back(c); });
    while (!queue.empty()) {
        CellId x = queue.front();
        queue.pop_front();
        g.for_each_successor_in(x, within, [&](CellId y) {
            if (!seen.contains(y)) {
                seen.insert(y);
                queue.push_back(y);
            }
        });
    }
    return seen;
}

namespace {

enum class InvKind { Full, Forward, Backward };

CellSet invariant_part_impl(const MultivectorField& field, const CellSet& a, InvKind kind) {
    CellSet inner = compat_hull_inner(field, a);
    CellSet cyc = cyclic_cells(field, inner);
    CellSet to_cyc = reaching_to(field, inner, cyc);
    CellSet from_cyc = reachable_from(field, inner, cyc);
    CellSet good = kind == InvKind::Full      ? (to_cyc & from_cyc)
                   : kind == InvKind::Forward ? to_cyc
                                              : from_cyc;
    CellSet out(field.complex().size());
    for (const auto& mv : field.multivectors()) {
        if (!mv.cells.subset_of(inner)) continue;
        if (good.contains(mv.dominant)) out |= mv.cells;
    }
    return out;
}

} // namespace

std::vector<std::vector<CellId>> strongly_connected_components(const MultivectorField& field,
                                                               const CellSet& within) {
    Tarjan t(field.graph(), within);
    within.for_each([&](CellId c) {
        if (t.index[static_cast<std::size_t>(c)] < 0) t.run(c);
    });
    return std::move(t.components);
}

CellSet compat_hull_inner(const MultivectorField& field, const CellSet& a) {
    CellSet out(field.complex().size());
    for (const auto& mv : field.multivectors())
        if (mv.cells.subset_of(a)) out |= mv.cells;
    return out;
}

CellSet compat_hull_outer(const MultivectorField& field, const CellSet& a) {
    CellSet out(field.complex().size());
    for (const auto& mv : field.multivectors())
        if (mv.cells.intersects(a)) out |= mv.cells;
    return out;
}

bool is_compatible(const MultivectorField& field, const CellSet& a) {
    return compat_hull_inner(field, a) == a;
}

CellSet invariant_part(const MultivectorField& field, const CellSet& a) {
    return invariant_part_impl(field, a, InvKind::Full);
}

CellSet inv_plus(const MultivectorField& field, const CellSet& a) {
    return invariant_part_impl(field, a, InvKind::Forward);
}

CellSet inv_minus(const MultivectorField& field, const CellSet& a) {
    return invariant_part_impl(field, a, InvKind::Backward);
}

bool is_invariant(const MultivectorField& field, const CellSet& a) {
    return invariant_part(field, a) == a;
}

bool is_isolated_invariant(const MultivectorField& field, const CellSet& s) {
    return is_invariant(field, s) && field.complex().is_proper(s);
}

std::optional<Path> internal_tangency_witness(const MultivectorField& field, const CellSet& s) {
    const auto& cx = field.complex();
    const auto& g = field.graph();
    CellSet cl = cx.closure(s);
    CellSet mo = cl - s;
    if (mo.empty()) return std::nullopt;
    // A witness decomposes as s-cell -> ... -> mouth cell -> ... -> s-cell
    // inside cl s, so it exists iff some mouth cell is reachable from s and
    // reaches s within cl s. A shortest witness never repeats a cell, so BFS
    // length bounds are implicit.
    CellSet from_s = reachable_from(field, cl, s);
    CellSet to_s = reaching_to(field, cl, s);
    CellSet mid = (from_s & to_s) & mo;
    if (mid.empty()) return std::nullopt;
    CellId m = mid.first();

    auto bfs_path = [&](const CellSet& sources, CellId target) -> Path {
        std::vector<CellId> parent(cx.size(), kNoCell);
        CellSet seen = sources & cl;
        std::deque<CellId> queue;
        seen.for_each([&](CellId c) { queue.push_back(c); });
        while (!queue.empty()) {
            CellId x = queue.front();
            queue.pop_front();
            if (x == target) break;
            bool done = false;
            g.for_each_successor_in(x, cl, [&](CellId y) {
                if (done || seen.contains(y)) return;
                seen.insert(y);
                parent[static_cast<std::size_t>(y)] = x;
                queue.push_back(y);
                if (y == target) done = true;
            });
        }
        Path rev;
        for (CellId c = target; c != kNoCell; c = parent[static_cast<std::size_t>(c)])
            rev.push_back(c);
        std::reverse(rev.begin(), rev.end());
        return rev;
    };

    Path head = bfs_path(s, m);
    // Tail: from m to s; BFS forward from {m} to the nearest s-cell.
    std::vector<CellId> parent(cx.size(), kNoCell);
    CellSet seen(cx.size());
    seen.insert(m);
    std::deque<CellId> queue{m};
    CellId hit = kNoCell;
    while (!queue.empty() && hit == kNoCell) {
        CellId x = queue.front();
        queue.pop_front();
        g.for_each_successor_in(x, cl, [&](CellId y) {
            if (hit != kNoCell || seen.contains(y)) return;
            seen.insert(y);
            parent[static_cast<std::size_t>(y)] = x;
            if (s.contains(y)) hit = y;
            else queue.push_back(y);
        });
    }
    Path tail;
    for (CellId c = hit; c != kNoCell && c != m; c = parent[static_cast<std::size_t>(c)])
        tail.push_back(c);
    std::reverse(tail.begin(), tail.end());
    Path witness = head;
    witness.insert(witness.end(), tail.begin(), tail.end());
    return witness;
}

IndexPairReport validate_index_pair(const MultivectorField& field, const IndexPair& p,
                                    const CellSet& s) {
    const auto& cx = field.complex();
    const auto& g = field.graph();
    IndexPairReport report;
    if (!cx.is_closed(p.p1)) report.problems.push_back("p1 is not closed");
    if (!cx.is_closed(p.p2)) report.problems.push_back("p2 is not closed");
    if (!p.p2.subset_of(p.p1)) report.problems.push_back("p2 is not contained in p1");
    // (ip1) p1 n Pi(p2) subset p2
    p.p2.for_each([&](CellId x) {
        for (CellId y : g.successors(x))
            if (p.p1.contains(y) && !p.p2.contains(y))
                report.problems.push_back("positive invariance fails: " + cx.label(x) + " -> " +
                                          cx.label(y));
    });
    // (ip2) p1 n Pi^{-1}(X \ p1) subset p2
    p.p1.for_each([&](CellId x) {
        if (p.p2.contains(x)) return;
        for (CellId y : g.successors(x))
            if (!p.p1.contains(y))
                report.problems.push_back("exit condition fails: " + cx.label(x) + " leaves via " +
                                          cx.label(y));
    });
    // (ip3) Inv(p1 \ p2) = s
    if (invariant_part(field, p.p1 - p.p2) != s)
        report.problems.push_back("invariant part of p1 \\ p2 differs from s");
    return report;
}

IndexPair canonical_index_pair(const MultivectorField& field, const CellSet& s) {
    const auto& cx = field.complex();
    return {cx.closure(s), cx.mouth(s)};
}

CellSet exit_set(const MultivectorField& field, const IndexPair& p) {
    const auto& cx = field.complex();
    CellSet avoid = p.p2.complement();
    CellSet cyc = cyclic_cells(field, avoid);
    CellSet escape = reaching_to(field, avoid, cyc); // forward solution avoiding p2 exists
    return p.p1 - escape;
}

IndexPair saturate(const MultivectorField& field, const IndexPair& p, const CellSet& s) {
    CellSet e = exit_set(field, p);
    IndexPair out{s | e, e};
    auto report = validate_index_pair(field, out, s);
    if (!report.ok())
        throw validation_error("saturate: result is not an index pair", report.problems);
    if (out.p1 - out.p2 != s)
        throw validation_error("saturate: pair is not saturated", {});
    return out;
}

Polynomial conley_index(const MultivectorField& field, const CellSet& s) {
    if (!is_isolated_invariant(field, s))
        throw validation_error("conley_index: set is not isolated invariant",
                               field.complex().labels_of(s));
    return poincare(field.complex(), s);
}

bool decomposes_into(const MultivectorField& field, const CellSet& s, const CellSet& s1,
                     const CellSet& s2) {
    if (!is_isolated_invariant(field, s) || !is_isolated_invariant(field, s1) ||
        !is_isolated_invariant(field, s2))
        throw validation_error("decomposes_into: arguments must be isolated invariant", {});
    if (s1.intersects(s2) || !s1.subset_of(s) || !s2.subset_of(s))
        throw validation_error("decomposes_into: parts must be disjoint subsets of s", {});
    if ((s1 | s2) != s) return false;
    const auto& g = field.graph();
    bool crossing = false;
    s1.for_each([&](CellId x) {
        g.for_each_successor_in(x, s, [&](CellId y) {
            if (s2.contains(y)) crossing = true;
        });
    });
    s2.for_each([&](CellId x) {
        g.for_each_successor_in(x, s, [&](CellId y) {
            if (s1.contains(y)) crossing = true;
        });
    });
    if (crossing) return false;
    // Additivity of the Conley index is a theorem here; failure means a bug.
    if (conley_index(field, s) != conley_index(field, s1) + conley_index(field, s2))
        throw validation_error("decomposes_into: Conley index additivity violated", {});
    return true;
}

} // namespace cmvf
