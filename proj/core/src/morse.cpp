#include "cmvf/morse.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace cmvf {

bool MorseDecomposition::is_lower_set(const std::vector<std::size_t>& indices) const {
    std::vector<bool> in(size(), false);
    for (auto i : indices) in[i] = true;
    for (auto i : indices)
        for (std::size_t z = 0; z < size(); ++z)
            if (less[z][i] && !in[z]) return false;
    return true;
}

bool MorseDecomposition::is_upper_set(const std::vector<std::size_t>& indices) const {
    std::vector<bool> in(size(), false);
    for (auto i : indices) in[i] = true;
    for (auto i : indices)
        for (std::size_t z = 0; z < size(); ++z)
            if (less[i][z] && !in[z]) return false;
    return true;
}

bool MorseDecomposition::is_convex(const std::vector<std::size_t>& indices) const {
    std::vector<bool> in(size(), false);
    for (auto i : indices) in[i] = true;
    for (auto x : indices)
        for (auto y : indices)
            for (std::size_t z = 0; z < size(); ++z)
                if (less[x][z] && less[z][y] && !in[z]) return false;
    return true;
}

std::vector<std::size_t> MorseDecomposition::lower_hull(
    const std::vector<std::size_t>& indices) const {
    std::vector<std::size_t> out;
    for (std::size_t z = 0; z < size(); ++z)
        for (auto i : indices)
            if (less[z][i]) {
                out.push_back(z);
                break;
            }
    return out;
}

std::vector<std::size_t> MorseDecomposition::strict_hull(
    const std::vector<std::size_t>& indices) const {
    std::vector<bool> in(size(), false);
    for (auto i : indices) in[i] = true;
    std::vector<std::size_t> out;
    for (auto z : lower_hull(indices))
        if (!in[z]) out.push_back(z);
    return out;
}

std::vector<std::size_t> MorseDecomposition::linear_extension() const {
    std::size_t n = size();
    std::vector<bool> done(n, false);
    std::vector<std::size_t> order;
    order.reserve(n);
    while (order.size() < n) {
        std::size_t best = n;
        CellId best_key = 0;
        for (std::size_t r = 0; r < n; ++r) {
            if (done[r]) continue;
            bool minimal = true;
            for (std::size_t z = 0; z < n; ++z)
                if (z != r && !done[z] && less[z][r]) minimal = false;
            if (!minimal) continue;
            CellId key = sets[r].first();
            if (best == n || key < best_key) {
                best = r;
                best_key = key;
            }
        }
        if (best == n)
            throw validation_error("linear_extension: order has a cycle", {});
        done[best] = true;
        order.push_back(best);
    }
    return order;
}

CellSet chain_recurrent_set(const MultivectorField& field) {
    const auto& cx = field.complex();
    if (!is_invariant(field, cx.all_cells()))
        throw validation_error("chain_recurrent_set: complex is not invariant under the field",
                               cx.labels_of(cx.all_cells() - invariant_part(field, cx.all_cells())));
    CellSet cyc = cyclic_cells(field, cx.all_cells());
    CellSet out(cx.size());
    for (const auto& mv : field.multivectors())
        if (cyc.contains(mv.dominant)) out |= mv.cells;
    return out;
}

namespace {

// Reachability order between disjoint cell sets: leq[r][s] iff a path runs
// from sets[s] to sets[r] (or r == s). Throws when reachability is cyclic.
std::vector<std::vector<bool>> reachability_order(const MultivectorField& field,
                                                  const std::vector<CellSet>& sets,
                                                  std::vector<std::string>* problems) {
    const auto& cx = field.complex();
    std::size_t n = sets.size();
    std::vector<std::vector<bool>> leq(n, std::vector<bool>(n, false));
    std::vector<CellSet> reach;
    reach.reserve(n);
    for (const auto& s : sets) reach.push_back(reachable_from(field, cx.all_cells(), s));
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t s = 0; s < n; ++s) {
            if (r == s) {
                leq[r][s] = true;
                continue;
            }
            if (reach[s].intersects(sets[r])) leq[r][s] = true;
        }
    }
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t s = r + 1; s < n; ++s)
            if (leq[r][s] && leq[s][r] && problems)
                problems->push_back("reachability between sets " + std::to_string(r) + " and " +
                                    std::to_string(s) + " is cyclic");
    return leq;
}

} // namespace

MorseDecomposition basic_sets(const MultivectorField& field) {
    const auto& cx = field.complex();
    if (!is_invariant(field, cx.all_cells()))
        throw validation_error("basic_sets: complex is not invariant under the field",
                               cx.labels_of(cx.all_cells() - invariant_part(field, cx.all_cells())));
    auto sccs = strongly_connected_components(field, cx.all_cells());
    const auto& g = field.graph();

    // Recurrent components, keyed by their minimal cell for determinism.
    std::vector<std::size_t> comp_of(cx.size(), SIZE_MAX);
    std::vector<std::size_t> recurrent; // indices into sccs
    for (std::size_t i = 0; i < sccs.size(); ++i) {
        for (CellId c : sccs[i]) comp_of[static_cast<std::size_t>(c)] = i;
        if (sccs[i].size() > 1 || g.loop(sccs[i].front())) recurrent.push_back(i);
    }
    std::vector<std::size_t> class_of(sccs.size(), SIZE_MAX);
    std::vector<CellSet> sets;
    std::vector<std::size_t> order_key; // scc index per class, for sorting
    for (std::size_t i : recurrent) class_of[i] = SIZE_MAX;
    for (const auto& mv : field.multivectors()) {
        std::size_t comp = comp_of[static_cast<std::size_t>(mv.dominant)];
        if (std::find(recurrent.begin(), recurrent.end(), comp) == recurrent.end()) continue;
        if (class_of[comp] == SIZE_MAX) {
            class_of[comp] = sets.size();
            sets.push_back(cx.empty_set());
            order_key.push_back(comp);
        }
        sets[class_of[comp]] |= mv.cells;
    }
    // Deterministic presentation: sort classes by minimal cell id.
    std::vector<std::size_t> perm(sets.size());
    std::iota(perm.begin(), perm.end(), 0);
    std::sort(perm.begin(), perm.end(),
              [&](std::size_t a, std::size_t b) { return sets[a].first() < sets[b].first(); });
    std::vector<CellSet> sorted;
    sorted.reserve(sets.size());
    for (auto p : perm) sorted.push_back(sets[p]);

    MorseDecomposition m;
    m.sets = std::move(sorted);
    std::vector<std::string> problems;
    m.less = reachability_order(field, m.sets, &problems);
    if (!problems.empty())
        throw validation_error("basic_sets: internal cyclic order", problems);
    return m;
}

MorseDecomposition decomposition_from_sets(const MultivectorField& field,
                                           std::vector<CellSet> sets) {
    MorseDecomposition m;
    m.sets = std::move(sets);
    std::vector<std::string> problems;
    m.less = reachability_order(field, m.sets, &problems);
    if (!problems.empty())
        throw validation_error("decomposition_from_sets: reachability between sets is cyclic",
                               problems);
    return m;
}

DecompositionReport validate_decomposition(const MultivectorField& field,
                                           const MorseDecomposition& candidate) {
    const auto& cx = field.complex();
    DecompositionReport report;
    std::size_t n = candidate.size();
    if (candidate.less.size() != n) {
        report.problems.push_back("order matrix size mismatch");
        return report;
    }

    CellSet seen(cx.size());
    for (std::size_t r = 0; r < n; ++r) {
        const CellSet& s = candidate.sets[r];
        if (s.empty()) report.problems.push_back("set " + std::to_string(r) + " is empty");
        if (seen.intersects(s))
            report.problems.push_back("set " + std::to_string(r) + " overlaps another set");
        seen |= s;
        if (!is_isolated_invariant(field, s))
            report.problems.push_back("set " + std::to_string(r) + " is not isolated invariant");
    }

    // Partial-order axioms for the given order.
    for (std::size_t r = 0; r < n; ++r) {
        if (!candidate.less[r][r])
            report.problems.push_back("order not reflexive at " + std::to_string(r));
        for (std::size_t s = 0; s < n; ++s) {
            if (r != s && candidate.less[r][s] && candidate.less[s][r])
                report.problems.push_back("order not antisymmetric on (" + std::to_string(r) +
                                          "," + std::to_string(s) + ")");
            for (std::size_t z = 0; z < n; ++z)
                if (candidate.less[r][s] && candidate.less[s][z] && !candidate.less[r][z]) {
                    report.problems.push_back("order not transitive via " + std::to_string(s));
                    z = n, s = n; // one message per r is enough
                }
        }
    }

    // Every directed cycle must lie inside one member: recurrence condensates
    // into strongly connected pieces, each of which a member must absorb.
    auto sccs = strongly_connected_components(field, cx.all_cells());
    const auto& g = field.graph();
    for (const auto& comp : sccs) {
        if (comp.size() == 1 && !g.loop(comp.front())) continue;
        bool covered = false;
        for (std::size_t r = 0; r < n && !covered; ++r) {
            bool inside = std::all_of(comp.begin(), comp.end(), [&](CellId c) {
                return candidate.sets[r].contains(c);
            });
            covered = inside;
        }
        if (!covered)
            report.problems.push_back("recurrent component through " + cx.label(comp.front()) +
                                      " not covered by any set");
    }

    // Reachability must respect the order, and no return path may leave a set.
    for (std::size_t r = 0; r < n; ++r) {
        CellSet from = reachable_from(field, cx.all_cells(), candidate.sets[r]);
        CellSet to = reaching_to(field, cx.all_cells(), candidate.sets[r]);
        CellSet round_trip = (from & to) - candidate.sets[r];
        if (!round_trip.empty())
            report.problems.push_back("path leaves set " + std::to_string(r) +
                                      " and returns through " + cx.label(round_trip.first()));
        for (std::size_t s = 0; s < n; ++s) {
            if (s == r) continue;
            if (from.intersects(candidate.sets[s]) && !candidate.less[s][r])
                report.problems.push_back("connection from set " + std::to_string(r) + " to set " +
                                          std::to_string(s) + " not reflected by the order");
        }
    }
    return report;
}

bool finest_check(const MultivectorField& field, const MorseDecomposition& m) {
    MorseDecomposition fine = basic_sets(field);
    for (const auto& b : fine.sets) {
        bool contained = false;
        for (const auto& big : m.sets)
            if (b.subset_of(big)) {
                contained = true;
                break;
            }
        if (!contained) return false;
    }
    return true;
}

std::pair<CellSet, CellSet> limit_sets(const MultivectorField& field, const LassoSolution& sol) {
    if (!is_lasso(field, sol))
        throw validation_error("limit_sets: not a valid lasso", {});
    CellSet image(field.complex().size());
    for (CellId c : sol.cycle) image.insert(c);
    CellSet limit = invariant_part(field, compat_hull_outer(field, image));
    return {limit, limit};
}

bool is_attractor(const MultivectorField& field, const CellSet& s) {
    const auto& cx = field.complex();
    bool result = is_invariant(field, s) && cx.is_closed(s);
    if (result) {
        // Invariant and closed implies forward trapping.
        const auto& g = field.graph();
        bool trapped = true;
        s.for_each([&](CellId x) {
            for (CellId y : g.successors(x))
                if (!s.contains(y)) trapped = false;
        });
        if (!trapped)
            throw validation_error("is_attractor: closed invariant set is not a trapping region",
                                   cx.labels_of(s));
    }
    return result;
}

bool is_repeller(const MultivectorField& field, const CellSet& s) {
    const auto& cx = field.complex();
    bool result = is_invariant(field, s) && cx.is_open(s);
    if (result) {
        const auto& g = field.graph();
        bool trapped = true;
        cx.all_cells().for_each([&](CellId x) {
            if (s.contains(x)) return;
            for (CellId y : g.successors(x))
                if (s.contains(y)) trapped = false;
        });
        if (!trapped)
            throw validation_error("is_repeller: open invariant set is not backward trapping",
                                   cx.labels_of(s));
    }
    return result;
}

CellSet dual_repeller(const MultivectorField& field, const CellSet& attractor) {
    return invariant_part(field, attractor.complement());
}

CellSet dual_attractor(const MultivectorField& field, const CellSet& repeller) {
    return invariant_part(field, repeller.complement());
}

bool validate_ar_pair(const MultivectorField& field, const CellSet& a, const CellSet& r) {
    if (!is_attractor(field, a) || !is_repeller(field, r)) return false;
    if (a.intersects(r)) return false;
    CellSet cyc = cyclic_cells(field, field.complex().all_cells());
    if (!(cyc - a).subset_of(r) || !(cyc - r).subset_of(a)) return false;
    if (dual_repeller(field, a) != r) return false;
    if (dual_attractor(field, r) != a) return false;
    return true;
}

CellSet connections(const MultivectorField& field, const CellSet& s1, const CellSet& s2) {
    const auto& cx = field.complex();
    CellSet from = reachable_from(field, cx.all_cells(), s1);
    CellSet to = reaching_to(field, cx.all_cells(), s2);
    CellSet good = from & to;
    CellSet out(cx.size());
    for (const auto& mv : field.multivectors())
        if (good.contains(mv.dominant)) out |= mv.cells;
    return out;
}

CellSet morse_set(const MultivectorField& field, const MorseDecomposition& m,
                  const std::vector<std::size_t>& indices) {
    CellSet members(field.complex().size());
    for (auto i : indices) members |= m.sets[i];
    return connections(field, members, members);
}

IndexPair morse_index_pair(const MultivectorField& field, const MorseDecomposition& m,
                           const std::vector<std::size_t>& indices) {
    if (!m.is_convex(indices))
        throw validation_error("morse_index_pair: index set is not convex", {});
    auto below = m.lower_hull(indices);
    auto strictly_below = m.strict_hull(indices);
    auto n_of = [&](const std::vector<std::size_t>& idx) {
        CellSet mi = morse_set(field, m, idx);
        return dual_repeller(field, mi).complement();
    };
    return {n_of(below), n_of(strictly_below)};
}

MorseEquationReport morse_equation(const MultivectorField& field, const MorseDecomposition& m) {
    const auto& cx = field.complex();
    MorseEquationReport report;
    report.order = m.linear_extension();
    std::size_t n = report.order.size();

    Polynomial prev; // p of A_0 = empty set
    std::vector<std::size_t> taken;
    for (std::size_t i = 0; i < n; ++i) {
        std::size_t r = report.order[i];
        taken.push_back(r);
        Polynomial p_m = poincare(cx, m.sets[r]);
        report.set_poincare.push_back(p_m);
        CellSet a_i = morse_set(field, m, taken);
        Polynomial p_a = poincare(cx, a_i);
        report.filtration.push_back(p_a);
        Polynomial numerator = p_m + prev - p_a;
        Polynomial q;
        if (!numerator.divide_by_one_plus_t(q))
            throw validation_error("morse_equation: step not divisible by (1+t)",
                                   {numerator.to_string()});
        if (!q.nonnegative())
            throw validation_error("morse_equation: negative quotient", {q.to_string()});
        report.q.push_back(q);
        report.q_total += q;
        report.lhs += p_m;
        if (!q.is_zero() && i > 0) {
            report.forced_connections.push_back(i);
            CellSet prev_attractor = morse_set(
                field, m, std::vector<std::size_t>(taken.begin(), taken.end() - 1));
            if (connections(field, m.sets[r], prev_attractor).empty())
                report.forced_connections_ok = false;
        }
        prev = p_a;
    }
    report.ambient = prev;
    report.identity_ok =
        report.lhs == report.ambient + Polynomial::one_plus_t() * report.q_total;
    return report;
}

MorseInequalitiesReport morse_inequalities(const MultivectorField& field,
                                           const MorseDecomposition& m) {
    const auto& cx = field.complex();
    MorseInequalitiesReport report;
    std::vector<std::size_t> all(m.size());
    std::iota(all.begin(), all.end(), 0);
    Polynomial ambient = poincare(cx, morse_set(field, m, all));
    int top = cx.top_dim();
    report.m_counts.assign(static_cast<std::size_t>(top) + 1, 0);
    report.c_counts.assign(static_cast<std::size_t>(top) + 1, 0);
    for (const auto& s : m.sets) {
        Polynomial p = poincare(cx, s);
        for (int k = 0; k <= top; ++k) report.m_counts[static_cast<std::size_t>(k)] += p.coeff(k);
    }
    for (int k = 0; k <= top; ++k)
        report.c_counts[static_cast<std::size_t>(k)] = ambient.coeff(k);
    report.strong_ok = true;
    report.weak_ok = true;
    for (int k = 0; k <= top; ++k) {
        std::int64_t lhs = 0, rhs = 0, sign = 1;
        for (int j = k; j >= 0; --j) {
            lhs += sign * report.m_counts[static_cast<std::size_t>(j)];
            rhs += sign * report.c_counts[static_cast<std::size_t>(j)];
            sign = -sign;
        }
        if (lhs < rhs) report.strong_ok = false;
        if (report.m_counts[static_cast<std::size_t>(k)] < report.c_counts[static_cast<std::size_t>(k)])
            report.weak_ok = false;
    }
    return report;
}

std::string ConleyMorseGraph::to_dot() const {
    std::ostringstream out;
    out << "digraph conley_morse {\n";
    for (const auto& node : nodes)
        out << "  " << node.name << " [label=\"" << node.name << ": " << node.poincare.to_string()
            << "\"];\n";
    for (const auto& [from, to] : edges)
        out << "  " << nodes[from].name << " -> " << nodes[to].name << ";\n";
    out << "}\n";
    return out.str();
}

std::string ConleyMorseGraph::to_json() const {
    std::ostringstream out;
    out << "{\"nodes\":[";
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        if (i) out << ",";
        out << "{\"id\":\"" << nodes[i].name << "\",\"poincare\":\"" << nodes[i].poincare.to_string()
            << "\"}";
    }
    out << "],\"edges\":[";
    for (std::size_t i = 0; i < edges.size(); ++i) {
        if (i) out << ",";
        out << "[\"" << nodes[edges[i].first].name << "\",\"" << nodes[edges[i].second].name
            << "\"]";
    }
    out << "]}";
    return out.str();
}

ConleyMorseGraph conley_morse_graph(const MultivectorField& field, const MorseDecomposition& m) {
    ConleyMorseGraph graph;
    auto order = m.linear_extension();
    std::vector<std::size_t> position(m.size());
    for (std::size_t i = 0; i < order.size(); ++i) {
        position[order[i]] = i;
        graph.nodes.push_back({"M" + std::to_string(i + 1), conley_index(field, m.sets[order[i]])});
    }
    // Covering pairs of the order: r strictly below s with nothing between.
    for (std::size_t s = 0; s < m.size(); ++s) {
        for (std::size_t r = 0; r < m.size(); ++r) {
            if (r == s || !m.less[r][s]) continue;
            bool covering = true;
            for (std::size_t z = 0; z < m.size() && covering; ++z)
                if (z != r && z != s && m.less[r][z] && m.less[z][s]) covering = false;
            if (covering) graph.edges.emplace_back(position[s], position[r]);
        }
    }
    std::sort(graph.edges.begin(), graph.edges.end());
    return graph;
}

RestrictedField invariant_restriction(const MultivectorField& field) {
    CellSet inv = invariant_part(field, field.complex().all_cells());
    return restrict_field(field, inv);
}

} // namespace cmvf
