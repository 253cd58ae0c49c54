#pragma once

#include <optional>
#include <vector>

#include "cmvf/mvf.hpp"
#include "cmvf/polynomial.hpp"

namespace cmvf {

/// Finite sequence of cells with an arrow between consecutive entries.
/// The empty path is the neutral element of concatenation.
using Path = std::vector<CellId>;

bool is_path(const MultivectorField& field, const Path& p);

/// Concatenation; requires an arrow between the junction cells unless one
/// operand is empty. Throws validation_error on an illegal junction.
Path concat(const MultivectorField& field, const Path& p, const Path& q);

/// The unique path from x to its dominant cell: x itself when dominant,
/// otherwise x followed by theta(x).
Path nu(const MultivectorField& field, CellId x);

/// nu without its final dominant cell: empty when x is dominant.
Path nu_minus(const MultivectorField& field, CellId x);

/// Eventually periodic solution: a finite stem entering a cycle that closes
/// up in the graph. Normal form rotates the cycle to start at its minimal
/// cell id, making comparison deterministic.
struct LassoSolution {
    Path stem;  // may be empty
    Path cycle; // nonempty; last element has an arrow to the first

    void normalize();
    bool operator==(const LassoSolution& o) const = default;
};

/// Validates stem/cycle arrows and the closing arrow of the cycle.
bool is_lasso(const MultivectorField& field, const LassoSolution& sol);

/// Strongly connected components of the graph restricted to `within`,
/// in a deterministic order.
std::vector<std::vector<CellId>> strongly_connected_components(const MultivectorField& field,
                                                               const CellSet& within);

/// Cells of `within` lying on a directed cycle of the restricted graph
/// (nontrivial strongly connected component, or a loop).
CellSet cyclic_cells(const MultivectorField& field, const CellSet& within);

/// Cells of `within` reachable from `sources` along restricted arrows;
/// includes the sources themselves.
CellSet reachable_from(const MultivectorField& field, const CellSet& within,
                       const CellSet& sources);

/// Cells of `within` from which `targets` can be reached; includes the targets.
CellSet reaching_to(const MultivectorField& field, const CellSet& within, const CellSet& targets);

/// Maximal V-compatible subset of a: the union of multivectors inside a.
CellSet compat_hull_inner(const MultivectorField& field, const CellSet& a);
/// Minimal V-compatible superset of a: the union of multivectors meeting a.
CellSet compat_hull_outer(const MultivectorField& field, const CellSet& a);
bool is_compatible(const MultivectorField& field, const CellSet& a);

/// The invariant part of a: cells of a whose dominant cell carries a
/// bi-infinite solution inside the maximal V-compatible subset of a.
/// Existence is decided on the restricted graph: the dominant cell must
/// reach a directed cycle and be reachable from one (loops count).
CellSet invariant_part(const MultivectorField& field, const CellSet& a);
/// Forward-solution variant: the dominant cell must reach a cycle.
CellSet inv_plus(const MultivectorField& field, const CellSet& a);
/// Backward-solution variant: the dominant cell must be reachable from a cycle.
CellSet inv_minus(const MultivectorField& field, const CellSet& a);

bool is_invariant(const MultivectorField& field, const CellSet& a);

/// Isolated invariant set: invariant and proper.
bool is_isolated_invariant(const MultivectorField& field, const CellSet& s);

/// Diagnostic search for an internal tangency: a path in cl s with both
/// endpoints in s passing through the mouth of s. Present exactly when an
/// invariant s fails to be proper.
std::optional<Path> internal_tangency_witness(const MultivectorField& field, const CellSet& s);

/// Closed nested pair of cell sets; the index-pair conditions tie it to an
/// isolated invariant set.
struct IndexPair {
    CellSet p1;
    CellSet p2;
};

struct IndexPairReport {
    std::vector<std::string> problems;
    bool ok() const { return problems.empty(); }
};

/// Checks closedness, nesting, positive invariance of p2 relative to p1,
/// exit through p2, and that the invariant part of p1 \ p2 equals s.
IndexPairReport validate_index_pair(const MultivectorField& field, const IndexPair& p,
                                    const CellSet& s);

/// The canonical saturated index pair (cl s, mo s) of an isolated invariant set.
IndexPair canonical_index_pair(const MultivectorField& field, const CellSet& s);

/// Cells of p1 whose every forward solution meets p2; a forward solution
/// avoiding p2 exists exactly when the cell reaches a directed cycle in the
/// graph restricted to the complement of p2.
CellSet exit_set(const MultivectorField& field, const IndexPair& p);

/// Saturation (s union exit set, exit set); the result is a saturated index
/// pair for s whenever p is an index pair for s.
IndexPair saturate(const MultivectorField& field, const IndexPair& p, const CellSet& s);

/// Conley polynomial of an isolated invariant set: the Poincare polynomial
/// of s as a proper subcomplex. Throws validation_error when s is not
/// isolated invariant.
Polynomial conley_index(const MultivectorField& field, const CellSet& s);

/// True iff every full solution in s stays in s1 or in s2: s = s1 u s2 with
/// no arrow crossing between them. When true, the Conley indices add; the
/// implementation asserts that identity.
bool decomposes_into(const MultivectorField& field, const CellSet& s, const CellSet& s1,
                     const CellSet& s2);

} // namespace cmvf
