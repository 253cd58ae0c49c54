#pragma once

#include <memory>
#include <vector>

#include "cmvf/cellset.hpp"
#include "cmvf/homology.hpp"
#include "cmvf/lefschetz.hpp"

namespace cmvf {

/// A proper cell set with a unique maximal element (the dominant cell).
struct Multivector {
    CellSet cells;
    CellId dominant = kNoCell;
    /// Nonzero Lefschetz homology of the set.
    bool critical = false;

    bool strict() const { return cells.count() > 2; }
};

class DynGraph;

/// Partition of all cells into multivectors, stored as the map sending each
/// cell to the dominant cell of its multivector. Immutable once built; both
/// builders validate their input and throw validation_error with an
/// itemized report on failure.
class MultivectorField {
public:
    /// Empty shell; only meaningful as a target for assignment.
    MultivectorField() = default;

    static MultivectorField from_partition(const LefschetzComplex& cx,
                                           const std::vector<CellSet>& parts);
    static MultivectorField from_theta(const LefschetzComplex& cx,
                                       const std::vector<CellId>& theta);

    const LefschetzComplex& complex() const { return *cx_; }

    CellId theta(CellId x) const { return theta_[static_cast<std::size_t>(x)]; }
    const std::vector<CellId>& theta_map() const { return theta_; }
    bool dominant(CellId x) const { return theta(x) == x; }

    std::size_t multivector_count() const { return mvs_.size(); }
    const Multivector& multivector(std::size_t i) const { return mvs_[i]; }
    const std::vector<Multivector>& multivectors() const { return mvs_; }
    /// The multivector [x] containing x.
    const Multivector& of(CellId x) const { return mvs_[mv_index_[static_cast<std::size_t>(x)]]; }
    std::size_t index_of(CellId x) const { return mv_index_[static_cast<std::size_t>(x)]; }

    /// Critical cell: the dominant cell of a critical multivector.
    bool critical_cell(CellId x) const { return dominant(x) && of(x).critical; }

    const DynGraph& graph() const;

private:
    const LefschetzComplex* cx_ = nullptr;
    std::vector<CellId> theta_;
    std::vector<std::size_t> mv_index_;
    std::vector<Multivector> mvs_;
    mutable std::shared_ptr<const DynGraph> graph_; // built once on first use
};

/// Directed graph of the induced dynamics: an up-arrow from each
/// non-dominant cell to its dominant cell, down-arrows from dominant cells
/// into the closure outside the multivector, and a loop at every critical
/// dominant cell.
class DynGraph {
public:
    explicit DynGraph(const MultivectorField& field);

    CellId up(CellId x) const { return up_[static_cast<std::size_t>(x)]; } // kNoCell if dominant
    const std::vector<CellId>& down(CellId x) const { return down_[static_cast<std::size_t>(x)]; }
    bool loop(CellId x) const { return loop_[static_cast<std::size_t>(x)]; }

    /// Successor set per the multivalued map of the field: {theta(x)} for a
    /// non-dominant cell, otherwise cl x minus the regular part of [x].
    std::vector<CellId> successors(CellId x) const;

    /// Successors of x that lie in the restriction set.
    template <typename F>
    void for_each_successor_in(CellId x, const CellSet& within, F&& f) const {
        if (up_[static_cast<std::size_t>(x)] != kNoCell) {
            CellId y = up_[static_cast<std::size_t>(x)];
            if (within.contains(y)) f(y);
            return;
        }
        if (loop_[static_cast<std::size_t>(x)]) f(x);
        for (CellId y : down_[static_cast<std::size_t>(x)])
            if (within.contains(y)) f(y);
    }

    std::size_t size() const { return up_.size(); }
    bool has_arrow(CellId x, CellId y) const;

private:
    std::vector<CellId> up_;
    std::vector<std::vector<CellId>> down_;
    std::vector<bool> loop_;
};

/// True iff every multivector has at most two cells.
bool is_vector_field(const MultivectorField& field);

/// True iff every multivector of coarse is a union of multivectors of fine.
/// Both fields must live on the same complex.
bool is_refinement(const MultivectorField& coarse, const MultivectorField& fine);

/// Forman refinement: fine is a vector field refining coarse, the invariant
/// part of every regular coarse multivector under the restricted fine field
/// is empty, and every coarse multivector contains at most one critical
/// fine vector.
bool is_forman_refinement(const MultivectorField& coarse, const MultivectorField& fine);

/// Acyclicity of the induced preorder: every strongly connected component
/// of the graph is a single cell without a loop.
bool is_acyclic(const MultivectorField& field);

/// Checks the zero-space conclusion for an acyclic field whose multivectors
/// are all regular: the whole complex then has vanishing homology.
/// Throws validation_error when the precondition fails; returns the verdict
/// of the homology computation.
bool zero_space_check_acyclic(const MultivectorField& field);

/// Restriction of the field to a V-compatible proper subset: the restricted
/// complex plus the field of the multivectors contained in the subset.
struct RestrictedField {
    std::shared_ptr<const LefschetzComplex> complex;
    MultivectorField field;
    std::vector<CellId> to_parent;   // restricted id -> parent id
    std::vector<CellId> from_parent; // parent id -> restricted id or kNoCell
};
RestrictedField restrict_field(const MultivectorField& field, const CellSet& a);

} // namespace cmvf
