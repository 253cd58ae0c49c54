#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "cmvf/cellset.hpp"
#include "cmvf/types.hpp"

namespace cmvf {

/// Finite graded cell set with incidence coefficients over a field.
///
/// Cells carry stable string labels (coordinate pairs for lattice-built
/// complexes, sorted vertex tuples for simplicial ones) and dense integer
/// ids used by every operation. Incidence coefficients are stored as
/// integers and interpreted in the chosen field; entries that map to the
/// field's zero are dropped at construction, so the facet relation always
/// reflects the field actually in use.
///
/// Instances are immutable after construction and safe to share across
/// concurrent readers.
class LefschetzComplex {
public:
    struct CellSpec {
        std::string label;
        int dim = 0;
    };
    struct KappaSpec {
        std::string x, y;
        std::int64_t coeff = 1;
    };

    LefschetzComplex() = default;
    LefschetzComplex(Coeff field, std::vector<CellSpec> cells, const std::vector<KappaSpec>& kappa);

    Coeff field() const { return field_; }
    std::size_t size() const { return labels_.size(); }
    bool empty() const { return labels_.empty(); }

    int dim(CellId c) const { return dims_[static_cast<std::size_t>(c)]; }
    int top_dim() const { return top_dim_; }
    const std::string& label(CellId c) const { return labels_[static_cast<std::size_t>(c)]; }
    std::optional<CellId> find(const std::string& label) const;
    CellId require(const std::string& label) const;

    /// Facets of x: pairs (y, kappa(x,y)) with nonzero field coefficient.
    const std::vector<std::pair<CellId, std::int64_t>>& facets(CellId x) const {
        return facets_[static_cast<std::size_t>(x)];
    }
    /// Cells having y as a facet.
    const std::vector<CellId>& cofacets(CellId y) const {
        return cofacets_[static_cast<std::size_t>(y)];
    }
    std::int64_t kappa(CellId x, CellId y) const;

    CellSet empty_set() const { return CellSet(size()); }
    CellSet all_cells() const { return CellSet::full(size()); }
    CellSet set_of(std::initializer_list<CellId> cells) const { return CellSet(size(), cells); }
    CellSet set_of_labels(const std::vector<std::string>& labels) const;
    std::vector<std::string> labels_of(const CellSet& a) const;

    // Finite T0 topology induced by the face order.
    CellSet closure(const CellSet& a) const;
    CellSet closure(CellId x) const;
    /// Minimal open set containing x.
    CellSet opn(CellId x) const;
    /// Minimal open superset of a (union of opn over its cells).
    CellSet open_hull(const CellSet& a) const;
    CellSet mouth(const CellSet& a) const;
    bool is_closed(const CellSet& a) const;
    bool is_open(const CellSet& a) const;
    /// Mouth-closedness; equal to the face-order convexity predicate.
    bool is_proper(const CellSet& a) const;
    /// The convexity characterization of properness, computed directly;
    /// exposed so tests can pin the equivalence of the two routes.
    bool is_proper_convexity(const CellSet& a) const;

    struct Violation {
        enum class Kind { Grading, KappaCondition } kind;
        CellId x = kNoCell;
        CellId z = kNoCell;
        std::string describe(const LefschetzComplex& cx) const;
    };
    struct ValidationReport {
        std::vector<Violation> violations;
        bool ok() const { return violations.empty(); }
    };
    /// Checks the grading rule and the kappa-square condition; lists every
    /// violating pair instead of throwing.
    ValidationReport validate() const;

    /// Subcomplex on a proper subset, with coefficients restricted to it.
    /// Labels and dimensions are preserved; ids are re-densified.
    /// Throws validation_error when a is not proper.
    LefschetzComplex restrict(const CellSet& a) const;

private:
    Coeff field_ = Coeff::Mod2;
    std::vector<std::string> labels_;
    std::vector<int> dims_;
    std::vector<std::vector<std::pair<CellId, std::int64_t>>> facets_;
    std::vector<std::vector<CellId>> cofacets_;
    std::unordered_map<std::string, CellId> by_label_;
    int top_dim_ = 0;
};

/// Planar cubical complex on [0,2n]^2 with cells keyed by the integer
/// coordinates of their centers of mass: vertices at even pairs, edges with
/// exactly one odd coordinate, squares at odd pairs. Labels are "(x,y)".
LefschetzComplex build_cubical_grid(int n, Coeff field = Coeff::Mod2);

/// Label of the lattice cell centered at (x, y).
std::string grid_label(int x, int y);

/// All simplices spanned by the given facets, with alternating-sign
/// incidence (reduced mod 2 when that field is chosen). Vertex names of
/// length one concatenate into labels ("abc"); longer names join with ','.
LefschetzComplex build_simplicial(const std::vector<std::vector<std::string>>& facets,
                                  Coeff field = Coeff::Mod2);

} // namespace cmvf
