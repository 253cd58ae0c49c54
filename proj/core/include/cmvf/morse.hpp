#pragma once

#include <string>
#include <vector>

#include "cmvf/dynamics.hpp"

namespace cmvf {

/// Indexed family of disjoint isolated invariant sets with an admissible
/// partial order: less(r, s) means M_r sits below M_s in the flow (every
/// connection runs from larger to smaller index).
struct MorseDecomposition {
    std::vector<CellSet> sets;
    /// less[r][s] iff r <= s; reflexive, antisymmetric, transitive.
    std::vector<std::vector<bool>> less;

    std::size_t size() const { return sets.size(); }
    bool leq(std::size_t r, std::size_t s) const { return less[r][s]; }

    bool is_lower_set(const std::vector<std::size_t>& indices) const;
    bool is_upper_set(const std::vector<std::size_t>& indices) const;
    bool is_convex(const std::vector<std::size_t>& indices) const;
    /// I<= : indices below some member of I.
    std::vector<std::size_t> lower_hull(const std::vector<std::size_t>& indices) const;
    /// I< : the lower hull with I itself removed.
    std::vector<std::size_t> strict_hull(const std::vector<std::size_t>& indices) const;
    /// Deterministic linear extension: topological sort with minimal
    /// leading cell id as the tie-break.
    std::vector<std::size_t> linear_extension() const;
};

/// Cells whose dominant cell admits a path of length at least two back to
/// itself. The ambient complex must be invariant under the field; a
/// validation_error reports the non-invariant case.
CellSet chain_recurrent_set(const MultivectorField& field);

/// Equivalence classes of mutual reachability on the chain recurrent set,
/// ordered by the reachability-induced minimal admissible order. This is
/// the finest Morse decomposition. Requires an invariant ambient complex.
MorseDecomposition basic_sets(const MultivectorField& field);

struct DecompositionReport {
    std::vector<std::string> problems;
    bool ok() const { return problems.empty(); }
};

/// Checks the Morse-decomposition axioms for candidate sets with the given
/// order: nonempty disjoint isolated invariant sets, every directed cycle
/// covered by some member, no return path leaving a member, and the order a
/// partial order extending reachability.
DecompositionReport validate_decomposition(const MultivectorField& field,
                                           const MorseDecomposition& candidate);

/// Builds a decomposition from sets with the minimal (reachability) order.
/// Throws validation_error when reachability between the sets has a cycle.
MorseDecomposition decomposition_from_sets(const MultivectorField& field,
                                           std::vector<CellSet> sets);

/// True iff every basic set is contained in some member (always true for a
/// valid decomposition).
bool finest_check(const MultivectorField& field, const MorseDecomposition& m);

/// Alpha and omega limit sets of the eventually periodic solution the lasso
/// represents. Both tails wind around the lasso's cycle, so both limit sets
/// equal the invariant part of the compatible hull of the cycle image.
std::pair<CellSet, CellSet> limit_sets(const MultivectorField& field, const LassoSolution& sol);

/// Attractor: invariant and closed. Also verifies the trapping-region
/// characterization; disagreement is an internal error.
bool is_attractor(const MultivectorField& field, const CellSet& s);
/// Repeller: invariant and open, cross-checked against backward trapping.
bool is_repeller(const MultivectorField& field, const CellSet& s);

/// Invariant part of the complement of an attractor / repeller.
CellSet dual_repeller(const MultivectorField& field, const CellSet& attractor);
CellSet dual_attractor(const MultivectorField& field, const CellSet& repeller);

/// Checks the attractor-repeller axioms: roles, disjointness, every cycle
/// outside a lies in r and vice versa, and mutual duality.
bool validate_ar_pair(const MultivectorField& field, const CellSet& a, const CellSet& r);

/// Connection set C(s1, s2): cells whose dominant cell is reachable from s1
/// and reaches s2. Sufficient for the limit-set definition because s1 and
/// s2 are invariant, so truncated tails close up inside them.
CellSet connections(const MultivectorField& field, const CellSet& s1, const CellSet& s2);

/// Morse set M(I): union of connections among members indexed by I.
CellSet morse_set(const MultivectorField& field, const MorseDecomposition& m,
                  const std::vector<std::size_t>& indices);

/// Index pair (N(I<=), N(I<)) with N(J) the complement of the dual repeller
/// of M(J). Requires convex I.
IndexPair morse_index_pair(const MultivectorField& field, const MorseDecomposition& m,
                           const std::vector<std::size_t>& indices);

struct MorseEquationReport {
    std::vector<std::size_t> order;       // linear extension used
    std::vector<Polynomial> set_poincare; // per position in `order`
    std::vector<Polynomial> filtration;   // p of the attractor filtration steps
    std::vector<Polynomial> q;            // per-step quotients
    Polynomial q_total;
    Polynomial lhs;     // sum of Morse-set polynomials
    Polynomial ambient; // p of M(full index set)
    bool identity_ok = false;
    /// Positions with q != 0; each forces a connection onto the previous
    /// attractor, cross-checked via the connection sets.
    std::vector<std::size_t> forced_connections;
    bool forced_connections_ok = true;
};

/// Runs the attractor filtration along the deterministic linear extension,
/// divides each step by (1+t) exactly and checks the summed identity.
/// Non-exact division or a negative quotient is an internal-consistency
/// error and throws.
MorseEquationReport morse_equation(const MultivectorField& field, const MorseDecomposition& m);

struct MorseInequalitiesReport {
    std::vector<std::int64_t> m_counts; // m_k = sum of Conley coefficients
    std::vector<std::int64_t> c_counts; // c_k of the ambient Morse set
    bool strong_ok = false;
    bool weak_ok = false;
};

MorseInequalitiesReport morse_inequalities(const MultivectorField& field,
                                           const MorseDecomposition& m);

/// Hasse diagram of the admissible order with nodes labeled by Conley
/// polynomials. Nodes are numbered along the deterministic linear
/// extension; edges run from the higher set to the one it covers.
struct ConleyMorseGraph {
    struct Node {
        std::string name; // "M<k>"
        Polynomial poincare;
    };
    std::vector<Node> nodes;
    std::vector<std::pair<std::size_t, std::size_t>> edges; // (from, to) node positions

    std::string to_dot() const;
    std::string to_json() const;
};

ConleyMorseGraph conley_morse_graph(const MultivectorField& field, const MorseDecomposition& m);

/// Restriction of the field to the invariant part of its complex; the
/// ambient space every Morse-theoretic computation runs on.
RestrictedField invariant_restriction(const MultivectorField& field);

} // namespace cmvf
