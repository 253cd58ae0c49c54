#pragma once

#include <vector>

#include "cmvf/cellset.hpp"
#include "cmvf/lefschetz.hpp"
#include "cmvf/polynomial.hpp"

namespace cmvf {

/// Betti numbers of the subcomplex on a proper subset, one entry per degree
/// 0..top_dim of the subset (empty for the empty set). Ranks are computed by
/// column elimination over the complex's field on the boundary matrices
/// restricted to a. Throws validation_error when a is not proper.
std::vector<std::int64_t> betti(const LefschetzComplex& cx, const CellSet& a);

inline std::vector<std::int64_t> betti(const LefschetzComplex& cx) {
    return betti(cx, cx.all_cells());
}

/// Poincare polynomial of the proper subset a.
Polynomial poincare(const LefschetzComplex& cx, const CellSet& a);

inline Polynomial poincare(const LefschetzComplex& cx) { return poincare(cx, cx.all_cells()); }

/// True iff every Betti number of the proper subset vanishes.
bool is_zero_space(const LefschetzComplex& cx, const CellSet& a);

/// Poincare polynomial of the quotient chain complex R(b)/R(a) for closed
/// nested a within b, computed from the full boundary operator with the
/// a-coordinates projected out. Must coincide with poincare(b \ a); tests
/// pin that identity. Throws validation_error on non-closed or non-nested
/// inputs.
Polynomial relative_poincare_crosscheck(const LefschetzComplex& cx, const CellSet& a,
                                        const CellSet& b);

} // namespace cmvf
