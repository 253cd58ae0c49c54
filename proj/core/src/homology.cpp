#include "cmvf/homology.hpp"

#include <boost/dynamic_bitset.hpp>
#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <map>
#include <unordered_map>

namespace cmvf {

namespace {

using Rational = boost::multiprecision::cpp_rational;

// Rank over GF(2) of a sparse matrix given as columns of row bitsets.
std::size_t rank_mod2(std::vector<boost::dynamic_bitset<>> cols) {
    std::size_t rank = 0;
    std::unordered_map<std::size_t, std::size_t> pivot_col;
    for (std::size_t j = 0; j < cols.size(); ++j) {
        auto& col = cols[j];
        for (;;) {
            auto low = col.find_first();
            if (low == boost::dynamic_bitset<>::npos) break;
            auto it = pivot_col.find(low);
            if (it == pivot_col.end()) {
                pivot_col.emplace(low, j);
                ++rank;
                break;
            }
            col ^= cols[it->second];
        }
    }
    return rank;
}

// Rank over the rationals; columns are (row -> value) maps.
std::size_t rank_rational(std::vector<std::map<std::size_t, Rational>> cols) {
    std::size_t rank = 0;
    std::unordered_map<std::size_t, std::size_t> pivot_of_row;
    std::vector<std::map<std::size_t, Rational>> reduced;
    for (auto& col : cols) {
        for (;;) {
            if (col.empty()) break;
            std::size_t low = col.rbegin()->first;
            auto it = pivot_of_row.find(low);
            if (it == pivot_of_row.end()) {
                Rational inv = col.rbegin()->second;
                for (auto& [r, v] : col) v /= inv;
                pivot_of_row.emplace(low, reduced.size());
                reduced.push_back(col);
                ++rank;
                break;
            }
            Rational factor = col.rbegin()->second;
            for (const auto& [r, v] : reduced[it->second]) {
                auto pos = col.find(r);
                if (pos == col.end()) {
                    col.emplace(r, -factor * v);
                } else {
                    pos->second -= factor * v;
                    if (pos->second == 0) col.erase(pos);
                }
            }
        }
    }
    return rank;
}

struct DegreeIndex {
    // Per degree, the cells of the subset in increasing id order with their position.
    std::vector<std::vector<CellId>> cells_by_deg;
    std::vector<std::unordered_map<CellId, std::size_t>> pos_by_deg;

    DegreeIndex(const LefschetzComplex& cx, const CellSet& a) {
        int top = 0;
        a.for_each([&](CellId c) { top = std::max(top, cx.dim(c)); });
        cells_by_deg.resize(static_cast<std::size_t>(top) + 1);
        pos_by_deg.resize(static_cast<std::size_t>(top) + 1);
        a.for_each([&](CellId c) {
            auto d = static_cast<std::size_t>(cx.dim(c));
            pos_by_deg[d].emplace(c, cells_by_deg[d].size());
            cells_by_deg[d].push_back(c);
        });
    }
};

// Rank of the boundary map deg q -> q-1 of the complex restricted to a.
std::size_t boundary_rank(const LefschetzComplex& cx, const CellSet& a, const DegreeIndex& idx,
                          std::size_t q) {
    if (q == 0 || q >= idx.cells_by_deg.size()) return 0;
    const auto& dom = idx.cells_by_deg[q];
    const auto& pos = idx.pos_by_deg[q - 1];
    std::size_t nrows = idx.cells_by_deg[q - 1].size();
    if (dom.empty() || nrows == 0) return 0;
    if (cx.field() == Coeff::Mod2) {
        std::vector<boost::dynamic_bitset<>> cols;
        cols.reserve(dom.size());
        for (CellId x : dom) {
            boost::dynamic_bitset<> col(nrows);
            for (const auto& [y, v] : cx.facets(x)) {
                (void)v;
                if (a.contains(y) && cx.dim(y) == static_cast<int>(q) - 1)
                    col.set(pos.at(y));
            }
            cols.push_back(std::move(col));
        }
        return rank_mod2(std::move(cols));
    }
    std::vector<std::map<std::size_t, Rational>> cols;
    cols.reserve(dom.size());
    for (CellId x : dom) {
        std::map<std::size_t, Rational> col;
        for (const auto& [y, v] : cx.facets(x))
            if (a.contains(y) && cx.dim(y) == static_cast<int>(q) - 1)
                col.emplace(pos.at(y), Rational(v));
        cols.push_back(std::move(col));
    }
    return rank_rational(std::move(cols));
}

} // namespace

std::vector<std::int64_t> betti(const LefschetzComplex& cx, const CellSet& a) {
    if (!cx.is_proper(a))
        throw validation_error("betti: subset is not proper", cx.labels_of(a));
    if (a.empty()) return {};
    DegreeIndex idx(cx, a);
    std::size_t top = idx.cells_by_deg.size();
    std::vector<std::size_t> ranks(top + 1, 0);
    for (std::size_t q = 1; q < top; ++q) ranks[q] = boundary_rank(cx, a, idx, q);
    std::vector<std::int64_t> out(top);
    for (std::size_t q = 0; q < top; ++q) {
        out[q] = static_cast<std::int64_t>(idx.cells_by_deg[q].size()) -
                 static_cast<std::int64_t>(ranks[q]) - static_cast<std::int64_t>(ranks[q + 1]);
    }
    return out;
}

Polynomial poincare(const LefschetzComplex& cx, const CellSet& a) {
    return Polynomial(betti(cx, a));
}

bool is_zero_space(const LefschetzComplex& cx, const CellSet& a) {
    return poincare(cx, a).is_zero();
}

Polynomial relative_poincare_crosscheck(const LefschetzComplex& cx, const CellSet& a,
                                        const CellSet& b) {
    if (!cx.is_closed(a) || !cx.is_closed(b))
        throw validation_error("relative poincare: subsets must be closed", {});
    if (!a.subset_of(b))
        throw validation_error("relative poincare: a must be contained in b", {});
    // Quotient chain complex R(b)/R(a): generators are cells of b \ a, the
    // boundary is the full operator on b followed by projection. This is a
    // different route from poincare(b - a), which grabs only coefficients
    // internal to the difference; the two agree because a is closed.
    CellSet diff = b - a;
    if (diff.empty()) return Polynomial();
    DegreeIndex idx(cx, diff);
    std::size_t top = idx.cells_by_deg.size();
    std::vector<std::size_t> ranks(top + 1, 0);
    for (std::size_t q = 1; q < top; ++q) {
        const auto& dom = idx.cells_by_deg[q];
        const auto& pos = idx.pos_by_deg[q - 1];
        std::size_t nrows = idx.cells_by_deg[q - 1].size();
        if (dom.empty() || nrows == 0) continue;
        if (cx.field() == Coeff::Mod2) {
            std::vector<boost::dynamic_bitset<>> cols;
            for (CellId x : dom) {
                boost::dynamic_bitset<> col(nrows);
                for (const auto& [y, v] : cx.facets(x)) {
                    (void)v;
                    // Projection: facets inside a vanish in the quotient.
                    if (b.contains(y) && !a.contains(y) && cx.dim(y) == static_cast<int>(q) - 1)
                        col.set(pos.at(y));
                }
                cols.push_back(std::move(col));
            }
            ranks[q] = rank_mod2(std::move(cols));
        } else {
            std::vector<std::map<std::size_t, Rational>> cols;
            for (CellId x : dom) {
                std::map<std::size_t, Rational> col;
                for (const auto& [y, v] : cx.facets(x))
                    if (b.contains(y) && !a.contains(y) && cx.dim(y) == static_cast<int>(q) - 1)
                        col.emplace(pos.at(y), Rational(v));
                cols.push_back(std::move(col));
            }
            ranks[q] = rank_rational(std::move(cols));
        }
    }
    std::vector<std::int64_t> out(top);
    for (std::size_t q = 0; q < top; ++q) {
        out[q] = static_cast<std::int64_t>(idx.cells_by_deg[q].size()) -
                 static_cast<std::int64_t>(ranks[q]) - static_cast<std::int64_t>(ranks[q + 1]);
    }
    return Polynomial(std::move(out));
}

} // namespace cmvf
