#include "cmvf/lefschetz.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <set>

namespace cmvf {

namespace {

std::int64_t field_normalize(Coeff field, std::int64_t v) {
    if (field == Coeff::Mod2) {
        v %= 2;
        return v < 0 ? v + 2 : v;
    }
    return v;
}

} // namespace

LefschetzComplex::LefschetzComplex(Coeff field, std::vector<CellSpec> cells,
                                   const std::vector<KappaSpec>& kappa)
    : field_(field) {
    labels_.reserve(cells.size());
    dims_.reserve(cells.size());
    for (auto& c : cells) {
        if (by_label_.count(c.label))
            throw validation_error("duplicate cell label", {c.label});
        by_label_.emplace(c.label, static_cast<CellId>(labels_.size()));
        labels_.push_back(std::move(c.label));
        dims_.push_back(c.dim);
        top_dim_ = std::max(top_dim_, c.dim);
    }
    facets_.resize(labels_.size());
    cofacets_.resize(labels_.size());
    for (const auto& k : kappa) {
        std::int64_t v = field_normalize(field_, k.coeff);
        if (v == 0) continue;
        CellId x = require(k.x), y = require(k.y);
        facets_[static_cast<std::size_t>(x)].emplace_back(y, v);
        cofacets_[static_cast<std::size_t>(y)].push_back(x);
    }
    for (auto& row : facets_)
        std::sort(row.begin(), row.end());
    for (auto& col : cofacets_)
        std::sort(col.begin(), col.end());
}

std::optional<CellId> LefschetzComplex::find(const std::string& label) const {
    auto it = by_label_.find(label);
    if (it == by_label_.end()) return std::nullopt;
    return it->second;
}

CellId LefschetzComplex::require(const std::string& label) const {
    auto it = by_label_.find(label);
    if (it == by_label_.end()) throw validation_error("unknown cell", {label});
    return it->second;
}

std::int64_t LefschetzComplex::kappa(CellId x, CellId y) const {
    for (const auto& [f, v] : facets(x))
        if (f == y) return v;
    return 0;
}

CellSet LefschetzComplex::set_of_labels(const std::vector<std::string>& labels) const {
    CellSet s(size());
    for (const auto& l : labels) s.insert(require(l));
    return s;
}

std::vector<std::string> LefschetzComplex::labels_of(const CellSet& a) const {
    std::vector<std::string> out;
    out.reserve(a.count());
    a.for_each([&](CellId c) { out.push_back(label(c)); });
    return out;
}

CellSet LefschetzComplex::closure(const CellSet& a) const {
    CellSet result = a;
    std::vector<CellId> stack = a.to_vector();
    while (!stack.empty()) {
        CellId x = stack.back();
        stack.pop_back();
        for (const auto& [y, v] : facets(x)) {
            (void)v;
            if (!result.contains(y)) {
                result.insert(y);
                stack.push_back(y);
            }
        }
    }
    return result;
}

CellSet LefschetzComplex::closure(CellId x) const {
    CellSet s(size());
    s.insert(x);
    return closure(s);
}

CellSet LefschetzComplex::opn(CellId x) const {
    CellSet result(size());
    result.insert(x);
    std::vector<CellId> stack{x};
    while (!stack.empty()) {
        CellId y = stack.back();
        stack.pop_back();
        for (CellId c : cofacets(y)) {
            if (!result.contains(c)) {
                result.insert(c);
                stack.push_back(c);
            }
        }
    }
    return result;
}

CellSet LefschetzComplex::open_hull(const CellSet& a) const {
    CellSet result = a;
    std::vector<CellId> stack = a.to_vector();
    while (!stack.empty()) {
        CellId y = stack.back();
        stack.pop_back();
        for (CellId c : cofacets(y)) {
            if (!result.contains(c)) {
                result.insert(c);
                stack.push_back(c);
            }
        }
    }
    return result;
}

CellSet LefschetzComplex::mouth(const CellSet& a) const { return closure(a) - a; }

bool LefschetzComplex::is_closed(const CellSet& a) const { return closure(a) == a; }

bool LefschetzComplex::is_open(const CellSet& a) const { return is_closed(a.complement()); }

bool LefschetzComplex::is_proper(const CellSet& a) const {
    bool mouth_closed = is_closed(mouth(a));
    assert(mouth_closed == is_proper_convexity(a));
    return mouth_closed;
}

bool LefschetzComplex::is_proper_convexity(const CellSet& a) const {
    // a is convex in the face order iff every cell both below some member
    // and above some member belongs to a.
    CellSet between = closure(a) & open_hull(a);
    return between.subset_of(a);
}

std::string LefschetzComplex::Violation::describe(const LefschetzComplex& cx) const {
    if (kind == Kind::Grading)
        return "grading: kappa(" + cx.label(x) + "," + cx.label(z) + ") nonzero but dim gap != 1";
    return "kappa condition fails at (" + cx.label(x) + "," + cx.label(z) + ")";
}

LefschetzComplex::ValidationReport LefschetzComplex::validate() const {
    ValidationReport report;
    for (CellId x = 0; x < static_cast<CellId>(size()); ++x) {
        for (const auto& [y, v] : facets(x)) {
            (void)v;
            if (dim(x) != dim(y) + 1)
                report.violations.push_back({Violation::Kind::Grading, x, y});
        }
    }
    // sum_y kappa(x,y) kappa(y,z) = 0 in the field, for every x, z.
    for (CellId x = 0; x < static_cast<CellId>(size()); ++x) {
        std::map<CellId, std::int64_t> sums;
        for (const auto& [y, vxy] : facets(x))
            for (const auto& [z, vyz] : facets(y)) sums[z] += vxy * vyz;
        for (const auto& [z, s] : sums) {
            if (field_normalize(field_, s) != 0)
                report.violations.push_back({Violation::Kind::KappaCondition, x, z});
        }
    }
    return report;
}

LefschetzComplex LefschetzComplex::restrict(const CellSet& a) const {
    if (!is_proper(a)) {
        CellSet mo = mouth(a);
        throw validation_error("restrict: subset is not proper", labels_of(closure(mo) - mo));
    }
    std::vector<CellSpec> cells;
    cells.reserve(a.count());
    a.for_each([&](CellId c) { cells.push_back({label(c), dim(c)}); });
    std::vector<KappaSpec> kappa;
    a.for_each([&](CellId x) {
        for (const auto& [y, v] : facets(x))
            if (a.contains(y)) kappa.push_back({label(x), label(y), v});
    });
    return LefschetzComplex(field_, std::move(cells), kappa);
}

std::string grid_label(int x, int y) {
    return "(" + std::to_string(x) + "," + std::to_string(y) + ")";
}

LefschetzComplex build_cubical_grid(int n, Coeff field) {
    if (n < 1) throw validation_error("build_cubical_grid: n must be >= 1", {});
    std::vector<LefschetzComplex::CellSpec> cells;
    std::vector<LefschetzComplex::KappaSpec> kappa;
    for (int x = 0; x <= 2 * n; ++x) {
        for (int y = 0; y <= 2 * n; ++y) {
            int d = (x % 2) + (y % 2);
            cells.push_back({grid_label(x, y), d});
            if (d == 1) {
                // Edge: boundary = head - tail along its parallel axis.
                if (x % 2) {
                    kappa.push_back({grid_label(x, y), grid_label(x + 1, y), 1});
                    kappa.push_back({grid_label(x, y), grid_label(x - 1, y), -1});
                } else {
                    kappa.push_back({grid_label(x, y), grid_label(x, y + 1), 1});
                    kappa.push_back({grid_label(x, y), grid_label(x, y - 1), -1});
                }
            } else if (d == 2) {
                // d(I1 x I2) = dI1 x I2 - I1 x dI2.
                kappa.push_back({grid_label(x, y), grid_label(x + 1, y), 1});
                kappa.push_back({grid_label(x, y), grid_label(x - 1, y), -1});
                kappa.push_back({grid_label(x, y), grid_label(x, y + 1), -1});
                kappa.push_back({grid_label(x, y), grid_label(x, y - 1), 1});
            }
        }
    }
    return LefschetzComplex(field, std::move(cells), kappa);
}

namespace {

std::string simplex_label(const std::vector<std::string>& verts, bool concat) {
    std::string out;
    for (std::size_t i = 0; i < verts.size(); ++i) {
        if (i && !concat) out += ",";
        out += verts[i];
    }
    return out;
}

} // namespace

LefschetzComplex build_simplicial(const std::vector<std::vector<std::string>>& facets, Coeff field) {
    bool concat = true;
    std::set<std::vector<std::string>> simplices;
    for (const auto& f : facets) {
        std::vector<std::string> verts = f;
        std::sort(verts.begin(), verts.end());
        if (std::adjacent_find(verts.begin(), verts.end()) != verts.end())
            throw validation_error("build_simplicial: facet with repeated vertex",
                                   {simplex_label(f, false)});
        for (const auto& v : verts)
            if (v.size() != 1) concat = false;
        // All nonempty subsets of the facet.
        std::size_t m = verts.size();
        for (std::size_t mask = 1; mask < (std::size_t{1} << m); ++mask) {
            std::vector<std::string> sub;
            for (std::size_t i = 0; i < m; ++i)
                if (mask & (std::size_t{1} << i)) sub.push_back(verts[i]);
            simplices.insert(std::move(sub));
        }
    }
    std::vector<LefschetzComplex::CellSpec> cells;
    std::vector<LefschetzComplex::KappaSpec> kappa;
    for (const auto& s : simplices) {
        cells.push_back({simplex_label(s, concat), static_cast<int>(s.size()) - 1});
        if (s.size() > 1) {
            std::int64_t sign = 1;
            for (std::size_t i = 0; i < s.size(); ++i) {
                std::vector<std::string> face;
                for (std::size_t j = 0; j < s.size(); ++j)
                    if (j != i) face.push_back(s[j]);
                kappa.push_back({simplex_label(s, concat), simplex_label(face, concat), sign});
                sign = -sign;
            }
        }
    }
    return LefschetzComplex(field, std::move(cells), kappa);
}

} // namespace cmvf
