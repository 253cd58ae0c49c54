#include "cmvf/mvf.hpp"

#include <algorithm>
#include <cassert>

#include "cmvf/dynamics.hpp"

namespace cmvf {

namespace {

// Maximal cells of a set under the face order: members with no strictly
// larger member, i.e. not in the closure of any other member.
std::vector<CellId> maximal_cells(const LefschetzComplex& cx, const CellSet& v) {
    std::vector<CellId> maxima;
    v.for_each([&](CellId x) {
        CellSet above = cx.opn(x) & v; // members strictly above x, plus x itself
        above.erase(x);
        if (above.empty()) maxima.push_back(x);
    });
    return maxima;
}

} // namespace

MultivectorField MultivectorField::from_partition(const LefschetzComplex& cx,
                                                  const std::vector<CellSet>& parts) {
    std::vector<std::string> problems;
    CellSet seen = cx.empty_set();
    for (const auto& p : parts) {
        if (p.empty()) {
            problems.push_back("empty part");
            continue;
        }
        if (seen.intersects(p))
            problems.push_back("cell in more than one part: " +
                               cx.label((seen & p).first()));
        seen |= p;
    }
    if (seen != cx.all_cells()) {
        CellSet missing = cx.all_cells() - seen;
        missing.for_each([&](CellId c) { problems.push_back("cell not covered: " + cx.label(c)); });
    }
    if (!problems.empty())
        throw validation_error("from_partition: not a partition", problems);

    MultivectorField field;
    field.cx_ = &cx;
    field.theta_.assign(cx.size(), kNoCell);
    field.mv_index_.assign(cx.size(), 0);
    for (const auto& p : parts) {
        if (!cx.is_proper(p))
            problems.push_back("part not proper: {" + [&] {
                std::string s;
                for (const auto& l : cx.labels_of(p)) s += (s.empty() ? "" : ",") + l;
                return s;
            }() + "}");
        auto maxima = maximal_cells(cx, p);
        if (maxima.size() != 1) {
            std::string s = "part without unique maximal cell, maxima:";
            for (CellId m : maxima) s += " " + cx.label(m);
            problems.push_back(s);
            continue;
        }
        Multivector mv;
        mv.cells = p;
        mv.dominant = maxima.front();
        if (problems.empty()) mv.critical = !is_zero_space(cx, p);
        std::size_t idx = field.mvs_.size();
        p.for_each([&](CellId c) {
            field.theta_[static_cast<std::size_t>(c)] = mv.dominant;
            field.mv_index_[static_cast<std::size_t>(c)] = idx;
        });
        field.mvs_.push_back(std::move(mv));
    }
    if (!problems.empty())
        throw validation_error("from_partition: invalid multivector", problems);
    return field;
}

MultivectorField MultivectorField::from_theta(const LefschetzComplex& cx,
                                              const std::vector<CellId>& theta) {
    std::vector<std::string> problems;
    if (theta.size() != cx.size())
        throw validation_error("from_theta: map must be total on cells", {});
    for (CellId x = 0; x < static_cast<CellId>(cx.size()); ++x) {
        CellId y = theta[static_cast<std::size_t>(x)];
        if (y < 0 || y >= static_cast<CellId>(cx.size())) {
            problems.push_back("theta(" + cx.label(x) + ") out of range");
            continue;
        }
        if (!cx.closure(y).contains(x))
            problems.push_back("theta condition (i) fails: " + cx.label(x) + " not in cl " +
                               cx.label(y));
        if (theta[static_cast<std::size_t>(y)] != y)
            problems.push_back("theta condition (ii) fails: theta not idempotent at " +
                               cx.label(x));
    }
    if (problems.empty()) {
        // (iii): fibers are open in the closures of their images.
        for (CellId x = 0; x < static_cast<CellId>(cx.size()); ++x) {
            CellId y = theta[static_cast<std::size_t>(x)];
            CellSet probe = cx.opn(x) & cx.closure(y);
            probe.for_each([&](CellId z) {
                if (theta[static_cast<std::size_t>(z)] != y)
                    problems.push_back("theta condition (iii) fails: opn " + cx.label(x) +
                                       " meets cl " + cx.label(y) + " at " + cx.label(z));
            });
        }
    }
    if (!problems.empty()) throw validation_error("from_theta: invalid theta map", problems);

    std::vector<CellSet> fibers;
    std::vector<std::size_t> fiber_of(cx.size(), SIZE_MAX);
    for (CellId x = 0; x < static_cast<CellId>(cx.size()); ++x) {
        CellId y = theta[static_cast<std::size_t>(x)];
        auto& idx = fiber_of[static_cast<std::size_t>(y)];
        if (idx == SIZE_MAX) {
            idx = fibers.size();
            fibers.push_back(cx.empty_set());
        }
        fibers[idx].insert(x);
    }
    return from_partition(cx, fibers);
}

const DynGraph& MultivectorField::graph() const {
    if (!graph_) graph_ = std::make_shared<const DynGraph>(*this);
    return *graph_;
}

DynGraph::DynGraph(const MultivectorField& field) {
    const auto& cx = field.complex();
    std::size_t n = cx.size();
    up_.assign(n, kNoCell);
    down_.resize(n);
    loop_.assign(n, false);
    for (CellId x = 0; x < static_cast<CellId>(n); ++x) {
        const Multivector& mv = field.of(x);
        if (!field.dominant(x)) {
            up_[static_cast<std::size_t>(x)] = field.theta(x);
            continue;
        }
        loop_[static_cast<std::size_t>(x)] = mv.critical;
        CellSet targets = cx.closure(x) - mv.cells;
        targets.for_each([&](CellId y) { down_[static_cast<std::size_t>(x)].push_back(y); });
    }
}

std::vector<CellId> DynGraph::successors(CellId x) const {
    std::vector<CellId> out;
    if (up_[static_cast<std::size_t>(x)] != kNoCell) {
        out.push_back(up_[static_cast<std::size_t>(x)]);
        return out;
    }
    if (loop_[static_cast<std::size_t>(x)]) out.push_back(x);
    out.insert(out.end(), down_[static_cast<std::size_t>(x)].begin(),
               down_[static_cast<std::size_t>(x)].end());
    return out;
}

bool DynGraph::has_arrow(CellId x, CellId y) const {
    if (up_[static_cast<std::size_t>(x)] != kNoCell) return up_[static_cast<std::size_t>(x)] == y;
    if (x == y) return loop_[static_cast<std::size_t>(x)];
    const auto& d = down_[static_cast<std::size_t>(x)];
    return std::find(d.begin(), d.end(), y) != d.end();
}

bool is_vector_field(const MultivectorField& field) {
    return std::all_of(field.multivectors().begin(), field.multivectors().end(),
                       [](const Multivector& v) { return v.cells.count() <= 2; });
}

bool is_refinement(const MultivectorField& coarse, const MultivectorField& fine) {
    if (&coarse.complex() != &fine.complex())
        throw validation_error("is_refinement: fields live on different complexes", {});
    // Every fine multivector must sit inside one coarse multivector.
    for (const auto& v : fine.multivectors()) {
        CellId first = v.cells.first();
        if (!v.cells.subset_of(coarse.of(first).cells)) return false;
    }
    return true;
}

bool is_forman_refinement(const MultivectorField& coarse, const MultivectorField& fine) {
    if (!is_refinement(coarse, fine) || !is_vector_field(fine)) return false;
    for (const auto& v : coarse.multivectors()) {
        std::size_t critical_vectors = 0;
        std::vector<CellSet> inner;
        v.cells.for_each([&](CellId c) {
            if (fine.dominant(c)) {
                if (fine.of(c).critical) ++critical_vectors;
                inner.push_back(fine.of(c).cells);
            }
        });
        if (critical_vectors > 1) return false;
        if (!v.critical) {
            // Proper refinement: regular multivectors must carry no
            // dynamics of the fine field.
            RestrictedField r = restrict_field(fine, v.cells);
            if (!invariant_part(r.field, r.complex->all_cells()).empty()) return false;
        }
    }
    return true;
}

bool is_acyclic(const MultivectorField& field) {
    const auto& cx = field.complex();
    auto sccs = strongly_connected_components(field, cx.all_cells());
    const auto& g = field.graph();
    for (const auto& comp : sccs) {
        if (comp.size() > 1) return false;
        if (g.loop(comp.front())) return false;
    }
    return true;
}

bool zero_space_check_acyclic(const MultivectorField& field) {
    if (!is_acyclic(field))
        throw validation_error("zero_space_check_acyclic: field is not acyclic", {});
    for (const auto& v : field.multivectors())
        if (v.critical)
            throw validation_error("zero_space_check_acyclic: critical multivector present",
                                   {field.complex().label(v.dominant)});
    return is_zero_space(field.complex(), field.complex().all_cells());
}

RestrictedField restrict_field(const MultivectorField& field, const CellSet& a) {
    const auto& cx = field.complex();
    CellSet compat = a;
    a.for_each([&](CellId c) {
        if (!field.of(c).cells.subset_of(a)) compat.erase(c);
    });
    if (compat != a)
        throw validation_error("restrict_field: subset is not V-compatible",
                               cx.labels_of(a - compat));
    RestrictedField out;
    out.complex = std::make_shared<const LefschetzComplex>(cx.restrict(a));
    out.to_parent.reserve(a.count());
    out.from_parent.assign(cx.size(), kNoCell);
    a.for_each([&](CellId c) {
        out.from_parent[static_cast<std::size_t>(c)] = static_cast<CellId>(out.to_parent.size());
        out.to_parent.push_back(c);
    });
    std::vector<CellSet> parts;
    for (const auto& v : field.multivectors()) {
        if (!v.cells.subset_of(a)) continue;
        CellSet p(out.complex->size());
        v.cells.for_each([&](CellId c) { p.insert(out.from_parent[static_cast<std::size_t>(c)]); });
        parts.push_back(std::move(p));
    }
    out.field = MultivectorField::from_partition(*out.complex, parts);
    return out;
}

} // namespace cmvf
