#include "fixtures.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <cmath>
#include <set>

namespace cmvf::testing {

SegmentFixture::SegmentFixture() : cx(build_simplicial({{"a", "b"}})) {
    field = MultivectorField::from_partition(
        cx, {cx.set_of_labels({"a", "ab"}), cx.set_of_labels({"b"})});
}

TriangleFixture::TriangleFixture() : cx(build_simplicial({{"A", "B", "C"}})) {
    field = MultivectorField::from_partition(
        cx, {cx.set_of_labels({"A"}), cx.set_of_labels({"B"}), cx.set_of_labels({"C", "BC"}),
             cx.set_of_labels({"AB", "AC", "ABC"})});
}

RingFixture::RingFixture() {
    auto id = [](const std::string& base, int k) { return base + std::to_string(k % 10); };
    std::vector<LefschetzComplex::CellSpec> cells;
    std::vector<LefschetzComplex::KappaSpec> kappa;
    for (int k = 0; k < 10; ++k) {
        cells.push_back({id("i", k), 0});
        cells.push_back({id("o", k), 0});
    }
    for (int k = 0; k < 10; ++k) {
        cells.push_back({id("Ei", k), 1});
        kappa.push_back({id("Ei", k), id("i", k), 1});
        kappa.push_back({id("Ei", k), id("i", k + 1), 1});
        cells.push_back({id("Eo", k), 1});
        kappa.push_back({id("Eo", k), id("o", k), 1});
        kappa.push_back({id("Eo", k), id("o", k + 1), 1});
        cells.push_back({id("R", k), 1});
        kappa.push_back({id("R", k), id("o", k), 1});
        kappa.push_back({id("R", k), id("i", k), 1});
    }
    for (int k = 0; k < 10; ++k) {
        cells.push_back({id("Q", k), 2});
        kappa.push_back({id("Q", k), id("Eo", k), 1});
        kappa.push_back({id("Q", k), id("Ei", k), 1});
        kappa.push_back({id("Q", k), id("R", k), 1});
        kappa.push_back({id("Q", k), id("R", k + 1), 1});
    }
    // Flap square over Eo0; its outer rim was removed, leaving two dangling
    // edges at o0 and o1.
    cells.push_back({"Ef0", 1});
    kappa.push_back({"Ef0", "o0", 1});
    cells.push_back({"Ef1", 1});
    kappa.push_back({"Ef1", "o1", 1});
    cells.push_back({"Qf", 2});
    kappa.push_back({"Qf", "Eo0", 1});
    kappa.push_back({"Qf", "Ef0", 1});
    kappa.push_back({"Qf", "Ef1", 1});
    cx = LefschetzComplex(Coeff::Mod2, std::move(cells), kappa);

    std::vector<CellSet> parts;
    for (int k = 0; k < 10; ++k)
        parts.push_back(cx.set_of_labels({id("i", k), id("Ei", k)}));
    for (int k = 0; k < 10; ++k)
        parts.push_back(cx.set_of_labels({id("R", k), id("Q", k)}));
    parts.push_back(cx.set_of_labels({"Qf"}));
    parts.push_back(cx.set_of_labels({"o5"}));
    parts.push_back(cx.set_of_labels({"Eo0"}));
    parts.push_back(cx.set_of_labels({"Eo3"}));
    parts.push_back(cx.set_of_labels({"Eo5"}));
    parts.push_back(cx.set_of_labels({"o0", "Ef0"}));
    parts.push_back(cx.set_of_labels({"o1", "Ef1"}));
    parts.push_back(cx.set_of_labels({"o2", "Eo1"}));
    parts.push_back(cx.set_of_labels({"o3", "Eo2"}));
    parts.push_back(cx.set_of_labels({"o4", "Eo4"}));
    parts.push_back(cx.set_of_labels({"o6", "Eo6"}));
    parts.push_back(cx.set_of_labels({"o7", "Eo7"}));
    parts.push_back(cx.set_of_labels({"o8", "Eo8"}));
    parts.push_back(cx.set_of_labels({"o9", "Eo9"}));
    field = MultivectorField::from_partition(cx, parts);

    m_dot = cx.set_of_labels({"o5"});
    m_minus = cx.set_of_labels({"Eo5"});
    m_circ = cx.set_of_labels({"Qf"});
    m_times = cx.set_of_labels({"Eo0", "Eo3"});
    m_triangle = cx.empty_set();
    m_diamond = cx.empty_set();
    for (int k = 0; k < 10; ++k) {
        m_triangle |= cx.set_of_labels({id("R", k), id("Q", k)});
        m_diamond |= cx.set_of_labels({id("i", k), id("Ei", k)});
    }
}

RefinementFixture::RefinementFixture() : cx(build_cubical_grid(1)) {
    auto singles = [&](std::vector<CellSet> parts, const std::vector<std::string>& rest) {
        for (const auto& l : rest) parts.push_back(cx.set_of_labels({l}));
        return parts;
    };
    coarse = MultivectorField::from_partition(
        cx, singles({cx.set_of_labels({"(0,0)", "(1,0)", "(0,1)", "(1,1)"})},
                    {"(2,0)", "(0,2)", "(2,2)", "(2,1)", "(1,2)"}));
    fine1 = MultivectorField::from_partition(
        cx, singles({cx.set_of_labels({"(0,0)", "(1,0)"}), cx.set_of_labels({"(0,1)", "(1,1)"})},
                    {"(2,0)", "(0,2)", "(2,2)", "(2,1)", "(1,2)"}));
    fine2 = MultivectorField::from_partition(
        cx, singles({cx.set_of_labels({"(0,0)", "(0,1)"}), cx.set_of_labels({"(1,0)", "(1,1)"})},
                    {"(2,0)", "(0,2)", "(2,2)", "(2,1)", "(1,2)"}));
}

namespace {

std::int64_t imod(std::int64_t v, std::int64_t m) {
    v %= m;
    return v < 0 ? v + m : v;
}

std::size_t dense_rank_mod2(std::vector<std::vector<std::int64_t>> m) {
    std::size_t rows = m.size();
    if (rows == 0) return 0;
    std::size_t cols = m[0].size();
    std::size_t rank = 0;
    for (std::size_t c = 0; c < cols && rank < rows; ++c) {
        std::size_t pivot = rank;
        while (pivot < rows && imod(m[pivot][c], 2) == 0) ++pivot;
        if (pivot == rows) continue;
        std::swap(m[rank], m[pivot]);
        for (std::size_t r = 0; r < rows; ++r) {
            if (r == rank || imod(m[r][c], 2) == 0) continue;
            for (std::size_t j = 0; j < cols; ++j) m[r][j] = imod(m[r][j] + m[rank][j], 2);
        }
        ++rank;
    }
    return rank;
}

std::size_t dense_rank_rational(std::vector<std::vector<boost::multiprecision::cpp_rational>> m) {
    std::size_t rows = m.size();
    if (rows == 0) return 0;
    std::size_t cols = m[0].size();
    std::size_t rank = 0;
    for (std::size_t c = 0; c < cols && rank < rows; ++c) {
        std::size_t pivot = rank;
        while (pivot < rows && m[pivot][c] == 0) ++pivot;
        if (pivot == rows) continue;
        std::swap(m[rank], m[pivot]);
        for (std::size_t r = 0; r < rows; ++r) {
            if (r == rank || m[r][c] == 0) continue;
            auto f = m[r][c] / m[rank][c];
            for (std::size_t j = 0; j < cols; ++j) m[r][j] -= f * m[rank][j];
        }
        ++rank;
    }
    return rank;
}

} // namespace

std::vector<std::int64_t> betti_dense_oracle(const LefschetzComplex& cx, const CellSet& a) {
    if (a.empty()) return {};
    int top = 0;
    a.for_each([&](CellId c) { top = std::max(top, cx.dim(c)); });
    std::vector<std::vector<CellId>> by_deg(static_cast<std::size_t>(top) + 1);
    a.for_each([&](CellId c) { by_deg[static_cast<std::size_t>(cx.dim(c))].push_back(c); });

    std::vector<std::size_t> ranks(static_cast<std::size_t>(top) + 2, 0);
    for (int q = 1; q <= top; ++q) {
        const auto& dom = by_deg[static_cast<std::size_t>(q)];
        const auto& img = by_deg[static_cast<std::size_t>(q) - 1];
        if (dom.empty() || img.empty()) continue;
        if (cx.field() == Coeff::Mod2) {
            std::vector<std::vector<std::int64_t>> m(img.size(),
                                                     std::vector<std::int64_t>(dom.size(), 0));
            for (std::size_t j = 0; j < dom.size(); ++j)
                for (std::size_t i = 0; i < img.size(); ++i)
                    m[i][j] = cx.kappa(dom[j], img[i]);
            ranks[static_cast<std::size_t>(q)] = dense_rank_mod2(std::move(m));
        } else {
            std::vector<std::vector<boost::multiprecision::cpp_rational>> m(
                img.size(), std::vector<boost::multiprecision::cpp_rational>(dom.size(), 0));
            for (std::size_t j = 0; j < dom.size(); ++j)
                for (std::size_t i = 0; i < img.size(); ++i)
                    m[i][j] = cx.kappa(dom[j], img[i]);
            ranks[static_cast<std::size_t>(q)] = dense_rank_rational(std::move(m));
        }
    }
    std::vector<std::int64_t> out(static_cast<std::size_t>(top) + 1);
    for (int q = 0; q <= top; ++q)
        out[static_cast<std::size_t>(q)] =
            static_cast<std::int64_t>(by_deg[static_cast<std::size_t>(q)].size()) -
            static_cast<std::int64_t>(ranks[static_cast<std::size_t>(q)]) -
            static_cast<std::int64_t>(ranks[static_cast<std::size_t>(q) + 1]);
    while (!out.empty() && out.back() == 0) out.pop_back();
    return out;
}

namespace {

// Self-contained helpers for the literal pseudocode transcription.
struct Pt {
    int x, y;
    bool operator<(const Pt& o) const { return x < o.x || (x == o.x && y < o.y); }
    bool operator==(const Pt& o) const = default;
};

struct OracleState {
    int n;
    const VectorCloud* cloud;
    double mu, eps;
    std::map<Pt, Pt> theta;

    bool exists(Pt p) const { return p.x >= 0 && p.y >= 0 && p.x <= 2 * n && p.y <= 2 * n; }

    std::array<double, 2> raw(Pt p) const {
        if (!exists(p) || p.x % 2 || p.y % 2) return {0.0, 0.0};
        return cloud->at(p.x, p.y);
    }

    std::array<int, 2> dbar(Pt p) const {
        auto [a, b] = raw(p);
        double pi = 3.14159265358979323846;
        if (a * a + b * b <= eps * eps) return {0, 0};
        double angle = std::atan2(b, a); // equals the two-branch arccos on [-pi, pi]
        if (angle >= pi) angle = -pi;
        auto sg = [](double v) { return v > 0 ? 1 : v < 0 ? -1 : 0; };
        if (std::fabs(angle) <= mu || std::fabs(angle) >= pi - mu) return {sg(a), 0};
        if (std::fabs(angle - pi / 2) <= mu || std::fabs(angle + pi / 2) <= mu) return {0, sg(b)};
        return {sg(a), sg(b)};
    }

    void set(Pt from, Pt to) {
        if (exists(to)) theta[from] = to;
    }
};

} // namespace

std::map<std::string, std::string> table1_oracle(const VectorCloud& cloud, double mu, double eps) {
    OracleState st{cloud.n(), &cloud, mu, eps, {}};
    int n = st.n;
    for (int x = 0; x <= 2 * n; ++x)
        for (int y = 0; y <= 2 * n; ++y) st.theta[{x, y}] = {x, y};

    for (int x = 0; x <= 2 * n; ++x) {
        for (int y = 0; y <= 2 * n; ++y) {
            if ((x % 2) + (y % 2) != 1) continue;
            // i := index of the axis orthogonal to the edge
            int i = (x % 2) ? 2 : 1;
            Pt minus = (x % 2) ? Pt{x - 1, y} : Pt{x, y - 1};
            Pt plus = (x % 2) ? Pt{x + 1, y} : Pt{x, y + 1};
            auto sm = st.dbar(minus), sp = st.dbar(plus);
            int smi = i == 1 ? sm[0] : sm[1];
            int spi = i == 1 ? sp[0] : sp[1];
            if (smi * spi > 0) {
                Pt target = i == 1 ? Pt{x + smi, y} : Pt{x, y + smi};
                st.set({x, y}, target);
            }
        }
    }

    for (int y = 0; y <= 2 * n; y += 2) {
        for (int x = 0; x <= 2 * n; x += 2) {
            auto s = st.dbar({x, y});
            if (s[0] == 0 && s[1] == 0) continue;
            if (s[0] * s[1] == 0) {
                st.set({x, y}, {x + s[0], y + s[1]});
            } else {
                Pt x1{x + s[0], y}, x2{x, y + s[1]};
                bool t1 = st.exists(x1) && st.theta[x1] == x1;
                bool t2 = st.exists(x2) && st.theta[x2] == x2;
                bool c1 = t1 && st.dbar({x + 2 * s[0], y})[0] * s[0] < 0;
                bool c2 = t2 && st.dbar({x, y + 2 * s[1]})[1] * s[1] < 0;
                if (c1 && c2) continue;
                if (!c1 && !c2) {
                    Pt q{x + s[0], y + s[1]};
                    if (st.exists(q)) {
                        st.theta[x1] = q;
                        st.theta[x2] = q;
                        st.theta[{x, y}] = q;
                    }
                } else {
                    if (c1 && t2) st.theta[{x, y}] = x2;
                    if (c2 && t1) st.theta[{x, y}] = x1;
                }
            }
        }
    }

    std::map<std::string, std::string> out;
    for (const auto& [from, to] : st.theta)
        out[grid_label(from.x, from.y)] = grid_label(to.x, to.y);
    return out;
}

CellSet random_subset(const LefschetzComplex& cx, std::mt19937_64& rng, double density) {
    CellSet s(cx.size());
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (CellId c = 0; c < static_cast<CellId>(cx.size()); ++c)
        if (u(rng) < density) s.insert(c);
    return s;
}

CellSet random_proper_subset(const LefschetzComplex& cx, std::mt19937_64& rng) {
    CellSet big = cx.closure(random_subset(cx, rng, 0.35));
    CellSet cut = cx.closure(random_subset(cx, rng, 0.2));
    return big - cut;
}

MultivectorField random_field(const LefschetzComplex& cx, std::mt19937_64& rng,
                              int merge_attempts) {
    std::vector<std::size_t> part_of(cx.size());
    std::vector<CellSet> parts;
    for (CellId c = 0; c < static_cast<CellId>(cx.size()); ++c) {
        part_of[static_cast<std::size_t>(c)] = parts.size();
        CellSet s(cx.size());
        s.insert(c);
        parts.push_back(std::move(s));
    }
    auto valid_multivector = [&](const CellSet& v) {
        if (!cx.is_proper(v)) return false;
        int maxima = 0;
        v.for_each([&](CellId x) {
            CellSet above = cx.opn(x) & v;
            above.erase(x);
            if (above.empty()) ++maxima;
        });
        return maxima == 1;
    };
    std::uniform_int_distribution<std::size_t> pick(0, cx.size() - 1);
    for (int attempt = 0; attempt < merge_attempts; ++attempt) {
        CellId x = static_cast<CellId>(pick(rng));
        const auto& cof = cx.cofacets(x);
        if (cof.empty()) continue;
        CellId y = cof[rng() % cof.size()];
        std::size_t px = part_of[static_cast<std::size_t>(x)];
        std::size_t py = part_of[static_cast<std::size_t>(y)];
        if (px == py) continue;
        CellSet merged = parts[px] | parts[py];
        if (!valid_multivector(merged)) continue;
        parts[px] = merged;
        parts[py] = CellSet(cx.size());
        merged.for_each([&](CellId c) { part_of[static_cast<std::size_t>(c)] = px; });
    }
    std::vector<CellSet> nonempty;
    for (auto& p : parts)
        if (!p.empty()) nonempty.push_back(std::move(p));
    return MultivectorField::from_partition(cx, nonempty);
}

} // namespace cmvf::testing
