#include "cmvf/construct.hpp"

#include <cmath>
#include <iomanip>
#include <istream>
#include <limits>
#include <ostream>
#include <random>
#include <sstream>

namespace cmvf {

namespace {

constexpr double kPi = 3.14159265358979323846;

int sgn(double v) { return v > 0 ? 1 : v < 0 ? -1 : 0; }

struct Lattice {
    const LefschetzComplex* cx;
    int n;

    bool in_grid(int x, int y) const { return x >= 0 && y >= 0 && x <= 2 * n && y <= 2 * n; }
    CellId at(int x, int y) const { return cx->require(grid_label(x, y)); }
};

std::array<int, 2> vbar_at(const VectorCloud& cloud, double mu, double eps, int x, int y) {
    if (!cloud.on_lattice(x, y)) return {0, 0};
    const auto& v = cloud.at(x, y);
    return normalize_direction(v[0], v[1], mu, eps);
}

} // namespace

double arg(double x1, double x2) {
    double norm = std::sqrt(x1 * x1 + x2 * x2);
    if (norm == 0.0) throw validation_error("arg: zero vector", {});
    double a = std::acos(x1 / norm);
    double result = x2 >= 0 ? a : -a;
    if (result >= kPi) result = -kPi; // codomain [-pi, pi)
    return result;
}

std::array<int, 2> normalize_direction(double x1, double x2, double mu, double eps) {
    if (x1 * x1 + x2 * x2 <= eps * eps) return {0, 0};
    double a = arg(x1, x2);
    if (std::abs(a) <= mu || std::abs(a) >= kPi - mu) return {sgn(x1), 0};
    if (std::abs(a - kPi / 2) <= mu || std::abs(a + kPi / 2) <= mu) return {0, sgn(x2)};
    return {sgn(x1), sgn(x2)};
}

std::vector<CellId> cmvf_theta(const LefschetzComplex& grid, const VectorCloud& cloud, double mu,
                               double eps, VertexOrder order) {
    int n = cloud.n();
    Lattice lat{&grid, n};
    if (grid.size() != static_cast<std::size_t>((2 * n + 1) * (2 * n + 1)))
        throw validation_error("cmvf_theta: complex is not the grid of the cloud", {});

    std::vector<CellId> theta(grid.size());
    for (CellId c = 0; c < static_cast<CellId>(grid.size()); ++c) theta[static_cast<std::size_t>(c)] = c;
    auto vbar = [&](int x, int y) { return vbar_at(cloud, mu, eps, x, y); };
    auto assign = [&](CellId from, int tx, int ty) {
        if (!lat.in_grid(tx, ty)) return;
        theta[static_cast<std::size_t>(from)] = lat.at(tx, ty);
    };

    // Edge phase: pair an edge with the square across it when the endpoint
    // normals agree in sign along the orthogonal axis.
    for (int x = 0; x <= 2 * n; ++x) {
        for (int y = 0; y <= 2 * n; ++y) {
            if ((x + y) % 2 == 0) continue; // not an edge
            bool along_first = (x % 2 == 1);
            int perp = along_first ? 1 : 0; // orthogonal axis, 0-indexed
            std::array<int, 2> minus =
                along_first ? vbar(x - 1, y) : vbar(x, y - 1);
            std::array<int, 2> plus = along_first ? vbar(x + 1, y) : vbar(x, y + 1);
            if (minus[perp] * plus[perp] > 0) {
                int tx = x + (perp == 0 ? minus[0] : 0);
                int ty = y + (perp == 1 ? minus[1] : 0);
                assign(lat.at(x, y), tx, ty);
            }
        }
    }

    // Vertex phase.
    std::vector<std::pair<int, int>> vertices;
    for (int y = 0; y <= 2 * n; y += 2)
        for (int x = 0; x <= 2 * n; x += 2) vertices.emplace_back(x, y);
    if (order == VertexOrder::ReverseRowMajor) std::reverse(vertices.begin(), vertices.end());

    for (auto [x, y] : vertices) {
        std::array<int, 2> s = vbar(x, y);
        if (s[0] == 0 && s[1] == 0) continue;
        CellId v = lat.at(x, y);
        if (s[0] * s[1] == 0) {
            assign(v, x + s[0], y + s[1]); // the edge the vector points along
            continue;
        }
        int e1x = x + s[0], e1y = y; // edge along the first axis
        int e2x = x, e2y = y + s[1]; // edge along the second axis
        bool t1 = lat.in_grid(e1x, e1y) && theta[static_cast<std::size_t>(lat.at(e1x, e1y))] == lat.at(e1x, e1y);
        bool t2 = lat.in_grid(e2x, e2y) && theta[static_cast<std::size_t>(lat.at(e2x, e2y))] == lat.at(e2x, e2y);
        bool c1 = t1 && vbar(x + 2 * s[0], y)[0] * s[0] < 0;
        bool c2 = t2 && vbar(x, y + 2 * s[1])[1] * s[1] < 0;
        if (c1 && c2) continue;
        if (!c1 && !c2) {
            if (lat.in_grid(x + s[0], y + s[1])) {
                CellId q = lat.at(x + s[0], y + s[1]);
                theta[static_cast<std::size_t>(lat.at(e1x, e1y))] = q;
                theta[static_cast<std::size_t>(lat.at(e2x, e2y))] = q;
                theta[static_cast<std::size_t>(v)] = q;
            }
        } else {
            if (c1 && t2) theta[static_cast<std::size_t>(v)] = lat.at(e2x, e2y);
            if (c2 && t1) theta[static_cast<std::size_t>(v)] = lat.at(e1x, e1y);
        }
    }
    return theta;
}

GridField cmvf(const VectorCloud& cloud, double mu, double eps, Coeff field_coeff) {
    GridField out;
    out.complex = std::make_shared<const LefschetzComplex>(build_cubical_grid(cloud.n(), field_coeff));
    auto theta = cmvf_theta(*out.complex, cloud, mu, eps);
    out.field = MultivectorField::from_theta(*out.complex, theta);
    return out;
}

double default_mu() { return kPi / 8; }

double default_eps(const VectorCloud& cloud) {
    double max_norm = 0;
    int n = cloud.n();
    for (int y = 0; y <= 2 * n; y += 2)
        for (int x = 0; x <= 2 * n; x += 2) {
            const auto& v = cloud.at(x, y);
            max_norm = std::max(max_norm, std::hypot(v[0], v[1]));
        }
    return max_norm > 0 ? 1e-6 * max_norm : 1e-12;
}

VectorCloud sample_ode_two_circles(int n) {
    VectorCloud cloud(n);
    for (int j = 0; j <= n; ++j) {
        for (int i = 0; i <= n; ++i) {
            double x1 = -3.0 + 6.0 * i / n;
            double x2 = -3.0 + 6.0 * j / n;
            double r2 = x1 * x1 + x2 * x2;
            double radial = (r2 - 4.0) * (r2 - 1.0);
            cloud.at(2 * i, 2 * j) = {-x2 + x1 * radial, x1 + x2 * radial};
        }
    }
    return cloud;
}

VectorCloud random_cloud_inward_boundary(int n, std::uint64_t seed) {
    VectorCloud cloud(n);
    std::mt19937_64 rng(seed);
    auto uniform01 = [&rng] {
        return static_cast<double>(rng() >> 11) * 0x1.0p-53; // portable across stdlibs
    };
    for (int j = 0; j <= n; ++j) {
        for (int i = 0; i <= n; ++i) {
            bool left = i == 0, right = i == n, bottom = j == 0, top = j == n;
            if (left || right || bottom || top) {
                double vx = left ? 1.0 : right ? -1.0 : 0.0;
                double vy = bottom ? 1.0 : top ? -1.0 : 0.0;
                cloud.at(2 * i, 2 * j) = {vx, vy};
            } else {
                double angle = 2 * kPi * uniform01();
                cloud.at(2 * i, 2 * j) = {std::cos(angle), std::sin(angle)};
            }
        }
    }
    return cloud;
}

VectorCloud read_cloud_csv(std::istream& in) {
    struct Entry {
        int x, y;
        double vx, vy;
    };
    std::vector<Entry> entries;
    int max_coord = 0;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty()) continue;
        std::istringstream ss(line);
        Entry e;
        char comma;
        if (!(ss >> e.x >> comma >> e.y >> comma >> e.vx >> comma >> e.vy))
            throw validation_error("cloud csv: malformed line " + std::to_string(line_no), {line});
        if (e.x % 2 || e.y % 2 || e.x < 0 || e.y < 0)
            throw validation_error("cloud csv: coordinates must be even and nonnegative",
                                   {std::to_string(line_no)});
        max_coord = std::max({max_coord, e.x, e.y});
        entries.push_back(e);
    }
    if (entries.empty()) throw validation_error("cloud csv: empty input", {});
    int n = max_coord / 2;
    if (n < 1) throw validation_error("cloud csv: grid too small", {});
    VectorCloud cloud(n);
    std::vector<bool> seen(static_cast<std::size_t>(n + 1) * (n + 1), false);
    for (const auto& e : entries) {
        cloud.at(e.x, e.y) = {e.vx, e.vy};
        seen[static_cast<std::size_t>(e.x / 2) + static_cast<std::size_t>(e.y / 2) * (n + 1)] = true;
    }
    for (bool s : seen)
        if (!s) throw validation_error("cloud csv: missing lattice vertices", {});
    return cloud;
}

void write_cloud_csv(std::ostream& out, const VectorCloud& cloud) {
    int n = cloud.n();
    out << std::setprecision(std::numeric_limits<double>::max_digits10);
    for (int j = 0; j <= n; ++j)
        for (int i = 0; i <= n; ++i) {
            const auto& v = cloud.at(2 * i, 2 * j);
            out << 2 * i << "," << 2 * j << "," << v[0] << "," << v[1] << "\n";
        }
}

} // namespace cmvf
