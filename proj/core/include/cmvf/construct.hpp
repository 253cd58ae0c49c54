#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <memory>

#include "cmvf/mvf.hpp"

namespace cmvf {

/// Vectors sampled at the vertex lattice {0,2,...,2n}^2, one per vertex.
class VectorCloud {
public:
    explicit VectorCloud(int n) : n_(n), v_(static_cast<std::size_t>(n + 1) * (n + 1), {0.0, 0.0}) {
        if (n < 1) throw validation_error("VectorCloud: n must be >= 1", {});
    }

    int n() const { return n_; }
    /// Access by lattice coordinates (both even, in [0, 2n]).
    std::array<double, 2>& at(int x, int y) { return v_[index(x, y)]; }
    const std::array<double, 2>& at(int x, int y) const { return v_[index(x, y)]; }
    bool on_lattice(int x, int y) const {
        return x >= 0 && y >= 0 && x <= 2 * n_ && y <= 2 * n_ && x % 2 == 0 && y % 2 == 0;
    }

private:
    std::size_t index(int x, int y) const {
        if (!on_lattice(x, y))
            throw validation_error("VectorCloud: not a lattice vertex",
                                   {grid_label(x, y)});
        return static_cast<std::size_t>(x / 2) +
               static_cast<std::size_t>(y / 2) * static_cast<std::size_t>(n_ + 1);
    }

    int n_;
    std::vector<std::array<double, 2>> v_;
};

/// Planar argument in [-pi, pi) via the two-branch arccos formula; the +pi
/// boundary value is normalized to -pi to honor the codomain. Throws on the
/// zero vector.
double arg(double x1, double x2);

/// Normalization into the nine direction classes: zero inside the eps-disk,
/// an axis unit vector inside the mu-cones around the half-axes, and the
/// diagonal sign pair otherwise.
std::array<int, 2> normalize_direction(double x1, double x2, double mu, double eps);

/// Grid complex plus the multivector field built on it.
struct GridField {
    std::shared_ptr<const LefschetzComplex> complex;
    MultivectorField field;
};

/// Vertex sweep order of the construction; the result is order-independent,
/// and tests pin that by comparing both sweeps.
enum class VertexOrder { RowMajor, ReverseRowMajor };

/// The raw map of the three-phase construction on an existing grid complex
/// (which must be build_cubical_grid(cloud.n())): identity start, edge
/// pairing where the endpoint normals agree across the edge, then the
/// vertex phase with its conflict guards. Assignments whose target cell
/// would fall outside the grid are skipped, and normalized vectors read off
/// the lattice count as zero.
std::vector<CellId> cmvf_theta(const LefschetzComplex& grid, const VectorCloud& cloud, double mu,
                               double eps, VertexOrder order = VertexOrder::RowMajor);

/// Full pipeline: builds the grid, runs the construction and validates the
/// resulting map into a multivector field.
GridField cmvf(const VectorCloud& cloud, double mu, double eps, Coeff field_coeff = Coeff::Mod2);

/// Default parameters when unspecified: mu = pi/8 and eps proportional to
/// the largest sampled vector norm.
double default_mu();
double default_eps(const VectorCloud& cloud);

/// Samples the planar cubic vector field with one repelling equilibrium and
/// two invariant circles on the lattice mapped affinely onto [-3,3]^2.
VectorCloud sample_ode_two_circles(int n);

/// Uniform random directions at interior vertices; boundary vertices carry
/// the deterministic inward normal (diagonal at corners). Reproducible from
/// the seed.
VectorCloud random_cloud_inward_boundary(int n, std::uint64_t seed);

/// CSV exchange format: lines "i,j,vx,vy" with even lattice coordinates.
VectorCloud read_cloud_csv(std::istream& in);
void write_cloud_csv(std::ostream& out, const VectorCloud& cloud);

} // namespace cmvf
