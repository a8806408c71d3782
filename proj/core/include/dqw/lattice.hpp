#pragma once

// Periodic hypercubic lattice geometry, site indexing, the odd/even
// elementary-hypercube partition, and complex amplitude fields over sites.

#include <complex>
#include <cstdint>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "dqw/errors.hpp"

namespace dqw {

using Complex = std::complex<double>;

enum class Parity { Odd, Even };

const char* to_string(Parity p);

// Geometry of a d-dimensional periodic lattice with even side lengths.
//
// Sites are linearised with coordinate 1 fastest:
//   index = x_1 + L_1 * (x_2 + L_2 * (x_3 + ...)).
// All side lengths must be even so that both hypercube partitions tile the
// torus.
class LatticeGeometry {
public:
    explicit LatticeGeometry(std::vector<std::int64_t> sides);

    // d-dimensional cube with equal sides.
    static LatticeGeometry cube(int dim, std::int64_t side);

    int dim() const { return static_cast<int>(sides_.size()); }
    const std::vector<std::int64_t>& sides() const { return sides_; }
    std::int64_t side(int axis) const { return sides_[static_cast<std::size_t>(axis)]; }
    std::int64_t size() const { return total_; }

    // Strict bounds check; throws InputError on any out-of-range coordinate.
    std::int64_t linear_index(std::span<const std::int64_t> coords) const;
    // Inverse of linear_index.
    std::vector<std::int64_t> coords_of(std::int64_t index) const;
    // Like linear_index but wraps coordinates periodically instead of
    // rejecting them.
    std::int64_t wrapped_index(std::span<const std::int64_t> coords) const;

    bool operator==(const LatticeGeometry& other) const { return sides_ == other.sides_; }

private:
    std::vector<std::int64_t> sides_;
    std::vector<std::int64_t> strides_;
    std::int64_t total_ = 0;
};

// Signed ring position of a 1-D site index, unwrapped into (-L/2, L/2].
std::int64_t signed_site_1d(const LatticeGeometry& g, std::int64_t index);

// Inverse of signed_site_1d: ring index of a signed position.
std::int64_t ring_index_1d(const LatticeGeometry& g, std::int64_t position);

// One parity class of the elementary-hypercube partition.
//
// Blocks are stored flat: block b occupies sites[b * block_size .. +block_size).
// Vertex order within a block enumerates offsets (eps_1, ..., eps_d) in
// {0,1}^d with eps_1 fastest, so vertex k has eps_j = (k >> (j-1)) & 1.
struct BlockList {
    Parity parity;
    int dim = 0;
    std::int64_t block_size = 0; // 2^dim
    std::vector<std::int64_t> sites;

    std::int64_t block_count() const {
        return block_size == 0 ? 0 : static_cast<std::int64_t>(sites.size()) / block_size;
    }
    std::span<const std::int64_t> block(std::int64_t b) const {
        return {sites.data() + b * block_size, static_cast<std::size_t>(block_size)};
    }
};

// Partition the lattice into disjoint elementary hypercubes.
//
// Odd parity: one block per all-even anchor a, vertex k at a + eps(k).
// Even parity: one block per all-even anchor a, vertex k at a - eps(k)
// (the coordinate-wise sign flip of the odd block sharing that anchor).
// The sign-flip order is what makes a single constant matrix per parity
// valid across the whole lattice: inside an odd block the staggered signs
// (-1)^{x_j} depend only on the offsets eps_j because anchors are all-even,
// and flipping every offset negates each term, giving H_e^B = -H_o^B for
// the all-odd-cornered blocks.
BlockList partition_blocks(const LatticeGeometry& g, Parity parity);

// Complex amplitude per lattice site; the walk state psi(x; t).
class AmplitudeField {
public:
    explicit AmplitudeField(LatticeGeometry geometry)
        : geometry_(std::move(geometry)),
          amps_(Eigen::VectorXcd::Zero(geometry_.size())) {}

    const LatticeGeometry& geometry() const { return geometry_; }
    Eigen::VectorXcd& amps() { return amps_; }
    const Eigen::VectorXcd& amps() const { return amps_; }

    Complex& operator[](std::int64_t i) { return amps_[i]; }
    Complex operator[](std::int64_t i) const { return amps_[i]; }

    double norm_sq() const { return amps_.squaredNorm(); }

private:
    LatticeGeometry geometry_;
    Eigen::VectorXcd amps_;
};

double norm_sq(const AmplitudeField& f);

// psi'(x) = psi(x - shift mod L); exact norm preservation (pure relabeling).
AmplitudeField translate(const AmplitudeField& f, std::span<const std::int64_t> shift);

} // namespace dqw
