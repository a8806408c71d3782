#include "dqw/lattice.hpp"

#include <algorithm>
#include <utility>

namespace dqw {

const char* to_string(Parity p) {
    return p == Parity::Odd ? "odd" : "even";
}

LatticeGeometry::LatticeGeometry(std::vector<std::int64_t> sides)
    : sides_(std::move(sides)) {
    if (sides_.empty()) {
        throw GeometryError("lattice needs at least one dimension");
    }
    strides_.resize(sides_.size());
    total_ = 1;
    for (std::size_t j = 0; j < sides_.size(); ++j) {
        const std::int64_t len = sides_[j];
        if (len < 2 || len % 2 != 0) {
            throw GeometryError("side length " + std::to_string(len) +
                                " on axis " + std::to_string(j + 1) +
                                " is not an even integer >= 2");
        }
        strides_[j] = total_;
        total_ *= len;
    }
}

LatticeGeometry LatticeGeometry::cube(int dim, std::int64_t side) {
    if (dim < 1) {
        throw GeometryError("dimension must be positive");
    }
    return LatticeGeometry(std::vector<std::int64_t>(static_cast<std::size_t>(dim), side));
}

std::int64_t LatticeGeometry::linear_index(std::span<const std::int64_t> coords) const {
    if (coords.size() != sides_.size()) {
        throw InputError("coordinate count does not match lattice dimension");
    }
    std::int64_t idx = 0;
    for (std::size_t j = 0; j < coords.size(); ++j) {
        if (coords[j] < 0 || coords[j] >= sides_[j]) {
            throw InputError("coordinate " + std::to_string(coords[j]) +
                             " out of range on axis " + std::to_string(j + 1));
        }
        idx += coords[j] * strides_[j];
    }
    return idx;
}

std::vector<std::int64_t> LatticeGeometry::coords_of(std::int64_t index) const {
    if (index < 0 || index >= total_) {
        throw InputError("linear index out of range");
    }
    std::vector<std::int64_t> coords(sides_.size());
    for (std::size_t j = 0; j < sides_.size(); ++j) {
        coords[j] = index % sides_[j];
        index /= sides_[j];
    }
    return coords;
}

std::int64_t LatticeGeometry::wrapped_index(std::span<const std::int64_t> coords) const {
    if (coords.size() != sides_.size()) {
        throw InputError("coordinate count does not match lattice dimension");
    }
    std::int64_t idx = 0;
    for (std::size_t j = 0; j < coords.size(); ++j) {
        std::int64_t c = coords[j] % sides_[j];
        if (c < 0) c += sides_[j];
        idx += c * strides_[j];
    }
    return idx;
}

std::int64_t signed_site_1d(const LatticeGeometry& g, std::int64_t index) {
    if (g.dim() != 1) {
        throw InputError("signed_site_1d requires a 1-D lattice");
    }
    const std::int64_t len = g.side(0);
    return index <= len / 2 ? index : index - len;
}

std::int64_t ring_index_1d(const LatticeGeometry& g, std::int64_t position) {
    if (g.dim() != 1) {
        throw InputError("ring_index_1d requires a 1-D lattice");
    }
    const std::int64_t len = g.side(0);
    std::int64_t idx = position % len;
    return idx < 0 ? idx + len : idx;
}

BlockList partition_blocks(const LatticeGeometry& g, Parity parity) {
    const int dim = g.dim();
    const std::int64_t block_size = std::int64_t{1} << dim;
    const std::int64_t block_count = g.size() / block_size;

    BlockList list;
    list.parity = parity;
    list.dim = dim;
    list.block_size = block_size;
    list.sites.resize(static_cast<std::size_t>(block_count * block_size));

    const std::int64_t sign = parity == Parity::Odd ? 1 : -1;
    std::vector<std::int64_t> anchor(static_cast<std::size_t>(dim), 0);
    std::vector<std::int64_t> vertex(static_cast<std::size_t>(dim), 0);

    std::int64_t out = 0;
    for (std::int64_t b = 0; b < block_count; ++b) {
        for (std::int64_t k = 0; k < block_size; ++k) {
            for (int j = 0; j < dim; ++j) {
                const std::int64_t eps = (k >> j) & 1;
                vertex[static_cast<std::size_t>(j)] =
                    anchor[static_cast<std::size_t>(j)] + sign * eps;
            }
            list.sites[static_cast<std::size_t>(out++)] = g.wrapped_index(vertex);
        }
        // next all-even anchor, coordinate 1 fastest
        for (int j = 0; j < dim; ++j) {
            auto& a = anchor[static_cast<std::size_t>(j)];
            a += 2;
            if (a < g.side(j)) break;
            a = 0;
        }
    }
    return list;
}

double norm_sq(const AmplitudeField& f) {
    return f.norm_sq();
}

AmplitudeField translate(const AmplitudeField& f, std::span<const std::int64_t> shift) {
    const LatticeGeometry& g = f.geometry();
    if (static_cast<int>(shift.size()) != g.dim()) {
        throw InputError("shift vector length does not match lattice dimension");
    }
    AmplitudeField out(g);
    std::vector<std::int64_t> src(static_cast<std::size_t>(g.dim()));
    for (std::int64_t i = 0; i < g.size(); ++i) {
        const auto coords = g.coords_of(i);
        for (int j = 0; j < g.dim(); ++j) {
            src[static_cast<std::size_t>(j)] =
                coords[static_cast<std::size_t>(j)] - shift[static_cast<std::size_t>(j)];
        }
        out[i] = f[g.wrapped_index(src)];
    }
    return out;
}

} // namespace dqw
