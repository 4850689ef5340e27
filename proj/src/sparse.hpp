#pragma once

// Sparse views of structure tensors; catalog tensors are overwhelmingly zero.

#include "serre/matrix.hpp"

#include <utility>
#include <vector>

namespace serre::detail {

using Entry = std::pair<std::size_t, Scalar>;

/// For each (i, j) the nonzero entries (k, T(i, j, k)).
class SparseLast {
public:
    explicit SparseLast(const Tensor3& t) : d1_(t.dim1()), cells_(t.dim0() * t.dim1()) {
        for (std::size_t i = 0; i < t.dim0(); ++i)
            for (std::size_t j = 0; j < t.dim1(); ++j)
                for (std::size_t k = 0; k < t.dim2(); ++k)
                    if (!t(i, j, k).is_zero()) cells_[i * d1_ + j].emplace_back(k, t(i, j, k));
    }

    const std::vector<Entry>& operator()(std::size_t i, std::size_t j) const { return cells_[i * d1_ + j]; }

private:
    std::size_t d1_;
    std::vector<std::vector<Entry>> cells_;
};

struct PairEntry {
    std::size_t j;
    std::size_t k;
    Scalar value;
};

/// For each i the nonzero entries (j, k, T(i, j, k)).
class SparseFirst {
public:
    explicit SparseFirst(const Tensor3& t) : rows_(t.dim0()) {
        for (std::size_t i = 0; i < t.dim0(); ++i)
            for (std::size_t j = 0; j < t.dim1(); ++j)
                for (std::size_t k = 0; k < t.dim2(); ++k)
                    if (!t(i, j, k).is_zero()) rows_[i].push_back(PairEntry{j, k, t(i, j, k)});
    }

    const std::vector<PairEntry>& operator[](std::size_t i) const { return rows_[i]; }

private:
    std::vector<std::vector<PairEntry>> rows_;
};

inline std::vector<Entry> nonzeros(const Vector& v) {
    std::vector<Entry> out;
    for (std::size_t i = 0; i < v.size(); ++i)
        if (!v[i].is_zero()) out.emplace_back(i, v[i]);
    return out;
}

} // namespace serre::detail
