#pragma once

#include <cmath>
#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "dcb/errors.hpp"

namespace dcb {

int64_t shape_numel(const std::vector<int>& shape);
std::string shape_str(const std::vector<int>& shape);

// Dense row-major tensor. float is the working precision; a double variant
// exists for gradient checking.
template <typename S>
struct TensorT {
    std::vector<int> shape;
    std::vector<S> data;

    TensorT() = default;
    TensorT(std::vector<int> shp, std::vector<S> values) : shape(std::move(shp)), data(std::move(values)) {
        if (shape_numel(shape) != static_cast<int64_t>(data.size()))
            throw ShapeError("tensor data length " + std::to_string(data.size()) +
                             " does not match shape " + shape_str(shape));
    }

    static TensorT zeros(const std::vector<int>& shp) {
        TensorT t;
        t.shape = shp;
        t.data.assign(static_cast<size_t>(shape_numel(shp)), S(0));
        return t;
    }
    static TensorT full(const std::vector<int>& shp, S v) {
        TensorT t = zeros(shp);
        std::fill(t.data.begin(), t.data.end(), v);
        return t;
    }
    static TensorT scalar(S v) { return TensorT({1}, {v}); }

    int64_t numel() const { return static_cast<int64_t>(data.size()); }
    int rank() const { return static_cast<int>(shape.size()); }

    int rows() const {
        if (rank() != 2) throw ShapeError("expected rank-2 tensor, got shape " + shape_str(shape));
        return shape[0];
    }
    int cols() const {
        if (rank() != 2) throw ShapeError("expected rank-2 tensor, got shape " + shape_str(shape));
        return shape[1];
    }

    bool same_shape(const TensorT& o) const { return shape == o.shape; }

    bool finite() const {
        for (S v : data)
            if (!std::isfinite(static_cast<double>(v))) return false;
        return true;
    }

    template <typename T>
    TensorT<T> to() const {
        TensorT<T> out;
        out.shape = shape;
        out.data.reserve(data.size());
        for (S v : data) out.data.push_back(static_cast<T>(v));
        return out;
    }
};

using Tensor = TensorT<float>;
using Tensor64 = TensorT<double>;

// GEMM kernels over raw row-major buffers (Eigen-backed).
//   nn: c (+)= a[m x k] * b[k x n]
//   nt: c (+)= a[m x k] * b[n x k]^T
//   tn: c (+)= a[k x m]^T * b[k x n]
void gemm_nn(const float* a, const float* b, float* c, int m, int k, int n, bool accumulate);
void gemm_nt(const float* a, const float* b, float* c, int m, int k, int n, bool accumulate);
void gemm_tn(const float* a, const float* b, float* c, int m, int k, int n, bool accumulate);
void gemm_nn(const double* a, const double* b, double* c, int m, int k, int n, bool accumulate);
void gemm_nt(const double* a, const double* b, double* c, int m, int k, int n, bool accumulate);
void gemm_tn(const double* a, const double* b, double* c, int m, int k, int n, bool accumulate);

}  // namespace dcb
