#include "dcb/tensor.hpp"

#include <Eigen/Core>

#include <sstream>

namespace dcb {

int64_t shape_numel(const std::vector<int>& shape) {
    int64_t n = 1;
    for (int d : shape) {
        if (d < 0) throw ShapeError("negative extent in shape " + shape_str(shape));
        n *= d;
    }
    return n;
}

std::string shape_str(const std::vector<int>& shape) {
    std::ostringstream os;
    os << "[";
    for (size_t i = 0; i < shape.size(); ++i) {
        if (i) os << "x";
        os << shape[i];
    }
    os << "]";
    return os.str();
}

namespace {

template <typename S>
using RowMat = Eigen::Matrix<S, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
template <typename S>
using CMap = Eigen::Map<const RowMat<S>, Eigen::Unaligned>;
template <typename S>
using MMap = Eigen::Map<RowMat<S>, Eigen::Unaligned>;

template <typename S>
void gemm_nn_impl(const S* a, const S* b, S* c, int m, int k, int n, bool acc) {
    CMap<S> A(a, m, k), B(b, k, n);
    MMap<S> C(c, m, n);
    if (acc)
        C.noalias() += A * B;
    else
        C.noalias() = A * B;
}

template <typename S>
void gemm_nt_impl(const S* a, const S* b, S* c, int m, int k, int n, bool acc) {
    CMap<S> A(a, m, k), B(b, n, k);
    MMap<S> C(c, m, n);
    if (acc)
        C.noalias() += A * B.transpose();
    else
        C.noalias() = A * B.transpose();
}

template <typename S>
void gemm_tn_impl(const S* a, const S* b, S* c, int m, int k, int n, bool acc) {
    CMap<S> A(a, k, m), B(b, k, n);
    MMap<S> C(c, m, n);
    if (acc)
        C.noalias() += A.transpose() * B;
    else
        C.noalias() = A.transpose() * B;
}

}  // namespace

void gemm_nn(const float* a, const float* b, float* c, int m, int k, int n, bool acc) { gemm_nn_impl(a, b, c, m, k, n, acc); }
void gemm_nt(const float* a, const float* b, float* c, int m, int k, int n, bool acc) { gemm_nt_impl(a, b, c, m, k, n, acc); }
void gemm_tn(const float* a, const float* b, float* c, int m, int k, int n, bool acc) { gemm_tn_impl(a, b, c, m, k, n, acc); }
void gemm_nn(const double* a, const double* b, double* c, int m, int k, int n, bool acc) { gemm_nn_impl(a, b, c, m, k, n, acc); }
void gemm_nt(const double* a, const double* b, double* c, int m, int k, int n, bool acc) { gemm_nt_impl(a, b, c, m, k, n, acc); }
void gemm_tn(const double* a, const double* b, double* c, int m, int k, int n, bool acc) { gemm_tn_impl(a, b, c, m, k, n, acc); }

}  // namespace dcb
