#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "ncpart/matrix.hpp"
#include "ncpart/partition.hpp"

namespace ncpart {

inline constexpr std::uint64_t kDefaultMatrixGuard = 4096;

// 1 iff (r, s) satisfies every block relation of cp.
bool delta_eval(const ColoredPartition& cp, std::span<const Elem> r, std::span<const Elem> s);

// Entry (s, r) is delta_eval(cp, r, s). Requires |Lambda|^max(k,l) <= guard.
MorphismMatrix to_matrix(const ColoredPartition& cp, std::uint64_t guard = kDefaultMatrixGuard);

ColoredPartition tensor_partitions(const ColoredPartition& p, const ColoredPartition& q);
ColoredPartition adjoint_partition(const ColoredPartition& p);
ColoredPartition left_rotate(const ColoredPartition& p);

ColoredPartition empty_partition(const LambdaPtr& lambda, const GammaPtr& gamma);
// Parallel through strands with identity block colours.
ColoredPartition identity_strands(const LambdaPtr& lambda, const GammaPtr& gamma, std::span<const PointElem> colors);

ColoredPartition cup(const LambdaPtr& lambda, const GammaPtr& gamma, const PointElem& g);
ColoredPartition cap(const LambdaPtr& lambda, const GammaPtr& gamma, const PointElem& g);
ColoredPartition cup_k(const LambdaPtr& lambda, const GammaPtr& gamma, std::span<const PointElem> g);
ColoredPartition cap_k(const LambdaPtr& lambda, const GammaPtr& gamma, std::span<const PointElem> g);

// (g_k^{-1}, ..., g_1^{-1})
std::vector<PointElem> conjugate_colors(const PointGroup& gamma, std::span<const PointElem> g);

}  // namespace ncpart
