#include "ncpart/operator.hpp"

#include <algorithm>

namespace ncpart {

namespace {

std::vector<Elem> prefix_products(const FiniteGroup& g, std::span<const Elem> xs) {
  std::vector<Elem> out(xs.size() + 1, kIdentity);
  for (std::size_t i = 0; i < xs.size(); ++i) out[i + 1] = g.mul(out[i], xs[i]);
  return out;
}

bool upper_rows_ok(const ColoredPartition& cp, const std::vector<Elem>& R) {
  const auto& g = cp.lambda();
  for (std::size_t b = 0; b < cp.size(); ++b) {
    const Block& block = cp.block(b);
    if (!block.is_upper_single()) continue;
    const auto lo = static_cast<std::size_t>(block.upper().front());
    const auto hi = static_cast<std::size_t>(block.upper().back());
    if (g.mul(g.mul(g.inv(R[lo - 1]), R[hi]), cp.color(b)) != kIdentity) return false;
  }
  return true;
}

// Checks the relation of a block that touches the lower row, given prefix products.
bool lower_relation_ok(const ColoredPartition& cp, std::size_t b, const std::vector<Elem>& R, const std::vector<Elem>& S) {
  const auto& g = cp.lambda();
  const Block& block = cp.block(b);
  const auto lo = static_cast<std::size_t>(block.lower().front());
  const auto hi = static_cast<std::size_t>(block.lower().back());
  if (block.is_through()) return S[hi] == g.mul(R[static_cast<std::size_t>(block.upper().back())], cp.color(b));
  return g.mul(g.inv(S[lo - 1]), S[hi]) == cp.color(b);
}

}  // namespace

bool delta_eval(const ColoredPartition& cp, std::span<const Elem> r, std::span<const Elem> s) {
  if (r.size() != static_cast<std::size_t>(cp.k()) || s.size() != static_cast<std::size_t>(cp.l()))
    throw Error(ErrorCode::LengthMismatch, "input tuples do not match the partition size");
  const auto R = prefix_products(cp.lambda(), r);
  const auto S = prefix_products(cp.lambda(), s);
  if (!upper_rows_ok(cp, R)) return false;
  for (std::size_t b = 0; b < cp.size(); ++b)
    if (!cp.block(b).is_upper_single() && !lower_relation_ok(cp, b, R, S)) return false;
  return true;
}

MorphismMatrix to_matrix(const ColoredPartition& cp, std::uint64_t guard) {
  const auto& g = cp.lambda();
  const std::size_t n = g.order();
  const auto k = static_cast<std::size_t>(cp.k());
  const auto l = static_cast<std::size_t>(cp.l());
  checked_power(n, std::max(k, l), guard);
  const std::uint64_t cols = checked_power(n, k, UINT64_MAX / 2);
  const std::uint64_t rows = checked_power(n, l, UINT64_MAX / 2);

  // Blocks whose relation becomes decidable once s_1..s_j are fixed.
  std::vector<std::vector<std::size_t>> due(l + 1);
  for (std::size_t b = 0; b < cp.size(); ++b)
    if (!cp.block(b).is_upper_single()) due[static_cast<std::size_t>(cp.block(b).lower().back())].push_back(b);

  std::vector<Entry> entries;
  std::vector<Elem> S(l + 1, kIdentity);
  std::vector<Elem> s(l, kIdentity);
  for (std::uint64_t col = 0; col < cols; ++col) {
    const auto r = decode_basis(col, k, n);
    const auto R = prefix_products(g, r);
    if (!upper_rows_ok(cp, R)) continue;
    // Depth-first search over s, pruning as soon as a block's relation is decidable.
    auto dfs = [&](auto&& self, std::size_t j) -> void {
      if (j == l) {
        entries.push_back({encode_basis(s, n), col, 1});
        return;
      }
      for (std::size_t x = 0; x < n; ++x) {
        s[j] = Elem(x);
        S[j + 1] = g.mul(S[j], s[j]);
        bool ok = true;
        for (std::size_t b : due[j + 1])
          if (!lower_relation_ok(cp, b, R, S)) {
            ok = false;
            break;
          }
        if (ok) self(self, j + 1);
      }
    };
    dfs(dfs, 0);
  }
  return MorphismMatrix(rows, cols, std::move(entries));
}

ColoredPartition tensor_partitions(const ColoredPartition& p, const ColoredPartition& q) {
  if (!(p.lambda() == q.lambda()) || !(p.gamma() == q.gamma()))
    throw Error(ErrorCode::GroupMismatch, "tensor factors use different groups");
  std::vector<Block> blocks(p.partition().blocks());
  std::vector<Elem> colors(p.colors());
  for (std::size_t b = 0; b < q.size(); ++b) {
    std::vector<int> upper(q.block(b).upper());
    std::vector<int> lower(q.block(b).lower());
    for (int& i : upper) i += p.k();
    for (int& j : lower) j += p.l();
    blocks.emplace_back(std::move(upper), std::move(lower));
    colors.push_back(q.color(b));
  }
  // Canonical re-sorting happens in the partition; carry colours along by block identity.
  TwoRowPartition part(p.k() + q.k(), p.l() + q.l(), blocks);
  std::vector<Elem> sorted(part.size());
  for (std::size_t b = 0; b < blocks.size(); ++b) sorted[part.index_of(blocks[b])] = colors[b];
  std::vector<PointElem> upper(p.upper_colors());
  upper.insert(upper.end(), q.upper_colors().begin(), q.upper_colors().end());
  std::vector<PointElem> lower(p.lower_colors());
  lower.insert(lower.end(), q.lower_colors().begin(), q.lower_colors().end());
  return ColoredPartition(p.lambda_ptr(), p.gamma_ptr(), std::move(part), std::move(sorted), std::move(upper),
                          std::move(lower));
}

namespace {

ColoredPartition rebuild(const ColoredPartition& src, int k, int l, const std::vector<Block>& blocks,
                         const std::vector<Elem>& colors, std::vector<PointElem> upper, std::vector<PointElem> lower) {
  TwoRowPartition part(k, l, blocks);
  std::vector<Elem> sorted(part.size());
  for (std::size_t b = 0; b < blocks.size(); ++b) sorted[part.index_of(blocks[b])] = colors[b];
  return ColoredPartition(src.lambda_ptr(), src.gamma_ptr(), std::move(part), std::move(sorted), std::move(upper),
                          std::move(lower));
}

}  // namespace

ColoredPartition adjoint_partition(const ColoredPartition& p) {
  std::vector<Block> blocks;
  std::vector<Elem> colors;
  for (std::size_t b = 0; b < p.size(); ++b) {
    blocks.emplace_back(p.block(b).lower(), p.block(b).upper());
    colors.push_back(p.lambda().inv(p.color(b)));
  }
  return rebuild(p, p.l(), p.k(), blocks, colors, p.lower_colors(), p.upper_colors());
}

ColoredPartition left_rotate(const ColoredPartition& p) {
  const int k = p.k();
  std::vector<Block> blocks;
  for (const auto& b : p.partition().blocks()) {
    std::vector<int> lower;
    for (int i : b.upper()) lower.push_back(k + 1 - i);
    for (int j : b.lower()) lower.push_back(k + j);
    blocks.emplace_back(std::vector<int>{}, std::move(lower));
  }
  std::vector<PointElem> lower = conjugate_colors(p.gamma(), p.upper_colors());
  lower.insert(lower.end(), p.lower_colors().begin(), p.lower_colors().end());
  return rebuild(p, 0, k + p.l(), blocks, p.colors(), {}, std::move(lower));
}

std::vector<PointElem> conjugate_colors(const PointGroup& gamma, std::span<const PointElem> g) {
  std::vector<PointElem> out;
  for (std::size_t i = g.size(); i-- > 0;) out.push_back(gamma.inv(g[i]));
  return out;
}

ColoredPartition empty_partition(const LambdaPtr& lambda, const GammaPtr& gamma) {
  return ColoredPartition(lambda, gamma, TwoRowPartition(0, 0, {}), {}, {}, {});
}

ColoredPartition identity_strands(const LambdaPtr& lambda, const GammaPtr& gamma, std::span<const PointElem> colors) {
  const int n = static_cast<int>(colors.size());
  std::vector<Block> blocks;
  for (int i = 1; i <= n; ++i) blocks.emplace_back(std::vector<int>{i}, std::vector<int>{i});
  std::vector<PointElem> c(colors.begin(), colors.end());
  return ColoredPartition(lambda, gamma, TwoRowPartition(n, n, std::move(blocks)),
                          std::vector<Elem>(static_cast<std::size_t>(n), kIdentity), c, c);
}

ColoredPartition cup_k(const LambdaPtr& lambda, const GammaPtr& gamma, std::span<const PointElem> g) {
  const int k = static_cast<int>(g.size());
  std::vector<Block> blocks;
  for (int i = 1; i <= k; ++i) blocks.emplace_back(std::vector<int>{}, std::vector<int>{i, 2 * k + 1 - i});
  std::vector<PointElem> lower(g.begin(), g.end());
  auto tail = conjugate_colors(*gamma, g);
  lower.insert(lower.end(), tail.begin(), tail.end());
  return ColoredPartition(lambda, gamma, TwoRowPartition(0, 2 * k, std::move(blocks)),
                          std::vector<Elem>(static_cast<std::size_t>(k), kIdentity), {}, std::move(lower));
}

ColoredPartition cap_k(const LambdaPtr& lambda, const GammaPtr& gamma, std::span<const PointElem> g) {
  return adjoint_partition(cup_k(lambda, gamma, g));
}

ColoredPartition cup(const LambdaPtr& lambda, const GammaPtr& gamma, const PointElem& g) {
  return cup_k(lambda, gamma, std::span<const PointElem>(&g, 1));
}

ColoredPartition cap(const LambdaPtr& lambda, const GammaPtr& gamma, const PointElem& g) {
  return cap_k(lambda, gamma, std::span<const PointElem>(&g, 1));
}

}  // namespace ncpart
