#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <span>
#include <vector>

#include "ncpart/group.hpp"

namespace ncpart {

enum class Row : std::uint8_t { Upper, Lower };

struct PointRef {
  Row row;
  int index;  // 1-based

  friend auto operator<=>(const PointRef&, const PointRef&) = default;
};

inline PointRef up(int i) { return {Row::Upper, i}; }
inline PointRef low(int i) { return {Row::Lower, i}; }

class Block {
 public:
  Block() = default;
  Block(std::vector<int> upper, std::vector<int> lower);
  static Block from_points(std::span<const PointRef> points);

  const std::vector<int>& upper() const { return upper_; }
  const std::vector<int>& lower() const { return lower_; }
  const std::vector<int>& row(Row r) const { return r == Row::Upper ? upper_ : lower_; }

  bool is_through() const { return !upper_.empty() && !lower_.empty(); }
  bool is_upper_single() const { return lower_.empty(); }
  bool is_lower_single() const { return upper_.empty(); }

  std::size_t size() const { return upper_.size() + lower_.size(); }
  std::vector<PointRef> points() const;
  PointRef min_point() const;

  friend bool operator==(const Block&, const Block&) = default;
  friend auto operator<=>(const Block&, const Block&) = default;

 private:
  std::vector<int> upper_;
  std::vector<int> lower_;
};

struct PointSet {
  std::vector<int> upper;
  std::vector<int> lower;

  friend bool operator==(const PointSet&, const PointSet&) = default;
};

class TwoRowPartition {
 public:
  TwoRowPartition() = default;
  // Validates that blocks partition [k]+[l] without crossings and stores them canonically.
  TwoRowPartition(int k, int l, std::vector<Block> blocks);

  int k() const { return k_; }
  int l() const { return l_; }
  std::size_t size() const { return blocks_.size(); }
  const std::vector<Block>& blocks() const { return blocks_; }
  const Block& block(std::size_t i) const { return blocks_.at(i); }

  std::size_t block_of(PointRef p) const;
  std::size_t index_of(const Block& b) const;

  friend bool operator==(const TwoRowPartition&, const TwoRowPartition&) = default;
  friend auto operator<=>(const TwoRowPartition&, const TwoRowPartition&) = default;

 private:
  int k_ = 0;
  int l_ = 0;
  std::vector<Block> blocks_;
  std::vector<std::size_t> upper_owner_;
  std::vector<std::size_t> lower_owner_;
};

bool is_noncrossing(std::span<const Block> blocks, int k, int l);

// All of NC(k,l) in a fixed deterministic order. Requires k + l <= 10.
std::vector<TwoRowPartition> enumerate_partitions(int k, int l);

PointSet block_span(const TwoRowPartition& p, const Block& b);

// B single-layer, nested under C in the sense of strict interval containment on B's row.
bool is_nested_in(const Block& b, const Block& c);

// Indices of the global-outer blocks, sorted by the boundary order.
std::vector<std::size_t> boundary(const TwoRowPartition& p);

// Boundary order between two blocks that are outer relative to a common family:
// upper single-layer by decreasing max, then through, then lower single-layer by increasing max.
bool boundary_precedes(const Block& a, const Block& b);

struct RelativeBoundary {
  std::vector<std::size_t> order;  // indices into the input family
  Elem product;
};

// Relative outer blocks of a family of single-layer blocks on one row. The product is
// (t_1...t_m)^{-1} for the upper row and t_1...t_m for the lower row.
RelativeBoundary relative_outer_boundary(std::span<const Block> family, Row direction,
                                         std::span<const Elem> colors, const FiniteGroup& lambda);

// A block of p restricted to the row that is a consecutive interval; smallest min wins.
Block find_consecutive_block(const TwoRowPartition& p, Row row);

using LambdaPtr = std::shared_ptr<const FiniteGroup>;
using GammaPtr = std::shared_ptr<const PointGroup>;

bool check_gamma_condition(const TwoRowPartition& p, const PointGroup& gamma,
                           std::span<const PointElem> upper, std::span<const PointElem> lower);

class ColoredPartition {
 public:
  ColoredPartition(LambdaPtr lambda, GammaPtr gamma, TwoRowPartition partition,
                   std::vector<Elem> colors, std::vector<PointElem> upper_colors,
                   std::vector<PointElem> lower_colors);

  const TwoRowPartition& partition() const { return partition_; }
  const FiniteGroup& lambda() const { return *lambda_; }
  const PointGroup& gamma() const { return *gamma_; }
  const LambdaPtr& lambda_ptr() const { return lambda_; }
  const GammaPtr& gamma_ptr() const { return gamma_; }

  int k() const { return partition_.k(); }
  int l() const { return partition_.l(); }
  std::size_t size() const { return partition_.size(); }
  const Block& block(std::size_t i) const { return partition_.block(i); }
  Elem color(std::size_t i) const { return colors_.at(i); }
  const std::vector<Elem>& colors() const { return colors_; }
  const std::vector<PointElem>& upper_colors() const { return upper_colors_; }
  const std::vector<PointElem>& lower_colors() const { return lower_colors_; }

  bool lambda_valid() const { return lambda_valid_; }
  bool gamma_valid() const { return gamma_valid_; }
  bool valid() const { return lambda_valid_ && gamma_valid_; }

  friend bool operator==(const ColoredPartition& a, const ColoredPartition& b);

 private:
  LambdaPtr lambda_;
  GammaPtr gamma_;
  TwoRowPartition partition_;
  std::vector<Elem> colors_;
  std::vector<PointElem> upper_colors_;
  std::vector<PointElem> lower_colors_;
  bool lambda_valid_ = false;
  bool gamma_valid_ = false;
};

bool check_boundary_condition(const ColoredPartition& cp);

// Every block colouring satisfying the boundary condition, indexed like p.blocks().
std::vector<std::vector<Elem>> enumerate_colorings(const TwoRowPartition& p, const FiniteGroup& lambda);

std::vector<ColoredPartition> enumerate_colored(int k, int l, std::span<const PointElem> upper,
                                                std::span<const PointElem> lower,
                                                const LambdaPtr& lambda, const GammaPtr& gamma);

// All-identity point colours, the common case when only the block colours matter.
std::vector<PointElem> identity_colors(int n);

}  // namespace ncpart
