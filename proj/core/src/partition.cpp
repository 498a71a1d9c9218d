#include "ncpart/partition.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <string>

namespace ncpart {

namespace {

constexpr std::size_t kNoBlock = std::numeric_limits<std::size_t>::max();

void check_sorted_unique(std::vector<int>& v) {
  std::sort(v.begin(), v.end());
  if (std::adjacent_find(v.begin(), v.end()) != v.end())
    throw Error(ErrorCode::NotAPartition, "point repeated inside a block");
}

// Position of a point in the linear order u_k..u_1, l_1..l_l.
int linear_position(PointRef p, int k) { return p.row == Row::Upper ? k - p.index : k + p.index - 1; }

struct Interval {
  int lo = 1;
  int hi = 0;

  bool empty() const { return lo > hi; }
  bool within(const Interval& o) const { return empty() || (!o.empty() && o.lo <= lo && hi <= o.hi); }
  friend bool operator==(const Interval&, const Interval&) = default;
};

struct Span {
  Interval upper;
  Interval lower;

  bool strictly_within(const Span& o) const {
    return upper.within(o.upper) && lower.within(o.lower) && !(upper == o.upper && lower == o.lower);
  }
};

Span span_of(const Block& b) {
  Span s;
  if (b.is_through()) {
    s.upper = {1, b.upper().back()};
    s.lower = {1, b.lower().back()};
  } else if (b.is_upper_single()) {
    s.upper = {b.upper().front(), b.upper().back()};
  } else {
    s.lower = {b.lower().front(), b.lower().back()};
  }
  return s;
}

int category(const Block& b) { return b.is_through() ? 1 : b.is_upper_single() ? 0 : 2; }

}  // namespace

Block::Block(std::vector<int> upper, std::vector<int> lower) : upper_(std::move(upper)), lower_(std::move(lower)) {
  if (upper_.empty() && lower_.empty()) throw Error(ErrorCode::NotAPartition, "empty block");
  check_sorted_unique(upper_);
  check_sorted_unique(lower_);
}

Block Block::from_points(std::span<const PointRef> points) {
  std::vector<int> upper;
  std::vector<int> lower;
  for (const auto& p : points) (p.row == Row::Upper ? upper : lower).push_back(p.index);
  return Block(std::move(upper), std::move(lower));
}

std::vector<PointRef> Block::points() const {
  std::vector<PointRef> out;
  out.reserve(size());
  for (int i : upper_) out.push_back(up(i));
  for (int j : lower_) out.push_back(low(j));
  return out;
}

PointRef Block::min_point() const { return upper_.empty() ? low(lower_.front()) : up(upper_.front()); }

namespace {

std::pair<std::vector<std::size_t>, std::vector<std::size_t>> owners(std::span<const Block> blocks, int k, int l) {
  if (k < 0 || l < 0) throw Error(ErrorCode::NotAPartition, "negative row size");
  std::vector<std::size_t> upper(static_cast<std::size_t>(k), kNoBlock);
  std::vector<std::size_t> lower(static_cast<std::size_t>(l), kNoBlock);
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    if (blocks[b].size() == 0) throw Error(ErrorCode::NotAPartition, "empty block");
    for (auto [row, bound, owner] : {std::tuple{Row::Upper, k, &upper}, std::tuple{Row::Lower, l, &lower}}) {
      for (int i : blocks[b].row(row)) {
        if (i < 1 || i > bound) throw Error(ErrorCode::NotAPartition, "point index " + std::to_string(i) + " out of range");
        auto& slot = (*owner)[static_cast<std::size_t>(i - 1)];
        if (slot != kNoBlock) throw Error(ErrorCode::NotAPartition, "blocks overlap at point " + std::to_string(i));
        slot = b;
      }
    }
  }
  for (auto* owner : {&upper, &lower})
    if (std::find(owner->begin(), owner->end(), kNoBlock) != owner->end())
      throw Error(ErrorCode::NotAPartition, "blocks do not cover every point");
  return {std::move(upper), std::move(lower)};
}

}  // namespace

bool is_noncrossing(std::span<const Block> blocks, int k, int l) {
  auto [upper, lower] = owners(blocks, k, l);
  std::vector<std::size_t> line(static_cast<std::size_t>(k + l));
  for (int i = 1; i <= k; ++i) line[static_cast<std::size_t>(linear_position(up(i), k))] = upper[static_cast<std::size_t>(i - 1)];
  for (int j = 1; j <= l; ++j) line[static_cast<std::size_t>(linear_position(low(j), k))] = lower[static_cast<std::size_t>(j - 1)];
  // A crossing exists iff some pair of blocks alternates at least four times along the line.
  for (std::size_t a = 0; a < blocks.size(); ++a) {
    for (std::size_t b = a + 1; b < blocks.size(); ++b) {
      int runs = 0;
      std::size_t last = kNoBlock;
      for (std::size_t owner : line) {
        if ((owner == a || owner == b) && owner != last) {
          ++runs;
          last = owner;
        }
      }
      if (runs >= 4) return false;
    }
  }
  return true;
}

TwoRowPartition::TwoRowPartition(int k, int l, std::vector<Block> blocks) : k_(k), l_(l), blocks_(std::move(blocks)) {
  if (!is_noncrossing(blocks_, k, l)) throw Error(ErrorCode::NotAPartition, "blocks cross");
  std::sort(blocks_.begin(), blocks_.end(),
            [](const Block& a, const Block& b) { return a.min_point() < b.min_point(); });
  std::tie(upper_owner_, lower_owner_) = owners(blocks_, k, l);
}

std::size_t TwoRowPartition::block_of(PointRef p) const {
  const auto& owner = p.row == Row::Upper ? upper_owner_ : lower_owner_;
  if (p.index < 1 || static_cast<std::size_t>(p.index) > owner.size())
    throw Error(ErrorCode::LengthMismatch, "point index out of range");
  return owner[static_cast<std::size_t>(p.index - 1)];
}

std::size_t TwoRowPartition::index_of(const Block& b) const {
  auto it = std::find(blocks_.begin(), blocks_.end(), b);
  if (it == blocks_.end()) throw Error(ErrorCode::BlockNotInPartition, "block is not part of the partition");
  return static_cast<std::size_t>(it - blocks_.begin());
}

std::vector<TwoRowPartition> enumerate_partitions(int k, int l) {
  if (k < 0 || l < 0) throw Error(ErrorCode::NotAPartition, "negative row size");
  if (k + l > 10) throw Error(ErrorCode::SizeLimitExceeded, "enumeration limited to k + l <= 10");
  const int n = k + l;
  std::vector<TwoRowPartition> out;
  std::vector<std::vector<int>> current;  // blocks as linear positions

  auto to_point = [&](int pos) { return pos < k ? up(k - pos) : low(pos - k + 1); };

  // Pending holds intervals [lo, hi) of positions still to be partitioned.
  std::function<void(std::vector<std::pair<int, int>>)> rec = [&](std::vector<std::pair<int, int>> pending) {
    while (!pending.empty() && pending.back().first >= pending.back().second) pending.pop_back();
    if (pending.empty()) {
      std::vector<Block> blocks;
      for (const auto& positions : current) {
        std::vector<PointRef> pts;
        for (int pos : positions) pts.push_back(to_point(pos));
        blocks.push_back(Block::from_points(pts));
      }
      out.emplace_back(k, l, std::move(blocks));
      return;
    }
    auto [lo, hi] = pending.back();
    pending.pop_back();
    const int width = hi - lo - 1;
    for (unsigned mask = 0; mask < (1u << width); ++mask) {
      std::vector<int> block{lo};
      for (int i = 0; i < width; ++i)
        if (mask & (1u << i)) block.push_back(lo + 1 + i);
      auto next = pending;
      next.emplace_back(block.back() + 1, hi);
      for (std::size_t i = block.size() - 1; i-- > 0;) next.emplace_back(block[i] + 1, block[i + 1]);
      current.push_back(block);
      rec(std::move(next));
      current.pop_back();
    }
  };
  rec({{0, n}});
  std::sort(out.begin(), out.end());
  return out;
}

PointSet block_span(const TwoRowPartition& p, const Block& b) {
  p.index_of(b);
  Span s = span_of(b);
  PointSet out;
  for (int i = s.upper.lo; i <= s.upper.hi; ++i) out.upper.push_back(i);
  for (int j = s.lower.lo; j <= s.lower.hi; ++j) out.lower.push_back(j);
  return out;
}

bool is_nested_in(const Block& b, const Block& c) {
  if (b == c || b.is_through()) return false;
  const Row row = b.is_upper_single() ? Row::Upper : Row::Lower;
  const auto& cr = c.row(row);
  const auto& br = b.row(row);
  return !cr.empty() && cr.front() < br.front() && br.back() < cr.back();
}

std::vector<std::size_t> boundary(const TwoRowPartition& p) {
  std::vector<Span> spans;
  for (const auto& b : p.blocks()) spans.push_back(span_of(b));
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < spans.size(); ++i) {
    bool outer = true;
    for (std::size_t j = 0; j < spans.size() && outer; ++j)
      if (j != i && spans[i].strictly_within(spans[j])) outer = false;
    if (outer) out.push_back(i);
  }
  std::sort(out.begin(), out.end(),
            [&](std::size_t a, std::size_t b) { return boundary_precedes(p.block(a), p.block(b)); });
  return out;
}

bool boundary_precedes(const Block& a, const Block& b) {
  const int ca = category(a);
  const int cb = category(b);
  if (ca != cb) return ca < cb;
  if (ca == 0) return a.upper().back() > b.upper().back();
  if (ca == 2) return a.lower().back() < b.lower().back();
  return a.lower().back() < b.lower().back();
}

RelativeBoundary relative_outer_boundary(std::span<const Block> family, Row direction,
                                         std::span<const Elem> colors, const FiniteGroup& lambda) {
  if (colors.size() != family.size()) throw Error(ErrorCode::LengthMismatch, "one colour per block expected");
  for (const auto& b : family) {
    const bool ok = direction == Row::Upper ? (b.is_upper_single() && !b.upper().empty())
                                            : (b.is_lower_single() && !b.lower().empty());
    if (!ok) throw Error(ErrorCode::MixedRows, "family must consist of single-layer blocks on one row");
  }
  RelativeBoundary out{{}, kIdentity};
  for (std::size_t i = 0; i < family.size(); ++i) {
    bool outer = true;
    for (std::size_t j = 0; j < family.size() && outer; ++j)
      if (j != i && span_of(family[i]).strictly_within(span_of(family[j]))) outer = false;
    if (outer) out.order.push_back(i);
  }
  std::sort(out.order.begin(), out.order.end(),
            [&](std::size_t a, std::size_t b) { return boundary_precedes(family[a], family[b]); });
  for (std::size_t i : out.order) out.product = lambda.mul(out.product, colors[i]);
  if (direction == Row::Upper) out.product = lambda.inv(out.product);
  return out;
}

Block find_consecutive_block(const TwoRowPartition& p, Row row) {
  if ((row == Row::Upper ? p.k() : p.l()) == 0) throw Error(ErrorCode::EmptyRow, "row has no points");
  const std::vector<int>* best = nullptr;
  for (const auto& b : p.blocks()) {
    const auto& pts = b.row(row);
    if (pts.empty()) continue;
    if (pts.back() - pts.front() + 1 != static_cast<int>(pts.size())) continue;
    if (best == nullptr || pts.front() < best->front()) best = &pts;
  }
  return row == Row::Upper ? Block(*best, {}) : Block({}, *best);
}

bool check_gamma_condition(const TwoRowPartition& p, const PointGroup& gamma,
                           std::span<const PointElem> upper, std::span<const PointElem> lower) {
  if (upper.size() != static_cast<std::size_t>(p.k()) || lower.size() != static_cast<std::size_t>(p.l()))
    throw Error(ErrorCode::LengthMismatch, "point colours do not match the partition size");
  for (const auto& b : p.blocks()) {
    PointElem top = gamma.identity();
    PointElem bottom = gamma.identity();
    for (int i : b.upper()) top = gamma.mul(top, upper[static_cast<std::size_t>(i - 1)]);
    for (int j : b.lower()) bottom = gamma.mul(bottom, lower[static_cast<std::size_t>(j - 1)]);
    if (top != bottom) return false;
  }
  return true;
}

ColoredPartition::ColoredPartition(LambdaPtr lambda, GammaPtr gamma, TwoRowPartition partition,
                                   std::vector<Elem> colors, std::vector<PointElem> upper_colors,
                                   std::vector<PointElem> lower_colors)
    : lambda_(std::move(lambda)),
      gamma_(std::move(gamma)),
      partition_(std::move(partition)),
      colors_(std::move(colors)),
      upper_colors_(std::move(upper_colors)),
      lower_colors_(std::move(lower_colors)) {
  if (colors_.size() != partition_.size()) throw Error(ErrorCode::LengthMismatch, "one colour per block expected");
  for (Elem c : colors_)
    if (!lambda_->contains(c)) throw Error(ErrorCode::MixedGroups, "block colour outside " + lambda_->label());
  for (const auto* v : {&upper_colors_, &lower_colors_})
    for (const auto& g : *v)
      if (!gamma_->contains(g)) throw Error(ErrorCode::MixedGroups, "point colour outside " + gamma_->label());
  gamma_valid_ = check_gamma_condition(partition_, *gamma_, upper_colors_, lower_colors_);
  lambda_valid_ = check_boundary_condition(*this);
}

bool operator==(const ColoredPartition& a, const ColoredPartition& b) {
  return a.partition_ == b.partition_ && a.colors_ == b.colors_ && a.upper_colors_ == b.upper_colors_ &&
         a.lower_colors_ == b.lower_colors_ && *a.lambda_ == *b.lambda_ && *a.gamma_ == *b.gamma_;
}

bool check_boundary_condition(const ColoredPartition& cp) {
  Elem acc = kIdentity;
  for (std::size_t i : boundary(cp.partition())) acc = cp.lambda().mul(acc, cp.color(i));
  return acc == kIdentity;
}

std::vector<std::vector<Elem>> enumerate_colorings(const TwoRowPartition& p, const FiniteGroup& lambda) {
  if (p.size() == 0) return {{}};
  const auto order = boundary(p);
  const std::size_t solved = order.back();
  std::vector<std::size_t> free;
  for (std::size_t i = 0; i < p.size(); ++i)
    if (i != solved) free.push_back(i);

  std::vector<std::vector<Elem>> out;
  std::vector<std::size_t> digits(free.size(), 0);
  const std::size_t n = lambda.order();
  while (true) {
    std::vector<Elem> colors(p.size(), kIdentity);
    for (std::size_t f = 0; f < free.size(); ++f) colors[free[f]] = Elem(digits[f]);
    Elem prefix = kIdentity;
    for (std::size_t i = 0; i + 1 < order.size(); ++i) prefix = lambda.mul(prefix, colors[order[i]]);
    colors[solved] = lambda.inv(prefix);
    out.push_back(std::move(colors));

    std::size_t pos = free.size();
    while (pos > 0 && ++digits[pos - 1] == n) digits[--pos] = 0;
    if (pos == 0) break;
  }
  return out;
}

std::vector<ColoredPartition> enumerate_colored(int k, int l, std::span<const PointElem> upper,
                                                std::span<const PointElem> lower,
                                                const LambdaPtr& lambda, const GammaPtr& gamma) {
  if (upper.size() != static_cast<std::size_t>(k) || lower.size() != static_cast<std::size_t>(l))
    throw Error(ErrorCode::LengthMismatch, "point colours do not match k and l");
  std::vector<ColoredPartition> out;
  for (auto& p : enumerate_partitions(k, l)) {
    if (!check_gamma_condition(p, *gamma, upper, lower)) continue;
    for (auto& colors : enumerate_colorings(p, *lambda))
      out.emplace_back(lambda, gamma, p, std::move(colors), std::vector<PointElem>(upper.begin(), upper.end()),
                       std::vector<PointElem>(lower.begin(), lower.end()));
  }
  return out;
}

std::vector<PointElem> identity_colors(int n) { return std::vector<PointElem>(static_cast<std::size_t>(n)); }

}  // namespace ncpart
