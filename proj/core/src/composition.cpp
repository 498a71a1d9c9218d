#include "ncpart/composition.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <map>
#include <numeric>
#include <stdexcept>

namespace ncpart {

std::string_view to_string(ComponentKind kind) {
  switch (kind) {
    case ComponentKind::UpperHalf: return "upper-half";
    case ComponentKind::LowerHalf: return "lower-half";
    case ComponentKind::Through: return "through";
    case ComponentKind::Cycle: return "cycle";
    case ComponentKind::UpperTrivial: return "upper-trivial";
    case ComponentKind::LowerTrivial: return "lower-trivial";
  }
  return "unknown";
}

namespace {

constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();

class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent_[std::max(a, b)] = std::min(a, b);
  }

 private:
  std::vector<std::size_t> parent_;
};

// Middle-row points of a block: the lower row for p, the upper row for q.
const std::vector<int>& middle_of(const Block& b, Layer layer) {
  return layer == Layer::P ? b.lower() : b.upper();
}

// Block lies entirely in the middle row.
bool middle_single(const Block& b, Layer layer) {
  return layer == Layer::P ? b.is_lower_single() : b.is_upper_single();
}

// Through blocks from left to right, and for each block its position in that order.
struct ThroughOrder {
  std::vector<std::size_t> blocks;
  std::vector<std::size_t> rank;

  explicit ThroughOrder(const TwoRowPartition& x) : rank(x.size(), kNone) {
    for (std::size_t b = 0; b < x.size(); ++b)
      if (x.block(b).is_through()) blocks.push_back(b);
    std::sort(blocks.begin(), blocks.end(),
              [&](std::size_t a, std::size_t b) { return x.block(a).upper().front() < x.block(b).upper().front(); });
    for (std::size_t i = 0; i < blocks.size(); ++i) rank[blocks[i]] = i;
  }

  std::size_t left_adjacent(std::size_t v) const { return rank[v] == 0 ? kNone : blocks[rank[v] - 1]; }
};

// Relative boundary product of the single-layer blocks on `row` strictly between the
// left-adjacent through block of v and v itself.
Elem gap_product(const ColoredPartition& x, const ThroughOrder& order, std::size_t v, Row row) {
  const std::size_t prev = order.left_adjacent(v);
  const int bound = prev == kNone ? 0 : x.block(prev).row(row).back();
  const int limit = x.block(v).row(row).front();
  std::vector<Block> family;
  std::vector<Elem> colors;
  for (std::size_t b = 0; b < x.size(); ++b) {
    const Block& blk = x.block(b);
    const bool single = row == Row::Upper ? blk.is_upper_single() : blk.is_lower_single();
    if (!single) continue;
    const int top = blk.row(row).back();
    if (bound < top && top < limit) {
      family.push_back(blk);
      colors.push_back(x.color(b));
    }
  }
  return relative_outer_boundary(family, row, colors, x.lambda()).product;
}

Elem left_adjacent_color(const ColoredPartition& x, const ThroughOrder& order, std::size_t v) {
  const std::size_t prev = order.left_adjacent(v);
  return prev == kNone ? kIdentity : x.color(prev);
}

Elem interval(const FiniteGroup& g, std::span<const Elem> xs, int lo, int hi) {
  Elem acc = kIdentity;
  for (int i = lo; i <= hi; ++i) acc = g.mul(acc, xs[static_cast<std::size_t>(i - 1)]);
  return acc;
}

void check_pair(const ColoredPartition& p, const ColoredPartition& q) {
  if (!(p.lambda() == q.lambda()) || !(p.gamma() == q.gamma()))
    throw Error(ErrorCode::GroupMismatch, "partitions use different groups");
  if (p.l() != q.k())
    throw Error(ErrorCode::MiddleMismatch,
                "lower size " + std::to_string(p.l()) + " differs from upper size " + std::to_string(q.k()));
  if (p.lower_colors() != q.upper_colors())
    throw Error(ErrorCode::MiddleMismatch, "middle point colours differ");
}

bool nested_in_component(const Block& b, Layer layer, const ComponentInfo& c, const TwoRowPartition& x) {
  if (!middle_single(b, layer)) return false;
  const auto& pts = middle_of(b, layer);
  for (std::size_t d : layer == Layer::P ? c.blocks_p : c.blocks_q) {
    const auto& dm = middle_of(x.block(d), layer);
    if (!dm.empty() && dm.front() < pts.front() && pts.back() < dm.back()) return true;
  }
  return false;
}

// x lies outside the middle interval of every block of the component from the given layer.
bool unspanned(int x, Layer layer, const ComponentInfo& c, const TwoRowPartition& part) {
  for (std::size_t d : layer == Layer::P ? c.blocks_p : c.blocks_q) {
    const auto& dm = middle_of(part.block(d), layer);
    if (!dm.empty() && dm.front() <= x && x <= dm.back()) return false;
  }
  return true;
}

}  // namespace

std::vector<ComponentInfo> connected_components(const TwoRowPartition& p, const TwoRowPartition& q) {
  if (p.l() != q.k())
    throw Error(ErrorCode::MiddleSizeMismatch,
                "lower size " + std::to_string(p.l()) + " differs from upper size " + std::to_string(q.k()));
  const auto k = static_cast<std::size_t>(p.k());
  const auto l = static_cast<std::size_t>(p.l());
  const auto m = static_cast<std::size_t>(q.l());
  auto upper_id = [&](int i) { return static_cast<std::size_t>(i - 1); };
  auto middle_id = [&](int j) { return k + static_cast<std::size_t>(j - 1); };
  auto lower_id = [&](int n) { return k + l + static_cast<std::size_t>(n - 1); };

  DisjointSets sets(k + l + m);
  auto join = [&](const Block& b, auto&& top_id, auto&& bottom_id) {
    std::vector<std::size_t> ids;
    for (int i : b.upper()) ids.push_back(top_id(i));
    for (int j : b.lower()) ids.push_back(bottom_id(j));
    for (std::size_t t = 1; t < ids.size(); ++t) sets.unite(ids[0], ids[t]);
  };
  for (const auto& b : p.blocks()) join(b, upper_id, middle_id);
  for (const auto& b : q.blocks()) join(b, middle_id, lower_id);

  std::map<std::size_t, ComponentInfo> by_root;
  for (int i = 1; i <= p.k(); ++i) by_root[sets.find(upper_id(i))].upper.push_back(i);
  for (int j = 1; j <= p.l(); ++j) by_root[sets.find(middle_id(j))].middle.push_back(j);
  for (int n = 1; n <= q.l(); ++n) by_root[sets.find(lower_id(n))].lower.push_back(n);
  for (std::size_t b = 0; b < p.size(); ++b) {
    const auto pt = p.block(b).min_point();
    by_root[sets.find(pt.row == Row::Upper ? upper_id(pt.index) : middle_id(pt.index))].blocks_p.push_back(b);
  }
  for (std::size_t b = 0; b < q.size(); ++b) {
    const auto pt = q.block(b).min_point();
    by_root[sets.find(pt.row == Row::Upper ? middle_id(pt.index) : lower_id(pt.index))].blocks_q.push_back(b);
  }

  std::vector<ComponentInfo> out;
  for (auto& [root, c] : by_root) {
    const bool u = !c.upper.empty();
    const bool mid = !c.middle.empty();
    const bool lo = !c.lower.empty();
    if (mid)
      c.kind = u && lo ? ComponentKind::Through
               : u     ? ComponentKind::UpperHalf
               : lo    ? ComponentKind::LowerHalf
                       : ComponentKind::Cycle;
    else
      c.kind = u ? ComponentKind::UpperTrivial : ComponentKind::LowerTrivial;
    out.push_back(std::move(c));
  }
  std::sort(out.begin(), out.end(), [](const ComponentInfo& a, const ComponentInfo& b) {
    auto key = [](const ComponentInfo& c) {
      if (c.meets_middle()) return std::tuple{0, c.middle.front()};
      if (!c.upper.empty()) return std::tuple{1, c.upper.front()};
      return std::tuple{2, c.lower.front()};
    };
    return key(a) < key(b);
  });
  return out;
}

std::vector<Entrance> component_entrances(const ComponentInfo& c, const TwoRowPartition& p, const TwoRowPartition& q) {
  if (!c.meets_middle()) throw Error(ErrorCode::TrivialComponent, "component does not meet the middle row");
  std::vector<Entrance> out;
  for (std::size_t i = 0; i + 1 < c.middle.size(); ++i) {
    const int lo = c.middle[i] + 1;
    const int hi = c.middle[i + 1] - 1;
    if (lo > hi) continue;
    bool entrance = true;
    bool in_sp = true;
    bool in_sq = true;
    for (int x = lo; x <= hi; ++x) {
      const Block& bp = p.block(p.block_of(low(x)));
      const Block& bq = q.block(q.block_of(up(x)));
      if (nested_in_component(bp, Layer::P, c, p) && nested_in_component(bq, Layer::Q, c, q)) entrance = false;
      in_sp = in_sp && unspanned(x, Layer::P, c, p);
      in_sq = in_sq && unspanned(x, Layer::Q, c, q);
    }
    if (!entrance) continue;
    if (in_sp == in_sq)
      throw std::logic_error("entrance [" + std::to_string(lo) + "," + std::to_string(hi) + "] is not one-sided");
    out.push_back({lo, hi, in_sp ? Row::Upper : Row::Lower});
  }
  return out;
}

std::vector<MiddleConstraint> middle_system(const ColoredPartition& p, const ColoredPartition& q,
                                            std::span<const Elem> r, std::span<const Elem> d) {
  check_pair(p, q);
  if (r.size() != static_cast<std::size_t>(p.k()) || d.size() != static_cast<std::size_t>(q.l()))
    throw Error(ErrorCode::LengthMismatch, "outer tuples do not match the partition sizes");
  const auto& g = p.lambda();
  const ThroughOrder tp(p.partition());
  const ThroughOrder tq(q.partition());
  std::vector<MiddleConstraint> out;
  for (std::size_t b = 0; b < p.size(); ++b) {
    const Block& blk = p.block(b);
    if (blk.is_upper_single()) continue;
    const int lo = blk.lower().front();
    const int hi = blk.lower().back();
    Elem target = p.color(b);
    if (blk.is_through()) {
      const Elem gv = gap_product(p, tp, b, Row::Lower);
      const Elem av = gap_product(p, tp, b, Row::Upper);
      const Elem tv = left_adjacent_color(p, tp, b);
      const Elem ir = interval(g, r, blk.upper().front(), blk.upper().back());
      target = g.product({g.inv(gv), g.inv(tv), av, ir, p.color(b)});
    }
    out.push_back({lo, hi, target, Layer::P, b});
  }
  for (std::size_t b = 0; b < q.size(); ++b) {
    const Block& blk = q.block(b);
    if (blk.is_lower_single()) continue;
    const int lo = blk.upper().front();
    const int hi = blk.upper().back();
    Elem target = g.inv(q.color(b));
    if (blk.is_through()) {
      const Elem bv = gap_product(q, tq, b, Row::Upper);
      const Elem betav = gap_product(q, tq, b, Row::Lower);
      const Elem iv = left_adjacent_color(q, tq, b);
      const Elem id = interval(g, d, blk.lower().front(), blk.lower().back());
      target = g.product({g.inv(bv), iv, betav, id, g.inv(q.color(b))});
    }
    out.push_back({lo, hi, target, Layer::Q, b});
  }
  std::sort(out.begin(), out.end(), [](const MiddleConstraint& a, const MiddleConstraint& b) {
    return std::tuple{a.lo, a.hi, a.source, a.block} < std::tuple{b.lo, b.hi, b.source, b.block};
  });
  return out;
}

GainGraph::GainGraph(const FiniteGroup& lambda, std::size_t vertex_count, std::vector<GainEdge> edges)
    : edges_(std::move(edges)), component_(vertex_count, kNone), potential_(vertex_count, kIdentity) {
  std::vector<std::vector<std::size_t>> incident(vertex_count);
  for (std::size_t e = 0; e < edges_.size(); ++e) {
    if (edges_[e].from >= vertex_count || edges_[e].to >= vertex_count)
      throw Error(ErrorCode::LengthMismatch, "edge endpoint outside the vertex set");
    incident[edges_[e].from].push_back(e);
    incident[edges_[e].to].push_back(e);
  }
  for (std::size_t root = 0; root < vertex_count; ++root) {
    if (component_[root] != kNone) continue;
    component_[root] = component_count_;
    potential_[root] = kIdentity;
    std::deque<std::size_t> queue{root};
    while (!queue.empty()) {
      const std::size_t v = queue.front();
      queue.pop_front();
      for (std::size_t e : incident[v]) {
        const auto& edge = edges_[e];
        const std::size_t w = edge.from == v ? edge.to : edge.from;
        const Elem expected =
            edge.from == v ? lambda.mul(potential_[v], edge.gain) : lambda.mul(potential_[v], lambda.inv(edge.gain));
        if (component_[w] == kNone) {
          component_[w] = component_count_;
          potential_[w] = expected;
          queue.push_back(w);
        } else if (potential_[w] != expected) {
          balanced_ = false;
        }
      }
    }
    ++component_count_;
  }
}

GainGraph build_gain_graph(const FiniteGroup& lambda, int l, std::span<const MiddleConstraint> constraints) {
  std::vector<GainEdge> edges;
  for (const auto& c : constraints) {
    if (c.lo < 1 || c.hi > l || c.lo > c.hi) throw Error(ErrorCode::LengthMismatch, "constraint outside the middle row");
    edges.push_back({static_cast<std::size_t>(c.lo - 1), static_cast<std::size_t>(c.hi), c.target});
  }
  return GainGraph(lambda, static_cast<std::size_t>(l) + 1, std::move(edges));
}

std::uint64_t count_middle_solutions(const ColoredPartition& p, const ColoredPartition& q, std::span<const Elem> r,
                                     std::span<const Elem> d) {
  const auto system = middle_system(p, q, r, d);
  const auto& g = p.lambda();
  // Relations of p and q that involve only r or only d must hold on their own.
  for (std::size_t b = 0; b < p.size(); ++b) {
    const Block& blk = p.block(b);
    if (blk.is_upper_single() && g.mul(interval(g, r, blk.upper().front(), blk.upper().back()), p.color(b)) != kIdentity)
      return 0;
  }
  for (std::size_t b = 0; b < q.size(); ++b) {
    const Block& blk = q.block(b);
    if (blk.is_lower_single() && interval(g, d, blk.lower().front(), blk.lower().back()) != q.color(b)) return 0;
  }
  const GainGraph graph = build_gain_graph(g, p.l(), system);
  if (!graph.balanced()) return 0;
  std::uint64_t count = 1;
  for (std::size_t i = 1; i < graph.component_count(); ++i) count *= g.order();
  return count;
}

Elem entrance_constant(const Entrance& e, const ComponentInfo& c, const ColoredPartition& p,
                       const ColoredPartition& q) {
  const auto& g = p.lambda();
  const TwoRowPartition& pp = p.partition();
  const TwoRowPartition& qq = q.partition();
  auto nested = [&](Layer layer, std::size_t b) {
    const Block& blk = layer == Layer::P ? pp.block(b) : qq.block(b);
    if (nested_in_component(blk, layer, c, layer == Layer::P ? pp : qq)) return true;
    if (!middle_single(blk, layer)) return false;
    const auto& pts = middle_of(blk, layer);
    return e.lo <= pts.front() && pts.back() <= e.hi;
  };

  // Cluster of nested blocks reachable from the entrance through shared middle points.
  std::vector<bool> in_p(p.size(), false);
  std::vector<bool> in_q(q.size(), false);
  std::deque<std::pair<Layer, std::size_t>> queue;
  auto visit_point = [&](int x) {
    const std::size_t bp = pp.block_of(low(x));
    const std::size_t bq = qq.block_of(up(x));
    if (!in_p[bp] && nested(Layer::P, bp)) {
      in_p[bp] = true;
      queue.emplace_back(Layer::P, bp);
    }
    if (!in_q[bq] && nested(Layer::Q, bq)) {
      in_q[bq] = true;
      queue.emplace_back(Layer::Q, bq);
    }
  };
  for (int x = e.lo; x <= e.hi; ++x) visit_point(x);
  while (!queue.empty()) {
    auto [layer, b] = queue.front();
    queue.pop_front();
    for (int x : middle_of(layer == Layer::P ? pp.block(b) : qq.block(b), layer)) visit_point(x);
  }

  // Add middle single-layer blocks whose span sits inside a cluster block of the same layer.
  auto enclose = [&](const TwoRowPartition& x, Layer layer, std::vector<bool>& member) {
    std::vector<bool> extra(member.size(), false);
    for (std::size_t b = 0; b < x.size(); ++b) {
      if (member[b] || !middle_single(x.block(b), layer)) continue;
      const auto& pts = middle_of(x.block(b), layer);
      for (std::size_t a = 0; a < x.size() && !extra[b]; ++a) {
        if (!member[a]) continue;
        const auto& outer = middle_of(x.block(a), layer);
        if (outer.front() <= pts.front() && pts.back() <= outer.back()) extra[b] = true;
      }
    }
    for (std::size_t b = 0; b < x.size(); ++b) member[b] = member[b] || extra[b];
  };
  enclose(pp, Layer::P, in_p);
  enclose(qq, Layer::Q, in_q);

  std::vector<MiddleConstraint> system;
  for (std::size_t b = 0; b < p.size(); ++b)
    if (in_p[b]) system.push_back({pp.block(b).lower().front(), pp.block(b).lower().back(), p.color(b), Layer::P, b});
  for (std::size_t b = 0; b < q.size(); ++b)
    if (in_q[b])
      system.push_back({qq.block(b).upper().front(), qq.block(b).upper().back(), g.inv(q.color(b)), Layer::Q, b});

  const GainGraph graph = build_gain_graph(g, p.l(), system);
  if (!graph.balanced())
    throw Error(ErrorCode::UnsolvableSubsystem,
                "entrance [" + std::to_string(e.lo) + "," + std::to_string(e.hi) + "] has no solution");
  const auto lo = static_cast<std::size_t>(e.lo - 1);
  const auto hi = static_cast<std::size_t>(e.hi);
  if (graph.component_of(lo) != graph.component_of(hi))
    throw Error(ErrorCode::ConstantsUnavailable,
                "entrance [" + std::to_string(e.lo) + "," + std::to_string(e.hi) + "] is not determined by its blocks");
  return g.mul(g.inv(graph.potential()[lo]), graph.potential()[hi]);
}

ComponentConstants component_constants(const ComponentInfo& c, const ColoredPartition& p, const ColoredPartition& q,
                                       std::span<const Elem> s, bool with_entrances) {
  if (s.size() != static_cast<std::size_t>(p.l())) throw Error(ErrorCode::LengthMismatch, "middle vector has wrong length");
  const auto& g = p.lambda();
  ComponentConstants out;
  switch (c.kind) {
    case ComponentKind::UpperTrivial:
      out.t = p.color(c.blocks_p.front());
      return out;
    case ComponentKind::LowerTrivial:
      out.iota = q.color(c.blocks_q.front());
      return out;
    default:
      break;
  }
  if (with_entrances)
    for (const auto& e : component_entrances(c, p.partition(), q.partition()))
      out.entrance.push_back(entrance_constant(e, c, p, q));

  const ThroughOrder tp(p.partition());
  const ThroughOrder tq(q.partition());
  auto through_in = [](const ColoredPartition& x, const std::vector<std::size_t>& blocks, const ThroughOrder& order) {
    std::vector<std::size_t> th;
    for (std::size_t b : blocks)
      if (x.block(b).is_through()) th.push_back(b);
    std::sort(th.begin(), th.end(), [&](std::size_t a, std::size_t b) { return order.rank[a] < order.rank[b]; });
    return th;
  };
  const auto thp = through_in(p, c.blocks_p, tp);
  const auto thq = through_in(q, c.blocks_q, tq);
  const int top = c.middle.back();

  switch (c.kind) {
    case ComponentKind::UpperHalf: {
      const std::size_t vl = thp.front();
      const std::size_t vr = thp.back();
      out.t = p.color(vr);
      out.t_prime = left_adjacent_color(p, tp, vl);
      out.g = gap_product(p, tp, vl, Row::Lower);
      out.alpha = gap_product(p, tp, vl, Row::Upper);
      out.f = interval(g, s, p.block(vl).lower().front(), p.block(vr).lower().back());
      break;
    }
    case ComponentKind::LowerHalf: {
      const std::size_t vl = thq.front();
      const std::size_t vr = thq.back();
      out.iota = q.color(vr);
      out.iota_prime = left_adjacent_color(q, tq, vl);
      out.b = gap_product(q, tq, vl, Row::Upper);
      out.beta = gap_product(q, tq, vl, Row::Lower);
      out.f = interval(g, s, q.block(vl).upper().front(), q.block(vr).upper().back());
      break;
    }
    case ComponentKind::Through: {
      const std::size_t vp = thp.back();
      const std::size_t vq = thq.back();
      out.t = p.color(vp);
      out.iota = q.color(vq);
      out.h = interval(g, s, p.block(vp).lower().back() + 1, top);
      out.mu = interval(g, s, q.block(vq).upper().back() + 1, top);
      break;
    }
    default:
      break;
  }
  return out;
}

Elem component_label(const ComponentInfo& c, const ComponentConstants& k, const FiniteGroup& g) {
  switch (c.kind) {
    case ComponentKind::UpperHalf:
      return g.product({k.t, g.inv(k.f), g.inv(k.g), g.inv(k.t_prime), k.alpha});
    case ComponentKind::LowerHalf:
      return g.product({g.inv(k.beta), g.inv(k.iota_prime), k.b, k.f, k.iota});
    case ComponentKind::Through:
      return g.product({k.t, k.h, g.inv(k.mu), k.iota});
    case ComponentKind::UpperTrivial:
      return k.t;
    case ComponentKind::LowerTrivial:
      return k.iota;
    case ComponentKind::Cycle:
      break;
  }
  throw Error(ErrorCode::ConstantsUnavailable, "cycle components carry no label");
}

std::optional<Admissible> find_admissible(const ColoredPartition& p, const ColoredPartition& q) {
  check_pair(p, q);
  const auto& g = p.lambda();
  const auto k = static_cast<std::size_t>(p.k());
  const auto l = static_cast<std::size_t>(p.l());
  const auto m = static_cast<std::size_t>(q.l());
  // Prefix products of r, s, d as vertices; all three empty prefixes share vertex 0.
  auto R = [&](int i) { return i == 0 ? std::size_t{0} : static_cast<std::size_t>(i); };
  auto S = [&](int j) { return j == 0 ? std::size_t{0} : k + static_cast<std::size_t>(j); };
  auto D = [&](int n) { return n == 0 ? std::size_t{0} : k + l + static_cast<std::size_t>(n); };

  std::vector<GainEdge> edges;
  for (std::size_t b = 0; b < p.size(); ++b) {
    const Block& blk = p.block(b);
    const Elem t = p.color(b);
    if (blk.is_through())
      edges.push_back({R(blk.upper().back()), S(blk.lower().back()), t});
    else if (blk.is_lower_single())
      edges.push_back({S(blk.lower().front() - 1), S(blk.lower().back()), t});
    else
      edges.push_back({R(blk.upper().front() - 1), R(blk.upper().back()), g.inv(t)});
  }
  for (std::size_t b = 0; b < q.size(); ++b) {
    const Block& blk = q.block(b);
    const Elem t = q.color(b);
    if (blk.is_through())
      edges.push_back({S(blk.upper().back()), D(blk.lower().back()), t});
    else if (blk.is_upper_single())
      edges.push_back({S(blk.upper().front() - 1), S(blk.upper().back()), g.inv(t)});
    else
      edges.push_back({D(blk.lower().front() - 1), D(blk.lower().back()), t});
  }
  const GainGraph graph(g, 1 + k + l + m, std::move(edges));
  if (!graph.balanced()) return std::nullopt;
  const auto& pi = graph.potential();
  auto step = [&](std::size_t a, std::size_t b) { return g.mul(g.inv(pi[a]), pi[b]); };
  Admissible out;
  for (int i = 1; i <= p.k(); ++i) out.r.push_back(step(R(i - 1), R(i)));
  for (int j = 1; j <= p.l(); ++j) out.s.push_back(step(S(j - 1), S(j)));
  for (int n = 1; n <= q.l(); ++n) out.d.push_back(step(D(n - 1), D(n)));
  return out;
}

CompositionResult compose(const ColoredPartition& p, const ColoredPartition& q) {
  check_pair(p, q);
  CompositionResult out;
  out.k = p.k();
  out.m = q.l();
  out.lambda = p.lambda_ptr();
  out.components = connected_components(p.partition(), q.partition());
  const auto adm = find_admissible(p, q);
  if (!adm) return out;

  const auto& g = p.lambda();
  const GainGraph middle = build_gain_graph(g, p.l(), middle_system(p, q, adm->r, adm->d));
  out.exponent = static_cast<int>(middle.component_count()) - 1;

  std::vector<Block> blocks;
  std::vector<Elem> colors;
  for (const auto& c : out.components) {
    if (c.kind == ComponentKind::Cycle) continue;
    blocks.emplace_back(c.upper, c.lower);
    colors.push_back(component_label(c, component_constants(c, p, q, adm->s, false), g));
  }
  TwoRowPartition part(p.k(), q.l(), blocks);
  std::vector<Elem> sorted(part.size());
  for (std::size_t b = 0; b < blocks.size(); ++b) sorted[part.index_of(blocks[b])] = colors[b];
  out.composed.emplace(p.lambda_ptr(), p.gamma_ptr(), std::move(part), std::move(sorted), p.upper_colors(),
                       q.lower_colors());
  return out;
}

MorphismMatrix CompositionResult::matrix(std::uint64_t guard) const {
  if (zero()) {
    const std::size_t n = lambda->order();
    return MorphismMatrix(checked_power(n, static_cast<std::size_t>(m), guard),
                          checked_power(n, static_cast<std::size_t>(k), guard));
  }
  std::int64_t scalar = 1;
  for (int i = 0; i < exponent; ++i) scalar *= static_cast<std::int64_t>(lambda->order());
  return mat_scale(to_matrix(*composed, guard), Rational(scalar));
}

MorphismMatrix brute_force_compose(const ColoredPartition& p, const ColoredPartition& q, std::uint64_t guard) {
  check_pair(p, q);
  return mat_compose(to_matrix(q, guard), to_matrix(p, guard));
}

std::uint64_t brute_force_middle_count(const ColoredPartition& p, const ColoredPartition& q, std::span<const Elem> r,
                                       std::span<const Elem> d) {
  check_pair(p, q);
  const std::size_t n = p.lambda().order();
  const auto l = static_cast<std::size_t>(p.l());
  const std::uint64_t total = checked_power(n, l, std::uint64_t{1} << 24);
  std::uint64_t count = 0;
  for (std::uint64_t idx = 0; idx < total; ++idx) {
    const auto s = decode_basis(idx, l, n);
    if (delta_eval(p, r, s) && delta_eval(q, s, d)) ++count;
  }
  return count;
}

bool delta_of_composite(const ColoredPartition& p, const ColoredPartition& q, std::span<const Elem> r,
                        std::span<const Elem> d) {
  const auto result = compose(p, q);
  if (result.zero()) throw Error(ErrorCode::ZeroComposite, "the composite operator is zero");
  return delta_eval(*result.composed, r, d);
}

}  // namespace ncpart
