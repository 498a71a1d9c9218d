#include <algorithm>
#include <memory>
#include <numeric>

#include "doctest.h"
#include "ncpart/composition.hpp"
#include "oracles.hpp"

using namespace ncpart;

namespace {

Block B(std::vector<int> upper, std::vector<int> lower) { return Block(std::move(upper), std::move(lower)); }

LambdaPtr lambda(const char* spec) { return std::make_shared<const FiniteGroup>(finite_group_from_spec(spec)); }
const GammaPtr kFree1 = std::make_shared<const PointGroup>(group_from_spec("free:1"));

ColoredPartition colored(const LambdaPtr& l, int k, int n, std::vector<Block> blocks, std::vector<Elem> colors) {
  TwoRowPartition p(k, n, blocks);
  std::vector<Elem> sorted(p.size());
  for (std::size_t b = 0; b < blocks.size(); ++b) sorted[p.index_of(blocks[b])] = colors[b];
  return ColoredPartition(l, kFree1, p, sorted, identity_colors(k), identity_colors(n));
}

std::vector<ColoredPartition> shapes(const LambdaPtr& l, int k, int n) {
  return enumerate_colored(k, n, identity_colors(k), identity_colors(n), l, kFree1);
}

bool has(const TwoRowPartition& p, const Block& b) { return std::ranges::find(p.blocks(), b) != p.blocks().end(); }

std::uint64_t power(std::size_t n, int e) {
  std::uint64_t out = 1;
  for (int i = 0; i < e; ++i) out *= n;
  return out;
}

ErrorCode code_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an exception");
  return ErrorCode::ParseError;
}

}  // namespace

TEST_CASE("connected components") {
  const TwoRowPartition strand(1, 1, {B({1}, {1})});
  const auto id = connected_components(strand, strand);
  REQUIRE(id.size() == 1);
  CHECK(id[0].kind == ComponentKind::Through);

  const TwoRowPartition p(0, 4, {B({}, {1, 4}), B({}, {2, 3})});
  const TwoRowPartition q(4, 0, {B({1, 2}, {}), B({3, 4}, {})});
  const auto cyc = connected_components(p, q);
  REQUIRE(cyc.size() == 1);
  CHECK(cyc[0].kind == ComponentKind::Cycle);
  CHECK(cyc[0].middle == std::vector{1, 2, 3, 4});

  const TwoRowPartition singles(1, 1, {B({1}, {}), B({}, {1})});
  const auto mixed = connected_components(singles, strand);
  REQUIRE(mixed.size() == 2);
  CHECK(mixed[0].kind == ComponentKind::LowerHalf);
  CHECK(mixed[0].lower == std::vector{1});
  CHECK(mixed[1].kind == ComponentKind::UpperTrivial);
  CHECK(mixed[1].upper == std::vector{1});

  CHECK(code_of([&] { connected_components(p, strand); }) == ErrorCode::MiddleSizeMismatch);
}

TEST_CASE("entrances") {
  const TwoRowPartition p(0, 4, {B({}, {1, 4}), B({}, {2}), B({}, {3})});
  const TwoRowPartition q(4, 0, {B({2, 3}, {}), B({1}, {}), B({4}, {})});
  const auto cs = connected_components(p, q);
  REQUIRE(cs[0].middle == std::vector{1, 4});
  CHECK(component_entrances(cs[0], p, q) == std::vector<Entrance>{{2, 3, Row::Lower}});

  const TwoRowPartition pu(0, 4, {B({}, {2, 3}), B({}, {1}), B({}, {4})});
  const TwoRowPartition qd(4, 0, {B({1, 4}, {}), B({2}, {}), B({3}, {})});
  const auto swapped = connected_components(pu, qd);
  REQUIRE(swapped[0].middle == std::vector{1, 4});
  CHECK(component_entrances(swapped[0], pu, qd) == std::vector<Entrance>{{2, 3, Row::Upper}});

  const TwoRowPartition cup(0, 2, {B({}, {1, 2})});
  const TwoRowPartition cap(2, 0, {B({1, 2}, {})});
  CHECK(component_entrances(connected_components(cup, cap)[0], cup, cap).empty());
  const auto trivial = connected_components(TwoRowPartition(1, 0, {B({1}, {})}), TwoRowPartition(0, 0, {}));
  CHECK(code_of([&] { component_entrances(trivial[0], cup, cap); }) == ErrorCode::TrivialComponent);
}

TEST_CASE("entrance constants") {
  // p: {1,4} with singletons x2, x3; q: {2,3} coloured y with singletons at 1 and 4.
  const auto z3 = lambda("Z3");
  int solvable = 0;
  for (const auto& p : shapes(z3, 0, 4)) {
    if (p.size() != 3 || !has(p.partition(), B({}, {1, 4}))) continue;
    for (const auto& q : shapes(z3, 4, 0)) {
      if (q.size() != 3 || !has(q.partition(), B({2, 3}, {}))) continue;
      const auto cs = connected_components(p.partition(), q.partition());
      const auto ents = component_entrances(cs[0], p.partition(), q.partition());
      REQUIRE(ents.size() == 1);
      const Elem x2 = p.color(p.partition().index_of(B({}, {2})));
      const Elem x3 = p.color(p.partition().index_of(B({}, {3})));
      const Elem y = q.color(q.partition().index_of(B({2, 3}, {})));
      const bool consistent = z3->mul(x2, x3) == z3->inv(y);
      CHECK(find_admissible(p, q).has_value() == (consistent && !compose(p, q).zero()));
      if (!consistent) {
        CHECK(code_of([&] { entrance_constant(ents[0], cs[0], p, q); }) == ErrorCode::UnsolvableSubsystem);
        continue;
      }
      ++solvable;
      CHECK(entrance_constant(ents[0], cs[0], p, q) == z3->mul(x2, x3));
      CHECK(entrance_constant(ents[0], cs[0], p, q) == z3->inv(y));
    }
  }
  CHECK(solvable > 0);
}

TEST_CASE("middle systems and gain graphs") {
  const auto z2 = lambda("Z2");
  const Elem a = z2->element(1);
  const auto p = colored(z2, 0, 1, {B({}, {1})}, {a});
  const auto q_ok = colored(z2, 1, 0, {B({1}, {})}, {a});
  const auto q_bad = colored(z2, 1, 0, {B({1}, {})}, {kIdentity});

  const auto sys = middle_system(p, q_bad, {}, {});
  REQUIRE(sys.size() == 2);
  CHECK(sys[0].target == a);
  CHECK(sys[1].target == kIdentity);
  CHECK_FALSE(build_gain_graph(*z2, 1, sys).balanced());
  CHECK(count_middle_solutions(p, q_bad, {}, {}) == 0);
  CHECK(count_middle_solutions(p, q_ok, {}, {}) == 1);

  const auto z3 = lambda("Z3");
  const auto cup = ncpart::cup(z3, kFree1, kFree1->identity());
  const auto cap = ncpart::cap(z3, kFree1, kFree1->identity());
  const auto loop = middle_system(cup, cap, {}, {});
  REQUIRE(loop.size() == 2);
  for (const auto& c : loop) {
    CHECK(c.lo == 1);
    CHECK(c.hi == 2);
    CHECK(c.target == kIdentity);
  }
  const auto g = build_gain_graph(*z3, 2, loop);
  CHECK(g.component_count() == 2);
  CHECK(g.balanced());
  CHECK(g.component_of(0) == g.component_of(2));
  CHECK(g.component_of(1) != g.component_of(0));
  CHECK(count_middle_solutions(cup, cap, {}, {}) == 3);

  const auto strand = identity_strands(z3, kFree1, identity_colors(1));
  const auto zig_p = tensor_partitions(strand, cup);
  const auto zig_q = tensor_partitions(cap, strand);
  const auto zs = middle_system(zig_p, zig_q, std::vector{z3->element(1)}, std::vector{z3->element(1)});
  CHECK(build_gain_graph(*z3, 3, zs).component_count() == 1);

  const auto ids = middle_system(strand, strand, std::vector{z3->element(2)}, std::vector{z3->element(2)});
  CHECK(count_middle_solutions(strand, strand, std::vector{z3->element(2)}, std::vector{z3->element(2)}) == 1);
  CHECK(count_middle_solutions(strand, strand, std::vector{z3->element(2)}, std::vector{kIdentity}) == 0);
  CHECK_FALSE(ids.empty());

  CHECK(code_of([&] { middle_system(strand, strand, {}, {}); }) == ErrorCode::LengthMismatch);
}

TEST_CASE("compose examples") {
  const auto z3 = lambda("Z3");
  const auto x = kFree1->parse("x");
  const auto strand = identity_strands(z3, kFree1, identity_colors(1));

  const auto id = compose(strand, strand);
  REQUIRE_FALSE(id.zero());
  CHECK(*id.composed == strand);
  CHECK(id.exponent == 0);

  const auto loop = compose(cup(z3, kFree1, x), cap(z3, kFree1, x));
  REQUIRE_FALSE(loop.zero());
  CHECK(*loop.composed == empty_partition(z3, kFree1));
  CHECK(loop.exponent == 1);
  CHECK(mat_equal(loop.matrix(), MorphismMatrix(1, 1, {{0, 0, 3}})));
  CHECK(mat_equal(brute_force_compose(cup(z3, kFree1, x), cap(z3, kFree1, x)), MorphismMatrix(1, 1, {{0, 0, 3}})));
  CHECK(delta_of_composite(cup(z3, kFree1, x), cap(z3, kFree1, x), {}, {}));

  const auto xs = identity_strands(z3, kFree1, std::vector{x});
  const auto zig = compose(tensor_partitions(xs, cup(z3, kFree1, kFree1->inv(x))), tensor_partitions(cap(z3, kFree1, x), xs));
  REQUIRE_FALSE(zig.zero());
  CHECK(*zig.composed == xs);
  CHECK(zig.exponent == 0);
  REQUIRE(zig.components.size() == 1);
  CHECK(zig.components[0].kind == ComponentKind::Through);

  const Elem a = z3->element(1);
  CHECK(delta_of_composite(strand, strand, std::vector{a}, std::vector{a}));
  CHECK_FALSE(delta_of_composite(strand, strand, std::vector{a}, std::vector{kIdentity}));

  const auto single = colored(z3, 1, 1, {B({1}, {}), B({}, {1})}, {a, kIdentity});
  const auto with_single = compose(single, strand);
  REQUIRE_FALSE(with_single.zero());
  CHECK(with_single.composed->color(with_single.composed->partition().index_of(B({1}, {}))) == a);
}

TEST_CASE("unit law") {
  for (const char* spec : {"Z2", "Z3", "S3"}) {
    const auto l = lambda(spec);
    for (int k = 0; k <= 2; ++k)
      for (int n = 0; n <= 2; ++n)
        for (const auto& p : shapes(l, k, n)) {
          const auto left = compose(p, identity_strands(l, kFree1, p.lower_colors()));
          const auto right = compose(identity_strands(l, kFree1, p.upper_colors()), p);
          REQUIRE_FALSE(left.zero());
          REQUIRE_FALSE(right.zero());
          REQUIRE(*left.composed == p);
          REQUIRE(*right.composed == p);
          REQUIRE(left.exponent == 0);
          REQUIRE(right.exponent == 0);
        }
  }
}

TEST_CASE("composition agrees with the matrix product") {
  for (const char* spec : {"Z2", "Z3"}) {
    const auto l = lambda(spec);
    const std::size_t n = l->order();
    for (int k = 0; k <= 2; ++k)
      for (int mid = 0; mid <= 2; ++mid)
        for (int m = 0; m <= 2; ++m)
          for (const auto& p : shapes(l, k, mid))
            for (const auto& q : shapes(l, mid, m)) {
              const auto res = compose(p, q);
              const auto brute = brute_force_compose(p, q);
              REQUIRE(mat_equal(res.matrix(), brute));
              if (res.zero()) {
                REQUIRE(code_of([&] { delta_of_composite(p, q, {}, {}); }) == ErrorCode::ZeroComposite);
                continue;
              }
              REQUIRE(res.composed->valid());
              for (std::uint64_t ri = 0; ri < brute.cols(); ++ri)
                for (std::uint64_t di = 0; di < brute.rows(); ++di) {
                  const auto r = decode_basis(ri, static_cast<std::size_t>(k), n);
                  const auto d = decode_basis(di, static_cast<std::size_t>(m), n);
                  const auto count = oracle::middle_solutions(p, q, r, d).size();
                  REQUIRE(count_middle_solutions(p, q, r, d) == count);
                  REQUIRE(brute_force_middle_count(p, q, r, d) == count);
                  REQUIRE(delta_of_composite(p, q, r, d) == (count > 0));
                }
            }
  }
}

TEST_CASE("entrance constants are constant on solutions") {
  const auto z2 = lambda("Z2");
  const std::size_t n = z2->order();
  int checked = 0;
  for (int k = 0; k <= 2; ++k)
    for (int mid = 2; mid <= 3; ++mid)
      for (int m = 0; m <= 2; ++m)
        for (const auto& p : shapes(z2, k, mid))
          for (const auto& q : shapes(z2, mid, m)) {
            if (compose(p, q).zero()) continue;
            for (const auto& c : connected_components(p.partition(), q.partition())) {
              if (!c.meets_middle()) continue;
              const auto ents = component_entrances(c, p.partition(), q.partition());
              for (const auto& e : ents) {
                const Elem h = entrance_constant(e, c, p, q);
                for (std::uint64_t ri = 0; ri < power(n, k); ++ri)
                  for (std::uint64_t di = 0; di < power(n, m); ++di) {
                    const auto r = decode_basis(ri, static_cast<std::size_t>(k), n);
                    const auto d = decode_basis(di, static_cast<std::size_t>(m), n);
                    for (const auto& s : oracle::middle_solutions(p, q, r, d)) {
                      std::vector<Elem> part(s.begin() + e.lo - 1, s.begin() + e.hi);
                      REQUIRE(ordered_product(*z2, part) == h);
                      ++checked;
                    }
                  }
              }
            }
          }
  CHECK(checked > 0);
}

TEST_CASE("labels") {
  const auto z2 = lambda("Z2");
  const Elem a = z2->element(1);
  const auto strand = identity_strands(z2, kFree1, identity_colors(1));
  const auto id = compose(strand, strand);
  const auto adm = find_admissible(strand, strand);
  REQUIRE(adm.has_value());
  CHECK(component_label(id.components[0], component_constants(id.components[0], strand, strand, adm->s), *z2) ==
        kIdentity);

  const auto single = colored(z2, 1, 0, {B({1}, {})}, {a});
  const auto empty = empty_partition(z2, kFree1);
  const auto res = compose(single, empty);
  REQUIRE(res.components.size() == 1);
  CHECK(res.components[0].kind == ComponentKind::UpperTrivial);
  const auto adm2 = find_admissible(single, empty);
  REQUIRE(adm2.has_value());
  CHECK(component_label(res.components[0], component_constants(res.components[0], single, empty, adm2->s), *z2) == a);
  CHECK(to_string(ComponentKind::Through) == "through");
}

TEST_CASE("composition errors") {
  const auto z2 = lambda("Z2");
  const auto z3 = lambda("Z3");
  const auto x = kFree1->parse("x");
  const auto strand = identity_strands(z2, kFree1, identity_colors(1));
  CHECK(code_of([&] { compose(strand, cup(z2, kFree1, x)); }) == ErrorCode::MiddleMismatch);
  CHECK(code_of([&] { compose(identity_strands(z2, kFree1, std::vector{x}), strand); }) == ErrorCode::MiddleMismatch);
  CHECK(code_of([&] { compose(strand, identity_strands(z3, kFree1, identity_colors(1))); }) == ErrorCode::GroupMismatch);

  const Elem a = z2->element(1);
  const auto p = colored(z2, 0, 1, {B({}, {1})}, {a});
  const auto q = colored(z2, 1, 0, {B({1}, {})}, {kIdentity});
  const auto res = compose(p, q);
  CHECK(res.zero());
  CHECK(mat_equal(res.matrix(), MorphismMatrix(1, 1)));
  CHECK(code_of([&] { delta_of_composite(p, q, {}, {}); }) == ErrorCode::ZeroComposite);
}

namespace {

struct MiddleEdge {
  int lo;
  int hi;
  bool from_p;
  bool outer;
};

// One edge min-1 -> max per middle-touching block of p and of q.
std::vector<MiddleEdge> middle_edges(const TwoRowPartition& p, const TwoRowPartition& q) {
  std::vector<MiddleEdge> out;
  auto add = [&](const TwoRowPartition& x, bool lower, bool from_p) {
    std::vector<std::pair<int, int>> spans;
    for (const auto& b : x.blocks()) {
      const auto& pts = lower ? b.lower() : b.upper();
      if (!pts.empty()) spans.emplace_back(pts.front(), pts.back());
    }
    for (const auto& [lo, hi] : spans) {
      bool outer = true;
      for (const auto& [a, z] : spans)
        if (a < lo && hi < z) outer = false;
      out.push_back({lo, hi, from_p, outer});
    }
  };
  add(p, true, true);
  add(q, false, false);
  return out;
}

// Edge subsets in which every touched vertex has degree two and the touched vertices are connected.
std::vector<std::uint32_t> simple_cycles(const std::vector<MiddleEdge>& edges, int l) {
  std::vector<std::uint32_t> out;
  for (std::uint32_t mask = 1; mask < (1u << edges.size()); ++mask) {
    std::vector<int> degree(static_cast<std::size_t>(l + 1), 0);
    std::vector<int> parent(static_cast<std::size_t>(l + 1));
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
      while (parent[static_cast<std::size_t>(x)] != x) x = parent[static_cast<std::size_t>(x)];
      return x;
    };
    for (std::size_t e = 0; e < edges.size(); ++e)
      if (mask >> e & 1) {
        ++degree[static_cast<std::size_t>(edges[e].lo - 1)];
        ++degree[static_cast<std::size_t>(edges[e].hi)];
        parent[static_cast<std::size_t>(find(edges[e].lo - 1))] = find(edges[e].hi);
      }
    int root = -1;
    bool ok = true;
    for (int v = 0; v <= l && ok; ++v) {
      const int d = degree[static_cast<std::size_t>(v)];
      if (d == 0) continue;
      if (d != 2) ok = false;
      if (root == -1) root = find(v);
      if (find(v) != root) ok = false;
    }
    if (ok) out.push_back(mask);
  }
  return out;
}

}  // namespace

TEST_CASE("cycles of the middle graph") {
  int single = 0;
  for (int k = 0; k <= 1; ++k)
    for (int l = 1; l <= 4; ++l)
      for (int m = 0; m <= 1; ++m)
        for (const auto& p : enumerate_partitions(k, l))
          for (const auto& q : enumerate_partitions(l, m)) {
            const auto edges = middle_edges(p, q);
            const auto cycles = simple_cycles(edges, l);
            for (std::uint32_t c : cycles)
              for (int x = 1; x <= l; ++x) {
                int crossings = 0;
                for (std::size_t e = 0; e < edges.size(); ++e)
                  if ((c >> e & 1) && edges[e].lo <= x && x <= edges[e].hi) ++crossings;
                REQUIRE(crossings % 2 == 0);
              }
            const auto comps = connected_components(p, q);
            const auto touching = std::ranges::count_if(comps, [](const ComponentInfo& c) { return c.meets_middle(); });
            if (touching != 1) continue;
            ++single;
            std::uint32_t outer = 0;
            for (std::size_t e = 0; e < edges.size(); ++e)
              if (edges[e].outer) outer |= 1u << e;
            REQUIRE(cycles.size() == 1);
            REQUIRE(cycles[0] == outer);
          }
  CHECK(single > 0);
}
