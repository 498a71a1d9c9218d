#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "ncpart/matrix.hpp"
#include "ncpart/operator.hpp"
#include "ncpart/partition.hpp"

namespace ncpart {

// Throughout, p is in NC(k,l) and sits above q in NC(l,m); the shared row [l] is the middle row.

enum class ComponentKind { UpperHalf, LowerHalf, Through, Cycle, UpperTrivial, LowerTrivial };

std::string_view to_string(ComponentKind kind);

struct ComponentInfo {
  std::vector<int> upper;   // points of [k]
  std::vector<int> middle;  // points of [l]
  std::vector<int> lower;   // points of [m]
  ComponentKind kind;
  std::vector<std::size_t> blocks_p;
  std::vector<std::size_t> blocks_q;

  bool meets_middle() const { return !middle.empty(); }
};

// Ordered by least middle point; components missing the middle row come last.
std::vector<ComponentInfo> connected_components(const TwoRowPartition& p, const TwoRowPartition& q);

struct Entrance {
  int lo;
  int hi;
  Row side;  // Upper when the gap is free of p-spans of the component, Lower for q-spans

  friend bool operator==(const Entrance&, const Entrance&) = default;
};

std::vector<Entrance> component_entrances(const ComponentInfo& c, const TwoRowPartition& p, const TwoRowPartition& q);

enum class Layer { P, Q };

// prod_{lo..hi} s = target
struct MiddleConstraint {
  int lo;
  int hi;
  Elem target;
  Layer source;
  std::size_t block;
};

std::vector<MiddleConstraint> middle_system(const ColoredPartition& p, const ColoredPartition& q,
                                            std::span<const Elem> r, std::span<const Elem> d);

// pi(to) = pi(from) * gain
struct GainEdge {
  std::size_t from;
  std::size_t to;
  Elem gain;
};

class GainGraph {
 public:
  GainGraph(const FiniteGroup& lambda, std::size_t vertex_count, std::vector<GainEdge> edges);

  std::size_t vertex_count() const { return component_.size(); }
  const std::vector<GainEdge>& edges() const { return edges_; }
  std::size_t component_count() const { return component_count_; }
  std::size_t component_of(std::size_t v) const { return component_.at(v); }
  bool balanced() const { return balanced_; }
  // Valid when balanced; the least vertex of each component carries the identity.
  const std::vector<Elem>& potential() const { return potential_; }

 private:
  std::vector<GainEdge> edges_;
  std::vector<std::size_t> component_;
  std::vector<Elem> potential_;
  std::size_t component_count_ = 0;
  bool balanced_ = true;
};

// Vertices 0..l, one edge min-1 -> max per constraint.
GainGraph build_gain_graph(const FiniteGroup& lambda, int l, std::span<const MiddleConstraint> constraints);

std::uint64_t count_middle_solutions(const ColoredPartition& p, const ColoredPartition& q, std::span<const Elem> r,
                                     std::span<const Elem> d);

// Product of any admissible middle vector over the entrance.
Elem entrance_constant(const Entrance& e, const ComponentInfo& c, const ColoredPartition& p,
                       const ColoredPartition& q);

struct ComponentConstants {
  Elem f = kIdentity;      // frame product of a half component
  Elem h = kIdentity;      // p-side tail of a through component
  Elem mu = kIdentity;     // q-side tail of a through component
  std::vector<Elem> entrance;  // one per entry of component_entrances
  Elem g = kIdentity;      // gap products at the leftmost through block
  Elem alpha = kIdentity;
  Elem beta = kIdentity;
  Elem b = kIdentity;
  Elem t = kIdentity;      // colour of the rightmost p-through block (or of the p-block itself)
  Elem t_prime = kIdentity;
  Elem iota = kIdentity;   // colour of the rightmost q-through block (or of the q-block itself)
  Elem iota_prime = kIdentity;
};

// s must be an admissible middle vector of the pair. Entrance constants are skipped
// unless requested since labels do not depend on them.
ComponentConstants component_constants(const ComponentInfo& c, const ColoredPartition& p, const ColoredPartition& q,
                                       std::span<const Elem> s, bool with_entrances = true);

Elem component_label(const ComponentInfo& c, const ComponentConstants& k, const FiniteGroup& lambda);

struct Admissible {
  std::vector<Elem> r;
  std::vector<Elem> s;
  std::vector<Elem> d;
};

// One triple with delta_p(r,s) = delta_q(s,d) = 1, or nothing when T_q T_p = 0.
std::optional<Admissible> find_admissible(const ColoredPartition& p, const ColoredPartition& q);

struct CompositionResult {
  std::optional<ColoredPartition> composed;  // empty means the composite is zero
  int exponent = 0;                          // c - 1, meaningful when nonzero
  std::vector<ComponentInfo> components;
  int k = 0;
  int m = 0;
  LambdaPtr lambda;

  bool zero() const { return !composed.has_value(); }
  // |Lambda|^exponent times the composed operator, or the zero matrix.
  MorphismMatrix matrix(std::uint64_t guard = kDefaultMatrixGuard) const;
};

CompositionResult compose(const ColoredPartition& p, const ColoredPartition& q);

MorphismMatrix brute_force_compose(const ColoredPartition& p, const ColoredPartition& q,
                                   std::uint64_t guard = kDefaultMatrixGuard);

// Number of s with delta_p(r,s) = delta_q(s,d) = 1, by exhaustive search over the middle row.
std::uint64_t brute_force_middle_count(const ColoredPartition& p, const ColoredPartition& q, std::span<const Elem> r,
                                       std::span<const Elem> d);

bool delta_of_composite(const ColoredPartition& p, const ColoredPartition& q, std::span<const Elem> r,
                        std::span<const Elem> d);

}  // namespace ncpart
