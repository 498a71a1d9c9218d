#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ncpart/error.hpp"

namespace ncpart {

// Element of a finite group, identified by its row in the multiplication table.
enum class Elem : std::uint16_t {};

constexpr Elem kIdentity{0};

constexpr std::size_t index_of(Elem e) { return static_cast<std::size_t>(e); }

class FiniteGroup {
 public:
  // table[i][j] is the index of i*j. Index 0 must be the identity.
  FiniteGroup(std::vector<std::vector<std::size_t>> table, std::vector<std::string> names,
              std::string label);

  static FiniteGroup cyclic(std::size_t n);
  static FiniteGroup symmetric(std::size_t n);
  static FiniteGroup trivial();

  std::size_t order() const { return order_; }
  Elem identity() const { return kIdentity; }
  Elem mul(Elem a, Elem b) const { return mult_[index_of(a) * order_ + index_of(b)]; }
  Elem inv(Elem a) const { return inv_[index_of(a)]; }
  Elem element(std::size_t index) const;
  bool contains(Elem e) const { return index_of(e) < order_; }
  std::vector<Elem> elements() const;

  Elem product(std::span<const Elem> xs) const;
  Elem product(std::initializer_list<Elem> xs) const {
    return product(std::span<const Elem>(xs.begin(), xs.size()));
  }

  bool is_abelian() const;

  const std::string& name(Elem e) const { return names_.at(index_of(e)); }
  Elem parse(std::string_view name) const;
  const std::string& label() const { return label_; }

  bool operator==(const FiniteGroup& other) const {
    return order_ == other.order_ && mult_ == other.mult_;
  }

 private:
  std::size_t order_;
  std::vector<Elem> mult_;
  std::vector<Elem> inv_;
  std::vector<std::string> names_;
  std::string label_;
};

// Element of a point-colour group. The code is a canonical normal form, so equality
// of codes is equality of elements; the identity always has the empty code.
class PointElem {
 public:
  PointElem() = default;
  explicit PointElem(std::vector<std::int32_t> code) : code_(std::move(code)) {}

  const std::vector<std::int32_t>& code() const { return code_; }
  bool is_identity() const { return code_.empty(); }

  friend bool operator==(const PointElem&, const PointElem&) = default;
  friend auto operator<=>(const PointElem&, const PointElem&) = default;

 private:
  std::vector<std::int32_t> code_;
};

enum class Realization { Finite, FreeWords, Integers, Trivial };

class PointGroup {
 public:
  static PointGroup finite(FiniteGroup group);
  static PointGroup free_words(int rank);
  static PointGroup integers();
  static PointGroup trivial();

  Realization realization() const { return realization_; }
  int rank() const { return rank_; }
  const std::string& label() const { return label_; }

  PointElem identity() const { return {}; }
  PointElem mul(const PointElem& a, const PointElem& b) const;
  PointElem inv(const PointElem& a) const;
  PointElem product(std::span<const PointElem> xs) const;
  bool contains(const PointElem& a) const;

  // Generator i (0-based) of a free group, 1 for the integers, element i of a finite group.
  PointElem generator(int i) const;

  std::string name(const PointElem& a) const;
  PointElem parse(std::string_view name) const;

  bool operator==(const PointGroup& other) const;

 private:
  PointGroup(Realization realization, int rank, std::string label)
      : realization_(realization), rank_(rank), label_(std::move(label)) {}

  Realization realization_;
  int rank_;
  std::string label_;
  std::optional<FiniteGroup> finite_;
};

// Grammar: Zn (2<=n<=12), Sn (n<=4), trivial, free:k (k<=3), Z, table:<path>.
PointGroup group_from_spec(std::string_view spec);

// Same grammar restricted to finite groups.
FiniteGroup finite_group_from_spec(std::string_view spec);

FiniteGroup read_table_file(const std::string& path);

Elem ordered_product(const FiniteGroup& g, std::span<const Elem> xs);

namespace detail {
void check_index_set(std::span<const int> indices, std::size_t length);
}

// Product over the consecutive interval [min A, max A]; indices are 1-based.
template <class Group, class E>
E interval_product(const Group& g, std::span<const E> xs, std::span<const int> indices) {
  detail::check_index_set(indices, xs.size());
  auto [lo, hi] = std::minmax_element(indices.begin(), indices.end());
  E acc = g.identity();
  for (int i = *lo; i <= *hi; ++i) acc = g.mul(acc, xs[static_cast<std::size_t>(i - 1)]);
  return acc;
}

// Product over the indices of A only, in increasing order; indices are 1-based.
template <class Group, class E>
E restricted_product(const Group& g, std::span<const E> xs, std::span<const int> indices) {
  detail::check_index_set(indices, xs.size());
  std::vector<int> sorted(indices.begin(), indices.end());
  std::sort(sorted.begin(), sorted.end());
  E acc = g.identity();
  for (int i : sorted) acc = g.mul(acc, xs[static_cast<std::size_t>(i - 1)]);
  return acc;
}

}  // namespace ncpart
