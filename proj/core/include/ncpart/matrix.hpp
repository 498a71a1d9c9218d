#pragma once

#include <boost/rational.hpp>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "ncpart/group.hpp"

namespace ncpart {

using Rational = boost::rational<std::int64_t>;

// Mixed-radix index of a basis tuple, leftmost factor most significant.
std::uint64_t encode_basis(std::span<const Elem> xs, std::size_t radix);
std::vector<Elem> decode_basis(std::uint64_t index, std::size_t length, std::size_t radix);

// radix^exponent, or SizeLimitExceeded when it does not fit below limit.
std::uint64_t checked_power(std::size_t radix, std::size_t exponent, std::uint64_t limit);

struct Entry {
  std::uint64_t row;
  std::uint64_t col;
  std::int64_t value;

  friend bool operator==(const Entry&, const Entry&) = default;
};

// Sparse exact matrix: scalar times an integer matrix given by sorted nonzero entries.
class MorphismMatrix {
 public:
  MorphismMatrix(std::uint64_t rows, std::uint64_t cols, std::vector<Entry> entries = {},
                 Rational scalar = Rational(1));

  static MorphismMatrix identity(std::uint64_t n);

  std::uint64_t rows() const { return rows_; }
  std::uint64_t cols() const { return cols_; }
  const std::vector<Entry>& entries() const { return entries_; }
  const Rational& scalar() const { return scalar_; }

  std::int64_t raw(std::uint64_t row, std::uint64_t col) const;
  Rational value(std::uint64_t row, std::uint64_t col) const { return scalar_ * raw(row, col); }
  bool is_zero() const { return entries_.empty() || scalar_.numerator() == 0; }

 private:
  std::uint64_t rows_;
  std::uint64_t cols_;
  std::vector<Entry> entries_;
  Rational scalar_;
};

// A*B, i.e. B applied first.
MorphismMatrix mat_compose(const MorphismMatrix& a, const MorphismMatrix& b);
MorphismMatrix mat_tensor(const MorphismMatrix& a, const MorphismMatrix& b);
MorphismMatrix mat_adjoint(const MorphismMatrix& a);
MorphismMatrix mat_scale(const MorphismMatrix& a, const Rational& q);
bool mat_equal(const MorphismMatrix& a, const MorphismMatrix& b);

std::string dump_matrix(const MorphismMatrix& m);

}  // namespace ncpart
