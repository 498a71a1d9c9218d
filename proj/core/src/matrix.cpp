#include "ncpart/matrix.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_map>

namespace ncpart {

std::uint64_t encode_basis(std::span<const Elem> xs, std::size_t radix) {
  std::uint64_t index = 0;
  for (Elem x : xs) index = index * radix + index_of(x);
  return index;
}

std::vector<Elem> decode_basis(std::uint64_t index, std::size_t length, std::size_t radix) {
  std::vector<Elem> out(length, kIdentity);
  for (std::size_t i = length; i-- > 0;) {
    out[i] = Elem(index % radix);
    index /= radix;
  }
  return out;
}

std::uint64_t checked_power(std::size_t radix, std::size_t exponent, std::uint64_t limit) {
  std::uint64_t out = 1;
  for (std::size_t i = 0; i < exponent; ++i) {
    out *= radix;
    if (out > limit)
      throw Error(ErrorCode::SizeLimitExceeded,
                  std::to_string(radix) + "^" + std::to_string(exponent) + " exceeds " + std::to_string(limit));
  }
  return out;
}

namespace {

void normalize(std::vector<Entry>& entries) {
  std::sort(entries.begin(), entries.end(),
            [](const Entry& a, const Entry& b) { return a.row != b.row ? a.row < b.row : a.col < b.col; });
  std::vector<Entry> merged;
  merged.reserve(entries.size());
  for (const auto& e : entries) {
    if (!merged.empty() && merged.back().row == e.row && merged.back().col == e.col)
      merged.back().value += e.value;
    else
      merged.push_back(e);
  }
  std::erase_if(merged, [](const Entry& e) { return e.value == 0; });
  entries = std::move(merged);
}

}  // namespace

MorphismMatrix::MorphismMatrix(std::uint64_t rows, std::uint64_t cols, std::vector<Entry> entries, Rational scalar)
    : rows_(rows), cols_(cols), entries_(std::move(entries)), scalar_(scalar) {
  for (const auto& e : entries_)
    if (e.row >= rows_ || e.col >= cols_) throw Error(ErrorCode::ShapeMismatch, "entry outside the matrix");
  normalize(entries_);
}

MorphismMatrix MorphismMatrix::identity(std::uint64_t n) {
  std::vector<Entry> entries;
  entries.reserve(n);
  for (std::uint64_t i = 0; i < n; ++i) entries.push_back({i, i, 1});
  return MorphismMatrix(n, n, std::move(entries));
}

std::int64_t MorphismMatrix::raw(std::uint64_t row, std::uint64_t col) const {
  auto it = std::lower_bound(entries_.begin(), entries_.end(), Entry{row, col, 0}, [](const Entry& a, const Entry& b) {
    return a.row != b.row ? a.row < b.row : a.col < b.col;
  });
  return it != entries_.end() && it->row == row && it->col == col ? it->value : 0;
}

MorphismMatrix mat_compose(const MorphismMatrix& a, const MorphismMatrix& b) {
  if (a.cols() != b.rows())
    throw Error(ErrorCode::ShapeMismatch, "cannot compose " + std::to_string(a.rows()) + "x" + std::to_string(a.cols()) +
                                              " after " + std::to_string(b.rows()) + "x" + std::to_string(b.cols()));
  // b's entries are sorted by row, so each row is a contiguous range.
  std::vector<std::size_t> row_start(b.rows() + 1, 0);
  for (const auto& e : b.entries()) ++row_start[e.row + 1];
  for (std::size_t i = 0; i < b.rows(); ++i) row_start[i + 1] += row_start[i];

  std::unordered_map<std::uint64_t, std::int64_t> acc;
  for (const auto& ea : a.entries())
    for (std::size_t t = row_start[ea.col]; t < row_start[ea.col + 1]; ++t) {
      const auto& eb = b.entries()[t];
      acc[ea.row * b.cols() + eb.col] += ea.value * eb.value;
    }
  std::vector<Entry> entries;
  entries.reserve(acc.size());
  for (auto [key, value] : acc) entries.push_back({key / b.cols(), key % b.cols(), value});
  return MorphismMatrix(a.rows(), b.cols(), std::move(entries), a.scalar() * b.scalar());
}

MorphismMatrix mat_tensor(const MorphismMatrix& a, const MorphismMatrix& b) {
  std::vector<Entry> entries;
  entries.reserve(a.entries().size() * b.entries().size());
  for (const auto& ea : a.entries())
    for (const auto& eb : b.entries())
      entries.push_back({ea.row * b.rows() + eb.row, ea.col * b.cols() + eb.col, ea.value * eb.value});
  return MorphismMatrix(a.rows() * b.rows(), a.cols() * b.cols(), std::move(entries), a.scalar() * b.scalar());
}

MorphismMatrix mat_adjoint(const MorphismMatrix& a) {
  std::vector<Entry> entries;
  entries.reserve(a.entries().size());
  for (const auto& e : a.entries()) entries.push_back({e.col, e.row, e.value});
  return MorphismMatrix(a.cols(), a.rows(), std::move(entries), a.scalar());
}

MorphismMatrix mat_scale(const MorphismMatrix& a, const Rational& q) {
  return MorphismMatrix(a.rows(), a.cols(), a.entries(), a.scalar() * q);
}

bool mat_equal(const MorphismMatrix& a, const MorphismMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw Error(ErrorCode::ShapeMismatch, "matrices have different shapes");
  if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
  if (a.entries().size() != b.entries().size()) return false;
  for (std::size_t i = 0; i < a.entries().size(); ++i) {
    const auto& x = a.entries()[i];
    const auto& y = b.entries()[i];
    if (x.row != y.row || x.col != y.col) return false;
    if (a.scalar() * Rational(x.value) != b.scalar() * Rational(y.value)) return false;
  }
  return true;
}

std::string dump_matrix(const MorphismMatrix& m) {
  std::ostringstream out;
  out << m.rows() << ' ' << m.cols() << ' ' << m.scalar().numerator() << ' ' << m.scalar().denominator() << '\n';
  for (const auto& e : m.entries()) out << e.row << ' ' << e.col << ' ' << e.value << '\n';
  return out.str();
}

}  // namespace ncpart
