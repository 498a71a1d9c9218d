#include "ncpart/group.hpp"

#include <array>
#include <charconv>
#include <cstdlib>
#include <fstream>
#include <map>
#include <numeric>
#include <sstream>

namespace ncpart {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::UnknownSpec: return "UnknownSpec";
    case ErrorCode::InvalidTable: return "InvalidTable";
    case ErrorCode::MixedGroups: return "MixedGroups";
    case ErrorCode::EmptyIndexSet: return "EmptyIndexSet";
    case ErrorCode::UnknownElementName: return "UnknownElementName";
    case ErrorCode::NotAPartition: return "NotAPartition";
    case ErrorCode::SizeLimitExceeded: return "SizeLimitExceeded";
    case ErrorCode::BlockNotInPartition: return "BlockNotInPartition";
    case ErrorCode::MixedRows: return "MixedRows";
    case ErrorCode::EmptyRow: return "EmptyRow";
    case ErrorCode::LengthMismatch: return "LengthMismatch";
    case ErrorCode::ShapeMismatch: return "ShapeMismatch";
    case ErrorCode::GroupMismatch: return "GroupMismatch";
    case ErrorCode::MiddleSizeMismatch: return "MiddleSizeMismatch";
    case ErrorCode::MiddleMismatch: return "MiddleMismatch";
    case ErrorCode::TrivialComponent: return "TrivialComponent";
    case ErrorCode::UnsolvableSubsystem: return "UnsolvableSubsystem";
    case ErrorCode::ConstantsUnavailable: return "ConstantsUnavailable";
    case ErrorCode::ZeroComposite: return "ZeroComposite";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::InvalidPartition: return "InvalidPartition";
    case ErrorCode::InvalidColoring: return "InvalidColoring";
  }
  return "Unknown";
}

FiniteGroup::FiniteGroup(std::vector<std::vector<std::size_t>> table,
                         std::vector<std::string> names, std::string label)
    : order_(table.size()), names_(std::move(names)), label_(std::move(label)) {
  const std::size_t n = order_;
  if (n == 0 || n > 0xFFFF) throw Error(ErrorCode::InvalidTable, "group order out of range");
  if (names_.size() != n) throw Error(ErrorCode::InvalidTable, "name count differs from order");
  mult_.resize(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    if (table[i].size() != n) throw Error(ErrorCode::InvalidTable, "table is not square");
    for (std::size_t j = 0; j < n; ++j) {
      if (table[i][j] >= n) throw Error(ErrorCode::InvalidTable, "entry out of range");
      mult_[i * n + j] = Elem(table[i][j]);
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (table[0][i] != i || table[i][0] != i)
      throw Error(ErrorCode::InvalidTable, "index 0 is not the identity");
  }
  inv_.assign(n, kIdentity);
  for (std::size_t i = 0; i < n; ++i) {
    bool found = false;
    for (std::size_t j = 0; j < n && !found; ++j) {
      if (table[i][j] == 0 && table[j][i] == 0) {
        inv_[i] = Elem(j);
        found = true;
      }
    }
    if (!found) throw Error(ErrorCode::InvalidTable, "element " + std::to_string(i) + " has no inverse");
  }
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c)
        if (table[table[a][b]][c] != table[a][table[b][c]])
          throw Error(ErrorCode::InvalidTable, "multiplication is not associative");
  std::map<std::string, int> seen;
  for (const auto& name : names_)
    if (++seen[name] > 1) throw Error(ErrorCode::InvalidTable, "duplicate element name " + name);
}

FiniteGroup FiniteGroup::cyclic(std::size_t n) {
  if (n == 0) throw Error(ErrorCode::UnknownSpec, "cyclic group of order 0");
  std::vector<std::vector<std::size_t>> table(n, std::vector<std::size_t>(n));
  std::vector<std::string> names(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) table[i][j] = (i + j) % n;
    names[i] = i == 0 ? "e" : i == 1 ? "a" : "a" + std::to_string(i);
  }
  return FiniteGroup(std::move(table), std::move(names), n == 1 ? "trivial" : "Z" + std::to_string(n));
}

namespace {

std::string cycle_name(const std::vector<int>& perm) {
  std::string out;
  std::vector<bool> done(perm.size(), false);
  for (std::size_t start = 0; start < perm.size(); ++start) {
    if (done[start] || perm[start] == static_cast<int>(start)) continue;
    out += '(';
    for (std::size_t x = start; !done[x]; x = static_cast<std::size_t>(perm[x])) {
      done[x] = true;
      out += static_cast<char>('1' + x);
    }
    out += ')';
  }
  return out.empty() ? "e" : out;
}

}  // namespace

FiniteGroup FiniteGroup::symmetric(std::size_t n) {
  if (n == 0 || n > 6) throw Error(ErrorCode::UnknownSpec, "symmetric group degree out of range");
  std::vector<std::vector<int>> perms;
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  do perms.push_back(perm);
  while (std::next_permutation(perm.begin(), perm.end()));

  std::map<std::vector<int>, std::size_t> index;
  for (std::size_t i = 0; i < perms.size(); ++i) index[perms[i]] = i;
  // (a*b)(x) = a(b(x)): apply b first.
  std::vector<std::vector<std::size_t>> table(perms.size(), std::vector<std::size_t>(perms.size()));
  for (std::size_t i = 0; i < perms.size(); ++i)
    for (std::size_t j = 0; j < perms.size(); ++j) {
      std::vector<int> prod(n);
      for (std::size_t x = 0; x < n; ++x) prod[x] = perms[i][static_cast<std::size_t>(perms[j][x])];
      table[i][j] = index.at(prod);
    }
  std::vector<std::string> names;
  for (const auto& p : perms) names.push_back(cycle_name(p));
  return FiniteGroup(std::move(table), std::move(names), n == 1 ? "trivial" : "S" + std::to_string(n));
}

FiniteGroup FiniteGroup::trivial() { return cyclic(1); }

Elem FiniteGroup::element(std::size_t index) const {
  if (index >= order_) throw Error(ErrorCode::MixedGroups, "index " + std::to_string(index) + " not in " + label_);
  return Elem(index);
}

std::vector<Elem> FiniteGroup::elements() const {
  std::vector<Elem> out;
  out.reserve(order_);
  for (std::size_t i = 0; i < order_; ++i) out.push_back(Elem(i));
  return out;
}

Elem FiniteGroup::product(std::span<const Elem> xs) const {
  Elem acc = kIdentity;
  for (Elem x : xs) acc = mul(acc, x);
  return acc;
}

bool FiniteGroup::is_abelian() const {
  for (std::size_t i = 0; i < order_; ++i)
    for (std::size_t j = 0; j < i; ++j)
      if (mult_[i * order_ + j] != mult_[j * order_ + i]) return false;
  return true;
}

Elem FiniteGroup::parse(std::string_view name) const {
  for (std::size_t i = 0; i < order_; ++i)
    if (names_[i] == name) return Elem(i);
  if (name == "1") return kIdentity;
  throw Error(ErrorCode::UnknownElementName, "'" + std::string(name) + "' is not an element of " + label_);
}

Elem ordered_product(const FiniteGroup& g, std::span<const Elem> xs) {
  for (Elem x : xs)
    if (!g.contains(x)) throw Error(ErrorCode::MixedGroups, "element does not belong to " + g.label());
  return g.product(xs);
}

namespace detail {

void check_index_set(std::span<const int> indices, std::size_t length) {
  if (indices.empty()) throw Error(ErrorCode::EmptyIndexSet, "index set is empty");
  for (int i : indices)
    if (i < 1 || static_cast<std::size_t>(i) > length)
      throw Error(ErrorCode::LengthMismatch, "index " + std::to_string(i) + " outside 1.." + std::to_string(length));
}

}  // namespace detail

// ---- point groups ----

PointGroup PointGroup::finite(FiniteGroup group) {
  PointGroup out(Realization::Finite, 0, group.label());
  out.finite_.emplace(std::move(group));
  return out;
}

PointGroup PointGroup::free_words(int rank) {
  if (rank < 1 || rank > 3) throw Error(ErrorCode::UnknownSpec, "free rank must be 1..3");
  return PointGroup(Realization::FreeWords, rank, "free:" + std::to_string(rank));
}

PointGroup PointGroup::integers() { return PointGroup(Realization::Integers, 1, "Z"); }

PointGroup PointGroup::trivial() { return PointGroup(Realization::Trivial, 0, "trivial"); }

namespace {

PointElem finite_code(Elem e) {
  if (e == kIdentity) return {};
  return PointElem({static_cast<std::int32_t>(index_of(e))});
}

Elem finite_elem(const PointElem& a) { return a.is_identity() ? kIdentity : Elem(a.code()[0]); }

}  // namespace

PointElem PointGroup::mul(const PointElem& a, const PointElem& b) const {
  switch (realization_) {
    case Realization::Trivial:
      return {};
    case Realization::Integers: {
      std::int64_t v = (a.is_identity() ? 0 : a.code()[0]) + std::int64_t{b.is_identity() ? 0 : b.code()[0]};
      if (v == 0) return {};
      return PointElem({static_cast<std::int32_t>(v)});
    }
    case Realization::Finite:
      return finite_code(finite_->mul(finite_elem(a), finite_elem(b)));
    case Realization::FreeWords: {
      std::vector<std::int32_t> word = a.code();
      for (std::int32_t letter : b.code()) {
        if (!word.empty() && word.back() == -letter)
          word.pop_back();
        else
          word.push_back(letter);
      }
      return PointElem(std::move(word));
    }
  }
  return {};
}

PointElem PointGroup::inv(const PointElem& a) const {
  switch (realization_) {
    case Realization::Trivial:
      return {};
    case Realization::Integers:
      if (a.is_identity()) return {};
      return PointElem({-a.code()[0]});
    case Realization::Finite:
      return finite_code(finite_->inv(finite_elem(a)));
    case Realization::FreeWords: {
      std::vector<std::int32_t> word(a.code().rbegin(), a.code().rend());
      for (auto& letter : word) letter = -letter;
      return PointElem(std::move(word));
    }
  }
  return {};
}

PointElem PointGroup::product(std::span<const PointElem> xs) const {
  PointElem acc;
  for (const auto& x : xs) acc = mul(acc, x);
  return acc;
}

bool PointGroup::contains(const PointElem& a) const {
  const auto& code = a.code();
  switch (realization_) {
    case Realization::Trivial:
      return code.empty();
    case Realization::Integers:
      return code.empty() || (code.size() == 1 && code[0] != 0);
    case Realization::Finite:
      return code.empty() ||
             (code.size() == 1 && code[0] > 0 && static_cast<std::size_t>(code[0]) < finite_->order());
    case Realization::FreeWords:
      for (std::size_t i = 0; i < code.size(); ++i) {
        if (code[i] == 0 || std::abs(code[i]) > rank_) return false;
        if (i > 0 && code[i] == -code[i - 1]) return false;
      }
      return true;
  }
  return false;
}

PointElem PointGroup::generator(int i) const {
  switch (realization_) {
    case Realization::Trivial:
      return {};
    case Realization::Integers:
      return PointElem({1});
    case Realization::Finite:
      return finite_code(finite_->element(static_cast<std::size_t>(i)));
    case Realization::FreeWords:
      if (i < 0 || i >= rank_) throw Error(ErrorCode::UnknownElementName, "generator index out of range");
      return PointElem({i + 1});
  }
  return {};
}

namespace {
constexpr std::array<char, 3> kLetters{'x', 'y', 'z'};
constexpr std::array<char, 3> kInverseLetters{'X', 'Y', 'Z'};
}  // namespace

std::string PointGroup::name(const PointElem& a) const {
  if (!contains(a)) throw Error(ErrorCode::MixedGroups, "element does not belong to " + label_);
  switch (realization_) {
    case Realization::Trivial:
      return "e";
    case Realization::Integers:
      return a.is_identity() ? "0" : std::to_string(a.code()[0]);
    case Realization::Finite:
      return finite_->name(finite_elem(a));
    case Realization::FreeWords: {
      if (a.is_identity()) return "e";
      std::string out;
      for (std::int32_t letter : a.code())
        out += letter > 0 ? kLetters[static_cast<std::size_t>(letter - 1)]
                          : kInverseLetters[static_cast<std::size_t>(-letter - 1)];
      return out;
    }
  }
  return {};
}

PointElem PointGroup::parse(std::string_view name) const {
  auto fail = [&]() {
    return Error(ErrorCode::UnknownElementName, "'" + std::string(name) + "' is not an element of " + label_);
  };
  if (name == "e" || name == "1" || name.empty()) {
    if (realization_ != Realization::Integers || name != "1") return {};
  }
  switch (realization_) {
    case Realization::Trivial:
      throw fail();
    case Realization::Integers: {
      std::int32_t v = 0;
      auto [ptr, ec] = std::from_chars(name.data(), name.data() + name.size(), v);
      if (ec != std::errc() || ptr != name.data() + name.size()) throw fail();
      if (v == 0) return {};
      return PointElem({v});
    }
    case Realization::Finite:
      return finite_code(finite_->parse(name));
    case Realization::FreeWords: {
      PointElem acc;
      for (char c : name) {
        std::int32_t letter = 0;
        for (int i = 0; i < rank_; ++i) {
          if (c == kLetters[static_cast<std::size_t>(i)]) letter = i + 1;
          if (c == kInverseLetters[static_cast<std::size_t>(i)]) letter = -(i + 1);
        }
        if (letter == 0) throw fail();
        acc = mul(acc, PointElem({letter}));
      }
      return acc;
    }
  }
  throw fail();
}

bool PointGroup::operator==(const PointGroup& other) const {
  if (realization_ != other.realization_ || rank_ != other.rank_) return false;
  if (realization_ == Realization::Finite) return *finite_ == *other.finite_;
  return true;
}

// ---- specs ----

namespace {

bool parse_size(std::string_view text, std::size_t& out) {
  if (text.empty()) return false;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), out);
  return ec == std::errc() && ptr == text.data() + text.size();
}

}  // namespace

FiniteGroup read_table_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::UnknownSpec, "cannot open table file " + path);
  std::size_t n = 0;
  if (!(in >> n) || n == 0) throw Error(ErrorCode::InvalidTable, "missing order on first line");
  std::vector<std::vector<std::size_t>> table(n, std::vector<std::size_t>(n));
  for (auto& row : table)
    for (auto& entry : row)
      if (!(in >> entry)) throw Error(ErrorCode::InvalidTable, "table has fewer than n*n entries");
  std::string extra;
  if (in >> extra) throw Error(ErrorCode::InvalidTable, "trailing data after table");
  std::vector<std::string> names(n);
  for (std::size_t i = 0; i < n; ++i) names[i] = i == 0 ? "e" : "g" + std::to_string(i);
  return FiniteGroup(std::move(table), std::move(names), "table:" + path);
}

FiniteGroup finite_group_from_spec(std::string_view spec) {
  std::size_t n = 0;
  if (spec == "trivial") return FiniteGroup::trivial();
  if (spec.starts_with("table:")) return read_table_file(std::string(spec.substr(6)));
  if (spec.size() >= 2 && spec[0] == 'Z' && parse_size(spec.substr(1), n)) {
    if (n < 2 || n > 12) throw Error(ErrorCode::UnknownSpec, "cyclic order must be 2..12");
    return FiniteGroup::cyclic(n);
  }
  if (spec.size() >= 2 && spec[0] == 'S' && parse_size(spec.substr(1), n)) {
    if (n < 1 || n > 4) throw Error(ErrorCode::UnknownSpec, "symmetric degree must be 1..4");
    return FiniteGroup::symmetric(n);
  }
  throw Error(ErrorCode::UnknownSpec, "'" + std::string(spec) + "' is not a finite group spec");
}

PointGroup group_from_spec(std::string_view spec) {
  if (spec == "trivial") return PointGroup::trivial();
  if (spec == "Z") return PointGroup::integers();
  if (spec.starts_with("free:")) {
    std::size_t k = 0;
    if (!parse_size(spec.substr(5), k) || k < 1 || k > 3)
      throw Error(ErrorCode::UnknownSpec, "free rank must be 1..3");
    return PointGroup::free_words(static_cast<int>(k));
  }
  return PointGroup::finite(finite_group_from_spec(spec));
}

}  // namespace ncpart
