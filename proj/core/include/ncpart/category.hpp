#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "ncpart/composition.hpp"
#include "ncpart/matrix.hpp"
#include "ncpart/partition.hpp"

namespace ncpart {

using IntMatrix = std::vector<std::vector<std::int64_t>>;

// Rank over the rationals, by fraction-free elimination in arbitrary precision.
std::size_t exact_rank(const IntMatrix& m);

struct HomSpace {
  std::vector<PointElem> source;
  std::vector<PointElem> target;
  std::vector<ColoredPartition> basis_candidates;
  IntMatrix gram;
  std::size_t dimension = 0;
};

// Span of T_p over NC_Lambda(source, target). Gram entries count common nonzero entries.
HomSpace hom_space(const LambdaPtr& lambda, const GammaPtr& gamma, std::span<const PointElem> source,
                   std::span<const PointElem> target, std::uint64_t guard = kDefaultMatrixGuard);

struct ReportLine {
  std::string suite;
  std::string id;
  bool pass = true;
  std::string detail;
};

// One line per case: `<suite> case=<id> status=<pass|fail> detail=<...>`.
std::string format_line(const ReportLine& line);

struct Report {
  std::vector<ReportLine> lines;

  void add(std::string suite, std::string id, bool pass, std::string detail);
  void append(const Report& other);
  std::size_t failures() const;
  bool passed() const { return failures() == 0; }
  std::string str() const;
};

// Colored partitions with identity point colours, grouped by shape, for k, l <= max_size.
class ColoredUniverse {
 public:
  ColoredUniverse(LambdaPtr lambda, GammaPtr gamma, int max_size);

  int max_size() const { return max_size_; }
  const std::vector<ColoredPartition>& at(int k, int l) const;
  const LambdaPtr& lambda() const { return lambda_; }
  const GammaPtr& gamma() const { return gamma_; }

 private:
  LambdaPtr lambda_;
  GammaPtr gamma_;
  int max_size_;
  std::vector<std::vector<ColoredPartition>> shapes_;
};

struct AxiomOptions {
  int max_size = 2;
  std::size_t samples = 200;
  std::uint64_t seed = 1;
  int max_zigzag = 2;
};

// Associativity, interchange, adjoint contravariance and zigzag equations.
Report axiom_suite(const LambdaPtr& lambda, const GammaPtr& gamma, const AxiomOptions& options = {});

struct FixtureCase {
  std::string id;
  bool member = false;  // the colored partition lies in the expected NC_Lambda space
  bool pass = false;    // member and bit-exact matrix equality
  MorphismMatrix actual{0, 0};
  MorphismMatrix expected{0, 0};
};

struct FixtureReport {
  std::vector<FixtureCase> cases;

  bool passed() const;
  Report report() const;
};

// The unit, multiplication, flip, multiplicativity and cup intertwiners built as colored
// partitions and compared against their closed forms.
FixtureReport reconstruction_fixtures(const LambdaPtr& lambda, const GammaPtr& gamma);

}  // namespace ncpart
