#include "ncpart/category.hpp"

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/rational.hpp>
#include <random>
#include <sstream>

#include "ncpart/operator.hpp"

namespace ncpart {

std::size_t exact_rank(const IntMatrix& m) {
  using Q = boost::rational<boost::multiprecision::cpp_int>;
  std::vector<std::vector<Q>> a;
  for (const auto& row : m) {
    a.emplace_back();
    for (std::int64_t x : row) a.back().emplace_back(x);
  }
  const std::size_t rows = a.size();
  const std::size_t cols = rows == 0 ? 0 : a.front().size();
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t pivot = rank;
    while (pivot < rows && a[pivot][c] == Q(0)) ++pivot;
    if (pivot == rows) continue;
    std::swap(a[pivot], a[rank]);
    for (std::size_t i = rank + 1; i < rows; ++i) {
      if (a[i][c] == Q(0)) continue;
      const Q factor = a[i][c] / a[rank][c];
      for (std::size_t j = c; j < cols; ++j) a[i][j] -= factor * a[rank][j];
    }
    ++rank;
  }
  return rank;
}

namespace {

std::int64_t common_support(const MorphismMatrix& a, const MorphismMatrix& b) {
  const auto& x = a.entries();
  const auto& y = b.entries();
  std::int64_t count = 0;
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < x.size() && j < y.size()) {
    if (x[i].row == y[j].row && x[i].col == y[j].col) {
      ++count;
      ++i;
      ++j;
    } else if (x[i].row < y[j].row || (x[i].row == y[j].row && x[i].col < y[j].col)) {
      ++i;
    } else {
      ++j;
    }
  }
  return count;
}

}  // namespace

HomSpace hom_space(const LambdaPtr& lambda, const GammaPtr& gamma, std::span<const PointElem> source,
                   std::span<const PointElem> target, std::uint64_t guard) {
  const int k = static_cast<int>(source.size());
  const int l = static_cast<int>(target.size());
  checked_power(lambda->order(), static_cast<std::size_t>(std::max(k, l)), guard);
  HomSpace out;
  out.source.assign(source.begin(), source.end());
  out.target.assign(target.begin(), target.end());
  out.basis_candidates = enumerate_colored(k, l, source, target, lambda, gamma);
  std::vector<MorphismMatrix> mats;
  for (const auto& cp : out.basis_candidates) mats.push_back(to_matrix(cp, guard));
  const std::size_t n = mats.size();
  out.gram.assign(n, std::vector<std::int64_t>(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) out.gram[i][j] = out.gram[j][i] = common_support(mats[i], mats[j]);
  out.dimension = exact_rank(out.gram);
  return out;
}

std::string format_line(const ReportLine& line) {
  return line.suite + " case=" + line.id + " status=" + (line.pass ? "pass" : "fail") + " detail=" + line.detail;
}

void Report::add(std::string suite, std::string id, bool pass, std::string detail) {
  lines.push_back({std::move(suite), std::move(id), pass, std::move(detail)});
}

void Report::append(const Report& other) { lines.insert(lines.end(), other.lines.begin(), other.lines.end()); }

std::size_t Report::failures() const {
  return static_cast<std::size_t>(std::count_if(lines.begin(), lines.end(), [](const ReportLine& l) { return !l.pass; }));
}

std::string Report::str() const {
  std::string out;
  for (const auto& line : lines) out += format_line(line) + '\n';
  return out;
}

ColoredUniverse::ColoredUniverse(LambdaPtr lambda, GammaPtr gamma, int max_size)
    : lambda_(std::move(lambda)), gamma_(std::move(gamma)), max_size_(max_size) {
  const int side = max_size_ + 1;
  shapes_.resize(static_cast<std::size_t>(side * side));
  for (int k = 0; k <= max_size_; ++k)
    for (int l = 0; l <= max_size_; ++l)
      shapes_[static_cast<std::size_t>(k * side + l)] =
          enumerate_colored(k, l, identity_colors(k), identity_colors(l), lambda_, gamma_);
}

const std::vector<ColoredPartition>& ColoredUniverse::at(int k, int l) const {
  if (k < 0 || l < 0 || k > max_size_ || l > max_size_)
    throw Error(ErrorCode::SizeLimitExceeded, "shape outside the universe");
  return shapes_[static_cast<std::size_t>(k * (max_size_ + 1) + l)];
}

namespace {

std::string shape(const ColoredPartition& p) { return std::to_string(p.k()) + "->" + std::to_string(p.l()); }

// Tracks one law over many samples and reports the first failure.
struct Tally {
  std::size_t checked = 0;
  std::size_t failed = 0;
  std::string first;

  void record(bool ok, const std::string& what) {
    ++checked;
    if (!ok && failed++ == 0) first = what;
  }
  void emit(Report& r, const std::string& suite, const std::string& id) const {
    std::string detail = "checked=" + std::to_string(checked) + " failed=" + std::to_string(failed);
    if (failed) detail += " first=" + first;
    r.add(suite, id, failed == 0, detail);
  }
};

Rational power_of(std::size_t base, int exponent) {
  std::int64_t v = 1;
  for (int i = 0; i < exponent; ++i) v *= static_cast<std::int64_t>(base);
  return Rational(v);
}

// |Lambda|^e times T, with T the composite or zero.
MorphismMatrix scaled(const CompositionResult& res, int extra) {
  return mat_scale(res.matrix(), power_of(res.lambda->order(), extra));
}

std::vector<PointElem> gamma_samples(const PointGroup& gamma) {
  std::vector<PointElem> out{gamma.identity()};
  switch (gamma.realization()) {
    case Realization::Trivial:
      break;
    case Realization::Finite: {
      PointElem x;
      try {
        x = gamma.generator(1);
      } catch (const Error&) {
        break;
      }
      out.push_back(x);
      if (gamma.inv(x) != x) out.push_back(gamma.inv(x));
      break;
    }
    default:
      out.push_back(gamma.generator(0));
      out.push_back(gamma.inv(gamma.generator(0)));
      break;
  }
  return out;
}

}  // namespace

Report axiom_suite(const LambdaPtr& lambda, const GammaPtr& gamma, const AxiomOptions& options) {
  const std::string suite = "axioms";
  Report report;
  const ColoredUniverse u(lambda, gamma, options.max_size);
  std::mt19937_64 rng(options.seed);
  std::uniform_int_distribution<int> size(0, options.max_size);
  auto pick = [&](int k, int l) -> const ColoredPartition& {
    const auto& v = u.at(k, l);
    std::uniform_int_distribution<std::size_t> d(0, v.size() - 1);
    return v[d(rng)];
  };

  // Tensor shapes are redrawn until their matrices fit the default guard.
  auto fits = [&](int width) {
    std::uint64_t v = 1;
    for (int i = 0; i < width; ++i) v *= lambda->order();
    return v <= kDefaultMatrixGuard;
  };

  Tally assoc_matrix;
  Tally assoc_structure;
  for (std::size_t i = 0; i < options.samples; ++i) {
    const int k = size(rng), l = size(rng), m = size(rng), n = size(rng);
    const auto& a = pick(k, l);
    const auto& b = pick(l, m);
    const auto& c = pick(m, n);
    const std::string tag = shape(a) + "->" + std::to_string(m) + "->" + std::to_string(n);
    const auto triple = mat_compose(mat_compose(to_matrix(c), to_matrix(b)), to_matrix(a));
    const auto ab = compose(a, b);
    const auto bc = compose(b, c);
    std::optional<CompositionResult> left;
    std::optional<CompositionResult> right;
    if (!ab.zero()) left = compose(*ab.composed, c);
    if (!bc.zero()) right = compose(a, *bc.composed);
    const bool left_zero = !left || left->zero();
    const bool right_zero = !right || right->zero();
    bool same = left_zero == right_zero;
    if (same && !left_zero)
      same = *left->composed == *right->composed && ab.exponent + left->exponent == bc.exponent + right->exponent;
    assoc_structure.record(same, tag);
    const auto lhs = left ? scaled(*left, ab.exponent) : MorphismMatrix(triple.rows(), triple.cols());
    const auto rhs = right ? scaled(*right, bc.exponent) : MorphismMatrix(triple.rows(), triple.cols());
    assoc_matrix.record(mat_equal(lhs, triple) && mat_equal(rhs, triple), tag);
  }
  assoc_matrix.emit(report, suite, "associativity-matrix");
  assoc_structure.emit(report, suite, "associativity-structure");

  Tally interchange;
  for (std::size_t i = 0; i < options.samples; ++i) {
    int k1, l1, m1, k2, l2, m2;
    do {
      k1 = size(rng), l1 = size(rng), m1 = size(rng), k2 = size(rng), l2 = size(rng), m2 = size(rng);
    } while (!fits(std::max({k1 + k2, l1 + l2, m1 + m2})));
    const auto& p1 = pick(k1, l1);
    const auto& q1 = pick(l1, m1);
    const auto& p2 = pick(k2, l2);
    const auto& q2 = pick(l2, m2);
    const auto joint = compose(tensor_partitions(p1, p2), tensor_partitions(q1, q2));
    const auto lhs = joint.matrix();
    const auto rhs = mat_tensor(compose(p1, q1).matrix(), compose(p2, q2).matrix());
    interchange.record(mat_equal(lhs, rhs), shape(p1) + "|" + shape(p2));
  }
  interchange.emit(report, suite, "interchange");

  Tally adjoint;
  for (std::size_t i = 0; i < options.samples; ++i) {
    const auto& p = pick(size(rng), size(rng));
    const auto& q = pick(p.l(), size(rng));
    const auto forward = compose(p, q);
    const auto backward = compose(adjoint_partition(q), adjoint_partition(p));
    bool ok = forward.zero() == backward.zero();
    if (ok && !forward.zero())
      ok = adjoint_partition(*forward.composed) == *backward.composed && forward.exponent == backward.exponent;
    ok = ok && mat_equal(mat_adjoint(brute_force_compose(p, q)), backward.matrix());
    adjoint.record(ok, shape(p) + "->" + std::to_string(q.l()));
  }
  adjoint.emit(report, suite, "adjoint");

  const auto samples = gamma_samples(*gamma);
  for (int k = 1; k <= options.max_zigzag; ++k) {
    std::vector<std::size_t> digits(static_cast<std::size_t>(k), 0);
    while (true) {
      std::vector<PointElem> g;
      for (std::size_t d : digits) g.push_back(samples[d]);
      const auto gbar = conjugate_colors(*gamma, g);
      std::string name;
      for (const auto& x : g) name += (name.empty() ? "" : ",") + gamma->name(x);
      const auto id_g = identity_strands(lambda, gamma, g);
      const auto ident = MorphismMatrix::identity(checked_power(lambda->order(), static_cast<std::size_t>(k), kDefaultMatrixGuard));

      auto zig = compose(tensor_partitions(cup_k(lambda, gamma, g), id_g), tensor_partitions(id_g, cap_k(lambda, gamma, gbar)));
      auto zag = compose(tensor_partitions(id_g, cup_k(lambda, gamma, gbar)), tensor_partitions(cap_k(lambda, gamma, g), id_g));
      for (auto* res : {&zig, &zag}) {
        const bool first = res == &zig;
        bool ok = !res->zero() && *res->composed == id_g && res->exponent == 0;
        ok = ok && mat_equal(res->matrix(), ident);
        report.add(suite, std::string(first ? "zigzag-left" : "zigzag-right") + ":k=" + std::to_string(k) + ":g=" + name,
                   ok, ok ? "identity scalar=1" : "composite differs from the identity strands");
      }

      const auto loop = compose(cup_k(lambda, gamma, g), cap_k(lambda, gamma, g));
      const auto brute = brute_force_compose(cup_k(lambda, gamma, g), cap_k(lambda, gamma, g));
      const Rational expected = power_of(lambda->order(), k);
      const bool ok = !loop.zero() && loop.composed->size() == 0 && loop.exponent == k &&
                      mat_equal(loop.matrix(), MorphismMatrix(1, 1, {{0, 0, 1}}, expected)) &&
                      mat_equal(brute, loop.matrix());
      report.add(suite, "loop:k=" + std::to_string(k) + ":g=" + name, ok,
                 "value=" + std::to_string(brute.value(0, 0).numerator()) + " expected=" +
                     std::to_string(expected.numerator()));

      std::size_t pos = 0;
      while (pos < digits.size() && ++digits[pos] == samples.size()) digits[pos++] = 0;
      if (pos == digits.size()) break;
    }
  }
  return report;
}

bool FixtureReport::passed() const {
  return std::all_of(cases.begin(), cases.end(), [](const FixtureCase& c) { return c.pass; });
}

Report FixtureReport::report() const {
  Report r;
  for (const auto& c : cases) {
    std::string detail = std::string("member=") + (c.member ? "yes" : "no");
    if (c.member && !c.pass) {
      std::ostringstream diff;
      for (const auto& e : c.expected.entries())
        if (c.actual.raw(e.row, e.col) != e.value) {
          diff << " first-diff=(" << e.row << "," << e.col << ") expected=" << e.value
               << " actual=" << c.actual.raw(e.row, e.col);
          break;
        }
      if (diff.str().empty())
        for (const auto& e : c.actual.entries())
          if (c.expected.raw(e.row, e.col) != e.value) {
            diff << " first-diff=(" << e.row << "," << e.col << ") expected=" << c.expected.raw(e.row, e.col)
                 << " actual=" << e.value;
            break;
          }
      detail += diff.str();
    }
    detail += " entries=" + std::to_string(c.actual.entries().size()) + "/" + std::to_string(c.expected.entries().size());
    r.add("fixtures", c.id, c.pass, detail);
  }
  return r;
}

namespace {

struct FixtureShape {
  int k;
  int l;
  std::vector<std::pair<Block, Elem>> blocks;
  std::vector<PointElem> upper;
  std::vector<PointElem> lower;
};

ColoredPartition build(const LambdaPtr& lambda, const GammaPtr& gamma, const FixtureShape& s) {
  std::vector<Block> blocks;
  for (const auto& [b, c] : s.blocks) blocks.push_back(b);
  TwoRowPartition part(s.k, s.l, blocks);
  std::vector<Elem> colors(part.size());
  for (const auto& [b, c] : s.blocks) colors[part.index_of(b)] = c;
  return ColoredPartition(lambda, gamma, std::move(part), std::move(colors), s.upper, s.lower);
}

std::uint64_t idx(std::initializer_list<Elem> xs, std::size_t n) {
  return encode_basis(std::span<const Elem>(xs.begin(), xs.size()), n);
}

}  // namespace

FixtureReport reconstruction_fixtures(const LambdaPtr& lambda, const GammaPtr& gamma) {
  const FiniteGroup& L = *lambda;
  const PointGroup& G = *gamma;
  const std::size_t n = L.order();
  const auto elems = L.elements();
  const PointElem one = G.identity();
  PointElem g = gamma_samples(G).back();
  PointElem h = G.realization() == Realization::FreeWords && G.rank() > 1 ? G.generator(1) : G.mul(g, g);

  FixtureReport out;
  auto run = [&](std::string id, const FixtureShape& fixture, std::vector<Entry> expected) {
    FixtureCase c;
    c.id = std::move(id);
    const auto cp = build(lambda, gamma, fixture);
    c.member = cp.valid();
    c.actual = to_matrix(cp);
    c.expected = MorphismMatrix(c.actual.rows(), c.actual.cols(), std::move(expected));
    c.pass = c.member && mat_equal(c.actual, c.expected);
    out.cases.push_back(std::move(c));
  };

  {
    run("p1", FixtureShape{0, 1, {{Block({}, {1}), kIdentity}}, {}, {one}}, {{idx({kIdentity}, n), 0, 1}});
  }
  for (Elem t : elems) {
    const std::string tn = ":t=" + L.name(t);
    const FixtureShape layout{2, 1, {{Block({1}, {1}), t}, {Block({2}, {}), L.inv(t)}}, {one, one}, {one}};
    std::vector<Entry> printed;
    std::vector<Entry> relations;
    for (Elem r : elems) {
      printed.push_back({idx({L.mul(r, t)}, n), idx({r, L.inv(t)}, n), 1});
      relations.push_back({idx({L.mul(r, t)}, n), idx({r, t}, n), 1});
    }
    run("p(t)" + tn, layout, printed);
    run("p(t)-relations" + tn, layout, relations);
  }
  {
    std::vector<Entry> e;
    for (Elem r : elems)
      for (Elem s : elems) e.push_back({idx({L.mul(r, s)}, n), idx({r, s}, n), 1});
    run("P", FixtureShape{2, 1, {{Block({1, 2}, {1}), kIdentity}}, {one, one}, {one}}, e);
  }
  for (Elem t : elems) {
    std::vector<Entry> e;
    for (Elem r : elems)
      for (Elem b : elems) e.push_back({idx({L.product({r, b, t}), L.inv(t)}, n), idx({r, b}, n), 1});
    run("q(t):t=" + L.name(t), FixtureShape{2, 2, {{Block({1, 2}, {1}), t}, {Block({}, {2}), L.inv(t)}}, {one, g}, {g, one}}, e);
  }
  {
    std::vector<Entry> e;
    for (Elem j : elems)
      for (Elem d : elems)
        for (Elem i : elems)
          for (Elem k : elems)
            if (L.mul(i, k) == L.mul(j, d)) e.push_back({idx({i, k}, n), idx({j, d}, n), 1});
    run("p2", FixtureShape{2, 2, {{Block({1, 2}, {1, 2}), kIdentity}}, {one, g}, {g, one}}, e);
  }
  {
    std::vector<Entry> e;
    for (Elem r : elems)
      for (Elem s : elems) e.push_back({idx({L.mul(r, s)}, n), idx({r, s}, n), 1});
    run("p3", FixtureShape{2, 1, {{Block({1, 2}, {1}), kIdentity}}, {g, h}, {G.mul(g, h)}}, e);
  }
  {
    std::vector<Entry> e;
    for (Elem r : elems) e.push_back({idx({r, L.inv(r)}, n), 0, 1});
    run("xi", FixtureShape{0, 2, {{Block({}, {1, 2}), kIdentity}}, {}, {g, G.inv(g)}}, e);
  }
  return out;
}

}  // namespace ncpart
