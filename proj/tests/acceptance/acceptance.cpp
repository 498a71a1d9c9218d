// Acceptance run: prints one PASS/FAIL line per criterion and exits nonzero if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <memory>
#include <random>
#include <sstream>
#include <string>

#include "ncpart/category.hpp"
#include "ncpart/composition.hpp"
#include "oracles.hpp"

using namespace ncpart;

namespace {

LambdaPtr lambda(const char* spec) { return std::make_shared<const FiniteGroup>(finite_group_from_spec(spec)); }
const GammaPtr kFree1 = std::make_shared<const PointGroup>(group_from_spec("free:1"));

std::uint64_t power(std::size_t n, int e) {
  std::uint64_t out = 1;
  for (int i = 0; i < e; ++i) out *= n;
  return out;
}

std::vector<ColoredPartition> shapes(const LambdaPtr& l, int k, int n) {
  return enumerate_colored(k, n, identity_colors(k), identity_colors(n), l, kFree1);
}

std::string describe(const TwoRowPartition& p) {
  std::ostringstream out;
  out << p.k() << "x" << p.l() << ":";
  for (const auto& b : p.blocks()) {
    out << "{";
    for (int i : b.upper()) out << "U" << i;
    for (int j : b.lower()) out << "L" << j;
    out << "}";
  }
  return out.str();
}

std::string describe(const ColoredPartition& p) {
  std::ostringstream out;
  out << describe(p.partition()) << "/";
  for (std::size_t b = 0; b < p.size(); ++b) out << (b ? "," : "") << p.lambda().name(p.color(b));
  return out.str();
}

struct Tally {
  std::uint64_t checked = 0;
  std::uint64_t failed = 0;
  std::string first;

  void check(bool ok, const std::function<std::string()>& what) {
    ++checked;
    if (ok) return;
    if (failed++ == 0) first = what();
  }
  bool ok() const { return failed == 0; }
  std::string str() const {
    std::string s = "checks=" + std::to_string(checked) + " failures=" + std::to_string(failed);
    if (!first.empty()) s += " first=" + first;
    return s;
  }
};

struct Pair {
  ColoredPartition p;
  ColoredPartition q;
};

// Every composable pair over lambda with identity point colours and k, l, m <= n.
std::vector<Pair> all_pairs(const LambdaPtr& l, int n) {
  std::vector<Pair> out;
  for (int k = 0; k <= n; ++k)
    for (int mid = 0; mid <= n; ++mid)
      for (int m = 0; m <= n; ++m) {
        const auto ps = shapes(l, k, mid);
        const auto qs = shapes(l, mid, m);
        for (const auto& p : ps)
          for (const auto& q : qs) out.push_back({p, q});
      }
  return out;
}

std::vector<Pair> sampled_pairs(const LambdaPtr& l, int n, std::size_t count, std::uint64_t seed) {
  std::vector<std::vector<std::vector<ColoredPartition>>> cache(
      static_cast<std::size_t>(n + 1), std::vector<std::vector<ColoredPartition>>(static_cast<std::size_t>(n + 1)));
  for (int k = 0; k <= n; ++k)
    for (int j = 0; j <= n; ++j) cache[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)] = shapes(l, k, j);
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> size(0, n);
  auto pick = [&](const std::vector<ColoredPartition>& v) {
    return v[std::uniform_int_distribution<std::size_t>(0, v.size() - 1)(rng)];
  };
  std::vector<Pair> out;
  while (out.size() < count) {
    const auto k = static_cast<std::size_t>(size(rng));
    const auto mid = static_cast<std::size_t>(size(rng));
    const auto m = static_cast<std::size_t>(size(rng));
    out.push_back({pick(cache[k][mid]), pick(cache[mid][m])});
  }
  return out;
}

// Pairs over Z2 and free:1 whose point colours range over {e, x, X}.
std::vector<Pair> gamma_sweep_pairs(const LambdaPtr& l, int n) {
  const std::vector<PointElem> palette{kFree1->identity(), kFree1->parse("x"), kFree1->parse("X")};
  auto vectors = [&](int len) {
    std::vector<std::vector<PointElem>> out;
    for (std::uint64_t i = 0; i < power(palette.size(), len); ++i) {
      std::vector<PointElem> v;
      std::uint64_t x = i;
      for (int j = 0; j < len; ++j, x /= palette.size()) v.push_back(palette[x % palette.size()]);
      out.push_back(v);
    }
    return out;
  };
  std::vector<Pair> out;
  for (int k = 0; k <= n; ++k)
    for (int mid = 0; mid <= n; ++mid)
      for (int m = 0; m <= n; ++m)
        for (const auto& g : vectors(k))
          for (const auto& h : vectors(mid)) {
            const auto ps = enumerate_colored(k, mid, g, h, l, kFree1);
            if (ps.empty()) continue;
            for (const auto& f : vectors(m))
              for (const auto& q : enumerate_colored(mid, m, h, f, l, kFree1))
                for (const auto& p : ps) out.push_back({p, q});
          }
  return out;
}

std::string pair_name(const Pair& x) { return describe(x.p) + "|" + describe(x.q); }

bool criterion(int n, const std::string& title, const std::function<std::pair<bool, std::string>()>& body) {
  const auto start = std::chrono::steady_clock::now();
  const auto [ok, detail] = body();
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  char time[32];
  std::snprintf(time, sizeof time, "%.2f", secs);
  std::cout << "criterion " << n << " " << (ok ? "PASS" : "FAIL") << " " << title << " " << detail << " time=" << time
            << "s" << std::endl;
  return ok;
}

std::vector<Pair> universe_pairs() {
  auto out = all_pairs(lambda("Z2"), 2);
  for (auto& x : all_pairs(lambda("Z3"), 2)) out.push_back(std::move(x));
  for (auto& x : sampled_pairs(lambda("S3"), 3, 500, 20240601)) out.push_back(std::move(x));
  return out;
}

std::pair<bool, std::string> master_law(const std::vector<Pair>& pairs) {
  Tally t;
  std::uint64_t zero = 0;
  for (const auto& x : pairs) {
    const auto res = compose(x.p, x.q);
    zero += res.zero();
    t.check(mat_equal(brute_force_compose(x.p, x.q), res.matrix()), [&] { return pair_name(x); });
  }
  return {t.ok(), t.str() + " pairs=" + std::to_string(pairs.size()) + " zero=" + std::to_string(zero)};
}

std::pair<bool, std::string> counting_law(const std::vector<Pair>& pairs) {
  Tally t;
  for (const auto& x : pairs) {
    const std::size_t n = x.p.lambda().order();
    const int k = x.p.k();
    const int m = x.q.l();
    if (power(n, k + m) > 256) continue;
    const auto res = compose(x.p, x.q);
    const std::uint64_t expected = power(n, res.exponent);
    for (std::uint64_t ri = 0; ri < power(n, k); ++ri)
      for (std::uint64_t di = 0; di < power(n, m); ++di) {
        const auto r = decode_basis(ri, static_cast<std::size_t>(k), n);
        const auto d = decode_basis(di, static_cast<std::size_t>(m), n);
        const auto count = oracle::middle_solutions(x.p, x.q, r, d).size();
        if (res.zero()) {
          t.check(count == 0, [&] { return pair_name(x) + ":zero-composite-has-solutions"; });
          continue;
        }
        t.check(count == 0 || count == expected, [&] { return pair_name(x) + ":count=" + std::to_string(count); });
        t.check((count > 0) == delta_eval(*res.composed, r, d), [&] { return pair_name(x) + ":delta"; });
      }
  }
  return {t.ok(), t.str()};
}

std::pair<bool, std::string> preservation(const std::vector<Pair>& pairs) {
  Tally t;
  std::uint64_t nonzero = 0;
  auto run = [&](const Pair& x) {
    const auto res = compose(x.p, x.q);
    if (res.zero()) return;
    ++nonzero;
    const auto& c = *res.composed;
    t.check(check_boundary_condition(c), [&] { return pair_name(x) + ":boundary"; });
    t.check(check_gamma_condition(c.partition(), c.gamma(), c.upper_colors(), c.lower_colors()),
            [&] { return pair_name(x) + ":gamma"; });
    t.check(c.upper_colors() == x.p.upper_colors() && c.lower_colors() == x.q.lower_colors(),
            [&] { return pair_name(x) + ":point-colours"; });
  };
  for (const auto& x : pairs) run(x);
  const auto sweep = gamma_sweep_pairs(lambda("Z2"), 2);
  for (const auto& x : sweep) {
    run(x);
    t.check(mat_equal(brute_force_compose(x.p, x.q), compose(x.p, x.q).matrix()),
            [&] { return pair_name(x) + ":sweep-master-law"; });
  }
  return {t.ok(), t.str() + " nonzero=" + std::to_string(nonzero) + " sweep-pairs=" + std::to_string(sweep.size())};
}

std::pair<bool, std::string> constancy() {
  Tally t;
  std::uint64_t entrances = 0;
  std::uint64_t frames = 0;
  auto run = [&](const Pair& x) {
    const auto& p = x.p;
    const auto& q = x.q;
    const auto adm = find_admissible(p, q);
    if (!adm) return;
    const auto& g = p.lambda();
    const std::size_t n = g.order();
    std::vector<std::vector<Elem>> solutions;
    for (std::uint64_t ri = 0; ri < power(n, p.k()); ++ri)
      for (std::uint64_t di = 0; di < power(n, q.l()); ++di)
        for (auto& s : oracle::middle_solutions(p, q, decode_basis(ri, static_cast<std::size_t>(p.k()), n),
                                                decode_basis(di, static_cast<std::size_t>(q.l()), n)))
          solutions.push_back(std::move(s));
    for (const auto& c : connected_components(p.partition(), q.partition())) {
      if (!c.meets_middle() || c.kind == ComponentKind::Cycle) continue;
      const auto base = component_constants(c, p, q, adm->s);
      const auto ents = component_entrances(c, p.partition(), q.partition());
      entrances += ents.size();
      const bool half = c.kind == ComponentKind::UpperHalf || c.kind == ComponentKind::LowerHalf;
      frames += half;
      for (const auto& s : solutions) {
        for (std::size_t i = 0; i < ents.size(); ++i) {
          const std::vector<Elem> part(s.begin() + ents[i].lo - 1, s.begin() + ents[i].hi);
          t.check(ordered_product(g, part) == base.entrance[i], [&] { return pair_name(x) + ":entrance"; });
        }
        const auto other = component_constants(c, p, q, s, false);
        t.check(other.f == base.f && other.h == base.h && other.mu == base.mu,
                [&] { return pair_name(x) + ":frame-or-tail"; });
      }
    }
  };
  for (const auto& x : all_pairs(lambda("Z3"), 2)) run(x);
  const auto z2 = lambda("Z2");
  for (int k = 0; k <= 2; ++k)
    for (int mid = 0; mid <= 3; ++mid)
      for (int m = 0; m <= 2; ++m)
        for (const auto& p : shapes(z2, k, mid))
          for (const auto& q : shapes(z2, mid, m)) run({p, q});
  return {t.ok() && entrances > 0 && frames > 0,
          t.str() + " entrances=" + std::to_string(entrances) + " frames=" + std::to_string(frames)};
}

std::pair<bool, std::string> tensor_adjoint_rotation() {
  Tally t;
  const auto z2 = lambda("Z2");
  std::vector<ColoredPartition> small;
  std::vector<ColoredPartition> all;
  for (int k = 0; k <= 4; ++k)
    for (int l = 0; k + l <= 4; ++l)
      for (auto& p : shapes(z2, k, l)) {
        if (k + l <= 2) small.push_back(p);
        all.push_back(std::move(p));
      }
  for (const auto& p : all) {
    for (const auto& q : small) {
      const auto pq = tensor_partitions(p, q);
      t.check(pq.valid() && mat_equal(to_matrix(pq), mat_tensor(to_matrix(p), to_matrix(q))),
              [&] { return describe(p) + "(x)" + describe(q); });
    }
    t.check(mat_equal(to_matrix(adjoint_partition(p)), mat_adjoint(to_matrix(p))), [&] { return describe(p) + ":adjoint"; });
    const auto rot = left_rotate(p);
    const auto cap_matrix = to_matrix(cap_k(z2, kFree1, identity_colors(p.k())));
    const auto lhs = mat_compose(mat_tensor(cap_matrix, MorphismMatrix::identity(power(2, p.l()))),
                                 mat_tensor(MorphismMatrix::identity(power(2, p.k())), to_matrix(rot)));
    t.check(rot.valid() && mat_equal(lhs, to_matrix(p)), [&] { return describe(p) + ":rotation"; });
  }
  return {t.ok(), t.str() + " partitions=" + std::to_string(all.size())};
}

std::pair<bool, std::string> rigidity() {
  Tally t;
  const std::vector<std::vector<PointElem>> colour_sets{
      {}, {kFree1->identity()}, {kFree1->parse("x")}, {kFree1->parse("XX")},
      {kFree1->identity(), kFree1->parse("x")}, {kFree1->parse("x"), kFree1->parse("xx")},
      {kFree1->parse("X"), kFree1->parse("x")}};
  for (const char* spec : {"Z2", "Z3"}) {
    const auto l = lambda(spec);
    for (const auto& g : colour_sets) {
      const int k = static_cast<int>(g.size());
      const auto gbar = conjugate_colors(*kFree1, g);
      const auto id_g = identity_strands(l, kFree1, g);
      const auto id_gbar = identity_strands(l, kFree1, gbar);
      const auto id_matrix = MorphismMatrix::identity(power(l->order(), k));
      const std::string name = std::string(spec) + ":k=" + std::to_string(k);

      const auto left_lower = tensor_partitions(id_g, cup_k(l, kFree1, gbar));
      const auto left_upper = tensor_partitions(cap_k(l, kFree1, g), id_g);
      const auto left = compose(left_lower, left_upper);
      t.check(!left.zero() && left.exponent == 0 && *left.composed == id_g, [&] { return name + ":zigzag-left"; });
      t.check(mat_equal(mat_compose(to_matrix(left_upper), to_matrix(left_lower)), id_matrix),
              [&] { return name + ":zigzag-left-matrix"; });

      const auto right_lower = tensor_partitions(cup_k(l, kFree1, gbar), id_gbar);
      const auto right_upper = tensor_partitions(id_gbar, cap_k(l, kFree1, g));
      const auto right = compose(right_lower, right_upper);
      t.check(!right.zero() && right.exponent == 0 && *right.composed == id_gbar, [&] { return name + ":zigzag-right"; });
      t.check(mat_equal(mat_compose(to_matrix(right_upper), to_matrix(right_lower)), id_matrix),
              [&] { return name + ":zigzag-right-matrix"; });

      const auto loop = mat_compose(to_matrix(cap_k(l, kFree1, g)), to_matrix(cup_k(l, kFree1, g)));
      const auto expected = static_cast<std::int64_t>(power(l->order(), k));
      t.check(mat_equal(loop, MorphismMatrix(1, 1, {{0, 0, expected}})), [&] { return name + ":loop"; });
      t.check(compose(cup_k(l, kFree1, g), cap_k(l, kFree1, g)).exponent == k, [&] { return name + ":loop-exponent"; });
    }
  }
  return {t.ok(), t.str()};
}

std::pair<bool, std::string> fixtures() {
  bool ok = true;
  std::string failing;
  std::uint64_t cases = 0;
  std::uint64_t rederived_fail = 0;
  for (const char* spec : {"Z2", "Z3", "S3"}) {
    for (const auto& c : reconstruction_fixtures(lambda(spec), kFree1).cases) {
      ++cases;
      if (c.id.rfind("p(t)-relations", 0) == 0) {
        rederived_fail += !c.pass;
        continue;
      }
      if (!c.pass) {
        ok = false;
        failing += (failing.empty() ? "" : ",") + std::string(spec) + "/" + c.id;
      }
    }
  }
  std::string detail = "cases=" + std::to_string(cases) + " rederived-p(t)-failures=" + std::to_string(rederived_fail);
  if (!failing.empty()) detail += " failing=" + failing;
  return {ok, detail};
}

std::pair<bool, std::string> counts() {
  Tally t;
  for (int n = 0; n <= 8; ++n)
    for (int k = 0; k <= n; ++k) {
      const auto ps = enumerate_partitions(k, n - k);
      t.check(ps.size() == oracle::catalan(n), [&] { return "catalan:" + std::to_string(k) + "," + std::to_string(n - k); });
      t.check(ps == oracle::noncrossing_by_filtering(k, n - k),
              [&] { return "filter:" + std::to_string(k) + "," + std::to_string(n - k); });
    }
  for (const char* spec : {"Z2", "Z3", "S3"}) {
    const auto l = lambda(spec);
    const int max = l->order() > 3 ? 4 : 5;
    for (int n = 0; n <= max; ++n)
      for (int k = 0; k <= n; ++k)
        for (const auto& p : enumerate_partitions(k, n - k)) {
          const std::uint64_t expected = p.size() == 0 ? 1 : power(l->order(), static_cast<int>(p.size()) - 1);
          t.check(enumerate_colorings(p, *l).size() == expected, [&] { return std::string(spec) + ":" + describe(p); });
          t.check(oracle::colorings_by_filtering(p, l, kFree1) == expected,
                  [&] { return std::string(spec) + ":filter:" + describe(p); });
        }
  }
  for (const char* spec : {"Z2", "Z3"}) {
    const auto l = lambda(spec);
    const std::vector<PointElem> one{kFree1->identity()};
    t.check(hom_space(l, kFree1, one, one).dimension == l->order(), [&] { return std::string(spec) + ":homdim"; });
  }
  return {t.ok(), t.str()};
}

std::pair<bool, std::string> classical() {
  Tally t;
  const auto triv = lambda("trivial");
  std::uint64_t pairs = 0;
  for (const auto& x : all_pairs(triv, 3)) {
    ++pairs;
    const auto res = compose(x.p, x.q);
    const auto want = oracle::classical_compose(x.p.partition(), x.q.partition());
    t.check(!res.zero(), [&] { return pair_name(x) + ":zero"; });
    if (res.zero()) continue;
    t.check(res.composed->partition() == want.partition, [&] { return pair_name(x) + ":partition"; });
    t.check(power(1, res.exponent) == 1 && mat_equal(res.matrix(), brute_force_compose(x.p, x.q)),
            [&] { return pair_name(x) + ":scalar"; });
    t.check(mat_equal(brute_force_compose(x.p, x.q), to_matrix(*res.composed)), [&] { return pair_name(x) + ":unit"; });
  }
  return {t.ok(), t.str() + " pairs=" + std::to_string(pairs)};
}

}  // namespace

int main() {
  const auto pairs = universe_pairs();
  bool ok = true;
  ok &= criterion(1, "master-composition-law", [&] { return master_law(pairs); });
  ok &= criterion(2, "solution-count-law", [&] { return counting_law(pairs); });
  ok &= criterion(3, "boundary-and-gamma-preservation", [&] { return preservation(pairs); });
  ok &= criterion(4, "constancy-laws", constancy);
  ok &= criterion(5, "tensor-adjoint-rotation", tensor_adjoint_rotation);
  ok &= criterion(6, "rigidity", rigidity);
  ok &= criterion(7, "closed-form-fixtures", fixtures);
  ok &= criterion(8, "combinatorial-counts", counts);
  ok &= criterion(9, "classical-reduction", classical);
  return ok ? 0 : 1;
}
