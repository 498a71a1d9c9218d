#include "ncpart/suites.hpp"

#include <memory>

#include "ncpart/operator.hpp"

namespace ncpart {

std::string suite_header(std::string_view suite, const SuiteOptions& options) {
  return "# verify suite=" + std::string(suite) + " lambda=" + options.lambda + " gamma=" + options.gamma +
         " max-kl=" + std::to_string(options.max_kl) + " max-l=" + std::to_string(options.max_l) +
         " seed=" + std::to_string(options.seed);
}

namespace {

std::string shape_id(int k, int l, int m) {
  return std::to_string(k) + "-" + std::to_string(l) + "-" + std::to_string(m);
}

struct Groups {
  LambdaPtr lambda;
  GammaPtr gamma;
};

Groups resolve(const SuiteOptions& o) {
  return {std::make_shared<const FiniteGroup>(finite_group_from_spec(o.lambda)),
          std::make_shared<const PointGroup>(group_from_spec(o.gamma))};
}

}  // namespace

Report composition_suite(const SuiteOptions& options) {
  const auto [lambda, gamma] = resolve(options);
  const ColoredUniverse u(lambda, gamma, options.max_kl);
  Report report;
  for (int k = 0; k <= options.max_kl; ++k)
    for (int l = 0; l <= options.max_kl; ++l)
      for (int m = 0; m <= options.max_kl; ++m) {
        std::size_t pairs = 0;
        std::size_t zero = 0;
        std::size_t bad_matrix = 0;
        std::size_t bad_colors = 0;
        std::string first;
        for (const auto& p : u.at(k, l))
          for (const auto& q : u.at(l, m)) {
            ++pairs;
            const auto res = compose(p, q);
            if (res.zero()) ++zero;
            if (!mat_equal(res.matrix(), brute_force_compose(p, q)) && bad_matrix++ == 0 && first.empty())
              first = "matrix";
            if (!res.zero()) {
              const auto& c = *res.composed;
              const bool ok = check_boundary_condition(c) &&
                              check_gamma_condition(c.partition(), c.gamma(), c.upper_colors(), c.lower_colors());
              if (!ok && bad_colors++ == 0 && first.empty()) first = "colour-conditions";
            }
          }
        std::string detail = "pairs=" + std::to_string(pairs) + " zero=" + std::to_string(zero) +
                             " matrix-failures=" + std::to_string(bad_matrix) +
                             " condition-failures=" + std::to_string(bad_colors);
        if (!first.empty()) detail += " first=" + first;
        report.add("composition", shape_id(k, l, m), bad_matrix == 0 && bad_colors == 0, detail);
      }
  return report;
}

Report counting_suite(const SuiteOptions& options) {
  const auto [lambda, gamma] = resolve(options);
  const std::size_t n = lambda->order();
  Report report;
  for (int k = 0; k <= 1; ++k)
    for (int l = 0; l <= options.max_l; ++l)
      for (int m = 0; m <= 1; ++m) {
        const auto ps = enumerate_colored(k, l, identity_colors(k), identity_colors(l), lambda, gamma);
        const auto qs = enumerate_colored(l, m, identity_colors(l), identity_colors(m), lambda, gamma);
        const std::uint64_t rs = checked_power(n, static_cast<std::size_t>(k), kDefaultMatrixGuard);
        const std::uint64_t ds = checked_power(n, static_cast<std::size_t>(m), kDefaultMatrixGuard);
        std::size_t cases = 0;
        std::size_t failures = 0;
        std::string first;
        for (const auto& p : ps)
          for (const auto& q : qs) {
            const auto res = compose(p, q);
            std::uint64_t expected = 1;
            for (int i = 0; i < res.exponent; ++i) expected *= n;
            for (std::uint64_t ri = 0; ri < rs; ++ri) {
              const auto r = decode_basis(ri, static_cast<std::size_t>(k), n);
              for (std::uint64_t di = 0; di < ds; ++di) {
                const auto d = decode_basis(di, static_cast<std::size_t>(m), n);
                ++cases;
                const std::uint64_t count = brute_force_middle_count(p, q, r, d);
                const bool positive = !res.zero() && delta_eval(*res.composed, r, d);
                const bool ok = (count == 0 || (!res.zero() && count == expected)) && (count > 0) == positive &&
                                count == count_middle_solutions(p, q, r, d);
                if (!ok && failures++ == 0)
                  first = "count=" + std::to_string(count) + " expected=" + std::to_string(positive ? expected : 0);
              }
            }
          }
        std::string detail = "cases=" + std::to_string(cases) + " failures=" + std::to_string(failures);
        if (!first.empty()) detail += " first=" + first;
        report.add("counting", shape_id(k, l, m), failures == 0, detail);
      }
  return report;
}

Report run_suite(std::string_view suite, const SuiteOptions& options) {
  const bool all = suite == "all";
  if (!all && suite != "composition" && suite != "counting" && suite != "axioms" && suite != "fixtures")
    throw Error(ErrorCode::UnknownSpec, "unknown suite '" + std::string(suite) + "'");
  Report report;
  if (all || suite == "composition") report.append(composition_suite(options));
  if (all || suite == "counting") report.append(counting_suite(options));
  if (all || suite == "axioms") {
    const auto [lambda, gamma] = resolve(options);
    AxiomOptions a;
    a.max_size = std::min(options.max_kl, 3);
    a.seed = options.seed;
    report.append(axiom_suite(lambda, gamma, a));
  }
  if (all || suite == "fixtures") {
    const auto [lambda, gamma] = resolve(options);
    report.append(reconstruction_fixtures(lambda, gamma).report());
  }
  return report;
}

}  // namespace ncpart
