#include <iostream>
#include <memory>

#include "CLI11.hpp"
#include "ncpart/category.hpp"
#include "ncpart/composition.hpp"
#include "ncpart/operator.hpp"
#include "ncpart/suites.hpp"
#include "partition_io.hpp"
#include "render.hpp"

using namespace ncpart;

namespace {

constexpr int kPass = 0;
constexpr int kPropertyFailure = 1;
constexpr int kUsage = 2;
constexpr int kGuard = 3;

struct Groups {
  LambdaPtr lambda;
  GammaPtr gamma;
};

Groups groups(const std::string& lambda, const std::string& gamma) {
  return {std::make_shared<const FiniteGroup>(finite_group_from_spec(lambda)),
          std::make_shared<const PointGroup>(group_from_spec(gamma))};
}

int run_enumerate(int k, int l, const std::string& lambda, const std::string& gamma, const std::string& upper,
                  const std::string& lower, bool count_only) {
  const auto g = groups(lambda, gamma);
  auto up = upper.empty() ? identity_colors(k) : io::parse_point_colors(*g.gamma, upper);
  auto lo = lower.empty() ? identity_colors(l) : io::parse_point_colors(*g.gamma, lower);
  if (up.size() != static_cast<std::size_t>(k) || lo.size() != static_cast<std::size_t>(l))
    throw Error(ErrorCode::LengthMismatch, "--upper/--lower must list k and l colours");
  const auto all = enumerate_colored(k, l, up, lo, g.lambda, g.gamma);
  if (count_only) {
    std::cout << all.size() << '\n';
    return kPass;
  }
  for (const auto& cp : all) std::cout << io::serialize_partition(cp).dump() << '\n';
  return kPass;
}

int run_compose(const std::string& pfile, const std::string& qfile, bool emit_matrix) {
  const auto p = io::parse_partition_file(pfile);
  const auto q = io::parse_partition_file(qfile);
  const auto res = compose(p, q);
  nlohmann::json out;
  out["zero"] = res.zero();
  out["exponent"] = res.exponent;
  out["components"] = res.components.size();
  std::uint64_t scalar = 1;
  for (int i = 0; i < res.exponent; ++i) scalar *= res.lambda->order();
  out["scalar"] = res.zero() ? 0 : scalar;
  out["composite"] = res.zero() ? nlohmann::json(nullptr) : io::serialize_partition(*res.composed);
  std::cout << out.dump(2) << '\n';
  if (emit_matrix) std::cout << dump_matrix(res.matrix());
  return kPass;
}

int run_matrix(const std::string& file, bool allow_invalid, std::uint64_t guard) {
  std::cout << dump_matrix(to_matrix(io::parse_partition_file(file, !allow_invalid), guard));
  return kPass;
}

int run_homdim(const std::string& upper, const std::string& lower, const std::string& lambda, const std::string& gamma,
               bool show_gram) {
  const auto g = groups(lambda, gamma);
  const auto src = io::parse_point_colors(*g.gamma, upper);
  const auto dst = io::parse_point_colors(*g.gamma, lower);
  const auto hom = hom_space(g.lambda, g.gamma, src, dst);
  std::cout << "candidates=" << hom.basis_candidates.size() << " dimension=" << hom.dimension << '\n';
  if (show_gram)
    for (const auto& row : hom.gram) {
      for (std::size_t j = 0; j < row.size(); ++j) std::cout << (j ? " " : "") << row[j];
      std::cout << '\n';
    }
  return kPass;
}

int run_verify(const std::string& suite, const SuiteOptions& options) {
  std::cout << suite_header(suite, options) << '\n';
  const auto report = run_suite(suite, options);
  std::cout << report.str();
  std::cout << "# cases=" << report.lines.size() << " failures=" << report.failures() << '\n';
  return report.passed() ? kPass : kPropertyFailure;
}

int run_render(const std::string& file, const std::string& format) {
  const auto cp = io::parse_partition_file(file, false);
  std::cout << (format == "svg" ? render::svg(cp) : render::ascii(cp));
  return kPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Colored noncrossing partitions: enumeration, composition and verification"};
  app.require_subcommand(1);

  int k = 0;
  int l = 0;
  std::string lambda = "Z2";
  std::string gamma = "free:1";
  std::string upper;
  std::string lower;
  bool count_only = false;
  auto* enumerate = app.add_subcommand("enumerate", "List NC_Lambda(g, h) as JSON lines");
  enumerate->add_option("--k", k, "Upper points")->required()->check(CLI::Range(0, 10));
  enumerate->add_option("--l", l, "Lower points")->required()->check(CLI::Range(0, 10));
  enumerate->add_option("--lambda", lambda, "Block colour group")->required();
  enumerate->add_option("--gamma", gamma, "Point colour group")->capture_default_str();
  enumerate->add_option("--upper", upper, "Comma separated upper point colours");
  enumerate->add_option("--lower", lower, "Comma separated lower point colours");
  enumerate->add_flag("--count", count_only, "Print only the number of partitions");

  std::string pfile;
  std::string qfile;
  bool emit_matrix = false;
  auto* compose_cmd = app.add_subcommand("compose", "Vertical composite q.p of two partition files");
  compose_cmd->add_option("P", pfile, "Upper partition (applied first)")->required()->check(CLI::ExistingFile);
  compose_cmd->add_option("Q", qfile, "Lower partition")->required()->check(CLI::ExistingFile);
  compose_cmd->add_flag("--emit-matrix", emit_matrix, "Also dump |Lambda|^(c-1) T_{q.p}");

  bool allow_invalid = false;
  std::uint64_t guard = kDefaultMatrixGuard;
  auto* matrix = app.add_subcommand("matrix", "Dump T_p");
  matrix->add_option("P", pfile, "Partition file")->required()->check(CLI::ExistingFile);
  matrix->add_flag("--allow-invalid", allow_invalid, "Skip the colouring conditions");
  matrix->add_option("--guard", guard, "Largest allowed |Lambda|^max(k,l)")->capture_default_str();

  bool show_gram = false;
  auto* homdim = app.add_subcommand("homdim", "Dimension of Mor(g, h)");
  homdim->add_option("--upper", upper, "Source colours, comma separated");
  homdim->add_option("--lower", lower, "Target colours, comma separated");
  homdim->add_option("--lambda", lambda, "Block colour group")->required();
  homdim->add_option("--gamma", gamma, "Point colour group")->capture_default_str();
  homdim->add_flag("--gram", show_gram, "Print the Gram matrix");

  std::string suite;
  SuiteOptions options;
  auto* verify = app.add_subcommand("verify", "Run a property suite");
  verify->add_option("--suite", suite, "Suite")
      ->required()
      ->check(CLI::IsMember({"composition", "counting", "axioms", "fixtures", "all"}));
  verify->add_option("--lambda", options.lambda, "Block colour group")->required();
  verify->add_option("--gamma", options.gamma, "Point colour group")->capture_default_str();
  verify->add_option("--max-kl", options.max_kl, "Bound on k, l, m")->capture_default_str()->check(CLI::Range(0, 4));
  verify->add_option("--max-l", options.max_l, "Middle bound for counting")->capture_default_str()->check(CLI::Range(0, 8));
  verify->add_option("--seed", options.seed, "Sampling seed")->capture_default_str();

  std::string format = "ascii";
  auto* render_cmd = app.add_subcommand("render", "Draw a partition");
  render_cmd->add_option("P", pfile, "Partition file")->required()->check(CLI::ExistingFile);
  render_cmd->add_option("--format", format, "ascii or svg")->check(CLI::IsMember({"ascii", "svg"}))->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kPass : kUsage;
  }

  try {
    if (*enumerate) return run_enumerate(k, l, lambda, gamma, upper, lower, count_only);
    if (*compose_cmd) return run_compose(pfile, qfile, emit_matrix);
    if (*matrix) return run_matrix(pfile, allow_invalid, guard);
    if (*homdim) return run_homdim(upper, lower, lambda, gamma, show_gram);
    if (*verify) return run_verify(suite, options);
    if (*render_cmd) return run_render(pfile, format);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return e.code() == ErrorCode::SizeLimitExceeded ? kGuard : kUsage;
  }
  return kUsage;
}
