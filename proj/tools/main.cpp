// Command-line front end: construction, inspection, verification and export
// of quaternary Reed-Muller codes. Output is deterministic and line-oriented
// so it can be golden-file tested.
//
// Exit codes: 0 success, 1 verification failure, 2 usage or input error.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "z4rm/analysis.hpp"
#include "z4rm/code.hpp"
#include "z4rm/duality.hpp"
#include "z4rm/family.hpp"
#include "z4rm/verify.hpp"

namespace {

void emit_code(const z4rm::QuaternaryCode& code, const std::string& out_path) {
  if (out_path.empty()) {
    z4rm::write_q4code(std::cout, code);
  } else {
    z4rm::write_q4code_file(out_path, code);
  }
}

int run_build(int s, int r, int m, const std::string& out_path) {
  emit_code(z4rm::rm_code({s, r, m}), out_path);
  return 0;
}

int run_info(const std::string& path) {
  const z4rm::QuaternaryCode code = z4rm::read_q4code_file(path);
  std::cout << "N=" << code.length() << " GAMMA=" << code.gamma() << " DELTA=" << code.delta() << "\n";
  std::cout << "ROWS=" << code.canonical_generators().row_count() << "\n";
  return 0;
}

int run_mindist(const std::string& path, std::uint64_t cap) {
  const z4rm::QuaternaryCode code = z4rm::read_q4code_file(path);
  std::cout << z4rm::min_lee_distance(code, cap) << "\n";
  return 0;
}

int run_dual(const std::string& path, const std::string& inner, const std::string& out_path) {
  const z4rm::QuaternaryCode code = z4rm::read_q4code_file(path);
  const auto kind =
      inner == "standard" ? z4rm::InnerProductKind::standard : z4rm::InnerProductKind::kronecker;
  emit_code(z4rm::dual_code(code, kind), out_path);
  return 0;
}

int run_table(int m) {
  const z4rm::RmTable table = z4rm::rm_table(m);
  for (const auto& family : table.entries) {
    for (std::size_t r = 0; r < family.size(); ++r) {
      if (r) std::cout << ' ';
      std::cout << '(' << family[r].first << ',' << family[r].second << ')';
    }
    std::cout << "\n";
  }
  return 0;
}

int run_gray(const std::string& path, std::uint64_t cap) {
  const z4rm::QuaternaryCode code = z4rm::read_q4code_file(path);
  const z4rm::GrayImageReport report = z4rm::gray_image_params(code, cap);
  std::cout << "n=" << report.binary_length << " k=" << report.dimension << " d=";
  if (report.min_distance.has_value())
    std::cout << *report.min_distance;
  else
    std::cout << "unavailable";
  std::cout << " linear=" << (report.is_linear ? "yes" : "no") << "\n";
  return 0;
}

int run_verify(int m, bool extended) {
  const auto results = z4rm::run_family_verification({m, extended});
  bool all_passed = true;
  for (const auto& r : results) {
    std::cout << (r.passed ? "PASS " : "FAIL ") << r.name;
    if (!r.detail.empty()) std::cout << " (" << r.detail << ")";
    std::cout << "\n";
    all_passed = all_passed && r.passed;
  }
  return all_passed ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"quaternary Reed-Muller code construction and verification"};
  app.require_subcommand(1);

  int s = 0, r = 0, m = 1;
  std::string path, out_path, inner = "standard";
  std::uint64_t cap = z4rm::kDefaultEnumerationCap;
  bool family = false, extended = false;

  auto* build = app.add_subcommand("build", "construct RM_s(r,m) and emit Q4CODE v1");
  build->add_option("-s", s, "family index")->required();
  build->add_option("-r", r, "order")->required();
  build->add_option("-m", m, "length exponent")->required();
  build->add_option("--out", out_path, "output path (default: stdout)");

  auto* exp = app.add_subcommand("export", "construct RM_s(r,m) and write Q4CODE v1 to a file");
  exp->add_option("-s", s, "family index")->required();
  exp->add_option("-r", r, "order")->required();
  exp->add_option("-m", m, "length exponent")->required();
  exp->add_option("--out", out_path, "output path")->required();

  auto* info = app.add_subcommand("info", "print type and row count of a Q4CODE file");
  info->add_option("path", path, "Q4CODE file")->required();

  auto* mindist = app.add_subcommand("mindist", "print the minimum Lee distance");
  mindist->add_option("path", path, "Q4CODE file")->required();
  mindist->add_option("--cap", cap, "enumeration cap in codewords");

  auto* dual = app.add_subcommand("dual", "emit the dual code");
  dual->add_option("path", path, "Q4CODE file")->required();
  dual->add_option("--inner", inner, "inner product")
      ->required()
      ->check(CLI::IsMember({"standard", "kronecker"}));
  dual->add_option("--out", out_path, "output path (default: stdout)");

  auto* verify = app.add_subcommand("verify", "run the family invariant suite");
  verify->add_flag("--family", family, "verify the Reed-Muller families");
  verify->add_option("-m", m, "largest m to verify")->required();
  verify->add_flag("--extended", extended, "enable large distance enumerations");

  auto* table = app.add_subcommand("table", "print the (gamma,delta) grid for fixed m");
  table->add_option("-m", m, "length exponent")->required();

  auto* gray = app.add_subcommand("gray", "print the Gray-image report of a Q4CODE file");
  gray->add_option("path", path, "Q4CODE file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (build->parsed()) return run_build(s, r, m, out_path);
    if (exp->parsed()) return run_build(s, r, m, out_path);
    if (info->parsed()) return run_info(path);
    if (mindist->parsed()) return run_mindist(path, cap);
    if (dual->parsed()) return run_dual(path, inner, out_path);
    if (verify->parsed()) {
      if (!family) {
        std::cerr << "error: verify requires --family\n";
        return 2;
      }
      return run_verify(m, extended);
    }
    if (table->parsed()) return run_table(m);
    if (gray->parsed()) return run_gray(path, cap);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
