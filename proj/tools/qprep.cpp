// qprep: validate, classify and generate quaternionic weak projective
// representations, and scan for multicentral reps that are not central.

#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "qpr/cli.hpp"

int main(int argc, char** argv) {
  using namespace qpr::cli;
  CLI::App app{"Quaternionic weak projective representations"};
  app.require_subcommand(1);

  double eps = qpr::kDefaultEps;

  std::string validate_path;
  auto* validate = app.add_subcommand("validate", "check group, unitarity and phase extraction");
  validate->add_option("path", validate_path, "representation file")->required();
  validate->add_option("--eps", eps, "tolerance");

  std::string classify_path;
  ClassifyFlags cflags;
  std::string classify_out;
  auto* classify = app.add_subcommand("classify", "classify an irreducible rep into cases 1-3");
  classify->add_option("path", classify_path, "representation file")->required();
  classify->add_option("--eps", cflags.eps, "tolerance");
  classify->add_option("--seed", cflags.seed, "seed for the reraying search");
  classify->add_option("--trials", cflags.trials, "random restarts for the case-3 search");
  classify->add_option("--out", classify_out, "report file (default stdout)");

  ScanFlags sflags;
  std::string scan_out;
  auto* scan = app.add_subcommand("corollary-scan", "random scan for multicentral, non-central reps");
  scan->add_option("--seed", sflags.seed, "scan seed");
  scan->add_option("--trials", sflags.trials, "number of random reps");
  scan->add_option("--max-order", sflags.max_order, "largest group order");
  scan->add_option("--max-dim", sflags.max_dim, "largest dimension");
  scan->add_option("--eps", sflags.eps, "tolerance");
  scan->add_option("--out", scan_out, "report file (default stdout)");

  GenerateFlags gflags;
  std::string gen_out;
  std::vector<std::string> sigma_text;
  auto* generate = app.add_subcommand("generate", "write a reference representation file");
  generate->add_option("case", gflags.structure_case, "1, 2 or 3")->required();
  generate->add_option("--n", gflags.n, "clock-shift size for case 2");
  generate->add_option("--sigma", sigma_text,
                       "case 3: sigma for (1,0) (0,1) (1,1); each 1|i|j|k|-j|w,x,y,z")
      ->expected(3);
  generate->add_option("--out", gen_out, "output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kUsage;
  }

  if (*validate) return cmd_validate(validate_path, eps, std::cout, std::cerr);
  if (*classify) {
    if (!classify_out.empty()) cflags.out = classify_out;
    return cmd_classify(classify_path, cflags, std::cout, std::cerr);
  }
  if (*scan) {
    if (!scan_out.empty()) sflags.out = scan_out;
    return cmd_corollary_scan(sflags, std::cout, std::cerr);
  }
  if (*generate) {
    if (!gen_out.empty()) gflags.out = gen_out;
    if (!sigma_text.empty()) {
      gflags.sigma.clear();
      for (const auto& s : sigma_text) {
        const auto q = parse_quaternion(s);
        if (!q) {
          std::cerr << "cannot parse quaternion '" << s << "'\n";
          return kUsage;
        }
        gflags.sigma.push_back(*q);
      }
    }
    return cmd_generate(gflags, std::cout, std::cerr);
  }
  return kUsage;
}
