#include "qpr/cli.hpp"

#include <array>
#include <fstream>
#include <ostream>
#include <sstream>

#include "qpr/classify.hpp"
#include "qpr/corpus.hpp"
#include "qpr/errors.hpp"
#include "qpr/io.hpp"
#include "qpr/scan.hpp"

namespace qpr::cli {

namespace {

void emit(const std::string& text, const std::optional<std::filesystem::path>& dest,
          std::ostream& out) {
  if (!dest) {
    out << text;
    return;
  }
  std::ofstream f(*dest, std::ios::binary);
  if (!f) throw Error("cannot write " + dest->string());
  f << text;
}

const char* kind_name(GroupViolation::Kind k) {
  switch (k) {
    case GroupViolation::Kind::Shape: return "shape";
    case GroupViolation::Kind::Closure: return "closure";
    case GroupViolation::Kind::Identity: return "identity";
    case GroupViolation::Kind::Inverse: return "inverse";
    case GroupViolation::Kind::Associativity: return "associativity";
  }
  return "unknown";
}

// Loads and validates; on failure prints the reason and returns nullopt.
std::optional<RepFile> load_validated(const std::filesystem::path& path, double eps,
                                      std::ostream& out, std::ostream& err) {
  std::optional<RepFile> file;
  try {
    file = read_rep_file(path);
  } catch (const ParseError& e) {
    err << "parse error at " << e.what() << "\n";
    return std::nullopt;
  } catch (const Error& e) {
    err << "parse error: " << e.what() << "\n";
    return std::nullopt;
  }
  const auto& rep = file->rep;
  const auto gv = validate_group(rep.group());
  if (!gv) {
    const auto& v = *gv.violation;
    err << "group: FAIL " << kind_name(v.kind) << ": " << v.message << "\n";
    if (v.kind == GroupViolation::Kind::Associativity) {
      err << "failing triple: (" << rep.group().label(v.elements[0]) << ", "
          << rep.group().label(v.elements[1]) << ", " << rep.group().label(v.elements[2]) << ")\n";
    }
    return std::nullopt;
  }
  out << "group: ok (order " << rep.order() << ")\n";
  for (Element a = 0; a < rep.order(); ++a) {
    const double dev = unitarity_deviation(rep.matrix(a));
    if (dev > eps) {
      err << "unitarity: FAIL element " << rep.group().label(a) << " (index " << a
          << ") deviation " << dev << "\n";
      return std::nullopt;
    }
  }
  out << "unitarity: ok\n";
  try {
    validate_rep(rep, eps);
  } catch (const IdentityNotNormalized& e) {
    err << "identity: FAIL " << e.what() << "\n";
    return std::nullopt;
  }
  out << "identity normalization: ok\n";
  try {
    extract_phases(rep, eps);
  } catch (const NotWeakProjective& e) {
    err << "weak projective: FAIL pair (b, a) = (" << rep.group().label(e.b()) << ", "
        << rep.group().label(e.a()) << ") off-diagonal " << e.offdiag_norm() << "\n";
    return std::nullopt;
  } catch (const NonUnitPhase& e) {
    err << "weak projective: FAIL " << e.what() << "\n";
    return std::nullopt;
  }
  out << "weak projective: ok (off-diagonal " << weak_projective_deviation(rep) << ")\n";
  return file;
}

}  // namespace

int cmd_validate(const std::filesystem::path& path, double eps, std::ostream& out,
                 std::ostream& err) {
  const auto file = load_validated(path, eps, out, err);
  if (!file) return kValidationFailure;
  const IdentityReport ids = check_identities(file->rep);
  out << "operator form residual: " << ids.operator_form << "\n"
      << "associativity residual: " << ids.associativity << "\n"
      << "spectral form residual: " << ids.spectral << "\n";
  if (!ids.ok(eps)) {
    err << "identities: FAIL (max residual " << ids.max() << ")\n";
    return kValidationFailure;
  }
  out << "valid\n";
  return kOk;
}

int cmd_classify(const std::filesystem::path& path, const ClassifyFlags& flags, std::ostream& out,
                 std::ostream& err) {
  std::ostringstream log;
  const auto file = load_validated(path, flags.eps, log, err);
  if (!file) return kValidationFailure;
  const ClassificationOutcome outcome =
      classify(file->rep, {.eps = flags.eps, .seed = flags.seed, .trials = flags.trials});
  emit(classification_report(file->rep, outcome, check_identities(file->rep)), flags.out, out);
  return outcome.kind == StructureCase::Unclassified ? kUnclassified : kOk;
}

int cmd_corollary_scan(const ScanFlags& flags, std::ostream& out, std::ostream& err) {
  ScanReport report;
  try {
    report = run_corollary_scan({.seed = flags.seed,
                                 .trials = flags.trials,
                                 .max_order = flags.max_order,
                                 .max_dim = flags.max_dim,
                                 .eps = flags.eps});
  } catch (const InvalidParams& e) {
    err << "invalid parameters: " << e.what() << "\n";
    return kUsage;
  }
  emit(scan_report(report), flags.out, out);
  return report.violation_count() ? kCorollaryViolation : kOk;
}

int cmd_generate(const GenerateFlags& flags, std::ostream& out, std::ostream& err) {
  RepFile file{"", make_trivial_rep(cyclic_group(1)), {}};
  try {
    switch (flags.structure_case) {
      case 1:
        file.rep = make_real_sign_rep();
        file.name = "real_sign";
        file.expected.structure_case = StructureCase::Case1;
        break;
      case 2:
        file.rep = make_clock_shift(flags.n);
        file.name = "clock_shift_" + std::to_string(flags.n);
        file.expected.structure_case = StructureCase::Case2;
        break;
      case 3: {
        if (flags.sigma.size() != 3)
          throw InvalidParams("case 3 needs sigma for (1,0), (0,1), (1,1)");
        const std::array<Quaternion, 4> sigma = {1.0, flags.sigma[0], flags.sigma[1], flags.sigma[2]};
        file.rep = make_case3(sigma);
        file.name = "case3";
        file.expected.structure_case = StructureCase::Case3;
        break;
      }
      default:
        throw InvalidParams("case must be 1, 2 or 3");
    }
  } catch (const Error& e) {
    err << "invalid parameters: " << e.what() << "\n";
    return kUsage;
  }
  emit(serialize_rep_file(file), flags.out, out);
  return kOk;
}

std::optional<Quaternion> parse_quaternion(const std::string& text) {
  std::string s = text;
  double sign = 1.0;
  if (!s.empty() && (s[0] == '-' || s[0] == '+') && s.find(',') == std::string::npos &&
      s.size() == 2) {
    sign = s[0] == '-' ? -1.0 : 1.0;
    s = s.substr(1);
  }
  if (s == "1") return sign * Quaternion(1.0);
  if (s == "i") return sign * Quaternion::i();
  if (s == "j") return sign * Quaternion::j();
  if (s == "k") return sign * Quaternion::k();
  std::array<double, 4> c{};
  std::istringstream in(text);
  for (std::size_t idx = 0; idx < 4; ++idx) {
    if (!(in >> c[idx])) return std::nullopt;
    if (idx < 3) {
      char comma = 0;
      if (!(in >> comma) || comma != ',') return std::nullopt;
    }
  }
  if (in >> std::ws; !in.eof()) return std::nullopt;
  return Quaternion{c[0], c[1], c[2], c[3]};
}

}  // namespace qpr::cli
