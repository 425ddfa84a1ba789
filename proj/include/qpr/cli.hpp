#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "qpr/quaternion.hpp"

namespace qpr::cli {

/// Process exit codes.
enum ExitCode : int {
  kOk = 0,
  kUsage = 1,
  kValidationFailure = 2,
  kUnclassified = 3,
  kCorollaryViolation = 4,
};

/// Group, unitarity, identity normalization and phase extraction; prints one
/// line per check with its residual.
int cmd_validate(const std::filesystem::path& path, double eps, std::ostream& out,
                 std::ostream& err);

struct ClassifyFlags {
  double eps = kDefaultEps;
  std::uint64_t seed = 0;
  std::size_t trials = 32;
  /// Report destination; stdout when empty.
  std::optional<std::filesystem::path> out;
};

int cmd_classify(const std::filesystem::path& path, const ClassifyFlags& flags, std::ostream& out,
                 std::ostream& err);

struct ScanFlags {
  std::uint64_t seed = 0;
  std::size_t trials = 1000;
  std::size_t max_order = 16;
  std::size_t max_dim = 4;
  double eps = kDefaultEps;
  std::optional<std::filesystem::path> out;
};

int cmd_corollary_scan(const ScanFlags& flags, std::ostream& out, std::ostream& err);

struct GenerateFlags {
  int structure_case = 1;
  /// Clock-shift size for case 2.
  std::size_t n = 3;
  /// sigma for the elements (1,0), (0,1), (1,1) of Z2xZ2 in case 3.
  std::vector<Quaternion> sigma = {Quaternion::j(), Quaternion::k(), 1.0};
  std::optional<std::filesystem::path> out;
};

int cmd_generate(const GenerateFlags& flags, std::ostream& out, std::ostream& err);

/// Parses "j", "-k", "1", "i" or "w,x,y,z".
std::optional<Quaternion> parse_quaternion(const std::string& text);

}  // namespace qpr::cli
