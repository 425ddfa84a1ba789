#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>

#include "qpr/classify.hpp"
#include "qpr/scan.hpp"
#include "qpr/weakrep.hpp"

namespace qpr {

inline constexpr int kRepFileVersion = 1;

/// Optional expectations carried alongside a representation (corpus exports
/// fill these in).
struct ExpectedResults {
  std::optional<StructureCase> structure_case;
  std::optional<bool> strong_complex;
  std::optional<bool> strong_quaternionic;
  std::optional<bool> multicentral;
  std::optional<bool> central;

  bool empty() const {
    return !structure_case && !strong_complex && !strong_quaternionic && !multicentral && !central;
  }
};

/// Contents of a representation file.
///
///   {
///     "format": "qpr-rep", "version": 1, "name": "...",
///     "group": {"order": n, "labels": [...], "cayley": [[ba, ...], ...]},
///     "representation": {"dim": d, "matrices": [ [[[w,x,y,z], ...], ...], ... ]},
///     "expected": {"case": "Case2", "strong_complex": true, ...}
///   }
///
/// cayley[b][a] is the index of ba and element 0 is the identity. Matrices are
/// listed in element order, rows first. Doubles are written in the shortest
/// form that parses back to the same bits.
struct RepFile {
  std::string name;
  WeakProjectiveRep rep;
  ExpectedResults expected;
};

std::string serialize_rep_file(const RepFile& file);

/// Syntax and shape checks only; the group and representation are not
/// validated. Throws ParseError with "line:col" for malformed JSON and a JSON
/// pointer for structural problems.
RepFile parse_rep_file(std::string_view text);

/// Reads and parses a file; throws ParseError (location "path") if it cannot
/// be read.
RepFile read_rep_file(const std::filesystem::path& path);
void write_rep_file(const std::filesystem::path& path, const RepFile& file);

/// JSON text for a classification outcome (case, residuals, witness and the
/// case-3 decomposition when present).
std::string classification_report(const WeakProjectiveRep& rep,
                                  const ClassificationOutcome& outcome,
                                  const IdentityReport& identities);

/// JSON text for a scan; identical for identical options.
std::string scan_report(const ScanReport& report);

}  // namespace qpr
