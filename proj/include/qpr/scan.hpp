#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "qpr/weakrep.hpp"

namespace qpr {

struct ScanOptions {
  std::uint64_t seed = 0;
  std::size_t trials = 1000;
  std::size_t max_order = 16;
  std::size_t max_dim = 4;
  double eps = kDefaultEps;
};

/// Tallies of (multicentral, central) over one scan.
struct ScanCounts {
  std::size_t multicentral_central = 0;
  std::size_t multicentral_not_central = 0;
  std::size_t not_multicentral_central = 0;
  std::size_t not_multicentral_not_central = 0;

  std::size_t total() const {
    return multicentral_central + multicentral_not_central + not_multicentral_central +
           not_multicentral_not_central;
  }
  void add(bool multicentral, bool central);
};

struct ScanTrial {
  std::size_t index = 0;
  std::string generator;
  std::size_t order = 0;
  std::size_t dim = 0;
  bool multicentral = false;
  bool central = false;
};

struct ScanReport {
  ScanOptions options;
  ScanCounts counts;
  std::map<std::string, ScanCounts> by_generator;
  /// Trials with multicentral && !central, in trial order.
  std::vector<ScanTrial> violations;

  std::size_t violation_count() const { return violations.size(); }
};

/// One randomly generated representation (already rerayed at random) and the
/// name of the generator that produced it.
struct GeneratedRep {
  std::string generator;
  WeakProjectiveRep rep;
};

/// Draws a generator that fits within max_order / max_dim, builds its rep and
/// applies a uniform random reraying. Throws InvalidParams when no generator
/// fits.
GeneratedRep generate_scan_rep(std::mt19937_64& rng, std::size_t max_order, std::size_t max_dim);

/// Seeded random scan for multicentral representations that fail to be
/// central. Trial t draws from its own generator seeded by (seed, t), so the
/// report does not depend on thread count or scheduling.
ScanReport run_corollary_scan(const ScanOptions& options);

}  // namespace qpr
