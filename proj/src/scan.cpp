#include "qpr/scan.hpp"

#include <functional>
#include <memory>

#include "qpr/classify.hpp"
#include "qpr/corpus.hpp"
#include "qpr/errors.hpp"
#include "qpr/refine.hpp"

namespace qpr {

void ScanCounts::add(bool multicentral, bool central) {
  if (multicentral && central) ++multicentral_central;
  else if (multicentral) ++multicentral_not_central;
  else if (central) ++not_multicentral_central;
  else ++not_multicentral_not_central;
}

namespace {

std::vector<FiniteGroup> group_catalog(std::size_t max_order) {
  std::vector<FiniteGroup> out;
  for (std::size_t n = 1; n <= max_order; ++n) out.push_back(cyclic_group(n));
  for (std::size_t m = 2; m * m <= max_order; ++m)
    for (std::size_t n = m; m * n <= max_order; ++n) out.push_back(cyclic_product_group(m, n));
  for (std::size_t n = 3; 2 * n <= max_order; ++n) out.push_back(dihedral_group(n));
  if (max_order >= 8) out.push_back(quaternion_group());
  return out;
}

std::size_t uniform_index(std::mt19937_64& rng, std::size_t n) {
  return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng);
}

// Unit quaternions for every element but the identity; with probability 1/2
// they all lie in one random complex plane and therefore commute.
std::vector<Quaternion> random_phases(std::mt19937_64& rng, std::size_t count) {
  std::vector<Quaternion> out(count, 1.0);
  const bool shared_axis = std::bernoulli_distribution(0.5)(rng);
  const Eigen::Vector3d axis = random_unit_quaternion(rng).imag().normalized();
  std::uniform_real_distribution<double> angle(0.0, 2.0 * 3.141592653589793);
  for (std::size_t a = 1; a < count; ++a)
    out[a] = shared_axis ? Quaternion::from_axis_angle(axis, angle(rng)) : random_unit_quaternion(rng);
  return out;
}

struct Generator {
  std::string name;
  std::function<WeakProjectiveRep(std::mt19937_64&)> build;
};

std::vector<Generator> generators(std::size_t max_order, std::size_t max_dim) {
  std::vector<Generator> out;
  auto groups = std::make_shared<std::vector<FiniteGroup>>(group_catalog(max_order));
  if (groups->empty() || max_dim == 0) return out;

  out.push_back({"trivial", [groups, max_dim](std::mt19937_64& rng) {
                   const auto& g = (*groups)[uniform_index(rng, groups->size())];
                   return make_trivial_rep(g, 1 + uniform_index(rng, max_dim));
                 }});
  out.push_back({"one_dim", [groups](std::mt19937_64& rng) {
                   const auto& g = (*groups)[uniform_index(rng, groups->size())];
                   return make_one_dim(g, random_phases(rng, g.order()));
                 }});
  if (max_dim >= 2) {
    out.push_back({"one_dim_sum", [groups](std::mt19937_64& rng) {
                     const auto& g = (*groups)[uniform_index(rng, groups->size())];
                     const auto lhs = make_one_dim(g, random_phases(rng, g.order()));
                     return make_direct_sum(lhs, make_one_dim(g, random_phases(rng, g.order())));
                   }});
  }
  if (max_order >= 4 && max_dim >= 2) {
    out.push_back({"real_sign", [](std::mt19937_64&) { return make_real_sign_rep(); }});
    out.push_back({"case3", [](std::mt19937_64& rng) { return make_case3(random_phases(rng, 4)); }});
  }
  std::vector<std::size_t> clock_orders;
  for (std::size_t n = 3; n * n <= max_order && n <= max_dim; ++n) clock_orders.push_back(n);
  if (!clock_orders.empty()) {
    out.push_back({"clock_shift", [clock_orders](std::mt19937_64& rng) {
                     return make_clock_shift(clock_orders[uniform_index(rng, clock_orders.size())]);
                   }});
  }
  return out;
}

}  // namespace

GeneratedRep generate_scan_rep(std::mt19937_64& rng, std::size_t max_order, std::size_t max_dim) {
  const auto gens = generators(max_order, max_dim);
  if (gens.empty()) throw InvalidParams("no generator fits max_order/max_dim");
  const Generator& gen = gens[uniform_index(rng, gens.size())];
  WeakProjectiveRep rep = gen.build(rng);
  return {gen.name, apply_reraying(rep, random_reraying(rep.dim(), rng))};
}

ScanReport run_corollary_scan(const ScanOptions& options) {
  ScanReport report;
  report.options = options;
  if (options.trials == 0) return report;
  if (generators(options.max_order, options.max_dim).empty())
    throw InvalidParams("no generator fits max_order/max_dim");

  std::vector<ScanTrial> trials(options.trials);
  const auto count = static_cast<std::ptrdiff_t>(options.trials);
#pragma omp parallel for schedule(dynamic)
  for (std::ptrdiff_t t = 0; t < count; ++t) {
    std::seed_seq seq{static_cast<std::uint32_t>(options.seed),
                      static_cast<std::uint32_t>(options.seed >> 32),
                      static_cast<std::uint32_t>(t), static_cast<std::uint32_t>(t >> 32)};
    std::mt19937_64 rng(seq);
    GeneratedRep g = generate_scan_rep(rng, options.max_order, options.max_dim);
    const CorollaryReport c = check_corollary(g.rep, options.eps);
    auto& out = trials[static_cast<std::size_t>(t)];
    out = {static_cast<std::size_t>(t), g.generator, g.rep.order(), g.rep.dim(), c.multicentral,
           c.central};
  }
  for (const auto& t : trials) {
    report.counts.add(t.multicentral, t.central);
    report.by_generator[t.generator].add(t.multicentral, t.central);
    if (t.multicentral && !t.central) report.violations.push_back(t);
  }
  return report;
}

}  // namespace qpr
