#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace qpr {

using Element = std::size_t;

/// First failing condition found by validate_group.
struct GroupViolation {
  enum class Kind { Shape, Closure, Identity, Inverse, Associativity };
  Kind kind;
  /// Offending elements; for associativity the triple (a, b, c) with
  /// (ab)c != a(bc). Unused slots are zero.
  std::array<Element, 3> elements{};
  std::string message;
};

struct GroupValidation {
  std::optional<GroupViolation> violation;
  bool ok() const { return !violation.has_value(); }
  explicit operator bool() const { return ok(); }
};

/// A finite group given extensionally by its Cayley table.
///
/// cayley[b][a] is the index of the product ba. The identity is element 0.
/// Construction does not validate; call validate_group before trusting the
/// inverse table.
class FiniteGroup {
 public:
  FiniteGroup() = default;
  FiniteGroup(std::vector<std::string> labels, std::vector<std::vector<Element>> cayley);

  std::size_t order() const { return cayley_.size(); }
  Element identity() const { return 0; }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(Element a) const { return labels_.at(a); }
  const std::vector<std::vector<Element>>& cayley() const { return cayley_; }

  /// ba; throws IndexOutOfRange.
  Element product(Element b, Element a) const;
  /// Two-sided inverse; throws IndexOutOfRange.
  Element inverse(Element a) const;

  /// Unchecked lookup for hot loops.
  Element mul(Element b, Element a) const { return flat_[b * cayley_.size() + a]; }

 private:
  std::vector<std::string> labels_;
  std::vector<std::vector<Element>> cayley_;
  std::vector<Element> flat_;
  std::vector<Element> inverse_;
};

/// Brute-force closure, identity (at index 0), inverse and associativity
/// checks. Returns the first violation found in index order.
GroupValidation validate_group(const FiniteGroup& g);

inline Element product(const FiniteGroup& g, Element b, Element a) { return g.product(b, a); }
inline Element inverse(const FiniteGroup& g, Element a) { return g.inverse(a); }

// Catalog of small groups used by the corpus and the scans.

FiniteGroup cyclic_group(std::size_t n);
/// Z_m x Z_n with element (x, y) at index x + m*y, labelled "(x,y)".
FiniteGroup cyclic_product_group(std::size_t m, std::size_t n);
/// Index of (x, y) in cyclic_product_group(m, n).
inline Element cyclic_product_index(std::size_t m, std::size_t x, std::size_t y) {
  return x + m * y;
}
/// Dihedral group of order 2n: r^k at index k, s r^k at index n + k.
FiniteGroup dihedral_group(std::size_t n);
/// Q8 in the order 1, -1, i, -i, j, -j, k, -k.
FiniteGroup quaternion_group();

}  // namespace qpr
