#include "qpr/group.hpp"

#include <string>

#include "qpr/errors.hpp"
#include "qpr/quaternion.hpp"

namespace qpr {

FiniteGroup::FiniteGroup(std::vector<std::string> labels,
                         std::vector<std::vector<Element>> cayley)
    : labels_(std::move(labels)), cayley_(std::move(cayley)) {
  const std::size_t n = cayley_.size();
  if (labels_.empty()) {
    for (std::size_t i = 0; i < n; ++i) labels_.push_back(std::to_string(i));
  }
  flat_.assign(n * n, 0);
  for (std::size_t b = 0; b < n; ++b)
    for (std::size_t a = 0; a < n && a < cayley_[b].size(); ++a) flat_[b * n + a] = cayley_[b][a];
  inverse_.assign(n, n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if (flat_[b * n + a] == 0 && flat_[a * n + b] == 0) {
        inverse_[a] = b;
        break;
      }
}

Element FiniteGroup::product(Element b, Element a) const {
  if (b >= order()) throw IndexOutOfRange(b, order());
  if (a >= order()) throw IndexOutOfRange(a, order());
  return mul(b, a);
}

Element FiniteGroup::inverse(Element a) const {
  if (a >= order()) throw IndexOutOfRange(a, order());
  if (inverse_[a] >= order()) throw Error("element " + std::to_string(a) + " has no inverse");
  return inverse_[a];
}

GroupValidation validate_group(const FiniteGroup& g) {
  using Kind = GroupViolation::Kind;
  const std::size_t n = g.order();
  const auto& t = g.cayley();
  auto fail = [](Kind k, std::array<Element, 3> e, std::string msg) {
    return GroupValidation{GroupViolation{k, e, std::move(msg)}};
  };
  if (n == 0) return fail(Kind::Shape, {}, "empty group");
  if (g.labels().size() != n) return fail(Kind::Shape, {}, "label count differs from order");
  for (Element b = 0; b < n; ++b) {
    if (t[b].size() != n)
      return fail(Kind::Shape, {b, 0, 0}, "cayley row " + std::to_string(b) + " has wrong length");
    for (Element a = 0; a < n; ++a)
      if (t[b][a] >= n)
        return fail(Kind::Closure, {b, a, 0},
                    "product " + std::to_string(b) + "*" + std::to_string(a) + " out of range");
  }
  for (Element a = 0; a < n; ++a)
    if (t[0][a] != a || t[a][0] != a)
      return fail(Kind::Identity, {a, 0, 0},
                  "element 0 is not an identity for element " + std::to_string(a));
  for (Element a = 0; a < n; ++a) {
    bool found = false;
    for (Element b = 0; b < n && !found; ++b) found = t[a][b] == 0 && t[b][a] == 0;
    if (!found)
      return fail(Kind::Inverse, {a, 0, 0}, "element " + std::to_string(a) + " has no inverse");
  }
  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b)
      for (Element c = 0; c < n; ++c)
        if (t[t[a][b]][c] != t[a][t[b][c]])
          return fail(Kind::Associativity, {a, b, c},
                      "associativity fails for (" + std::to_string(a) + ", " +
                          std::to_string(b) + ", " + std::to_string(c) + ")");
  return {};
}

FiniteGroup cyclic_group(std::size_t n) {
  if (n == 0) throw InvalidOrder("cyclic group of order 0");
  std::vector<std::vector<Element>> t(n, std::vector<Element>(n));
  for (std::size_t b = 0; b < n; ++b)
    for (std::size_t a = 0; a < n; ++a) t[b][a] = (a + b) % n;
  return FiniteGroup({}, std::move(t));
}

FiniteGroup cyclic_product_group(std::size_t m, std::size_t n) {
  if (m == 0 || n == 0) throw InvalidOrder("cyclic factor of order 0");
  const std::size_t order = m * n;
  std::vector<std::string> labels(order);
  std::vector<std::vector<Element>> t(order, std::vector<Element>(order));
  for (std::size_t y = 0; y < n; ++y)
    for (std::size_t x = 0; x < m; ++x)
      labels[cyclic_product_index(m, x, y)] = "(" + std::to_string(x) + "," + std::to_string(y) + ")";
  for (std::size_t b = 0; b < order; ++b)
    for (std::size_t a = 0; a < order; ++a) {
      const std::size_t x = (b % m + a % m) % m;
      const std::size_t y = (b / m + a / m) % n;
      t[b][a] = cyclic_product_index(m, x, y);
    }
  return FiniteGroup(std::move(labels), std::move(t));
}

FiniteGroup dihedral_group(std::size_t n) {
  if (n == 0) throw InvalidOrder("dihedral group with n = 0");
  // Elements s^e r^k encoded as e*n + k; r^k s = s r^{-k}.
  const std::size_t order = 2 * n;
  std::vector<std::string> labels(order);
  for (std::size_t k = 0; k < n; ++k) {
    labels[k] = "r" + std::to_string(k);
    labels[n + k] = "sr" + std::to_string(k);
  }
  std::vector<std::vector<Element>> t(order, std::vector<Element>(order));
  for (std::size_t b = 0; b < order; ++b)
    for (std::size_t a = 0; a < order; ++a) {
      const std::size_t eb = b / n, kb = b % n, ea = a / n, ka = a % n;
      // (s^eb r^kb)(s^ea r^ka) = s^(eb+ea) r^(±kb + ka)
      const std::size_t k = ea ? (n - kb + ka) % n : (kb + ka) % n;
      t[b][a] = ((eb + ea) % 2) * n + k;
    }
  return FiniteGroup(std::move(labels), std::move(t));
}

FiniteGroup quaternion_group() {
  const std::array<Quaternion, 8> elems = {Quaternion(1),  Quaternion(-1), Quaternion::i(),
                                           -Quaternion::i(), Quaternion::j(), -Quaternion::j(),
                                           Quaternion::k(),  -Quaternion::k()};
  std::vector<std::string> labels = {"1", "-1", "i", "-i", "j", "-j", "k", "-k"};
  std::vector<std::vector<Element>> t(8, std::vector<Element>(8));
  for (std::size_t b = 0; b < 8; ++b)
    for (std::size_t a = 0; a < 8; ++a) {
      const Quaternion p = elems[b] * elems[a];
      for (std::size_t c = 0; c < 8; ++c)
        if (p == elems[c]) t[b][a] = c;
    }
  return FiniteGroup(std::move(labels), std::move(t));
}

}  // namespace qpr
