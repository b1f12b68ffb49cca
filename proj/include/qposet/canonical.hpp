#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "qposet/poset.hpp"

namespace qposet {

/// Total-order-comparable encoding of an isomorphism class of posets.
///
/// Byte 0 is d; the remaining bytes pack the strict order matrix of the
/// canonically relabelled poset in row-major order.
struct CanonicalKey {
  std::vector<std::uint8_t> bytes;

  auto operator<=>(const CanonicalKey&) const = default;

  std::string hex() const;
};

/// A canonical relabelling: `order[k]` is the original element placed at
/// position k+1.
struct CanonicalForm {
  CanonicalKey key;
  std::vector<int> order;
};

CanonicalForm canonicalForm(const Poset& p);

CanonicalKey canonicalKey(const Poset& p);

/// The canonical representative of the isomorphism class of `p`.
Poset canonicalPoset(const Poset& p);

}  // namespace qposet
