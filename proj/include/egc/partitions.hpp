/*
 * Copyright 2026 The eternal-colouring Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "egc/rational.hpp"

namespace egc {

/// Subsets of the ground set {0..l-1} as bitmasks (l <= 10 keeps this small).
using SubsetMask = std::uint32_t;

/**
 * A set partition in canonical form: blocks ordered by their minimum element.
 * Partitions themselves are ordered by their restricted growth string
 * (element i -> index of its block), which is the order produced by
 * enumerate_partitions.
 */
struct SetPartition {
  std::vector<SubsetMask> blocks;

  std::size_t size() const { return blocks.size(); }
  bool has_block(SubsetMask b) const { return std::find(blocks.begin(), blocks.end(), b) != blocks.end(); }
  friend bool operator==(const SetPartition&, const SetPartition&) = default;
};

inline constexpr std::size_t kMaxGroundSet = 10;

/// All partitions of an l-set, each once, in restricted-growth-string order.
inline std::vector<SetPartition> enumerate_partitions(std::size_t l) {
  if (l < 1 || l > kMaxGroundSet) throw std::invalid_argument("ground set size must be in 1..10");
  std::vector<SetPartition> out;
  std::vector<std::size_t> rgs(l, 0);
  // rgs[i] <= 1 + max(rgs[0..i-1]); walk them in lexicographic order.
  while (true) {
    SetPartition p;
    for (std::size_t i = 0; i < l; ++i) {
      if (rgs[i] == p.blocks.size()) p.blocks.push_back(0);
      p.blocks[rgs[i]] |= SubsetMask{1} << i;
    }
    out.push_back(std::move(p));

    std::size_t i = l;
    while (i-- > 1) {
      std::size_t prefix_max = 0;
      for (std::size_t j = 0; j < i; ++j) prefix_max = std::max(prefix_max, rgs[j]);
      if (rgs[i] <= prefix_max) {
        ++rgs[i];
        std::fill(rgs.begin() + static_cast<std::ptrdiff_t>(i) + 1, rgs.end(), 0);
        break;
      }
    }
    if (i == 0) break;
  }
  return out;
}

enum class WeightForm {
  Counting,  // k^{-l} (k-1)!/(k-|T|)! for |T| <= k, else 0
  Display,   // k^{-l} (k-1)!/(|T|-1)! as printed; kept to exhibit its failure
};

inline BigInt factorial(std::size_t n) {
  BigInt f = 1;
  for (std::size_t i = 2; i <= n; ++i) f *= i;
  return f;
}

/**
 * Weight g(T) of a partition T of an l-set, for p = 1/k.
 *
 * The counting form is the one for which summing g over the partitions that
 * contain a given block A yields p^|A| (1-p)^(l-|A|): each ordered
 * distribution of the other l-|A| elements into k-1 labelled, possibly empty
 * boxes contributes k^{-l}, and a partition with m blocks outside A arises
 * from (k-1)!/(k-1-m)! such distributions.
 */
inline Rational partition_weight(const SetPartition& t, std::size_t k, std::size_t l,
                                 WeightForm form = WeightForm::Counting) {
  if (k < 1) throw std::invalid_argument("k must be positive");
  const std::size_t parts = t.size();
  BigInt kl = 1;
  for (std::size_t i = 0; i < l; ++i) kl *= k;
  if (form == WeightForm::Counting) {
    if (parts > k) return Rational(0);
    return Rational(factorial(k - 1), factorial(k - parts) * kl);
  }
  if (parts > l) return Rational(0);
  return Rational(factorial(k - 1), factorial(parts - 1) * kl);
}

struct IdentityRow {
  SubsetMask subset = 0;
  Rational lhs;  // sum of g(T) over partitions T having `subset` as a block
  Rational rhs;  // p^|A| (1-p)^(l-|A|)
  bool holds = false;
};

struct IdentityReport {
  std::size_t k = 0;
  std::size_t l = 0;
  std::vector<IdentityRow> rows;

  bool all_hold() const {
    return std::all_of(rows.begin(), rows.end(), [](const IdentityRow& r) { return r.holds; });
  }
};

/// Exact check of sum_{T : A in T} g(T) = p^|A| (1-p)^(l-|A|) for every nonempty A.
inline IdentityReport weight_identity_check(std::size_t k, std::size_t l, WeightForm form = WeightForm::Counting) {
  if (k < 1) throw std::invalid_argument("k must be positive");
  const auto parts = enumerate_partitions(l);
  std::vector<Rational> weights;
  weights.reserve(parts.size());
  for (const auto& t : parts) weights.push_back(partition_weight(t, k, l, form));

  const Rational p(BigInt(1), BigInt(k));
  const Rational q = Rational(1) - p;
  IdentityReport rep{k, l, {}};
  for (SubsetMask a = 1; a < (SubsetMask{1} << l); ++a) {
    IdentityRow row;
    row.subset = a;
    for (std::size_t i = 0; i < parts.size(); ++i)
      if (parts[i].has_block(a)) row.lhs += weights[i];
    const auto inside = static_cast<std::size_t>(std::popcount(a));
    row.rhs = 1;
    for (std::size_t i = 0; i < inside; ++i) row.rhs *= p;
    for (std::size_t i = inside; i < l; ++i) row.rhs *= q;
    row.holds = row.lhs == row.rhs;
    rep.rows.push_back(std::move(row));
  }
  return rep;
}

}  // namespace egc
