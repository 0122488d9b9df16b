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
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "egc/partitions.hpp"

namespace egc {

/// Closed colour interval [first, last]; empty when first > last.
struct ColourInterval {
  std::uint32_t first = 1;
  std::uint32_t last = 0;

  std::size_t size() const { return last >= first ? last - first + 1 : 0; }
};

/**
 * Assignment of colour sets to subsets of a distinguished l-set X.
 *
 * Every partition T of X (other than the one-block partition, unless l = 1)
 * owns a contiguous colour interval whose length is proportional to g(T).
 * A subset X' then receives the union of the intervals of the partitions
 * having X' as a block. Because each x in X lies in exactly one block of
 * every partition, the subsets containing x together see every colour.
 */
struct ColorPlan {
  std::size_t l = 0;
  std::size_t k = 0;  // p = 1/k
  std::size_t num_colors = 0;
  std::vector<SetPartition> partitions;  // the partitions that take part, canonical order
  std::vector<Rational> weights;
  std::vector<ColourInterval> intervals;  // parallel to partitions
  std::map<SubsetMask, std::vector<std::uint32_t>> subset_colors;

  const std::vector<std::uint32_t>& colours_of(SubsetMask s) const {
    static const std::vector<std::uint32_t> kEmpty;
    auto it = subset_colors.find(s);
    return it == subset_colors.end() ? kEmpty : it->second;
  }
};

/**
 * Builds the plan with exact largest-remainder apportionment of num_colors
 * over the positive-weight partitions. Ties in the remainder go to the
 * earlier partition in canonical order.
 */
inline ColorPlan build_color_plan(std::size_t l, std::size_t k, std::size_t num_colors) {
  if (!weight_identity_check(k, l).all_hold()) throw std::invalid_argument("weight identity fails for this (k, l)");

  ColorPlan plan;
  plan.l = l;
  plan.k = k;
  plan.num_colors = num_colors;
  const SubsetMask whole = (SubsetMask{1} << l) - 1;
  for (auto& t : enumerate_partitions(l)) {
    // The one-block partition is dropped except for l = 1, where it is the only one.
    if (l > 1 && t.size() == 1) continue;
    plan.weights.push_back(partition_weight(t, k, l));
    plan.partitions.push_back(std::move(t));
  }

  Rational total;
  std::size_t positive = 0;
  for (const auto& w : plan.weights) {
    total += w;
    positive += w > 0;
  }
  if (positive == 0) throw std::invalid_argument("no partition carries positive weight");
  if (num_colors < positive) throw std::invalid_argument("too few colours for the positive-weight partitions");

  std::vector<BigInt> alloc(plan.weights.size(), 0);
  std::vector<Rational> remainder(plan.weights.size());
  BigInt assigned = 0;
  for (std::size_t i = 0; i < plan.weights.size(); ++i) {
    const Rational quota = plan.weights[i] * Rational(BigInt(num_colors)) / total;
    alloc[i] = floor_of(quota);
    remainder[i] = quota - Rational(alloc[i]);
    assigned += alloc[i];
  }
  std::vector<std::size_t> order(plan.weights.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return remainder[a] > remainder[b]; });
  for (std::size_t j = 0; assigned < BigInt(num_colors); ++j, ++assigned) alloc[order[j]] += 1;

  std::uint32_t next = 1;
  for (std::size_t i = 0; i < plan.weights.size(); ++i) {
    const auto len = static_cast<std::uint32_t>(alloc[i]);
    if (plan.weights[i] > 0 && len == 0)
      throw std::invalid_argument("too few colours: a positive-weight partition would get none");
    plan.intervals.push_back({next, next + len - 1});
    next += len;
  }

  for (SubsetMask s = 0; s <= whole; ++s) plan.subset_colors[s];
  for (std::size_t i = 0; i < plan.partitions.size(); ++i)
    for (auto b : plan.partitions[i].blocks) {
      auto& cs = plan.subset_colors[b];
      for (auto c = plan.intervals[i].first; c <= plan.intervals[i].last && plan.intervals[i].size(); ++c)
        cs.push_back(c);
    }
  for (auto& [s, cs] : plan.subset_colors) std::sort(cs.begin(), cs.end());
  return plan;
}

/// For each x in X, whether the subsets containing x jointly see 1..num_colors.
inline std::vector<bool> plan_coverage(const ColorPlan& plan) {
  std::vector<bool> out;
  for (std::size_t x = 0; x < plan.l; ++x) {
    std::vector<bool> seen(plan.num_colors + 1, false);
    for (const auto& [s, cs] : plan.subset_colors)
      if (s & (SubsetMask{1} << x))
        for (auto c : cs) seen[c] = true;
    out.push_back(std::all_of(seen.begin() + 1, seen.end(), [](bool b) { return b; }));
  }
  return out;
}

struct SizeViolation {
  SubsetMask subset = 0;
  std::size_t colours = 0;
  std::size_t class_size = 0;
};

struct SizeBoundsReport {
  std::vector<SizeViolation> violations;
  bool holds() const { return violations.empty(); }
};

/// Checks |f(I)| <= (1 - eta) |X_I| / 2 exactly for every subset I.
inline SizeBoundsReport plan_size_bounds(const ColorPlan& plan, const std::map<SubsetMask, std::size_t>& class_sizes,
                                         const Rational& eta) {
  SizeBoundsReport rep;
  for (const auto& [s, cs] : plan.subset_colors) {
    auto it = class_sizes.find(s);
    const std::size_t size = it == class_sizes.end() ? 0 : it->second;
    const Rational bound = (Rational(1) - eta) * Rational(BigInt(size)) / 2;
    if (Rational(BigInt(cs.size())) > bound) rep.violations.push_back({s, cs.size(), size});
  }
  return rep;
}

/// {"l":..,"k":..,"numColors":..,"subsets":{"<mask>":[colours..]}}
inline nlohmann::json plan_to_json(const ColorPlan& plan) {
  nlohmann::json j;
  j["l"] = plan.l;
  j["k"] = plan.k;
  j["numColors"] = plan.num_colors;
  nlohmann::json subsets = nlohmann::json::object();
  for (const auto& [s, cs] : plan.subset_colors) subsets[std::to_string(s)] = cs;
  j["subsets"] = std::move(subsets);
  return j;
}

}  // namespace egc
