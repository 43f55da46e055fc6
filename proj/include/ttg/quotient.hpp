#pragma once

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "ttg/errors.hpp"
#include "ttg/map.hpp"
#include "ttg/space.hpp"

namespace ttg {

// A partition of the points of a space into disjoint nonempty blocks.
struct PointPartition {
  std::vector<PointSet> blocks;

  static PointPartition over(const FiniteSpectralSpace& space,
                             std::vector<PointSet> blocks) {
    PointPartition part{std::move(blocks)};
    std::vector<char> seen(space.size(), 0);
    std::size_t covered = 0;
    for (auto& block : part.blocks) {
      if (block.empty()) throw InputError("partition block is empty");
      std::sort(block.begin(), block.end());
      for (auto x : block) {
        if (x >= space.size()) throw InputError("partition point out of range");
        if (seen[x])
          throw InputError("partition blocks overlap at '" + space.id(x) + "'");
        seen[x] = 1;
        ++covered;
      }
    }
    if (covered != space.size())
      throw InputError("partition does not cover every point");
    std::sort(part.blocks.begin(), part.blocks.end());
    return part;
  }

  // Partition given by the listed non-singleton blocks (by label); every
  // unmentioned point becomes a singleton.
  static PointPartition glue(const FiniteSpectralSpace& space,
                             const std::vector<std::vector<std::string>>& glued) {
    std::vector<char> used(space.size(), 0);
    std::vector<PointSet> blocks;
    for (const auto& labels : glued) {
      PointSet block;
      for (const auto& l : labels) block.push_back(space.index(l));
      std::sort(block.begin(), block.end());
      block.erase(std::unique(block.begin(), block.end()), block.end());
      for (auto x : block) used[x] = 1;
      blocks.push_back(std::move(block));
    }
    for (std::size_t x = 0; x < space.size(); ++x)
      if (!used[x]) blocks.push_back({x});
    return over(space, std::move(blocks));
  }
};

// Quotient of a finite spectral space by a partition: block order is the
// reflexive-transitive closure of the pushforward of the point order. If the
// closure identifies two distinct blocks the quotient is not T0, hence not a
// spectral space, and NonT0Error is thrown. The projection is a topological
// quotient by construction.
inline std::pair<FiniteSpectralSpace, SpectralMapData> quotient_space(
    const FiniteSpectralSpace& space, const PointPartition& part) {
  const auto& blocks = part.blocks;
  std::vector<PointIndex> block_of(space.size());
  for (std::size_t b = 0; b < blocks.size(); ++b)
    for (auto x : blocks[b]) block_of[x] = b;

  std::vector<std::string> labels;
  labels.reserve(blocks.size());
  for (const auto& block : blocks) {
    std::vector<std::string> ids;
    for (auto x : block) ids.push_back(space.id(x));
    std::sort(ids.begin(), ids.end());
    std::string label = ids.front();
    for (std::size_t i = 1; i < ids.size(); ++i) label += "+" + ids[i];
    labels.push_back(std::move(label));
  }

  std::vector<std::vector<char>> rel(blocks.size(), std::vector<char>(blocks.size(), 0));
  for (std::size_t x = 0; x < space.size(); ++x)
    for (std::size_t y = 0; y < space.size(); ++y)
      if (space.leq(x, y)) rel[block_of[x]][block_of[y]] = 1;

  // The space constructor closes the relation and raises NonT0Error when
  // antisymmetry fails, naming the offending blocks.
  FiniteSpectralSpace quotient = FiniteSpectralSpace::from_relation(labels, std::move(rel));
  SpectralMapData projection(space, quotient, block_of);
  return {std::move(quotient), std::move(projection)};
}

}  // namespace ttg
