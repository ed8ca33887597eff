#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace mddkit {

enum class EditKind { match, substitute, deletion, insertion };

struct AlignmentStep {
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  EditKind kind;
  std::size_t ref_index;  // npos for insertions
  std::size_t hyp_index;  // npos for deletions

  friend bool operator==(const AlignmentStep&, const AlignmentStep&) = default;
};

struct AlignmentPath {
  std::vector<AlignmentStep> steps;
  std::size_t cost = 0;
};

/// Unit-cost Levenshtein distance in O(min) memory.
template <class T>
std::size_t edit_distance(std::span<const T> ref, std::span<const T> hyp) {
  std::vector<std::size_t> row(hyp.size() + 1);
  for (std::size_t j = 0; j <= hyp.size(); ++j) row[j] = j;
  for (std::size_t i = 1; i <= ref.size(); ++i) {
    std::size_t diag = row[0];
    row[0] = i;
    for (std::size_t j = 1; j <= hyp.size(); ++j) {
      const std::size_t up = row[j];
      row[j] = std::min({up + 1, row[j - 1] + 1, diag + (ref[i - 1] == hyp[j - 1] ? 0 : 1)});
      diag = up;
    }
  }
  return row[hyp.size()];
}

/// Minimal unit-cost alignment of hyp against ref.
///
/// Ties are broken during the backtrace from the bottom-right cell with the
/// fixed preference match > substitute > delete > insert, so the path is a
/// pure function of the two sequences.
template <class T>
AlignmentPath align(std::span<const T> ref, std::span<const T> hyp) {
  const std::size_t n = ref.size();
  const std::size_t m = hyp.size();
  const std::size_t width = m + 1;
  std::vector<std::uint32_t> cost((n + 1) * width);
  auto at = [&](std::size_t i, std::size_t j) -> std::uint32_t& { return cost[i * width + j]; };
  for (std::size_t i = 0; i <= n; ++i) at(i, 0) = static_cast<std::uint32_t>(i);
  for (std::size_t j = 0; j <= m; ++j) at(0, j) = static_cast<std::uint32_t>(j);
  for (std::size_t i = 1; i <= n; ++i) {
    for (std::size_t j = 1; j <= m; ++j) {
      const std::uint32_t diag = at(i - 1, j - 1) + (ref[i - 1] == hyp[j - 1] ? 0u : 1u);
      at(i, j) = std::min({diag, at(i - 1, j) + 1u, at(i, j - 1) + 1u});
    }
  }

  AlignmentPath path;
  path.cost = at(n, m);
  std::size_t i = n;
  std::size_t j = m;
  while (i > 0 || j > 0) {
    const std::uint32_t here = at(i, j);
    if (i > 0 && j > 0 && ref[i - 1] == hyp[j - 1] && at(i - 1, j - 1) == here) {
      path.steps.push_back({EditKind::match, i - 1, j - 1});
      --i;
      --j;
    } else if (i > 0 && j > 0 && ref[i - 1] != hyp[j - 1] && at(i - 1, j - 1) + 1 == here) {
      path.steps.push_back({EditKind::substitute, i - 1, j - 1});
      --i;
      --j;
    } else if (i > 0 && at(i - 1, j) + 1 == here) {
      path.steps.push_back({EditKind::deletion, i - 1, AlignmentStep::npos});
      --i;
    } else {
      path.steps.push_back({EditKind::insertion, AlignmentStep::npos, j - 1});
      --j;
    }
  }
  std::reverse(path.steps.begin(), path.steps.end());
  return path;
}

template <class T>
AlignmentPath align(const std::vector<T>& ref, const std::vector<T>& hyp) {
  return align(std::span<const T>(ref), std::span<const T>(hyp));
}

template <class T>
std::size_t edit_distance(const std::vector<T>& ref, const std::vector<T>& hyp) {
  return edit_distance(std::span<const T>(ref), std::span<const T>(hyp));
}

}  // namespace mddkit
