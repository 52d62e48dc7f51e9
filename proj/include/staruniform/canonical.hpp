#ifndef STARUNIFORM_CANONICAL_HPP
#define STARUNIFORM_CANONICAL_HPP

#include <compare>
#include <cstdint>
#include <functional>

#include "staruniform/graph.hpp"

namespace staruniform {

inline constexpr int kMaxCanonicalOrder = 10;

/// Isomorphism-invariant code of a graph with at most kMaxCanonicalOrder
/// vertices.
///
/// `bits` packs the upper triangle in graph6 order (column by column), first
/// pair in the most significant used bit, so numeric order on `bits` is
/// lexicographic order on the bitstring. The code is the minimum over all
/// vertex orderings that list colour-refinement classes in a fixed,
/// label-independent order; equal codes hold exactly for isomorphic graphs.
struct CanonicalForm {
  int order = 0;
  std::uint64_t bits = 0;

  auto operator<=>(const CanonicalForm&) const = default;
};

CanonicalForm canonical_form(const Graph& g);

/// The graph spelled out by a canonical form (vertices in canonical order).
Graph canonical_graph(const CanonicalForm& form);
Graph canonical_graph(const Graph& g);

bool is_isomorphic(const Graph& a, const Graph& b);

}  // namespace staruniform

template <>
struct std::hash<staruniform::CanonicalForm> {
  std::size_t operator()(const staruniform::CanonicalForm& f) const noexcept {
    return std::hash<std::uint64_t>{}(f.bits * 31u + static_cast<std::uint64_t>(f.order));
  }
};

#endif  // STARUNIFORM_CANONICAL_HPP
