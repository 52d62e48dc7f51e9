#ifndef STARUNIFORM_ENUMERATE_HPP
#define STARUNIFORM_ENUMERATE_HPP

#include <cstdint>
#include <functional>
#include <random>
#include <span>
#include <vector>

#include "staruniform/graph.hpp"

namespace staruniform {

inline constexpr int kMaxExhaustiveOrder = 7;

using GraphFilter = std::function<bool(const Graph&)>;
using GraphVisitor = std::function<void(const Graph&)>;

/// Visits every labelled graph on n vertices accepted by `filter` (an empty
/// filter accepts all). Graphs are produced in order of their adjacency
/// mask, bit k of the mask being the k-th vertex pair in graph6 order.
void enumerate_graphs(int n, const GraphFilter& filter, const GraphVisitor& visit);

/// One representative per isomorphism class, in canonical labelling and
/// sorted by canonical form.
///
/// Classes of order n are grown from the classes of order n-1 by adding a
/// vertex with every possible neighbourhood, then deduplicated; since every
/// graph minus its last vertex is a smaller graph, nothing is missed. The
/// unfiltered lists are cached per order.
std::vector<Graph> isomorphism_classes(int n, const GraphFilter& filter = {});

/// Keeps the first graph of each isomorphism class, preserving input order.
std::vector<Graph> dedupe_isomorphic(std::span<const Graph> graphs);

/// Reproducible G(n, p) stream. Edge coins are drawn pair by pair in graph6
/// order from a 64-bit Mersenne twister, compared as 53-bit fractions so the
/// stream does not depend on the standard library's distributions.
class GraphSampler {
 public:
  GraphSampler(int n, std::uint64_t seed, double edge_prob);
  Graph next();

 private:
  int n_;
  double p_;
  std::mt19937_64 rng_;
};

std::vector<Graph> sample_graphs(int n, std::size_t count, std::uint64_t seed, double edge_prob);

}  // namespace staruniform

#endif  // STARUNIFORM_ENUMERATE_HPP
