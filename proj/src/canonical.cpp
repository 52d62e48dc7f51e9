#include "staruniform/canonical.hpp"

#include <algorithm>
#include <array>
#include <string>
#include <vector>

namespace staruniform {
namespace {

/// Colour refinement seeded with degrees. Colours are dense ranks of sorted
/// signatures, so they never depend on the input labelling.
std::vector<int> refined_colours(const Graph& g) {
  const int n = g.order();
  std::vector<int> colour(static_cast<std::size_t>(n));
  for (Vertex v = 0; v < n; ++v) colour[v] = g.degree(v);

  int classes = -1;
  while (true) {
    std::vector<std::vector<int>> signature(static_cast<std::size_t>(n));
    for (Vertex v = 0; v < n; ++v) {
      auto& sig = signature[v];
      sig.push_back(colour[v]);
      for (Vertex w : g.neighbors(v)) sig.push_back(colour[w]);
      std::sort(sig.begin() + 1, sig.end());
    }
    std::vector<std::vector<int>> distinct = signature;
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
    for (Vertex v = 0; v < n; ++v)
      colour[v] = static_cast<int>(std::lower_bound(distinct.begin(), distinct.end(), signature[v]) - distinct.begin());
    const int now = static_cast<int>(distinct.size());
    if (now == classes) break;
    classes = now;
  }
  return colour;
}

class CanonicalSearch {
 public:
  explicit CanonicalSearch(const Graph& g) : g_(g), n_(g.order()), colour_(refined_colours(g)) {
    std::vector<int> sorted = colour_;
    std::sort(sorted.begin(), sorted.end());
    slot_colour_ = sorted;
  }

  std::vector<Vertex> run() {
    search(0, false);
    return best_perm_;
  }

 private:
  // Returns true when the best code was replaced somewhere below this node.
  bool search(int pos, bool tied) {
    if (pos == n_) {
      best_perm_.assign(perm_.begin(), perm_.begin() + n_);
      std::copy(column_.begin(), column_.begin() + n_, best_column_.begin());
      have_best_ = true;
      return true;
    }
    bool updated = false;
    for (Vertex v = 0; v < n_; ++v) {
      if (used_[v] || colour_[v] != slot_colour_[pos]) continue;
      std::uint32_t col = 0;
      for (int i = 0; i < pos; ++i) col = (col << 1) | (g_.adjacent(perm_[i], v) ? 1u : 0u);

      bool child_tied = false;
      if (have_best_ && (tied || pos == 0 || updated)) {
        // Prefix up to pos-1 equals the best prefix here.
        if (col > best_column_[pos]) continue;
        child_tied = col == best_column_[pos];
      }
      perm_[pos] = v;
      column_[pos] = col;
      used_[v] = true;
      if (search(pos + 1, child_tied)) {
        updated = true;
        tied = true;
      }
      used_[v] = false;
    }
    return updated;
  }

  const Graph& g_;
  int n_;
  std::vector<int> colour_;
  std::vector<int> slot_colour_;
  std::array<Vertex, kMaxCanonicalOrder> perm_{};
  std::array<std::uint32_t, kMaxCanonicalOrder> column_{};
  std::array<std::uint32_t, kMaxCanonicalOrder> best_column_{};
  std::array<bool, kMaxCanonicalOrder> used_{};
  std::vector<Vertex> best_perm_;
  bool have_best_ = false;
};

std::vector<Vertex> canonical_order(const Graph& g) {
  if (g.order() > kMaxCanonicalOrder)
    throw GraphError("canonical form supports at most " + std::to_string(kMaxCanonicalOrder) +
                     " vertices, got " + std::to_string(g.order()));
  if (g.order() == 0) return {};
  return CanonicalSearch(g).run();
}

CanonicalForm pack(const Graph& g, const std::vector<Vertex>& order) {
  CanonicalForm form{g.order(), 0};
  for (int j = 1; j < g.order(); ++j)
    for (int i = 0; i < j; ++i) form.bits = (form.bits << 1) | (g.adjacent(order[i], order[j]) ? 1u : 0u);
  return form;
}

}  // namespace

CanonicalForm canonical_form(const Graph& g) { return pack(g, canonical_order(g)); }

Graph canonical_graph(const CanonicalForm& form) {
  Graph g(form.order);
  const int pairs = form.order * (form.order - 1) / 2;
  int k = pairs - 1;
  for (Vertex j = 1; j < form.order; ++j)
    for (Vertex i = 0; i < j; ++i, --k)
      if ((form.bits >> k) & 1u) g.add_edge(i, j);
  return g;
}

Graph canonical_graph(const Graph& g) { return canonical_graph(canonical_form(g)); }

bool is_isomorphic(const Graph& a, const Graph& b) {
  if (a.order() != b.order() || a.size() != b.size()) return false;
  return canonical_form(a) == canonical_form(b);
}

}  // namespace staruniform
