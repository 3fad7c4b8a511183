#include "locdim/product.hpp"

#include "locdim/metrics.hpp"

namespace locdim {

Family make_family(Graph base, std::vector<Graph> members) {
  if (static_cast<int>(members.size()) != base.order())
    throw std::invalid_argument("family has " + std::to_string(members.size()) +
                                " members for a base of order " + std::to_string(base.order()));
  for (const Graph& m : members)
    if (m.order() == 0) throw std::invalid_argument("family members must have order >= 1");
  return {std::move(base), std::move(members)};
}

int ProductGraph::vertex_id(int block, int within) const {
  if (block < 0 || block + 1 >= static_cast<int>(offsets.size()))
    throw std::out_of_range("block " + std::to_string(block) + " out of range");
  if (within < 0 || offsets[block] + within >= offsets[block + 1])
    throw std::out_of_range("vertex " + std::to_string(within) + " out of range in block " +
                            std::to_string(block));
  return offsets[block] + within;
}

std::pair<int, int> ProductGraph::locate(int id) const {
  if (id < 0 || id >= offsets.back()) throw std::out_of_range("product vertex out of range");
  int block = 0;
  while (offsets[block + 1] <= id) ++block;
  return {block, id - offsets[block]};
}

ProductGraph product(const Family& fam) {
  ProductGraph out;
  out.offsets.resize(fam.base.order() + 1);
  out.offsets[0] = 0;
  for (int i = 0; i < fam.base.order(); ++i)
    out.offsets[i + 1] = out.offsets[i] + fam.members[i].order();
  if (out.offsets.back() > kMaxOrder)
    throw cap_error("product order " + std::to_string(out.offsets.back()) + " exceeds cap " +
                    std::to_string(kMaxOrder));

  out.graph = Graph(out.offsets.back());
  for (int i = 0; i < fam.base.order(); ++i)
    for (auto [a, b] : fam.members[i].edges())
      out.graph.add_edge(out.offsets[i] + a, out.offsets[i] + b);
  for (auto [i, j] : fam.base.edges())
    for (int a = out.offsets[i]; a < out.offsets[i + 1]; ++a)
      for (int b = out.offsets[j]; b < out.offsets[j + 1]; ++b) out.graph.add_edge(a, b);
  return out;
}

int product_distance(const Family& fam, int i, int b, int j, int d) {
  if (fam.base.order() < 2 || !is_connected(fam.base))
    throw std::domain_error("product distance needs a connected base of order >= 2");
  if (i < 0 || i >= fam.base.order() || j < 0 || j >= fam.base.order())
    throw std::out_of_range("base vertex out of range");
  if (b < 0 || b >= fam.members[i].order() || d < 0 || d >= fam.members[j].order())
    throw std::out_of_range("member vertex out of range");
  if (i != j) return distance_matrix(fam.base).at(i, j);
  if (b == d) return 0;
  return truncated_distance(distance_matrix(fam.members[i]), 2, b, d);
}

}  // namespace locdim
