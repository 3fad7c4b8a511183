#include "locdim/twins.hpp"

namespace locdim {

TwinPartition true_twin_classes(const Graph& g) {
  TwinPartition out;
  std::vector<VertexSet> keys;
  for (int v = 0; v < g.order(); ++v) {
    VertexSet key = g.closed_neighborhood(v);
    bool placed = false;
    for (std::size_t c = 0; c < keys.size(); ++c)
      if (keys[c] == key) {
        out.classes[c] |= set_of(v);
        placed = true;
        break;
      }
    if (!placed) {
      keys.push_back(key);
      out.classes.push_back(set_of(v));
    }
  }
  for (VertexSet cls : out.classes)
    if (set_size(cls) >= 2) out.nonsingleton.push_back(cls);
  return out;
}

}  // namespace locdim
