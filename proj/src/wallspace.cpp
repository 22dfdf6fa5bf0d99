#include "ccx/wallspace.hpp"

#include <unordered_map>
#include <unordered_set>

#include "ccx/errors.hpp"

namespace ccx {

Wallspace Wallspace::create(std::vector<std::string> elements, std::vector<Wall> walls) {
  if (elements.empty()) throw invalid_input_error("wallspace needs at least one element");
  {
    std::unordered_set<std::string> seen;
    for (const auto& e : elements)
      if (!seen.insert(e).second) throw invalid_input_error("duplicate element id \"" + e + "\"");
  }
  int n = static_cast<int>(elements.size());
  std::unordered_set<std::string> names;
  std::unordered_set<Bits, BitsHash> partitions;
  for (std::size_t w = 0; w < walls.size(); ++w) {
    if (walls[w].name.empty()) walls[w].name = "W" + std::to_string(w);
    if (!names.insert(walls[w].name).second)
      throw invalid_input_error("duplicate wall name \"" + walls[w].name + "\"");
    const Bits& p = walls[w].plus;
    if (p.size() != n) throw invalid_input_error("wall \"" + walls[w].name + "\" has wrong width");
    if (p.none())
      throw invalid_input_error("empty halfspace: wall \"" + walls[w].name + "\" has empty plus side");
    if (p.count() == n)
      throw invalid_input_error("empty halfspace: wall \"" + walls[w].name + "\" has empty minus side");
    Bits key = p.get(0) ? ~p : p;
    if (!partitions.insert(key).second)
      throw invalid_input_error("duplicate wall partition at wall \"" + walls[w].name + "\"");
  }
  Wallspace ws;
  ws.elements_ = std::move(elements);
  ws.walls_ = std::move(walls);
  return ws;
}

int Wallspace::element_index(const std::string& id) const {
  for (int i = 0; i < n_elements(); ++i)
    if (elements_[i] == id) return i;
  return -1;
}

ConsistencyResult is_consistent(const Wallspace& ws, int base_element, const Bits& orientation) {
  if (orientation.size() != ws.n_walls())
    throw invalid_input_error("orientation length does not match wall count");
  int W = ws.n_walls();
  std::vector<Bits> chosen;
  chosen.reserve(W);
  for (int w = 0; w < W; ++w) {
    bool base_in_plus = ws.plus(w).get(base_element);
    bool pick_plus = (orientation.get(w) == !base_in_plus);
    chosen.push_back(pick_plus ? ws.plus(w) : ws.minus(w));
  }
  for (int a = 0; a < W; ++a)
    for (int b = a + 1; b < W; ++b)
      if (!chosen[a].intersects(chosen[b])) return {false, a, b};
  return {};
}

}  // namespace ccx
