#pragma once

#include <string>
#include <vector>

#include "ccx/bits.hpp"

namespace ccx {

// One wall of a wallspace: a bipartition of the element set into the "plus"
// side and its complement. The partition is what identifies the wall; plus
// vs minus is presentation only.
struct Wall {
  std::string name;
  Bits plus;  // over element indices; nonempty, proper
};

// A finite set with a finite family of walls.
class Wallspace {
 public:
  // Validates: nonempty element list, unique element ids, unique wall names,
  // both sides of every wall nonempty, no two walls with the same partition.
  static Wallspace create(std::vector<std::string> elements, std::vector<Wall> walls);

  int n_elements() const { return static_cast<int>(elements_.size()); }
  int n_walls() const { return static_cast<int>(walls_.size()); }
  const std::vector<std::string>& elements() const { return elements_; }
  const std::vector<Wall>& walls() const { return walls_; }
  const Bits& plus(int w) const { return walls_[w].plus; }
  Bits minus(int w) const { return ~walls_[w].plus; }
  int element_index(const std::string& id) const;  // -1 if absent

  // The partition of wall w, keyed by the side not containing element 0.
  Bits partition_key(int w) const {
    return walls_[w].plus.get(0) ? minus(w) : walls_[w].plus;
  }

 private:
  Wallspace() = default;
  std::vector<std::string> elements_;
  std::vector<Wall> walls_;
};

// Outcome of a consistency check: ok, or the first violating wall pair.
struct ConsistencyResult {
  bool ok = true;
  int wall_a = -1;
  int wall_b = -1;
};

// An orientation chooses one halfspace per wall, encoded relative to a base
// element: bit w = 0 means the side containing the base. Consistent iff all
// chosen halfspaces pairwise intersect.
ConsistencyResult is_consistent(const Wallspace& ws, int base_element, const Bits& orientation);

}  // namespace ccx
