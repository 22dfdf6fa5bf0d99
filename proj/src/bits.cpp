#include "ccx/bits.hpp"

#include "ccx/errors.hpp"

namespace ccx {

Bits Bits::from_string(const std::string& s) {
  Bits b(static_cast<int>(s.size()));
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] == '1')
      b.set(static_cast<int>(i));
    else if (s[i] != '0')
      throw invalid_input_error("bitstring may contain only '0' and '1': \"" + s + "\"");
  }
  return b;
}

int Bits::next_set(int i) const {
  ++i;
  if (i >= n_) return -1;
  std::size_t k = static_cast<std::size_t>(i) >> 6;
  std::uint64_t cur = w_[k] & (~std::uint64_t{0} << (i & 63));
  while (true) {
    if (cur) return 64 * static_cast<int>(k) + std::countr_zero(cur);
    if (++k == w_.size()) return -1;
    cur = w_[k];
  }
}

}  // namespace ccx
