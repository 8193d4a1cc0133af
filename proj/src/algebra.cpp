#include "qmyc/algebra.hpp"

namespace qmyc {

BlockAlgebra make_algebra(const std::vector<int>& block_dims) {
  if (block_dims.empty()) throw Error("make_algebra: empty block list");
  for (int n : block_dims)
    if (n < 1) throw Error("make_algebra: block dimension must be positive");
  return BlockAlgebra{block_dims};
}

}  // namespace qmyc
