#include "latdet/bit_matrix.hpp"

#include <bit>

#include "latdet/parallel.hpp"

namespace latdet {

BitMatrix::BitMatrix(std::size_t n) : n_(n), words_((n + 63) / 64), bits_(n * ((n + 63) / 64), 0) {}

BitMatrix BitMatrix::identity(std::size_t n) {
  BitMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i);
  return m;
}

BitMatrix BitMatrix::squared(unsigned workers) const {
  BitMatrix out(n_);
  parallel_for(n_, workers, [&](std::size_t r) {
    std::uint64_t* dst = out.bits_.data() + r * words_;
    const std::uint64_t* src = bits_.data() + r * words_;
    for (std::size_t w = 0; w < words_; ++w) {
      std::uint64_t word = src[w];
      while (word) {
        const std::size_t k = w * 64 + static_cast<std::size_t>(std::countr_zero(word));
        word &= word - 1;
        const std::uint64_t* via = bits_.data() + k * words_;
        for (std::size_t x = 0; x < words_; ++x) dst[x] |= via[x];
      }
    }
  });
  return out;
}

ClosureResult reflexive_transitive_closure(const BitMatrix& adjacency, unsigned workers) {
  const std::size_t n = adjacency.size();
  ClosureResult result{adjacency, 0};
  for (std::size_t i = 0; i < n; ++i) result.reach.set(i, i);
  // Paths of length <= covered are represented; a simple path has < n edges.
  std::size_t covered = 1;
  while (covered + 1 < n) {
    BitMatrix next = result.reach.squared(workers);
    ++result.squarings;
    covered *= 2;
    if (next == result.reach) break;
    result.reach = std::move(next);
  }
  return result;
}

}  // namespace latdet
