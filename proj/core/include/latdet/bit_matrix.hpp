#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace latdet {

/// Square boolean matrix, rows packed into 64-bit words.
class BitMatrix {
 public:
  BitMatrix() = default;
  explicit BitMatrix(std::size_t n);

  static BitMatrix identity(std::size_t n);

  std::size_t size() const noexcept { return n_; }
  bool test(std::size_t row, std::size_t col) const noexcept {
    return (bits_[row * words_ + col / 64] >> (col % 64)) & 1u;
  }
  void set(std::size_t row, std::size_t col) noexcept {
    bits_[row * words_ + col / 64] |= std::uint64_t{1} << (col % 64);
  }
  std::span<const std::uint64_t> row(std::size_t r) const noexcept {
    return {bits_.data() + r * words_, words_};
  }

  /// Boolean product with itself, rows computed on `workers` threads.
  BitMatrix squared(unsigned workers = 0) const;

  friend bool operator==(const BitMatrix&, const BitMatrix&) = default;

 private:
  std::size_t n_ = 0;
  std::size_t words_ = 0;
  std::vector<std::uint64_t> bits_;
};

struct ClosureResult {
  BitMatrix reach;
  std::size_t squarings = 0;
};

/// Reflexive-transitive closure of `adjacency` by repeated squaring of
/// (I + A). Stops after ceil(log2(n-1)) squarings or at the first squaring
/// that leaves the matrix unchanged, whichever comes first.
ClosureResult reflexive_transitive_closure(const BitMatrix& adjacency, unsigned workers = 0);

}  // namespace latdet
