#pragma once

#include <atomic>
#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <variant>
#include <vector>

#include "micro.hpp"
#include "pm_array.hpp"
#include "types.hpp"

namespace leva {

// Linear-space Find-Smaller over a +-1 array.
//
// The array is cut into blocks of length b = max(1, floor(log2(n)/2)). Each
// block boundary ib carries a near array (answers for the first 2b target
// distances) and a far array whose entry j holds the *block* of the answer
// for target a_ib - j*b. Queries starting inside a block first consult a
// micro structure for an in-block answer and otherwise jump to the next
// boundary; boundary queries resolve via the near array, one far-array hop,
// or one hop through the complete-binary-tree ancestor of the block index.
// The jump chain is a bounded goto, never a loop: at most 3 re-entries.
class LinearFs {
 public:
  struct Trace {
    // Step labels: 1 self, 21 near, 221 far hop, 222 ancestor hop, 3 micro
    // miss (fall to next boundary), 30 micro hit, 0 immediate none.
    static constexpr int kMaxSteps = 8;
    int steps[kMaxSteps] = {0, 0, 0, 0, 0, 0, 0, 0};
    int step_count = 0;
    int hops = 0;
    std::uint64_t lca_block = 0;

    void push(int label) {
      if (step_count < kMaxSteps) steps[step_count] = label;
      ++step_count;
    }
  };

  // `mask_window` widens the mask variant's reach up to the word size;
  // 0 means the block length. Ignored by the matrix variant.
  static LinearFs build(std::vector<value_t> values, MicroVariant variant,
                        unsigned mask_window = 0);

  // First j > i with a_j <= x, nullopt when none. When x >= a_i, returns i
  // itself. Requires i < original_size().
  std::optional<index_t> query(index_t i, value_t x, Trace* trace = nullptr) const;

  unsigned block_len() const { return b_; }
  std::size_t block_count() const { return arr_.size() / b_; }
  MicroVariant variant() const;
  const PmOneArray& array() const { return arr_; }

  // Near array of a block: entry j-1 answers target distance j (raw 0
  // sentinel). Far array entries are block indices.
  std::span<const index_t> near(std::size_t block) const;
  std::span<const index_t> far(std::size_t block) const;
  std::size_t far_size(std::size_t block) const {
    return far_offsets_[block + 1] - far_offsets_[block];
  }

  std::size_t word_count() const;

  // Highest number of jump-chain re-entries any query has performed so far.
  std::uint32_t max_hops() const { return max_hops_->load(std::memory_order_relaxed); }

 private:
  LinearFs() = default;

  std::optional<index_t> decode(index_t entry) const {
    if (entry == 0 || entry >= arr_.original_size()) return std::nullopt;
    return entry;
  }

  std::optional<index_t> micro_hit(index_t pos, value_t x) const;
  void note_hops(int hops) const;

  PmOneArray arr_;
  unsigned b_ = 1;
  std::vector<index_t> near_;              // block_count * 2b entries
  std::vector<std::uint64_t> far_offsets_; // per-block ranges in far_
  std::vector<index_t> far_;
  std::variant<std::monostate, BvMicro, MaskMicro> micro_;
  std::unique_ptr<std::atomic<std::uint32_t>> max_hops_ =
      std::make_unique<std::atomic<std::uint32_t>>(0);
};

}  // namespace leva
