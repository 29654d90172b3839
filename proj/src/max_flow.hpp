#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace sparse_ec::detail {

struct ArcSpec {
  std::uint32_t from;
  std::uint32_t to;
  std::int64_t capacity;
  /// Capacity of the to -> from direction (0 for a plain directed arc).
  std::int64_t reverse_capacity = 0;
};

/// FIFO push-relabel max flow with periodic global relabeling. Only the first
/// phase runs (a maximum preflow), which is enough for the flow value and a
/// minimum cut. Arcs are stored grouped by tail, each with its partner index.
class MaxFlow {
 public:
  MaxFlow(std::size_t nodes, const std::vector<ArcSpec>& arcs);

  std::int64_t run(std::uint32_t source, std::uint32_t sink);

  /// After run(): nodes that cannot reach the sink in the residual network.
  /// This is the source side of the minimum cut with the largest source side.
  std::vector<char> source_side() const;

 private:
  void global_relabel();
  /// Returns false when it ended in a global relabel.
  bool discharge(std::uint32_t v);

  std::size_t node_count_;
  std::uint32_t source_ = 0;
  std::uint32_t sink_ = 0;
  std::vector<std::size_t> first_;
  std::vector<std::uint32_t> head_;
  std::vector<std::uint32_t> partner_;
  std::vector<std::int64_t> residual_;
  std::vector<std::int64_t> excess_;
  std::vector<std::uint32_t> label_;
  std::vector<std::size_t> cursor_;
  std::vector<std::uint32_t> fifo_;
  std::vector<char> queued_;
  std::size_t fifo_head_ = 0;
  std::size_t relabels_since_global_ = 0;
};

}  // namespace sparse_ec::detail
