#include "max_flow.hpp"

#include <algorithm>
#include <limits>

namespace sparse_ec::detail {

MaxFlow::MaxFlow(std::size_t nodes, const std::vector<ArcSpec>& arcs) : node_count_(nodes) {
  first_.assign(nodes + 1, 0);
  for (const auto& a : arcs) {
    ++first_[a.from + 1];
    ++first_[a.to + 1];
  }
  for (std::size_t v = 0; v < nodes; ++v) first_[v + 1] += first_[v];
  const std::size_t total = first_[nodes];
  head_.resize(total);
  partner_.resize(total);
  residual_.resize(total);
  std::vector<std::size_t> fill(first_.begin(), first_.end() - 1);
  for (const auto& a : arcs) {
    const auto forward = static_cast<std::uint32_t>(fill[a.from]++);
    const auto backward = static_cast<std::uint32_t>(fill[a.to]++);
    head_[forward] = a.to;
    head_[backward] = a.from;
    partner_[forward] = backward;
    partner_[backward] = forward;
    residual_[forward] = a.capacity;
    residual_[backward] = a.reverse_capacity;
  }
}

// Exact distances to the sink in the residual network; unreachable nodes get
// label >= n and stay inactive.
void MaxFlow::global_relabel() {
  const auto unreached = static_cast<std::uint32_t>(2 * node_count_);
  std::fill(label_.begin(), label_.end(), unreached);
  label_[sink_] = 0;
  std::vector<std::uint32_t> queue{sink_};
  for (std::size_t h = 0; h < queue.size(); ++h) {
    const std::uint32_t v = queue[h];
    for (std::size_t i = first_[v]; i < first_[v + 1]; ++i) {
      const std::uint32_t w = head_[i];
      if (w != source_ && label_[w] == unreached && residual_[partner_[i]] > 0) {
        label_[w] = label_[v] + 1;
        queue.push_back(w);
      }
    }
  }
  label_[source_] = static_cast<std::uint32_t>(node_count_);
  std::copy(first_.begin(), first_.end() - 1, cursor_.begin());
  fifo_.clear();
  fifo_head_ = 0;
  std::fill(queued_.begin(), queued_.end(), 0);
  for (std::uint32_t v = 0; v < node_count_; ++v)
    if (v != source_ && v != sink_ && excess_[v] > 0 && label_[v] < node_count_) {
      queued_[v] = 1;
      fifo_.push_back(v);
    }
  relabels_since_global_ = 0;
}

bool MaxFlow::discharge(std::uint32_t v) {
  while (excess_[v] > 0) {
    if (cursor_[v] == first_[v + 1]) {
      std::uint32_t lowest = static_cast<std::uint32_t>(2 * node_count_);
      for (std::size_t i = first_[v]; i < first_[v + 1]; ++i)
        if (residual_[i] > 0) lowest = std::min(lowest, label_[head_[i]] + 1);
      label_[v] = lowest;
      cursor_[v] = first_[v];
      if (lowest >= node_count_) return true;
      if (++relabels_since_global_ >= node_count_) {
        global_relabel();
        return false;
      }
      continue;
    }
    const std::size_t i = cursor_[v];
    const std::uint32_t w = head_[i];
    if (residual_[i] > 0 && label_[w] + 1 == label_[v]) {
      const std::int64_t push = std::min(excess_[v], residual_[i]);
      residual_[i] -= push;
      residual_[partner_[i]] += push;
      excess_[v] -= push;
      excess_[w] += push;
      if (w != sink_ && w != source_ && !queued_[w]) {
        queued_[w] = 1;
        fifo_.push_back(w);
      }
      if (excess_[v] == 0) return true;
    }
    ++cursor_[v];
  }
  return true;
}

std::int64_t MaxFlow::run(std::uint32_t source, std::uint32_t sink) {
  source_ = source;
  sink_ = sink;
  excess_.assign(node_count_, 0);
  label_.assign(node_count_, 0);
  cursor_.assign(node_count_, 0);
  queued_.assign(node_count_, 0);
  for (std::size_t i = first_[source]; i < first_[source + 1]; ++i) {
    const std::int64_t push = residual_[i];
    residual_[i] = 0;
    residual_[partner_[i]] += push;
    excess_[head_[i]] += push;
  }
  global_relabel();
  while (fifo_head_ < fifo_.size()) {
    const std::uint32_t v = fifo_[fifo_head_++];
    queued_[v] = 0;
    if (label_[v] >= node_count_) continue;
    if (!discharge(v)) continue;
    if (fifo_head_ > node_count_) {
      fifo_.erase(fifo_.begin(), fifo_.begin() + static_cast<std::ptrdiff_t>(fifo_head_));
      fifo_head_ = 0;
    }
  }
  return excess_[sink];
}

std::vector<char> MaxFlow::source_side() const {
  std::vector<char> reaches(node_count_, 0);
  std::vector<std::uint32_t> queue{sink_};
  reaches[sink_] = 1;
  for (std::size_t h = 0; h < queue.size(); ++h) {
    const std::uint32_t v = queue[h];
    for (std::size_t i = first_[v]; i < first_[v + 1]; ++i) {
      const std::uint32_t w = head_[i];
      if (!reaches[w] && residual_[partner_[i]] > 0) {
        reaches[w] = 1;
        queue.push_back(w);
      }
    }
  }
  for (auto& r : reaches) r = !r;
  return reaches;
}

}  // namespace sparse_ec::detail
