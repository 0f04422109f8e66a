#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "linkstream/error.hpp"

namespace linkstream {

using NodeId = std::uint32_t;

// Canonical unordered pair, u < v.
struct NodePair {
  NodeId u = 0;
  NodeId v = 0;

  static NodePair make(NodeId a, NodeId b) {
    if (a == b) throw Error("self-loop on node " + std::to_string(a));
    return a < b ? NodePair{a, b} : NodePair{b, a};
  }
  [[nodiscard]] constexpr std::uint64_t key() const noexcept {
    return (std::uint64_t{u} << 32) | v;
  }
  friend constexpr auto operator<=>(const NodePair&, const NodePair&) = default;
};

/// Bijection between string labels and dense ids. Ids follow lexicographic
/// label order, so id order is the canonical node order.
class NodeTable {
 public:
  NodeTable() = default;

  template <typename Range>
  static NodeTable from_labels(const Range& labels) {
    NodeTable t;
    for (const auto& l : labels) t.labels_.emplace_back(l);
    std::sort(t.labels_.begin(), t.labels_.end());
    t.labels_.erase(std::unique(t.labels_.begin(), t.labels_.end()), t.labels_.end());
    t.index_.reserve(t.labels_.size());
    for (NodeId i = 0; i < t.labels_.size(); ++i) t.index_.emplace(t.labels_[i], i);
    return t;
  }

  [[nodiscard]] std::size_t size() const noexcept { return labels_.size(); }
  [[nodiscard]] const std::string& label(NodeId id) const { return labels_.at(id); }
  [[nodiscard]] const std::vector<std::string>& labels() const noexcept { return labels_; }

  [[nodiscard]] std::optional<NodeId> find(std::string_view label) const {
    auto it = index_.find(std::string(label));
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }
  [[nodiscard]] NodeId at(std::string_view label) const {
    if (auto id = find(label)) return *id;
    throw Error("unknown node label '" + std::string(label) + "'");
  }

 private:
  std::vector<std::string> labels_;
  std::unordered_map<std::string, NodeId> index_;
};

}  // namespace linkstream
