#pragma once

#include <cstddef>
#include <compare>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace causax {

/// Alphanumeric node label, 1 to 10 characters.
class NodeName {
 public:
  static constexpr std::size_t kMaxLength = 10;

  /// Throws ValidationError if `text` is empty, too long, or not alphanumeric.
  explicit NodeName(std::string text);

  const std::string& str() const noexcept { return text_; }
  std::size_t size() const noexcept { return text_.size(); }

  static bool is_valid(std::string_view text) noexcept;

  friend bool operator==(const NodeName&, const NodeName&) = default;
  friend auto operator<=>(const NodeName&, const NodeName&) = default;

 private:
  std::string text_;
};

using NodeIndex = std::size_t;

struct Edge {
  NodeIndex source;
  NodeIndex target;

  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Immutable DAG over named nodes.
///
/// Edges are stored in presentation order: the order in which a premise lists
/// them. Two graphs with the same edge set but different presentation order
/// are semantically equal (see `same_structure`) but serialize differently.
class CausalDag {
 public:
  /// Throws ValidationError on duplicate names, bad endpoints, self-loops,
  /// duplicate edges, or cycles.
  CausalDag(std::vector<NodeName> nodes, std::vector<Edge> edges);

  const std::vector<NodeName>& nodes() const noexcept { return nodes_; }
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  std::size_t node_count() const noexcept { return nodes_.size(); }
  std::size_t edge_count() const noexcept { return edges_.size(); }

  const NodeName& name(NodeIndex v) const;
  /// Throws LookupError for unknown names.
  NodeIndex index_of(std::string_view name) const;
  bool contains(std::string_view name) const noexcept;

  bool has_edge(NodeIndex source, NodeIndex target) const;

  /// Sorted by index.
  const std::vector<NodeIndex>& parents(NodeIndex v) const;
  const std::vector<NodeIndex>& children(NodeIndex v) const;
  /// Strict descendants, sorted by index.
  std::vector<NodeIndex> descendants(NodeIndex v) const;
  /// True iff a directed path of length >= 1 leads from u to v.
  /// reachable(u, u) is false: the graph is acyclic.
  bool reachable(NodeIndex u, NodeIndex v) const;
  /// Kahn's algorithm, ties broken by smallest index.
  std::vector<NodeIndex> topological_order() const;

  std::vector<NodeIndex> parents(std::string_view v) const;
  std::vector<NodeIndex> children(std::string_view v) const;
  std::vector<NodeIndex> descendants(std::string_view v) const;
  bool reachable(std::string_view u, std::string_view v) const;

  /// |E| / |V|.
  double branching_factor() const noexcept;
  std::size_t max_name_length() const noexcept;

  /// Same node list and the same edge set, ignoring presentation order.
  bool same_structure(const CausalDag& other) const;

  /// One line per edge, "SOURCE -> TARGET", in presentation order.
  std::string debug_dump() const;

  friend bool operator==(const CausalDag& a, const CausalDag& b) {
    return a.nodes_ == b.nodes_ && a.edges_ == b.edges_;
  }

 private:
  void check_index(NodeIndex v) const;

  std::vector<NodeName> nodes_;
  std::vector<Edge> edges_;
  std::vector<std::vector<NodeIndex>> parents_;
  std::vector<std::vector<NodeIndex>> children_;
  std::unordered_map<std::string, NodeIndex> index_;
};

}  // namespace causax
