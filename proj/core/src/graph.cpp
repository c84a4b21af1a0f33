#include "causax/graph.hpp"

#include <algorithm>
#include <queue>
#include <set>
#include <sstream>

#include "causax/error.hpp"

namespace causax {

namespace {

bool is_alnum_ascii(char c) noexcept {
  return (c >= '0' && c <= '9') || (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z');
}

}  // namespace

bool NodeName::is_valid(std::string_view text) noexcept {
  return !text.empty() && text.size() <= kMaxLength &&
         std::all_of(text.begin(), text.end(), is_alnum_ascii);
}

NodeName::NodeName(std::string text) : text_(std::move(text)) {
  if (!is_valid(text_)) {
    throw ValidationError("invalid node name '" + text_ +
                          "': expected 1-10 alphanumeric characters");
  }
}

CausalDag::CausalDag(std::vector<NodeName> nodes, std::vector<Edge> edges)
    : nodes_(std::move(nodes)),
      edges_(std::move(edges)),
      parents_(nodes_.size()),
      children_(nodes_.size()) {
  index_.reserve(nodes_.size());
  for (NodeIndex i = 0; i < nodes_.size(); ++i) {
    if (!index_.emplace(nodes_[i].str(), i).second) {
      throw ValidationError("duplicate node name '" + nodes_[i].str() + "'");
    }
  }
  for (const Edge& e : edges_) {
    if (e.source >= nodes_.size() || e.target >= nodes_.size()) {
      throw ValidationError("edge endpoint out of range");
    }
    if (e.source == e.target) {
      throw ValidationError("self-loop on '" + nodes_[e.source].str() + "'");
    }
    auto& kids = children_[e.source];
    if (std::find(kids.begin(), kids.end(), e.target) != kids.end()) {
      throw ValidationError("duplicate edge " + nodes_[e.source].str() + " -> " +
                            nodes_[e.target].str());
    }
    kids.push_back(e.target);
    parents_[e.target].push_back(e.source);
  }
  for (auto& v : parents_) std::sort(v.begin(), v.end());
  for (auto& v : children_) std::sort(v.begin(), v.end());
  if (topological_order().size() != nodes_.size()) {
    throw ValidationError("graph contains a cycle");
  }
}

void CausalDag::check_index(NodeIndex v) const {
  if (v >= nodes_.size()) {
    throw LookupError("node index " + std::to_string(v) + " out of range");
  }
}

const NodeName& CausalDag::name(NodeIndex v) const {
  check_index(v);
  return nodes_[v];
}

NodeIndex CausalDag::index_of(std::string_view name) const {
  auto it = index_.find(std::string(name));
  if (it == index_.end()) {
    throw LookupError("unknown node '" + std::string(name) + "'");
  }
  return it->second;
}

bool CausalDag::contains(std::string_view name) const noexcept {
  return index_.find(std::string(name)) != index_.end();
}

bool CausalDag::has_edge(NodeIndex source, NodeIndex target) const {
  check_index(source);
  check_index(target);
  return std::binary_search(children_[source].begin(), children_[source].end(), target);
}

const std::vector<NodeIndex>& CausalDag::parents(NodeIndex v) const {
  check_index(v);
  return parents_[v];
}

const std::vector<NodeIndex>& CausalDag::children(NodeIndex v) const {
  check_index(v);
  return children_[v];
}

std::vector<NodeIndex> CausalDag::descendants(NodeIndex v) const {
  check_index(v);
  std::vector<bool> seen(nodes_.size(), false);
  std::vector<NodeIndex> stack(children_[v].begin(), children_[v].end());
  while (!stack.empty()) {
    NodeIndex u = stack.back();
    stack.pop_back();
    if (seen[u]) continue;
    seen[u] = true;
    for (NodeIndex w : children_[u]) {
      if (!seen[w]) stack.push_back(w);
    }
  }
  std::vector<NodeIndex> out;
  for (NodeIndex u = 0; u < nodes_.size(); ++u) {
    if (seen[u]) out.push_back(u);
  }
  return out;
}

bool CausalDag::reachable(NodeIndex u, NodeIndex v) const {
  check_index(u);
  check_index(v);
  std::vector<bool> seen(nodes_.size(), false);
  std::vector<NodeIndex> stack(children_[u].begin(), children_[u].end());
  while (!stack.empty()) {
    NodeIndex w = stack.back();
    stack.pop_back();
    if (w == v) return true;
    if (seen[w]) continue;
    seen[w] = true;
    for (NodeIndex x : children_[w]) {
      if (!seen[x]) stack.push_back(x);
    }
  }
  return false;
}

std::vector<NodeIndex> CausalDag::topological_order() const {
  std::vector<std::size_t> indegree(nodes_.size());
  for (NodeIndex v = 0; v < nodes_.size(); ++v) indegree[v] = parents_[v].size();
  std::priority_queue<NodeIndex, std::vector<NodeIndex>, std::greater<>> ready;
  for (NodeIndex v = 0; v < nodes_.size(); ++v) {
    if (indegree[v] == 0) ready.push(v);
  }
  std::vector<NodeIndex> order;
  order.reserve(nodes_.size());
  while (!ready.empty()) {
    NodeIndex v = ready.top();
    ready.pop();
    order.push_back(v);
    for (NodeIndex w : children_[v]) {
      if (--indegree[w] == 0) ready.push(w);
    }
  }
  return order;
}

std::vector<NodeIndex> CausalDag::parents(std::string_view v) const {
  return parents(index_of(v));
}

std::vector<NodeIndex> CausalDag::children(std::string_view v) const {
  return children(index_of(v));
}

std::vector<NodeIndex> CausalDag::descendants(std::string_view v) const {
  return descendants(index_of(v));
}

bool CausalDag::reachable(std::string_view u, std::string_view v) const {
  return reachable(index_of(u), index_of(v));
}

double CausalDag::branching_factor() const noexcept {
  if (nodes_.empty()) return 0.0;
  return static_cast<double>(edges_.size()) / static_cast<double>(nodes_.size());
}

std::size_t CausalDag::max_name_length() const noexcept {
  std::size_t n = 0;
  for (const auto& name : nodes_) n = std::max(n, name.size());
  return n;
}

bool CausalDag::same_structure(const CausalDag& other) const {
  if (nodes_ != other.nodes_) return false;
  std::set<Edge> a(edges_.begin(), edges_.end());
  std::set<Edge> b(other.edges_.begin(), other.edges_.end());
  return a == b;
}

std::string CausalDag::debug_dump() const {
  std::ostringstream out;
  for (const Edge& e : edges_) {
    out << nodes_[e.source].str() << " -> " << nodes_[e.target].str() << '\n';
  }
  return out.str();
}

}  // namespace causax
