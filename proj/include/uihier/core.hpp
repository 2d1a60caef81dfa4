#pragma once

#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace uihier {

struct BoundingBox {
  double x_min = 0, y_min = 0, x_max = 0, y_max = 0;

  double width() const { return x_max - x_min; }
  double height() const { return y_max - y_min; }
  double area() const { return width() * height(); }
  bool valid() const { return x_min < x_max && y_min < y_max; }
  bool operator==(const BoundingBox&) const = default;

  static BoundingBox hull(const BoundingBox& a, const BoundingBox& b);
};

struct Element {
  std::string id;
  std::string class_label;
  BoundingBox bounds;
  std::optional<std::string> text;
  double confidence = 1.0;
};

enum class NodeKind { Leaf, Container };

struct HierarchyNode {
  std::string id;
  NodeKind kind = NodeKind::Container;
  std::optional<std::string> label;       // containers only
  std::vector<std::string> children;      // ordered

  bool is_leaf() const { return kind == NodeKind::Leaf; }
};

// Rooted directed tree over leaf elements and abstract container nodes.
// Leaf node ids coincide with the element ids they reference.
struct HierarchyTree {
  std::string root;
  std::map<std::string, HierarchyNode> nodes;

  const HierarchyNode& node(const std::string& id) const;
  HierarchyNode& node(const std::string& id);
  bool has_node(const std::string& id) const { return nodes.count(id) > 0; }

  std::vector<std::string> leaf_ids() const;       // element ids, sorted
  std::vector<std::string> container_ids() const;  // sorted
  std::size_t edge_count() const;

  // spans all screen elements / leaves reference real elements / acyclic
  // single-rooted, leaves childless. Throws std::invalid_argument on the
  // first violated invariant.
  void validate(const std::vector<Element>& elements) const;
  void validate_structure() const;  // same checks minus element coverage
};

struct ScreenMatchStats {
  int annotated = 0;   // ground-truth leaves
  int matched = 0;     // leaves with a corresponding detection
  double mean_score = 0.0;
};

struct Screen {
  std::string screen_id;
  double width = 0, height = 0;
  std::vector<Element> elements;
  std::optional<HierarchyTree> ground_truth;
  std::optional<ScreenMatchStats> match_stats;

  const Element& element(const std::string& id) const;
  bool has_element(const std::string& id) const;
};

// Stable order: (y_min, x_min), ties broken by element id.
std::vector<Element> canonical_sort(std::vector<Element> elements);

// Dataset-side smoothing: removes nodes that have exactly one child and are
// not in `visible`; the child is spliced to the grandparent. Applied to a
// fixed point. A qualifying root is replaced by its only child.
HierarchyTree smooth_view_hierarchy(const HierarchyTree& tree,
                                    const std::set<std::string>& visible);

// Decoder-side smoothing: containers with <= 1 child are collapsed
// (childless ones deleted); the root container is always kept.
HierarchyTree collapse_trivial_containers(const HierarchyTree& tree);

std::set<std::string> descendant_leaves(const HierarchyTree& tree, const std::string& node_id);

// Union of descendant leaf bounds; element boxes looked up in `screen`.
BoundingBox subtree_bounds(const HierarchyTree& tree, const std::string& node_id,
                           const Screen& screen);

// The 13-class default vocabulary; one-hot width is fixed per config.
const std::vector<std::string>& default_vocabulary();

}  // namespace uihier
