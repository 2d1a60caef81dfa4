#include "uihier/core.hpp"

#include <algorithm>
#include <functional>

namespace uihier {

BoundingBox BoundingBox::hull(const BoundingBox& a, const BoundingBox& b) {
  return {std::min(a.x_min, b.x_min), std::min(a.y_min, b.y_min),
          std::max(a.x_max, b.x_max), std::max(a.y_max, b.y_max)};
}

const HierarchyNode& HierarchyTree::node(const std::string& id) const {
  auto it = nodes.find(id);
  if (it == nodes.end()) throw std::invalid_argument("unknown node id: " + id);
  return it->second;
}

HierarchyNode& HierarchyTree::node(const std::string& id) {
  auto it = nodes.find(id);
  if (it == nodes.end()) throw std::invalid_argument("unknown node id: " + id);
  return it->second;
}

std::vector<std::string> HierarchyTree::leaf_ids() const {
  std::vector<std::string> out;
  for (const auto& [id, n] : nodes)
    if (n.is_leaf()) out.push_back(id);
  return out;
}

std::vector<std::string> HierarchyTree::container_ids() const {
  std::vector<std::string> out;
  for (const auto& [id, n] : nodes)
    if (!n.is_leaf()) out.push_back(id);
  return out;
}

std::size_t HierarchyTree::edge_count() const {
  std::size_t e = 0;
  for (const auto& [id, n] : nodes) e += n.children.size();
  return e;
}

void HierarchyTree::validate_structure() const {
  if (nodes.empty()) throw std::invalid_argument("tree has no nodes");
  if (!has_node(root)) throw std::invalid_argument("root id not present: " + root);

  std::map<std::string, int> parent_count;
  for (const auto& [id, n] : nodes) {
    if (n.id != id) throw std::invalid_argument("node id mismatch for " + id);
    if (n.is_leaf() && !n.children.empty())
      throw std::invalid_argument("leaf node with children: " + id);
    for (const auto& c : n.children) {
      if (!has_node(c)) throw std::invalid_argument("dangling child id: " + c);
      parent_count[c]++;
    }
  }
  for (const auto& [id, cnt] : parent_count)
    if (cnt > 1) throw std::invalid_argument("node has multiple parents: " + id);
  if (parent_count.count(root)) throw std::invalid_argument("root has a parent");

  // |edges| = |nodes| - 1 together with single-parenthood rules out cycles,
  // but walk anyway so the diagnostic points at unreachable nodes.
  if (edge_count() != nodes.size() - 1)
    throw std::invalid_argument("edge count != node count - 1");
  std::set<std::string> seen;
  std::function<void(const std::string&)> dfs = [&](const std::string& id) {
    if (!seen.insert(id).second) throw std::invalid_argument("cycle at node: " + id);
    for (const auto& c : node(id).children) dfs(c);
  };
  dfs(root);
  if (seen.size() != nodes.size())
    throw std::invalid_argument("unreachable nodes present");
}

void HierarchyTree::validate(const std::vector<Element>& elements) const {
  validate_structure();
  std::set<std::string> element_ids;
  for (const auto& e : elements) {
    if (!element_ids.insert(e.id).second)
      throw std::invalid_argument("duplicate element id: " + e.id);
  }
  std::set<std::string> leaf_set;
  for (const auto& [id, n] : nodes) {
    if (!n.is_leaf()) continue;
    if (!element_ids.count(id))
      throw std::invalid_argument("leaf references unknown element: " + id);
    leaf_set.insert(id);
  }
  for (const auto& e : elements)
    if (!leaf_set.count(e.id))
      throw std::invalid_argument("element missing from tree: " + e.id);
}

const Element& Screen::element(const std::string& id) const {
  for (const auto& e : elements)
    if (e.id == id) return e;
  throw std::invalid_argument("unknown element id: " + id);
}

bool Screen::has_element(const std::string& id) const {
  for (const auto& e : elements)
    if (e.id == id) return true;
  return false;
}

std::vector<Element> canonical_sort(std::vector<Element> elements) {
  std::stable_sort(elements.begin(), elements.end(), [](const Element& a, const Element& b) {
    if (a.bounds.y_min != b.bounds.y_min) return a.bounds.y_min < b.bounds.y_min;
    if (a.bounds.x_min != b.bounds.x_min) return a.bounds.x_min < b.bounds.x_min;
    return a.id < b.id;
  });
  return elements;
}

namespace {

// Shared splice pass. `removable` decides whether a single-child (or, with
// allow_childless, empty) container may be removed. Runs to a fixed point.
HierarchyTree splice_containers(const HierarchyTree& tree, bool allow_childless,
                                const std::function<bool(const HierarchyNode&)>& removable) {
  HierarchyTree t = tree;
  bool changed = true;
  while (changed) {
    changed = false;
    // Collect candidates against the current tree, then re-wire one at a time.
    for (const auto& [id, n] : t.nodes) {
      const bool qualifies =
          !n.is_leaf() &&
          (n.children.size() == 1 || (allow_childless && n.children.empty())) &&
          removable(n);
      if (!qualifies) continue;

      if (id == t.root) {
        if (n.children.size() != 1) continue;  // childless root stays
        std::string child = n.children[0];
        t.nodes.erase(id);
        t.root = child;
        changed = true;
        break;
      }
      // find parent and splice
      std::string parent_id;
      for (const auto& [pid, pn] : t.nodes) {
        if (std::find(pn.children.begin(), pn.children.end(), id) != pn.children.end()) {
          parent_id = pid;
          break;
        }
      }
      auto& siblings = t.nodes.at(parent_id).children;
      auto pos = std::find(siblings.begin(), siblings.end(), id);
      if (n.children.empty()) {
        siblings.erase(pos);
      } else {
        *pos = n.children[0];
      }
      t.nodes.erase(id);
      changed = true;
      break;
    }
  }
  return t;
}

}  // namespace

HierarchyTree smooth_view_hierarchy(const HierarchyTree& tree,
                                    const std::set<std::string>& visible) {
  tree.validate_structure();
  return splice_containers(tree, /*allow_childless=*/false,
                           [&](const HierarchyNode& n) { return visible.count(n.id) == 0; });
}

HierarchyTree collapse_trivial_containers(const HierarchyTree& tree) {
  HierarchyTree t = splice_containers(tree, /*allow_childless=*/true,
                                      [&](const HierarchyNode& n) { return n.id != tree.root; });
  return t;
}

std::set<std::string> descendant_leaves(const HierarchyTree& tree, const std::string& node_id) {
  const HierarchyNode& n = tree.node(node_id);
  std::set<std::string> out;
  if (n.is_leaf()) {
    out.insert(n.id);
    return out;
  }
  std::vector<std::string> stack(n.children.begin(), n.children.end());
  while (!stack.empty()) {
    std::string id = stack.back();
    stack.pop_back();
    const HierarchyNode& c = tree.node(id);
    if (c.is_leaf())
      out.insert(c.id);
    else
      stack.insert(stack.end(), c.children.begin(), c.children.end());
  }
  return out;
}

BoundingBox subtree_bounds(const HierarchyTree& tree, const std::string& node_id,
                           const Screen& screen) {
  std::set<std::string> leaves = descendant_leaves(tree, node_id);
  if (leaves.empty()) return {};
  bool first = true;
  BoundingBox acc;
  for (const auto& id : leaves) {
    const BoundingBox& b = screen.element(id).bounds;
    acc = first ? b : BoundingBox::hull(acc, b);
    first = false;
  }
  return acc;
}

const std::vector<std::string>& default_vocabulary() {
  static const std::vector<std::string> v = {
      "Text",   "Button", "Icon",   "Picture",          "TextField",
      "Checkbox", "Switch", "Slider", "SegmentedControl", "TabButton",
      "PageControl", "Container", "Other"};
  return v;
}

}  // namespace uihier
