#include "uihier/transition.hpp"

#include <algorithm>

namespace uihier {

std::string action_to_string(const Action& a) {
  switch (a.kind) {
    case ActionKind::Arc: return "ARC:" + a.target;
    case ActionKind::Emit: return "EMIT";
    case ActionKind::Pop: return "POP";
  }
  return {};
}

Action action_from_string(const std::string& s) {
  if (s == "EMIT") return Action::emit();
  if (s == "POP") return Action::pop();
  if (s.rfind("ARC:", 0) == 0) return Action::arc(s.substr(4));
  throw std::invalid_argument("unparseable action: " + s);
}

std::vector<std::string> trace_to_strings(const std::vector<Action>& trace) {
  std::vector<std::string> out;
  out.reserve(trace.size());
  for (const auto& a : trace) out.push_back(action_to_string(a));
  return out;
}

std::vector<Action> trace_from_strings(const std::vector<std::string>& strs) {
  std::vector<Action> out;
  out.reserve(strs.size());
  for (const auto& s : strs) out.push_back(action_from_string(s));
  return out;
}

namespace {

std::string fresh_container_id(const ParserState& state, int& counter) {
  for (;;) {
    std::string id = "c" + std::to_string(counter++);
    if (!state.partial.has_node(id)) return id;
  }
}

bool emit_masked_by_window(const std::vector<Action>& history) {
  if (history.size() < kEmitMaskWindow) return false;
  for (std::size_t k = history.size() - kEmitMaskWindow; k < history.size(); ++k)
    if (history[k].kind == ActionKind::Arc) return false;
  return true;
}

}  // namespace

ParserState initial_state(const Screen& screen) {
  if (screen.elements.empty()) throw std::invalid_argument("screen has no elements");
  ParserState s;
  for (const auto& e : canonical_sort(screen.elements)) s.buffer.push_back(e.id);

  HierarchyNode root;
  root.id = "c0";
  // element ids could collide with the default container naming
  int counter = 0;
  while (std::find(s.buffer.begin(), s.buffer.end(), root.id) != s.buffer.end())
    root.id = "c" + std::to_string(++counter);
  s.next_container = counter + 1;
  root.kind = NodeKind::Container;
  s.partial.root = root.id;
  s.partial.nodes[root.id] = root;
  s.stack.push_back(root.id);
  return s;
}

bool is_terminal(const ParserState& state) {
  return state.visited.size() == state.buffer.size();
}

std::vector<Action> legal_actions(const ParserState& state) {
  std::vector<Action> out;
  if (is_terminal(state)) return out;
  for (const auto& e : state.buffer)
    if (!state.visited.count(e)) out.push_back(Action::arc(e));
  if (!emit_masked_by_window(state.history)) out.push_back(Action::emit());
  if (state.stack.size() > 1) out.push_back(Action::pop());
  return out;
}

bool is_legal(const ParserState& state, const Action& action) {
  if (is_terminal(state)) return false;
  switch (action.kind) {
    case ActionKind::Arc:
      return std::find(state.buffer.begin(), state.buffer.end(), action.target) !=
                 state.buffer.end() &&
             !state.visited.count(action.target);
    case ActionKind::Emit:
      return !emit_masked_by_window(state.history);
    case ActionKind::Pop:
      return state.stack.size() > 1;
  }
  return false;
}

ParserState apply(const ParserState& state, const Action& action) {
  if (!is_legal(state, action))
    throw std::invalid_argument("illegal action " + action_to_string(action));
  ParserState next = state;
  switch (action.kind) {
    case ActionKind::Arc: {
      HierarchyNode leaf;
      leaf.id = action.target;
      leaf.kind = NodeKind::Leaf;
      next.partial.nodes[leaf.id] = leaf;
      next.partial.node(next.top()).children.push_back(leaf.id);
      next.stack.push_back(leaf.id);
      next.visited.insert(action.target);
      break;
    }
    case ActionKind::Emit: {
      HierarchyNode c;
      c.id = fresh_container_id(state, next.next_container);
      c.kind = NodeKind::Container;
      next.partial.nodes[c.id] = c;
      next.partial.node(next.top()).children.push_back(c.id);
      next.stack.push_back(c.id);
      break;
    }
    case ActionKind::Pop:
      next.stack.pop_back();
      break;
  }
  next.history.push_back(action);
  return next;
}

HierarchyTree extract_tree(const ParserState& state) {
  if (!is_terminal(state)) throw std::invalid_argument("extract_tree on non-terminal state");
  HierarchyTree t = collapse_trivial_containers(state.partial);
  t.validate_structure();
  std::set<std::string> leaves;
  for (const auto& [id, n] : t.nodes)
    if (n.is_leaf()) leaves.insert(id);
  for (const auto& e : state.buffer)
    if (!leaves.count(e)) throw std::logic_error("element missing from extracted tree: " + e);
  if (leaves.size() != state.buffer.size())
    throw std::logic_error("extracted tree has extra leaves");
  return t;
}

}  // namespace uihier
