#pragma once

#include <string>
#include <vector>

#include "uihier/core.hpp"

namespace uihier {

enum class ActionKind { Arc, Emit, Pop };

struct Action {
  ActionKind kind = ActionKind::Pop;
  std::string target;  // element id, Arc only

  static Action arc(std::string element_id) { return {ActionKind::Arc, std::move(element_id)}; }
  static Action emit() { return {ActionKind::Emit, {}}; }
  static Action pop() { return {ActionKind::Pop, {}}; }

  bool operator==(const Action&) const = default;
  bool operator<(const Action& o) const {
    if (kind != o.kind) return kind < o.kind;
    return target < o.target;
  }
};

std::string action_to_string(const Action& a);  // "ARC:<id>" | "EMIT" | "POP"
Action action_from_string(const std::string& s);
std::vector<std::string> trace_to_strings(const std::vector<Action>& trace);
std::vector<Action> trace_from_strings(const std::vector<std::string>& strs);

// Number of trailing non-Arc actions after which Emit is masked.
inline constexpr std::size_t kEmitMaskWindow = 10;

struct ParserState {
  std::vector<std::string> buffer;   // element ids in canonical order, fixed
  std::vector<std::string> stack;    // node ids, root at the bottom
  std::set<std::string> visited;     // element ids already attached
  HierarchyTree partial;
  std::vector<Action> history;
  int next_container = 0;

  const std::string& top() const { return stack.back(); }
  std::size_t unvisited_count() const { return buffer.size() - visited.size(); }
};

// Fresh state: a root container pushed onto the stack, buffer canonically
// sorted, nothing visited. Throws on an empty element set.
ParserState initial_state(const Screen& screen);

bool is_terminal(const ParserState& state);

// Arc(e) for every unvisited buffer element; Pop unless it would empty the
// stack while unvisited elements remain; Emit unless the buffer is
// exhausted or the last kEmitMaskWindow actions contain no Arc (only once
// the window is full). Terminal states have no legal actions. Returned in
// a fixed order: arcs in buffer order, then Emit, then Pop.
std::vector<Action> legal_actions(const ParserState& state);

bool is_legal(const ParserState& state, const Action& action);

// Pure transition; throws std::invalid_argument on an illegal action and
// leaves the input state untouched.
ParserState apply(const ParserState& state, const Action& action);

// Requires a terminal state. Collapses containers left with <= 1 child
// (the root container is kept) and validates the result.
HierarchyTree extract_tree(const ParserState& state);

}  // namespace uihier
