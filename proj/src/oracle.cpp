#include "uihier/oracle.hpp"

#include <algorithm>

namespace uihier {

OracleState initial_oracle(const HierarchyTree& gt) {
  OracleState s;
  s.alignment.push_back(gt.root);
  s.consumed.insert(gt.root);
  return s;
}

std::vector<std::string> canonical_child_order(const HierarchyTree& gt,
                                               const std::string& node_id,
                                               const Screen& screen) {
  std::vector<std::string> children = gt.node(node_id).children;
  std::vector<std::pair<BoundingBox, std::string>> keyed;
  keyed.reserve(children.size());
  for (const auto& c : children) keyed.emplace_back(subtree_bounds(gt, c, screen), c);
  std::stable_sort(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) {
    if (a.first.y_min != b.first.y_min) return a.first.y_min < b.first.y_min;
    if (a.first.x_min != b.first.x_min) return a.first.x_min < b.first.x_min;
    return a.second < b.second;
  });
  std::vector<std::string> out;
  out.reserve(keyed.size());
  for (auto& [box, id] : keyed) out.push_back(id);
  return out;
}

namespace {

void check_alignment(const ParserState& parser, const OracleState& oracle) {
  if (parser.stack.size() != oracle.alignment.size())
    throw std::invalid_argument("parser state inconsistent with oracle alignment");
}

std::string first_unconsumed_container_child(const HierarchyTree& gt, const OracleState& oracle,
                                             const std::string& node_id, const Screen& screen) {
  for (const auto& c : canonical_child_order(gt, node_id, screen))
    if (!gt.node(c).is_leaf() && !oracle.consumed.count(c)) return c;
  return {};
}

}  // namespace

std::vector<Action> optimal_actions(const HierarchyTree& gt, const ParserState& parser,
                                    const OracleState& oracle, const Screen& screen) {
  check_alignment(parser, oracle);
  std::vector<Action> out;
  if (is_terminal(parser)) return out;

  const std::string& g = oracle.cursor();
  const HierarchyNode& node = gt.node(g);
  if (node.is_leaf()) {
    out.push_back(Action::pop());
    return out;
  }

  bool has_container_child = false;
  bool all_consumed = true;
  for (const auto& c : canonical_child_order(gt, g, screen)) {
    if (oracle.consumed.count(c)) continue;
    all_consumed = false;
    if (gt.node(c).is_leaf())
      out.push_back(Action::arc(c));
    else
      has_container_child = true;
  }
  if (has_container_child) out.push_back(Action::emit());
  if (all_consumed) {
    if (g == gt.root)
      throw std::logic_error("oracle at exhausted root before terminal");
    out.push_back(Action::pop());
  }
  return out;
}

OracleState advance_oracle(const HierarchyTree& gt, const OracleState& oracle,
                           const ParserState& parser_before, const Action& action,
                           const Screen& screen) {
  check_alignment(parser_before, oracle);
  OracleState next = oracle;
  switch (action.kind) {
    case ActionKind::Arc:
      next.alignment.push_back(action.target);
      next.consumed.insert(action.target);
      break;
    case ActionKind::Emit: {
      std::string bound =
          first_unconsumed_container_child(gt, oracle, oracle.cursor(), screen);
      if (bound.empty())
        throw std::invalid_argument("Emit with no unconsumed container child at " +
                                    oracle.cursor());
      next.alignment.push_back(bound);
      next.consumed.insert(bound);
      break;
    }
    case ActionKind::Pop:
      if (next.alignment.size() <= 1)
        throw std::invalid_argument("Pop would empty the oracle alignment");
      next.alignment.pop_back();
      break;
  }
  return next;
}

std::vector<Action> static_oracle(const HierarchyTree& gt, const Screen& screen) {
  gt.validate(screen.elements);
  std::vector<Action> seq;
  // depth-first, canonical child order; leaf visit is Arc+Pop, container
  // visit Emit+...+Pop
  std::vector<std::pair<std::string, bool>> stack;  // (node, entered)
  stack.emplace_back(gt.root, false);
  bool at_root = true;
  while (!stack.empty()) {
    auto [id, entered] = stack.back();
    stack.pop_back();
    const HierarchyNode& n = gt.node(id);
    if (entered) {
      seq.push_back(Action::pop());
      continue;
    }
    if (n.is_leaf()) {
      seq.push_back(Action::arc(id));
      seq.push_back(Action::pop());
      continue;
    }
    if (!at_root) seq.push_back(Action::emit());
    at_root = false;
    stack.emplace_back(id, true);  // pop when done (dropped for the root below)
    auto order = canonical_child_order(gt, id, screen);
    for (auto it = order.rbegin(); it != order.rend(); ++it) stack.emplace_back(*it, false);
  }
  // trailing pops are never decoded: terminal as soon as the last Arc lands
  while (!seq.empty() && seq.back().kind == ActionKind::Pop) seq.pop_back();
  return seq;
}

DynamicStepResult dynamic_training_step(const HierarchyTree& gt, const Screen& screen,
                                        const ParserState& parser, const OracleState& oracle,
                                        const std::vector<std::pair<Action, double>>& scored_legal,
                                        Rng& rng) {
  if (is_terminal(parser)) throw std::invalid_argument("dynamic step on terminal state");
  std::vector<Action> optimal = optimal_actions(gt, parser, oracle, screen);
  if (optimal.empty()) throw std::logic_error("empty optimal set before terminal");
  if (scored_legal.empty()) throw std::invalid_argument("no scored legal actions");

  const Action* best = &scored_legal[0].first;
  double best_p = scored_legal[0].second;
  for (const auto& [a, p] : scored_legal) {
    if (p > best_p) {
      best_p = p;
      best = &a;
    }
  }
  Action executed;
  if (std::find(optimal.begin(), optimal.end(), *best) != optimal.end()) {
    executed = *best;
  } else {
    executed = optimal[rng.next_below(optimal.size())];
  }

  DynamicStepResult r;
  r.executed = executed;
  r.optimal = std::move(optimal);
  r.parser = apply(parser, executed);
  r.oracle = advance_oracle(gt, oracle, parser, executed, screen);
  return r;
}

ParserState replay(const Screen& screen, const std::vector<Action>& actions) {
  ParserState s = initial_state(screen);
  for (const auto& a : actions) s = apply(s, a);
  return s;
}

}  // namespace uihier
