#pragma once

#include <utility>

#include "uihier/rng.hpp"
#include "uihier/transition.hpp"

namespace uihier {

// Tracks which ground-truth node each parser stack entry realizes. The
// alignment stack mirrors ParserState::stack one-to-one.
struct OracleState {
  std::vector<std::string> alignment;  // ground-truth node ids
  std::set<std::string> consumed;      // ground-truth node ids realized

  const std::string& cursor() const { return alignment.back(); }
};

OracleState initial_oracle(const HierarchyTree& gt);

// Children of a node ordered top-down, left-to-right by subtree bounding
// box, node id as tiebreak.
std::vector<std::string> canonical_child_order(const HierarchyTree& gt,
                                               const std::string& node_id,
                                               const Screen& screen);

// The full set of supervising actions at the current state: Arc for each
// unconsumed leaf child of the cursor, Emit if any container child remains,
// Pop once every child is consumed (and at just-arced leaves). Empty only
// at terminal states. Returned in a deterministic order (arcs in canonical
// child order, then Emit, then Pop).
std::vector<Action> optimal_actions(const HierarchyTree& gt, const ParserState& parser,
                                    const OracleState& oracle, const Screen& screen);

// Advances the alignment after `action` is applied to the parser. Emit
// binds the new container to the first unconsumed container child in
// canonical order.
OracleState advance_oracle(const HierarchyTree& gt, const OracleState& oracle,
                           const ParserState& parser_before, const Action& action,
                           const Screen& screen);

// The canonical action sequence for a ground-truth tree: depth-first in
// canonical child order, trailing Pops omitted so the sequence ends exactly
// where decoding terminates.
std::vector<Action> static_oracle(const HierarchyTree& gt, const Screen& screen);

struct DynamicStepResult {
  Action executed;
  std::vector<Action> optimal;
  ParserState parser;
  OracleState oracle;
};

// Executes the policy argmax when it is optimal, otherwise a uniformly
// random optimal action. `scored_legal` pairs every legal action with its
// probability (order defines argmax tie-breaking).
DynamicStepResult dynamic_training_step(const HierarchyTree& gt, const Screen& screen,
                                        const ParserState& parser, const OracleState& oracle,
                                        const std::vector<std::pair<Action, double>>& scored_legal,
                                        Rng& rng);

// Replays an action sequence from the initial state.
ParserState replay(const Screen& screen, const std::vector<Action>& actions);

}  // namespace uihier
