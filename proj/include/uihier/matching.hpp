#pragma once

#include <map>
#include <string>
#include <vector>

#include "uihier/core.hpp"

namespace uihier {

struct MatchPair {
  std::string left, right;
  double score = 0.0;
};

struct Correspondence {
  std::vector<MatchPair> pairs;
  std::set<std::string> unmatched_left, unmatched_right;

  std::map<std::string, std::string> left_to_right() const;
  std::map<std::string, std::string> right_to_left() const;
  bool empty() const { return pairs.empty(); }
};

double iou(const BoundingBox& a, const BoundingBox& b);

// Maximum-weight assignment (Hungarian method) over pairwise IoU; pairs
// scoring below `threshold` are dropped after the assignment is solved,
// since pre-filtering can change the optimum.
Correspondence match_elements(const std::vector<Element>& left,
                              const std::vector<Element>& right, double threshold = 0.5);

// Container correspondence: score(g, p) is the IoU of descendant leaf-id
// sets, with predicted leaves translated into ground-truth ids through
// leaf_corr. Same assignment + post-threshold scheme as element matching.
Correspondence match_containers(const HierarchyTree& gt, const HierarchyTree& pred,
                                const Correspondence& leaf_corr, double threshold = 0.5);

// Maximum-weight bipartite assignment, exposed for reuse and testing.
// weights[i][j] >= 0; returns per-left column index or -1.
std::vector<int> max_weight_assignment(const std::vector<std::vector<double>>& weights);

enum class FilterRule { AMP80, RICO_mean08 };

// Keeps screens whose match metadata passes the rule. Screens lacking
// metadata raise with a diagnostic naming the screen.
std::vector<Screen> filter_dataset(const std::vector<Screen>& screens, FilterRule rule);

// Populates Screen::match_stats from a match of ground-truth leaves against
// a detection set. mean_score averages over all annotated leaves, counting
// unmatched ones as zero.
ScreenMatchStats compute_match_stats(const Screen& screen,
                                     const std::vector<Element>& detections,
                                     double threshold = 0.5);

}  // namespace uihier
