#include "uihier/matching.hpp"

#include <algorithm>
#include <limits>

namespace uihier {

std::map<std::string, std::string> Correspondence::left_to_right() const {
  std::map<std::string, std::string> m;
  for (const auto& p : pairs) m[p.left] = p.right;
  return m;
}

std::map<std::string, std::string> Correspondence::right_to_left() const {
  std::map<std::string, std::string> m;
  for (const auto& p : pairs) m[p.right] = p.left;
  return m;
}

double iou(const BoundingBox& a, const BoundingBox& b) {
  double ix = std::min(a.x_max, b.x_max) - std::max(a.x_min, b.x_min);
  double iy = std::min(a.y_max, b.y_max) - std::max(a.y_min, b.y_min);
  if (ix <= 0 || iy <= 0) return 0.0;
  double inter = ix * iy;
  double uni = a.area() + b.area() - inter;
  return uni > 0 ? inter / uni : 0.0;
}

std::vector<int> max_weight_assignment(const std::vector<std::vector<double>>& weights) {
  const int n = static_cast<int>(weights.size());
  if (n == 0) return {};
  const int m = static_cast<int>(weights[0].size());
  if (m == 0) return std::vector<int>(n, -1);
  const int size = std::max(n, m);
  constexpr double kInf = std::numeric_limits<double>::infinity();

  // minimize cost = -weight on a square matrix padded with zeros
  std::vector<std::vector<double>> a(size + 1, std::vector<double>(size + 1, 0.0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < m; ++j) a[i + 1][j + 1] = -weights[i][j];

  std::vector<double> u(size + 1, 0.0), v(size + 1, 0.0);
  std::vector<int> p(size + 1, 0), way(size + 1, 0);
  for (int i = 1; i <= size; ++i) {
    p[0] = i;
    int j0 = 0;
    std::vector<double> minv(size + 1, kInf);
    std::vector<char> used(size + 1, 0);
    do {
      used[j0] = 1;
      int i0 = p[j0], j1 = 0;
      double delta = kInf;
      for (int j = 1; j <= size; ++j) {
        if (used[j]) continue;
        double cur = a[i0][j] - u[i0] - v[j];
        if (cur < minv[j]) {
          minv[j] = cur;
          way[j] = j0;
        }
        if (minv[j] < delta) {
          delta = minv[j];
          j1 = j;
        }
      }
      for (int j = 0; j <= size; ++j) {
        if (used[j]) {
          u[p[j]] += delta;
          v[j] -= delta;
        } else {
          minv[j] -= delta;
        }
      }
      j0 = j1;
    } while (p[j0] != 0);
    do {
      int j1 = way[j0];
      p[j0] = p[j1];
      j0 = j1;
    } while (j0);
  }

  std::vector<int> result(n, -1);
  for (int j = 1; j <= size; ++j)
    if (p[j] >= 1 && p[j] <= n && j <= m) result[p[j] - 1] = j - 1;
  return result;
}

namespace {

Correspondence assignment_to_correspondence(const std::vector<std::string>& left_ids,
                                            const std::vector<std::string>& right_ids,
                                            const std::vector<std::vector<double>>& weights,
                                            const std::vector<int>& assignment,
                                            double threshold) {
  Correspondence c;
  std::set<std::string> matched_right;
  for (std::size_t i = 0; i < left_ids.size(); ++i) {
    int j = assignment.empty() ? -1 : assignment[i];
    double score = j >= 0 ? weights[i][j] : 0.0;
    if (j >= 0 && score >= threshold && score > 0.0) {
      c.pairs.push_back({left_ids[i], right_ids[j], score});
      matched_right.insert(right_ids[j]);
    } else {
      c.unmatched_left.insert(left_ids[i]);
    }
  }
  for (const auto& r : right_ids)
    if (!matched_right.count(r)) c.unmatched_right.insert(r);
  return c;
}

}  // namespace

Correspondence match_elements(const std::vector<Element>& left,
                              const std::vector<Element>& right, double threshold) {
  if (threshold <= 0.0 || threshold > 1.0)
    throw std::invalid_argument("threshold must be in (0,1]");
  std::vector<std::string> lids, rids;
  for (const auto& e : left) lids.push_back(e.id);
  for (const auto& e : right) rids.push_back(e.id);
  std::vector<std::vector<double>> w(left.size(), std::vector<double>(right.size(), 0.0));
  for (std::size_t i = 0; i < left.size(); ++i)
    for (std::size_t j = 0; j < right.size(); ++j)
      w[i][j] = iou(left[i].bounds, right[j].bounds);
  return assignment_to_correspondence(lids, rids, w, max_weight_assignment(w), threshold);
}

Correspondence match_containers(const HierarchyTree& gt, const HierarchyTree& pred,
                                const Correspondence& leaf_corr, double threshold) {
  std::vector<std::string> gids = gt.container_ids();
  std::vector<std::string> pids = pred.container_ids();
  auto right_to_left = leaf_corr.right_to_left();

  // descendant leaf-id sets in ground-truth id space; unmatched predicted
  // leaves keep a distinct tag so they enlarge the union
  auto gt_set = [&](const std::string& id) {
    std::set<std::string> s;
    for (const auto& l : descendant_leaves(gt, id)) s.insert("g:" + l);
    return s;
  };
  auto pred_set = [&](const std::string& id) {
    std::set<std::string> s;
    for (const auto& l : descendant_leaves(pred, id)) {
      auto it = right_to_left.find(l);
      s.insert(it != right_to_left.end() ? "g:" + it->second : "p:" + l);
    }
    return s;
  };

  std::vector<std::set<std::string>> gsets, psets;
  for (const auto& id : gids) gsets.push_back(gt_set(id));
  for (const auto& id : pids) psets.push_back(pred_set(id));

  std::vector<std::vector<double>> w(gids.size(), std::vector<double>(pids.size(), 0.0));
  for (std::size_t i = 0; i < gids.size(); ++i) {
    for (std::size_t j = 0; j < pids.size(); ++j) {
      std::vector<std::string> inter;
      std::set_intersection(gsets[i].begin(), gsets[i].end(), psets[j].begin(), psets[j].end(),
                            std::back_inserter(inter));
      std::size_t uni = gsets[i].size() + psets[j].size() - inter.size();
      w[i][j] = uni > 0 ? static_cast<double>(inter.size()) / static_cast<double>(uni) : 0.0;
    }
  }
  return assignment_to_correspondence(gids, pids, w, max_weight_assignment(w), threshold);
}

std::vector<Screen> filter_dataset(const std::vector<Screen>& screens, FilterRule rule) {
  std::vector<Screen> kept;
  for (const auto& s : screens) {
    if (!s.match_stats)
      throw std::invalid_argument("screen lacks match metadata: " + s.screen_id +
                                  " (run the node-correspondence step first)");
    const auto& m = *s.match_stats;
    if (m.annotated <= 0)
      throw std::invalid_argument("screen has no annotated leaves: " + s.screen_id);
    bool keep = false;
    switch (rule) {
      case FilterRule::AMP80:
        keep = static_cast<double>(m.matched) / m.annotated >= 0.80;
        break;
      case FilterRule::RICO_mean08:
        keep = m.mean_score > 0.8;  // strict
        break;
    }
    if (keep) kept.push_back(s);
  }
  return kept;
}

ScreenMatchStats compute_match_stats(const Screen& screen,
                                     const std::vector<Element>& detections, double threshold) {
  if (!screen.ground_truth)
    throw std::invalid_argument("screen has no ground truth: " + screen.screen_id);
  std::vector<Element> annotated;
  for (const auto& id : screen.ground_truth->leaf_ids()) annotated.push_back(screen.element(id));
  Correspondence c = match_elements(annotated, detections, threshold);
  ScreenMatchStats stats;
  stats.annotated = static_cast<int>(annotated.size());
  stats.matched = static_cast<int>(c.pairs.size());
  double total = 0.0;
  for (const auto& p : c.pairs) total += p.score;
  stats.mean_score = stats.annotated > 0 ? total / stats.annotated : 0.0;
  return stats;
}

}  // namespace uihier
