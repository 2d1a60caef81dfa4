#include "uihier/json_io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace uihier {

using nlohmann::json;

json tree_to_json(const HierarchyTree& tree) {
  json nodes = json::array();
  for (const auto& [id, n] : tree.nodes) {
    json jn;
    jn["id"] = id;
    jn["kind"] = n.is_leaf() ? "leaf" : "container";
    if (n.label) jn["label"] = *n.label;
    jn["children"] = n.children;
    nodes.push_back(jn);
  }
  return json{{"root", tree.root}, {"nodes", nodes}};
}

HierarchyTree tree_from_json(const json& j) {
  HierarchyTree t;
  t.root = j.at("root").get<std::string>();
  for (const auto& jn : j.at("nodes")) {
    HierarchyNode n;
    n.id = jn.at("id").get<std::string>();
    std::string kind = jn.at("kind").get<std::string>();
    if (kind == "leaf")
      n.kind = NodeKind::Leaf;
    else if (kind == "container")
      n.kind = NodeKind::Container;
    else
      throw std::invalid_argument("unknown node kind: " + kind);
    if (jn.contains("label") && !jn.at("label").is_null())
      n.label = jn.at("label").get<std::string>();
    if (jn.contains("children")) n.children = jn.at("children").get<std::vector<std::string>>();
    if (n.is_leaf() && !n.children.empty())
      throw std::invalid_argument("leaf node with children in input: " + n.id);
    t.nodes[n.id] = n;
  }
  return t;
}

json screen_to_json(const Screen& screen) {
  json elements = json::array();
  for (const auto& e : screen.elements) {
    json je;
    je["id"] = e.id;
    je["class"] = e.class_label;
    je["bounds"] = {e.bounds.x_min, e.bounds.y_min, e.bounds.x_max, e.bounds.y_max};
    if (e.text) je["text"] = *e.text;
    je["confidence"] = e.confidence;
    elements.push_back(je);
  }
  json j;
  j["screen_id"] = screen.screen_id;
  j["width"] = screen.width;
  j["height"] = screen.height;
  j["elements"] = elements;
  if (screen.ground_truth) j["hierarchy"] = tree_to_json(*screen.ground_truth);
  if (screen.match_stats) {
    j["match_stats"] = {{"annotated", screen.match_stats->annotated},
                        {"matched", screen.match_stats->matched},
                        {"mean_score", screen.match_stats->mean_score}};
  }
  return j;
}

Screen screen_from_json(const json& j, const std::vector<std::string>& vocabulary) {
  Screen s;
  s.screen_id = j.at("screen_id").get<std::string>();
  s.width = j.at("width").get<double>();
  s.height = j.at("height").get<double>();
  for (const auto& je : j.at("elements")) {
    Element e;
    e.id = je.at("id").get<std::string>();
    e.class_label = je.at("class").get<std::string>();
    auto b = je.at("bounds");
    e.bounds = {b.at(0).get<double>(), b.at(1).get<double>(), b.at(2).get<double>(),
                b.at(3).get<double>()};
    if (je.contains("text") && !je.at("text").is_null())
      e.text = je.at("text").get<std::string>();
    if (je.contains("confidence")) e.confidence = je.at("confidence").get<double>();

    if (!e.bounds.valid())
      throw std::invalid_argument(s.screen_id + ": invalid bounds for element " + e.id);
    if (e.bounds.x_min < 0 || e.bounds.y_min < 0 || e.bounds.x_max > s.width ||
        e.bounds.y_max > s.height)
      throw std::invalid_argument(s.screen_id + ": element out of screen bounds: " + e.id);
    if (std::find(vocabulary.begin(), vocabulary.end(), e.class_label) == vocabulary.end())
      throw std::invalid_argument(s.screen_id + ": class not in vocabulary: " + e.class_label);
    s.elements.push_back(e);
  }
  if (j.contains("hierarchy") && !j.at("hierarchy").is_null()) {
    s.ground_truth = tree_from_json(j.at("hierarchy"));
    // detected elements must appear only as leaves
    for (const auto& [id, n] : s.ground_truth->nodes) {
      bool is_element = std::any_of(s.elements.begin(), s.elements.end(),
                                    [&](const Element& e) { return e.id == id; });
      if (is_element && !n.is_leaf())
        throw std::invalid_argument(s.screen_id + ": element appears as internal node: " + id);
    }
    s.ground_truth->validate(s.elements);
  }
  if (j.contains("match_stats") && !j.at("match_stats").is_null()) {
    const auto& m = j.at("match_stats");
    s.match_stats = ScreenMatchStats{m.at("annotated").get<int>(), m.at("matched").get<int>(),
                                     m.at("mean_score").get<double>()};
  }
  return s;
}

void write_json_file(const std::filesystem::path& path, const json& j) {
  std::ofstream f(path);
  if (!f) throw std::runtime_error("cannot open for writing: " + path.string());
  f << j.dump(2) << "\n";
}

json read_json_file(const std::filesystem::path& path) {
  std::ifstream f(path);
  if (!f) throw std::runtime_error("cannot open: " + path.string());
  return json::parse(f);
}

void write_text_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream f(path);
  if (!f) throw std::runtime_error("cannot open for writing: " + path.string());
  f << text;
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream f(path);
  if (!f) throw std::runtime_error("cannot open: " + path.string());
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

}  // namespace uihier
