#pragma once

#include <filesystem>
#include <string>

#include "uihier/core.hpp"

#include "json.hpp"

namespace uihier {

// Screen interchange format. "hierarchy" is absent on unlabeled screens.
// Leaf nodes carry the element id they reference as their node id.
nlohmann::json screen_to_json(const Screen& screen);
Screen screen_from_json(const nlohmann::json& j,
                        const std::vector<std::string>& vocabulary = default_vocabulary());

nlohmann::json tree_to_json(const HierarchyTree& tree);
HierarchyTree tree_from_json(const nlohmann::json& j);

void write_json_file(const std::filesystem::path& path, const nlohmann::json& j);
nlohmann::json read_json_file(const std::filesystem::path& path);

void write_text_file(const std::filesystem::path& path, const std::string& text);
std::string read_text_file(const std::filesystem::path& path);

}  // namespace uihier
