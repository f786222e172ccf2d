#pragma once

#include "climb/engine.hpp"

#include <filesystem>
#include <memory>
#include <string>

namespace climb {

/// Whole file as a string; throws std::runtime_error if it cannot be read.
std::string read_text_file(const std::filesystem::path& path);

/// Loads and cross-validates a level, a dialogue script and tunables.
/// An empty tunables path means the built-in defaults.
std::shared_ptr<const Assets> load_assets(const std::filesystem::path& level_path,
                                          const std::filesystem::path& script_path,
                                          const std::filesystem::path& tunables_path = {});

}  // namespace climb
