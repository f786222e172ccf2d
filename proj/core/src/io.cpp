#include "climb/io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace climb {

std::string read_text_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::shared_ptr<const Assets> load_assets(const std::filesystem::path& level_path,
                                          const std::filesystem::path& script_path,
                                          const std::filesystem::path& tunables_path) {
    LevelDef level = parse_level(read_text_file(level_path));
    DialogueScript script = load_script(read_text_file(script_path));
    Tunables tunables = tunables_path.empty() ? Tunables{} : parse_tunables(read_text_file(tunables_path));
    return make_assets(std::move(level), std::move(script), tunables);
}

}  // namespace climb
