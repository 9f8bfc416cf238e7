#ifndef STRINGADP_INSTANCE_IO_HPP
#define STRINGADP_INSTANCE_IO_HPP

#include <optional>
#include <string>

#include "stringadp/control.hpp"

namespace stringadp {

inline constexpr int kInstanceSchemaVersion = 1;

/// On-disk instance: JSON with explicit schema_version and row-major
/// [stage][state][action] arrays. `action_names` is cosmetic and
/// `vtg_table` optionally carries a table approximator for stages
/// 1..horizon-1.
struct InstanceFile {
    ControlInstance instance;
    std::optional<std::vector<std::string>> action_names;
    std::optional<std::vector<std::vector<std::vector<double>>>> vtg_table;
};

InstanceFile parse_instance(const std::string& json_text);
InstanceFile load_instance_file(const std::string& path);
ControlInstance load_instance(const std::string& path);

std::string serialize_instance(const InstanceFile& file);
void save_instance(const InstanceFile& file, const std::string& path);

} // namespace stringadp

#endif
