#include "stringadp/instance_io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace stringadp {

namespace {

using nlohmann::json;

template <typename T>
T require_field(const json& j, const char* name) {
    if (!j.contains(name)) throw ParseError(std::string("missing field: ") + name);
    try {
        return j.at(name).get<T>();
    } catch (const json::exception& e) {
        throw ParseError(std::string("field ") + name + ": " + e.what());
    }
}

} // namespace

InstanceFile parse_instance(const std::string& json_text) {
    json j;
    try {
        j = json::parse(json_text);
    } catch (const json::exception& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }

    const int version = require_field<int>(j, "schema_version");
    if (version != kInstanceSchemaVersion) {
        throw ParseError("unsupported schema_version " + std::to_string(version));
    }

    InstanceFile file;
    file.instance.state_count = require_field<int>(j, "state_count");
    file.instance.action_count = require_field<int>(j, "action_count");
    file.instance.horizon = require_field<int>(j, "horizon");
    file.instance.initial_state = require_field<int>(j, "initial_state");
    file.instance.rewards = require_field<std::vector<std::vector<std::vector<double>>>>(j, "rewards");
    file.instance.transitions = require_field<std::vector<std::vector<std::vector<int>>>>(j, "transitions");
    file.instance.validate();

    if (j.contains("action_names")) {
        file.action_names = require_field<std::vector<std::string>>(j, "action_names");
        if (static_cast<int>(file.action_names->size()) != file.instance.action_count) {
            throw ValidationError("action_names: expected " + std::to_string(file.instance.action_count) +
                                  " entries, got " + std::to_string(file.action_names->size()));
        }
    }
    if (j.contains("vtg_table")) {
        auto table = require_field<std::vector<std::vector<std::vector<double>>>>(j, "vtg_table");
        if (static_cast<int>(table.size()) != file.instance.horizon - 1) {
            throw ValidationError("vtg_table: expected " + std::to_string(file.instance.horizon - 1) +
                                  " stages, got " + std::to_string(table.size()));
        }
        for (std::size_t k = 0; k < table.size(); ++k) {
            if (static_cast<int>(table[k].size()) != file.instance.state_count) {
                throw ValidationError("vtg_table[" + std::to_string(k) + "]: wrong state dimension");
            }
            for (const auto& row : table[k]) {
                if (static_cast<int>(row.size()) != file.instance.action_count) {
                    throw ValidationError("vtg_table[" + std::to_string(k) + "]: wrong action dimension");
                }
            }
        }
        file.vtg_table = std::move(table);
    }
    return file;
}

InstanceFile load_instance_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open instance file: " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_instance(buffer.str());
}

ControlInstance load_instance(const std::string& path) { return load_instance_file(path).instance; }

std::string serialize_instance(const InstanceFile& file) {
    json j;
    j["schema_version"] = kInstanceSchemaVersion;
    j["state_count"] = file.instance.state_count;
    j["action_count"] = file.instance.action_count;
    j["horizon"] = file.instance.horizon;
    j["initial_state"] = file.instance.initial_state;
    j["rewards"] = file.instance.rewards;
    j["transitions"] = file.instance.transitions;
    if (file.action_names) j["action_names"] = *file.action_names;
    if (file.vtg_table) j["vtg_table"] = *file.vtg_table;
    return j.dump(2) + "\n";
}

void save_instance(const InstanceFile& file, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw ParseError("cannot open file for writing: " + path);
    out << serialize_instance(file);
}

} // namespace stringadp
