#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "slotdesign/data.hpp"
#include "slotdesign/eval.hpp"
#include "slotdesign/solver.hpp"

namespace slotdesign::io {

using nlohmann::json;

std::string read_file(const std::filesystem::path& path);

/// [{"name","mean","std","semivariance","prob"}]. Feasibility is not checked here.
ModeSet parse_modes(const json& doc);
json modes_to_json(const ModeSet& modes);
ModeSet load_modes(const std::filesystem::path& path);

/// CSV with header `type_id,duration_min`; type ids are 1-based.
std::vector<std::vector<double>> parse_samples_csv(std::istream& in);
std::vector<std::vector<double>> load_samples_csv(const std::filesystem::path& path);
void write_samples_csv(std::ostream& out, const std::vector<std::vector<double>>& per_mode);

/// CSV with header `date,group_id,count`; group ids are 1-based.
std::vector<DemandRecord> load_demand_csv(const std::filesystem::path& path);

/// Group lists are 1-based in every external format.
json partition_to_json(const Partition& partition);
Partition partition_from_json(const json& doc, std::size_t mode_count);

json solution_to_json(const Solution& solution);

}  // namespace slotdesign::io
