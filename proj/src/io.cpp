#include "slotdesign/io.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

namespace slotdesign::io {

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::Io, "cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

ModeSet parse_modes(const json& doc) {
  if (!doc.is_array()) throw Error(ErrorKind::InvalidArgument, "mode set must be a JSON array");
  std::vector<ModeStats> modes;
  try {
    for (const auto& row : doc) {
      ModeStats m;
      m.name = row.value("name", "type-" + std::to_string(modes.size() + 1));
      m.mean = row.at("mean").get<double>();
      m.std_dev = row.at("std").get<double>();
      m.semivariance = row.at("semivariance").get<double>();
      m.nominal_prob = row.at("prob").get<double>();
      modes.push_back(std::move(m));
    }
  } catch (const json::exception& e) {
    throw Error(ErrorKind::InvalidArgument, std::string("mode set: ") + e.what());
  }
  return ModeSet(std::move(modes));
}

json modes_to_json(const ModeSet& modes) {
  json out = json::array();
  for (const auto& m : modes.modes())
    out.push_back({{"name", m.name}, {"mean", m.mean}, {"std", m.std_dev}, {"semivariance", m.semivariance},
                   {"prob", m.nominal_prob}});
  return out;
}

ModeSet load_modes(const std::filesystem::path& path) {
  json doc;
  try {
    doc = json::parse(read_file(path));
  } catch (const json::parse_error& e) {
    throw Error(ErrorKind::InvalidArgument, path.string() + ": " + e.what());
  }
  return parse_modes(doc);
}

namespace {

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> out;
  std::stringstream ss(line);
  std::string cell;
  while (std::getline(ss, cell, ',')) {
    while (!cell.empty() && (cell.back() == '\r' || cell.back() == ' ')) cell.pop_back();
    out.push_back(cell);
  }
  return out;
}

double to_number(const std::string& s, int line_no) {
  try {
    std::size_t used = 0;
    const double v = std::stod(s, &used);
    if (used != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw Error(ErrorKind::InvalidArgument, "line " + std::to_string(line_no) + ": bad number '" + s + "'");
  }
}

}  // namespace

std::vector<std::vector<double>> parse_samples_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line) || split_csv_line(line) != std::vector<std::string>{"type_id", "duration_min"})
    throw Error(ErrorKind::InvalidArgument, "sample CSV must start with header type_id,duration_min");
  std::vector<std::vector<double>> out;
  int line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty() || line == "\r") continue;
    const auto cells = split_csv_line(line);
    if (cells.size() != 2) throw Error(ErrorKind::InvalidArgument, "line " + std::to_string(line_no) + ": expected 2 fields");
    const double id = to_number(cells[0], line_no);
    if (id < 1 || id != std::floor(id)) throw Error(ErrorKind::InvalidArgument, "line " + std::to_string(line_no) + ": bad type_id");
    const auto l = static_cast<std::size_t>(id) - 1;
    if (out.size() <= l) out.resize(l + 1);
    out[l].push_back(to_number(cells[1], line_no));
  }
  for (std::size_t l = 0; l < out.size(); ++l)
    if (out[l].empty()) throw Error(ErrorKind::MissingSamples, "sample CSV has no rows for type " + std::to_string(l + 1));
  return out;
}

std::vector<std::vector<double>> load_samples_csv(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::Io, "cannot open " + path.string());
  return parse_samples_csv(in);
}

void write_samples_csv(std::ostream& out, const std::vector<std::vector<double>>& per_mode) {
  out << "type_id,duration_min\n";
  const auto old = out.precision(17);
  for (std::size_t l = 0; l < per_mode.size(); ++l)
    for (double x : per_mode[l]) out << l + 1 << ',' << x << '\n';
  out.precision(old);
}

std::vector<DemandRecord> load_demand_csv(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::Io, "cannot open " + path.string());
  std::string line;
  if (!std::getline(in, line) || split_csv_line(line) != std::vector<std::string>{"date", "group_id", "count"})
    throw Error(ErrorKind::InvalidArgument, "demand CSV must start with header date,group_id,count");
  std::vector<DemandRecord> out;
  int line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty() || line == "\r") continue;
    const auto cells = split_csv_line(line);
    if (cells.size() != 3) throw Error(ErrorKind::InvalidArgument, "line " + std::to_string(line_no) + ": expected 3 fields");
    const double g = to_number(cells[1], line_no), c = to_number(cells[2], line_no);
    if (g < 1 || c < 0) throw Error(ErrorKind::InvalidArgument, "line " + std::to_string(line_no) + ": bad group or count");
    out.push_back({cells[0], static_cast<int>(g) - 1, static_cast<int>(c)});
  }
  return out;
}

json partition_to_json(const Partition& partition) {
  json out = json::array();
  for (const auto& g : partition.groups()) {
    json members = json::array();
    for (int l : g) members.push_back(l + 1);
    out.push_back(members);
  }
  return out;
}

Partition partition_from_json(const json& doc, std::size_t mode_count) {
  std::vector<Group> groups;
  try {
    for (const auto& g : doc) {
      Group members;
      for (const auto& l : g) members.push_back(l.get<int>() - 1);
      groups.push_back(std::move(members));
    }
  } catch (const json::exception& e) {
    throw Error(ErrorKind::InvalidArgument, std::string("partition: ") + e.what());
  }
  return Partition(std::move(groups), mode_count);
}

json solution_to_json(const Solution& solution) {
  json durations = json::array(), per_group = json::array();
  for (std::size_t g = 0; g < solution.groups.size(); ++g) {
    const auto& gs = solution.groups[g];
    durations.push_back(gs.duration);
    per_group.push_back({{"members", partition_to_json(solution.partition)[g]},
                         {"duration", gs.duration},
                         {"worst_cost", gs.worst_cost},
                         {"lower_bound", gs.bounds.lower},
                         {"upper_bound", gs.bounds.upper},
                         {"interval_id", gs.interval_id}});
  }
  return {{"partition", partition_to_json(solution.partition)},
          {"durations", durations},
          {"objective", solution.objective},
          {"per_group", per_group}};
}

}  // namespace slotdesign::io
