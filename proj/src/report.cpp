#include <sstream>

#include "json.hpp"

#include "splitov/cli.hpp"

namespace splitov::cli {

namespace {

using json = nlohmann::ordered_json;

constexpr std::string_view kTextHeader = "splitov report";

json fields_to_json(const Fields& fields) {
  json arr = json::array();
  for (const auto& [key, value] : fields) arr.push_back(json::array({key, value}));
  return arr;
}

Fields fields_from_json(const json& arr) {
  Fields fields;
  for (const auto& item : arr) {
    if (!item.is_array() || item.size() != 2) throw std::invalid_argument("malformed report field");
    fields.emplace_back(item[0].get<std::string>(), item[1].get<std::string>());
  }
  return fields;
}

void check_single_line(const std::string& s) {
  if (s.find('\n') != std::string::npos)
    throw std::invalid_argument("report values must be single lines");
}

}  // namespace

std::optional<std::string> RunReport::get(std::string_view key) const {
  for (const auto& [k, v] : outcome) {
    if (k == key) return v;
  }
  return std::nullopt;
}

std::string RunReport::render_text() const {
  std::ostringstream out;
  out << kTextHeader << '\n';
  out << "command: " << command << '\n';
  out << "version: " << version << '\n';
  out << "status: " << status << '\n';
  out << "exit: " << exit_code << '\n';
  if (nodes) out << "nodes: " << *nodes << '\n';
  if (elapsed_ns) out << "elapsed_ns: " << *elapsed_ns << '\n';
  auto section = [&](std::string_view name, const Fields& fields) {
    out << '[' << name << "]\n";
    for (const auto& [k, v] : fields) {
      check_single_line(k);
      check_single_line(v);
      if (k.find(": ") != std::string::npos) throw std::invalid_argument("report key contains ': '");
      out << k << ": " << v << '\n';
    }
  };
  section("parameters", parameters);
  section("outcome", outcome);
  return out.str();
}

RunReport RunReport::parse_text(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  if (!std::getline(in, line) || line != kTextHeader) throw std::invalid_argument("not a report");
  RunReport r;
  r.version.clear();
  Fields* section = nullptr;
  while (std::getline(in, line)) {
    if (line == "[parameters]") {
      section = &r.parameters;
      continue;
    }
    if (line == "[outcome]") {
      section = &r.outcome;
      continue;
    }
    const auto colon = line.find(": ");
    if (colon == std::string::npos) throw std::invalid_argument("malformed report line: " + line);
    std::string key = line.substr(0, colon);
    std::string value = line.substr(colon + 2);
    if (section) {
      section->emplace_back(std::move(key), std::move(value));
    } else if (key == "command") {
      r.command = value;
    } else if (key == "version") {
      r.version = value;
    } else if (key == "status") {
      r.status = value;
    } else if (key == "exit") {
      r.exit_code = std::stoi(value);
    } else if (key == "nodes") {
      r.nodes = std::stoull(value);
    } else if (key == "elapsed_ns") {
      r.elapsed_ns = std::stoull(value);
    } else {
      throw std::invalid_argument("unknown report key: " + key);
    }
  }
  return r;
}

std::string RunReport::render_json() const {
  json j;
  j["format"] = kTextHeader;
  j["command"] = command;
  j["version"] = version;
  j["status"] = status;
  j["exit"] = exit_code;
  if (nodes) j["nodes"] = *nodes;
  if (elapsed_ns) j["elapsed_ns"] = *elapsed_ns;
  j["parameters"] = fields_to_json(parameters);
  j["outcome"] = fields_to_json(outcome);
  return j.dump(2) + "\n";
}

RunReport RunReport::parse_json(std::string_view text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw std::invalid_argument(std::string("malformed report: ") + e.what());
  }
  if (!j.is_object() || j.value("format", "") != kTextHeader)
    throw std::invalid_argument("not a report");
  RunReport r;
  r.command = j.at("command").get<std::string>();
  r.version = j.at("version").get<std::string>();
  r.status = j.at("status").get<std::string>();
  r.exit_code = j.at("exit").get<int>();
  if (j.contains("nodes")) r.nodes = j["nodes"].get<std::uint64_t>();
  if (j.contains("elapsed_ns")) r.elapsed_ns = j["elapsed_ns"].get<std::uint64_t>();
  r.parameters = fields_from_json(j.at("parameters"));
  r.outcome = fields_from_json(j.at("outcome"));
  return r;
}

}  // namespace splitov::cli
