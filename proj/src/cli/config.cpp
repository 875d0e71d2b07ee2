#include <fstream>
#include <set>
#include <sstream>

#include "wqed/cli/app.hpp"

namespace wqed::cli {

namespace {

std::string trim(const std::string& s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::vector<std::pair<std::string, std::string>> read_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read config file: " + path);
  std::vector<std::pair<std::string, std::string>> entries;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw UsageError(path + ":" + std::to_string(line_no) + ": expected key=value");
    }
    std::string key = trim(line.substr(0, eq));
    if (key.rfind("--", 0) == 0) key.erase(0, 2);
    if (key.empty() || key == "config") {
      throw UsageError(path + ":" + std::to_string(line_no) + ": invalid key");
    }
    entries.emplace_back(key, trim(line.substr(eq + 1)));
  }
  return entries;
}

}  // namespace

std::vector<std::string> merge_config(std::vector<std::string> args) {
  std::string config_path;
  std::vector<std::string> rest;
  for (std::size_t i = 0; i < args.size(); ++i) {
    const std::string& a = args[i];
    if (a == "--config") {
      if (i + 1 >= args.size()) throw UsageError("--config requires a file");
      config_path = args[++i];
    } else if (a.rfind("--config=", 0) == 0) {
      config_path = a.substr(9);
    } else {
      rest.push_back(a);
    }
  }
  if (config_path.empty()) return rest;

  std::set<std::string> given;
  for (const auto& a : rest) {
    if (a.rfind("--", 0) != 0 || a.size() == 2) continue;
    given.insert(a.substr(2, a.find('=') == std::string::npos ? std::string::npos
                                                              : a.find('=') - 2));
  }
  for (const auto& [key, value] : read_config(config_path)) {
    if (given.count(key)) continue;
    if (value == "true") {
      rest.push_back("--" + key);
      continue;
    }
    if (value == "false") continue;
    rest.push_back("--" + key);
    std::istringstream words(value);
    std::string word;
    while (words >> word) rest.push_back(word);
  }
  return rest;
}

}  // namespace wqed::cli
