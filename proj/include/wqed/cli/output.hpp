#pragma once

#include <string>
#include <utility>
#include <vector>

namespace wqed::cli {

/// Resolved configuration as ordered key/value pairs, echoed into every output.
using ConfigEcho = std::vector<std::pair<std::string, std::string>>;

std::string artifact_version();

/// "%.10g" formatting used for all CSV numbers.
std::string fmt_num(double v);
/// Shortest round-trip formatting used for echoed inputs.
std::string fmt_exact(double v);

/// '#'-prefixed header: version line, then one "key=value" line per entry.
std::string comment_header(const std::string& command, const ConfigEcho& echo);

/// Writes `content` to `path` through a temporary file and rename.
void write_atomic(const std::string& path, const std::string& content);

/// `path` with its extension replaced by `suffix` (e.g. "_state12.csv").
std::string sibling_path(const std::string& path, const std::string& suffix);

}  // namespace wqed::cli
