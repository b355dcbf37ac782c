#pragma once

#include <ostream>
#include <string>
#include <vector>

// Command-line front end: one JSON document per invocation.
namespace jordkit::cli {

struct CommandInfo {
  std::string path;       // "mat det"
  std::string operation;  // "intlin::det"
};

// Every leaf subcommand and the library operation behind it.
std::vector<CommandInfo> command_registry();

// args excludes the program name. Exit codes: 0 ok, 1 domain error,
// 2 usage error.
int run(const std::vector<std::string>& args, std::ostream& out);

}  // namespace jordkit::cli
