#pragma once

#include <optional>
#include <ostream>
#include <string>

#include "hessring/hessenberg.hpp"

namespace hessring {

struct CliConfig {
  std::optional<int> n;
  std::optional<HessFn> h;
  std::string suite = "all";
  std::string format = "text";  // text | json | csv
  std::optional<int> max_degree;
  int jobs = 0;
};

// Exit codes: 0 all-pass, 1 any-fail, 2 usage error.
int cmd_verify(const CliConfig& cfg, std::ostream& out);
int cmd_table(const CliConfig& cfg, const std::string& kind, std::ostream& out);
int cmd_xg(const CliConfig& cfg, std::ostream& out);
int cmd_gkm_export(const CliConfig& cfg, std::ostream& out);

}  // namespace hessring
