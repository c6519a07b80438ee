#pragma once

#include <string>
#include <vector>

namespace hessring {

struct CheckRecord {
  std::string id;
  std::string status;   // "pass" | "fail" | "skipped"
  std::string witness;  // empty = null; fail records always carry one
  long long elapsed_ms = 0;
  std::string detail;  // text-format extra line; not part of the JSON/CSV schema
};

struct Report {
  std::string suite;
  int n = 0;
  std::string h;  // empty when the run spans all of H_n
  std::vector<CheckRecord> checks;

  long long count(const std::string& status) const;
  bool all_pass() const { return count("fail") == 0; }
};

std::string report_to_json(const Report& r);
std::string report_to_csv(const Report& r);
std::string report_to_text(const Report& r);

// RFC-4180 field quoting.
std::string csv_quote(const std::string& field);

}  // namespace hessring
