#include "hessring/report.hpp"

#include <json.hpp>
#include <sstream>

namespace hessring {

long long Report::count(const std::string& status) const {
  long long c = 0;
  for (const auto& rec : checks)
    if (rec.status == status) ++c;
  return c;
}

std::string report_to_json(const Report& r) {
  nlohmann::ordered_json j;
  j["schema"] = 1;
  j["suite"] = r.suite;
  j["n"] = r.n;
  if (r.h.empty())
    j["h"] = nullptr;
  else
    j["h"] = r.h;
  j["checks"] = nlohmann::ordered_json::array();
  for (const auto& rec : r.checks) {
    nlohmann::ordered_json c;
    c["id"] = rec.id;
    c["status"] = rec.status;
    if (rec.witness.empty())
      c["witness"] = nullptr;
    else
      c["witness"] = rec.witness;
    c["elapsed_ms"] = rec.elapsed_ms;
    j["checks"].push_back(std::move(c));
  }
  j["summary"] = {{"pass", r.count("pass")},
                  {"fail", r.count("fail")},
                  {"skipped", r.count("skipped")}};
  return j.dump(2) + "\n";
}

std::string csv_quote(const std::string& field) {
  bool needs = field.find_first_of(",\"\r\n") != std::string::npos;
  if (!needs) return field;
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out += "\"\"";
    else out += c;
  }
  return out + "\"";
}

std::string report_to_csv(const Report& r) {
  std::ostringstream os;
  os << "suite,id,status,witness,elapsed_ms\r\n";
  for (const auto& rec : r.checks)
    os << csv_quote(r.suite) << ',' << csv_quote(rec.id) << ',' << csv_quote(rec.status)
       << ',' << csv_quote(rec.witness) << ',' << rec.elapsed_ms << "\r\n";
  return os.str();
}

std::string report_to_text(const Report& r) {
  std::ostringstream os;
  os << "suite " << r.suite << " (n=" << r.n;
  if (!r.h.empty()) os << ", h=" << r.h;
  os << ")\n";
  for (const auto& rec : r.checks) {
    os << "  [" << rec.status << "] " << rec.id;
    if (!rec.witness.empty()) os << "  -- " << rec.witness;
    os << "\n";
    if (!rec.detail.empty()) os << "      " << rec.detail << "\n";
  }
  os << "summary: " << r.count("pass") << " pass, " << r.count("fail") << " fail, "
     << r.count("skipped") << " skipped\n";
  return os.str();
}

}  // namespace hessring
