#include "occert/report.hpp"

#include <cstdint>
#include <iomanip>
#include <sstream>

namespace occ {

Report::Report(std::string command) {
  j_["command"] = std::move(command);
  j_["version"] = "occert-v1";
}

std::string Report::digest() const {
  std::string dump = j_.dump();
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : dump) {
    h ^= c;
    h *= 1099511628211ull;
  }
  std::ostringstream ss;
  ss << std::hex << std::setw(16) << std::setfill('0') << h;
  return ss.str();
}

std::string Report::to_json() const {
  ReportJson out = j_;
  out["digest"] = digest();
  return out.dump(2) + "\n";
}

}  // namespace occ
