#pragma once

#include <string>

#include <json.hpp>

namespace occ {

using ReportJson = nlohmann::ordered_json;

// Machine-readable command reports. Deterministic: no timestamps, canonical
// serialization, FNV-1a digest over the dumped JSON.
class Report {
 public:
  explicit Report(std::string command);

  ReportJson& body() { return j_; }
  const ReportJson& body() const { return j_; }

  // 64-bit FNV-1a over the canonical dump (digest field excluded).
  std::string digest() const;
  // Full JSON including the digest field.
  std::string to_json() const;

 private:
  ReportJson j_;
};

}  // namespace occ
