#pragma once

#include <string>

#include "occert/certificates.hpp"

namespace occ {

// Versioned JSON certificate files, bit-exact round-trippable through the
// canonical word/field serializations.
struct CertificateFile {
  std::string kind;  // "relator_product" or "commutator_product"
  Presentation presentation;
  RelatorProduct relator_product;
  CommutatorProduct commutator_product;
};

std::string write_certificate(const Presentation& p, const RelatorProduct& rp);
std::string write_certificate(const Presentation& p, const CommutatorProduct& cp);
CertificateFile read_certificate(const std::string& json_text);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& content);

}  // namespace occ
