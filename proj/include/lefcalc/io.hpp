#pragma once

#include <nlohmann/json_fwd.hpp>
#include <stdexcept>
#include <string>

#include "lefcalc/planner.hpp"

namespace lefcalc {

// Malformed input document; carries 1-based line/column of the failure.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ", column " +
                           std::to_string(column) + ": " + what),
        line_(line),
        column_(column) {}

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_, column_;
};

nlohmann::json parse_document(const std::string& text);

nlohmann::json system_to_json(const GeneratorSystem& sys);
GeneratorSystem system_from_json(const nlohmann::json& j);

// Fibration file: base, fiber, system (inline or builtin "torus" /
// "humphries"), ordered cycles by name or class vector, label.
nlohmann::json fibration_to_json(const LefschetzData& lf);
LefschetzData fibration_from_json(const nlohmann::json& j);

// Certificate file mirroring EmbeddingCertificate; fidelity is always
// "homology-level".
nlohmann::json certificate_to_json(const EmbeddingCertificate& cert);
EmbeddingCertificate certificate_from_json(const nlohmann::json& j);

// Canonical bytes: sorted keys, two-space indent, trailing newline.
std::string dump_document(const nlohmann::json& j);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

}  // namespace lefcalc
