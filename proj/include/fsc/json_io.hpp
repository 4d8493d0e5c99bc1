#ifndef FSC_JSON_IO_HPP
#define FSC_JSON_IO_HPP

#include <map>
#include <string>

#include <json.hpp>

#include "fsc/certify.hpp"
#include "fsc/classical.hpp"
#include "fsc/fock.hpp"

namespace fsc::io {

// Canonical JSON forms for the on-disk formats. Field order is fixed, files
// are UTF-8 and newline-terminated, and unknown fields are rejected on read,
// so identical inputs always serialize to identical bytes.

using ojson = nlohmann::ordered_json;

ojson code_to_json(const ClassicalCode& code);
ClassicalCode code_from_json(const nlohmann::json& j);

ojson fock_to_json(const FockCode& fc);
FockCode fock_from_json(const nlohmann::json& j);

ojson pi_to_json(const PiDescriptor& pi);
PiDescriptor pi_from_json(const nlohmann::json& j);

// input_digests: file label -> sha256 hex of the input bytes.
ojson cert_report_to_json(const cert::CertReport& report,
                          const std::map<std::string, std::string>& input_digests);

std::string dump(const ojson& j);  // 2-space indent plus trailing newline

void write_text_file(const std::string& path, const std::string& bytes);
std::string read_text_file(const std::string& path);

}  // namespace fsc::io

#endif
