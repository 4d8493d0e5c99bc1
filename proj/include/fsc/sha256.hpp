#ifndef FSC_SHA256_HPP
#define FSC_SHA256_HPP

#include <string>

namespace fsc {

// Hex digest of the given bytes (FIPS 180-4 SHA-256). Used to stamp reports
// with the digests of their input files.
std::string sha256_hex(const std::string& bytes);

}  // namespace fsc

#endif
