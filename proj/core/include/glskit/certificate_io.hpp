#ifndef GLSKIT_CERTIFICATE_IO_HPP
#define GLSKIT_CERTIFICATE_IO_HPP

#include <stdexcept>
#include <string>

#include "glskit/decompose.hpp"

namespace gls {

class CertificateParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Serialized form: one JSON document with fields n, delta, t, a, b, k_t,
/// bound, and steps, where steps is an array of
/// {"vertex": ..., "degree": ..., "t_count": ..., "removed": [...]}.
/// All numbers are decimal integers.
std::string certificate_to_string(const Certificate& cert);

/// Parses and validates the serialized form. Anything structurally off
/// (missing fields, wrong types, out-of-range or duplicate vertices,
/// inconsistent n/delta/t/a/b) throws CertificateParseError.
Certificate certificate_from_string(const std::string& text);

void save_certificate_file(const std::string& path, const Certificate& cert);
Certificate load_certificate_file(const std::string& path);

}  // namespace gls

#endif  // GLSKIT_CERTIFICATE_IO_HPP
