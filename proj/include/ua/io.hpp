#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include "ua/free_set.hpp"
#include "ua/operation.hpp"
#include "ua/set_family.hpp"

namespace ua {

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

/* FNV-1a over raw bytes; reports show it as a 16-digit hex digest. */
std::uint64_t fnv1a64(std::string_view bytes);
std::string hex_digest(std::uint64_t value);

/*
 * Algebra files are JSON objects {"carrier": n, "operations": [...]} where
 * each operation is {"name", "support", "table"}; table entries follow the
 * first-coordinate-most-significant convention of Operation.  Parse errors
 * and validation failures surface as std::runtime_error with context.
 */
FiniteAlgebra parse_algebra_json(const std::string& text);
FiniteAlgebra load_algebra_json(const std::string& path);
std::string algebra_to_json(const FiniteAlgebra& a);

/* Families travel as one 0/1 line per member, all lines equally long. */
SubsetFamily parse_family_lines(const std::string& text);
SubsetFamily load_family_lines(const std::string& path);
std::string family_to_lines(const SubsetFamily& f);

/*
 * Certificates are line-oriented text with a leading "marczewski-cert/1"
 * version line; all numbers are decimal, enumeration order fixed, so a
 * rebuild writes byte-identical output.
 */
std::string certificate_to_text(const FreeSetCertificate& c);
FreeSetCertificate parse_certificate_text(const std::string& text);
FreeSetCertificate load_certificate(const std::string& path);

}  // namespace ua
