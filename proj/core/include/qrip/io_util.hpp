// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <string>

namespace qrip {

/// Round-trip decimal formatting ("%.17g"); keeps CSV output byte-stable.
std::string format_double(double v);

/// Opens for binary writing, throwing std::runtime_error on failure.
std::ofstream open_output(const std::filesystem::path& path);

/// FNV-1a 64-bit hash of a byte string.
std::uint64_t fnv1a(const std::string& bytes);

/// FNV-1a 64-bit hash of a file's contents, formatted as "fnv1a:<16 hex>".
std::string file_checksum(const std::filesystem::path& path);

}  // namespace qrip
