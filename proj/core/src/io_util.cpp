// SPDX-License-Identifier: Apache-2.0
#include "qrip/io_util.hpp"

#include <cstdio>
#include <sstream>
#include <stdexcept>

namespace qrip {

std::string format_double(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

std::ofstream open_output(const std::filesystem::path& path) {
    std::ofstream os(path, std::ios::binary);
    if (!os) throw std::runtime_error("cannot open output file: " + path.string());
    return os;
}

std::uint64_t fnv1a(const std::string& bytes) {
    std::uint64_t h = 0xCBF29CE484222325ULL;
    for (unsigned char byte : bytes) {
        h ^= byte;
        h *= 0x100000001B3ULL;
    }
    return h;
}

std::string file_checksum(const std::filesystem::path& path) {
    std::ifstream is(path, std::ios::binary);
    if (!is) throw std::runtime_error("cannot read file for checksum: " + path.string());
    std::ostringstream buf;
    buf << is.rdbuf();
    char out[32];
    std::snprintf(out, sizeof(out), "fnv1a:%016llx",
                  static_cast<unsigned long long>(fnv1a(buf.str())));
    return out;
}

}  // namespace qrip
