#pragma once

#include <bit>
#include <cstdint>
#include <cstdio>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

#include "util/errors.hpp"

namespace pvu {

static_assert(std::endian::native == std::endian::little,
              "file formats are little-endian; big-endian hosts unsupported");

inline void write_bytes(std::ostream& os, const void* p, std::size_t n) {
    os.write(static_cast<const char*>(p), std::streamsize(n));
    if (!os) throw DataError("write failed");
}

inline void read_bytes(std::istream& is, void* p, std::size_t n) {
    is.read(static_cast<char*>(p), std::streamsize(n));
    if (std::size_t(is.gcount()) != n) throw DataError("unexpected end of file");
}

template <class T>
void write_pod(std::ostream& os, const T& v) {
    write_bytes(os, &v, sizeof(T));
}

template <class T>
T read_pod(std::istream& is) {
    T v;
    read_bytes(is, &v, sizeof(T));
    return v;
}

inline void write_string(std::ostream& os, const std::string& s) {
    write_pod<uint32_t>(os, uint32_t(s.size()));
    write_bytes(os, s.data(), s.size());
}

inline std::string read_string(std::istream& is, uint32_t max_len = 1u << 24) {
    const uint32_t n = read_pod<uint32_t>(is);
    if (n > max_len) throw DataError("string length out of range");
    std::string s(n, '\0');
    read_bytes(is, s.data(), n);
    return s;
}

// Write via temp file + rename so readers never observe a partial file.
template <class Fn>
void atomic_write_file(const std::filesystem::path& path, Fn&& writer) {
    const std::filesystem::path tmp = path.string() + ".tmp";
    {
        std::ofstream os(tmp, std::ios::binary | std::ios::trunc);
        if (!os) throw DataError("cannot open for writing: " + tmp.string());
        writer(os);
        os.flush();
        if (!os) throw DataError("write failed: " + tmp.string());
    }
    std::filesystem::rename(tmp, path);
}

inline std::vector<char> read_file_bytes(const std::filesystem::path& path) {
    std::ifstream is(path, std::ios::binary);
    if (!is) throw DataError("cannot open: " + path.string());
    is.seekg(0, std::ios::end);
    std::vector<char> buf(std::size_t(is.tellg()));
    is.seekg(0);
    read_bytes(is, buf.data(), buf.size());
    return buf;
}

}  // namespace pvu
