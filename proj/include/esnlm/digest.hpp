#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <string>

namespace esnlm {

/// Incremental SHA-256 wrapper around OpenSSL's EVP interface.
class Sha256 {
public:
    Sha256();
    ~Sha256();
    Sha256(const Sha256&) = delete;
    Sha256& operator=(const Sha256&) = delete;

    void update(const void* data, std::size_t size);
    std::array<std::uint8_t, 32> finish();

private:
    void* ctx_;
};

std::string to_hex(const std::array<std::uint8_t, 32>& digest);

std::string sha256_hex(const void* data, std::size_t size);
std::string sha256_file_hex(const std::filesystem::path& path);

} // namespace esnlm
