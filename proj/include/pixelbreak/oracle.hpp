#pragma once

#include <atomic>
#include <cstdint>

#include "pixelbreak/image.hpp"

namespace pixelbreak {

// Chosen-plaintext boundary. Attack code sees only this interface; concrete
// oracles hold their keys privately and nothing here exposes them. Queries
// are safe to issue concurrently (the underlying encryptors are pure) and
// query_count grows by exactly one per successful query.
class EncryptionOracle {
public:
    virtual ~EncryptionOracle() = default;

    EncryptionOracle(const EncryptionOracle&) = delete;
    EncryptionOracle& operator=(const EncryptionOracle&) = delete;

    Image query(const Image& plaintext) {
        Image ciphertext = encrypt(plaintext);  // failed queries don't count
        count_.fetch_add(1, std::memory_order_relaxed);
        return ciphertext;
    }

    std::uint64_t query_count() const noexcept {
        return count_.load(std::memory_order_relaxed);
    }

protected:
    EncryptionOracle() = default;
    virtual Image encrypt(const Image& plaintext) = 0;

private:
    std::atomic<std::uint64_t> count_{0};
};

}  // namespace pixelbreak
