#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace msm {

/// Fixed-length vector over {0,1}. Used both for sensing actions (bit i = 1
/// means sensor i observes its region) and for detection estimates (bit i = 1
/// means component i is reported).
class BitVector {
public:
    BitVector() = default;
    explicit BitVector(std::vector<bool> bits) : bits_(std::move(bits)) {}

    /// Builds the vector whose bits spell `index` in binary, most significant
    /// bit first. Enumerating index = 0 .. 2^size - 1 therefore visits bit
    /// vectors in lexicographic order ([0,0] < [0,1] < [1,0] < [1,1]).
    static BitVector from_index(std::uint64_t index, std::size_t size);

    [[nodiscard]] std::size_t size() const noexcept { return bits_.size(); }
    [[nodiscard]] bool empty() const noexcept { return bits_.empty(); }
    [[nodiscard]] bool operator[](std::size_t i) const { return bits_[i]; }

    /// Number of set bits.
    [[nodiscard]] std::size_t count() const noexcept;

    /// Inverse of from_index.
    [[nodiscard]] std::uint64_t to_index() const noexcept;

    /// Compact form, e.g. "101". Empty vector renders as "".
    [[nodiscard]] std::string to_string() const;

    [[nodiscard]] const std::vector<bool>& bits() const noexcept { return bits_; }

    friend bool operator==(const BitVector&, const BitVector&) = default;

private:
    std::vector<bool> bits_;
};

/// Lexicographic order with 0 < 1, comparing bit by bit from the front.
[[nodiscard]] bool lex_less(const BitVector& a, const BitVector& b);

} // namespace msm
