#include "msm/bits.hpp"

#include <algorithm>
#include <stdexcept>

namespace msm {

BitVector BitVector::from_index(std::uint64_t index, std::size_t size) {
    if (size < 64 && index >> size != 0) {
        throw std::invalid_argument("BitVector::from_index: index does not fit in size bits");
    }
    std::vector<bool> bits(size);
    for (std::size_t i = 0; i < size; ++i) {
        bits[i] = (index >> (size - 1 - i)) & 1u;
    }
    return BitVector(std::move(bits));
}

std::size_t BitVector::count() const noexcept {
    return static_cast<std::size_t>(std::count(bits_.begin(), bits_.end(), true));
}

std::uint64_t BitVector::to_index() const noexcept {
    std::uint64_t index = 0;
    for (bool bit : bits_) {
        index = (index << 1) | (bit ? 1u : 0u);
    }
    return index;
}

std::string BitVector::to_string() const {
    std::string out;
    out.reserve(bits_.size());
    for (bool bit : bits_) {
        out.push_back(bit ? '1' : '0');
    }
    return out;
}

bool lex_less(const BitVector& a, const BitVector& b) {
    return std::lexicographical_compare(a.bits().begin(), a.bits().end(), b.bits().begin(),
                                        b.bits().end());
}

} // namespace msm
