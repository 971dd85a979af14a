#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <vector>

namespace turan {

// Fixed-length dynamic bit vector. Bit i lives in word i/64 at position i%64.
class BitVec {
public:
    BitVec() = default;
    explicit BitVec(std::size_t bits)
        : bits_(bits), words_((bits + 63) / 64, 0) {}

    std::size_t size() const { return bits_; }
    std::size_t word_count() const { return words_.size(); }
    const std::uint64_t* data() const { return words_.data(); }
    std::uint64_t* data() { return words_.data(); }

    bool test(std::size_t i) const {
        return (words_[i >> 6] >> (i & 63)) & 1u;
    }
    void set(std::size_t i) { words_[i >> 6] |= std::uint64_t(1) << (i & 63); }
    void reset(std::size_t i) {
        words_[i >> 6] &= ~(std::uint64_t(1) << (i & 63));
    }

    std::size_t count() const {
        std::size_t c = 0;
        for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
        return c;
    }

    bool any() const {
        for (auto w : words_)
            if (w) return true;
        return false;
    }

    bool operator==(const BitVec&) const = default;

    // lexicographic on the bit sequence (bit 0 most significant)
    std::strong_ordering compare_lex(const BitVec& o) const {
        for (std::size_t i = 0; i < words_.size() && i < o.words_.size(); ++i) {
            if (words_[i] == o.words_[i]) continue;
            // lower bit index = earlier position; compare reversed bits
            std::uint64_t diff = words_[i] ^ o.words_[i];
            std::uint64_t lowest = diff & (~diff + 1);
            return (words_[i] & lowest) ? std::strong_ordering::greater
                                        : std::strong_ordering::less;
        }
        return bits_ <=> o.bits_;
    }

    std::vector<std::uint8_t> to_bytes() const {
        std::vector<std::uint8_t> out((bits_ + 7) / 8, 0);
        for (std::size_t i = 0; i < out.size(); ++i)
            out[i] = static_cast<std::uint8_t>(words_[i >> 3] >> ((i & 7) * 8));
        return out;
    }

    static BitVec from_bytes(std::size_t bits, const std::vector<std::uint8_t>& bytes) {
        BitVec v(bits);
        for (std::size_t i = 0; i < bytes.size() && i < (bits + 7) / 8; ++i)
            v.words_[i >> 3] |= std::uint64_t(bytes[i]) << ((i & 7) * 8);
        return v;
    }

private:
    std::size_t bits_ = 0;
    std::vector<std::uint64_t> words_;
};

}  // namespace turan
