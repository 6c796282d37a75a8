#pragma once

#include <cstdint>
#include <cstddef>
#include <functional>
#include <vector>

namespace annigraph {

/// Fixed-size bitset sized at runtime. Used for element subsets of a ring
/// (ideal masks) where the universe is the element index range 0..n-1.
class DynBitset {
public:
    DynBitset() = default;
    explicit DynBitset(std::size_t nbits)
        : nbits_(nbits), words_((nbits + 63) / 64, 0) {}

    std::size_t size() const { return nbits_; }

    bool test(std::size_t i) const {
        return (words_[i >> 6] >> (i & 63)) & 1u;
    }
    void set(std::size_t i) { words_[i >> 6] |= uint64_t(1) << (i & 63); }
    void reset(std::size_t i) { words_[i >> 6] &= ~(uint64_t(1) << (i & 63)); }

    std::size_t count() const {
        std::size_t c = 0;
        for (uint64_t w : words_) c += std::size_t(__builtin_popcountll(w));
        return c;
    }

    bool subset_of(const DynBitset& other) const {
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & ~other.words_[i]) return false;
        return true;
    }

    bool intersects(const DynBitset& other) const {
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & other.words_[i]) return true;
        return false;
    }

    DynBitset& operator|=(const DynBitset& other) {
        for (std::size_t i = 0; i < words_.size(); ++i)
            words_[i] |= other.words_[i];
        return *this;
    }
    DynBitset& operator&=(const DynBitset& other) {
        for (std::size_t i = 0; i < words_.size(); ++i)
            words_[i] &= other.words_[i];
        return *this;
    }

    bool operator==(const DynBitset& other) const {
        return nbits_ == other.nbits_ && words_ == other.words_;
    }
    bool operator!=(const DynBitset& other) const { return !(*this == other); }

    /// Lexicographic order on the bit sequence, lowest index first.
    bool lex_less(const DynBitset& other) const {
        for (std::size_t i = 0; i < words_.size(); ++i) {
            if (words_[i] == other.words_[i]) continue;
            // lowest differing bit decides; the set containing it is "greater"
            uint64_t diff = words_[i] ^ other.words_[i];
            uint64_t low = diff & (~diff + 1);
            return !(words_[i] & low);
        }
        return false;
    }

    std::vector<uint32_t> to_indices() const {
        std::vector<uint32_t> out;
        out.reserve(count());
        for (std::size_t wi = 0; wi < words_.size(); ++wi) {
            uint64_t w = words_[wi];
            while (w) {
                unsigned b = unsigned(__builtin_ctzll(w));
                out.push_back(uint32_t(wi * 64 + b));
                w &= w - 1;
            }
        }
        return out;
    }

    std::size_t hash() const {
        std::size_t h = 1469598103934665603ull;
        for (uint64_t w : words_) {
            h ^= std::size_t(w);
            h *= 1099511628211ull;
        }
        return h;
    }

private:
    std::size_t nbits_ = 0;
    std::vector<uint64_t> words_;
};

struct DynBitsetHash {
    std::size_t operator()(const DynBitset& b) const { return b.hash(); }
};

} // namespace annigraph
