#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace coprime {

/// Fixed-width bitset over atom indices (prime ranks or abstract atoms).
///
/// Width is chosen at construction; all binary operations require equal widths.
class AtomSet {
public:
    AtomSet() = default;
    explicit AtomSet(std::size_t width) : width_(width), words_((width + 63) / 64, 0) {}

    std::size_t width() const noexcept { return width_; }

    void set(std::size_t i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
    void reset(std::size_t i) { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
    bool test(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1U; }

    bool intersects(const AtomSet& other) const noexcept
    {
        for (std::size_t w = 0; w < words_.size(); ++w)
            if (words_[w] & other.words_[w])
                return true;
        return false;
    }

    bool subset_of(const AtomSet& other) const noexcept
    {
        for (std::size_t w = 0; w < words_.size(); ++w)
            if (words_[w] & ~other.words_[w])
                return false;
        return true;
    }

    AtomSet& operator|=(const AtomSet& other) noexcept
    {
        for (std::size_t w = 0; w < words_.size(); ++w)
            words_[w] |= other.words_[w];
        return *this;
    }

    AtomSet& operator-=(const AtomSet& other) noexcept
    {
        for (std::size_t w = 0; w < words_.size(); ++w)
            words_[w] &= ~other.words_[w];
        return *this;
    }

    std::size_t count() const noexcept
    {
        std::size_t c = 0;
        for (auto w : words_)
            c += static_cast<std::size_t>(std::popcount(w));
        return c;
    }

    bool none() const noexcept
    {
        for (auto w : words_)
            if (w)
                return false;
        return true;
    }

    /// Lowest set index, or width() when empty.
    std::size_t first() const noexcept
    {
        for (std::size_t w = 0; w < words_.size(); ++w)
            if (words_[w])
                return w * 64 + static_cast<std::size_t>(std::countr_zero(words_[w]));
        return width_;
    }

    std::vector<std::size_t> indices() const
    {
        std::vector<std::size_t> out;
        for (std::size_t w = 0; w < words_.size(); ++w) {
            auto bits = words_[w];
            while (bits) {
                out.push_back(w * 64 + static_cast<std::size_t>(std::countr_zero(bits)));
                bits &= bits - 1;
            }
        }
        return out;
    }

    bool operator==(const AtomSet&) const = default;

private:
    std::size_t width_ = 0;
    std::vector<std::uint64_t> words_;
};

} // namespace coprime
