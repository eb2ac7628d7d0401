#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace resolvent {

/// Runtime-sized bitset with the handful of word-parallel operations the
/// search engines need. Binary operations require equal sizes.
class Bitset {
public:
    static constexpr std::size_t npos = static_cast<std::size_t>(-1);

    Bitset() = default;
    explicit Bitset(std::size_t size) : size_(size), words_((size + 63) / 64, 0) {}

    static Bitset full(std::size_t size)
    {
        Bitset b(size);
        for (auto& w : b.words_)
            w = ~std::uint64_t{0};
        b.trim();
        return b;
    }

    [[nodiscard]] std::size_t size() const noexcept { return size_; }

    void set(std::size_t i) noexcept { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
    void reset(std::size_t i) noexcept { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
    [[nodiscard]] bool test(std::size_t i) const noexcept { return (words_[i >> 6] >> (i & 63)) & 1U; }

    void clear() noexcept
    {
        for (auto& w : words_)
            w = 0;
    }

    [[nodiscard]] std::size_t count() const noexcept
    {
        std::size_t c = 0;
        for (auto w : words_)
            c += static_cast<std::size_t>(std::popcount(w));
        return c;
    }

    [[nodiscard]] bool any() const noexcept
    {
        for (auto w : words_)
            if (w != 0)
                return true;
        return false;
    }
    [[nodiscard]] bool none() const noexcept { return !any(); }

    [[nodiscard]] std::size_t find_first() const noexcept { return scan_from(0); }
    [[nodiscard]] std::size_t find_next(std::size_t i) const noexcept { return scan_from(i + 1); }

    Bitset& operator&=(const Bitset& o) noexcept
    {
        for (std::size_t k = 0; k < words_.size(); ++k)
            words_[k] &= o.words_[k];
        return *this;
    }
    Bitset& operator|=(const Bitset& o) noexcept
    {
        for (std::size_t k = 0; k < words_.size(); ++k)
            words_[k] |= o.words_[k];
        return *this;
    }
    /// this &= ~o
    Bitset& subtract(const Bitset& o) noexcept
    {
        for (std::size_t k = 0; k < words_.size(); ++k)
            words_[k] &= ~o.words_[k];
        return *this;
    }

    friend Bitset operator&(Bitset a, const Bitset& b) noexcept { return a &= b; }
    friend Bitset operator|(Bitset a, const Bitset& b) noexcept { return a |= b; }

    [[nodiscard]] bool intersects(const Bitset& o) const noexcept
    {
        for (std::size_t k = 0; k < words_.size(); ++k)
            if ((words_[k] & o.words_[k]) != 0)
                return true;
        return false;
    }
    [[nodiscard]] std::size_t count_and(const Bitset& o) const noexcept
    {
        std::size_t c = 0;
        for (std::size_t k = 0; k < words_.size(); ++k)
            c += static_cast<std::size_t>(std::popcount(words_[k] & o.words_[k]));
        return c;
    }
    [[nodiscard]] bool is_subset_of(const Bitset& o) const noexcept
    {
        for (std::size_t k = 0; k < words_.size(); ++k)
            if ((words_[k] & ~o.words_[k]) != 0)
                return false;
        return true;
    }

    template <class F>
    void for_each(F&& f) const
    {
        for (std::size_t k = 0; k < words_.size(); ++k) {
            auto w = words_[k];
            while (w != 0) {
                f(k * 64 + static_cast<std::size_t>(std::countr_zero(w)));
                w &= w - 1;
            }
        }
    }

    friend bool operator==(const Bitset&, const Bitset&) = default;

private:
    [[nodiscard]] std::size_t scan_from(std::size_t i) const noexcept
    {
        if (i >= size_)
            return npos;
        std::size_t k = i >> 6;
        auto w = words_[k] & (~std::uint64_t{0} << (i & 63));
        while (true) {
            if (w != 0)
                return k * 64 + static_cast<std::size_t>(std::countr_zero(w));
            if (++k == words_.size())
                return npos;
            w = words_[k];
        }
    }

    void trim() noexcept
    {
        if (size_ % 64 != 0 && !words_.empty())
            words_.back() &= (std::uint64_t{1} << (size_ % 64)) - 1;
    }

    std::size_t size_ = 0;
    std::vector<std::uint64_t> words_;
};

}  // namespace resolvent
