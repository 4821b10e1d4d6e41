#ifndef LERS_CHAIN_HPP
#define LERS_CHAIN_HPP

#include <bit>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace lers
{

/// A k-chain over GF(2): a fixed-capacity bit vector, one bit per k-cell.
/// Addition is symmetric difference (word-wise XOR).
template <int Dim>
class Chain
{
public:
    static constexpr int dimension = Dim;

    Chain() = default;
    explicit Chain(std::size_t cells) : bits_(cells), words_((cells + 63) / 64, 0) {}

    /// Number of cells of this dimension in the ambient complex.
    std::size_t capacity() const noexcept { return bits_; }

    /// Number of cells with coefficient 1.
    std::size_t count() const noexcept
    {
        std::size_t c = 0;
        for (auto w : words_)
            c += static_cast<std::size_t>(std::popcount(w));
        return c;
    }

    bool empty() const noexcept
    {
        for (auto w : words_)
            if (w != 0)
                return false;
        return true;
    }

    bool contains(std::size_t i) const
    {
        check(i);
        return test_unchecked(i);
    }

    void insert(std::size_t i)
    {
        check(i);
        words_[i >> 6] |= std::uint64_t{1} << (i & 63);
    }

    void erase(std::size_t i)
    {
        check(i);
        words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63));
    }

    void flip(std::size_t i)
    {
        check(i);
        flip_unchecked(i);
    }

    bool test_unchecked(std::size_t i) const noexcept
    {
        return (words_[i >> 6] >> (i & 63)) & 1U;
    }

    void flip_unchecked(std::size_t i) noexcept
    {
        words_[i >> 6] ^= std::uint64_t{1} << (i & 63);
    }

    Chain& operator+=(const Chain& other)
    {
        if (other.bits_ != bits_)
            throw std::invalid_argument("chain capacity mismatch");
        for (std::size_t k = 0; k < words_.size(); ++k)
            words_[k] ^= other.words_[k];
        return *this;
    }

    friend Chain operator+(Chain a, const Chain& b)
    {
        a += b;
        return a;
    }

    /// Complement relative to all cells of this dimension.
    Chain complement() const
    {
        Chain out(bits_);
        for (std::size_t k = 0; k < words_.size(); ++k)
            out.words_[k] = ~words_[k];
        out.trim();
        return out;
    }

    /// True iff every cell of this chain is also in `other`.
    bool subset_of(const Chain& other) const
    {
        if (other.bits_ != bits_)
            throw std::invalid_argument("chain capacity mismatch");
        for (std::size_t k = 0; k < words_.size(); ++k)
            if (words_[k] & ~other.words_[k])
                return false;
        return true;
    }

    /// Cell indices in increasing order.
    std::vector<std::size_t> indices() const
    {
        std::vector<std::size_t> out;
        out.reserve(count());
        for_each([&](std::size_t i) { out.push_back(i); });
        return out;
    }

    template <typename F>
    void for_each(F&& f) const
    {
        for (std::size_t k = 0; k < words_.size(); ++k) {
            std::uint64_t w = words_[k];
            while (w != 0) {
                f((k << 6) + static_cast<std::size_t>(std::countr_zero(w)));
                w &= w - 1;
            }
        }
    }

    const std::vector<std::uint64_t>& words() const noexcept { return words_; }

    friend bool operator==(const Chain&, const Chain&) = default;

private:
    void check(std::size_t i) const
    {
        if (i >= bits_)
            throw std::out_of_range("cell index " + std::to_string(i) +
                                    " out of range for " + std::to_string(Dim) +
                                    "-chain of capacity " + std::to_string(bits_));
    }

    void trim() noexcept
    {
        if (bits_ % 64 != 0 && !words_.empty())
            words_.back() &= (std::uint64_t{1} << (bits_ % 64)) - 1;
    }

    std::size_t bits_ = 0;
    std::vector<std::uint64_t> words_;
};

using Chain0 = Chain<0>;
using Chain1 = Chain<1>;
using Chain2 = Chain<2>;

} // namespace lers

#endif
