#pragma once

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

namespace sofia {

using Tid = std::uint32_t;

/// Fixed-length bit vector over the transactions of one dataset.
///
/// Bits past `size()` in the last word are always zero, so word-wise
/// comparison, hashing and popcount never see garbage.
class Tidset {
public:
    using Word = std::uint64_t;
    static constexpr std::size_t kWordBits = 64;

    Tidset() = default;
    explicit Tidset(std::size_t n_transactions, bool filled = false);

    static Tidset full(std::size_t n) { return Tidset(n, true); }
    static Tidset empty(std::size_t n) { return Tidset(n, false); }
    static Tidset from_tids(std::size_t n, std::span<const Tid> tids);

    std::size_t size() const noexcept { return size_; }
    std::size_t count() const noexcept;
    bool none() const noexcept;

    bool test(Tid t) const noexcept
    {
        return (words_[t / kWordBits] >> (t % kWordBits)) & 1U;
    }
    void set(Tid t) noexcept { words_[t / kWordBits] |= Word{1} << (t % kWordBits); }
    void reset(Tid t) noexcept { words_[t / kWordBits] &= ~(Word{1} << (t % kWordBits)); }

    Tidset& operator&=(const Tidset& other) noexcept;
    friend Tidset operator&(Tidset a, const Tidset& b) noexcept { return a &= b; }

    /// |this ∩ other| without materializing the intersection.
    std::size_t intersection_count(const Tidset& other) const noexcept;
    bool is_subset_of(const Tidset& other) const noexcept;

    std::vector<Tid> tids() const;

    template <class F>
    void for_each(F&& f) const
    {
        for (std::size_t w = 0; w < words_.size(); ++w) {
            Word bits = words_[w];
            while (bits != 0) {
                const auto bit = static_cast<std::size_t>(std::countr_zero(bits));
                f(static_cast<Tid>(w * kWordBits + bit));
                bits &= bits - 1;
            }
        }
    }

    std::span<const Word> words() const noexcept { return words_; }

    bool operator==(const Tidset&) const = default;
    /// Total order on extents used for deterministic iteration: by word
    /// vector, lowest word first.
    std::strong_ordering operator<=>(const Tidset& other) const noexcept;

private:
    std::vector<Word> words_;
    std::size_t size_ = 0;
};

struct TidsetHash {
    std::size_t operator()(const Tidset& t) const noexcept;
};

}  // namespace sofia
