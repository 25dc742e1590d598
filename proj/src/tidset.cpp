#include <sofia/tidset.hpp>

#include <algorithm>
#include <stdexcept>

namespace sofia {

Tidset::Tidset(std::size_t n_transactions, bool filled)
    : words_((n_transactions + kWordBits - 1) / kWordBits, filled ? ~Word{0} : Word{0}),
      size_(n_transactions)
{
    if (filled && n_transactions % kWordBits != 0) {
        words_.back() = (Word{1} << (n_transactions % kWordBits)) - 1;
    }
}

Tidset Tidset::from_tids(std::size_t n, std::span<const Tid> tids)
{
    Tidset result(n);
    for (Tid t : tids) {
        if (t >= n) {
            throw std::out_of_range("tid out of range");
        }
        result.set(t);
    }
    return result;
}

std::size_t Tidset::count() const noexcept
{
    std::size_t c = 0;
    for (Word w : words_) {
        c += static_cast<std::size_t>(std::popcount(w));
    }
    return c;
}

bool Tidset::none() const noexcept
{
    return std::all_of(words_.begin(), words_.end(), [](Word w) { return w == 0; });
}

Tidset& Tidset::operator&=(const Tidset& other) noexcept
{
    for (std::size_t i = 0; i < words_.size(); ++i) {
        words_[i] &= other.words_[i];
    }
    return *this;
}

std::size_t Tidset::intersection_count(const Tidset& other) const noexcept
{
    std::size_t c = 0;
    for (std::size_t i = 0; i < words_.size(); ++i) {
        c += static_cast<std::size_t>(std::popcount(words_[i] & other.words_[i]));
    }
    return c;
}

bool Tidset::is_subset_of(const Tidset& other) const noexcept
{
    for (std::size_t i = 0; i < words_.size(); ++i) {
        if ((words_[i] & ~other.words_[i]) != 0) {
            return false;
        }
    }
    return true;
}

std::vector<Tid> Tidset::tids() const
{
    std::vector<Tid> out;
    out.reserve(count());
    for_each([&](Tid t) { out.push_back(t); });
    return out;
}

std::strong_ordering Tidset::operator<=>(const Tidset& other) const noexcept
{
    if (auto c = size_ <=> other.size_; c != 0) {
        return c;
    }
    return std::lexicographical_compare_three_way(words_.begin(), words_.end(),
                                                  other.words_.begin(), other.words_.end());
}

std::size_t TidsetHash::operator()(const Tidset& t) const noexcept
{
    // FNV-1a over words, then a final avalanche.
    std::uint64_t h = 1469598103934665603ULL;
    for (auto w : t.words()) {
        h ^= w;
        h *= 1099511628211ULL;
    }
    h ^= h >> 33;
    h *= 0xff51afd7ed558ccdULL;
    h ^= h >> 33;
    return static_cast<std::size_t>(h);
}

}  // namespace sofia
