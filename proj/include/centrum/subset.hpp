#pragma once

#include <cstdint>
#include <vector>

namespace centrum {

// Bitset over element indices of one ring. Also the representation for
// ideals, annihilators and radicals.
class Subset {
public:
    Subset() = default;
    explicit Subset(int universe) : size_(universe), bits_((universe + 63) / 64, 0) {}

    static Subset single(int universe, int e) {
        Subset s(universe);
        s.set(e);
        return s;
    }
    static Subset full(int universe) {
        Subset s(universe);
        for (int i = 0; i < universe; ++i) s.set(i);
        return s;
    }

    int universe() const { return size_; }

    bool test(int i) const { return (bits_[i >> 6] >> (i & 63)) & 1; }
    void set(int i) { bits_[i >> 6] |= uint64_t(1) << (i & 63); }
    void reset(int i) { bits_[i >> 6] &= ~(uint64_t(1) << (i & 63)); }

    int count() const {
        int n = 0;
        for (uint64_t w : bits_) n += __builtin_popcountll(w);
        return n;
    }
    bool empty() const {
        for (uint64_t w : bits_)
            if (w) return false;
        return true;
    }

    bool operator==(const Subset& o) const { return size_ == o.size_ && bits_ == o.bits_; }
    bool operator!=(const Subset& o) const { return !(*this == o); }

    bool contains(const Subset& o) const {
        for (size_t k = 0; k < bits_.size(); ++k)
            if (o.bits_[k] & ~bits_[k]) return false;
        return true;
    }
    bool intersects(const Subset& o) const {
        for (size_t k = 0; k < bits_.size(); ++k)
            if (bits_[k] & o.bits_[k]) return true;
        return false;
    }

    Subset& operator&=(const Subset& o) {
        for (size_t k = 0; k < bits_.size(); ++k) bits_[k] &= o.bits_[k];
        return *this;
    }
    Subset& operator|=(const Subset& o) {
        for (size_t k = 0; k < bits_.size(); ++k) bits_[k] |= o.bits_[k];
        return *this;
    }
    friend Subset operator&(Subset a, const Subset& b) { return a &= b; }
    friend Subset operator|(Subset a, const Subset& b) { return a |= b; }

    // Order by bitset value, most significant block first.
    bool less_bits(const Subset& o) const {
        for (size_t k = bits_.size(); k-- > 0;)
            if (bits_[k] != o.bits_[k]) return bits_[k] < o.bits_[k];
        return false;
    }

    std::vector<int> members() const {
        std::vector<int> out;
        for (int i = 0; i < size_; ++i)
            if (test(i)) out.push_back(i);
        return out;
    }

    const std::vector<uint64_t>& blocks() const { return bits_; }

private:
    int size_ = 0;
    std::vector<uint64_t> bits_;
};

} // namespace centrum
