#pragma once

#include <cstdint>
#include <vector>

namespace tvlab {

// Fixed-capacity bitset over 64-bit words with inline storage for up to 128
// bits (the common case here); larger capacities spill to the heap. All
// binary operations require equal capacity.
class Bitset {
public:
    Bitset() = default;
    explicit Bitset(int nbits) : nbits_(nbits), nwords_((nbits + 63) / 64) {
        if (nwords_ > 2) ext_.assign(nwords_, 0);
    }

    int capacity() const { return nbits_; }

    void set(int i) { w()[i >> 6] |= (1ULL << (i & 63)); }
    void reset(int i) { w()[i >> 6] &= ~(1ULL << (i & 63)); }
    bool test(int i) const { return (w()[i >> 6] >> (i & 63)) & 1ULL; }

    void clear() {
        for (int i = 0; i < nwords_; ++i) w()[i] = 0;
    }
    void set_all() {
        for (int i = 0; i < nwords_; ++i) w()[i] = ~0ULL;
        trim();
    }

    int count() const {
        int c = 0;
        for (int i = 0; i < nwords_; ++i) c += __builtin_popcountll(w()[i]);
        return c;
    }
    bool any() const {
        for (int i = 0; i < nwords_; ++i)
            if (w()[i]) return true;
        return false;
    }
    bool none() const { return !any(); }

    bool intersects(const Bitset& o) const {
        for (int i = 0; i < nwords_; ++i)
            if (w()[i] & o.w()[i]) return true;
        return false;
    }
    bool is_subset_of(const Bitset& o) const {
        for (int i = 0; i < nwords_; ++i)
            if (w()[i] & ~o.w()[i]) return false;
        return true;
    }
    int count_and(const Bitset& o) const {
        int c = 0;
        for (int i = 0; i < nwords_; ++i) c += __builtin_popcountll(w()[i] & o.w()[i]);
        return c;
    }

    Bitset& operator|=(const Bitset& o) {
        for (int i = 0; i < nwords_; ++i) w()[i] |= o.w()[i];
        return *this;
    }
    Bitset& operator&=(const Bitset& o) {
        for (int i = 0; i < nwords_; ++i) w()[i] &= o.w()[i];
        return *this;
    }
    Bitset& operator^=(const Bitset& o) {
        for (int i = 0; i < nwords_; ++i) w()[i] ^= o.w()[i];
        return *this;
    }
    // this &= ~o
    Bitset& andnot_assign(const Bitset& o) {
        for (int i = 0; i < nwords_; ++i) w()[i] &= ~o.w()[i];
        return *this;
    }

    friend Bitset operator|(Bitset a, const Bitset& b) { return a |= b; }
    friend Bitset operator&(Bitset a, const Bitset& b) { return a &= b; }
    Bitset andnot(const Bitset& o) const {
        Bitset r(*this);
        r.andnot_assign(o);
        return r;
    }
    Bitset complement_set() const {
        Bitset r(*this);
        for (int i = 0; i < r.nwords_; ++i) r.w()[i] = ~r.w()[i];
        r.trim();
        return r;
    }

    bool operator==(const Bitset& o) const {
        if (nbits_ != o.nbits_) return false;
        for (int i = 0; i < nwords_; ++i)
            if (w()[i] != o.w()[i]) return false;
        return true;
    }

    // Index of lowest set bit, or -1.
    int first() const {
        for (int i = 0; i < nwords_; ++i)
            if (w()[i]) return i * 64 + __builtin_ctzll(w()[i]);
        return -1;
    }
    // Lowest set bit strictly above `i`, or -1.
    int next(int i) const {
        ++i;
        if (i >= nbits_) return -1;
        int word = i >> 6;
        uint64_t cur = w()[word] & (~0ULL << (i & 63));
        while (true) {
            if (cur) return word * 64 + __builtin_ctzll(cur);
            if (++word >= nwords_) return -1;
            cur = w()[word];
        }
    }

    template <class F>
    void for_each(F f) const {
        for (int i = 0; i < nwords_; ++i) {
            uint64_t x = w()[i];
            while (x) {
                f(i * 64 + __builtin_ctzll(x));
                x &= x - 1;
            }
        }
    }

    std::vector<int> to_vector() const {
        std::vector<int> v;
        v.reserve(count());
        for_each([&](int i) { v.push_back(i); });
        return v;
    }
    static Bitset of(int nbits, const std::vector<int>& elems) {
        Bitset b(nbits);
        for (int e : elems) b.set(e);
        return b;
    }

private:
    uint64_t* w() { return nwords_ <= 2 ? inl_ : ext_.data(); }
    const uint64_t* w() const { return nwords_ <= 2 ? inl_ : ext_.data(); }
    void trim() {
        int r = nbits_ & 63;
        if (r && nwords_ > 0) w()[nwords_ - 1] &= (1ULL << r) - 1;
    }

    int nbits_ = 0;
    int nwords_ = 0;
    uint64_t inl_[2] = {0, 0};
    std::vector<uint64_t> ext_;
};

}  // namespace tvlab
