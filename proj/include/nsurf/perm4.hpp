#pragma once

#include <array>
#include <cstdint>
#include <string>

namespace nsurf {

/// A permutation of {0,1,2,3}, used as the vertex map of a face gluing.
/// A gluing only identifies the three face vertices, but we carry the full
/// 4-permutation (opposite vertex -> opposite vertex) so maps compose
/// without case analysis.
class Perm4 {
public:
    constexpr Perm4() : img_{0, 1, 2, 3} {}
    constexpr Perm4(int a, int b, int c, int d)
        : img_{static_cast<uint8_t>(a), static_cast<uint8_t>(b),
               static_cast<uint8_t>(c), static_cast<uint8_t>(d)} {}

    constexpr int operator[](int i) const { return img_[i]; }

    constexpr Perm4 inverse() const {
        Perm4 p;
        for (int i = 0; i < 4; ++i) p.img_[img_[i]] = static_cast<uint8_t>(i);
        return p;
    }

    /// Composition: (p * q)[i] == p[q[i]].
    friend constexpr Perm4 operator*(const Perm4& p, const Perm4& q) {
        return Perm4(p[q[0]], p[q[1]], p[q[2]], p[q[3]]);
    }

    friend constexpr bool operator==(const Perm4& a, const Perm4& b) {
        return a.img_ == b.img_;
    }
    friend constexpr auto operator<=>(const Perm4& a, const Perm4& b) {
        return a.img_ <=> b.img_;
    }

    constexpr bool is_identity() const { return *this == Perm4(); }

    /// Lexicographic rank among the 24 permutations, 0..23.
    constexpr int index() const {
        int r = 0;
        for (int i = 0; i < 4; ++i) {
            int smaller = 0;
            for (int j = i + 1; j < 4; ++j)
                if (img_[j] < img_[i]) ++smaller;
            int fact = 1;
            for (int k = 1; k <= 3 - i; ++k) fact *= k;
            r += smaller * fact;
        }
        return r;
    }

    static constexpr Perm4 from_index(int r) {
        int vals[4] = {0, 1, 2, 3};
        int img[4];
        int fact[4] = {6, 2, 1, 1};
        for (int i = 0; i < 4; ++i) {
            int f = (i < 3) ? fact[i] : 1;
            int k = r / f;
            r %= f;
            img[i] = vals[k];
            for (int j = k; j < 3 - i; ++j) vals[j] = vals[j + 1];
        }
        return Perm4(img[0], img[1], img[2], img[3]);
    }

    std::string str() const {
        std::string s(4, '0');
        for (int i = 0; i < 4; ++i) s[i] = static_cast<char>('0' + img_[i]);
        return s;
    }

private:
    std::array<uint8_t, 4> img_;
};

}  // namespace nsurf
