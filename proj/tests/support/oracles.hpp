#pragma once

// Independent oracles and random-value generators for the test suite. These
// deliberately avoid the library's own algorithms: rotations are enumerated
// naively, 2x2 matrix arithmetic is spelled out on machine integers, and
// necklaces are counted by brute force.

#include <algorithm>
#include <array>
#include <cstdint>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "ncwitt/free_poly.hpp"
#include "ncwitt/word.hpp"

namespace ncwitt::testing {

/// All-rotations minimum; quadratic, trusted by inspection.
inline Word naive_min_rotation(const Word& w) {
    Word best = w;
    for (std::size_t k = 1; k < w.length(); ++k) {
        const Word r = w.rotated_left(k);
        if (r < best) {
            best = r;
        }
    }
    return best;
}

/// Number of distinct necklaces of the given length over an alphabet, by
/// enumerating every word and collecting canonical forms.
inline std::size_t brute_force_necklace_count(std::size_t length, std::size_t alphabet) {
    std::set<std::string> canon;
    std::string word(length, '\0');
    const auto enumerate = [&](auto&& self, std::size_t pos) -> void {
        if (pos == length) {
            canon.insert(naive_min_rotation(Word(word)).letters());
            return;
        }
        for (std::size_t c = 0; c < alphabet; ++c) {
            word[pos] = static_cast<char>(c);
            self(self, pos + 1);
        }
    };
    enumerate(enumerate, 0);
    return canon.size();
}

/// A 2x2 matrix over Z/m on plain machine words, independent of the library's
/// Matrix type. Entries stay reduced; m must fit comfortably in 32 bits.
struct Mat2 {
    std::array<std::int64_t, 4> e{0, 0, 0, 0}; // row major

    static Mat2 identity() { return Mat2{{1, 0, 0, 1}}; }
};

inline Mat2 mat2_add(const Mat2& a, const Mat2& b, std::int64_t m) {
    Mat2 c;
    for (int i = 0; i < 4; ++i) {
        c.e[i] = (a.e[i] + b.e[i]) % m;
    }
    return c;
}

inline Mat2 mat2_mul(const Mat2& a, const Mat2& b, std::int64_t m) {
    Mat2 c;
    c.e[0] = (a.e[0] * b.e[0] + a.e[1] * b.e[2]) % m;
    c.e[1] = (a.e[0] * b.e[1] + a.e[1] * b.e[3]) % m;
    c.e[2] = (a.e[2] * b.e[0] + a.e[3] * b.e[2]) % m;
    c.e[3] = (a.e[2] * b.e[1] + a.e[3] * b.e[3]) % m;
    return c;
}

inline Mat2 mat2_pow(Mat2 a, std::uint64_t k, std::int64_t m) {
    Mat2 r = Mat2::identity();
    r.e[0] %= m;
    r.e[3] %= m;
    while (k > 0) {
        if (k & 1) {
            r = mat2_mul(r, a, m);
        }
        a = mat2_mul(a, a, m);
        k >>= 1;
    }
    return r;
}

inline std::int64_t mat2_trace(const Mat2& a, std::int64_t m) {
    return (a.e[0] + a.e[3]) % m;
}

/// Oracle value of Tr(R^p S^p - (RS)^p) over F_p with the shift pair,
/// computed entirely on machine integers.
inline std::int64_t shift_pair_trace_oracle(std::int64_t p) {
    const Mat2 r{{0, 0, 1, 0}};
    const Mat2 s{{0, 1, 0, 0}};
    const Mat2 lhs = mat2_mul(mat2_pow(r, static_cast<std::uint64_t>(p), p),
                              mat2_pow(s, static_cast<std::uint64_t>(p), p), p);
    const Mat2 rhs = mat2_pow(mat2_mul(r, s, p), static_cast<std::uint64_t>(p), p);
    return ((mat2_trace(lhs, p) - mat2_trace(rhs, p)) % p + p) % p;
}

inline Word random_word(std::mt19937_64& rng, std::size_t alphabet, std::size_t max_len) {
    std::uniform_int_distribution<std::size_t> len_dist(0, max_len);
    std::uniform_int_distribution<std::size_t> letter_dist(0, alphabet - 1);
    std::string letters;
    const std::size_t len = len_dist(rng);
    for (std::size_t i = 0; i < len; ++i) {
        letters.push_back(static_cast<char>(letter_dist(rng)));
    }
    return Word(std::move(letters));
}

inline mpz_class random_coeff(std::mt19937_64& rng, long lo, long hi) {
    std::uniform_int_distribution<long> dist(lo, hi);
    return mpz_class(dist(rng));
}

inline FreePoly random_poly(std::mt19937_64& rng, const GeneratorSetPtr& gens,
                            const CoefficientRing& ring, std::size_t max_deg,
                            std::size_t max_terms, long coeff_bound = 9) {
    std::uniform_int_distribution<std::size_t> terms_dist(0, max_terms);
    FreePoly::TermMap terms;
    const std::size_t n = terms_dist(rng);
    for (std::size_t i = 0; i < n; ++i) {
        terms[random_word(rng, gens->size(), max_deg)] +=
            random_coeff(rng, -coeff_bound, coeff_bound);
    }
    return FreePoly::from_terms(gens, ring, std::move(terms));
}

} // namespace ncwitt::testing
