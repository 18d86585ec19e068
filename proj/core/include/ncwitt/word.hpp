#pragma once

#include <compare>
#include <cstddef>
#include <string>

namespace ncwitt {

class GeneratorSet;

/// A monomial of the free algebra: a finite sequence of generator indices.
/// The empty word is the multiplicative identity. Comparison is degree first,
/// then lexicographic in the index sequence (indices as unsigned bytes).
class Word {
public:
    Word() = default;
    explicit Word(std::string letters) : letters_(std::move(letters)) {}

    static Word generator(std::size_t index);

    std::size_t length() const { return letters_.size(); }
    bool empty() const { return letters_.empty(); }
    std::size_t letter(std::size_t k) const {
        return static_cast<unsigned char>(letters_[k]);
    }
    const std::string& letters() const { return letters_; }

    /// Concatenation: the free-algebra product of monomials.
    Word operator*(const Word& rhs) const { return Word(letters_ + rhs.letters_); }

    /// Cyclic left rotation by k places (k may exceed the length).
    Word rotated_left(std::size_t k) const;

    /// Largest generator index used, plus one. 0 for the empty word.
    std::size_t min_alphabet_size() const;

    /// Generator names joined by '*'; "1" for the empty word.
    std::string to_string(const GeneratorSet& gens) const;

    bool operator==(const Word&) const = default;
    std::strong_ordering operator<=>(const Word& rhs) const;

private:
    std::string letters_; // one byte per generator index
};

} // namespace ncwitt
