#include "ncwitt/word.hpp"

#include <algorithm>

#include "ncwitt/error.hpp"
#include "ncwitt/generator_set.hpp"

namespace ncwitt {

Word Word::generator(std::size_t index) {
    if (index > 255) throw DomainError("generator index out of range");
    return Word(std::string(1, static_cast<char>(index)));
}

Word Word::rotated_left(std::size_t k) const {
    if (letters_.size() < 2) return *this;
    k %= letters_.size();
    if (k == 0) return *this;
    return Word(letters_.substr(k) + letters_.substr(0, k));
}

std::size_t Word::min_alphabet_size() const {
    std::size_t maxi = 0;
    for (std::size_t k = 0; k < letters_.size(); ++k) {
        maxi = std::max(maxi, letter(k) + 1);
    }
    return maxi;
}

std::string Word::to_string(const GeneratorSet& gens) const {
    if (empty()) return "1";
    std::string out;
    for (std::size_t k = 0; k < letters_.size(); ++k) {
        if (k > 0) out += '*';
        out += gens.name(letter(k));
    }
    return out;
}

std::strong_ordering Word::operator<=>(const Word& rhs) const {
    if (auto c = letters_.size() <=> rhs.letters_.size(); c != 0) return c;
    // char_traits compares bytes as unsigned
    int c = letters_.compare(rhs.letters_);
    if (c < 0) return std::strong_ordering::less;
    if (c > 0) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

} // namespace ncwitt
