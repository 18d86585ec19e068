#include "ncwitt/generator_set.hpp"

#include <cctype>

#include "ncwitt/error.hpp"

namespace ncwitt {

namespace {

bool is_identifier(const std::string& s) {
    if (s.empty()) return false;
    if (!std::isalpha(static_cast<unsigned char>(s[0])) && s[0] != '_') return false;
    for (char c : s) {
        if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
    }
    return true;
}

} // namespace

GeneratorSet::GeneratorSet(std::vector<std::string> symbols)
    : symbols_(std::move(symbols)) {
    if (symbols_.empty()) {
        throw DomainError("generator set must be nonempty");
    }
    if (symbols_.size() > 256) {
        throw DomainError("at most 256 generators are supported");
    }
    for (std::size_t i = 0; i < symbols_.size(); ++i) {
        if (!is_identifier(symbols_[i])) {
            throw DomainError("generator symbol '" + symbols_[i] +
                              "' is not an identifier");
        }
        if (!index_.emplace(symbols_[i], i).second) {
            throw DomainError("duplicate generator symbol '" + symbols_[i] + "'");
        }
    }
}

std::optional<std::size_t> GeneratorSet::index_of(std::string_view symbol) const {
    auto it = index_.find(symbol);
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

GeneratorSetPtr make_generators(std::vector<std::string> symbols) {
    return std::make_shared<const GeneratorSet>(std::move(symbols));
}

bool same_generators(const GeneratorSetPtr& a, const GeneratorSetPtr& b) {
    if (a == b) return true;
    if (!a || !b) return false;
    return *a == *b;
}

} // namespace ncwitt
