#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace ncwitt {

/// An ordered alphabet of generator symbols, e.g. {"X", "Y"}.
///
/// The order is fixed at construction and defines the lexicographic part of
/// word comparison everywhere else, so two computations agree on canonical
/// forms exactly when they share (by value) a generator set. Symbols must be
/// distinct identifiers ([A-Za-z_][A-Za-z0-9_]*) so that formatted output
/// reparses unambiguously. At most 256 symbols.
class GeneratorSet {
public:
    explicit GeneratorSet(std::vector<std::string> symbols);

    std::size_t size() const { return symbols_.size(); }
    const std::string& name(std::size_t i) const { return symbols_.at(i); }
    const std::vector<std::string>& names() const { return symbols_; }
    std::optional<std::size_t> index_of(std::string_view symbol) const;

    friend bool operator==(const GeneratorSet& a, const GeneratorSet& b) {
        return a.symbols_ == b.symbols_;
    }

private:
    std::vector<std::string> symbols_;
    std::map<std::string, std::size_t, std::less<>> index_;
};

/// Generator sets are shared, never copied into values.
using GeneratorSetPtr = std::shared_ptr<const GeneratorSet>;

GeneratorSetPtr make_generators(std::vector<std::string> symbols);

/// Value equality, with a pointer fast path. Separately constructed but equal
/// sets interoperate.
bool same_generators(const GeneratorSetPtr& a, const GeneratorSetPtr& b);

} // namespace ncwitt
