#pragma once

#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

#include "sdw/lattice.hpp"

namespace sdw {

using Symbol = std::uint8_t;

// Finite ordered set of symbol tokens. Symbol order is fixed at construction
// and drives every lexicographic enumeration in the project.
class Alphabet {
public:
    Alphabet() = default;
    explicit Alphabet(std::vector<std::string> symbols) : symbols_(std::move(symbols)) {
        if (symbols_.empty()) throw std::invalid_argument("alphabet: empty");
        for (std::size_t i = 0; i < symbols_.size(); ++i)
            for (std::size_t j = i + 1; j < symbols_.size(); ++j)
                if (symbols_[i] == symbols_[j])
                    throw std::invalid_argument("alphabet: duplicate symbol");
    }
    static Alphabet binary() { return Alphabet({"0", "1"}); }

    std::size_t size() const { return symbols_.size(); }
    const std::string& token(Symbol s) const { return symbols_[s]; }
    const std::vector<std::string>& tokens() const { return symbols_; }
    Symbol index_of(const std::string& tok) const {
        for (std::size_t i = 0; i < symbols_.size(); ++i)
            if (symbols_[i] == tok) return static_cast<Symbol>(i);
        throw std::invalid_argument("alphabet: unknown symbol '" + tok + "'");
    }

    friend bool operator==(const Alphabet&, const Alphabet&) = default;

private:
    std::vector<std::string> symbols_;
};

// Total map support -> symbols. Values are aligned with the support's sorted
// point order, which makes the (support, values) pair a canonical form.
struct Pattern {
    Shape support;
    std::vector<Symbol> values;

    Pattern() = default;
    Pattern(Shape s, std::vector<Symbol> v) : support(std::move(s)), values(std::move(v)) {
        if (support.size() != values.size())
            throw std::invalid_argument("pattern: support/value size mismatch");
    }

    // 1-D word on [start, start + word.size()).
    static Pattern word(const std::vector<Symbol>& syms, int start = 0) {
        Shape s = Shape::interval(start, start + static_cast<int>(syms.size()) - 1);
        return Pattern(s, syms);
    }

    Symbol at(const Point& p) const {
        std::size_t i = support.index_of(p);
        if (i == Shape::npos) throw std::out_of_range("pattern: point outside support");
        return values[i];
    }
    bool defined_at(const Point& p) const { return support.index_of(p) != Shape::npos; }

    Pattern restricted_to(const Shape& s) const {
        std::vector<Symbol> v;
        v.reserve(s.size());
        for (const auto& p : s.points()) v.push_back(at(p));
        return Pattern(s, std::move(v));
    }

    Pattern translated(const Point& t) const {
        return Pattern(support.translated(t), values);
    }

    std::string to_string(const Alphabet& a) const {
        std::string s;
        for (std::size_t i = 0; i < values.size(); ++i) {
            if (i && support.dim() > 1) s += " ";
            s += a.token(values[i]);
        }
        return s;
    }

    friend bool operator==(const Pattern&, const Pattern&) = default;
    friend auto operator<=>(const Pattern&, const Pattern&) = default;
};

// Pattern on the union support combining both inputs; throws if they
// disagree on the overlap (message names the offending point).
Pattern pattern_glue(const Pattern& p1, const Pattern& p2);

}  // namespace sdw
