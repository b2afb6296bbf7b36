#ifndef POD_TYPES_HPP
#define POD_TYPES_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace pod {

// One token of a dependency-parsed sentence. head is 1-based; 0 means the
// token hangs off the artificial root.
struct Token {
    std::string surface;
    std::string pos;
    int head = 0;
    std::string deprel;
};

struct ParsedSentence {
    std::vector<Token> tokens;

    std::size_t size() const { return tokens.size(); }
    const Token& operator[](std::size_t i) const { return tokens[i]; }

    // True iff the head links form a single-rooted tree over all tokens.
    bool is_tree() const;
};

enum class BioTag : std::uint8_t { B = 0, I = 1, O = 2 };

using TagSequence = std::vector<BioTag>;

inline char bio_char(BioTag t) {
    switch (t) {
        case BioTag::B: return 'B';
        case BioTag::I: return 'I';
        default: return 'O';
    }
}

// Inclusive (start, end) token span.
struct Span {
    int start = 0;
    int end = 0;
    friend bool operator==(const Span&, const Span&) = default;
    friend auto operator<=>(const Span&, const Span&) = default;
};

using SpanSet = std::vector<Span>;

}  // namespace pod

#endif  // POD_TYPES_HPP
