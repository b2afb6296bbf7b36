#ifndef POD_CONTEXT_HPP
#define POD_CONTEXT_HPP

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "pod/types.hpp"
#include "pod/vocab.hpp"

namespace pod {

enum class PathTokenKind : std::uint8_t { EdgeForward, EdgeBackward, Word, Pos };

// One symbol of a lexicalized dependency path: a directed edge label, or the
// surface/POS of an intermediate node.
struct PathToken {
    PathTokenKind kind;
    std::string symbol;

    friend bool operator==(const PathToken&, const PathToken&) = default;
};

std::string to_string(const PathToken& t);

// Which lexical material of intermediate nodes is emitted along paths.
struct PathLex {
    bool words = true;
    bool pos = true;
};

// (target, context) pair within the linear window plus its dependency path,
// with path tokens resolved to path-dictionary ids.
struct ContextTriple {
    int target = 0;
    int context = 0;
    int offset = 0;
    std::vector<std::int32_t> path;

    friend bool operator==(const ContextTriple&, const ContextTriple&) = default;
};

// The unique tree path from a to b (0-based indices, a != b). Child-to-head
// hops emit EdgeBackward(deprel of child), head-to-child hops
// EdgeForward(deprel of child); intermediate nodes contribute Word then Pos
// tokens per the lex flags. First and last tokens are always edges.
std::vector<PathToken> tree_path(const ParsedSentence& sent, int a, int b,
                                 const PathLex& lex = {});

// Number of edges on the tree path between a and b.
int tree_distance(const ParsedSentence& sent, int a, int b);

struct ExtractOptions {
    int window = 5;          // full odd span; offsets in [-(w-1)/2, (w-1)/2] \ {0}
    int max_path_edges = 8;  // pairs with longer tree paths are skipped
    PathLex lex;
};

struct ExtractResult {
    std::vector<ContextTriple> triples;
    std::size_t skipped_pairs = 0;
};

// Emits one triple per ordered (target, context) pair within the window,
// skipping (and counting) pairs whose tree path exceeds max_path_edges.
// Intermediate words unknown to the vocabulary become UNK word tokens; POS
// tokens are kept exact.
ExtractResult extract_triples(const ParsedSentence& sent, const Vocabulary& vocab,
                              const ExtractOptions& opts);

std::string render_path(const Vocabulary& vocab,
                        const std::vector<std::int32_t>& path);

// Triple cache: "#triples v1" text header followed by length-prefixed binary
// records. Regeneration from the same corpus, vocabulary and flags is
// byte-identical.
void write_triple_cache(std::ostream& out,
                        const std::vector<std::vector<ContextTriple>>& per_sentence);
std::vector<std::vector<ContextTriple>> read_triple_cache(std::istream& in);

}  // namespace pod

#endif  // POD_CONTEXT_HPP
