#include "pod/context.hpp"

#include <istream>
#include <ostream>
#include <stdexcept>

#include "pod/conllu.hpp"

namespace pod {

std::string to_string(const PathToken& t) {
    switch (t.kind) {
        case PathTokenKind::EdgeForward: return t.symbol + ">";
        case PathTokenKind::EdgeBackward: return "<" + t.symbol;
        default: return t.symbol;
    }
}

namespace {

// Node sequence a = v0, v1, ..., vk = b along the unique tree path.
std::vector<int> path_nodes(const ParsedSentence& sent, int a, int b) {
    const int n = static_cast<int>(sent.size());
    if (a == b || a < 0 || b < 0 || a >= n || b >= n)
        throw std::invalid_argument("tree_path requires two distinct valid indices");

    std::vector<int> up_a;       // a and its ancestors up to the root
    std::vector<int> depth(n, -1);
    for (int cur = a;; cur = sent[cur].head - 1) {
        depth[cur] = static_cast<int>(up_a.size());
        up_a.push_back(cur);
        if (sent[cur].head == 0) break;
    }
    std::vector<int> up_b;       // b up to (excluding) the lowest common ancestor
    int lca = -1;
    for (int cur = b;; cur = sent[cur].head - 1) {
        if (depth[cur] >= 0) { lca = cur; break; }
        up_b.push_back(cur);
        if (sent[cur].head == 0) break;
    }
    if (lca == -1) throw std::logic_error("tokens share no ancestor; not a tree");

    std::vector<int> nodes(up_a.begin(), up_a.begin() + depth[lca] + 1);
    for (auto it = up_b.rbegin(); it != up_b.rend(); ++it) nodes.push_back(*it);
    return nodes;
}

}  // namespace

int tree_distance(const ParsedSentence& sent, int a, int b) {
    return static_cast<int>(path_nodes(sent, a, b).size()) - 1;
}

std::vector<PathToken> tree_path(const ParsedSentence& sent, int a, int b,
                                 const PathLex& lex) {
    const auto nodes = path_nodes(sent, a, b);
    std::vector<PathToken> path;
    for (std::size_t i = 0; i + 1 < nodes.size(); ++i) {
        const int from = nodes[i], to = nodes[i + 1];
        if (sent[from].head - 1 == to)
            path.push_back({PathTokenKind::EdgeBackward, sent[from].deprel});
        else
            path.push_back({PathTokenKind::EdgeForward, sent[to].deprel});
        if (i + 2 < nodes.size()) {  // `to` is an intermediate node
            if (lex.words) path.push_back({PathTokenKind::Word, sent[to].surface});
            if (lex.pos) path.push_back({PathTokenKind::Pos, sent[to].pos});
        }
    }
    return path;
}

ExtractResult extract_triples(const ParsedSentence& sent, const Vocabulary& vocab,
                              const ExtractOptions& opts) {
    if (opts.window < 3 || opts.window % 2 == 0)
        throw std::invalid_argument("window must be odd and >= 3");
    if (opts.max_path_edges < 1)
        throw std::invalid_argument("max_path_edges must be >= 1");

    ExtractResult result;
    const int n = static_cast<int>(sent.size());
    const int half = (opts.window - 1) / 2;
    for (int t = 0; t < n; ++t) {
        for (int off = -half; off <= half; ++off) {
            if (off == 0) continue;
            const int c = t + off;
            if (c < 0 || c >= n) continue;
            const auto nodes = path_nodes(sent, t, c);
            if (static_cast<int>(nodes.size()) - 1 > opts.max_path_edges) {
                ++result.skipped_pairs;
                continue;
            }
            ContextTriple triple;
            triple.target = vocab.word_id(sent[t].surface);
            triple.context = vocab.word_id(sent[c].surface);
            triple.offset = off;
            for (const auto& tok : tree_path(sent, t, c, opts.lex)) {
                switch (tok.kind) {
                    case PathTokenKind::Word:
                        triple.path.push_back(vocab.word_id(tok.symbol));
                        break;
                    case PathTokenKind::Pos:
                        triple.path.push_back(vocab.pos_path_id(tok.symbol));
                        break;
                    case PathTokenKind::EdgeForward:
                        triple.path.push_back(vocab.edge_path_id(tok.symbol, true));
                        break;
                    case PathTokenKind::EdgeBackward:
                        triple.path.push_back(vocab.edge_path_id(tok.symbol, false));
                        break;
                }
            }
            result.triples.push_back(std::move(triple));
        }
    }
    return result;
}

std::string render_path(const Vocabulary& vocab,
                        const std::vector<std::int32_t>& path) {
    std::string out;
    for (std::size_t i = 0; i < path.size(); ++i) {
        if (i) out += ' ';
        out += vocab.path_symbol(path[i]);
    }
    return out;
}

namespace {

template <typename T>
void put(std::ostream& out, T v) {
    out.write(reinterpret_cast<const char*>(&v), sizeof v);
}

template <typename T>
T get(std::istream& in) {
    T v{};
    in.read(reinterpret_cast<char*>(&v), sizeof v);
    if (!in) throw InputError("truncated triple cache");
    return v;
}

}  // namespace

void write_triple_cache(std::ostream& out,
                        const std::vector<std::vector<ContextTriple>>& per_sentence) {
    out << "#triples v1\n";
    put<std::uint32_t>(out, static_cast<std::uint32_t>(per_sentence.size()));
    for (const auto& triples : per_sentence) {
        put<std::uint32_t>(out, static_cast<std::uint32_t>(triples.size()));
        for (const auto& t : triples) {
            put<std::uint32_t>(out, static_cast<std::uint32_t>(t.target));
            put<std::uint32_t>(out, static_cast<std::uint32_t>(t.context));
            put<std::int32_t>(out, t.offset);
            put<std::uint32_t>(out, static_cast<std::uint32_t>(t.path.size()));
            for (std::int32_t id : t.path) put<std::int32_t>(out, id);
        }
    }
}

std::vector<std::vector<ContextTriple>> read_triple_cache(std::istream& in) {
    std::string header;
    if (!std::getline(in, header) || header != "#triples v1")
        throw InputError("not a triple cache (missing '#triples v1' header)");
    const auto n_sent = get<std::uint32_t>(in);
    std::vector<std::vector<ContextTriple>> per_sentence(n_sent);
    for (auto& triples : per_sentence) {
        const auto n_triples = get<std::uint32_t>(in);
        triples.resize(n_triples);
        for (auto& t : triples) {
            t.target = static_cast<int>(get<std::uint32_t>(in));
            t.context = static_cast<int>(get<std::uint32_t>(in));
            t.offset = get<std::int32_t>(in);
            const auto len = get<std::uint32_t>(in);
            t.path.resize(len);
            for (auto& id : t.path) id = get<std::int32_t>(in);
        }
    }
    return per_sentence;
}

}  // namespace pod
