#include "pod/conllu.hpp"

#include <istream>
#include <ostream>
#include <sstream>

namespace pod {

bool ParsedSentence::is_tree() const {
    const int n = static_cast<int>(tokens.size());
    if (n == 0) return false;
    int root = -1;
    for (int i = 0; i < n; ++i) {
        const int h = tokens[i].head;
        if (h < 0 || h > n || h == i + 1) return false;
        if (h == 0) {
            if (root != -1) return false;
            root = i;
        }
    }
    if (root == -1) return false;
    // Walk up from every node; a walk longer than n nodes means a cycle.
    for (int i = 0; i < n; ++i) {
        int cur = i, steps = 0;
        while (tokens[cur].head != 0) {
            cur = tokens[cur].head - 1;
            if (++steps > n) return false;
        }
    }
    return true;
}

namespace {

std::vector<std::string> split_tabs(const std::string& line) {
    std::vector<std::string> fields;
    std::size_t start = 0;
    while (true) {
        std::size_t tab = line.find('\t', start);
        if (tab == std::string::npos) {
            fields.push_back(line.substr(start));
            break;
        }
        fields.push_back(line.substr(start, tab - start));
        start = tab + 1;
    }
    return fields;
}

bool is_integer(const std::string& s) {
    if (s.empty()) return false;
    for (char c : s)
        if (c < '0' || c > '9') return false;
    return true;
}

bool is_range_id(const std::string& s) {
    auto dash = s.find('-');
    if (dash == std::string::npos) return false;
    return is_integer(s.substr(0, dash)) && is_integer(s.substr(dash + 1));
}

struct Block {
    std::vector<std::vector<std::string>> rows;
    std::vector<std::size_t> row_lines;
    std::size_t first_line = 0;
};

// Pulls the next sentence block off the stream; false at EOF.
bool next_block(std::istream& in, std::size_t& line_no, Block& block) {
    block.rows.clear();
    block.row_lines.clear();
    block.first_line = 0;
    std::string line;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) {
            if (!block.rows.empty()) return true;
            continue;
        }
        if (line[0] == '#') continue;
        auto fields = split_tabs(line);
        if (!fields.empty() && is_range_id(fields[0])) continue;
        if (block.rows.empty()) block.first_line = line_no;
        block.rows.push_back(std::move(fields));
        block.row_lines.push_back(line_no);
    }
    return !block.rows.empty();
}

// Converts one block into a sentence; on failure returns false with a
// diagnostic positioned at the offending line.
bool block_to_sentence(const Block& block, const ConlluOptions& opts,
                       std::size_t min_columns, ParsedSentence& sent,
                       ReadReport::Issue& issue) {
    sent.tokens.clear();
    for (std::size_t r = 0; r < block.rows.size(); ++r) {
        const auto& f = block.rows[r];
        if (f.size() < min_columns) {
            issue = {block.row_lines[r],
                     "expected at least " + std::to_string(min_columns) +
                         " tab-separated columns, got " + std::to_string(f.size())};
            return false;
        }
        if (!is_integer(f[6])) {
            issue = {block.row_lines[r], "HEAD column is not an integer: '" + f[6] + "'"};
            return false;
        }
        Token tok;
        tok.surface = f[1];
        tok.pos = opts.pos_field == PosField::Xpos ? f[4] : f[3];
        tok.head = std::stoi(f[6]);
        tok.deprel = f[7];
        if (tok.deprel.empty() || tok.deprel == "_") {
            issue = {block.row_lines[r], "empty DEPREL column"};
            return false;
        }
        sent.tokens.push_back(std::move(tok));
    }
    if (!sent.is_tree()) {
        issue = {block.first_line, "head links do not form a single-rooted tree"};
        return false;
    }
    return true;
}

BioTag parse_tag(const std::string& s, std::size_t line, bool& ok) {
    ok = true;
    if (s == "B") return BioTag::B;
    if (s == "I") return BioTag::I;
    if (s == "O") return BioTag::O;
    ok = false;
    (void)line;
    return BioTag::O;
}

}  // namespace

std::vector<ParsedSentence> read_conllu(std::istream& in, ReadReport& report,
                                        const ConlluOptions& opts) {
    std::vector<ParsedSentence> sentences;
    Block block;
    std::size_t line_no = 0;
    while (next_block(in, line_no, block)) {
        ParsedSentence sent;
        ReadReport::Issue issue;
        if (block_to_sentence(block, opts, 10, sent, issue)) {
            sentences.push_back(std::move(sent));
            ++report.sentences_read;
        } else {
            report.rejected.push_back(std::move(issue));
        }
    }
    return sentences;
}

std::vector<std::pair<ParsedSentence, TagSequence>> read_labeled(
    std::istream& in, ReadReport& report, const ConlluOptions& opts) {
    std::vector<std::pair<ParsedSentence, TagSequence>> data;
    Block block;
    std::size_t line_no = 0;
    while (next_block(in, line_no, block)) {
        for (std::size_t r = 0; r < block.rows.size(); ++r) {
            if (block.rows[r].size() < 11)
                throw InputError("line " + std::to_string(block.row_lines[r]) +
                                 ": missing BIO tag column");
        }
        ParsedSentence sent;
        ReadReport::Issue issue;
        if (!block_to_sentence(block, opts, 11, sent, issue)) {
            report.rejected.push_back(std::move(issue));
            continue;
        }
        TagSequence tags;
        bool bad_tag = false;
        for (std::size_t r = 0; r < block.rows.size(); ++r) {
            bool ok = true;
            BioTag t = parse_tag(block.rows[r][10], block.row_lines[r], ok);
            if (!ok) {
                report.rejected.push_back(
                    {block.row_lines[r], "tag column must be B, I or O, got '" +
                                             block.rows[r][10] + "'"});
                bad_tag = true;
                break;
            }
            tags.push_back(t);
        }
        if (bad_tag) continue;
        // Repair ill-formed BIO: I at start or after O becomes B.
        for (std::size_t i = 0; i < tags.size(); ++i) {
            if (tags[i] == BioTag::I && (i == 0 || tags[i - 1] == BioTag::O)) {
                tags[i] = BioTag::B;
                ++report.bio_repairs;
            }
        }
        data.emplace_back(std::move(sent), std::move(tags));
        ++report.sentences_read;
    }
    return data;
}

void write_labeled(std::ostream& out,
                   const std::vector<std::pair<ParsedSentence, TagSequence>>& data,
                   const std::vector<TagSequence>* extra_tags) {
    for (std::size_t s = 0; s < data.size(); ++s) {
        const auto& [sent, tags] = data[s];
        for (std::size_t i = 0; i < sent.size(); ++i) {
            const Token& tok = sent[i];
            out << i + 1 << '\t' << tok.surface << "\t_\t_\t" << tok.pos
                << "\t_\t" << tok.head << '\t' << tok.deprel << "\t_\t_";
            if (!tags.empty()) out << '\t' << bio_char(tags[i]);
            if (extra_tags) out << '\t' << bio_char((*extra_tags)[s][i]);
            out << '\n';
        }
        out << '\n';
    }
}

}  // namespace pod
