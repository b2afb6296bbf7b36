#include "pod/vocab.hpp"

#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "pod/conllu.hpp"

namespace pod {

const std::string Vocabulary::kUnkSurface = "<UNK>";

int Vocabulary::pos_path_id(const std::string& tag) const {
    auto it = pos_index_.find(tag);
    if (it == pos_index_.end())
        throw std::out_of_range("unknown POS tag: " + tag);
    return num_words() + it->second;
}

int Vocabulary::edge_path_id(const std::string& deprel, bool forward) const {
    auto it = deprel_index_.find(deprel);
    if (it == deprel_index_.end())
        throw std::out_of_range("unknown dependency relation: " + deprel);
    return num_words() + num_pos() + 2 * it->second + (forward ? 0 : 1);
}

int Vocabulary::path_dict_size() const {
    return num_words() + num_pos() + 2 * num_deprels();
}

std::string Vocabulary::path_symbol(int path_id) const {
    if (path_id < 0 || path_id >= path_dict_size())
        throw std::out_of_range("path id out of range");
    if (path_id < num_words()) return words_[path_id];
    path_id -= num_words();
    if (path_id < num_pos()) return pos_tags_[path_id];
    path_id -= num_pos();
    const std::string& rel = deprels_[path_id / 2];
    return path_id % 2 == 0 ? rel + ">" : "<" + rel;
}

void Vocabulary::rebuild_maps() {
    word_ids_.clear();
    for (int i = 0; i < num_words(); ++i) word_ids_[words_[i]] = i;
    word_ids_.erase(kUnkSurface);  // UNK is a fallback, not a lookup key
    pos_index_.clear();
    for (int i = 0; i < num_pos(); ++i) pos_index_[pos_tags_[i]] = i;
    deprel_index_.clear();
    for (int i = 0; i < num_deprels(); ++i) deprel_index_[deprels_[i]] = i;
}

Vocabulary build_vocab(const std::vector<ParsedSentence>& sentences,
                       int min_count) {
    if (sentences.empty()) throw InputError("no sentences");
    if (min_count < 1) throw std::invalid_argument("min_count must be >= 1");

    std::unordered_map<std::string, std::int64_t> word_counts;
    std::vector<std::string> word_order;
    Vocabulary v;
    auto see = [](std::vector<std::string>& order,
                  std::unordered_map<std::string, int>& index,
                  std::vector<std::int64_t>& counts, const std::string& sym) {
        auto it = index.find(sym);
        if (it == index.end()) {
            index[sym] = static_cast<int>(order.size());
            order.push_back(sym);
            counts.push_back(1);
        } else {
            ++counts[it->second];
        }
    };
    for (const auto& sent : sentences) {
        for (const auto& tok : sent.tokens) {
            auto it = word_counts.find(tok.surface);
            if (it == word_counts.end()) {
                word_counts[tok.surface] = 1;
                word_order.push_back(tok.surface);
            } else {
                ++it->second;
            }
            see(v.pos_tags_, v.pos_index_, v.pos_counts_, tok.pos);
            see(v.deprels_, v.deprel_index_, v.deprel_counts_, tok.deprel);
        }
    }

    v.words_.push_back(Vocabulary::kUnkSurface);
    v.counts_.push_back(0);
    for (const auto& w : word_order) {
        std::int64_t c = word_counts[w];
        if (c >= min_count) {
            v.words_.push_back(w);
            v.counts_.push_back(c);
        } else {
            v.counts_[Vocabulary::kUnkId] += c;
        }
    }
    v.rebuild_maps();
    return v;
}

void Vocabulary::save(std::ostream& out) const {
    out << "#vocab v1 |V|=" << num_words() << " n=" << path_dict_size() << "\n";
    for (int i = 0; i < num_words(); ++i)
        out << words_[i] << '\t' << counts_[i] << '\n';
    out << "#pos\n";
    for (int i = 0; i < num_pos(); ++i)
        out << pos_tags_[i] << '\t' << pos_counts_[i] << '\n';
    out << "#edge\n";
    for (int i = 0; i < num_deprels(); ++i)
        out << deprels_[i] << '\t' << deprel_counts_[i] << '\n';
}

Vocabulary Vocabulary::load(std::istream& in) {
    std::string line;
    if (!std::getline(in, line) || line.rfind("#vocab v1 ", 0) != 0)
        throw InputError("not a vocabulary file (missing '#vocab v1' header)");
    int expect_v = 0, expect_n = 0;
    if (std::sscanf(line.c_str(), "#vocab v1 |V|=%d n=%d", &expect_v,
                    &expect_n) != 2)
        throw InputError("malformed vocabulary header: " + line);

    Vocabulary v;
    int section = 0;  // 0 = words, 1 = pos, 2 = edges
    std::size_t line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty()) continue;
        if (line == "#pos") { section = 1; continue; }
        if (line == "#edge") { section = 2; continue; }
        auto tab = line.find('\t');
        if (tab == std::string::npos)
            throw InputError("line " + std::to_string(line_no) +
                             ": expected 'symbol<TAB>count'");
        std::string sym = line.substr(0, tab);
        std::int64_t cnt = std::stoll(line.substr(tab + 1));
        switch (section) {
            case 0: v.words_.push_back(sym); v.counts_.push_back(cnt); break;
            case 1: v.pos_tags_.push_back(sym); v.pos_counts_.push_back(cnt); break;
            default: v.deprels_.push_back(sym); v.deprel_counts_.push_back(cnt); break;
        }
    }
    if (v.num_words() != expect_v)
        throw InputError("vocabulary header says |V|=" + std::to_string(expect_v) +
                         " but file has " + std::to_string(v.num_words()));
    if (v.path_dict_size() != expect_n)
        throw InputError("vocabulary header says n=" + std::to_string(expect_n) +
                         " but file implies " + std::to_string(v.path_dict_size()));
    if (v.words_.empty() || v.words_[0] != kUnkSurface)
        throw InputError("vocabulary must start with " + kUnkSurface);
    v.rebuild_maps();
    return v;
}

}  // namespace pod
