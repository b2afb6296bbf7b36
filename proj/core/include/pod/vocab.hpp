#ifndef POD_VOCAB_HPP
#define POD_VOCAB_HPP

#include <iosfwd>
#include <string>
#include <unordered_map>
#include <vector>

#include "pod/types.hpp"

namespace pod {

// Word vocabulary plus the path-token dictionary. Ids form one space of size
// n used for path-embedding lookups:
//   [0, |V|)                      kept words, id 0 = UNK
//   [|V|, |V|+P)                  POS tags
//   [|V|+P, |V|+P+2R)             directed edge labels, forward/backward
//                                 interleaved per relation
// Read-only after build; safe to share across training workers.
class Vocabulary {
  public:
    static constexpr int kUnkId = 0;
    static const std::string kUnkSurface;

    int word_id(const std::string& surface) const {
        auto it = word_ids_.find(surface);
        return it == word_ids_.end() ? kUnkId : it->second;
    }
    bool has_word(const std::string& surface) const {
        return word_ids_.count(surface) != 0;
    }
    const std::string& word(int id) const { return words_[id]; }
    std::int64_t count(int id) const { return counts_[id]; }
    const std::vector<std::int64_t>& counts() const { return counts_; }
    int num_words() const { return static_cast<int>(words_.size()); }

    int pos_path_id(const std::string& tag) const;
    int edge_path_id(const std::string& deprel, bool forward) const;
    // Total path-dictionary size n = |V| + #pos + 2 * #deprels.
    int path_dict_size() const;
    // Human-readable form of any path-dictionary id ("smells", "VBZ",
    // "xcomp>", "<nsubj").
    std::string path_symbol(int path_id) const;

    int num_pos() const { return static_cast<int>(pos_tags_.size()); }
    int num_deprels() const { return static_cast<int>(deprels_.size()); }

    void save(std::ostream& out) const;
    static Vocabulary load(std::istream& in);

    friend Vocabulary build_vocab(const std::vector<ParsedSentence>& sentences,
                                  int min_count);

  private:
    std::vector<std::string> words_;
    std::vector<std::int64_t> counts_;
    std::unordered_map<std::string, int> word_ids_;

    std::vector<std::string> pos_tags_;
    std::vector<std::int64_t> pos_counts_;
    std::unordered_map<std::string, int> pos_index_;

    std::vector<std::string> deprels_;
    std::vector<std::int64_t> deprel_counts_;
    std::unordered_map<std::string, int> deprel_index_;

    void rebuild_maps();
};

// Words below min_count collapse to UNK (id 0); POS tags and dependency
// relations observed anywhere in the corpus are registered unconditionally.
// Throws InputError on an empty corpus.
Vocabulary build_vocab(const std::vector<ParsedSentence>& sentences,
                       int min_count);

}  // namespace pod

#endif  // POD_VOCAB_HPP
