#ifndef POD_CONLLU_HPP
#define POD_CONLLU_HPP

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "pod/types.hpp"

namespace pod {

struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Which CoNLL-U column supplies the POS tag.
enum class PosField { Xpos, Upos };

struct ConlluOptions {
    PosField pos_field = PosField::Xpos;
};

// Per-stream diagnostics. Rejected sentences do not stop the reader.
struct ReadReport {
    struct Issue {
        std::size_t line;
        std::string message;
    };
    std::vector<Issue> rejected;
    std::size_t sentences_read = 0;
    std::size_t bio_repairs = 0;

    std::size_t rejected_count() const { return rejected.size(); }
};

// Reads blank-line separated CoNLL-U blocks. Comment lines ('#') and
// multiword-token ranges ("3-4") are skipped. Sentences whose head links do
// not form a tree, or with malformed columns, are rejected with a line-level
// diagnostic and reading continues.
std::vector<ParsedSentence> read_conllu(std::istream& in, ReadReport& report,
                                        const ConlluOptions& opts = {});

// CoNLL-U plus an 11th column in {B, I, O}. A leading I (sentence start or
// after O) is repaired to B; repairs are counted in the report. A missing tag
// column is a hard error naming the line.
std::vector<std::pair<ParsedSentence, TagSequence>> read_labeled(
    std::istream& in, ReadReport& report, const ConlluOptions& opts = {});

// Writes sentences back out as 10-column CoNLL-U; tags, when present, become
// the 11th column and extra_tags a 12th (used for predictions).
void write_labeled(std::ostream& out,
                   const std::vector<std::pair<ParsedSentence, TagSequence>>& data,
                   const std::vector<TagSequence>* extra_tags = nullptr);

}  // namespace pod

#endif  // POD_CONLLU_HPP
