#ifndef POD_CHECKPOINT_HPP
#define POD_CHECKPOINT_HPP

#include <iosfwd>

#include "pod/model.hpp"
#include "pod/vocab.hpp"

namespace pod {

// Extraction settings a checkpoint was trained with; needed to rebuild the
// same triples at feature time.
struct CheckpointMeta {
    PathLex lex;
    int max_path_edges = 8;
};

// Text header ("#pod-checkpoint v1", key=value lines, "#data") followed by
// raw row-major float32 blocks in fixed order: Mt, Mc, Ml, Mdep, Wx, Wh, b.
void save_checkpoint(std::ostream& out, const ModelParams& params,
                     const CheckpointMeta& meta);
ModelParams load_checkpoint(std::istream& in, CheckpointMeta& meta);

enum class ExportMatrix { Target, Context, Concat };

// word2vec text format: "|V| d" then one "word v1 ... vd" line per word.
void export_word2vec(std::ostream& out, const ModelParams& params,
                     const Vocabulary& vocab, ExportMatrix which,
                     bool l2_normalize);

}  // namespace pod

#endif  // POD_CHECKPOINT_HPP
