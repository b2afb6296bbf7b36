#include "pod/checkpoint.hpp"

#include <cmath>
#include <cstdio>
#include <istream>
#include <map>
#include <ostream>
#include <string>

#include "pod/conllu.hpp"

namespace pod {

namespace {

std::string lex_string(const PathLex& lex) {
    if (lex.words && lex.pos) return "words,pos";
    if (lex.words) return "words";
    if (lex.pos) return "pos";
    return "none";
}

PathLex parse_lex(const std::string& s) {
    if (s == "words,pos") return {true, true};
    if (s == "words") return {true, false};
    if (s == "pos") return {false, true};
    if (s == "none") return {false, false};
    throw InputError("bad lex value in checkpoint: " + s);
}

void write_block(std::ostream& out, const std::vector<double>& a) {
    for (double x : a) {
        float f = static_cast<float>(x);
        out.write(reinterpret_cast<const char*>(&f), sizeof f);
    }
}

void read_block(std::istream& in, std::vector<double>& a) {
    for (double& x : a) {
        float f;
        in.read(reinterpret_cast<char*>(&f), sizeof f);
        if (!in) throw InputError("truncated checkpoint data block");
        x = f;
    }
}

std::string fmt_double(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

}  // namespace

void save_checkpoint(std::ostream& out, const ModelParams& params,
                     const CheckpointMeta& meta) {
    out << "#pod-checkpoint v1\n";
    out << "vocab=" << params.vocab_size() << "\n";
    out << "pathdict=" << params.path_dict_size() << "\n";
    out << "window=" << params.window() << "\n";
    out << "dim=" << params.dim() << "\n";
    out << "alpha=" << fmt_double(params.alpha) << "\n";
    out << "score=" << (params.score_kind == ScoreKind::Add ? "add" : "prod") << "\n";
    out << "lex=" << lex_string(meta.lex) << "\n";
    out << "max_path_edges=" << meta.max_path_edges << "\n";
    out << "#data\n";
    write_block(out, params.Mt.a);
    write_block(out, params.Mc.a);
    write_block(out, params.Ml.a);
    write_block(out, params.Mdep.a);
    write_block(out, params.enc.Wx.a);
    write_block(out, params.enc.Wh.a);
    write_block(out, params.enc.b);
}

ModelParams load_checkpoint(std::istream& in, CheckpointMeta& meta) {
    std::string line;
    if (!std::getline(in, line) || line != "#pod-checkpoint v1")
        throw InputError("not a checkpoint (missing '#pod-checkpoint v1' header)");
    std::map<std::string, std::string> kv;
    while (std::getline(in, line)) {
        if (line == "#data") break;
        auto eq = line.find('=');
        if (eq == std::string::npos)
            throw InputError("malformed checkpoint header line: " + line);
        kv[line.substr(0, eq)] = line.substr(eq + 1);
    }
    auto need = [&](const std::string& key) -> const std::string& {
        auto it = kv.find(key);
        if (it == kv.end()) throw InputError("checkpoint header missing " + key);
        return it->second;
    };
    const int vocab = std::stoi(need("vocab"));
    const int pathdict = std::stoi(need("pathdict"));
    const int window = std::stoi(need("window"));
    const int dim = std::stoi(need("dim"));

    ModelParams p;
    p.Mt = Matrix(vocab, dim);
    p.Mc = Matrix(vocab, dim);
    p.Ml = Matrix(window - 1, dim);
    p.Mdep = Matrix(pathdict, dim);
    p.enc.Wx = Matrix(dim, dim);
    p.enc.Wh = Matrix(dim, dim);
    p.enc.b.assign(dim, 0.0);
    p.alpha = std::stod(need("alpha"));
    p.score_kind = need("score") == "prod" ? ScoreKind::Product : ScoreKind::Add;
    meta.lex = parse_lex(need("lex"));
    meta.max_path_edges = std::stoi(need("max_path_edges"));

    read_block(in, p.Mt.a);
    read_block(in, p.Mc.a);
    read_block(in, p.Ml.a);
    read_block(in, p.Mdep.a);
    read_block(in, p.enc.Wx.a);
    read_block(in, p.enc.Wh.a);
    read_block(in, p.enc.b);
    return p;
}

void export_word2vec(std::ostream& out, const ModelParams& params,
                     const Vocabulary& vocab, ExportMatrix which,
                     bool l2_normalize) {
    const int d = params.dim();
    const int out_dim = which == ExportMatrix::Concat ? 2 * d : d;
    const int v = params.vocab_size();
    out << v << ' ' << out_dim << '\n';
    std::vector<double> row(out_dim);
    char buf[64];
    for (int i = 0; i < v; ++i) {
        switch (which) {
            case ExportMatrix::Target:
                std::copy(params.Mt.row(i), params.Mt.row(i) + d, row.begin());
                break;
            case ExportMatrix::Context:
                std::copy(params.Mc.row(i), params.Mc.row(i) + d, row.begin());
                break;
            case ExportMatrix::Concat:
                std::copy(params.Mt.row(i), params.Mt.row(i) + d, row.begin());
                std::copy(params.Mc.row(i), params.Mc.row(i) + d, row.begin() + d);
                break;
        }
        if (l2_normalize) {
            double norm = 0.0;
            for (double x : row) norm += x * x;
            norm = std::sqrt(norm);
            if (norm > 0.0)
                for (double& x : row) x /= norm;
        }
        out << vocab.word(i);
        for (double x : row) {
            std::snprintf(buf, sizeof buf, "%.8g", x);
            out << ' ' << buf;
        }
        out << '\n';
    }
}

}  // namespace pod
