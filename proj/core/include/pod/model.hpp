#ifndef POD_MODEL_HPP
#define POD_MODEL_HPP

#include <cstdint>
#include <vector>

#include "pod/context.hpp"

namespace pod {

using Vec = std::vector<double>;

// Dense row-major matrix. Parameters are stored as doubles in memory;
// checkpoints serialize them as 32-bit floats.
struct Matrix {
    int rows = 0;
    int cols = 0;
    std::vector<double> a;

    Matrix() = default;
    Matrix(int r, int c) : rows(r), cols(c), a(static_cast<std::size_t>(r) * c, 0.0) {}
    double* row(int r) { return a.data() + static_cast<std::size_t>(r) * cols; }
    const double* row(int r) const {
        return a.data() + static_cast<std::size_t>(r) * cols;
    }
};

// Single-layer Elman cell: h_i = tanh(Wx g_i + Wh h_{i-1} + b), h_0 = 0.
struct PathEncoder {
    Matrix Wx, Wh;
    Vec b;
};

enum class ScoreKind : std::uint8_t { Add, Product };

struct ModelParams {
    Matrix Mt;   // |V| x d target word embeddings
    Matrix Mc;   // |V| x d context word embeddings
    Matrix Ml;   // (s-1) x d relative position embeddings
    Matrix Mdep; // n x d path token embeddings
    PathEncoder enc;
    double alpha = 0.5;
    ScoreKind score_kind = ScoreKind::Add;

    int dim() const { return Mt.cols; }
    int window() const { return Ml.rows + 1; }
    int vocab_size() const { return Mt.rows; }
    int path_dict_size() const { return Mdep.rows; }
};

// Embedding rows ~ U(-0.5/d, 0.5/d); Wx, Wh ~ U(+-sqrt(6/(2d))); b = 0.
ModelParams init_params(int vocab_size, int path_dict_size, int window, int dim,
                        double alpha, ScoreKind kind, std::uint64_t seed);

// Bijection from the (s-1) legal offsets onto rows 0..s-2: negative offsets
// first, then positive, each in increasing offset order. Throws
// std::domain_error for offset 0 or out-of-window offsets.
int position_index(int offset, int window);

// Inverted dropout over the RNN input vectors: keep[i*dim + j] masks
// component j of path step i; kept components are scaled by 1/(1-rate).
struct DropoutMask {
    std::vector<std::uint8_t> keep;
    double scale = 1.0;

    bool empty() const { return keep.empty(); }
};

Vec compose_context(const Vec& c_pos, const Vec& c_dep, double alpha);

// Last hidden state of the encoder run over the path (training mode when a
// mask is supplied).
Vec encode_path(const std::vector<std::int32_t>& path, const ModelParams& params,
                const DropoutMask* mask = nullptr);

// Forward state of one triple's context, kept for backprop.
struct ContextForward {
    int ml_row = -1;
    Vec c_pos;
    Vec c_dep;
    Vec c;
    std::vector<Vec> g;  // masked RNN inputs
    std::vector<Vec> h;  // hidden states, h[0] = state after first token
};

void forward_context(const ContextTriple& triple, const ModelParams& params,
                     const DropoutMask* mask, ContextForward& fwd);

double score(const ContextTriple& triple, const ModelParams& params);

// Sparse gradient of a scalar function of one or more triple scores. Row
// gradients are keyed by embedding row; encoder gradients are dense.
struct TripleGrads {
    std::vector<std::pair<int, Vec>> mt_rows;
    std::vector<std::pair<int, Vec>> mc_rows;
    std::vector<std::pair<int, Vec>> ml_rows;
    std::vector<std::pair<int, Vec>> mdep_rows;
    Matrix dWx, dWh;
    Vec db;

    void clear();
};

// Adds dL/d(context params) given dL/dc, reusing the cached forward state.
// Backpropagates through the position lookup and through the encoder steps.
void backward_context(const ContextTriple& triple, const ContextForward& fwd,
                      const ModelParams& params, const DropoutMask* mask,
                      const Vec& dc, TripleGrads& grads);

// Score and its exact analytic gradient for a single triple.
double score_with_grad(const ContextTriple& triple, const ModelParams& params,
                       const DropoutMask* mask, TripleGrads& grads);

}  // namespace pod

#endif  // POD_MODEL_HPP
