#include "pod/model.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

namespace pod {

namespace {

void fill_uniform(std::vector<double>& v, double lo, double hi,
                  std::mt19937_64& rng) {
    std::uniform_real_distribution<double> dist(lo, hi);
    for (auto& x : v) x = dist(rng);
}

// Runs the Elman recurrence over the path, filling masked inputs g and hidden
// states h.
void run_encoder(const std::vector<std::int32_t>& path, const ModelParams& params,
                 const DropoutMask* mask, std::vector<Vec>& g, std::vector<Vec>& h) {
    if (path.empty())
        throw std::invalid_argument("encode_path requires a non-empty path");
    const int d = params.dim();
    const std::size_t steps = path.size();
    g.assign(steps, Vec(d));
    h.assign(steps, Vec(d));
    Vec prev(d, 0.0);
    for (std::size_t i = 0; i < steps; ++i) {
        const double* row = params.Mdep.row(path[i]);
        Vec& gi = g[i];
        if (mask && !mask->empty()) {
            const std::uint8_t* keep = mask->keep.data() + i * d;
            for (int j = 0; j < d; ++j)
                gi[j] = keep[j] ? row[j] * mask->scale : 0.0;
        } else {
            gi.assign(row, row + d);
        }
        Vec& hi = h[i];
        for (int j = 0; j < d; ++j) {
            double acc = params.enc.b[j];
            const double* wx = params.enc.Wx.row(j);
            const double* wh = params.enc.Wh.row(j);
            for (int k = 0; k < d; ++k) acc += wx[k] * gi[k] + wh[k] * prev[k];
            hi[j] = std::tanh(acc);
        }
        prev = hi;
    }
}

}  // namespace

ModelParams init_params(int vocab_size, int path_dict_size, int window, int dim,
                        double alpha, ScoreKind kind, std::uint64_t seed) {
    if (window < 3 || window % 2 == 0)
        throw std::invalid_argument("window must be odd and >= 3");
    if (dim < 1) throw std::invalid_argument("dim must be >= 1");
    if (alpha < 0.0 || alpha > 1.0)
        throw std::invalid_argument("alpha must be in [0, 1]");

    ModelParams p;
    p.Mt = Matrix(vocab_size, dim);
    p.Mc = Matrix(vocab_size, dim);
    p.Ml = Matrix(window - 1, dim);
    p.Mdep = Matrix(path_dict_size, dim);
    p.enc.Wx = Matrix(dim, dim);
    p.enc.Wh = Matrix(dim, dim);
    p.enc.b.assign(dim, 0.0);
    p.alpha = alpha;
    p.score_kind = kind;

    std::mt19937_64 rng(seed);
    const double r = 0.5 / dim;
    fill_uniform(p.Mt.a, -r, r, rng);
    fill_uniform(p.Mc.a, -r, r, rng);
    fill_uniform(p.Ml.a, -r, r, rng);
    fill_uniform(p.Mdep.a, -r, r, rng);
    const double g = std::sqrt(6.0 / (2.0 * dim));
    fill_uniform(p.enc.Wx.a, -g, g, rng);
    fill_uniform(p.enc.Wh.a, -g, g, rng);
    return p;
}

int position_index(int offset, int window) {
    const int half = (window - 1) / 2;
    if (offset == 0 || offset < -half || offset > half)
        throw std::domain_error("offset " + std::to_string(offset) +
                                " out of range for window " + std::to_string(window));
    return offset < 0 ? offset + half : half + offset - 1;
}

Vec compose_context(const Vec& c_pos, const Vec& c_dep, double alpha) {
    Vec c(c_pos.size());
    for (std::size_t j = 0; j < c.size(); ++j)
        c[j] = alpha * c_pos[j] + (1.0 - alpha) * c_dep[j];
    return c;
}

void forward_context(const ContextTriple& triple, const ModelParams& params,
                     const DropoutMask* mask, ContextForward& fwd) {
    const int d = params.dim();
    fwd.ml_row = position_index(triple.offset, params.window());
    const double* pos_row = params.Ml.row(fwd.ml_row);
    fwd.c_pos.assign(pos_row, pos_row + d);

    fwd.g.clear();
    fwd.h.clear();
    fwd.c_dep.assign(d, 0.0);
    if (params.alpha != 1.0) {
        // At alpha = 1 the encoder contributes nothing to c or to gradients.
        run_encoder(triple.path, params, mask, fwd.g, fwd.h);
        fwd.c_dep = fwd.h.back();
    }
    fwd.c = compose_context(fwd.c_pos, fwd.c_dep, params.alpha);
}

Vec encode_path(const std::vector<std::int32_t>& path, const ModelParams& params,
                const DropoutMask* mask) {
    std::vector<Vec> g, h;
    run_encoder(path, params, mask, g, h);
    return h.back();
}

double score(const ContextTriple& triple, const ModelParams& params) {
    ContextForward fwd;
    forward_context(triple, params, nullptr, fwd);
    const int d = params.dim();
    const double* wt = params.Mt.row(triple.target);
    const double* wc = params.Mc.row(triple.context);
    double s = 0.0;
    if (params.score_kind == ScoreKind::Add) {
        for (int j = 0; j < d; ++j) s += (wc[j] + fwd.c[j]) * wt[j];
    } else {
        for (int j = 0; j < d; ++j) s += wc[j] * fwd.c[j] * wt[j];
    }
    return s;
}

void TripleGrads::clear() {
    mt_rows.clear();
    mc_rows.clear();
    ml_rows.clear();
    mdep_rows.clear();
    dWx = Matrix();
    dWh = Matrix();
    db.clear();
}

namespace {

// Accumulates vec into the entry for `row`, creating it if absent.
void add_row(std::vector<std::pair<int, Vec>>& rows, int row, const Vec& vec) {
    for (auto& [r, v] : rows) {
        if (r == row) {
            for (std::size_t j = 0; j < v.size(); ++j) v[j] += vec[j];
            return;
        }
    }
    rows.emplace_back(row, vec);
}

}  // namespace

void backward_context(const ContextTriple& triple, const ContextForward& fwd,
                      const ModelParams& params, const DropoutMask* mask,
                      const Vec& dc, TripleGrads& grads) {
    const int d = params.dim();
    const double alpha = params.alpha;

    if (alpha != 0.0) {
        Vec dml(d);
        for (int j = 0; j < d; ++j) dml[j] = alpha * dc[j];
        add_row(grads.ml_rows, fwd.ml_row, dml);
    }
    if (alpha == 1.0) return;

    if (grads.dWx.rows == 0) {
        grads.dWx = Matrix(d, d);
        grads.dWh = Matrix(d, d);
        grads.db.assign(d, 0.0);
    }

    const std::size_t steps = triple.path.size();
    Vec dh(d);
    for (int j = 0; j < d; ++j) dh[j] = (1.0 - alpha) * dc[j];

    Vec delta(d), dprev(d), dg(d);
    for (std::size_t i = steps; i-- > 0;) {
        const Vec& hi = fwd.h[i];
        for (int j = 0; j < d; ++j) delta[j] = dh[j] * (1.0 - hi[j] * hi[j]);

        const Vec& gi = fwd.g[i];
        const Vec* hprev = i > 0 ? &fwd.h[i - 1] : nullptr;
        for (int j = 0; j < d; ++j) {
            grads.db[j] += delta[j];
            double* dwx = grads.dWx.row(j);
            for (int k = 0; k < d; ++k) dwx[k] += delta[j] * gi[k];
            if (hprev) {
                double* dwh = grads.dWh.row(j);
                for (int k = 0; k < d; ++k) dwh[k] += delta[j] * (*hprev)[k];
            }
        }
        // dg = Wx^T delta, dh_prev = Wh^T delta
        std::fill(dg.begin(), dg.end(), 0.0);
        std::fill(dprev.begin(), dprev.end(), 0.0);
        for (int j = 0; j < d; ++j) {
            const double dj = delta[j];
            const double* wx = params.enc.Wx.row(j);
            const double* wh = params.enc.Wh.row(j);
            for (int k = 0; k < d; ++k) {
                dg[k] += wx[k] * dj;
                dprev[k] += wh[k] * dj;
            }
        }
        if (mask && !mask->empty()) {
            const std::uint8_t* keep = mask->keep.data() + i * d;
            for (int j = 0; j < d; ++j) dg[j] = keep[j] ? dg[j] * mask->scale : 0.0;
        }
        add_row(grads.mdep_rows, triple.path[i], dg);
        dh = dprev;
    }
}

double score_with_grad(const ContextTriple& triple, const ModelParams& params,
                       const DropoutMask* mask, TripleGrads& grads) {
    const int d = params.dim();
    ContextForward fwd;
    forward_context(triple, params, mask, fwd);

    const double* wt = params.Mt.row(triple.target);
    const double* wc = params.Mc.row(triple.context);
    double s = 0.0;
    Vec dwt(d), dwc(d), dc(d);
    if (params.score_kind == ScoreKind::Add) {
        for (int j = 0; j < d; ++j) {
            s += (wc[j] + fwd.c[j]) * wt[j];
            dwt[j] = wc[j] + fwd.c[j];
            dwc[j] = wt[j];
            dc[j] = wt[j];
        }
    } else {
        for (int j = 0; j < d; ++j) {
            s += wc[j] * fwd.c[j] * wt[j];
            dwt[j] = wc[j] * fwd.c[j];
            dwc[j] = fwd.c[j] * wt[j];
            dc[j] = wc[j] * wt[j];
        }
    }
    add_row(grads.mt_rows, triple.target, dwt);
    add_row(grads.mc_rows, triple.context, dwc);
    backward_context(triple, fwd, params, mask, dc, grads);
    return s;
}

}  // namespace pod
