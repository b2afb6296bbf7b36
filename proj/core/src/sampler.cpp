#include "pod/sampler.hpp"

#include <cmath>
#include <stdexcept>

namespace pod {

NegativeSampler::NegativeSampler(const std::vector<std::int64_t>& counts,
                                 double power) {
    const int n = static_cast<int>(counts.size());
    p_.assign(n, 0.0);
    double total = 0.0;
    for (int i = 0; i < n; ++i) {
        if (counts[i] > 0) p_[i] = std::pow(static_cast<double>(counts[i]), power);
        total += p_[i];
    }
    if (total <= 0.0)
        throw std::invalid_argument("sampler needs at least one positive count");
    for (auto& p : p_) p /= total;

    // Walker alias construction.
    prob_.assign(n, 0.0);
    alias_.assign(n, 0);
    std::vector<int> small, large;
    std::vector<double> scaled(n);
    for (int i = 0; i < n; ++i) {
        scaled[i] = p_[i] * n;
        (scaled[i] < 1.0 ? small : large).push_back(i);
    }
    while (!small.empty() && !large.empty()) {
        const int s = small.back(); small.pop_back();
        const int l = large.back(); large.pop_back();
        prob_[s] = scaled[s];
        alias_[s] = l;
        scaled[l] = scaled[l] + scaled[s] - 1.0;
        (scaled[l] < 1.0 ? small : large).push_back(l);
    }
    for (int i : large) { prob_[i] = 1.0; alias_[i] = i; }
    for (int i : small) { prob_[i] = 1.0; alias_[i] = i; }
}

int NegativeSampler::sample(std::mt19937_64& rng) const {
    const int n = support_size();
    std::uniform_int_distribution<int> slot(0, n - 1);
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    const int i = slot(rng);
    return coin(rng) < prob_[i] ? i : alias_[i];
}

std::vector<int> NegativeSampler::sample_negatives(
    int k, int exclude, std::mt19937_64& rng,
    std::uint64_t& retry_exhausted) const {
    if (k < 1) throw std::invalid_argument("k must be >= 1");
    int valid = 0;
    for (int i = 0; i < support_size(); ++i)
        if (p_[i] > 0.0 && i != exclude) ++valid;
    if (valid == 0)
        throw std::invalid_argument("no valid negative exists besides the excluded word");

    std::vector<int> out;
    out.reserve(k);
    for (int j = 0; j < k; ++j) {
        int w = sample(rng);
        int tries = 0;
        while (w == exclude && tries < kMaxRetries) {
            w = sample(rng);
            ++tries;
        }
        if (w == exclude) ++retry_exhausted;
        out.push_back(w);
    }
    return out;
}

double NegativeSampler::probability(int id) const {
    // Reconstructs p from the table: mass kept in the slot plus mass routed
    // here by aliases.
    const int n = support_size();
    double mass = prob_[id];
    for (int i = 0; i < n; ++i)
        if (alias_[i] == id && i != id) mass += 1.0 - prob_[i];
    return mass / n;
}

}  // namespace pod
