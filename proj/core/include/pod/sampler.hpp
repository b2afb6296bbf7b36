#ifndef POD_SAMPLER_HPP
#define POD_SAMPLER_HPP

#include <cstdint>
#include <random>
#include <vector>

namespace pod {

// Unigram sampler with p(w) proportional to count(w)^power (default 3/4),
// implemented as a Walker alias table. Construction is shared and read-only;
// draws take a caller-owned RNG so workers keep independent streams.
class NegativeSampler {
  public:
    NegativeSampler(const std::vector<std::int64_t>& counts, double power = 0.75);

    int sample(std::mt19937_64& rng) const;

    // k draws excluding `exclude`; a draw hitting the excluded id is redrawn
    // up to kMaxRetries and then kept, bumping retry_exhausted.
    std::vector<int> sample_negatives(int k, int exclude, std::mt19937_64& rng,
                                      std::uint64_t& retry_exhausted) const;

    // Exact sampling probability implied by the alias table (for checks).
    double probability(int id) const;
    int support_size() const { return static_cast<int>(prob_.size()); }

    static constexpr int kMaxRetries = 100;

  private:
    std::vector<double> prob_;   // acceptance probability per slot
    std::vector<int> alias_;
    std::vector<double> p_;      // normalized target distribution
};

}  // namespace pod

#endif  // POD_SAMPLER_HPP
