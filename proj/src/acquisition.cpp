#include "moho/acquisition.hpp"

#include <algorithm>
#include <cmath>

namespace moho {

void AcquisitionSettings::validate() const {
    if (n_random_candidates < 1 || n_local_starts < 1 || local_steps < 1 ||
        duplicate_retry_limit < 1)
        throw std::invalid_argument("acquisition settings must be positive");
}

namespace {

double normal_cdf(double z) { return 0.5 * std::erfc(-z / std::sqrt(2.0)); }

double normal_pdf(double z) {
    return std::exp(-0.5 * z * z) / std::sqrt(2.0 * 3.141592653589793238462643383279502884);
}

bool encoded_equal(const std::vector<double>& a, const std::vector<double>& b,
                   const ConfigSpace& space) {
    for (int j = 0; j < space.size(); ++j) {
        const auto js = static_cast<size_t>(j);
        if (space.spec(j).kind == ParamKind::Continuous) {
            if (std::abs(a[js] - b[js]) > 1e-12) return false;
        } else {
            if (a[js] != b[js]) return false;
        }
    }
    return true;
}

bool seen_before(const std::vector<double>& enc,
                 const std::vector<std::vector<double>>& history_encoded,
                 const ConfigSpace& space) {
    return std::any_of(history_encoded.begin(), history_encoded.end(),
                       [&](const auto& h) { return encoded_equal(enc, h, space); });
}

constexpr int kNeighborsPerStep = 8;

}  // namespace

double expected_improvement(double mean, double variance, double best) {
    if (variance < 0.0) throw std::invalid_argument("negative variance");
    if (variance == 0.0) return std::max(best - mean, 0.0);
    const double sigma = std::sqrt(variance);
    const double z = (best - mean) / sigma;
    return sigma * (z * normal_cdf(z) + normal_pdf(z));
}

Configuration optimize_acquisition(const ConfigSpace& space, const Forest& forest,
                                   const std::vector<std::vector<double>>& history_encoded,
                                   double best_scalarized,
                                   const AcquisitionSettings& settings, Rng& rng) {
    settings.validate();

    if (space.tunable_count() == 0) {
        // A fully fixed space exposes exactly one configuration.
        Configuration only = default_configuration(space);
        if (seen_before(encode(only, space), history_encoded, space))
            throw SpaceExhausted();
        return only;
    }

    struct Candidate {
        Configuration config;
        std::vector<double> enc;
        double ei;
    };
    auto make_candidate = [&](Configuration c) {
        Candidate cand{std::move(c), {}, 0.0};
        cand.enc = encode(cand.config, space);
        auto [mean, var] = forest.predict(cand.enc);
        cand.ei = expected_improvement(mean, var, best_scalarized);
        return cand;
    };

    std::vector<Candidate> candidates;
    candidates.reserve(static_cast<size_t>(settings.n_random_candidates));
    for (int i = 0; i < settings.n_random_candidates; ++i)
        candidates.push_back(make_candidate(sample_one(space, rng)));

    // Hill-climb from the best random starts.
    std::vector<size_t> order(candidates.size());
    for (size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(), [&](size_t a, size_t b) {
        return candidates[a].ei > candidates[b].ei;
    });
    const int starts = std::min<int>(settings.n_local_starts,
                                     static_cast<int>(order.size()));
    for (int s = 0; s < starts; ++s) {
        Candidate current = candidates[order[static_cast<size_t>(s)]];
        for (int step = 0; step < settings.local_steps; ++step) {
            auto moves = neighbors(current.config, space, kNeighborsPerStep, rng);
            Candidate best_move{{}, {}, -1.0};
            for (auto& m : moves) {
                Candidate c = make_candidate(std::move(m));
                if (c.ei > best_move.ei) best_move = std::move(c);
            }
            if (best_move.ei <= current.ei) break;
            current = std::move(best_move);
            candidates.push_back(current);
        }
    }

    std::stable_sort(candidates.begin(), candidates.end(),
                     [](const Candidate& a, const Candidate& b) { return a.ei > b.ei; });
    for (const auto& c : candidates) {
        if (!seen_before(c.enc, history_encoded, space)) return c.config;
    }

    // Every candidate duplicates history; resample before giving up.
    for (int attempt = 0; attempt < settings.duplicate_retry_limit; ++attempt) {
        Configuration c = sample_one(space, rng);
        if (!seen_before(encode(c, space), history_encoded, space)) return c;
    }
    throw SpaceExhausted();
}

}  // namespace moho
