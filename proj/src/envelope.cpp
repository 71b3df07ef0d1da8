#include "spreadcode/envelope.hpp"

#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>
#include <thread>

namespace spreadcode {

namespace {

// Fixed-order pairwise (cascade) summation: deterministic and far more
// accurate than naive left-to-right accumulation on long grids.
double pairwise_sum(const double* data, std::size_t count) {
    if (count <= 8) {
        double acc = 0.0;
        for (std::size_t i = 0; i < count; ++i) acc += data[i];
        return acc;
    }
    const std::size_t half = count / 2;
    return pairwise_sum(data, half) + pairwise_sum(data + half, count - half);
}

void validate(const envelope_config& cfg) {
    if (cfg.codes.empty())
        throw std::invalid_argument("envelope needs at least one code");
    const int n = cfg.length();
    if (n < 1) throw std::invalid_argument("codes must be non-empty");
    for (const auto& c : cfg.codes)
        if (static_cast<int>(c.size()) != n)
            throw std::invalid_argument("all codes must share one length");
    if (cfg.data_bits.size() != cfg.code_count())
        throw std::invalid_argument("one data bit per code required");
    if (!is_bipolar(cfg.data_bits))
        throw std::invalid_argument("data bits must be +1 or -1");
    if (!(cfg.subcarrier_separation > 0))
        throw std::invalid_argument("subcarrier separation must be positive");
    if (cfg.oversampling < 4 * n)
        throw std::invalid_argument("oversampling must be at least 4x the code length");
}

}  // namespace

collective_corr collective_correlations(const envelope_config& cfg) {
    validate(cfg);
    const int n = cfg.length();
    const int l_count = cfg.code_count();
    collective_corr out;
    out.auto_terms = corr_series::Zero(n - 1);
    out.cross_terms = corr_series::Zero(n - 1);
    for (int shift = 1; shift < n; ++shift)
        for (int l = 0; l < l_count; ++l)
            out.auto_terms[shift - 1] +=
                aperiodic_correlation(cfg.codes[l], cfg.codes[l], shift);
    for (int l = 0; l < l_count; ++l) {
        for (int lp = 0; lp < l_count; ++lp) {
            if (l == lp) continue;
            const std::int64_t sign =
                static_cast<std::int64_t>(cfg.data_bits[l]) * cfg.data_bits[lp];
            out.zero_shift_cross +=
                sign * aperiodic_correlation(cfg.codes[l], cfg.codes[lp], 0);
            for (int shift = 1; shift < n; ++shift)
                out.cross_terms[shift - 1] +=
                    sign * aperiodic_correlation(cfg.codes[l], cfg.codes[lp], shift);
        }
    }
    return out;
}

envelope_result envelope_power(const envelope_config& cfg, int threads) {
    const collective_corr cc = collective_correlations(cfg);
    const int n = cfg.length();
    const int samples = cfg.oversampling;
    const double l_count = cfg.code_count();
    const double separation = cfg.subcarrier_separation;

    envelope_result res;
    res.collective_auto = cc.auto_terms;
    res.collective_cross = cc.cross_terms;
    res.zero_shift_cross = cc.zero_shift_cross;
    res.power_samples.resize(samples);

    Eigen::ArrayXd coeff(n - 1);
    for (int shift = 1; shift < n; ++shift)
        coeff[shift - 1] =
            static_cast<double>(cc.auto_terms[shift - 1] + cc.cross_terms[shift - 1]);

    const int worker_count = [&] {
        int t = threads > 0 ? threads
                            : static_cast<int>(std::thread::hardware_concurrency());
        if (t < 1) t = 1;
        return std::min(t, samples);
    }();

    // Each sample's spectral sum is evaluated independently in a fixed
    // term order, so splitting the grid across threads cannot change bits.
    const auto eval_range = [&](int begin, int end) {
        Eigen::ArrayXd terms(n - 1);
        for (int k = begin; k < end; ++k) {
            const double t = static_cast<double>(k) / samples;
            const double base = 2.0 * std::numbers::pi * separation * t;
            for (int shift = 1; shift < n; ++shift)
                terms[shift - 1] = coeff[shift - 1] * std::cos(base * shift);
            res.power_samples[k] =
                l_count + (2.0 / n) * pairwise_sum(terms.data(), terms.size());
        }
    };
    if (worker_count == 1) {
        eval_range(0, samples);
    } else {
        std::vector<std::thread> workers;
        for (int w = 0; w < worker_count; ++w)
            workers.emplace_back(eval_range, samples * w / worker_count,
                                 samples * (w + 1) / worker_count);
        for (auto& t : workers) t.join();
    }

    res.peak_power = res.power_samples.maxCoeff();
    res.mean_power = pairwise_sum(res.power_samples.data(), samples) / samples;
    res.papr_linear = res.peak_power / res.mean_power;
    res.papr_db = 10.0 * std::log10(res.papr_linear);
    return res;
}

papr_summary papr_sweep(const code_family& f, int code_count,
                        double subcarrier_separation, int oversampling,
                        int random_samples, std::uint64_t seed, int threads) {
    if (code_count < 1 || code_count > f.size())
        throw std::invalid_argument("code count must be within the family size");
    const int n = f.length();
    if (oversampling == 0) oversampling = 4 * n;

    envelope_config cfg;
    cfg.subcarrier_separation = subcarrier_separation;
    cfg.oversampling = oversampling;
    for (int l = 0; l < code_count; ++l)
        cfg.codes.push_back(f.members[l].chips);

    papr_summary sum;
    sum.code_count = code_count;
    sum.exhaustive = code_count <= 10;
    sum.seed = sum.exhaustive ? 0 : seed;

    // Sign patterns in a fixed order: all 2^L masks ascending when
    // exhaustive, otherwise a fixed-seed pseudo-random draw per pattern.
    std::vector<std::vector<int>> patterns;
    if (sum.exhaustive) {
        for (std::uint32_t mask = 0; mask < (1u << code_count); ++mask) {
            std::vector<int> bits(code_count);
            for (int l = 0; l < code_count; ++l)
                bits[l] = (mask >> l) & 1u ? -1 : 1;
            patterns.push_back(std::move(bits));
        }
    } else {
        std::mt19937_64 rng(seed);
        for (int p = 0; p < random_samples; ++p) {
            std::vector<int> bits(code_count);
            for (int l = 0; l < code_count; ++l)
                bits[l] = rng() & 1u ? -1 : 1;
            patterns.push_back(std::move(bits));
        }
    }
    sum.pattern_count = static_cast<int>(patterns.size());

    std::vector<double> papr(patterns.size());
    std::vector<envelope_result> results(patterns.size());
    const int worker_count = [&] {
        int t = threads > 0 ? threads
                            : static_cast<int>(std::thread::hardware_concurrency());
        if (t < 1) t = 1;
        return static_cast<int>(
            std::min<std::size_t>(static_cast<std::size_t>(t), patterns.size()));
    }();
    const auto eval_range = [&](std::size_t begin, std::size_t end) {
        for (std::size_t p = begin; p < end; ++p) {
            envelope_config c = cfg;
            c.data_bits = Eigen::Map<const Eigen::ArrayXi>(
                patterns[p].data(), static_cast<Eigen::Index>(patterns[p].size()));
            results[p] = envelope_power(c, 1);
            papr[p] = results[p].papr_linear;
        }
    };
    if (worker_count == 1) {
        eval_range(0, patterns.size());
    } else {
        std::vector<std::thread> workers;
        for (int w = 0; w < worker_count; ++w)
            workers.emplace_back(eval_range, patterns.size() * w / worker_count,
                                 patterns.size() * (w + 1) / worker_count);
        for (auto& t : workers) t.join();
    }

    // Reduce in pattern order regardless of how the work was split.
    std::size_t worst = 0;
    for (std::size_t p = 1; p < papr.size(); ++p)
        if (papr[p] > papr[worst]) worst = p;
    sum.worst_papr_linear = papr[worst];
    sum.worst_papr_db = 10.0 * std::log10(papr[worst]);
    sum.mean_papr_linear = pairwise_sum(papr.data(), papr.size()) / papr.size();
    for (int l = 0; l < code_count; ++l)
        sum.worst_pattern += patterns[worst][l] > 0 ? '+' : '-';
    sum.worst_result = std::move(results[worst]);
    return sum;
}

}
