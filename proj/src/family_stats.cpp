#include "spreadcode/family_stats.hpp"

#include <unsupported/Eigen/FFT>

#include <algorithm>
#include <cmath>
#include <complex>
#include <stdexcept>
#include <thread>

namespace spreadcode {

namespace {

using cd = std::complex<double>;

// Members' spectra cached once so the pair scan does one inverse transform
// per pair.  Kept read-only while worker threads run.
struct spectrum_cache {
    int length = 0;
    std::vector<std::vector<cd>> spectra;
};

spectrum_cache build_spectra(const code_family& f) {
    spectrum_cache cache;
    cache.length = f.length();
    Eigen::FFT<double> fft;
    std::vector<double> time(cache.length);
    cache.spectra.reserve(f.members.size());
    for (const auto& m : f.members) {
        for (int i = 0; i < cache.length; ++i) time[i] = m.chips[i];
        std::vector<cd> spec;
        fft.fwd(spec, time);
        cache.spectra.push_back(std::move(spec));
    }
    return cache;
}

corr_profile profile_from_spectra(Eigen::FFT<double>& fft,
                                  const spectrum_cache& cache,
                                  int i, int j) {
    const int n = cache.length;
    std::vector<cd> cross(n);
    for (int k = 0; k < n; ++k)
        cross[k] = std::conj(cache.spectra[i][k]) * cache.spectra[j][k];
    std::vector<cd> time;
    fft.inv(time, cross);
    corr_profile out(n);
    for (int d = 0; d < n; ++d) out[d] = std::llround(time[d].real());
    return out;
}

// Presence bitmap over the value range [-N, N] plus a positive maximum.
// Union and max are commutative, so per-thread partials merge to the same
// result in any order.
struct value_scan {
    std::vector<bool> present;
    corr_value peak_positive = 0;

    explicit value_scan(int length) : present(2 * length + 1, false) {}

    void add(corr_value v, int length) {
        present[static_cast<std::size_t>(v + length)] = true;
        if (v > peak_positive) peak_positive = v;
    }
    void merge(const value_scan& other) {
        for (std::size_t k = 0; k < present.size(); ++k)
            if (other.present[k]) present[k] = true;
        if (other.peak_positive > peak_positive) peak_positive = other.peak_positive;
    }
    std::vector<corr_value> values(int length) const {
        std::vector<corr_value> out;
        for (std::size_t k = 0; k < present.size(); ++k)
            if (present[k]) out.push_back(static_cast<corr_value>(k) - length);
        return out;
    }
};

int resolve_threads(int threads) {
    if (threads > 0) return threads;
    const unsigned hw = std::thread::hardware_concurrency();
    return hw ? static_cast<int>(hw) : 1;
}

}  // namespace

family_correlation_report analyze_family(const code_family& f, int threads) {
    if (f.members.empty())
        throw std::invalid_argument("cannot analyze an empty family");
    const int n = f.length();
    const int m = f.size();
    for (const auto& member : f.members)
        if (member.length() != n)
            throw std::invalid_argument("family members must share one length");

    family_correlation_report rep;
    rep.length = n;
    rep.family_size = m;

    // Direct summation below 64 chips, spectra above; the two paths agree
    // bit-exactly on integers (property-tested).
    const bool use_fft = n >= 64;
    const spectrum_cache cache = use_fft ? build_spectra(f) : spectrum_cache{};
    const auto pair_profile = [&](Eigen::FFT<double>& fft, int i, int j) {
        if (use_fft) return profile_from_spectra(fft, cache, i, j);
        return periodic_profile(f.members[i].chips, f.members[j].chips);
    };

    // Member ACF scan: distinct values over all shifts, positive sidelobe
    // peak, and the members with ideal two-valued {-1, N} profiles.
    value_scan acf(n);
    {
        Eigen::FFT<double> fft;
        for (int i = 0; i < m; ++i) {
            const corr_profile p = pair_profile(fft, i, i);
            bool impulsive = true;
            acf.add(p[0], n);
            for (int d = 1; d < n; ++d) {
                acf.present[static_cast<std::size_t>(p[d] + n)] = true;
                if (p[d] > rep.acf_peak_sidelobe) rep.acf_peak_sidelobe = p[d];
                if (p[d] != -1) impulsive = false;
            }
            if (impulsive) rep.impulsive_members.push_back(i);
        }
    }
    rep.acf_values = acf.values(n);

    // Pair CCF scan, split across threads by contiguous ranges of the
    // linearized unordered-pair index.
    const std::int64_t pair_count = static_cast<std::int64_t>(m) * (m - 1) / 2;
    const int worker_count =
        static_cast<int>(std::min<std::int64_t>(resolve_threads(threads),
                                                std::max<std::int64_t>(pair_count, 1)));
    std::vector<value_scan> partial(worker_count, value_scan(n));
    {
        std::vector<std::thread> workers;
        for (int w = 0; w < worker_count; ++w) {
            workers.emplace_back([&, w] {
                Eigen::FFT<double> fft;
                const std::int64_t begin = pair_count * w / worker_count;
                const std::int64_t end = pair_count * (w + 1) / worker_count;
                std::int64_t idx = 0;
                for (int i = 0; i < m && idx < end; ++i) {
                    for (int j = i + 1; j < m && idx < end; ++j, ++idx) {
                        if (idx < begin) continue;
                        const corr_profile p = pair_profile(fft, i, j);
                        for (int d = 0; d < n; ++d) partial[w].add(p[d], n);
                    }
                }
            });
        }
        for (auto& t : workers) t.join();
    }
    value_scan ccf(n);
    for (const auto& part : partial) ccf.merge(part);
    rep.ccf_values = ccf.values(n);
    rep.ccf_peak = ccf.peak_positive;

    if (rep.acf_peak_sidelobe > 0)
        rep.acf_peak_db = peak_db_wrt_length(rep.acf_peak_sidelobe, n);
    if (rep.ccf_peak > 0)
        rep.ccf_peak_db = peak_db_wrt_length(rep.ccf_peak, n);

    // Seed-row -1 share: each seed sequence against every member (itself
    // included), nonzero shifts only.
    {
        Eigen::FFT<double> fft;
        const int seeds = std::min(std::max(f.seed_count, 1), m);
        for (int s = 0; s < seeds; ++s) {
            for (int j = 0; j < m; ++j) {
                const corr_profile p = pair_profile(fft, s, j);
                for (int d = 1; d < n; ++d)
                    if (p[d] == -1) ++rep.minus_one_count;
            }
        }
        rep.correlation_entries = static_cast<std::int64_t>(seeds) * m * (n - 1);
    }
    rep.percent_minus_one =
        100.0 * static_cast<double>(rep.minus_one_count) / static_cast<double>(rep.correlation_entries);

    return rep;
}

double percent_minus_one(const code_family& f) {
    return analyze_family(f).percent_minus_one;
}

}
