#include "dyadic/experiments.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdio>
#include <limits>
#include <set>
#include <string>

#include "dyadic/cesaro_numbers.hpp"
#include "dyadic/group.hpp"
#include "dyadic/hardy.hpp"
#include "dyadic/kernels.hpp"
#include "dyadic/means.hpp"
#include "dyadic/transform.hpp"

namespace dyadic {

namespace {

std::string coset_label(int rank, int k, int l) {
    char buffer[48];
    if (l >= 0) {
        std::snprintf(buffer, sizeof(buffer), "I%d(e%d+e%d)", rank, k, l);
    } else {
        std::snprintf(buffer, sizeof(buffer), "I%d(e%d)", rank, k);
    }
    return buffer;
}

double median(std::vector<double> values) {
    if (values.empty()) return 0.0;
    std::sort(values.begin(), values.end());
    const std::size_t mid = values.size() / 2;
    if (values.size() % 2 == 1) return values[mid];
    return 0.5 * (values[mid - 1] + values[mid]);
}

bool all_finite(const std::vector<double>& values) {
    for (double v : values) {
        if (!std::isfinite(v)) return false;
    }
    return true;
}

/// Least-squares slope of y against x.
double fit_slope(const std::vector<double>& x, const std::vector<double>& y) {
    const auto n = static_cast<double>(x.size());
    double mx = 0.0, my = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        mx += x[i];
        my += y[i];
    }
    mx /= n;
    my /= n;
    double num = 0.0, den = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        num += (x[i] - mx) * (y[i] - my);
        den += (x[i] - mx) * (x[i] - mx);
    }
    return num / den;
}

// Complement-partition class of a nonzero low-bit pattern: k is the lowest
// set bit; l the second-lowest when one exists below the partition rank.
struct CosetClass {
    int k;
    int l;  // -1 for the single-generator cosets I_M(e_k)
};

CosetClass classify_low_bits(std::uint32_t low) {
    const int k = std::countr_zero(low);
    const std::uint32_t rest = low & (low - 1);
    return CosetClass{k, rest == 0 ? -1 : std::countr_zero(rest)};
}

}  // namespace

ExperimentReport run_kernels(const KernelsParams& params) {
    const int M = params.resolution;
    check_resolution(M);
    if (params.n_max == 0 || params.n_max > slot_count(M)) {
        throw ResolutionError("n_max must lie in [1, 2^M]");
    }
    ExperimentReport report;
    report.experiment = "kernels";
    report.parameters = {{"alpha", params.alpha},
                         {"resolution", static_cast<std::int64_t>(M)},
                         {"n_max", static_cast<std::int64_t>(params.n_max)}};
    report.columns = {"check", "order", "mismatches", "value_at_zero", "worst_ratio",
                      "violations"};

    std::int64_t closed_mismatches = 0;
    std::int64_t fast_mismatches = 0;
    std::int64_t fejer_mismatches = 0;
    for (int j = 0; j <= M; ++j) {
        const std::uint64_t order = std::uint64_t{1} << j;
        const auto reference = dirichlet_reference(order, M);
        const KernelTable closed = dirichlet_kernel_closed(j, M);
        const KernelTable fast = dirichlet_kernel(order, M);
        std::int64_t closed_bad = 0, fast_bad = 0;
        for (std::size_t i = 0; i < reference.size(); ++i) {
            if ((*closed.exact_numerators)[i] != reference[i]) ++closed_bad;
            if ((*fast.exact_numerators)[i] != reference[i]) ++fast_bad;
        }
        closed_mismatches += closed_bad;
        fast_mismatches += fast_bad;
        report.rows.push_back({std::string("dirichlet_closed"),
                               static_cast<std::int64_t>(order), closed_bad, closed.values[0],
                               0.0, std::int64_t{0}});
        report.rows.push_back({std::string("dirichlet_fast"), static_cast<std::int64_t>(order),
                               fast_bad, fast.values[0], 0.0, std::int64_t{0}});

        const auto fejer_ref = fejer_reference_numerators(j, M);
        const KernelTable fejer = fejer_kernel_dyadic(j, M);
        std::int64_t fejer_bad = 0;
        for (std::size_t i = 0; i < fejer_ref.size(); ++i) {
            if ((*fejer.exact_numerators)[i] != fejer_ref[i]) ++fejer_bad;
        }
        fejer_mismatches += fejer_bad;
        report.rows.push_back({std::string("fejer_closed"), static_cast<std::int64_t>(order),
                               fejer_bad, fejer.values[0], 0.0, std::int64_t{0}});
    }

    double max_ratio = 0.0;
    std::int64_t violations = 0;
    for (std::uint64_t n = 1; n <= params.n_max; ++n) {
        const MajorizationCheck check = cesaro_majorization_check(params.alpha, n, M);
        max_ratio = std::max(max_ratio, check.worst_ratio);
        violations += static_cast<std::int64_t>(check.support_violations);
        report.rows.push_back({std::string("majorization"), static_cast<std::int64_t>(n),
                               std::int64_t{0}, 0.0, check.worst_ratio,
                               static_cast<std::int64_t>(check.support_violations)});
    }

    report.summary = {{"dirichlet_closed_mismatches", closed_mismatches},
                      {"dirichlet_fast_mismatches", fast_mismatches},
                      {"fejer_closed_mismatches", fejer_mismatches},
                      {"max_majorization_ratio", max_ratio},
                      {"majorization_violations", violations}};
    report.pass = closed_mismatches == 0 && fast_mismatches == 0 && fejer_mismatches == 0 &&
                  violations == 0 && std::isfinite(max_ratio);
    return report;
}

ExperimentReport run_l1norms(const L1NormsParams& params) {
    const int M = params.resolution;
    check_resolution(M);
    if (params.n_max < 4 || params.n_max > slot_count(M)) {
        throw ResolutionError("n_max must lie in [4, 2^M]");
    }
    const std::vector<L1ScanEntry> scan = l1_norm_scan(params.alpha, params.n_max, M);

    ExperimentReport report;
    report.experiment = "l1norms";
    report.parameters = {{"alpha", params.alpha},
                         {"resolution", static_cast<std::int64_t>(M)},
                         {"n_max", static_cast<std::int64_t>(params.n_max)},
                         {"tail_ratio_limit", params.tail_ratio_limit}};
    report.columns = {"n", "l1_norm", "running_max"};

    const std::uint64_t head_end = params.n_max / 4;
    double head_max = 0.0, tail_max = 0.0, running = 0.0;
    for (const L1ScanEntry& entry : scan) {
        running = std::max(running, entry.l1_norm);
        report.rows.push_back(
            {static_cast<std::int64_t>(entry.n), entry.l1_norm, running});
        if (entry.n <= head_end) {
            head_max = std::max(head_max, entry.l1_norm);
        } else {
            tail_max = std::max(tail_max, entry.l1_norm);
        }
    }
    const double tail_ratio = tail_max / head_max;
    report.summary = {{"head_max", head_max},
                      {"tail_max", tail_max},
                      {"tail_head_ratio", tail_ratio}};
    report.pass = std::isfinite(tail_ratio) && tail_ratio <= params.tail_ratio_limit;
    return report;
}

ExperimentReport run_coset_bounds(const CosetBoundsParams& params) {
    const int M = params.resolution;
    check_resolution(M);
    if (params.working_offset < 1) {
        throw ParameterError("working offset must be at least 1");
    }
    const int Mw = M + params.working_offset;
    check_resolution(Mw);
    if (params.probe_count < 1) {
        throw ParameterError("probe count must be positive");
    }

    // Geometric probe ladder over (2^M, 2^Mw].
    const double lo = static_cast<double>((std::uint64_t{1} << M) + 1);
    const double hi = static_cast<double>(std::uint64_t{1} << Mw);
    std::set<std::uint64_t> probes;
    for (int i = 0; i < params.probe_count; ++i) {
        const double t = params.probe_count == 1
                             ? 0.0
                             : static_cast<double>(i) / (params.probe_count - 1);
        const double value = std::exp(std::log(lo) + t * (std::log(hi) - std::log(lo)));
        probes.insert(std::clamp<std::uint64_t>(
            static_cast<std::uint64_t>(std::llround(value)), std::uint64_t{1} << M | 1,
            std::uint64_t{1} << Mw));
    }

    ExperimentReport report;
    report.experiment = "coset-bounds";
    report.parameters = {{"alpha", params.alpha},
                         {"resolution", static_cast<std::int64_t>(M)},
                         {"working_resolution", static_cast<std::int64_t>(Mw)},
                         {"probes", static_cast<std::int64_t>(probes.size())}};
    report.columns = {"coset", "k", "l", "n", "max_integral", "bound", "ratio"};

    const std::size_t slots = slot_count(Mw);
    const std::size_t t_count = std::size_t{1} << (Mw - M);
    const std::uint32_t low_mask = (std::uint32_t{1} << M) - 1;
    double fitted = 0.0;
    for (std::uint64_t n : probes) {
        const KernelTable kernel = cesaro_kernel(params.alpha, n, Mw);
        // max integral per class, pairs then singles
        std::vector<std::vector<double>> pair_max(M, std::vector<double>(M, 0.0));
        std::vector<double> single_max(M, 0.0);
        for (std::size_t x = 0; x < slots; ++x) {
            const std::uint32_t low = static_cast<std::uint32_t>(x) & low_mask;
            if (low == 0) continue;
            double sum = 0.0;
            for (std::size_t m = 0; m < t_count; ++m) {
                sum += std::abs(kernel.values[x ^ (m << M)]);
            }
            const double integral = std::ldexp(sum, -Mw);
            const CosetClass cls = classify_low_bits(low);
            if (cls.l >= 0) {
                pair_max[cls.k][cls.l] = std::max(pair_max[cls.k][cls.l], integral);
            } else {
                single_max[cls.k] = std::max(single_max[cls.k], integral);
            }
        }
        const double n_alpha = std::pow(static_cast<double>(n), params.alpha);
        for (int k = 0; k + 1 < M; ++k) {
            for (int l = k + 1; l < M; ++l) {
                const double bound =
                    std::pow(2.0, params.alpha * l + k) / (n_alpha * std::ldexp(1.0, M));
                const double ratio = pair_max[k][l] / bound;
                fitted = std::max(fitted, ratio);
                report.rows.push_back({coset_label(l + 1, k, l), static_cast<std::int64_t>(k),
                                       static_cast<std::int64_t>(l),
                                       static_cast<std::int64_t>(n), pair_max[k][l], bound,
                                       ratio});
            }
        }
        for (int k = 0; k < M; ++k) {
            const double bound = std::ldexp(1.0, k - M);
            const double ratio = single_max[k] / bound;
            fitted = std::max(fitted, ratio);
            report.rows.push_back({coset_label(M, k, -1), static_cast<std::int64_t>(k),
                                   std::int64_t{-1}, static_cast<std::int64_t>(n),
                                   single_max[k], bound, ratio});
        }
    }

    report.summary = {{"fitted_c", fitted}};
    report.pass = std::isfinite(fitted) && fitted > 0.0;
    return report;
}

ExperimentReport run_atom_bounds(const AtomBoundsParams& params) {
    const int M = params.resolution;
    check_resolution(M);
    const std::uint64_t support_orders = slot_count(M);
    if (params.n_max <= support_orders) {
        throw ResolutionError("n_max must exceed 2^M");
    }
    const int Mw = params.work_resolution > 0
                       ? params.work_resolution
                       : std::max(prefix_rank(params.n_max), M + 1);
    check_resolution(Mw);
    if (params.n_max > slot_count(Mw)) {
        throw ResolutionError("n_max above 2^working_resolution");
    }
    if (params.seeds < 1) {
        throw ParameterError("atom ensemble needs at least one seed");
    }
    const double exponent = 1.0 / (1.0 + params.alpha);

    ExperimentReport report;
    report.experiment = "atom-bounds";
    report.parameters = {{"alpha", params.alpha},
                         {"resolution", static_cast<std::int64_t>(M)},
                         {"work_resolution", static_cast<std::int64_t>(Mw)},
                         {"n_max", static_cast<std::int64_t>(params.n_max)},
                         {"seeds", static_cast<std::int64_t>(params.seeds)},
                         {"seed_base", static_cast<std::int64_t>(params.seed_base)}};
    report.columns = {"seed", "zero_max", "pair_ratio", "single_ratio", "tail_integral"};

    // Per-slot bound denominators, n-independent parts.
    const std::size_t slots = slot_count(Mw);
    const std::uint32_t low_mask = static_cast<std::uint32_t>(support_orders) - 1;
    std::vector<double> pair_base(slots, 0.0);    // 2^{alpha l + k} 2^{alpha M}
    std::vector<double> single_base(slots, 0.0);  // 2^{alpha M + k}
    for (std::size_t x = 0; x < slots; ++x) {
        const std::uint32_t low = static_cast<std::uint32_t>(x) & low_mask;
        if (low == 0) continue;
        const CosetClass cls = classify_low_bits(low);
        if (cls.l >= 0) {
            pair_base[x] = std::pow(2.0, params.alpha * cls.l + cls.k + params.alpha * M);
        } else {
            single_base[x] = std::pow(2.0, params.alpha * M + cls.k);
        }
    }

    std::vector<double> pair_ratios, single_ratios, integrals;
    bool zeros_exact = true;
    for (int i = 0; i < params.seeds; ++i) {
        const std::uint64_t seed = params.seed_base + static_cast<std::uint64_t>(i);
        const AtomSpec atom = random_atom(exponent, M, Mw, seed);

        double zero_max = 0.0;
        for (std::uint64_t n : {std::uint64_t{1}, support_orders / 2, support_orders}) {
            if (n == 0) continue;
            const DyadicFunction mean = cesaro_mean(params.alpha, atom.values, n);
            for (double v : mean.values()) zero_max = std::max(zero_max, std::abs(v));
        }
        if (zero_max != 0.0) zeros_exact = false;

        std::vector<double> wsup(slots, 0.0);
        double pair_ratio = 0.0, single_ratio = 0.0;
        sweep_cesaro_means(
            params.alpha, atom.values, support_orders + 1, params.n_max,
            [&](std::uint64_t n, int, std::span<const double> vals) {
                const double n_alpha = std::pow(static_cast<double>(n), params.alpha);
                const double log_w =
                    std::pow(std::log(static_cast<double>(n)), -(1.0 + params.alpha));
                const std::size_t mask = vals.size() - 1;
                for (std::size_t x = 0; x < slots; ++x) {
                    if ((static_cast<std::uint32_t>(x) & low_mask) == 0) continue;
                    const double v = std::abs(vals[x & mask]);
                    if (pair_base[x] > 0.0) {
                        pair_ratio = std::max(pair_ratio, v * n_alpha / pair_base[x]);
                    } else {
                        single_ratio = std::max(single_ratio, v / single_base[x]);
                    }
                    wsup[x] = std::max(wsup[x], v * log_w);
                }
            });

        double sum = 0.0;
        for (std::size_t x = 0; x < slots; ++x) {
            if ((static_cast<std::uint32_t>(x) & low_mask) == 0) continue;
            sum += std::pow(wsup[x], exponent);
        }
        const double integral = std::ldexp(sum, -Mw);

        pair_ratios.push_back(pair_ratio);
        single_ratios.push_back(single_ratio);
        integrals.push_back(integral);
        report.rows.push_back({static_cast<std::int64_t>(seed), zero_max, pair_ratio,
                               single_ratio, integral});
    }

    const double pair_c = *std::max_element(pair_ratios.begin(), pair_ratios.end());
    const double single_c = *std::max_element(single_ratios.begin(), single_ratios.end());
    const double integral_max = *std::max_element(integrals.begin(), integrals.end());
    const double integral_med = median(integrals);
    const double uniformity = integral_med > 0.0
                                  ? integral_max / integral_med
                                  : (integral_max == 0.0 ? 1.0
                                                         : std::numeric_limits<double>::infinity());
    report.summary = {{"fitted_c_pair", pair_c},
                      {"fitted_c_single", single_c},
                      {"integral_max", integral_max},
                      {"integral_median", integral_med},
                      {"integral_uniformity", uniformity},
                      {"zero_rows_exact", static_cast<std::int64_t>(zeros_exact ? 1 : 0)}};
    report.pass = zeros_exact && all_finite(pair_ratios) && all_finite(single_ratios) &&
                  all_finite(integrals) && uniformity <= params.uniformity_limit;
    return report;
}

ExperimentReport run_counterexample(const CounterexampleParams& params) {
    std::vector<int> nk_list = params.nk_list;
    std::sort(nk_list.begin(), nk_list.end());
    nk_list.erase(std::unique(nk_list.begin(), nk_list.end()), nk_list.end());
    if (nk_list.empty()) {
        throw ParameterError("nk list must not be empty");
    }
    const double exponent = 1.0 / (1.0 + params.alpha);

    ExperimentReport report;
    report.experiment = "counterexample";
    std::string nk_text;
    for (std::size_t i = 0; i < nk_list.size(); ++i) {
        nk_text += (i ? "," : "") + std::to_string(nk_list[i]);
    }
    report.parameters = {{"alpha", params.alpha},
                         {"nk_list", nk_text},
                         {"phi", params.phi.describe()}};
    report.columns = {"kind", "nk", "s", "q", "value", "bound", "ratio"};

    std::int64_t case_violations_total = 0;
    std::int64_t shift_violations_total = 0;
    std::vector<double> h_norms, stats, band_ratio_values;
    std::vector<double> nk_values;
    bool phi_ratio_increasing = true;
    double previous_phi_ratio = 0.0;

    for (const int nk : nk_list) {
        const int M = 2 * nk + 1;
        const CounterexampleSpec spec = counterexample(params.alpha, nk, M);
        const std::size_t slots = slot_count(M);
        const std::uint64_t lo = std::uint64_t{1} << (2 * nk);
        const std::uint64_t hi = std::uint64_t{1} << (2 * nk + 1);

        // Exact case split of the partial sums: 0 below the band,
        // D_i - D_lo inside, the function itself at the top.
        std::int64_t case_violations = 0;
        {
            std::vector<std::int64_t> partial(slots, 0), dirichlet(slots, 0), at_lo(slots, 0);
            for (std::uint64_t i = 0; i <= hi; ++i) {
                if (i == lo) at_lo = dirichlet;
                for (std::size_t x = 0; x < slots; ++x) {
                    std::int64_t expected;
                    if (i < lo) {
                        expected = 0;
                    } else if (i < hi) {
                        expected = dirichlet[x] - at_lo[x];
                    } else {
                        expected = static_cast<std::int64_t>(spec.function[x]);
                    }
                    if (partial[x] != expected) ++case_violations;
                }
                if (i == hi) break;
                for (std::size_t x = 0; x < slots; ++x) {
                    const std::int64_t w =
                        (std::popcount(i & static_cast<std::uint64_t>(x)) & 1) ? -1 : 1;
                    dirichlet[x] += w;
                    if (i >= lo) partial[x] += w;
                }
            }
        }
        case_violations_total += case_violations;
        report.rows.push_back({std::string("partial_sum_cases"), static_cast<std::int64_t>(nk),
                               std::int64_t{-1}, static_cast<std::int64_t>(hi),
                               static_cast<double>(case_violations), 1.0,
                               static_cast<double>(case_violations)});

        // Exact frequency-shift identity D_{j+lo} - D_lo = w_lo D_j.
        std::int64_t shift_violations = 0;
        {
            std::vector<std::int64_t> d_j(slots, 0), shifted(slots, 0);
            for (std::uint64_t j = 1; j < lo; ++j) {
                for (std::size_t x = 0; x < slots; ++x) {
                    d_j[x] += (std::popcount((j - 1) & static_cast<std::uint64_t>(x)) & 1) ? -1 : 1;
                    shifted[x] +=
                        (std::popcount((lo + j - 1) & static_cast<std::uint64_t>(x)) & 1) ? -1 : 1;
                    const std::int64_t w_lo =
                        (std::popcount(lo & static_cast<std::uint64_t>(x)) & 1) ? -1 : 1;
                    if (shifted[x] != w_lo * d_j[x]) ++shift_violations;
                }
            }
        }
        shift_violations_total += shift_violations;
        report.rows.push_back({std::string("shift_identity"), static_cast<std::int64_t>(nk),
                               std::int64_t{-1}, static_cast<std::int64_t>(lo),
                               static_cast<double>(shift_violations), 1.0,
                               static_cast<double>(shift_violations)});

        // H-quasinorm decay.
        const double h_norm = hp_quasinorm(spec.function, exponent);
        const double h_expected = std::pow(2.0, -2.0 * params.alpha * nk);
        h_norms.push_back(h_norm);
        nk_values.push_back(static_cast<double>(nk));
        report.rows.push_back({std::string("hnorm_decay"), static_cast<std::int64_t>(nk),
                               std::int64_t{-1}, static_cast<std::int64_t>(hi), h_norm,
                               h_expected, h_norm / h_expected});

        // Band lower bounds at the probe orders q = lo + 4^s, s >= 1.
        for (int s = 1; s < nk; ++s) {
            const std::uint64_t q = spec.probe_orders[s];
            const DyadicFunction mean = cesaro_mean(params.alpha, spec.function, q);
            const std::uint64_t band_mask = (std::uint64_t{1} << (2 * s)) - 1;
            double band_min = std::numeric_limits<double>::infinity();
            for (std::size_t x = 0; x < slots; ++x) {
                if ((x & band_mask) != 0) continue;
                if (((x >> (2 * s)) & 1) == 0) continue;
                band_min = std::min(band_min, std::abs(mean[x]));
            }
            const double shape =
                std::pow(2.0, 2.0 * s * (1.0 + params.alpha) - 2.0 * params.alpha * nk);
            const double ratio = band_min / shape;
            band_ratio_values.push_back(ratio);
            report.rows.push_back({std::string("band_lower_bound"),
                                   static_cast<std::int64_t>(nk), static_cast<std::int64_t>(s),
                                   static_cast<std::int64_t>(q), band_min, shape, ratio});
        }

        // Divergence statistic: phi-weighted maximal function, quasinorm
        // against the H-quasinorm.
        const DyadicFunction weighted = weighted_maximal_range(
            params.alpha, spec.function, 1, hi,
            [&](std::uint64_t n) { return 1.0 / params.phi(n); });
        const double stat = lp_quasinorm(weighted, exponent) / h_norm;
        stats.push_back(stat);
        report.rows.push_back({std::string("divergence_stat"), static_cast<std::int64_t>(nk),
                               std::int64_t{-1}, static_cast<std::int64_t>(hi), stat, 1.0,
                               stat});

        // The log-power budget must keep growing past phi along the ladder.
        const double log_hi = std::log(static_cast<double>(hi));
        const double phi_ratio =
            std::pow(log_hi, 1.0 + params.alpha) / params.phi(hi);
        if (!h_norms.empty() && nk != nk_list.front() && phi_ratio <= previous_phi_ratio) {
            phi_ratio_increasing = false;
        }
        previous_phi_ratio = phi_ratio;
    }

    bool stats_increasing = true;
    for (std::size_t i = 1; i < stats.size(); ++i) {
        if (!(stats[i] > stats[i - 1])) stats_increasing = false;
    }

    double slope = 0.0, slope_err = 0.0;
    const double slope_target = -2.0 * params.alpha * std::log(2.0);
    if (nk_values.size() >= 2) {
        std::vector<double> log_norms;
        log_norms.reserve(h_norms.size());
        for (double h : h_norms) log_norms.push_back(std::log(h));
        slope = fit_slope(nk_values, log_norms);
        slope_err = std::abs(slope - slope_target) / std::abs(slope_target);
    }

    double band_min_ratio = 0.0, band_spread = 1.0;
    if (!band_ratio_values.empty()) {
        const auto [lo_it, hi_it] =
            std::minmax_element(band_ratio_values.begin(), band_ratio_values.end());
        band_min_ratio = *lo_it;
        band_spread = *hi_it / *lo_it;
    }

    report.summary = {{"case_violations", case_violations_total},
                      {"shift_violations", shift_violations_total},
                      {"fitted_band_c", band_min_ratio},
                      {"band_spread", band_spread},
                      {"hnorm_slope", slope},
                      {"hnorm_slope_target", slope_target},
                      {"hnorm_slope_rel_err", slope_err},
                      {"stat_increasing", static_cast<std::int64_t>(stats_increasing ? 1 : 0)},
                      {"phi_ratio_increasing",
                       static_cast<std::int64_t>(phi_ratio_increasing ? 1 : 0)}};

    bool pass = case_violations_total == 0 && shift_violations_total == 0 &&
                all_finite(stats) && phi_ratio_increasing;
    if (!band_ratio_values.empty()) {
        pass = pass && band_min_ratio > 0.0 && band_spread <= params.band_spread_limit;
    }
    if (nk_values.size() >= 2) {
        pass = pass && stats_increasing && slope_err <= params.slope_tolerance;
    }
    report.pass = pass;
    return report;
}

ExperimentReport run_strong_sum(const StrongSumParams& params) {
    if (params.resolutions.empty()) {
        throw ParameterError("resolution list must not be empty");
    }
    if (params.seeds < 1) {
        throw ParameterError("atom ensemble needs at least one seed");
    }
    std::vector<int> ranks = params.resolutions;
    std::sort(ranks.begin(), ranks.end());
    ranks.erase(std::unique(ranks.begin(), ranks.end()), ranks.end());
    for (int M : ranks) {
        check_resolution(M);
        if (params.n_max <= (std::uint64_t{2} << M)) {
            throw ResolutionError("n_max must exceed 2^(M+1) for support rank " +
                                  std::to_string(M));
        }
    }
    const int Mw = prefix_rank(params.n_max);
    check_resolution(Mw);
    const double exponent = 1.0 / (1.0 + params.alpha);

    ExperimentReport report;
    report.experiment = "strongsum";
    std::string rank_text;
    for (std::size_t i = 0; i < ranks.size(); ++i) {
        rank_text += (i ? "," : "") + std::to_string(ranks[i]);
    }
    report.parameters = {{"alpha", params.alpha},
                         {"resolutions", rank_text},
                         {"work_resolution", static_cast<std::int64_t>(Mw)},
                         {"n_max", static_cast<std::int64_t>(params.n_max)},
                         {"seeds", static_cast<std::int64_t>(params.seeds)},
                         {"seed_base", static_cast<std::int64_t>(params.seed_base)}};
    report.columns = {"support_rank", "seed", "stat_half", "stat_final", "plateau_ratio",
                      "stat_max"};

    std::vector<double> plateau_ratios, stat_values;
    const std::uint64_t half = params.n_max / 2;
    for (int M : ranks) {
        const std::uint64_t first = (std::uint64_t{1} << M) + 1;
        for (int i = 0; i < params.seeds; ++i) {
            const std::uint64_t seed = params.seed_base + static_cast<std::uint64_t>(i);
            const AtomSpec atom = random_atom(exponent, M, Mw, seed);
            double running = 0.0, stat_half = 0.0, stat_final = 0.0, stat_max = 0.0;
            sweep_cesaro_means(params.alpha, atom.values, first, params.n_max,
                               [&](std::uint64_t n, int rank, std::span<const double> vals) {
                                   double sum = 0.0;
                                   for (double v : vals) {
                                       sum += std::pow(std::abs(v), exponent);
                                   }
                                   running += std::ldexp(sum, -rank) / static_cast<double>(n);
                                   const double stat =
                                       running / std::log(static_cast<double>(n));
                                   stat_max = std::max(stat_max, stat);
                                   if (n == half) stat_half = stat;
                                   if (n == params.n_max) stat_final = stat;
                               });
            double plateau;
            if (stat_half > 0.0) {
                plateau = stat_final / stat_half;
            } else {
                plateau = stat_final == 0.0 ? 1.0 : std::numeric_limits<double>::infinity();
            }
            plateau_ratios.push_back(plateau);
            stat_values.push_back(stat_max);
            report.rows.push_back({static_cast<std::int64_t>(M), static_cast<std::int64_t>(seed),
                                   stat_half, stat_final, plateau, stat_max});
        }
    }

    const double plateau_max = *std::max_element(plateau_ratios.begin(), plateau_ratios.end());
    const double stat_max = *std::max_element(stat_values.begin(), stat_values.end());
    const double stat_med = median(stat_values);
    const double uniformity =
        stat_med > 0.0 ? stat_max / stat_med
                       : (stat_max == 0.0 ? 1.0 : std::numeric_limits<double>::infinity());
    report.summary = {{"max_plateau_ratio", plateau_max},
                      {"stat_max", stat_max},
                      {"stat_median", stat_med},
                      {"stat_uniformity", uniformity}};
    report.pass = std::isfinite(plateau_max) && plateau_max <= params.plateau_limit &&
                  all_finite(stat_values) && uniformity <= params.uniformity_limit;
    return report;
}

}  // namespace dyadic
