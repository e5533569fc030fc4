#include "porank/synth.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "porank/mallows.hpp"
#include "porank/plackett_luce.hpp"
#include "porank/rng.hpp"

namespace porank {

void SynthSpec::validate() const {
    if (n < 1) throw std::invalid_argument("synth: N must be >= 1");
    if (m < 2) throw std::invalid_argument("synth: M must be >= 2");
    if (d < 1) throw std::invalid_argument("synth: d must be >= 1");
    if (kind == GeneratorKind::pl_linear && !(noise >= 0.0 && noise <= 1.0)) {
        throw std::invalid_argument("synth: pl-linear noise must lie in [0, 1]");
    }
    if (kind == GeneratorKind::mallows_regions && !(noise >= 0.0 && noise <= kThetaMax)) {
        throw std::invalid_argument("synth: mallows-regions noise (theta) must lie in [0, theta_max]");
    }
}

GeneratorKind parse_generator(const std::string& name) {
    if (name == "pl-linear") return GeneratorKind::pl_linear;
    if (name == "mallows-regions") return GeneratorKind::mallows_regions;
    throw std::invalid_argument("synth: unknown generator '" + name + "'");
}

namespace {

std::string label_name(int index, int m) {
    // Zero-padded so lexicographic order matches index order for any M.
    std::string number = std::to_string(index + 1);
    const std::size_t width = std::to_string(m).size();
    return "L" + std::string(width - number.size(), '0') + number;
}

Dataset make_shell(const SynthSpec& spec) {
    Dataset data;
    for (int label = 0; label < spec.m; ++label) {
        data.label_names.push_back(label_name(label, spec.m));
    }
    for (int c = 0; c < spec.d; ++c) data.feature_names.push_back("x" + std::to_string(c + 1));
    return data;
}

Dataset synth_pl_linear(const SynthSpec& spec, std::uint64_t seed) {
    Rng rng(seed);
    const double signal = 1.0 - spec.noise;
    std::vector<double> weight_matrix(static_cast<std::size_t>(spec.m) * spec.d);
    for (double& w : weight_matrix) w = signal * rng.normal();

    Dataset data = make_shell(spec);
    std::vector<double> x(spec.d), v(spec.m);
    for (int i = 0; i < spec.n; ++i) {
        for (double& value : x) value = rng.normal();
        data.features.insert(data.features.end(), x.begin(), x.end());
        for (int label = 0; label < spec.m; ++label) {
            double utility = 0.0;
            for (int c = 0; c < spec.d; ++c) {
                utility += weight_matrix[static_cast<std::size_t>(label) * spec.d + c] * x[c];
            }
            v[label] = std::exp(utility);
        }
        data.rankings.push_back(sample_pl(PLModel(v), 1, rng.next_bits()).front());
    }
    return data;
}

Dataset synth_mallows_regions(const SynthSpec& spec, std::uint64_t seed) {
    constexpr int kRegions = 4;
    Rng rng(seed);
    std::vector<double> region_centers(static_cast<std::size_t>(kRegions) * spec.d);
    for (double& c : region_centers) c = rng.normal();
    std::vector<Ranking> region_rankings;
    for (int r = 0; r < kRegions; ++r) region_rankings.push_back(Ranking::random(spec.m, rng));

    Dataset data = make_shell(spec);
    std::vector<double> x(spec.d);
    for (int i = 0; i < spec.n; ++i) {
        for (double& value : x) value = rng.normal();
        data.features.insert(data.features.end(), x.begin(), x.end());
        int nearest = 0;
        double best = std::numeric_limits<double>::infinity();
        for (int r = 0; r < kRegions; ++r) {
            double dist = 0.0;
            for (int c = 0; c < spec.d; ++c) {
                const double delta = x[c] - region_centers[static_cast<std::size_t>(r) * spec.d + c];
                dist += delta * delta;
            }
            if (dist < best) {
                best = dist;
                nearest = r;
            }
        }
        const MallowsModel model(region_rankings[nearest], spec.noise);
        data.rankings.push_back(sample_mallows(model, 1, rng.next_bits()).front());
    }
    return data;
}

} // namespace

Dataset synth(const SynthSpec& spec, std::uint64_t seed) {
    spec.validate();
    Dataset data = spec.kind == GeneratorKind::pl_linear ? synth_pl_linear(spec, seed)
                                                         : synth_mallows_regions(spec, seed);
    data.validate();
    return data;
}

} // namespace porank
