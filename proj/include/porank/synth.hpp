#pragma once

#include <cstdint>
#include <string>

#include "porank/dataset.hpp"

namespace porank {

enum class GeneratorKind { pl_linear, mallows_regions };

/// Synthetic dataset recipe.
///
/// pl-linear: features x ~ N(0, I_d); rankings drawn from PL(v(x)) with
/// v(x) proportional to exp(W x), W a seeded M x d Gaussian matrix scaled by
/// (1 - noise). noise in [0, 1]: 0 keeps the full signal, 1 zeroes W and
/// yields uniform rankings.
///
/// mallows-regions: four seeded region centers in feature space, each with
/// its own center ranking; an instance draws its ranking from
/// Mallows(center of nearest region, theta = noise). noise in [0, theta_max]:
/// larger values concentrate every ranking on its region center.
struct SynthSpec {
    GeneratorKind kind = GeneratorKind::pl_linear;
    int n = 200;
    int m = 5;
    int d = 3;
    double noise = 0.0;

    void validate() const;
};

Dataset synth(const SynthSpec& spec, std::uint64_t seed);

GeneratorKind parse_generator(const std::string& name);

} // namespace porank
