#pragma once

#include "stardef/coresolution.hpp"
#include "stardef/group.hpp"

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace stardef {

enum class PresetKind { moyal, smash, weyl_smash };

std::string to_string(PresetKind k);
// "moyal", "smash" or "weyl-smash". Throws ValidationError otherwise.
PresetKind parse_preset_kind(std::string const &name);

struct PresetConfig
{
	PresetKind preset = PresetKind::moyal;
	int dim = 2;
	RatMatrix pi = RatMatrix(0);
	std::vector<RatMatrix> group_generators;
	// Element index -> value; indices refer to the closed group's canonical list.
	std::map<int, Rational> c;
	int order = 1;
	std::optional<int> p_cutoff; // nullopt = automatic
	std::uint64_t seed = 0;
};

// Cost limits on the order: 4 for moyal, 2 for the smash presets.
int max_cheap_order(PresetKind k);
// Throws CostLimitError when cfg.order exceeds the limit and expensive runs
// are not allowed.
void check_cost(PresetConfig const &cfg, bool allow_expensive);

struct Preset
{
	PresetConfig config;
	std::shared_ptr<MatrixGroup const> group;
	ReflectionData reflections;
	ClassFunction c;
	std::shared_ptr<Coresolution const> ctx;
	// The seed 2-form, with every kernel expanded through p-degree D.
	std::function<Element(int)> lambda_at;
};

// The 2-form sum_{i<j} q^{ij} dp_i ^ dp_j of an antisymmetric matrix q.
Element bivector_form(RatMatrix const &q, int group = 0);

// Builds group, reflection data, class function, coresolution and seed:
//   moyal       lambda = pi(dp, dp)
//   smash       lambda = pi(dp, dp) + sum_{g in S} c(g) E_g pi_g(dp, dp) g
//   weyl-smash  lambda = sum_{g in S} c(g) E_g pi_g(dp, dp) g  (weyl kernels)
// all multiplied by the orientation sign `seed_sign()`, which fixes the
// first-order term to +1/2 pi^{ij} d_i a d_j b.
Preset build_preset(PresetConfig const &cfg,
                    TruncationPolicy policy = TruncationPolicy::error);

Rational seed_sign();

} // namespace stardef
