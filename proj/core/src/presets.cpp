#include "stardef/presets.hpp"

#include "stardef/errors.hpp"

namespace stardef {

std::string to_string(PresetKind k)
{
	switch (k)
	{
	case PresetKind::moyal: return "moyal";
	case PresetKind::smash: return "smash";
	case PresetKind::weyl_smash: return "weyl-smash";
	}
	return "?";
}

PresetKind parse_preset_kind(std::string const &name)
{
	if (name == "moyal")
		return PresetKind::moyal;
	if (name == "smash")
		return PresetKind::smash;
	if (name == "weyl-smash")
		return PresetKind::weyl_smash;
	throw ValidationError("unknown preset '" + name +
	                      "' (expected moyal, smash or weyl-smash)");
}

int max_cheap_order(PresetKind k) { return k == PresetKind::moyal ? 4 : 2; }

void check_cost(PresetConfig const &cfg, bool allow_expensive)
{
	if (cfg.order > max_cheap_order(cfg.preset) && !allow_expensive)
		throw CostLimitError("order " + std::to_string(cfg.order) + " exceeds the limit " +
		                     std::to_string(max_cheap_order(cfg.preset)) + " for preset " +
		                     to_string(cfg.preset) +
		                     "; pass --allow-expensive to run it anyway");
}

Rational seed_sign() { return Rational(-1); }

Element bivector_form(RatMatrix const &q, int group)
{
	int n = q.size();
	Element e(n);
	for (int i = 0; i < n; ++i)
		for (int j = i + 1; j < n; ++j)
			if (q(i, j) != 0)
				e.add({group, (1u << i) | (1u << j)}, Polynomial::constant(n, q(i, j)));
	return e;
}

Preset build_preset(PresetConfig const &cfg, TruncationPolicy policy)
{
	int n = cfg.dim;
	if (n < 1 || n > kMaxDim)
		throw ValidationError("dim must be in 1.." + std::to_string(kMaxDim));
	if (cfg.pi.size() != n)
		throw DimensionMismatch("pi must be a " + std::to_string(n) + "x" +
		                        std::to_string(n) + " matrix");
	if (cfg.order < 0)
		throw ValidationError("order must be non-negative");
	if (cfg.p_cutoff && *cfg.p_cutoff < 0)
		throw ValidationError("p_cutoff must be non-negative");

	Preset p;
	p.config = cfg;
	if (cfg.preset == PresetKind::moyal && !cfg.group_generators.empty())
		throw ValidationError("the moyal preset takes no group");
	if (cfg.preset != PresetKind::moyal && cfg.group_generators.empty())
		throw ValidationError("preset " + to_string(cfg.preset) + " needs group_generators");
	if (cfg.preset == PresetKind::moyal && !cfg.c.empty())
		throw ValidationError("the moyal preset takes no class function");

	p.group = std::make_shared<MatrixGroup const>(close_group(n, cfg.group_generators));
	p.reflections = reflection_scan(*p.group, cfg.pi);
	p.c = validate_class_function(*p.group, cfg.c);

	auto kind = cfg.preset == PresetKind::weyl_smash ? ProductKind::weyl(cfg.pi)
	                                                 : ProductKind::moyal();
	p.ctx = std::make_shared<Coresolution const>(p.group, kind, policy);

	auto ctx = p.ctx;
	auto refl = p.reflections;
	auto c = p.c;
	auto preset = cfg.preset;
	auto pi = cfg.pi;
	p.lambda_at = [ctx, refl, c, preset, pi, n](int D) {
		Element lambda(n);
		if (preset != PresetKind::weyl_smash)
			lambda += bivector_form(pi);
		if (preset != PresetKind::moyal)
			for (int g : refl.reflections())
			{
				if (c(g) == 0)
					continue;
				auto kernel = ctx->kernel(g, D);
				auto form = bivector_form(refl.pi_gamma[g], g) * c(g);
				lambda += ctx->bullet(kernel, form);
			}
		return lambda * seed_sign();
	};
	return p;
}

} // namespace stardef
