#include "stardef/deformation.hpp"
#include "stardef/parse.hpp"
#include "stardef/presets.hpp"

#include <benchmark/benchmark.h>

using namespace stardef;

namespace {

PresetConfig config(PresetKind kind, int order)
{
	PresetConfig cfg;
	cfg.preset = kind;
	cfg.dim = 2;
	cfg.pi = RatMatrix::from_rows({{0, 1}, {-1, 0}});
	cfg.order = order;
	if (kind != PresetKind::moyal)
	{
		cfg.group_generators = {RatMatrix::identity(2) * Rational(-1)};
		cfg.c = {{1, Rational(2, 3)}};
	}
	return cfg;
}

Element E(char const *src) { return Element::from_polynomial(parse_polynomial(src, 2)); }

void BM_Bullet(benchmark::State &state)
{
	auto p = build_preset(config(PresetKind::weyl_smash, 1));
	auto a = p.lambda_at(static_cast<int>(state.range(0)));
	auto b = E("x1^2*x2 + 3*x2^3");
	for (auto _ : state)
		benchmark::DoNotOptimize(p.ctx->bullet(a, b));
}
BENCHMARK(BM_Bullet)->Arg(4)->Arg(8)->Arg(12);

void BM_KernelJet(benchmark::State &state)
{
	auto p = build_preset(config(PresetKind::weyl_smash, 1));
	for (auto _ : state)
		benchmark::DoNotOptimize(p.ctx->kernel_jet(1, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_KernelJet)->Arg(4)->Arg(8)->Arg(16);

void BM_StarMoyal(benchmark::State &state)
{
	auto p = build_preset(config(PresetKind::moyal, static_cast<int>(state.range(0))));
	auto a = E("x1^3 + x1*x2"), b = E("x2^3 - x1^2");
	for (auto _ : state)
	{
		// A fresh engine each time so the seed states are rebuilt.
		StarEngine engine(p.ctx, p.lambda_at, p.config.order);
		benchmark::DoNotOptimize(engine.star(a, b));
	}
}
BENCHMARK(BM_StarMoyal)->Arg(1)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

void BM_SmashMu2(benchmark::State &state)
{
	auto p = build_preset(config(PresetKind::smash, 2));
	auto a = E("x1^2"), b = E("x2");
	for (auto _ : state)
	{
		StarEngine engine(p.ctx, p.lambda_at, 2);
		benchmark::DoNotOptimize(engine.coefficient(2, a, b));
	}
}
BENCHMARK(BM_SmashMu2)->Unit(benchmark::kMillisecond);

} // namespace
BENCHMARK_MAIN();
