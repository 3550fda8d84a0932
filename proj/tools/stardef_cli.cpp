// stardef: star products from a preset configuration.
//
//   stardef compute --config cfg.json --a "x1" --b "x2" [--order N] [--p-cutoff D]
//   stardef verify  --config cfg.json [--order N] [--trials T] [--seed S] [--suite NAME]
//   stardef table   --config cfg.json [--order N]
//
// Exit codes: 0 success, 1 a verification suite failed, 2 parse error,
// 3 validation error, 4 cost limit or truncation.

#include "stardef/errors.hpp"
#include "stardef/io.hpp"
#include "stardef/parse.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

using namespace stardef;

namespace {

enum Exit
{
	ok = 0,
	verification_failed = 1,
	parse_error = 2,
	validation_error = 3,
	cost_error = 4,
};

struct Common
{
	std::string config;
	std::optional<int> order;
	std::optional<int> p_cutoff;
	std::string out;
	bool allow_expensive = false;
};

void add_common(CLI::App *cmd, Common &c)
{
	cmd->add_option("--config", c.config, "JSON configuration file")->required();
	cmd->add_option("--order", c.order, "deformation order (overrides the config)");
	cmd->add_option("--out", c.out, "write the JSON document here instead of stdout");
	cmd->add_flag("--allow-expensive", c.allow_expensive,
	              "allow orders above the cost limit of the preset");
}

struct Setup
{
	Preset preset;
	std::unique_ptr<StarEngine> engine;
};

Setup prepare(Common const &c)
{
	auto cfg = load_config(c.config);
	if (c.order)
		cfg.order = *c.order;
	if (c.p_cutoff)
		cfg.p_cutoff = *c.p_cutoff;
	if (cfg.order < 0)
		throw ValidationError("order must be non-negative");
	check_cost(cfg, c.allow_expensive);
	if (c.allow_expensive && cfg.order > max_cheap_order(cfg.preset))
		std::cerr << "warning: order " << cfg.order << " exceeds the cost limit "
		          << max_cheap_order(cfg.preset) << " for " << to_string(cfg.preset)
		          << "; runtime grows exponentially with the order\n";
	Setup s{build_preset(cfg), nullptr};
	s.engine = std::make_unique<StarEngine>(s.preset.ctx, s.preset.lambda_at, cfg.order);
	s.engine->set_cutoff(cfg.p_cutoff);
	return s;
}

void emit(Json const &doc, std::string const &out)
{
	if (out.empty())
	{
		std::cout << doc.dump(2) << "\n";
		return;
	}
	std::ofstream file(out);
	if (!file)
		throw ValidationError("cannot write " + out);
	file << doc.dump(2) << "\n";
}

} // namespace

int main(int argc, char **argv)
{
	CLI::App app{"Exact star products from a graded coresolution"};
	app.require_subcommand(1);

	Common compute_opts;
	std::string a_src, b_src;
	auto *compute = app.add_subcommand("compute", "coefficients of a * b");
	add_common(compute, compute_opts);
	compute->add_option("--a", a_src, "left factor, e.g. \"x1^2 + x2#g1\"")->required();
	compute->add_option("--b", b_src, "right factor")->required();
	compute->add_option("--p-cutoff", compute_opts.p_cutoff, "fixed starting p-cutoff");

	Common verify_opts;
	int trials = 10;
	std::optional<std::uint64_t> seed;
	std::string suite = "all";
	auto *verify = app.add_subcommand("verify", "run the identity and associativity suites");
	add_common(verify, verify_opts);
	verify->add_option("--trials", trials, "random cases per check")->check(CLI::PositiveNumber);
	verify->add_option("--seed", seed, "random seed (overrides the config)");
	verify->add_option("--suite", suite, "cochain, homotopy, assoc, reference, seed, mu2 or all");

	Common table_opts;
	auto *table = app.add_subcommand("table", "star commutators of the generators");
	add_common(table, table_opts);
	table->add_option("--p-cutoff", table_opts.p_cutoff, "fixed starting p-cutoff");

	try
	{
		app.parse(argc, argv);
	}
	catch (CLI::ParseError const &e)
	{
		int code = app.exit(e);
		return code == 0 ? Exit::ok : Exit::parse_error;
	}

	try
	{
		if (*compute)
		{
			auto s = prepare(compute_opts);
			int dim = s.preset.config.dim, G = s.preset.group->order();
			auto a = parse_group_algebra_element(a_src, dim, G);
			auto b = parse_group_algebra_element(b_src, dim, G);
			emit(compute_document(s.preset, s.engine->star(a, b)), compute_opts.out);
		}
		else if (*verify)
		{
			auto s = prepare(verify_opts);
			std::uint64_t S = seed.value_or(s.preset.config.seed);
			auto results = run_suites(s.preset, *s.engine, suite, trials, S);
			auto doc = verify_document(s.preset, s.engine->order(), trials, S, results);
			emit(doc, verify_opts.out);
			return doc["ok"].get<bool>() ? Exit::ok : Exit::verification_failed;
		}
		else if (*table)
		{
			auto s = prepare(table_opts);
			emit(table_document(s.preset, *s.engine), table_opts.out);
		}
	}
	catch (ParseError const &e)
	{
		std::cerr << "parse error: " << e.what() << "\n";
		return Exit::parse_error;
	}
	catch (CostLimitError const &e)
	{
		std::cerr << "cost limit: " << e.what() << "\n";
		return Exit::cost_error;
	}
	catch (TruncationError const &e)
	{
		std::cerr << "truncation: " << e.what() << "\n";
		return Exit::cost_error;
	}
	catch (ValidationError const &e)
	{
		std::cerr << "invalid input: " << e.what() << "\n";
		return Exit::validation_error;
	}
	return Exit::ok;
}
