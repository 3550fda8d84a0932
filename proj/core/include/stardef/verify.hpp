#pragma once

#include "stardef/cochain.hpp"
#include "stardef/deformation.hpp"
#include "stardef/presets.hpp"
#include "stardef/sampling.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace stardef {

struct CheckResult
{
	std::string name;
	int trials = 0;
	int failures = 0;
	// First failing case, serialized; empty when every trial passed.
	std::string counterexample;

	bool ok() const { return trials > 0 && failures == 0; }
};

struct SuiteResult
{
	std::string suite;
	std::vector<CheckResult> checks;

	bool ok() const;
};

// A random multilinear cochain of the given arity and internal degree: a sum
// of two product forms u_0 . T_1(a_1) . u_1 ... T_n(a_n) . u_n with random
// homogeneous u_i and each T_i one of identity, d or h (h taken as zero on
// 0-forms).
Cochain random_cochain(std::shared_ptr<Coresolution const> const &ctx, Sampler &rng,
                       int arity, int internal_degree);

// A random element of A_Gamma: a p-free polynomial of degree <= max_degree
// times a random group element.
Element random_A_element(Sampler &rng, int dim, int group_order, int max_degree,
                         int terms = 2);

// True when e has no known nonzero term and every form degree has a
// non-negative window. Otherwise `why` explains.
bool vanishes(Element const &e, std::string *why = nullptr);

// delta^2 = 0, d^2 = 0, d delta + delta d = 0, delta f = [m, f] against the
// expanded formula, antisymmetry and Jacobi for the bracket, and the Leibniz
// rules for delta and d over the bracket.
SuiteResult cochain_suite(std::shared_ptr<Coresolution const> const &ctx, int trials,
                          std::uint64_t seed);

// hd + dh = 1 - eps sigma on 0-forms, = 1 on higher forms, h^2 = 0 on forms of
// degree >= 1, and h = id on A.
SuiteResult homotopy_suite(std::shared_ptr<Coresolution const> const &ctx, int trials,
                           std::uint64_t seed);

// Order-by-order associators of the star product on random triples of
// degree <= 3. `mu` defaults to the engine's coefficients.
SuiteResult assoc_suite(Preset const &preset, StarEngine const &engine, int trials,
                        std::uint64_t seed);
SuiteResult assoc_suite(Preset const &preset, CoefficientFn const &mu, int order,
                        int trials, std::uint64_t seed, std::string const &label = "assoc");

// The same suite with the top coefficient corrupted by the non-cocycle
// (a, b) -> (d a / d x^1) b. The suite must fail; the result reports whether
// it did.
CheckResult negative_control(Preset const &preset, StarEngine const &engine, int trials,
                             std::uint64_t seed);

// Engine mu_1 against the closed-form bracket on all generator pairs and on
// `trials` random pairs of degree <= 3.
SuiteResult reference_suite(Preset const &preset, StarEngine const &engine, int trials,
                            std::uint64_t seed);

// validate_seed, h Psi_n = 0, h Phi_n = 0, d mu_n = 0 and the Maurer-Cartan
// residual through the engine's order, and the deformed closedness residuals
// through order min(order, 2).
SuiteResult seed_suite(Preset const &preset, StarEngine const &engine, int trials,
                       std::uint64_t seed);

// Recurrence mu_2 against the closed composite on random pairs.
SuiteResult mu2_suite(Preset const &preset, StarEngine const &engine, int trials,
                      std::uint64_t seed);

std::vector<std::string> const &suite_names();
// Runs one named suite ("cochain", "homotopy", "assoc", "reference", "seed",
// "mu2") or all of them ("all").
std::vector<SuiteResult> run_suites(Preset const &preset, StarEngine const &engine,
                                    std::string const &which, int trials,
                                    std::uint64_t seed);

} // namespace stardef
