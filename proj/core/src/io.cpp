#include "stardef/io.hpp"

#include "stardef/errors.hpp"

#include <fstream>
#include <set>
#include <sstream>

namespace stardef {

namespace {

Json const &field(Json const &doc, char const *key)
{
	auto it = doc.find(key);
	if (it == doc.end())
		throw ValidationError(std::string("missing field \"") + key + "\"");
	return *it;
}

int integer_field(Json const &v, char const *what)
{
	if (!v.is_number_integer())
		throw ValidationError(std::string(what) + " must be an integer");
	return v.get<int>();
}

RatMatrix matrix_from_json(Json const &v, int dim, char const *what)
{
	if (!v.is_array() || static_cast<int>(v.size()) != dim)
		throw ValidationError(std::string(what) + " must be a " + std::to_string(dim) + "x" +
		                      std::to_string(dim) + " matrix");
	std::vector<std::vector<Rational>> rows;
	for (auto const &row : v)
	{
		if (!row.is_array() || static_cast<int>(row.size()) != dim)
			throw ValidationError(std::string(what) + " must be a " + std::to_string(dim) +
			                      "x" + std::to_string(dim) + " matrix");
		auto &r = rows.emplace_back();
		for (auto const &x : row)
			r.push_back(rational_from_json(x, what));
	}
	return RatMatrix::from_rows(rows);
}

Json matrix_json(RatMatrix const &m)
{
	Json rows = Json::array();
	for (int i = 0; i < m.size(); ++i)
	{
		Json row = Json::array();
		for (int j = 0; j < m.size(); ++j)
			row.push_back(to_string(m(i, j)));
		rows.push_back(std::move(row));
	}
	return rows;
}

Json coefficients_json(std::vector<Element> const &cs)
{
	Json out = Json::array();
	for (std::size_t k = 0; k < cs.size(); ++k)
		out.push_back({{"order", k}, {"terms", element_terms_json(cs[k])}});
	return out;
}

} // namespace

Json rational_json(Rational const &q) { return to_string(q); }

Rational rational_from_json(Json const &v, char const *what)
{
	if (v.is_number_integer())
		return Rational(v.get<long>());
	if (!v.is_string())
		throw ValidationError(std::string(what) + ": rationals are strings \"a/b\"");
	return parse_rational(v.get<std::string>());
}

PresetConfig parse_config(Json const &doc)
{
	if (!doc.is_object())
		throw ValidationError("config must be a JSON object");
	static std::set<std::string> const known{"preset", "dim", "pi", "group_generators", "c",
	                                         "order", "p_cutoff", "seed"};
	for (auto const &[key, value] : doc.items())
		if (!known.count(key))
			throw ValidationError("unknown config key \"" + key + "\"");

	PresetConfig cfg;
	auto const &preset = field(doc, "preset");
	if (!preset.is_string())
		throw ValidationError("\"preset\" must be a string");
	cfg.preset = parse_preset_kind(preset.get<std::string>());
	cfg.dim = integer_field(field(doc, "dim"), "\"dim\"");
	if (cfg.dim < 1 || cfg.dim > kMaxDim)
		throw ValidationError("\"dim\" must be between 1 and " + std::to_string(kMaxDim));
	cfg.pi = matrix_from_json(field(doc, "pi"), cfg.dim, "\"pi\"");
	if (auto it = doc.find("group_generators"); it != doc.end())
	{
		if (!it->is_array())
			throw ValidationError("\"group_generators\" must be a list of matrices");
		for (auto const &g : *it)
			cfg.group_generators.push_back(matrix_from_json(g, cfg.dim, "group generator"));
	}
	if (auto it = doc.find("c"); it != doc.end())
	{
		if (!it->is_object())
			throw ValidationError("\"c\" must map element indices to rationals");
		for (auto const &[key, value] : it->items())
		{
			std::size_t used = 0;
			int index = -1;
			try
			{
				index = std::stoi(key, &used);
			}
			catch (std::exception const &)
			{
			}
			if (used != key.size() || index < 0)
				throw ValidationError("\"c\" key \"" + key + "\" is not an element index");
			cfg.c[index] = rational_from_json(value, "\"c\" value");
		}
	}
	if (auto it = doc.find("order"); it != doc.end())
		cfg.order = integer_field(*it, "\"order\"");
	if (cfg.order < 0)
		throw ValidationError("\"order\" must be non-negative");
	if (auto it = doc.find("p_cutoff"); it != doc.end())
	{
		if (it->is_string() && it->get<std::string>() == "auto")
			cfg.p_cutoff.reset();
		else
		{
			cfg.p_cutoff = integer_field(*it, "\"p_cutoff\" (or \"auto\")");
			if (*cfg.p_cutoff < 0)
				throw ValidationError("\"p_cutoff\" must be non-negative");
		}
	}
	if (auto it = doc.find("seed"); it != doc.end())
	{
		if (!it->is_number_unsigned())
			throw ValidationError("\"seed\" must be a non-negative integer");
		cfg.seed = it->get<std::uint64_t>();
	}
	return cfg;
}

PresetConfig parse_config_text(std::string const &text)
{
	Json doc;
	try
	{
		doc = Json::parse(text);
	}
	catch (Json::parse_error const &e)
	{
		throw ParseError(std::string("malformed JSON: ") + e.what(), e.byte);
	}
	return parse_config(doc);
}

PresetConfig load_config(std::string const &path)
{
	std::ifstream in(path);
	if (!in)
		throw ValidationError("cannot read config file " + path);
	std::stringstream buffer;
	buffer << in.rdbuf();
	return parse_config_text(buffer.str());
}

Json config_to_json(PresetConfig const &cfg)
{
	Json doc{{"preset", to_string(cfg.preset)},
	         {"dim", cfg.dim},
	         {"pi", matrix_json(cfg.pi)},
	         {"order", cfg.order},
	         {"seed", cfg.seed}};
	if (!cfg.group_generators.empty())
	{
		doc["group_generators"] = Json::array();
		for (auto const &g : cfg.group_generators)
			doc["group_generators"].push_back(matrix_json(g));
	}
	if (!cfg.c.empty())
	{
		doc["c"] = Json::object();
		for (auto const &[g, v] : cfg.c)
			doc["c"][std::to_string(g)] = to_string(v);
	}
	doc["p_cutoff"] = cfg.p_cutoff ? Json(*cfg.p_cutoff) : Json("auto");
	return doc;
}

Json group_elements_json(MatrixGroup const &group)
{
	Json out = Json::array();
	for (int g = 0; g < group.order(); ++g)
		out.push_back(matrix_json(group.element(g)));
	return out;
}

Json element_terms_json(Element const &e)
{
	if (!e.is_p_free())
		throw ValidationError("only p-free 0-forms serialize as coefficient terms: " +
		                      to_string(e));
	Json terms = Json::array();
	for (auto const &[sector, f] : e.parts())
		for (auto const &[m, c] : f.terms())
		{
			Json exps = Json::array();
			for (int i = 0; i < e.dim(); ++i)
				exps.push_back(m.x(i));
			terms.push_back(
			    {{"coeff", to_string(c)}, {"monomial", exps}, {"group", sector.group}});
		}
	return terms;
}

Element element_from_terms_json(Json const &terms, int dim, int group_order)
{
	if (!terms.is_array())
		throw ValidationError("\"terms\" must be a list");
	Element e(dim);
	for (auto const &t : terms)
	{
		auto const &exps = field(t, "monomial");
		if (!exps.is_array() || static_cast<int>(exps.size()) != dim)
			throw ValidationError("monomial needs " + std::to_string(dim) + " exponents");
		Monomial m;
		for (int i = 0; i < dim; ++i)
			m.set_x(i, integer_field(exps[i], "exponent"));
		int g = integer_field(field(t, "group"), "\"group\"");
		if (g < 0 || g >= group_order)
			throw ValidationError("group index out of range");
		auto c = rational_from_json(field(t, "coeff"), "\"coeff\"");
		e.add({g, 0}, Polynomial::from_terms(dim, {{m, c}}));
	}
	return e;
}

Json compute_document(Preset const &preset, StarResult const &result)
{
	return {{"preset", to_string(preset.config.preset)},
	        {"order", static_cast<int>(result.coefficients.size()) - 1},
	        {"group_elements", group_elements_json(*preset.group)},
	        {"coefficients", coefficients_json(result.coefficients)},
	        {"p_cutoff_used", result.p_cutoff},
	        // Every coefficient is returned only after these hold.
	        {"checks", {{"p_independent", true}, {"stable_under_cutoff_plus_2", true}}}};
}

std::vector<Element> coefficients_from_document(Json const &doc, int dim, int group_order)
{
	std::vector<Element> out;
	for (auto const &c : field(doc, "coefficients"))
	{
		if (integer_field(field(c, "order"), "\"order\"") != static_cast<int>(out.size()))
			throw ValidationError("coefficients are not listed by increasing order");
		out.push_back(element_from_terms_json(field(c, "terms"), dim, group_order));
	}
	return out;
}

Json table_document(Preset const &preset, StarEngine const &engine)
{
	int dim = preset.config.dim;
	Json table = Json::array();
	int cutoff = 0;
	for (int i = 0; i < dim; ++i)
		for (int j = 0; j < dim; ++j)
		{
			auto xi = Element::x(dim, i), xj = Element::x(dim, j);
			std::vector<Element> commutator;
			for (int n = 0; n <= engine.order(); ++n)
			{
				int used_ij = 0, used_ji = 0;
				auto ij = engine.coefficient(n, xi, xj, &used_ij);
				auto ji = engine.coefficient(n, xj, xi, &used_ji);
				cutoff = std::max({cutoff, used_ij, used_ji});
				commutator.push_back(ij - ji);
			}
			table.push_back({{"i", i + 1},
			                 {"j", j + 1},
			                 {"coefficients", coefficients_json(commutator)}});
		}
	return {{"preset", to_string(preset.config.preset)},
	        {"order", engine.order()},
	        {"group_elements", group_elements_json(*preset.group)},
	        {"table", table},
	        {"p_cutoff_used", cutoff}};
}

Json verify_document(Preset const &preset, int order, int trials, std::uint64_t seed,
                     std::vector<SuiteResult> const &suites)
{
	Json out = Json::array();
	bool ok = true;
	for (auto const &s : suites)
	{
		Json checks = Json::array();
		for (auto const &c : s.checks)
		{
			Json check{{"name", c.name}, {"trials", c.trials}, {"failures", c.failures}};
			if (!c.counterexample.empty())
				check["counterexample"] = c.counterexample;
			checks.push_back(std::move(check));
		}
		out.push_back({{"suite", s.suite}, {"ok", s.ok()}, {"checks", checks}});
		ok = ok && s.ok();
	}
	return {{"preset", to_string(preset.config.preset)},
	        {"order", order},
	        {"seed", seed},
	        {"trials", trials},
	        {"ok", ok},
	        {"suites", out}};
}

} // namespace stardef
