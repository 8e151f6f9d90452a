/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <ttpack/bounds.hh>
#include <ttpack/cli.hh>
#include <ttpack/constructions.hh>
#include <ttpack/designs.hh>
#include <ttpack/enumeration.hh>
#include <ttpack/experiments.hh>
#include <ttpack/packing.hh>
#include <ttpack/tournament.hh>

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <functional>
#include <optional>
#include <sstream>

using json = nlohmann::json;

namespace ttpack
{
    namespace
    {
        class UsageError : public std::runtime_error
        {
            public:
                using std::runtime_error::runtime_error;
        };

        struct RunConfig
        {
            std::string input;
            std::string output;
            std::string format = "json";
            std::uint64_t seed = default_seed;
            int trials = 1;
            int k = 3;
            int n = 0;
            std::optional<long> budget_ms;
            unsigned workers = 1;
            bool no_cache = false;
        };

        auto report(const std::string & command, const RunConfig & config, json && extra_config) -> json
        {
            json config_echo = std::move(extra_config);
            config_echo["workers"] = config.workers;
            return json{
                { "tool_version", tool_version },
                { "format_version", report_format_version },
                { "command", command },
                { "seed", config.seed },
                { "config", config_echo } };
        }

        auto to_json(const ScoreSequence & s) -> json
        {
            return json(std::vector<int>(s.begin(), s.end()));
        }

        auto vertices_of(VertexSet s) -> std::vector<int>
        {
            std::vector<int> result;
            for ( ; s ; s &= s - 1)
                result.push_back(std::countr_zero(s));
            return result;
        }

        auto parse_int_list(const std::string & text) -> std::vector<int>
        {
            std::vector<int> result;
            std::stringstream in(text);
            for (std::string field ; std::getline(in, field, ',') ; ) {
                try {
                    std::size_t used = 0;
                    result.push_back(std::stoi(field, &used));
                    if (used != field.size())
                        throw std::invalid_argument(field);
                }
                catch (const std::exception &) {
                    throw UsageError("bad integer list \"" + text + "\"");
                }
            }
            return result;
        }

        auto parse_score(const std::string & text) -> ScoreSequence
        {
            auto s = parse_int_list(text);
            std::sort(s.begin(), s.end(), std::greater<int>());
            if (! is_valid_score(s))
                throw UsageError("\"" + text + "\" is not a tournament score sequence");
            return s;
        }

        auto cache_dir(const RunConfig & config) -> std::optional<std::filesystem::path>
        {
            if (config.no_cache)
                return std::nullopt;
            return default_cache_directory();
        }

        auto read_input(const RunConfig & config) -> Tournament
        {
            if (config.input.empty())
                throw UsageError("--in is required");
            return read_tournament_file(config.input);
        }

        struct Output
        {
            std::ostream & out;
            std::string text;

            auto emit(const json & j) -> void
            {
                text += j.dump(2) + "\n";
            }
        };

        auto cmd_census(const RunConfig & config, Output & o) -> int
        {
            auto t = read_input(config);
            auto c = census(t);
            auto r = report("census", config, { { "in", config.input } });
            r["n"] = t.n();
            r["a"] = c.transitive;
            r["t"] = c.cyclic;
            r["score"] = to_json(score(t));
            r["eq1_lower_bound"] = to_string(eq1_lower_bound(std::max(3, t.n())));
            o.emit(r);
            return exit_codes::success;
        }

        auto cmd_enumerate(const RunConfig & config, const std::string & score_text,
                std::optional<std::int64_t> triangles, Output & o) -> int
        {
            auto classes = load_or_enumerate(config.n, cache_dir(config), config.workers);
            std::optional<ScoreSequence> wanted;
            if (! score_text.empty()) {
                wanted = parse_score(score_text);
                if (int(wanted->size()) != config.n)
                    throw UsageError("score length does not match --n");
                classes = filter_by_score(classes, *wanted);
            }
            if (triangles)
                std::erase_if(classes, [&] (const Tournament & t) { return census(t).cyclic != *triangles; });

            if (config.format == "text") {
                o.text += "count=" + std::to_string(classes.size()) + " n=" + std::to_string(config.n) + "\n";
                for (auto & t : classes)
                    o.text += canonical_form(t).to_string() + "\n";
                return exit_codes::success;
            }

            json extra{ { "n", config.n } };
            if (wanted)
                extra["score"] = to_json(*wanted);
            if (triangles)
                extra["triangles"] = *triangles;
            auto r = report("enumerate", config, std::move(extra));
            r["count"] = classes.size();
            json codes = json::array();
            std::set<ScoreSequence> scores;
            for (auto & t : classes) {
                codes.push_back(canonical_form(t).to_string());
                scores.insert(score(t));
            }
            r["codes"] = codes;
            json score_list = json::array();
            for (auto & s : scores)
                score_list.push_back(to_json(s));
            r["scores"] = score_list;
            o.emit(r);
            return exit_codes::success;
        }

        auto packing_json(const Packing & p) -> json
        {
            json copies = json::array();
            for (auto c : p.copies)
                copies.push_back(vertices_of(c));
            return json{ { "n", p.n }, { "k", p.k }, { "value", p.size() }, { "optimal", p.optimal },
                { "copies", copies }, { "nodes_explored", p.nodes_explored } };
        }

        auto cmd_solve(const RunConfig & config, bool greedy, Output & o) -> int
        {
            auto t = read_input(config);
            if (config.k < 3 || config.k > t.n())
                throw UsageError("--k must lie in 3..n");

            Packing p;
            if (greedy)
                p = greedy_packing(t, config.k, config.seed);
            else {
                if (t.n() > 10 && ! config.budget_ms)
                    throw UsageError("--budget-ms is required for n > 10");
                SolveOptions options;
                if (config.budget_ms)
                    options.time_budget = std::chrono::milliseconds(*config.budget_ms);
                p = max_packing_exact(t, config.k, options);
            }
            if (! verify_packing(t, p))
                throw VerificationFailure("solver produced an invalid packing");

            if (config.format == "text") {
                o.text += std::to_string(p.size()) + (p.optimal ? "" : " (not proven optimal)") + "\n";
                return exit_codes::success;
            }

            json extra{ { "in", config.input }, { "k", config.k }, { "greedy", greedy } };
            if (config.budget_ms)
                extra["budget_ms"] = *config.budget_ms;
            auto r = report("solve", config, std::move(extra));
            r.update(packing_json(p));
            if (config.budget_ms)
                r.erase("nodes_explored");      // depends on timing once a budget is involved
            o.emit(r);
            return exit_codes::success;
        }

        auto cmd_verify_lemma22(const RunConfig & config, Output & o) -> int
        {
            auto classes = load_or_enumerate(7, cache_dir(config), config.workers);
            auto r = report("verify lemma22", config, json::object());
            int code = exit_codes::success;
            try {
                auto rep = verify_lemma22(classes, config.workers);
                r["classes"] = rep.records.size();
                r["few_triangles_perfect"] = rep.few_triangles_perfect;
                r["moderate_triangles_six"] = rep.moderate_triangles_six;
                r["always_five"] = rep.always_five;
                r["min_packing"] = rep.min_packing;
                json joint = json::array();
                for (auto & [key, count] : rep.joint)
                    joint.push_back({ { "t", key.first }, { "P", key.second }, { "classes", count } });
                r["joint"] = joint;
                r["verified"] = rep.ok();
            }
            catch (const VerificationFailure & e) {
                r["verified"] = false;
                r["failure"] = e.what();
                code = exit_codes::verification_failed;
            }
            o.emit(r);
            return code;
        }

        auto fmin_json(const FMinRecord & f) -> json
        {
            return json{ { "n", f.n }, { "k", f.k }, { "f", f.f_value }, { "classes", f.classes },
                { "argmin", f.argmin } };
        }

        auto cmd_verify_conjecture(const RunConfig & config, int max_n, Output & o) -> int
        {
            if (max_n < 3 || max_n > 8)
                throw UsageError("--max-n must lie in 3..8");
            auto r = report("verify conjecture", config, { { "max_n", max_n } });
            bool ok = true;
            json rows = json::array();
            for (int n = 3 ; n <= max_n ; ++n) {
                auto classes = load_or_enumerate(n, cache_dir(config), config.workers);
                auto f = f_min(n, 3, classes, config.workers);
                auto formula = turan3_upper_bound(n);
                auto row = fmin_json(f);
                row["formula"] = formula;
                row["matches"] = f.f_value == formula;
                ok = ok && f.f_value == formula;
                rows.push_back(row);
            }
            r["values"] = rows;
            r["verified"] = ok;
            o.emit(r);
            return ok ? exit_codes::success : exit_codes::verification_failed;
        }

        auto read_text(const std::string & path) -> std::string
        {
            std::ifstream in(path, std::ios::binary);
            if (! in)
                throw UsageError("cannot open " + path);
            std::ostringstream buffer;
            buffer << in.rdbuf();
            return buffer.str();
        }

        auto cmd_verify_design(const RunConfig & config, Output & o) -> int
        {
            if (config.input.empty())
                throw UsageError("--in is required");
            auto d = parse_design(read_text(config.input));
            bool ok = verify_design(d);
            auto r = report("verify design", config, { { "in", config.input } });
            r["points"] = d.point_count;
            r["block_size"] = d.block_size;
            r["blocks"] = d.blocks.size();
            r["verified"] = ok;
            o.emit(r);
            return ok ? exit_codes::success : exit_codes::verification_failed;
        }

        auto cmd_verify_packing(const RunConfig & config, const std::string & packing_path, Output & o) -> int
        {
            auto t = read_input(config);
            if (packing_path.empty())
                throw UsageError("--packing is required");
            json p;
            try {
                p = json::parse(read_text(packing_path));
            }
            catch (const json::exception & e) {
                throw UsageError(std::string("bad packing file: ") + e.what());
            }

            Packing packing;
            packing.n = t.n();
            packing.k = p.value("k", 0);
            bool well_formed = true;
            for (auto & copy : p.value("copies", json::array())) {
                VertexSet s = 0;
                for (auto & v : copy) {
                    int x = v.get<int>();
                    if (x < 0 || x >= t.n() || ((s >> x) & 1))
                        well_formed = false;
                    else
                        s |= VertexSet{ 1 } << x;
                }
                packing.copies.push_back(s);
            }
            bool ok = well_formed && verify_packing(t, packing);

            auto r = report("verify packing", config, { { "in", config.input }, { "packing", packing_path } });
            r["copies"] = packing.copies.size();
            r["verified"] = ok;
            o.emit(r);
            return ok ? exit_codes::success : exit_codes::verification_failed;
        }

        auto cmd_fmin(const RunConfig & config, Output & o) -> int
        {
            if (config.n < 1 || config.n > 8)
                throw UsageError("--n must lie in 1..8");
            auto classes = load_or_enumerate(config.n, cache_dir(config), config.workers);
            auto f = f_min(config.n, config.k, classes, config.workers);
            auto r = report("fmin", config, { { "n", config.n }, { "k", config.k } });
            r.update(fmin_json(f));
            if (config.k == 3)
                r["formula"] = turan3_upper_bound(config.n);
            o.emit(r);
            return exit_codes::success;
        }

        auto cmd_pipeline(const RunConfig & config, const std::string & design_path, Output & o) -> int
        {
            auto t = read_input(config);
            auto design = design_path.empty() ? ag2_lines(7) : parse_design(read_text(design_path));
            if (config.trials < 1)
                throw UsageError("--trials must be positive");
            auto rep = theorem1_pipeline(t, design, config.trials, config.seed, config.workers);

            if (config.format == "csv") {
                o.text += "trial,total,few,moderate,many,verified\n";
                for (std::size_t i = 0 ; i < rep.trials.size() ; ++i) {
                    auto & tr = rep.trials[i];
                    o.text += std::to_string(i) + "," + std::to_string(tr.total) + "," + std::to_string(tr.events[0])
                        + "," + std::to_string(tr.events[1]) + "," + std::to_string(tr.events[2]) + ","
                        + (tr.verified ? "1" : "0") + "\n";
                }
            }
            else {
                auto r = report("pipeline", config, { { "in", config.input }, { "trials", config.trials },
                        { "design", design_path.empty() ? "ag2" : design_path } });
                r["n"] = rep.n;
                r["blocks"] = rep.blocks;
                json totals = json::array();
                for (auto & tr : rep.trials)
                    totals.push_back(tr.total);
                r["totals"] = totals;
                json histogram = json::object();
                for (auto & [value, count] : rep.block_values)
                    histogram[std::to_string(value)] = count;
                r["block_values"] = histogram;
                r["p1"] = to_string(rep.event_frequency[0]);
                r["p2"] = to_string(rep.event_frequency[1]);
                r["p3"] = to_string(rep.event_frequency[2]);
                r["mean_block_packing"] = rep.mean_block_packing;
                r["mean_total"] = rep.mean_total;
                r["min_total"] = rep.min_total;
                r["floor"] = 5 * rep.blocks;
                r["expected_block_triangles"] = to_string(rep.expected_block_triangles);
                r["block_lp_bound"] = to_string(rep.block_lp_bound);
                r["asymptotic_constant"] = to_string(rep.asymptotic_constant);
                r["all_verified"] = rep.all_verified();
                o.emit(r);
            }

            bool ok = rep.all_verified() && rep.min_total >= 5 * rep.blocks;
            return ok ? exit_codes::success : exit_codes::verification_failed;
        }

        auto parse_rational_list(const std::string & text, std::size_t expected) -> std::vector<Rational>
        {
            std::vector<Rational> result;
            std::stringstream in(text);
            for (std::string field ; std::getline(in, field, ',') ; ) {
                try {
                    result.push_back(parse_rational(field));
                }
                catch (const std::exception &) {
                    throw UsageError("bad rational \"" + field + "\"");
                }
            }
            if (result.size() != expected)
                throw UsageError("expected " + std::to_string(expected) + " values in \"" + text + "\"");
            return result;
        }

        auto cmd_lp(const RunConfig & config, const std::string & budget_text, const std::string & values_text,
                const std::string & costs_text, Output & o) -> int
        {
            Rational budget;
            try {
                budget = parse_rational(budget_text);
            }
            catch (const std::exception &) {
                throw UsageError("bad budget \"" + budget_text + "\"");
            }
            auto values = parse_rational_list(values_text, 3);
            auto costs = parse_rational_list(costs_text, 2);
            auto result = lp_step(budget, { values[0], values[1], values[2] }, { costs[0], costs[1] });

            auto r = report("lp", config, { { "budget", to_string(budget) }, { "values", values_text },
                    { "costs", costs_text } });
            r["minimum"] = to_string(result.minimum);
            r["argmin"] = { to_string(result.argmin[0]), to_string(result.argmin[1]), to_string(result.argmin[2]) };
            o.emit(r);
            return exit_codes::success;
        }

        auto cmd_construct(const RunConfig & config, bool turan, bool qr, int factor, const std::string & filler_text,
                std::ostream & err, Output & o) -> int
        {
            if (int(turan) + int(qr) + int(factor > 0) != 1)
                throw UsageError("choose exactly one of --turan3, --qr7, --blowup");

            ConstructionSpec spec;
            try {
                spec.filler = parse_filler(filler_text);
            }
            catch (const std::invalid_argument & e) {
                throw UsageError(e.what());
            }
            spec.seed = config.seed;
            if (turan) {
                if (config.n < 3 || config.n > Tournament::max_vertices)
                    throw UsageError("--n must lie in 3..64 for --turan3");
                spec.kind = ConstructionKind::Turan3;
                spec.n = config.n;
                err << "note: cross edges oriented V1->V2->V3->V1; the printed orientation list repeats "
                    "\"from V1 to V2\" for the V2-V3 edges, read here as V2->V3\n";
            }
            else if (qr)
                spec.kind = ConstructionKind::QR7;
            else {
                spec.kind = ConstructionKind::Blowup;
                spec.factor = factor;
            }

            o.text += serialize(build(spec));
            return exit_codes::success;
        }

        auto cmd_design(bool fano, bool ag2, bool all7, bool sts9, Output & o) -> int
        {
            if (int(fano) + int(ag2) + int(all7) + int(sts9) != 1)
                throw UsageError("choose exactly one of --fano, --ag2, --all-sts7, --sts9");
            if (fano)
                o.text += serialize_design(fano_plane());
            else if (ag2)
                o.text += serialize_design(ag2_lines(7));
            else if (sts9)
                o.text += serialize_design(sts9_base());
            else
                for (auto & d : all_sts7())
                    o.text += serialize_design(d);
            return exit_codes::success;
        }

        auto cmd_density(const RunConfig & config, bool improve, Output & o) -> int
        {
            auto rep = density_experiment(config.n, config.k, config.trials, config.seed, improve, config.workers);
            if (config.format == "csv") {
                o.text += "trial,copies,covered_fraction\n";
                for (auto & t : rep.trials) {
                    std::ostringstream line;
                    line.precision(10);
                    line << t.trial << "," << t.copies << "," << t.covered_fraction << "\n";
                    o.text += line.str();
                }
                return exit_codes::success;
            }

            auto r = report("experiment density", config, { { "n", config.n }, { "k", config.k },
                    { "trials", config.trials }, { "improve", improve } });
            json trials = json::array();
            for (auto & t : rep.trials)
                trials.push_back({ { "trial", t.trial }, { "greedy_copies", t.greedy_copies }, { "copies", t.copies },
                        { "covered_fraction", t.covered_fraction } });
            r["trials"] = trials;
            r["mean_covered_fraction"] = rep.mean_covered_fraction;
            r["reference_density"] = rep.reference_density;
            o.emit(r);
            return exit_codes::success;
        }

        auto cmd_edge_stats(const RunConfig & config, Output & o) -> int
        {
            auto t = config.input.empty() ? DenseTournament::random(config.n, config.seed)
                : DenseTournament(read_tournament_file(config.input));
            auto stats = edge_copy_stats(t, config.k);

            if (config.format == "csv") {
                o.text += "u,v,count\n";
                for (int i = 0 ; i < t.n() ; ++i)
                    for (int j = i + 1 ; j < t.n() ; ++j)
                        o.text += std::to_string(i) + "," + std::to_string(j) + ","
                            + std::to_string(stats.counts[edge_index(t.n(), i, j)]) + "\n";
                return exit_codes::success;
            }

            json extra{ { "n", t.n() }, { "k", config.k } };
            if (! config.input.empty())
                extra["in"] = config.input;
            auto r = report("experiment edge-stats", config, std::move(extra));
            r["copies"] = stats.copies;
            r["count_sum"] = stats.count_sum;
            r["mean"] = stats.mean;
            r["min"] = stats.min;
            r["max"] = stats.max;
            r["expectation"] = to_string(stats.expectation);
            r["handshake_holds"] = stats.count_sum == stats.copies * binomial(config.k, 2);
            o.emit(r);
            return exit_codes::success;
        }
    }

    auto run_cli(const std::vector<std::string> & args, std::ostream & out, std::ostream & err) -> int
    {
        CLI::App app{ "Edge-disjoint transitive subtournament packings: exact solving, enumeration and bounds" };
        app.require_subcommand(1);

        RunConfig config;
        app.add_option("--workers", config.workers, "Parallel workers for sweeps")->check(CLI::Range(1u, 256u));
        app.add_option("--output", config.output, "Write the report to this file instead of stdout");

        auto add_common = [&] (CLI::App * sub) {
            sub->add_option("--workers", config.workers, "Parallel workers for sweeps")->check(CLI::Range(1u, 256u));
            sub->add_option("--output", config.output, "Write the report to this file instead of stdout");
        };
        auto add_format = [&] (CLI::App * sub, std::vector<std::string> allowed) {
            sub->add_option("--format", config.format, "Output format")->check(CLI::IsMember(allowed));
        };

        auto census_cmd = app.add_subcommand("census", "Transitive triples and directed triangles");
        census_cmd->add_option("--in", config.input, "Tournament file")->required();
        add_common(census_cmd);

        std::string score_text;
        std::optional<std::int64_t> triangles;
        auto enumerate_cmd = app.add_subcommand("enumerate", "Non-isomorphic tournaments of order n");
        enumerate_cmd->add_option("--n", config.n, "Order")->required()->check(CLI::Range(1, 8));
        enumerate_cmd->add_option("--score", score_text, "Keep only this score sequence, e.g. 4,4,4,3,2,2,2");
        enumerate_cmd->add_option("--triangles", triangles, "Keep only classes with this many directed triangles");
        enumerate_cmd->add_flag("--no-cache", config.no_cache, "Do not read or write the class cache");
        add_format(enumerate_cmd, { "json", "text" });
        add_common(enumerate_cmd);

        bool greedy = false;
        long budget = 0;
        auto solve_cmd = app.add_subcommand("solve", "Maximum TT_k packing");
        solve_cmd->add_option("--in", config.input, "Tournament file")->required();
        solve_cmd->add_option("--k", config.k, "Copy order")->check(CLI::Range(3, 64));
        auto budget_opt = solve_cmd->add_option("--budget-ms", budget, "Time budget in milliseconds")
            ->check(CLI::Range(0L, 1L << 40));
        solve_cmd->add_flag("--greedy", greedy, "Seeded greedy packing instead of the exact solver");
        solve_cmd->add_option("--seed", config.seed, "Seed for --greedy");
        add_format(solve_cmd, { "json", "text" });
        add_common(solve_cmd);

        int max_n = 8;
        std::string packing_path;
        auto verify_cmd = app.add_subcommand("verify", "Fail-closed checks");
        verify_cmd->require_subcommand(1);
        auto lemma_cmd = verify_cmd->add_subcommand("lemma22", "Packing of every 7-vertex class against its triangle count");
        lemma_cmd->add_flag("--no-cache", config.no_cache, "Do not read or write the class cache");
        add_common(lemma_cmd);
        auto conjecture_cmd = verify_cmd->add_subcommand("conjecture", "f(n) = ceil(n(n-1)/6 - n/3) for small n");
        conjecture_cmd->add_option("--max-n", max_n, "Largest order checked")->check(CLI::Range(3, 8));
        conjecture_cmd->add_flag("--no-cache", config.no_cache, "Do not read or write the class cache");
        add_common(conjecture_cmd);
        auto verify_design_cmd = verify_cmd->add_subcommand("design", "Pairwise balance of a design file");
        verify_design_cmd->add_option("--in", config.input, "Design file")->required();
        add_common(verify_design_cmd);
        auto verify_packing_cmd = verify_cmd->add_subcommand("packing", "Check a packing certificate");
        verify_packing_cmd->add_option("--in", config.input, "Tournament file")->required();
        verify_packing_cmd->add_option("--packing", packing_path, "JSON with k and copies")->required();
        add_common(verify_packing_cmd);

        auto fmin_cmd = app.add_subcommand("fmin", "Minimum packing number over all tournaments of order n");
        fmin_cmd->add_option("--n", config.n, "Order")->required()->check(CLI::Range(1, 8));
        fmin_cmd->add_option("--k", config.k, "Copy order")->check(CLI::Range(3, 8));
        fmin_cmd->add_flag("--no-cache", config.no_cache, "Do not read or write the class cache");
        add_common(fmin_cmd);

        std::string design_path;
        auto pipeline_cmd = app.add_subcommand("pipeline", "Random relabelling plus per-block exact packing");
        pipeline_cmd->add_option("--in", config.input, "Tournament file")->required();
        pipeline_cmd->add_option("--trials", config.trials, "Number of trials")->check(CLI::Range(1, 1000000));
        pipeline_cmd->add_option("--seed", config.seed, "Master seed");
        pipeline_cmd->add_option("--design", design_path, "K_7 decomposition file (default: lines of AG(2,7))");
        add_format(pipeline_cmd, { "json", "csv" });
        add_common(pipeline_cmd);

        std::string budget_text, values_text = "7,6,5", costs_text = "5,12";
        auto lp_cmd = app.add_subcommand("lp", "Exact three-event linear program");
        lp_cmd->add_option("--budget", budget_text, "Budget, e.g. 35/4 or 8.75")->required();
        lp_cmd->add_option("--values", values_text, "v1,v2,v3");
        lp_cmd->add_option("--costs", costs_text, "c2,c3");
        add_common(lp_cmd);

        bool turan = false, qr = false;
        int factor = 0;
        std::string filler_text = "transitive";
        auto construct_cmd = app.add_subcommand("construct", "Extremal constructions in tournament file format");
        construct_cmd->add_flag("--turan3", turan, "Cyclic 3-partite construction");
        construct_cmd->add_flag("--qr7", qr, "Quadratic residue tournament on 7 vertices");
        construct_cmd->add_option("--blowup", factor, "Blow up the quadratic residue tournament")->check(CLI::Range(1, 9));
        construct_cmd->add_option("--n", config.n, "Order for --turan3");
        construct_cmd->add_option("--filler", filler_text, "transitive or random");
        construct_cmd->add_option("--seed", config.seed, "Seed for the random filler");
        add_common(construct_cmd);

        bool fano = false, ag2 = false, all7 = false, sts9 = false;
        auto design_cmd = app.add_subcommand("design", "Emit a block design");
        design_cmd->add_flag("--fano", fano, "Fano plane");
        design_cmd->add_flag("--ag2", ag2, "Lines of AG(2,7)");
        design_cmd->add_flag("--all-sts7", all7, "All 30 labelled STS(7)");
        design_cmd->add_flag("--sts9", sts9, "Lines of AG(2,3)");
        add_common(design_cmd);

        bool improve = false;
        auto experiment_cmd = app.add_subcommand("experiment", "Random tournament experiments");
        experiment_cmd->require_subcommand(1);
        auto density_cmd = experiment_cmd->add_subcommand("density", "Greedy packing density");
        density_cmd->add_option("--n", config.n, "Order")->required()->check(CLI::Range(1, 500));
        density_cmd->add_option("--k", config.k, "Copy order")->check(CLI::Range(3, 4));
        density_cmd->add_option("--trials", config.trials, "Number of trials")->check(CLI::Range(1, 1000000));
        density_cmd->add_option("--seed", config.seed, "Master seed");
        density_cmd->add_flag("--improve", improve, "Add the one-for-two local search");
        add_format(density_cmd, { "json", "csv" });
        add_common(density_cmd);
        auto edge_cmd = experiment_cmd->add_subcommand("edge-stats", "Copies through each edge");
        edge_cmd->add_option("--n", config.n, "Order of a random tournament")->check(CLI::Range(1, 200));
        edge_cmd->add_option("--in", config.input, "Tournament file instead of a random one");
        edge_cmd->add_option("--k", config.k, "Copy order")->check(CLI::Range(3, 4));
        edge_cmd->add_option("--seed", config.seed, "Seed of the random tournament");
        add_format(edge_cmd, { "json", "csv" });
        add_common(edge_cmd);

        std::vector<std::string> reversed(args.rbegin(), args.rend());
        try {
            app.parse(reversed);
        }
        catch (const CLI::ParseError & e) {
            int code = app.exit(e, out, err);
            return code == 0 ? exit_codes::success : exit_codes::usage;
        }

        if (budget_opt->count() > 0)
            config.budget_ms = budget;

        Output o{ out, { } };
        int code = exit_codes::success;
        try {
            if (census_cmd->parsed())
                code = cmd_census(config, o);
            else if (enumerate_cmd->parsed())
                code = cmd_enumerate(config, score_text, triangles, o);
            else if (solve_cmd->parsed())
                code = cmd_solve(config, greedy, o);
            else if (lemma_cmd->parsed())
                code = cmd_verify_lemma22(config, o);
            else if (conjecture_cmd->parsed())
                code = cmd_verify_conjecture(config, max_n, o);
            else if (verify_design_cmd->parsed())
                code = cmd_verify_design(config, o);
            else if (verify_packing_cmd->parsed())
                code = cmd_verify_packing(config, packing_path, o);
            else if (fmin_cmd->parsed())
                code = cmd_fmin(config, o);
            else if (pipeline_cmd->parsed())
                code = cmd_pipeline(config, design_path, o);
            else if (lp_cmd->parsed())
                code = cmd_lp(config, budget_text, values_text, costs_text, o);
            else if (construct_cmd->parsed())
                code = cmd_construct(config, turan, qr, factor, filler_text, err, o);
            else if (design_cmd->parsed())
                code = cmd_design(fano, ag2, all7, sts9, o);
            else if (density_cmd->parsed())
                code = cmd_density(config, improve, o);
            else if (edge_cmd->parsed()) {
                if (config.input.empty() && config.n < 1)
                    throw UsageError("give --n or --in");
                code = cmd_edge_stats(config, o);
            }
        }
        catch (const ParseError & e) {
            err << "error: malformed tournament file: " << e.what() << "\n";
            return exit_codes::usage;
        }
        catch (const UsageError & e) {
            err << "error: " << e.what() << "\n" << app.help();
            return exit_codes::usage;
        }
        catch (const VerificationFailure & e) {
            err << "verification failed: " << e.what() << "\n";
            return exit_codes::verification_failed;
        }
        catch (const std::invalid_argument & e) {
            err << "error: " << e.what() << "\n";
            return exit_codes::usage;
        }
        catch (const std::out_of_range & e) {
            err << "error: " << e.what() << "\n";
            return exit_codes::usage;
        }
        catch (const std::runtime_error & e) {
            err << "error: " << e.what() << "\n";
            return exit_codes::usage;
        }

        if (config.output.empty())
            out << o.text;
        else {
            std::ofstream file(config.output, std::ios::binary);
            if (! file) {
                err << "error: cannot write " << config.output << "\n";
                return exit_codes::usage;
            }
            file << o.text;
        }
        return code;
    }
}
