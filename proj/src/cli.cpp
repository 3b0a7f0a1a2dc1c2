#include "vtot/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <functional>
#include <memory>
#include <ostream>
#include <stdexcept>

#include "vtot/arithmetic.hpp"
#include "vtot/attack.hpp"
#include "vtot/lemma_lab.hpp"
#include "vtot/totient.hpp"
#include "vtot/variant_group.hpp"

namespace vtot::cli {

namespace {

using json = nlohmann::ordered_json;

/// A user-facing input problem; maps to exit code 2.
class usage_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

json to_json(const totient_value& v)
{
    json j;
    j["kind"] = std::string(to_string(v.kind));
    if (v.is_exact()) {
        j["value"] = v.exact();
    } else {
        j["lower"] = v.lower;
        j["upper"] = v.upper;
    }
    j["parity"] = std::string(to_string(v.par));
    if (v.candidates)
        j["candidates"] = *v.candidates;
    j["rule"] = std::string(to_string(v.rule));
    return j;
}

json to_json(const verification_report& r)
{
    json j;
    j["range"] = {r.lo, r.hi};
    j["checked"] = r.checked;
    j["exact_matches"] = r.exact_matches;
    j["bound_hits"] = r.bound_hits;
    json v = json::array();
    for (const auto& x : r.violations)
        v.push_back({{"n", x.n}, {"claim", x.claim}, {"oracle_value", x.oracle_value}});
    j["violations"] = std::move(v);
    return j;
}

json to_json(const collision_report& r)
{
    json j;
    j["order"] = r.order;
    j["target"] = r.target;
    j["pair_count"] = r.pair_count;
    j["exponent_count"] = r.exponent_count;
    j["theoretical_lower_bound"] = r.theoretical_lower_bound;
    j["bound_satisfied"] = r.bound_satisfied;
    if (r.pairs) {
        json p = json::array();
        for (const auto& [y, f] : *r.pairs)
            p.push_back({y, f});
        j["pairs"] = std::move(p);
    }
    return j;
}

std::string csv_candidates(const totient_value& v)
{
    std::string out;
    if (v.candidates) {
        for (std::size_t i = 0; i < v.candidates->size(); ++i)
            out += (i ? ";" : "") + std::to_string((*v.candidates)[i]);
    }
    return out;
}

factorization positive_factorization(natural n)
{
    if (n == 0)
        throw usage_error("n must be positive");
    return factorize(n);
}

std::unique_ptr<finite_group> group_from(natural p, const std::string& spec)
{
    if (p != 0 && !spec.empty())
        throw usage_error("give either --p or --group, not both");
    if (!spec.empty())
        return parse_group(spec);
    if (p == 0)
        throw usage_error("one of --p or --group is required");
    return std::make_unique<units_mod_n>(p);
}

struct options {
    bool timing = false;

    // totient / table
    natural n = 0;
    natural lo = 0;
    natural hi = 0;
    std::string function = "T";
    natural r = 2;
    bool oracle = false;
    natural threshold = default_oracle_threshold;
    std::string format = "jsonl";

    // verify
    unsigned threads = 0;
    std::string group_spec;
    std::uint64_t seed = 0;

    // crypto / attack
    unsigned bits = 0;
    natural p = 0;
    element x = 0;
    natural e = 0;
    element g = 0;
    element c = 0;
    bool list = false;

    natural limit = 0;
};

}  // namespace

int exit_code_for(const verification_report& report)
{
    return report.ok() ? exit_ok : exit_verification_failed;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Totient T(n), variant-group cipher and collision experiments", "vtot"};
    app.require_subcommand(1);
    options o;
    app.add_flag("--timing", o.timing, "Add wall-clock timing_ms to JSON records");

    std::string command;
    json inputs;
    std::function<int(json&)> action;  // fills outputs; returns the exit code

    // totient
    auto* totient = app.add_subcommand("totient", "Evaluate phi, S_r, T or T_r at n");
    totient->add_option("n", o.n, "Argument")->required();
    totient->add_option("--function", o.function, "phi | schemmel | T | Tr")
        ->check(CLI::IsMember({"phi", "schemmel", "T", "Tr"}));
    totient->add_option("--r", o.r, "Run length for schemmel and Tr")->check(CLI::PositiveNumber);
    totient->add_flag("--oracle", o.oracle, "Resolve constrained T values by brute force");
    totient->add_option("--threshold", o.threshold, "Largest n resolved by --oracle");
    totient->callback([&] {
        command = "totient";
        inputs = {{"n", o.n}, {"function", o.function}};
        if (o.function == "schemmel" || o.function == "Tr")
            inputs["r"] = o.r;
        action = [&](json& outputs) {
            const factorization f = positive_factorization(o.n);
            if (o.function == "phi") {
                outputs["value"] = euler_phi(f);
            } else if (o.function == "schemmel") {
                outputs["value"] = schemmel(o.r, f);
            } else if (o.function == "Tr") {
                if (o.r < 2)
                    throw usage_error("--r must be at least 2 for Tr");
                outputs["value"] = totient_Tr_oracle(o.r, o.n);
            } else {
                totient_value v = totient_T_evaluate(f);
                if (o.oracle)
                    v = resolve_with_oracle(v, o.n, o.threshold);
                outputs = to_json(v);
            }
            return exit_ok;
        };
    });

    // table
    auto* table = app.add_subcommand("table", "Per-n rows over [lo, hi]");
    table->add_option("lo", o.lo)->required();
    table->add_option("hi", o.hi)->required();
    table->add_option("--function", o.function, "phi | schemmel | T | Tr")
        ->check(CLI::IsMember({"phi", "schemmel", "T", "Tr"}));
    table->add_option("--r", o.r)->check(CLI::PositiveNumber);
    table->add_option("--format", o.format, "jsonl | csv")->check(CLI::IsMember({"jsonl", "csv"}));
    table->add_flag("--oracle", o.oracle);
    table->add_option("--threshold", o.threshold);
    table->callback([&] {
        command = "table";
        action = [&](json&) {
            if (o.lo == 0 || o.lo > o.hi)
                throw usage_error("table needs 1 <= lo <= hi");
            if (o.function == "Tr" && o.r < 2)
                throw usage_error("--r must be at least 2 for Tr");
            const bool csv = o.format == "csv";
            const bool is_t = o.function == "T";
            if (csv)
                out << (is_t ? "n,kind,lower,upper,parity,candidates,rule\n" : "n,value\n");
            for (natural n = o.lo; n <= o.hi; ++n) {
                const factorization f = factorize(n);
                if (is_t) {
                    totient_value v = totient_T_evaluate(f);
                    if (o.oracle)
                        v = resolve_with_oracle(v, n, o.threshold);
                    if (csv) {
                        out << n << ',' << to_string(v.kind) << ',' << v.lower << ',' << v.upper << ','
                            << to_string(v.par) << ',' << csv_candidates(v) << ',' << to_string(v.rule) << '\n';
                    } else {
                        json row{{"n", n}};
                        row.update(to_json(v));
                        out << row.dump() << '\n';
                    }
                    continue;
                }
                natural value = 0;
                if (o.function == "phi")
                    value = euler_phi(f);
                else if (o.function == "schemmel")
                    value = schemmel(o.r, f);
                else
                    value = totient_Tr_oracle(o.r, n);
                if (csv)
                    out << n << ',' << value << '\n';
                else
                    out << json{{"n", n}, {"value", value}}.dump() << '\n';
            }
            return exit_ok;
        };
    });

    // verify
    auto* verify = app.add_subcommand("verify", "Check claims against brute force");
    verify->require_subcommand(1);
    auto* verify_range = verify->add_subcommand("range", "Evaluator vs oracle over [lo, hi]");
    verify_range->add_option("lo", o.lo)->required();
    verify_range->add_option("hi", o.hi)->required();
    verify_range->add_option("--threads", o.threads, "Worker threads (0 = all cores)");
    verify_range->callback([&] {
        command = "verify range";
        inputs = {{"lo", o.lo}, {"hi", o.hi}};
        action = [&](json& outputs) {
            if (o.lo == 0)
                throw usage_error("lo must be at least 1");
            const auto report = lab::verify_T_range(o.lo, o.hi, o.threads);
            outputs = to_json(report);
            return exit_code_for(report);
        };
    });
    auto* verify_lemmas = verify->add_subcommand("lemmas", "Residue-set lemmas for odd n");
    verify_lemmas->add_option("n", o.n)->required();
    verify_lemmas->callback([&] {
        command = "verify lemmas";
        inputs = {{"n", o.n}};
        action = [&](json& outputs) {
            const auto report = lab::check_set_lemmas(o.n);
            outputs = to_json(report);
            return exit_code_for(report);
        };
    });
    auto* verify_grp = verify->add_subcommand("group", "Group, variant and cipher laws");
    verify_grp->add_option("spec", o.group_spec, "units:<n> or additive:<n>")->required();
    verify_grp->add_option("--seed", o.seed)->required();
    verify_grp->callback([&] {
        command = "verify group";
        inputs = {{"spec", o.group_spec}, {"seed", o.seed}};
        action = [&](json& outputs) {
            const auto grp = parse_group(o.group_spec);
            const auto report = verify_group(*grp, o.seed);
            outputs = to_json(report);
            return exit_code_for(report);
        };
    });

    // crypto
    auto* crypto = app.add_subcommand("crypto", "Variant-group cipher over U_p");
    crypto->require_subcommand(1);
    auto* keygen_cmd = crypto->add_subcommand("keygen", "Safe prime and key (x, e)");
    keygen_cmd->add_option("--safe-prime-bits", o.bits)->required()->check(CLI::Range(4u, 62u));
    keygen_cmd->add_option("--seed", o.seed)->required();
    keygen_cmd->callback([&] {
        command = "crypto keygen";
        inputs = {{"safe_prime_bits", o.bits}, {"seed", o.seed}};
        action = [&](json& outputs) {
            const natural p = gen_safe_prime(o.bits, o.seed);
            const units_mod_n grp(p);
            const variant_key key = keygen(grp, o.seed);
            outputs = {{"p", p}, {"x", key.x}, {"e", key.e}};
            return exit_ok;
        };
    });
    auto* encrypt_cmd = crypto->add_subcommand("encrypt", "c = (g x)^(e-1) g mod p");
    auto* decrypt_cmd = crypto->add_subcommand("decrypt", "g = (c x)^(e') x^-1 mod p");
    for (auto* sub : {encrypt_cmd, decrypt_cmd}) {
        sub->add_option("--p", o.p, "Modulus")->required();
        sub->add_option("--x", o.x)->required();
        sub->add_option("--e", o.e)->required();
    }
    encrypt_cmd->add_option("--g", o.g, "Plaintext")->required();
    decrypt_cmd->add_option("--c,--g", o.c, "Ciphertext")->required();
    encrypt_cmd->callback([&] {
        command = "crypto encrypt";
        inputs = {{"p", o.p}, {"x", o.x}, {"e", o.e}, {"g", o.g}};
        action = [&](json& outputs) {
            const units_mod_n grp(o.p);
            if (o.e == 0 || gcd(o.e, grp.order()) != 1)
                throw usage_error("e must be a unit modulo " + std::to_string(grp.order()));
            grp.require(o.x);
            outputs = {{"c", encrypt(grp, {o.x, o.e}, o.g)}};
            return exit_ok;
        };
    });
    decrypt_cmd->callback([&] {
        command = "crypto decrypt";
        inputs = {{"p", o.p}, {"x", o.x}, {"e", o.e}, {"c", o.c}};
        action = [&](json& outputs) {
            const units_mod_n grp(o.p);
            grp.require(o.x);
            outputs = {{"g", decrypt(grp, {o.x, o.e}, o.c)}};
            return exit_ok;
        };
    });

    // attack
    auto* attack = app.add_subcommand("attack", "Exhaustive collision counting");
    attack->require_subcommand(1);
    auto* pairs_cmd = attack->add_subcommand("pairs", "Count (y, f) with (g y)^(f-1) = (g x)^(e-1)");
    auto* exps_cmd = attack->add_subcommand("exponents", "Count units f > 1 with w^(f-1) = c solvable");
    for (auto* sub : {pairs_cmd, exps_cmd}) {
        sub->add_option("--p", o.p, "Use U_p");
        sub->add_option("--group", o.group_spec, "units:<n> or additive:<n>");
    }
    pairs_cmd->add_option("--g", o.g)->required();
    pairs_cmd->add_option("--x", o.x)->required();
    pairs_cmd->add_option("--e", o.e)->required();
    pairs_cmd->add_flag("--list", o.list, "Include the matching pairs");
    exps_cmd->add_option("--c", o.c)->required();
    pairs_cmd->callback([&] {
        command = "attack pairs";
        action = [&](json& outputs) {
            const auto grp = group_from(o.p, o.group_spec);
            inputs = {{"group", grp->describe()}, {"g", o.g}, {"x", o.x}, {"e", o.e}};
            auto report = enumerate_collision_pairs(*grp, o.g, o.x, o.e);
            if (!o.list)
                report.pairs.reset();
            outputs = to_json(report);
            return exit_ok;
        };
    });
    exps_cmd->callback([&] {
        command = "attack exponents";
        action = [&](json& outputs) {
            const auto grp = group_from(o.p, o.group_spec);
            inputs = {{"group", grp->describe()}, {"c", o.c}};
            const auto counts = count_solvable_exponents(*grp, o.c);
            outputs = {{"exponent_count", counts.exponent_count}, {"pair_count", counts.pair_count}};
            return exit_ok;
        };
    });

    // survey
    auto* survey = app.add_subcommand("survey", "CSV data for open questions");
    survey->require_subcommand(1);
    auto* parity_cmd = survey->add_subcommand("parity", "Minimal a p - b q = 1 and the parity of a");
    auto* corollary_cmd = survey->add_subcommand("corollary", "Which branch T(p^e q^f) takes");
    for (auto* sub : {parity_cmd, corollary_cmd})
        sub->add_option("--limit", o.limit)->required();
    parity_cmd->callback([&] {
        command = "survey parity";
        action = [&](json&) {
            lab::write_csv(out, lab::parity_survey(o.limit));
            return exit_ok;
        };
    });
    corollary_cmd->callback([&] {
        command = "survey corollary";
        action = [&](json&) {
            lab::write_csv(out, lab::corollary_survey(o.limit));
            return exit_ok;
        };
    });

    std::vector<const char*> argv;
    argv.reserve(args.size());
    for (const auto& a : args)
        argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return exit_ok;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return exit_ok;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n\n" << app.help();
        return exit_usage;
    }

    const bool streams = command == "table" || command.rfind("survey", 0) == 0;
    try {
        const auto start = std::chrono::steady_clock::now();
        json outputs = json::object();
        const int code = action(outputs);
        if (!streams) {
            json record;
            record["command"] = command;
            record["inputs"] = inputs;
            record["outputs"] = outputs;
            if (o.timing) {
                const std::chrono::duration<double, std::milli> ms = std::chrono::steady_clock::now() - start;
                record["timing_ms"] = ms.count();
            }
            out << record.dump() << '\n';
        }
        return code;
    } catch (const usage_error& e) {
        err << "error: " << e.what() << '\n';
        return exit_usage;
    } catch (const std::domain_error& e) {
        err << "error: " << e.what() << '\n';
        return exit_usage;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return exit_usage;
    } catch (const enumeration_refused& e) {
        err << "error: " << e.what() << '\n';
        return exit_usage;
    } catch (const std::exception& e) {
        err << "failure: " << e.what() << '\n';
        return exit_verification_failed;
    }
}

}  // namespace vtot::cli
