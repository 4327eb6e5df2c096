// Command-line front end: solve, check, oracle, gen, bench.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "conehull/bench.hpp"
#include "conehull/io.hpp"
#include "conehull/random_system.hpp"
#include "conehull/solver.hpp"
#include "conehull/verify.hpp"

namespace {

constexpr int kUsageError = 1;
constexpr int kParseError = 2;
constexpr int kInvariantError = 3;

class UsageError : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw UsageError("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void emit(const std::string& text, const std::string& out_path)
{
    if (out_path.empty())
    {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out)
        throw UsageError("cannot write '" + out_path + "'");
    out << text;
}

conehull::Adjacency adjacency_from(const std::string& name)
{
    if (name == "combinatorial")
        return conehull::Adjacency::combinatorial;
    if (name == "rank")
        return conehull::Adjacency::rank;
    throw UsageError("unknown adjacency test '" + name + "'");
}

// Cheap self-check of every solve: generators satisfy the system and the
// lineality space has dimension n - rank.
void verify_output(const conehull::InequalitySystem& system, const conehull::ConeDescription& cone)
{
    using namespace conehull;
    std::vector<QVector> all = cone.lineality;
    all.insert(all.end(), cone.rays.begin(), cone.rays.end());
    for (const auto& u : cone.lineality)
        all.push_back(negated(u));
    if (!check_solutions(system, all).all_valid())
        throw InvariantError("solver emitted an infeasible generator");
    if (cone.lineality.size() != system.dimension() - rank(system.forms()))
        throw InvariantError("lineality dimension differs from n - rank");
}

std::string format_vector(const conehull::QVector& v)
{
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i)
    {
        if (i)
            out += ' ';
        out += conehull::format_rational(v[i]);
    }
    return out;
}

}  // namespace

int main(int argc, char** argv)
{
    using namespace conehull;

    CLI::App app{"Generators of the solution cone of a homogeneous system l_j(x) <= 0"};
    app.require_subcommand(1);

    std::string adjacency_name = "combinatorial";

    auto* solve_cmd = app.add_subcommand("solve", "Compute U (lineality basis) and V (extreme rays)");
    std::string solve_file, solve_out;
    bool as_is = false;
    solve_cmd->add_option("file", solve_file, "System file")->required();
    solve_cmd->add_flag("--as-is", as_is, "Skip the change of variables; run the direct iteration");
    solve_cmd->add_option("--out", solve_out, "Write the cone here instead of stdout");
    solve_cmd->add_option("--adjacency", adjacency_name, "combinatorial (default) or rank");

    auto* check_cmd = app.add_subcommand("check", "Split candidate vectors into solutions and violators");
    std::string check_system, check_candidates;
    check_cmd->add_option("system", check_system, "System file")->required();
    check_cmd->add_option("candidates", check_candidates, "Candidates, same format as a system file")->required();

    auto* oracle_cmd = app.add_subcommand("oracle", "Brute-force generator enumeration for small systems");
    std::string oracle_file;
    OracleLimits limits;
    oracle_cmd->add_option("file", oracle_file, "System file")->required();
    oracle_cmd->add_option("--max-n", limits.max_dimension, "Largest dimension accepted");
    oracle_cmd->add_option("--max-m", limits.max_forms, "Largest number of forms accepted");

    auto* gen_cmd = app.add_subcommand(
        "gen",
        "Random system of rank r: r independent rows with entries in [-c, c], the other m - r rows\n"
        "integer combinations of them with multipliers in [-c, c], rows shuffled");
    std::size_t gen_n = 0, gen_m = 0, gen_r = 0;
    std::int64_t gen_c = 9;
    std::uint64_t gen_seed = 1;
    std::string gen_out;
    gen_cmd->add_option("--n", gen_n, "Dimension")->required();
    gen_cmd->add_option("--m", gen_m, "Number of forms")->required();
    gen_cmd->add_option("--r", gen_r, "Rank")->required();
    gen_cmd->add_option("--seed", gen_seed, "Seed")->required();
    gen_cmd->add_option("--coeff-bound", gen_c, "Coefficient bound c");
    gen_cmd->add_option("--out", gen_out, "Write the system here instead of stdout");

    auto* bench_cmd = app.add_subcommand(
        "bench", "Time the direct (t1) and preprocessed (t2) paths on seeded random systems (see gen)");
    BenchSpec spec;
    std::string bench_rows;
    bool csv = false;
    std::string bench_out;
    bench_cmd->add_option("--spec", bench_rows, "Rows 'n,m,r;n,m,r;...'")->required();
    bench_cmd->add_option("--seed", spec.seed, "Seed")->required();
    bench_cmd->add_option("--coeff-bound", spec.coefficient_bound, "Coefficient bound c");
    bench_cmd->add_option("--timeout", spec.timeout_seconds, "Per-row timeout in seconds");
    bench_cmd->add_option("--adjacency", adjacency_name, "combinatorial (default) or rank");
    bench_cmd->add_flag("--csv", csv, "CSV instead of an aligned table");
    bench_cmd->add_option("--out", bench_out, "Write the report here instead of stdout");

    try
    {
        app.parse(argc, argv);
    }
    catch (const CLI::ParseError& e)
    {
        const int code = app.exit(e);
        return code == 0 ? 0 : kUsageError;
    }

    try
    {
        if (*solve_cmd)
        {
            const auto system = parse_system(read_file(solve_file));
            StepOptions options;
            options.adjacency = adjacency_from(adjacency_name);
            const auto cone = conehull::conehull(system, as_is, options);
            verify_output(system, cone);
            emit(write_cone(cone), solve_out);
        }
        else if (*check_cmd)
        {
            const auto system = parse_system(read_file(check_system));
            const auto candidates = parse_system(read_file(check_candidates));
            if (candidates.dimension() != system.dimension())
                throw ParseError(1, "candidate dimension differs from the system");
            const auto rows = candidates.rows();
            const auto report = check_solutions(system, rows);
            std::string out = "valid " + std::to_string(report.valid.size()) + "\n";
            for (const auto& v : report.valid)
                out += format_vector(v) + "\n";
            out += "invalid " + std::to_string(report.invalid.size()) + "\n";
            for (const auto& bad : report.invalid)
                out += format_vector(bad.vector) + " : form " + std::to_string(bad.form) + "\n";
            std::cout << out;
        }
        else if (*oracle_cmd)
        {
            const auto system = parse_system(read_file(oracle_file));
            std::cout << write_cone(oracle_enumerate(system, limits));
        }
        else if (*gen_cmd)
        {
            emit(write_system(random_system(gen_n, gen_m, gen_r, gen_c, gen_seed)), gen_out);
        }
        else if (*bench_cmd)
        {
            spec.rows = parse_bench_rows(bench_rows);
            spec.adjacency = adjacency_from(adjacency_name);
            const auto results = bench(spec);
            emit(csv ? format_bench_csv(results) : format_bench_table(results), bench_out);
            for (const auto& r : results)
            {
                if (r.status == BenchStatus::mismatch)
                    throw InvariantError("direct and preprocessed cones differ");
            }
        }
    }
    catch (const ParseError& e)
    {
        std::cerr << "parse error: " << e.what() << "\n";
        return kParseError;
    }
    catch (const InvariantError& e)
    {
        std::cerr << "internal error: " << e.what() << "\n";
        return kInvariantError;
    }
    catch (const UsageError& e)
    {
        std::cerr << "error: " << e.what() << "\n";
        return kUsageError;
    }
    catch (const PreconditionError& e)
    {
        std::cerr << "error: " << e.what() << "\n";
        return kUsageError;
    }
    catch (const std::exception& e)
    {
        std::cerr << "internal error: " << e.what() << "\n";
        return kInvariantError;
    }
    return 0;
}
