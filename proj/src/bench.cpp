#include "conehull/bench.hpp"

#include <chrono>
#include <cstdio>

#include "conehull/random_system.hpp"
#include "conehull/solver.hpp"
#include "conehull/verify.hpp"

namespace conehull {

std::vector<BenchRow> parse_bench_rows(std::string_view text)
{
    std::vector<BenchRow> rows;
    std::size_t pos = 0;
    while (pos < text.size())
    {
        while (pos < text.size() && (text[pos] == ';' || text[pos] == ' ' || text[pos] == '\n' || text[pos] == '\t'))
            ++pos;
        if (pos >= text.size())
            break;
        std::size_t end = pos;
        while (end < text.size() && text[end] != ';' && text[end] != ' ' && text[end] != '\n' && text[end] != '\t')
            ++end;
        const std::string item(text.substr(pos, end - pos));
        BenchRow row;
        char tail = 0;
        if (std::sscanf(item.c_str(), "%zu,%zu,%zu%c", &row.n, &row.m, &row.r, &tail) != 3)
            throw PreconditionError("bench row must be 'n,m,r', got '" + item + "'");
        rows.push_back(row);
        pos = end;
    }
    return rows;
}

InequalitySystem bench_system(const BenchSpec& spec, std::size_t index)
{
    const BenchRow& row = spec.rows.at(index);
    return random_system(row.n, row.m, row.r, spec.coefficient_bound, mix_seed(spec.seed, index));
}

std::vector<BenchResult> bench(const BenchSpec& spec)
{
    using clock = std::chrono::steady_clock;
    std::vector<BenchResult> results;
    for (std::size_t i = 0; i < spec.rows.size(); ++i)
    {
        BenchResult result;
        result.params = spec.rows[i];
        const InequalitySystem system = bench_system(spec, i);

        StepOptions options;
        options.adjacency = spec.adjacency;
        options.deadline = clock::now() + std::chrono::duration_cast<clock::duration>(
                                              std::chrono::duration<double>(spec.timeout_seconds));
        try
        {
            auto start = clock::now();
            const auto direct = conehull(system, true, options);
            result.t1 = std::chrono::duration<double>(clock::now() - start).count();

            start = clock::now();
            const auto reduced = conehull(system, false, options);
            result.t2 = std::chrono::duration<double>(clock::now() - start).count();

            result.lineality = reduced.lineality.size();
            result.rays = reduced.rays.size();
            if (!cones_equal(direct, reduced, system))
                result.status = BenchStatus::mismatch;
        }
        catch (const TimeoutError&)
        {
            result.status = BenchStatus::timeout;
        }
        results.push_back(result);
    }
    return results;
}

std::string status_name(BenchStatus status)
{
    switch (status)
    {
    case BenchStatus::ok:
        return "ok";
    case BenchStatus::timeout:
        return "timeout";
    case BenchStatus::mismatch:
        return "MISMATCH";
    }
    return "?";
}

namespace {

std::string seconds(const std::optional<double>& t)
{
    if (!t)
        return "-";
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3f", *t);
    return buf;
}

}  // namespace

std::string format_bench_table(const std::vector<BenchResult>& results)
{
    std::string out;
    char buf[160];
    std::snprintf(buf, sizeof buf, "%4s %4s %4s %10s %10s %6s %8s  %s\n", "n", "m", "r", "t1", "t2", "|U|", "|V|",
                  "status");
    out += buf;
    for (const auto& res : results)
    {
        std::snprintf(buf, sizeof buf, "%4zu %4zu %4zu %10s %10s %6zu %8zu  %s\n", res.params.n, res.params.m,
                      res.params.r, seconds(res.t1).c_str(), seconds(res.t2).c_str(), res.lineality, res.rays,
                      status_name(res.status).c_str());
        out += buf;
    }
    return out;
}

std::string format_bench_csv(const std::vector<BenchResult>& results)
{
    std::string out = "n,m,r,t1,t2,U,V,status\n";
    for (const auto& res : results)
    {
        out += std::to_string(res.params.n) + "," + std::to_string(res.params.m) + "," + std::to_string(res.params.r) +
               "," + seconds(res.t1) + "," + seconds(res.t2) + "," + std::to_string(res.lineality) + "," +
               std::to_string(res.rays) + "," + status_name(res.status) + "\n";
    }
    return out;
}

}  // namespace conehull
