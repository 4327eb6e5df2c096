#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "conehull/mb_core.hpp"

namespace conehull {

struct BenchRow
{
    std::size_t n = 0;
    std::size_t m = 0;
    std::size_t r = 0;

    friend bool operator==(const BenchRow&, const BenchRow&) = default;
};

struct BenchSpec
{
    std::vector<BenchRow> rows;
    std::int64_t coefficient_bound = 9;
    std::uint64_t seed = 1;
    double timeout_seconds = 300.0;
    Adjacency adjacency = Adjacency::combinatorial;
};

enum class BenchStatus
{
    ok,
    timeout,
    mismatch,
};

struct BenchResult
{
    BenchRow params;
    std::optional<double> t1;  ///< seconds, direct iteration
    std::optional<double> t2;  ///< seconds, with change of variables
    std::size_t lineality = 0;
    std::size_t rays = 0;
    BenchStatus status = BenchStatus::ok;
};

/// "n,m,r;n,m,r;..." (whitespace also separates rows).
std::vector<BenchRow> parse_bench_rows(std::string_view text);

/// The random system used for row `index` of a run seeded with `seed`.
InequalitySystem bench_system(const BenchSpec& spec, std::size_t index);

/**
 * Times conehull with and without the change of variables on one seeded
 * random system per row and cross-checks the two cones. A row that runs past
 * `timeout_seconds` is reported as timed out; later rows still run.
 */
std::vector<BenchResult> bench(const BenchSpec& spec);

std::string status_name(BenchStatus status);
std::string format_bench_table(const std::vector<BenchResult>& results);
std::string format_bench_csv(const std::vector<BenchResult>& results);

}  // namespace conehull
