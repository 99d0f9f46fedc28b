#pragma once

#include "isofdp/pipeline.hpp"

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace isofdp {

enum class Suite { Gn, Lfr };

Suite parse_suite(const std::string& tag);

/// Parses `a..b` (step = one unit in the last decimal place written, e.g.
/// 1..8 or 0.1..0.8), `a..b:step`, a comma list, or a single value.
std::vector<double> parse_range(const std::string& text);

struct BenchmarkOptions {
    Suite suite = Suite::Gn;
    std::vector<double> params;        // Z_out values (gn) or mu values (lfr)
    std::size_t trials = 10;
    std::uint64_t seed = 0;
    PipelineConfig pipeline;
    std::vector<double> dc_sweep;      // empty: pipeline.dc_percentile only
    bool kmeans = false;
    bool dbscan = false;
    std::size_t lfr_n = 1000;
    std::size_t workers = 1;           // concurrent trials
};

struct BenchmarkRow {
    double param = 0;
    std::size_t trial = 0;
    std::uint64_t seed = 0;
    std::string method;
    double dc_percentile = 0;
    double nmi = 0;
    double acc = 0;
    std::size_t k_true = 0;
    std::size_t k_detected = 0;
};

/// Instance seed for (param, trial): derive_seed(derive_seed(master, round(1000 param)), trial).
std::uint64_t instance_seed(std::uint64_t master, double param, std::size_t trial);

/// Rows in (param, trial, method, dc) order regardless of worker count.
std::vector<BenchmarkRow> run_benchmark(const BenchmarkOptions& options);

void write_benchmark_csv(std::ostream& out, const std::vector<BenchmarkRow>& rows);

/// Per (param, method, dc): mean NMI, mean ACC, mean k_detected, trial count.
void write_benchmark_summary(std::ostream& out, const std::vector<BenchmarkRow>& rows);

}  // namespace isofdp
